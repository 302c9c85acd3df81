"""Window overlap: agreement of the tokens around each constraint term.

For a term found at ``[s, e)`` the window is up to ``n`` tokens on the left
and ``n`` on the right, truncated at the sentence boundaries. The score of an
instance is the multiset intersection of the hypothesis and reference windows
divided by the larger window.
"""
import logging
from collections import Counter

from termtag.config import Config
from termtag.errors import MetricError
from termtag.matching import fold_tokens
from termtag.metrics.terms import locate_terms

logger = logging.getLogger(__name__)


def _window(tokens, start, end, n):
    return tokens[max(0, start - n):start] + tokens[end:end + n]


def window_overlap_scores(hypothesis, reference, constraints, n, casing=Config.CASING):
    """Per-instance scores; instances missing from the reference are skipped"""
    if n < 1:
        raise MetricError(f'window size must be at least 1, got {n}')
    hyp = fold_tokens(hypothesis, casing)
    ref = fold_tokens(reference, casing)
    in_hyp = locate_terms(hypothesis, constraints, casing)
    in_ref = locate_terms(reference, constraints, casing)

    scores = []
    for span, hyp_start, ref_start in zip(constraints, in_hyp, in_ref):
        if ref_start is None:
            logger.debug('window overlap skipped term=%s reason=not-in-reference',
                         ' '.join(span.chosen_target))
            continue
        if hyp_start is None:
            scores.append(0.0)
            continue
        width = len(span.chosen_target)
        ref_window = _window(ref, ref_start, ref_start + width, n)
        hyp_window = _window(hyp, hyp_start, hyp_start + width, n)
        attainable = max(len(ref_window), len(hyp_window))
        if not attainable:
            scores.append(1.0)
            continue
        shared = Counter(ref_window) & Counter(hyp_window)
        scores.append(sum(shared.values()) / attainable)
    return scores


def window_overlap(hypothesis, reference, constraints, n, casing=Config.CASING):
    """Mean window overlap over the scorable instances of one sentence"""
    scores = window_overlap_scores(hypothesis, reference, constraints, n, casing)
    if not scores:
        raise MetricError('no constraints to score')
    return sum(scores) / len(scores)


def corpus_window_overlap(hypotheses, references, constraints, n, casing=Config.CASING):
    """Mean over every scorable instance of the corpus"""
    if not len(hypotheses) == len(references) == len(constraints):
        raise MetricError(f'line count mismatch {len(hypotheses)} vs {len(references)}')
    scores = []
    for hypothesis, reference, spans in zip(hypotheses, references, constraints):
        scores.extend(window_overlap_scores(hypothesis, reference, spans, n, casing))
    if not scores:
        raise MetricError('no constraints to score')
    return sum(scores) / len(scores)
