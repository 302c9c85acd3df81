"""Corpus BLEU over pre-tokenized sentences.

Modified n-gram precisions for n = 1..4 come from sacrebleu's n-gram
extraction. A zero precision at n >= 2 is smoothed by adding one to both the
clipped matches and the total; unigram precision is never smoothed.
"""
import math

from sacrebleu.metrics.helpers import extract_all_word_ngrams

from termtag.errors import MetricError

MAX_ORDER = 4


def bleu_statistics(hypothesis, reference, max_order=MAX_ORDER):
    """Clipped matches and totals per order, plus both lengths"""
    hyp_ngrams, hyp_len = extract_all_word_ngrams(' '.join(hypothesis), 1, max_order)
    ref_ngrams, ref_len = extract_all_word_ngrams(' '.join(reference), 1, max_order)
    correct = [0] * max_order
    total = [0] * max_order
    for ngram, count in hyp_ngrams.items():
        total[len(ngram) - 1] += count
    for ngram, count in (hyp_ngrams & ref_ngrams).items():
        correct[len(ngram) - 1] += count
    return correct, total, hyp_len, ref_len


def bleu(hypotheses, references, max_order=MAX_ORDER):
    """Corpus-level BLEU as a fraction in [0, 1]"""
    if len(hypotheses) != len(references):
        raise MetricError(f'line count mismatch {len(hypotheses)} vs {len(references)}')
    correct = [0] * max_order
    total = [0] * max_order
    sys_len = 0
    ref_len = 0
    for hypothesis, reference in zip(hypotheses, references):
        if not reference:
            raise MetricError('empty reference')
        sentence_correct, sentence_total, hyp_length, ref_length = \
            bleu_statistics(hypothesis, reference, max_order)
        for order in range(max_order):
            correct[order] += sentence_correct[order]
            total[order] += sentence_total[order]
        sys_len += hyp_length
        ref_len += ref_length
    return compute_bleu(correct, total, sys_len, ref_len)


def compute_bleu(correct, total, sys_len, ref_len):
    if not sys_len or not correct[0]:
        return 0.0
    log_precision = 0.0
    for order, (matches, count) in enumerate(zip(correct, total)):
        if order and not matches:
            matches, count = matches + 1, count + 1
        log_precision += math.log(matches / count)
    brevity = math.exp(min(0.0, 1.0 - ref_len / sys_len))
    score = brevity * math.exp(log_precision / len(correct))
    return min(1.0, max(0.0, score))
