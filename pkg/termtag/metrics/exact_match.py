from termtag.config import Config
from termtag.errors import MetricError
from termtag.metrics.terms import locate_terms


def count_exact_matches(hypothesis, constraints, casing=Config.CASING):
    """(matched, instances) for one hypothesis"""
    located = locate_terms(hypothesis, constraints, casing)
    return sum(start is not None for start in located), len(located)


def exact_match_accuracy(hypotheses, constraints, casing=Config.CASING):
    """Fraction of constraint instances whose target appears in the hypothesis"""
    if len(hypotheses) != len(constraints):
        raise MetricError(f'line count mismatch {len(hypotheses)} vs {len(constraints)}')
    matched = 0
    instances = 0
    for hypothesis, spans in zip(hypotheses, constraints):
        found, total = count_exact_matches(hypothesis, spans, casing)
        matched += found
        instances += total
    if not instances:
        raise MetricError('no constraints to score')
    return matched / instances
