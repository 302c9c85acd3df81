"""Locating constraint target terms inside hypotheses and references."""
from collections import Counter

from termtag.matching import CasingPolicy, fold_tokens, greedy_occurrences


def target_key(span, casing):
    return tuple(fold_tokens(span.chosen_target, casing))


def locate_terms(tokens, constraints, casing=CasingPolicy.CASE_INSENSITIVE):
    """Start index of each constraint's target in tokens, or None when it is missing.

    Instances of the same target consume distinct non-overlapping occurrences,
    taken greedily left to right, in constraint order.
    """
    folded = fold_tokens(tokens, casing)
    occurrences = {}
    used = Counter()
    located = []
    for span in constraints:
        key = target_key(span, casing)
        if key not in occurrences:
            occurrences[key] = greedy_occurrences(folded, key)
        rank = used[key]
        used[key] += 1
        starts = occurrences[key]
        located.append(starts[rank] if rank < len(starts) else None)
    return located


def term_spans(tokens, constraints, casing=CasingPolicy.CASE_INSENSITIVE):
    """(start, end) of every constraint target found in tokens"""
    return [(start, start + len(span.chosen_target))
            for span, start in zip(constraints, locate_terms(tokens, constraints, casing))
            if start is not None]
