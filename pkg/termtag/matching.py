"""Multi-pattern matching of terminology source terms over token sequences.

The matcher is an Aho-Corasick automaton whose alphabet is whole tokens, so
``vaccin`` never matches inside ``vaccins``. It is built once and then only
read, which makes it safe to share across worker processes.

Matches are resolved leftmost-longest: scanning left to right, the longest
term starting at the current position wins and scanning resumes after it.
"""
import logging
import random
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from termtag.config import Config
from termtag.errors import MatcherError
from termtag.models.record import ConstraintSpan
from termtag.models.terminology import TermEntry

logger = logging.getLogger(__name__)


class CasingPolicy(str, Enum):
    EXACT = 'exact'
    CASE_INSENSITIVE = 'insensitive'


class PolicyKind(str, Enum):
    TRAIN_REFERENCE_MATCH = 'train'
    TEST_RANDOM = 'test'


@dataclass(frozen=True)
class ResolutionPolicy:
    kind: PolicyKind = PolicyKind.TRAIN_REFERENCE_MATCH
    seed: int = Config.SEED

    def __post_init__(self):
        object.__setattr__(self, 'kind', PolicyKind(self.kind))

    def rng_for(self, sentence_id):
        """Generator for one sentence; independent of batching and worker count"""
        return random.Random(f'{self.seed}:{sentence_id}')


class RawSpan(NamedTuple):
    start: int
    end: int
    source_term: tuple
    entry: TermEntry


def fold_tokens(tokens, casing):
    if CasingPolicy(casing) is CasingPolicy.CASE_INSENSITIVE:
        return [token.casefold() for token in tokens]
    return list(tokens)


class Matcher:
    """Token-level Aho-Corasick automaton over terminology source terms"""

    def __init__(self, entries, casing=CasingPolicy.CASE_INSENSITIVE):
        self.casing = CasingPolicy(casing)
        self._casefold = self.casing is CasingPolicy.CASE_INSENSITIVE
        self._entries = {}
        for entry in entries:
            key = tuple(fold_tokens(entry.source_term, self.casing))
            known = self._entries.get(key)
            if known is None:
                self._entries[key] = entry
            else:
                merged = list(known.target_variants)
                merged += [v for v in entry.target_variants if v not in merged]
                self._entries[key] = TermEntry(known.source_term, merged)
        if not self._entries:
            raise MatcherError('empty terminology')

        # node 0 is the root; goto edges, failure links and output lengths per node
        self._goto = [{}]
        self._fail = [0]
        self._out = [()]
        for key in self._entries:
            self._insert(key)
        self._link()

    def _insert(self, key):
        node = 0
        for token in key:
            child = self._goto[node].get(token)
            if child is None:
                child = len(self._goto)
                self._goto.append({})
                self._fail.append(0)
                self._out.append(())
                self._goto[node][token] = child
            node = child
        self._out[node] = (len(key),)

    def _link(self):
        goto, fail, out = self._goto, self._fail, self._out
        queue = deque(goto[0].values())
        while queue:
            node = queue.popleft()
            for token, child in goto[node].items():
                queue.append(child)
                target = fail[node]
                while target and token not in goto[target]:
                    target = fail[target]
                fail[child] = goto[target].get(token, 0)
                out[child] = out[child] + out[fail[child]]

    def __len__(self):
        return len(self._entries)

    @property
    def terms(self):
        """The (folded) source terms the automaton recognizes"""
        return frozenset(self._entries)

    def entry_for(self, tokens):
        return self._entries.get(tuple(fold_tokens(tokens, self.casing)))

    def recognizes(self, tokens):
        return self.entry_for(tokens) is not None

    def _symbols(self, tokens):
        if self._casefold:
            return [token.casefold() for token in tokens]
        return tokens

    def scan(self, tokens):
        """Yield (end_index, pattern_lengths) for every position where a term ends"""
        goto, fail, out = self._goto, self._fail, self._out
        node = 0
        for index, symbol in enumerate(self._symbols(tokens)):
            while node and symbol not in goto[node]:
                node = fail[node]
            node = goto[node].get(symbol, 0)
            if out[node]:
                yield index, out[node]

    def has_match(self, tokens):
        for _ in self.scan(tokens):
            return True
        return False


def build_matcher(terminology, casing=CasingPolicy.CASE_INSENSITIVE):
    """Build the automaton for every source term in a terminology"""
    if terminology is None or not len(terminology):
        raise MatcherError('empty terminology')
    matcher = Matcher(terminology.entries, casing)
    logger.debug('matcher built terms=%d casing=%s', len(matcher), matcher.casing.value)
    return matcher


def find_spans(tokens, matcher):
    """Leftmost-longest non-overlapping term occurrences, sorted by start"""
    longest = {}
    for end_index, lengths in matcher.scan(tokens):
        for length in lengths:
            start = end_index - length + 1
            if length > longest.get(start, 0):
                longest[start] = length
    if not longest:
        return []

    spans = []
    position = 0
    for start in sorted(longest):
        if start < position:
            continue
        end = start + longest[start]
        entry = matcher.entry_for(tokens[start:end])
        spans.append(RawSpan(start, end, entry.source_term, entry))
        position = end
    return spans


def find_occurrences(tokens, pattern):
    """Start indices of every occurrence of pattern in tokens (overlaps allowed)"""
    width = len(pattern)
    if not width:
        return []
    first = pattern[0]
    pattern = tuple(pattern)
    return [index for index in range(len(tokens) - width + 1)
            if tokens[index] == first and tuple(tokens[index:index + width]) == pattern]


def greedy_occurrences(tokens, pattern):
    """Non-overlapping occurrences taken greedily left to right"""
    starts = []
    position = 0
    for start in find_occurrences(tokens, pattern):
        if start >= position:
            starts.append(start)
            position = start + len(pattern)
    return starts


def resolve_targets(raw_spans, tokens, reference, policy,
                    casing=CasingPolicy.CASE_INSENSITIVE, rng=None):
    """Pick a target variant for every raw span according to the policy"""
    policy_kind = policy.kind
    if policy_kind is PolicyKind.TRAIN_REFERENCE_MATCH:
        if reference is None:
            raise MatcherError('reference-match resolution requires a reference')
        folded_reference = fold_tokens(reference, casing)
    elif rng is None:
        rng = random.Random(policy.seed)

    resolved = []
    for span in raw_spans:
        variants = span.entry.target_variants
        if policy_kind is PolicyKind.TRAIN_REFERENCE_MATCH:
            chosen = next((variant for variant in variants
                           if find_occurrences(folded_reference, fold_tokens(variant, casing))),
                          None)
            if chosen is None:
                continue
        else:
            chosen = variants[rng.randrange(len(variants))]
        resolved.append(ConstraintSpan(span.start, span.end, tokens[span.start:span.end], chosen))
    return resolved
