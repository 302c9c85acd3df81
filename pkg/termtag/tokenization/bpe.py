"""Byte-pair encoding: learning, applying and undoing merges.

Words are split into characters and the most frequent adjacent symbol pair
is merged greedily, one merge per round. Ties go to the lexicographically
smallest pair. Segmented words mark every subword but the last with ``@@``.
Reserved symbols (the annotation tags and the mask token) are never split
and never counted.
"""
import heapq
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field

from termtag.errors import BPEError
from termtag.log import kv

logger = logging.getLogger(__name__)

CONTINUATION = '@@'
VERSION_HEADER = '#version: 0.2'
RESERVED_HEADER = '#reserved:'
END_OF_WORD_HEADER = '#end-of-word:'
DEFAULT_RESERVED = ('<S>', '<C>', '</C>', 'MASK')
SEGMENT_CACHE_SIZE = 200_000


@dataclass(frozen=True)
class MergeTable:
    merges: tuple
    end_of_word_marker: str = ''
    reserved: tuple = DEFAULT_RESERVED
    _ranks: dict = field(init=False, repr=False, compare=False)
    _cache: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        merges = tuple(tuple(pair) for pair in self.merges)
        object.__setattr__(self, 'merges', merges)
        object.__setattr__(self, 'reserved', tuple(self.reserved))
        reserved = self.reserved_set
        for rank, pair in enumerate(merges):
            if len(pair) != 2 or not all(pair):
                raise BPEError(f'malformed merge at rank {rank}: {pair!r}')
            if _touches_reserved(pair, reserved):
                raise BPEError(f'merge {pair[0]} {pair[1]} involves a reserved symbol')
        ranks = {}
        for rank, pair in enumerate(merges):
            ranks.setdefault(pair, rank)
        object.__setattr__(self, '_ranks', ranks)
        object.__setattr__(self, '_cache', {})

    @property
    def reserved_set(self):
        return frozenset(self.reserved)

    def __len__(self):
        return len(self.merges)

    def segment(self, word):
        """Segment one word into subword symbols (no continuation markers)"""
        cached = self._cache.get(word)
        if cached is None:
            cached = self._segment(word)
            if len(self._cache) >= SEGMENT_CACHE_SIZE:
                self._cache.clear()
            self._cache[word] = cached
        return cached

    def _segment(self, word):
        symbols = _word_symbols(word, self.end_of_word_marker)
        ranks = self._ranks
        while len(symbols) > 1:
            best = min(
                ((ranks[pair], index) for index, pair in enumerate(zip(symbols, symbols[1:]))
                 if pair in ranks),
                default=None,
            )
            if best is None:
                break
            pair = symbols[best[1]], symbols[best[1] + 1]
            symbols = _merge_symbols(symbols, pair)
        marker = self.end_of_word_marker
        if marker:
            last = symbols[-1][:-len(marker)]
            symbols = symbols[:-1] + ([last] if last else [])
        return tuple(symbols)


def _touches_reserved(pair, reserved):
    return pair[0] in reserved or pair[1] in reserved or pair[0] + pair[1] in reserved


def _word_symbols(word, marker):
    symbols = list(word)
    if marker:
        symbols[-1] = symbols[-1] + marker
    return symbols


def _merge_symbols(symbols, pair):
    first, second = pair
    merged = []
    index = 0
    while index < len(symbols):
        if index < len(symbols) - 1 and symbols[index] == first and symbols[index + 1] == second:
            merged.append(first + second)
            index += 2
        else:
            merged.append(symbols[index])
            index += 1
    return merged


def count_words(token_sequences, counts=None):
    """Accumulate word frequencies over any number of token sequences"""
    counts = Counter() if counts is None else counts
    for tokens in token_sequences:
        counts.update(tokens)
    return counts


def bpe_learn(word_frequencies, num_merges, reserved=DEFAULT_RESERVED,
              end_of_word_marker='', min_frequency=2):
    """Learn up to ``num_merges`` merges from a word frequency map"""
    if num_merges < 1:
        raise BPEError('num_merges must be at least 1')
    reserved_set = frozenset(reserved)
    words = []
    freqs = []
    for word, freq in sorted(word_frequencies.items()):
        if freq <= 0:
            raise BPEError(f"frequency of '{word}' must be positive")
        if word in reserved_set or not word:
            continue
        words.append(_word_symbols(word, end_of_word_marker))
        freqs.append(freq)
    if not words:
        raise BPEError('empty corpus')

    stats = Counter()
    where = defaultdict(set)
    for index, symbols in enumerate(words):
        for pair in zip(symbols, symbols[1:]):
            stats[pair] += freqs[index]
            where[pair].add(index)

    # lazy max-heap: stale entries are skipped when popped
    heap = [(-count, pair) for pair, count in stats.items()]
    heapq.heapify(heap)

    merges = []
    while len(merges) < num_merges and heap:
        negative, pair = heapq.heappop(heap)
        if stats.get(pair, 0) != -negative:
            continue
        if -negative < min_frequency:
            break
        if _touches_reserved(pair, reserved_set):
            continue
        merges.append(pair)
        changed = set()
        for index in sorted(where.pop(pair, ())):
            old = words[index]
            new = _merge_symbols(old, pair)
            if new == old:
                continue
            freq = freqs[index]
            for old_pair in zip(old, old[1:]):
                stats[old_pair] -= freq
                changed.add(old_pair)
            for new_pair in zip(new, new[1:]):
                stats[new_pair] += freq
                where[new_pair].add(index)
                changed.add(new_pair)
            words[index] = new
        for changed_pair in changed:
            count = stats.get(changed_pair, 0)
            if count <= 0:
                stats.pop(changed_pair, None)
            else:
                heapq.heappush(heap, (-count, changed_pair))

    logger.info('bpe learned %s', kv(merges=len(merges), requested=num_merges, types=len(words)))
    return MergeTable(tuple(merges), end_of_word_marker, tuple(reserved))


def bpe_apply(tokens, table):
    """Segment tokens into subwords, leaving reserved symbols whole"""
    reserved = table.reserved_set
    output = []
    for token in tokens:
        if token in reserved or not token:
            output.append(token)
            continue
        symbols = table.segment(token)
        output.extend(symbol + CONTINUATION for symbol in symbols[:-1])
        output.append(symbols[-1])
    return output


def bpe_undo(subwords):
    """Glue ``@@``-marked subwords back into whole tokens"""
    tokens = []
    pending = []
    for subword in subwords:
        if subword.endswith(CONTINUATION):
            pending.append(subword[:-len(CONTINUATION)])
        else:
            pending.append(subword)
            tokens.append(''.join(pending))
            pending = []
    if pending:
        raise BPEError('dangling continuation marker at end of sequence')
    return tokens


def vocabulary_size(table, word_frequencies):
    """Count the distinct subwords the table produces over a word frequency map"""
    vocabulary = set()
    for word in word_frequencies:
        vocabulary.update(bpe_apply([word], table))
    return len(vocabulary)


def write_merge_table(table, sink):
    sink.write(VERSION_HEADER + '\n')
    sink.write(' '.join([RESERVED_HEADER, *table.reserved]) + '\n')
    if table.end_of_word_marker:
        sink.write(f'{END_OF_WORD_HEADER} {table.end_of_word_marker}\n')
    for first, second in table.merges:
        sink.write(f'{first} {second}\n')


def read_merge_table(stream):
    """Read a merge table file written by write_merge_table"""
    reserved = DEFAULT_RESERVED
    marker = ''
    merges = []
    seen_version = False
    for line_number, line in enumerate(stream, start=1):
        line = line.rstrip('\n')
        if line_number == 1:
            if not line.startswith('#version'):
                raise BPEError('merge table must start with a #version header')
            seen_version = True
            continue
        if line.startswith(RESERVED_HEADER):
            reserved = tuple(line[len(RESERVED_HEADER):].split())
            continue
        if line.startswith(END_OF_WORD_HEADER):
            marker = line[len(END_OF_WORD_HEADER):].strip()
            continue
        if not line:
            continue
        parts = line.split(' ')
        if len(parts) != 2 or not all(parts):
            raise BPEError(f'malformed merge on line {line_number}')
        merges.append(tuple(parts))
    if not seen_version:
        raise BPEError('empty merge table file')
    return MergeTable(tuple(merges), marker, reserved)
