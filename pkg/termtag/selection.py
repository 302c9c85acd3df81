"""Term-grounded corpus selection, statistics tables and up-sampling."""
import logging
from dataclasses import dataclass, field

from termtag.errors import CorpusFormatError
from termtag.log import kv
from termtag.models.corpus import SentencePair

logger = logging.getLogger(__name__)

HEADERS = ('Data type', '#sentences', '#term-grounded sentences')
TOTAL_LABEL = '#Total'


@dataclass(frozen=True)
class StatsRow:
    name: str
    sentence_count: int = 0
    term_grounded_count: int = 0

    def __post_init__(self):
        if not 0 <= self.term_grounded_count <= self.sentence_count:
            raise CorpusFormatError(
                f'row {self.name}: {self.term_grounded_count} grounded of {self.sentence_count}')

    def __add__(self, other):
        return StatsRow(self.name, self.sentence_count + other.sentence_count,
                        self.term_grounded_count + other.term_grounded_count)

    def to_dict(self):
        return {
            'name': self.name,
            'sentence_count': self.sentence_count,
            'term_grounded_count': self.term_grounded_count,
        }

    @staticmethod
    def from_dict(data):
        return StatsRow(data['name'], int(data['sentence_count']), int(data['term_grounded_count']))


@dataclass(frozen=True)
class CorpusStats:
    rows: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, 'rows', tuple(self.rows))

    @property
    def totals(self):
        total = StatsRow(TOTAL_LABEL)
        for row in self.rows:
            total = total + row
        return StatsRow(TOTAL_LABEL, total.sentence_count, total.term_grounded_count)

    def to_dict(self):
        return {
            'rows': [row.to_dict() for row in self.rows],
            'totals': self.totals.to_dict(),
        }

    @staticmethod
    def from_dict(data):
        stats = CorpusStats(tuple(StatsRow.from_dict(row) for row in data['rows']))
        totals = data.get('totals')
        if totals is not None and StatsRow.from_dict(totals) != stats.totals:
            raise CorpusFormatError('totals row does not equal the column sums')
        return stats


def term_grounded_filter(pairs, matcher, name='corpus'):
    """Keep the pairs whose source contains at least one term"""
    grounded = []
    total = 0
    for pair in pairs:
        total += 1
        if matcher.has_match(pair.source):
            grounded.append(pair)
    row = StatsRow(name, total, len(grounded))
    logger.info('filtered corpus %s', kv(name=name, sentences=total, grounded=len(grounded)))
    return grounded, row


def count_grounded(pairs, matcher, name='corpus'):
    total = 0
    grounded = 0
    for pair in pairs:
        total += 1
        grounded += matcher.has_match(pair.source)
    return StatsRow(name, total, grounded)


def corpus_stats(named_corpora, matcher):
    """One row per (name, pairs) corpus, in input order"""
    return CorpusStats(tuple(count_grounded(pairs, matcher, name) for name, pairs in named_corpora))


def render_stats_table(stats):
    """Aligned plain-text table with a totals row"""
    body = [(row.name, f'{row.sentence_count:,}', f'{row.term_grounded_count:,}')
            for row in (*stats.rows, stats.totals)]
    widths = [max(len(cells[column]) for cells in (HEADERS, *body)) for column in range(3)]

    def line(cells):
        first = cells[0].ljust(widths[0])
        rest = [cell.rjust(width) for cell, width in zip(cells[1:], widths[1:])]
        return '  '.join([first, *rest])

    rule = '-' * (sum(widths) + 2 * (len(widths) - 1))
    return '\n'.join([line(HEADERS), rule, *map(line, body[:-1]), rule, line(body[-1])]) + '\n'


def upsample(pairs, factor):
    """Repeat each pair ``factor`` times in place, renumbering ids"""
    if factor < 1:
        raise CorpusFormatError(f'up-sampling factor must be at least 1, got {factor}')
    result = []
    for pair in pairs:
        for _ in range(factor):
            result.append(SentencePair(len(result), pair.source, pair.target))
    return result
