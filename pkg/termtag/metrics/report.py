"""Evaluation reports bundling every metric for one system."""
import logging
from dataclasses import dataclass, field

from marshmallow import Schema, fields, post_load, validate

from termtag.config import Config
from termtag.errors import MetricError
from termtag.log import kv
from termtag.metrics.bleu import bleu
from termtag.metrics.exact_match import count_exact_matches
from termtag.metrics.ter import corpus_term_ter
from termtag.metrics.terms import term_spans
from termtag.metrics.window import corpus_window_overlap

logger = logging.getLogger(__name__)

SYSTEM_HEADER = 'System'
BLEU_HEADER = 'BLEU'
EXACT_MATCH_HEADER = 'Exact-Match Accuracy'
TERM_HEADER = '1-TERm'


def window_header(n):
    return f'Window Overlap ({n})'


@dataclass(frozen=True)
class EvalReport:
    bleu: float
    exact_match: float
    window_overlap: dict
    one_minus_term: float
    sentences: int
    constraint_instances: int
    matched_instances: int
    name: str = 'system'
    term_weight: float = field(default=Config.TERM_WEIGHT, compare=False)

    def __post_init__(self):
        values = [self.bleu, self.exact_match, self.one_minus_term, *self.window_overlap.values()]
        if any(not 0.0 <= value <= 1.0 for value in values):
            raise MetricError('report scores must lie within [0, 1]')
        if self.matched_instances > self.constraint_instances:
            raise MetricError('more matched instances than constraint instances')

    @property
    def window_overlap_2(self):
        return self.window_overlap.get(2)

    @property
    def window_overlap_3(self):
        return self.window_overlap.get(3)

    def to_dict(self):
        return EvalReportSchema().dump(self)


class EvalReportSchema(Schema):
    name = fields.String(required=True)
    bleu = fields.Float(required=True, validate=validate.Range(min=0, max=1))
    exact_match = fields.Float(required=True, validate=validate.Range(min=0, max=1))
    window_overlap = fields.Dict(keys=fields.Integer(), values=fields.Float(), required=True)
    one_minus_term = fields.Float(required=True, validate=validate.Range(min=0, max=1))
    sentences = fields.Integer(required=True)
    constraint_instances = fields.Integer(required=True)
    matched_instances = fields.Integer(required=True)
    term_weight = fields.Float(load_default=Config.TERM_WEIGHT)

    @post_load
    def make_report(self, data, **kwargs):
        return EvalReport(**data)


def evaluate(hypotheses, references, constraints, name='system', window_sizes=None,
             term_weight=Config.TERM_WEIGHT, casing=Config.CASING):
    """Score hypotheses against references and per-sentence constraints"""
    window_sizes = list(window_sizes or Config.WINDOW_SIZES)
    if not len(hypotheses) == len(references) == len(constraints):
        raise MetricError(f'line count mismatch {len(hypotheses)} vs {len(references)} '
                          f'vs {len(constraints)}')

    matched = 0
    instances = 0
    for hypothesis, spans in zip(hypotheses, constraints):
        found, total = count_exact_matches(hypothesis, spans, casing)
        matched += found
        instances += total
    if not instances:
        raise MetricError('no constraints to score')

    overlaps = {n: corpus_window_overlap(hypotheses, references, constraints, n, casing)
                for n in window_sizes}
    spans = [term_spans(reference, sentence_constraints, casing)
             for reference, sentence_constraints in zip(references, constraints)]
    report = EvalReport(
        bleu=bleu(hypotheses, references),
        exact_match=matched / instances,
        window_overlap=overlaps,
        one_minus_term=corpus_term_ter(hypotheses, references, spans, term_weight),
        sentences=len(hypotheses),
        constraint_instances=instances,
        matched_instances=matched,
        name=name,
        term_weight=term_weight,
    )
    logger.info('evaluated %s', kv(system=name, sentences=report.sentences,
                                   instances=instances, matched=matched))
    return report


def render_reports(reports):
    """Aligned text table, one row per system; BLEU shown on the 0-100 scale"""
    reports = list(reports)
    sizes = sorted({n for report in reports for n in report.window_overlap})
    headers = [SYSTEM_HEADER, BLEU_HEADER, EXACT_MATCH_HEADER,
               *(window_header(n) for n in sizes), TERM_HEADER]
    rows = []
    for report in reports:
        overlaps = [report.window_overlap.get(n) for n in sizes]
        rows.append([
            report.name,
            f'{report.bleu * 100:.2f}',
            f'{report.exact_match:.3f}',
            *('-' if value is None else f'{value:.3f}' for value in overlaps),
            f'{report.one_minus_term:.3f}',
        ])
    widths = [max(len(cells[column]) for cells in (headers, *rows))
              for column in range(len(headers))]

    def line(cells):
        first = cells[0].ljust(widths[0])
        rest = [cell.rjust(width) for cell, width in zip(cells[1:], widths[1:])]
        return '  '.join([first, *rest])

    return '\n'.join([line(headers), *map(line, rows)]) + '\n'
