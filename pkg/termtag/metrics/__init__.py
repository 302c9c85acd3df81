from termtag.metrics.bleu import bleu
from termtag.metrics.exact_match import count_exact_matches, exact_match_accuracy
from termtag.metrics.report import EvalReport, EvalReportSchema, evaluate, render_reports
from termtag.metrics.ter import (
    EditKind,
    EditOp,
    EditScript,
    Shift,
    corpus_term_ter,
    term_ter,
    term_weights,
    ter,
    ter_edit_script,
)
from termtag.metrics.terms import locate_terms, term_spans
from termtag.metrics.window import corpus_window_overlap, window_overlap, window_overlap_scores

__all__ = [
    'EditKind',
    'EditOp',
    'EditScript',
    'EvalReport',
    'EvalReportSchema',
    'Shift',
    'bleu',
    'corpus_term_ter',
    'corpus_window_overlap',
    'count_exact_matches',
    'evaluate',
    'exact_match_accuracy',
    'locate_terms',
    'render_reports',
    'term_spans',
    'term_ter',
    'term_weights',
    'ter',
    'ter_edit_script',
    'window_overlap',
    'window_overlap_scores',
]
