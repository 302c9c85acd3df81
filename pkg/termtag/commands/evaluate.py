import json
import logging

import click

from termtag.commands import (
    casing_option,
    input_option,
    make_tokenizer,
    output_option,
    parse_named_paths,
    tokenizer_options,
)
from termtag.config import Config
from termtag.errors import CorpusFormatError
from termtag.metrics.report import evaluate, render_reports
from termtag.models.corpus import load_token_lines
from termtag.models.record import read_sidecar
from termtag.streams import open_input, open_outputs
from termtag.validation import handle_errors, load_run_config

logger = logging.getLogger(__name__)


def _read_token_file(path, tokenizer):
    with open_input(path) as stream:
        return load_token_lines(stream, tokenizer)


def load_constraints(path):
    """Per-sentence constraint spans from a record sidecar"""
    with open_input(path) as stream:
        return [tuple(record['constraints']) for record in read_sidecar(stream)]


@click.command('evaluate')
@click.option('--hypothesis', 'hypotheses', multiple=True, required=True, metavar='[NAME=]PATH',
              help='System output; repeat to compare several systems.')
@input_option('--reference', 'reference_path', default=None, required=True,
              help='Reference translations.')
@input_option('--sidecar', 'sidecar_path', default=None, required=True,
              help='Record sidecar holding each sentence\'s constraints.')
@output_option('--output', 'output_path', help='Where to write the report.')
@click.option('--window-size', 'window_sizes', type=int, multiple=True,
              default=Config.WINDOW_SIZES, show_default=True,
              help='Window overlap size; repeat for several.')
@click.option('--term-weight', type=float, default=Config.TERM_WEIGHT, show_default=True,
              help='Edit cost of reference term tokens in 1-TERm.')
@click.option('--json', 'as_json', is_flag=True, default=False,
              help='Write JSON lines instead of the text table.')
@casing_option
@tokenizer_options()
@handle_errors
def evaluate_command(**options):
    """Score hypotheses with BLEU, exact match, window overlap and 1-TERm"""
    config = load_run_config('evaluate', **options)
    paths = config.paths
    tokenizer = make_tokenizer(config)
    references = _read_token_file(paths['reference_path'], tokenizer)
    constraints = load_constraints(paths['sidecar_path'])
    if len(references) != len(constraints):
        raise CorpusFormatError(f'line count mismatch {len(references)} vs {len(constraints)}')

    reports = []
    for name, path in parse_named_paths(paths['hypotheses'], 'system'):
        hypotheses = _read_token_file(path, tokenizer)
        if len(hypotheses) != len(references):
            raise CorpusFormatError(
                f'line count mismatch {len(hypotheses)} vs {len(references)}')
        reports.append(evaluate(hypotheses, references, constraints, name,
                                config.window_sizes, config.term_weight, config.casing))

    if paths['as_json']:
        rendered = ''.join(json.dumps(report.to_dict(), ensure_ascii=False) + '\n'
                           for report in reports)
    else:
        rendered = render_reports(reports)
    with open_outputs(paths['output_path']) as (output,):
        output.write(rendered)
