import json
import logging

import click

from termtag.commands import (
    casing_option,
    input_option,
    make_tokenizer,
    output_option,
    parse_named_paths,
    read_terminology,
    tokenizer_options,
)
from termtag.log import kv
from termtag.matching import build_matcher
from termtag.models.corpus import load_parallel
from termtag.selection import corpus_stats, render_stats_table, term_grounded_filter, upsample
from termtag.streams import open_input, open_outputs, write_lines
from termtag.validation import handle_errors, load_run_config

logger = logging.getLogger(__name__)


def _load_pairs(source_path, target_path, tokenizer):
    with open_input(source_path) as source:
        if target_path is None:
            return load_parallel(source, None, tokenizer)
        with open_input(target_path) as target:
            return load_parallel(source, target, tokenizer)


@click.command('select')
@input_option('--terminology', 'terminology_path', default=None, required=True,
              help='Two-column TSV terminology.')
@input_option('--source', 'source_path', help='Source corpus.')
@input_option('--target', 'target_path', default=None, show_default=False,
              help='Aligned target corpus, filtered along with the source.')
@output_option('--out-source', 'out_source_path', help='Term-grounded source sentences.')
@output_option('--out-target', 'out_target_path', default=None, show_default=False,
               help='Their target sides.')
@click.option('--factor', type=int, default=1, show_default=True,
              help='Repeat every kept pair this many times.')
@click.option('--name', 'corpus_name', default='corpus', show_default=True,
              help='Row label for the logged statistics.')
@casing_option
@tokenizer_options()
@handle_errors
def select_command(**options):
    """Keep only the sentence pairs whose source contains a term"""
    config = load_run_config('select', **options)
    paths = config.paths
    if ('out_target_path' in paths) != ('target_path' in paths):
        raise click.UsageError('--target and --out-target go together')

    tokenizer = make_tokenizer(config)
    matcher = build_matcher(read_terminology(paths['terminology_path'], config), config.casing)
    pairs = _load_pairs(paths['source_path'], paths.get('target_path'), tokenizer)
    grounded, row = term_grounded_filter(pairs, matcher, paths['corpus_name'])
    kept = upsample(grounded, config.factor)

    outputs = [paths['out_source_path']]
    if 'out_target_path' in paths:
        outputs.append(paths['out_target_path'])
    with open_outputs(*outputs) as sinks:
        write_lines(sinks[0], (' '.join(pair.source) for pair in kept))
        if len(sinks) > 1:
            write_lines(sinks[1], (' '.join(pair.target) for pair in kept))
    logger.info('selected %s', kv(name=row.name, sentences=row.sentence_count,
                                  grounded=row.term_grounded_count, written=len(kept)))


@click.command('stats')
@input_option('--terminology', 'terminology_path', default=None, required=True,
              help='Two-column TSV terminology.')
@click.option('--corpus', 'corpora', multiple=True, required=True, metavar='NAME=PATH',
              help='Source side of a corpus; repeat for one row per corpus.')
@output_option('--output', 'output_path', help='Where to write the table.')
@click.option('--json', 'as_json', is_flag=True, default=False,
              help='Write the structured form instead of the text table.')
@casing_option
@tokenizer_options()
@handle_errors
def stats_command(**options):
    """Count sentences and term-grounded sentences per corpus"""
    config = load_run_config('stats', **options)
    paths = config.paths
    named = parse_named_paths(paths['corpora'], 'corpus')
    tokenizer = make_tokenizer(config)
    matcher = build_matcher(read_terminology(paths['terminology_path'], config), config.casing)

    corpora = [(name, _load_pairs(path, None, tokenizer)) for name, path in named]
    stats = corpus_stats(corpora, matcher)
    if paths['as_json']:
        rendered = json.dumps(stats.to_dict(), ensure_ascii=False, indent=2) + '\n'
    else:
        rendered = render_stats_table(stats)
    with open_outputs(paths['output_path']) as (output,):
        output.write(rendered)
