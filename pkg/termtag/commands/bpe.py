import logging

import click

from termtag.commands import input_option, output_option
from termtag.config import Config
from termtag.log import kv
from termtag.models.corpus import load_token_lines
from termtag.streams import open_input, open_outputs, write_lines
from termtag.tokenization.bpe import (
    DEFAULT_RESERVED,
    bpe_apply,
    bpe_learn,
    bpe_undo,
    count_words,
    read_merge_table,
    vocabulary_size,
    write_merge_table,
)
from termtag.validation import handle_errors, load_run_config

logger = logging.getLogger(__name__)


@click.command('bpe-learn')
@click.option('--input', 'input_paths', type=click.Path(exists=True, dir_okay=False, allow_dash=True), multiple=True,
              required=True, help='Tokenized text; repeat to learn a joint table.')
@output_option('--output', 'output_path', help='Merge table file.')
@click.option('--num-merges', type=int, default=Config.NUM_MERGES, show_default=True,
              help='Maximum number of merges to learn.')
@click.option('--min-frequency', type=int, default=Config.MIN_FREQUENCY, show_default=True,
              help='Stop once the best pair is rarer than this.')
@click.option('--end-of-word-marker', default='', show_default=True,
              help='Optional marker glued to the last symbol of every word.')
@click.option('--reserved', 'reserved', multiple=True, default=DEFAULT_RESERVED,
              show_default=True, help='Symbols kept whole; repeat for several.')
@handle_errors
def bpe_learn_command(**options):
    """Learn a BPE merge table from tokenized text"""
    config = load_run_config('bpe-learn', **options)
    paths = config.paths
    counts = None
    for path in paths['input_paths']:
        with open_input(path) as stream:
            counts = count_words(load_token_lines(stream), counts)
    table = bpe_learn(counts, config.num_merges, tuple(paths['reserved']),
                      config.end_of_word_marker, config.min_frequency)
    with open_outputs(paths['output_path']) as (output,):
        write_merge_table(table, output)
    logger.info('merge table written %s', kv(merges=len(table),
                                             vocabulary=vocabulary_size(table, counts)))


def _map_lines(input_path, output_path, transform):
    with open_input(input_path) as stream:
        lines = [' '.join(transform(tokens)) for tokens in load_token_lines(stream)]
    with open_outputs(output_path) as (output,):
        return write_lines(output, lines)


@click.command('bpe-apply')
@click.option('--merges', 'merges_path', type=click.Path(exists=True, dir_okay=False),
              required=True, help='Merge table written by bpe-learn.')
@input_option('--input', 'input_path', help='Tokenized text.')
@output_option('--output', 'output_path', help='Segmented text.')
@handle_errors
def bpe_apply_command(**options):
    """Segment tokenized text into subwords"""
    paths = load_run_config('bpe-apply', **options).paths
    with open_input(paths['merges_path']) as stream:
        table = read_merge_table(stream)
    count = _map_lines(paths['input_path'], paths['output_path'],
                       lambda tokens: bpe_apply(tokens, table))
    logger.info('segmented %s', kv(lines=count, merges=len(table)))


@click.command('bpe-undo')
@input_option('--input', 'input_path', help='Segmented text.')
@output_option('--output', 'output_path', help='Text with subwords joined back.')
@handle_errors
def bpe_undo_command(**options):
    """Join @@-marked subwords back into tokens"""
    paths = load_run_config('bpe-undo', **options).paths
    _map_lines(paths['input_path'], paths['output_path'], bpe_undo)
