import logging
from functools import partial

import click

from termtag.augment import annotate_corpus, strip_annotation
from termtag.commands import (
    casing_option,
    input_option,
    make_tokenizer,
    output_option,
    read_terminology,
    tokenizer_options,
)
from termtag.config import Config
from termtag.errors import ConfigError
from termtag.log import kv
from termtag.matching import PolicyKind, ResolutionPolicy
from termtag.models.corpus import SentencePair, load_parallel, load_token_lines
from termtag.models.record import Mode, read_records, write_records
from termtag.models.terminology import map_terminology
from termtag.streams import open_input, open_outputs, write_lines
from termtag.tokenization.bpe import bpe_apply, read_merge_table
from termtag.validation import handle_errors, load_run_config

logger = logging.getLogger(__name__)


def segment_pairs(pairs, table):
    """Apply BPE to both sides of every sentence pair"""
    return [SentencePair(pair.id, bpe_apply(pair.source, table),
                         None if pair.target is None else bpe_apply(pair.target, table))
            for pair in pairs]


@click.command('annotate')
@input_option('--terminology', 'terminology_path', default=None, required=True,
              help='Two-column TSV terminology.')
@input_option('--source', 'source_path', help='Source corpus, one sentence per line.')
@input_option('--target', 'target_path', default=None, show_default=False,
              help='Reference translations (required by the train policy).')
@output_option('--out-text', 'text_path', help='Annotated source text.')
@output_option('--out-sidecar', 'sidecar_path', default=None, required=True,
               help='JSON-lines record sidecar.')
@click.option('--mode', type=click.Choice([Mode.TADA.value, Mode.MASK.value]),
              default=Mode.TADA.value, show_default=True,
              help='Keep the source term (tada) or mask it (mask).')
@click.option('--policy', type=click.Choice([kind.value for kind in PolicyKind]),
              default=PolicyKind.TRAIN_REFERENCE_MATCH.value, show_default=True,
              help='train: the variant found in the reference; test: a seeded random variant.')
@click.option('--rate', type=float, default=Config.ANNOTATION_RATE, show_default=True,
              help='Annotation budget as a fraction of all sentences.')
@click.option('--seed', type=int, default=Config.SEED, show_default=True,
              help='Seed for sampling and random variant choice.')
@click.option('--merges', 'merges_path', type=click.Path(exists=True, dir_okay=False),
              default=None, help='Segment corpus and terminology with this merge table first.')
@click.option('--workers', type=int, default=Config.WORKERS, show_default=True,
              help='Worker processes for matching.')
@click.option('--batch-size', type=int, default=Config.BATCH_SIZE, show_default=True,
              help='Sentences per worker batch.')
@casing_option
@tokenizer_options()
@handle_errors
def annotate_command(**options):
    """Annotate term-grounded source sentences with TADA or MASK tags"""
    config = load_run_config('annotate', **options)
    paths = config.paths
    policy = ResolutionPolicy(config.policy, config.seed)
    if policy.kind is PolicyKind.TRAIN_REFERENCE_MATCH and 'target_path' not in paths:
        raise ConfigError('the train policy needs --target references')

    tokenizer = make_tokenizer(config)
    terminology = read_terminology(paths['terminology_path'], config)
    with open_input(paths['source_path']) as source:
        if 'target_path' in paths:
            with open_input(paths['target_path']) as target:
                pairs = load_parallel(source, target, tokenizer)
        else:
            pairs = load_parallel(source, None, tokenizer)

    if 'merges_path' in paths:
        with open_input(paths['merges_path']) as stream:
            table = read_merge_table(stream)
        pairs = segment_pairs(pairs, table)
        terminology = map_terminology(terminology, partial(bpe_apply, table=table))

    records = annotate_corpus(pairs, terminology, config.mode, policy, config.rate,
                              config.seed, config.casing, workers=config.workers,
                              batch_size=config.batch_size)
    with open_outputs(paths['text_path'], paths['sidecar_path']) as (text, sidecar):
        count = write_records(records, text, sidecar)
    logger.info('wrote records %s', kv(records=count))


@click.command('strip')
@input_option('--text', 'text_path', help='Annotated source text.')
@input_option('--sidecar', 'sidecar_path', default=None, show_default=False,
              help='Record sidecar; restores masked source tokens.')
@output_option('--output', 'output_path', help='Plain source text.')
@handle_errors
def strip_command(**options):
    """Remove annotation tags, recovering the plain source"""
    config = load_run_config('strip', **options)
    paths = config.paths
    with open_input(paths['text_path']) as text:
        if 'sidecar_path' in paths:
            with open_input(paths['sidecar_path']) as sidecar:
                sources = [record.pair.source for record in read_records(text, sidecar)]
        else:
            sources = [strip_annotation(tokens).tokens for tokens in load_token_lines(text)]
    with open_outputs(paths['output_path']) as (output,):
        write_lines(output, (' '.join(tokens) for tokens in sources))
