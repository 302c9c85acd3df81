#!/usr/bin/env python3
"""
Synthetic corpus generator for termtag
Writes a terminology and a line-aligned parallel corpus for testing and benchmarking
"""

import os
import random
import sys

import click

# Add the project root to the path
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from termtag.config import Config
from termtag.log import configure_logging, kv
from termtag.streams import open_outputs, write_lines
from tests.factories import synthetic_corpus, synthetic_terminology, synthetic_vocabulary


@click.command()
@click.option('--out-dir', type=click.Path(file_okay=False), default='synthetic', show_default=True)
@click.option('--sentences', type=int, default=10000, show_default=True)
@click.option('--terms', type=int, default=1000, show_default=True)
@click.option('--grounded-rate', type=float, default=0.3, show_default=True)
@click.option('--seed', type=int, default=Config.SEED, show_default=True)
def main(out_dir, sentences, terms, grounded_rate, seed):
    """Generate terms.tsv, corpus.src and corpus.tgt"""
    logger = configure_logging(Config.LOG_LEVEL)
    os.makedirs(out_dir, exist_ok=True)
    rng = random.Random(seed)
    vocabulary = synthetic_vocabulary(seed)
    terminology = synthetic_terminology(rng, vocabulary, terms)
    pairs = synthetic_corpus(rng, vocabulary, terminology, sentences, grounded_rate)

    paths = [os.path.join(out_dir, name) for name in ('terms.tsv', 'corpus.src', 'corpus.tgt')]
    with open_outputs(*paths) as (terms_file, source_file, target_file):
        write_lines(terms_file, terminology)
        write_lines(source_file, (' '.join(pair.source) for pair in pairs))
        write_lines(target_file, (' '.join(pair.target) for pair in pairs))
    logger.info('synthetic corpus written %s', kv(out_dir=out_dir, sentences=len(pairs),
                                                  terms=terms, seed=seed))


if __name__ == '__main__':
    main()
