import click

from termtag.commands import input_option, make_scheme, output_option, tokenizer_options
from termtag.models.terminology import dump_terminology, load_terminology, tokenize_terminology
from termtag.streams import open_input, open_outputs, read_lines, write_lines
from termtag.tokenization.rules import SchemeKind, detokenize, tokenize
from termtag.validation import handle_errors, load_run_config


@click.command('tokenize')
@input_option('--input', 'input_path', help='Raw text, one sentence per line.')
@output_option('--output', 'output_path', help='Tokenized text.')
@click.option('--tsv', 'terminology', is_flag=True, default=False,
              help='Input is a terminology; tokenize both columns.')
@click.option('--detokenize', 'reverse', is_flag=True, default=False,
              help='Join space-separated tokens back into text.')
@tokenizer_options(default=SchemeKind.RULE)
@handle_errors
def tokenize_command(**options):
    """Tokenize (or detokenize) text or a terminology file"""
    config = load_run_config('tokenize', **options)
    paths = config.paths
    scheme = make_scheme(config)
    if paths['terminology'] and paths['reverse']:
        raise click.UsageError('--tsv and --detokenize are exclusive')

    with open_input(paths['input_path']) as stream:
        if paths['terminology']:
            lines = dump_terminology(tokenize_terminology(load_terminology(stream), scheme))
        elif paths['reverse']:
            lines = [detokenize(line.split(), scheme) for line in read_lines(stream)]
        else:
            lines = [' '.join(tokenize(line, scheme)) for line in read_lines(stream)]
    with open_outputs(paths['output_path']) as (output,):
        write_lines(output, lines)
