"""Click command modules, one per pipeline stage, registered by create_cli()."""
from functools import partial

import click

from termtag.config import Config
from termtag.matching import CasingPolicy
from termtag.models.terminology import load_terminology, tokenize_terminology
from termtag.streams import STDIO, open_input
from termtag.tokenization import rules
from termtag.tokenization.rules import SchemeKind, TokenizerScheme


def _enum_choice(enum):
    return click.Choice([member.value for member in enum])


def tokenizer_options(default=SchemeKind.WHITESPACE):
    """Add --scheme, --lowercase and --lang to a command"""
    def decorator(f):
        f = click.option('--lang', default='en', show_default=True,
                         help='Language code for the moses scheme.')(f)
        f = click.option('--lowercase', is_flag=True, default=False,
                         help='Lowercase every token.')(f)
        f = click.option('--scheme', type=_enum_choice(SchemeKind), default=default.value,
                         show_default=True,
                         help='How input lines are split into tokens.')(f)
        return f
    return decorator


def casing_option(f):
    return click.option('--casing', type=_enum_choice(CasingPolicy), default=Config.CASING,
                        show_default=True, help='Case handling when comparing tokens.')(f)


def input_option(*names, **kwargs):
    kwargs.setdefault('default', STDIO)
    kwargs.setdefault('show_default', True)
    return click.option(*names, type=click.Path(exists=True, dir_okay=False, allow_dash=True), **kwargs)


def output_option(*names, **kwargs):
    kwargs.setdefault('default', STDIO)
    kwargs.setdefault('show_default', True)
    return click.option(*names, type=click.Path(allow_dash=True, dir_okay=False), **kwargs)


def make_scheme(config):
    return TokenizerScheme(config.scheme, config.lowercase, config.lang)


def make_tokenizer(config):
    return partial(rules.tokenize, scheme=make_scheme(config))


def read_terminology(path, config):
    """Load a terminology file, re-tokenized unless it is split on whitespace"""
    with open_input(path) as stream:
        terminology = load_terminology(stream)
    scheme = make_scheme(config)
    if scheme.kind is SchemeKind.WHITESPACE and not scheme.lowercase:
        return terminology
    return tokenize_terminology(terminology, scheme)


def parse_named_paths(values, prefix):
    """NAME=PATH pairs; a bare PATH is named after its position"""
    named = []
    for index, value in enumerate(values, start=1):
        name, sep, path = value.partition('=')
        if not sep:
            name, path = f'{prefix}{index}', value
        if not name or not path:
            raise click.BadParameter(f"expected NAME=PATH, got '{value}'")
        named.append((name, path))
    return named
