"""Rule-based tokenization and detokenization.

RULE is a fixed approximation of a Moses-style tokenizer. It splits
punctuation off words but keeps hyphenated compounds (``SARS-CoV``,
``COVID-19``), internal apostrophes and decimal or grouped numbers
(``3.5``, ``1,000``) intact. Every token it emits re-tokenizes to itself,
so running it over its own output is a no-op.

MOSES delegates to sacremoses for callers who want the real thing.
"""
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import regex

_TOKEN = regex.compile(r"""
    \d+(?:[.,]\d+)+                 # decimal and grouped numbers
  | \w+(?:[-'’.]\w+)*          # words, hyphenated compounds, abbreviations
  | \S                              # anything else stands alone
""", regex.VERBOSE)

# no space before these when detokenizing
_ATTACH_LEFT = frozenset(',.;:!?)]}%’”»')
# no space after these
_ATTACH_RIGHT = frozenset('([{$‘“«')
_QUOTES = frozenset('"\'')


class SchemeKind(str, Enum):
    WHITESPACE = 'whitespace'
    RULE = 'rule'
    CHAR = 'char'
    MOSES = 'moses'


@dataclass(frozen=True)
class TokenizerScheme:
    kind: SchemeKind = SchemeKind.RULE
    lowercase: bool = False
    lang: str = 'en'

    def __post_init__(self):
        object.__setattr__(self, 'kind', SchemeKind(self.kind))

    def __call__(self, text):
        return tokenize(text, self)


WHITESPACE = TokenizerScheme(SchemeKind.WHITESPACE)
RULE = TokenizerScheme(SchemeKind.RULE)
CHAR = TokenizerScheme(SchemeKind.CHAR)


@lru_cache(maxsize=None)
def _moses_tokenizer(lang):
    from sacremoses import MosesTokenizer
    return MosesTokenizer(lang=lang)


@lru_cache(maxsize=None)
def _moses_detokenizer(lang):
    from sacremoses import MosesDetokenizer
    return MosesDetokenizer(lang=lang)


def tokenize(text, scheme=RULE):
    """Split NFC text into tokens according to the scheme"""
    kind = scheme.kind
    if kind is SchemeKind.WHITESPACE:
        tokens = text.split()
    elif kind is SchemeKind.CHAR:
        tokens = [char for char in text if not char.isspace()]
    elif kind is SchemeKind.MOSES:
        tokens = _moses_tokenizer(scheme.lang).tokenize(text, escape=False) if text.strip() else []
    else:
        tokens = _TOKEN.findall(text)
    if scheme.lowercase:
        tokens = [token.lower() for token in tokens]
    return tokens


def detokenize(tokens, scheme=RULE):
    """Join tokens back into text, re-attaching punctuation for RULE"""
    kind = scheme.kind
    if kind is SchemeKind.WHITESPACE:
        return ' '.join(tokens)
    if kind is SchemeKind.CHAR:
        return ''.join(tokens)
    if kind is SchemeKind.MOSES:
        return _moses_detokenizer(scheme.lang).detokenize(list(tokens))
    return _detokenize_rule(tokens)


def _detokenize_rule(tokens):
    pieces = []
    glue_next = True
    open_quotes = set()
    for token in tokens:
        glue = glue_next
        glue_next = False
        if token in _QUOTES:
            if token in open_quotes:
                open_quotes.discard(token)
                glue = True
            else:
                open_quotes.add(token)
                glue_next = True
        elif token in _ATTACH_LEFT:
            glue = True
        elif token in _ATTACH_RIGHT:
            glue_next = True
        if pieces and not glue:
            pieces.append(' ')
        pieces.append(token)
    return ''.join(pieces)
