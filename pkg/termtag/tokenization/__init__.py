from termtag.tokenization.bpe import (
    CONTINUATION,
    DEFAULT_RESERVED,
    MergeTable,
    bpe_apply,
    bpe_learn,
    bpe_undo,
    count_words,
    read_merge_table,
    vocabulary_size,
    write_merge_table,
)
from termtag.tokenization.rules import (
    CHAR,
    RULE,
    WHITESPACE,
    SchemeKind,
    TokenizerScheme,
    detokenize,
    tokenize,
)

__all__ = [
    'CHAR',
    'CONTINUATION',
    'DEFAULT_RESERVED',
    'MergeTable',
    'RULE',
    'SchemeKind',
    'TokenizerScheme',
    'WHITESPACE',
    'bpe_apply',
    'bpe_learn',
    'bpe_undo',
    'count_words',
    'detokenize',
    'read_merge_table',
    'tokenize',
    'vocabulary_size',
    'write_merge_table',
]
