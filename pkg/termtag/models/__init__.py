from termtag.models.corpus import SentencePair, load_monolingual, load_parallel, load_token_lines
from termtag.models.record import (
    AnnotatedRecord,
    ConstraintSpan,
    Mode,
    read_records,
    read_sidecar,
    write_records,
)
from termtag.models.terminology import (
    TermEntry,
    Terminology,
    dump_terminology,
    load_terminology,
    map_terminology,
    tokenize_terminology,
)

__all__ = [
    'AnnotatedRecord',
    'ConstraintSpan',
    'Mode',
    'SentencePair',
    'TermEntry',
    'Terminology',
    'dump_terminology',
    'load_monolingual',
    'load_parallel',
    'load_terminology',
    'load_token_lines',
    'map_terminology',
    'read_records',
    'read_sidecar',
    'tokenize_terminology',
    'write_records',
]
