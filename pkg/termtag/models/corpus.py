from dataclasses import dataclass

from termtag.errors import CorpusFormatError
from termtag.streams import read_lines


@dataclass(frozen=True)
class SentencePair:
    id: int
    source: tuple
    target: tuple = None

    def __post_init__(self):
        object.__setattr__(self, 'source', tuple(self.source))
        if self.target is not None:
            object.__setattr__(self, 'target', tuple(self.target))
        if not self.source:
            raise CorpusFormatError(f'sentence {self.id} has an empty source')

    def to_dict(self):
        """Convert pair to dictionary"""
        return {
            'id': self.id,
            'source': list(self.source),
            'target': None if self.target is None else list(self.target),
        }

    @staticmethod
    def from_dict(data):
        """Create SentencePair from dictionary"""
        return SentencePair(data['id'], data['source'], data.get('target'))


def _default_tokenizer(text):
    return text.split()


def load_parallel(src_stream, tgt_stream=None, tokenizer=None):
    """Load line-aligned source (and optional target) streams into sentence pairs"""
    tokenizer = tokenizer or _default_tokenizer
    if tgt_stream is None:
        return load_monolingual(src_stream, tokenizer)

    src_lines = list(read_lines(src_stream))
    tgt_lines = list(read_lines(tgt_stream))
    if len(src_lines) != len(tgt_lines):
        raise CorpusFormatError(f'line count mismatch {len(src_lines)} vs {len(tgt_lines)}')

    pairs = []
    for index, (source, target) in enumerate(zip(src_lines, tgt_lines)):
        source_tokens = tokenizer(source)
        if not source_tokens:
            raise CorpusFormatError(f'blank source line {index + 1}')
        pairs.append(SentencePair(index, source_tokens, tokenizer(target)))
    return pairs


def load_monolingual(stream, tokenizer=None):
    """Load a source-only corpus (test sets, monolingual data)"""
    tokenizer = tokenizer or _default_tokenizer
    pairs = []
    for index, line in enumerate(read_lines(stream)):
        tokens = tokenizer(line)
        if not tokens:
            raise CorpusFormatError(f'blank source line {index + 1}')
        pairs.append(SentencePair(index, tokens))
    return pairs


def load_token_lines(stream, tokenizer=None):
    """Load one token sequence per line; blank lines are kept as empty sequences"""
    tokenizer = tokenizer or _default_tokenizer
    return [tuple(tokenizer(line)) for line in read_lines(stream)]
