"""Terminology dictionaries: source terms with one or more target variants."""
from dataclasses import dataclass, field

from termtag.errors import TerminologyFormatError
from termtag.streams import read_lines


def _as_tokens(value):
    if isinstance(value, str):
        return tuple(value.split())
    return tuple(value)


@dataclass(frozen=True)
class TermEntry:
    source_term: tuple
    target_variants: tuple

    def __post_init__(self):
        object.__setattr__(self, 'source_term', _as_tokens(self.source_term))
        variants = tuple(_as_tokens(variant) for variant in self.target_variants)
        object.__setattr__(self, 'target_variants', variants)
        if not self.source_term:
            raise TerminologyFormatError('empty source term')
        if not variants:
            raise TerminologyFormatError(f"term '{self.source_text}' has no target variant")
        if any(not variant for variant in variants):
            raise TerminologyFormatError(f"term '{self.source_text}' has an empty target variant")
        if len(set(variants)) != len(variants):
            raise TerminologyFormatError(f"term '{self.source_text}' has duplicate target variants")

    @property
    def source_text(self):
        return ' '.join(self.source_term)

    def to_dict(self):
        """Convert entry to dictionary"""
        return {
            'source_term': list(self.source_term),
            'target_variants': [list(variant) for variant in self.target_variants],
        }

    @staticmethod
    def from_dict(data):
        """Create TermEntry from dictionary"""
        return TermEntry(data['source_term'], data['target_variants'])


@dataclass(frozen=True)
class Terminology:
    entries: tuple
    language_pair: str = ''
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'entries', tuple(self.entries))
        index = {}
        for entry in self.entries:
            if entry.source_term in index:
                raise TerminologyFormatError(f"duplicate source term '{entry.source_text}'")
            index[entry.source_term] = entry
        object.__setattr__(self, '_index', index)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def unique_pair_count(self):
        return sum(len(entry.target_variants) for entry in self.entries)

    def lookup(self, source_term):
        """Find the entry for a source term, or None"""
        return self._index.get(_as_tokens(source_term))

    def pairs(self):
        """Yield every unique (source, target) pair in file order"""
        for entry in self.entries:
            for variant in entry.target_variants:
                yield entry.source_term, variant


def load_terminology(stream, language_pair=''):
    """Load a two-column TSV terminology, merging repeated sources into variants"""
    variants_by_source = {}
    for line_number, line in enumerate(read_lines(stream), start=1):
        if not line.strip():
            continue
        if line.count('\t') != 1:
            raise TerminologyFormatError(
                f'malformed terminology line {line_number}: expected exactly one tab')
        source, target = (side.strip() for side in line.split('\t'))
        if not source or not target:
            raise TerminologyFormatError(
                f'malformed terminology line {line_number}: empty side')
        variants = variants_by_source.setdefault(tuple(source.split()), [])
        target_tokens = tuple(target.split())
        if target_tokens not in variants:
            variants.append(target_tokens)

    if not variants_by_source:
        raise TerminologyFormatError('empty terminology')

    entries = [TermEntry(source, variants) for source, variants in variants_by_source.items()]
    return Terminology(entries, language_pair)


def dump_terminology(terminology):
    """Serialize back to TSV lines, one per unique pair"""
    return [f"{' '.join(source)}\t{' '.join(target)}" for source, target in terminology.pairs()]


def map_terminology(terminology, transform):
    """Rebuild a terminology with both sides of every pair passed through transform"""
    lines = []
    for source, target in terminology.pairs():
        source_tokens = transform(source)
        target_tokens = transform(target)
        lines.append(f"{' '.join(source_tokens)}\t{' '.join(target_tokens)}")
    return load_terminology(lines, terminology.language_pair)


def tokenize_terminology(terminology, scheme):
    """Re-tokenize both sides of every entry with a tokenizer scheme"""
    from termtag.tokenization.rules import tokenize

    return map_terminology(terminology, lambda tokens: tokenize(' '.join(tokens), scheme))
