"""Annotated records and their two on-disk artifacts.

A batch of records is written as (a) the annotated source text, one sentence
per line with tokens joined by single spaces, and (b) a JSON-lines sidecar
carrying each record's id, mode, constraints and target.
"""
import json
from dataclasses import dataclass
from enum import Enum

from marshmallow import Schema, ValidationError, fields, post_load, validate, validates_schema

from termtag.errors import AnnotationError, RecordFormatError
from termtag.models.corpus import SentencePair
from termtag.streams import read_lines


class Mode(str, Enum):
    PLAIN = 'plain'
    TADA = 'tada'
    MASK = 'mask'


@dataclass(frozen=True)
class ConstraintSpan:
    start: int
    end: int
    source_term: tuple
    chosen_target: tuple

    def __post_init__(self):
        object.__setattr__(self, 'source_term', tuple(self.source_term))
        object.__setattr__(self, 'chosen_target', tuple(self.chosen_target))
        if not 0 <= self.start < self.end:
            raise AnnotationError(f'invalid span [{self.start}, {self.end})')
        if len(self.source_term) != self.end - self.start:
            raise AnnotationError(
                f'span [{self.start}, {self.end}) does not cover {len(self.source_term)} tokens')
        if not self.chosen_target:
            raise AnnotationError(f'span [{self.start}, {self.end}) has an empty target')

    def __len__(self):
        return self.end - self.start

    def to_dict(self):
        return {
            'start': self.start,
            'end': self.end,
            'source_term': list(self.source_term),
            'chosen_target': list(self.chosen_target),
        }


@dataclass(frozen=True)
class AnnotatedRecord:
    pair: SentencePair
    constraints: tuple
    annotated_source: tuple
    mode: Mode = Mode.PLAIN

    def __post_init__(self):
        object.__setattr__(self, 'constraints', tuple(self.constraints))
        object.__setattr__(self, 'annotated_source', tuple(self.annotated_source))
        object.__setattr__(self, 'mode', Mode(self.mode))
        if self.mode is Mode.PLAIN and self.annotated_source != self.pair.source:
            raise AnnotationError(f'plain record {self.pair.id} differs from its source')

    @property
    def id(self):
        return self.pair.id

    @staticmethod
    def plain(pair):
        """Wrap a sentence pair without annotation"""
        return AnnotatedRecord(pair, (), pair.source, Mode.PLAIN)

    def to_dict(self):
        """Convert record to its sidecar dictionary"""
        return {
            'id': self.id,
            'mode': self.mode.value,
            'constraints': [span.to_dict() for span in self.constraints],
            'target': None if self.pair.target is None else list(self.pair.target),
        }


class ConstraintSpanSchema(Schema):
    start = fields.Integer(required=True, validate=validate.Range(min=0))
    end = fields.Integer(required=True, validate=validate.Range(min=1))
    source_term = fields.List(fields.String(), required=True, validate=validate.Length(min=1))
    chosen_target = fields.List(fields.String(), required=True, validate=validate.Length(min=1))

    @validates_schema
    def validate_bounds(self, data, **kwargs):
        if data['end'] <= data['start']:
            raise ValidationError('end must be greater than start', 'end')

    @post_load
    def make_span(self, data, **kwargs):
        try:
            return ConstraintSpan(**data)
        except AnnotationError as e:
            raise ValidationError(str(e)) from e


class RecordSidecarSchema(Schema):
    id = fields.Integer(required=True, validate=validate.Range(min=0))
    mode = fields.String(required=True, validate=validate.OneOf([mode.value for mode in Mode]))
    constraints = fields.List(fields.Nested(ConstraintSpanSchema), required=True)
    target = fields.List(fields.String(), allow_none=True, load_default=None)


def dumps_sidecar(record):
    """Render one sidecar line"""
    return json.dumps(record.to_dict(), ensure_ascii=False, separators=(',', ':'))


def loads_sidecar(line, line_number=None):
    """Parse and validate one sidecar line"""
    try:
        return RecordSidecarSchema().loads(line)
    except (ValidationError, ValueError) as e:
        where = f' line {line_number}' if line_number is not None else ''
        raise RecordFormatError(f'invalid sidecar record{where}: {e}') from e


def write_records(records, text_sink, sidecar_sink):
    """Write annotated source text and the sidecar; return the record count"""
    count = 0
    for record in records:
        text_sink.write(' '.join(record.annotated_source))
        text_sink.write('\n')
        sidecar_sink.write(dumps_sidecar(record))
        sidecar_sink.write('\n')
        count += 1
    return count


def read_sidecar(stream):
    """Read sidecar records as validated dictionaries"""
    return [loads_sidecar(line, number) for number, line in enumerate(read_lines(stream), start=1)
            if line.strip()]


def read_records(text_stream, sidecar_stream):
    """Rebuild annotated records from the text and sidecar artifacts"""
    from termtag.augment import strip_annotation

    lines = list(read_lines(text_stream))
    sidecar = read_sidecar(sidecar_stream)
    if len(lines) != len(sidecar):
        raise RecordFormatError(f'line count mismatch {len(lines)} vs {len(sidecar)}')

    records = []
    for line_number, (line, meta) in enumerate(zip(lines, sidecar), start=1):
        annotated = tuple(line.split())
        mode = Mode(meta['mode'])
        constraints = tuple(meta['constraints'])
        target = meta['target']

        if mode is Mode.PLAIN:
            source = annotated
        else:
            try:
                stripped = strip_annotation(annotated)
            except AnnotationError as e:
                raise RecordFormatError(f'line {line_number}: {e}') from e
            if stripped.mode is not mode:
                raise RecordFormatError(
                    f'line {line_number}: sidecar says {mode.value}, text is {stripped.mode.value}')
            source = _restore_source(stripped, constraints, line_number)

        records.append(AnnotatedRecord(SentencePair(meta['id'], source, target),
                                       constraints, annotated, mode))
    return records


def _restore_source(stripped, constraints, line_number):
    if len(stripped.constraints) != len(constraints):
        raise RecordFormatError(
            f'line {line_number}: {len(stripped.constraints)} tagged spans, '
            f'{len(constraints)} in sidecar')
    tokens = list(stripped.tokens)
    for recovered, span in zip(stripped.constraints, constraints):
        if (recovered.start, recovered.end) != (span.start, span.end) \
                or recovered.target != span.chosen_target:
            raise RecordFormatError(f'line {line_number}: span [{span.start}, {span.end}) '
                                    'does not match the tagged text')
        if recovered.masked:
            tokens[span.start:span.end] = span.source_term
        elif recovered.source != span.source_term:
            raise RecordFormatError(f'line {line_number}: source of span [{span.start}, '
                                    f'{span.end}) does not match the tagged text')
    return tokens
