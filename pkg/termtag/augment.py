"""TADA and MASK annotation of source sentences.

TADA wraps every constraint as ``<S> source <C> target </C>``; MASK does the
same but replaces each source-side token with ``MASK``. Both renderings can be
stripped back to the sentence and its constraints.
"""
import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import partial

from termtag.config import Config
from termtag.errors import AnnotationError, ReservedSymbolError
from termtag.log import kv
from termtag.matching import (
    CasingPolicy,
    Matcher,
    PolicyKind,
    ResolutionPolicy,
    build_matcher,
    find_spans,
    resolve_targets,
)
from termtag.models.record import AnnotatedRecord, Mode
from termtag.pipeline import parallel_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AnnotationScheme:
    open_src_tag: str = '<S>'
    open_tgt_tag: str = '<C>'
    close_tgt_tag: str = '</C>'
    mask_token: str = 'MASK'

    def __post_init__(self):
        if len(self.reserved) != 4:
            raise AnnotationError('annotation symbols must be pairwise distinct')

    @property
    def reserved(self):
        return frozenset((self.open_src_tag, self.open_tgt_tag, self.close_tgt_tag, self.mask_token))


DEFAULT_SCHEME = AnnotationScheme()


@dataclass(frozen=True)
class RecoveredConstraint:
    start: int
    end: int
    source: tuple
    target: tuple
    masked: bool

    @property
    def mask_run(self):
        return len(self.source) if self.masked else 0


@dataclass(frozen=True)
class StrippedAnnotation:
    mode: Mode
    tokens: tuple
    constraints: tuple


def check_reserved(tokens, scheme=DEFAULT_SCHEME, where='sentence'):
    reserved = scheme.reserved
    for index, token in enumerate(tokens):
        if token in reserved:
            raise ReservedSymbolError(
                f"reserved symbol collision: '{token}' at token {index} of {where}")


def _check_constraints(tokens, constraints, scheme):
    position = 0
    for span in constraints:
        if span.start < position:
            raise AnnotationError(
                f'overlapping spans: [{span.start}, {span.end}) starts before {position}')
        if span.end > len(tokens):
            raise AnnotationError(
                f'span [{span.start}, {span.end}) exceeds sentence length {len(tokens)}')
        check_reserved(span.chosen_target, scheme, where='target term')
        position = span.end
    check_reserved(tokens, scheme)


def _render(tokens, constraints, scheme, masked):
    _check_constraints(tokens, constraints, scheme)
    output = []
    position = 0
    for span in constraints:
        output.extend(tokens[position:span.start])
        output.append(scheme.open_src_tag)
        if masked:
            output.extend([scheme.mask_token] * (span.end - span.start))
        else:
            output.extend(tokens[span.start:span.end])
        output.append(scheme.open_tgt_tag)
        output.extend(span.chosen_target)
        output.append(scheme.close_tgt_tag)
        position = span.end
    output.extend(tokens[position:])
    return output


def render_tada(tokens, constraints, scheme=DEFAULT_SCHEME):
    """Tag every constraint span with its source and chosen target"""
    return _render(tokens, constraints, scheme, masked=False)


def render_mask(tokens, constraints, scheme=DEFAULT_SCHEME):
    """Like render_tada, with one mask token per source-side token"""
    return _render(tokens, constraints, scheme, masked=True)


def strip_annotation(tokens, scheme=DEFAULT_SCHEME):
    """Remove tags, returning the mode, the plain (or masked) tokens and the constraints"""
    plain = []
    recovered = []
    state = 'out'
    source = []
    target = []
    start = 0
    for index, token in enumerate(tokens):
        if state == 'out':
            if token == scheme.open_src_tag:
                state, start, source = 'source', len(plain), []
            elif token in scheme.reserved:
                raise AnnotationError(f"unexpected '{token}' at token {index}")
            else:
                plain.append(token)
        elif state == 'source':
            if token == scheme.open_tgt_tag:
                if not source:
                    raise AnnotationError(f"empty source side before '{token}' at token {index}")
                state, target = 'target', []
            elif token in (scheme.open_src_tag, scheme.close_tgt_tag):
                raise AnnotationError(f"misnested '{token}' at token {index}")
            else:
                source.append(token)
                plain.append(token)
        else:
            if token == scheme.close_tgt_tag:
                if not target:
                    raise AnnotationError(f"empty target side before '{token}' at token {index}")
                recovered.append(_recover(start, source, target, scheme, index))
                state = 'out'
            elif token in scheme.reserved:
                raise AnnotationError(f"misnested '{token}' at token {index}")
            else:
                target.append(token)
    if state != 'out':
        raise AnnotationError(f'unterminated annotation at token {len(tokens)}')

    if not recovered:
        mode = Mode.PLAIN
    elif all(constraint.masked for constraint in recovered):
        mode = Mode.MASK
    elif not any(constraint.masked for constraint in recovered):
        mode = Mode.TADA
    else:
        raise AnnotationError('sentence mixes masked and unmasked spans')
    return StrippedAnnotation(mode, tuple(plain), tuple(recovered))


def _recover(start, source, target, scheme, index):
    mask_count = source.count(scheme.mask_token)
    if mask_count and mask_count != len(source):
        raise AnnotationError(f'partially masked source side ending at token {index}')
    return RecoveredConstraint(start, start + len(source), tuple(source), tuple(target),
                               masked=bool(mask_count))


def annotation_budget(total, rate):
    """floor(rate * total), computed without binary rounding surprises"""
    return math.floor(Fraction(str(rate)) * total)


def sample_for_annotation(total, grounded_ids, rate, seed=Config.SEED):
    """Seeded uniform sample of grounded ids, sized by the annotation rate"""
    if not 0 <= rate <= 1:
        raise AnnotationError(f'annotation rate must be within [0, 1], got {rate}')
    candidates = sorted(set(grounded_ids))
    size = min(len(candidates), annotation_budget(total, rate))
    if size <= 0:
        return frozenset()
    rng = random.Random(seed)
    return frozenset(rng.sample(candidates, size))


def constrain_batch(batch, matcher, policy, casing, scheme=DEFAULT_SCHEME):
    """Match and resolve constraints for a batch of sentence pairs"""
    results = []
    for pair in batch:
        check_reserved(pair.source, scheme, where=f'sentence {pair.id}')
        spans = find_spans(pair.source, matcher)
        if not spans:
            results.append(())
            continue
        rng = policy.rng_for(pair.id) if policy.kind is PolicyKind.TEST_RANDOM else None
        reference = pair.target if policy.kind is PolicyKind.TRAIN_REFERENCE_MATCH else None
        if policy.kind is PolicyKind.TRAIN_REFERENCE_MATCH and reference is None:
            raise AnnotationError(f'sentence {pair.id} has no reference to match targets against')
        results.append(tuple(resolve_targets(spans, pair.source, reference, policy, casing, rng)))
    return results


def render_record(pair, constraints, mode, scheme=DEFAULT_SCHEME):
    """Build the annotated record for one sentence"""
    mode = Mode(mode)
    if mode is Mode.PLAIN or not constraints:
        return AnnotatedRecord.plain(pair)
    render = render_mask if mode is Mode.MASK else render_tada
    return AnnotatedRecord(pair, constraints, render(pair.source, constraints, scheme), mode)


def annotate_corpus(pairs, terminology, mode, policy=None, rate=Config.ANNOTATION_RATE,
                    seed=Config.SEED, casing=CasingPolicy.CASE_INSENSITIVE,
                    scheme=DEFAULT_SCHEME, workers=1, batch_size=Config.BATCH_SIZE):
    """Match, resolve, sample and render a whole corpus, preserving input order"""
    mode = Mode(mode)
    if mode is Mode.PLAIN:
        raise AnnotationError('annotation mode must be tada or mask')
    policy = policy or ResolutionPolicy(PolicyKind.TRAIN_REFERENCE_MATCH, seed)
    matcher = terminology if isinstance(terminology, Matcher) else build_matcher(terminology, casing)
    pairs = list(pairs)

    worker = partial(constrain_batch, matcher=matcher, policy=policy,
                     casing=matcher.casing, scheme=scheme)
    constraints = list(parallel_map(worker, pairs, workers=workers, batch_size=batch_size))

    grounded = [pair.id for pair, found in zip(pairs, constraints) if found]
    selected = sample_for_annotation(len(pairs), grounded, rate, seed)

    records = [
        render_record(pair, found, mode, scheme) if pair.id in selected
        else AnnotatedRecord.plain(pair)
        for pair, found in zip(pairs, constraints)
    ]
    logger.info('annotated corpus %s', kv(sentences=len(pairs), grounded=len(grounded),
                                          annotated=len(selected), mode=mode.value,
                                          policy=policy.kind.value, workers=workers))
    return records


__all__ = [
    'AnnotationScheme',
    'DEFAULT_SCHEME',
    'RecoveredConstraint',
    'StrippedAnnotation',
    'annotate_corpus',
    'annotation_budget',
    'check_reserved',
    'constrain_batch',
    'render_mask',
    'render_record',
    'render_tada',
    'sample_for_annotation',
    'strip_annotation',
]
