"""Translation edit rate with optional terminology weighting.

Every reference token carries a weight (1 for ordinary tokens, ``term_weight``
for tokens inside a reference term). Substituting or inserting a reference
token costs its weight, deleting a hypothesis token costs 1, and a block
shift costs the largest weight of the reference tokens it lands on. With all
weights at 1 this is plain TER.

Shifts are searched greedily: each round tries every candidate block move,
keeps the one with the largest strictly positive gain (ties: leftmost start,
longest block, smallest destination) and stops when nothing helps.
"""
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum

from termtag.config import Config
from termtag.errors import MetricError

MAX_SHIFT_SIZE = 10
MAX_SHIFT_DISTANCE = 50


class EditKind(str, Enum):
    MATCH = 'match'
    SUBSTITUTE = 'substitute'
    INSERT = 'insert'
    DELETE = 'delete'
    SHIFT = 'shift'


@dataclass(frozen=True)
class EditOp:
    kind: EditKind
    hyp_token: str = None
    ref_token: str = None
    cost: float = 0.0


@dataclass(frozen=True)
class Shift:
    """Move ``block`` from ``start`` so it begins at ``destination`` of the result"""
    start: int
    block: tuple
    destination: int
    cost: float = 1.0
    kind = EditKind.SHIFT

    @property
    def distance(self):
        return self.destination - self.start

    def apply(self, tokens):
        tokens = list(tokens)
        if tuple(tokens[self.start:self.start + len(self.block)]) != self.block:
            raise MetricError(f'shift block not found at {self.start}')
        rest = tokens[:self.start] + tokens[self.start + len(self.block):]
        return rest[:self.destination] + list(self.block) + rest[self.destination:]


@dataclass(frozen=True)
class EditScript:
    shifts: tuple
    edits: tuple

    @property
    def operations(self):
        return self.shifts + self.edits

    @property
    def cost(self):
        return sum(operation.cost for operation in self.operations)

    def apply(self, hypothesis):
        """Replay the script on the hypothesis, producing the reference"""
        tokens = list(hypothesis)
        for shift in self.shifts:
            tokens = shift.apply(tokens)
        output = []
        position = 0
        for edit in self.edits:
            if edit.kind in (EditKind.MATCH, EditKind.SUBSTITUTE, EditKind.DELETE):
                if position >= len(tokens) or tokens[position] != edit.hyp_token:
                    raise MetricError(f'edit script does not fit the hypothesis at {position}')
                position += 1
            if edit.kind is not EditKind.DELETE:
                output.append(edit.ref_token)
        if position != len(tokens):
            raise MetricError('edit script leaves hypothesis tokens unconsumed')
        return output


def term_weights(length, spans, term_weight=Config.TERM_WEIGHT):
    """Per-token reference weights given the (start, end) term spans"""
    if term_weight < 1:
        raise MetricError(f'term weight must be at least 1, got {term_weight}')
    weights = [1.0] * length
    for start, end in spans:
        if not 0 <= start < end <= length:
            raise MetricError(f'term span [{start}, {end}) outside reference of length {length}')
        for index in range(start, end):
            weights[index] = float(term_weight)
    return weights


def _distance_table(hyp, ref, weights):
    rows = len(hyp) + 1
    cols = len(ref) + 1
    table = [[0.0] * cols for _ in range(rows)]
    for j in range(1, cols):
        table[0][j] = table[0][j - 1] + weights[j - 1]
    for i in range(1, rows):
        previous = table[i - 1]
        current = table[i]
        current[0] = float(i)
        token = hyp[i - 1]
        for j in range(1, cols):
            weight = weights[j - 1]
            diagonal = previous[j - 1] + (0.0 if token == ref[j - 1] else weight)
            deletion = previous[j] + 1.0
            insertion = current[j - 1] + weight
            current[j] = min(diagonal, deletion, insertion)
    return table


def _edit_distance(hyp, ref, weights):
    return _distance_table(hyp, ref, weights)[-1][-1]


def _align(hyp, ref, weights):
    """Cheapest edits plus the ref-to-hyp position map and per-side error flags"""
    table = _distance_table(hyp, ref, weights)
    edits = []
    i, j = len(hyp), len(ref)
    while i or j:
        here = table[i][j]
        if i and j:
            weight = weights[j - 1]
            same = hyp[i - 1] == ref[j - 1]
            if here == table[i - 1][j - 1] + (0.0 if same else weight):
                kind = EditKind.MATCH if same else EditKind.SUBSTITUTE
                edits.append(EditOp(kind, hyp[i - 1], ref[j - 1], 0.0 if same else weight))
                i, j = i - 1, j - 1
                continue
        if i and here == table[i - 1][j] + 1.0:
            edits.append(EditOp(EditKind.DELETE, hyp[i - 1], None, 1.0))
            i -= 1
            continue
        edits.append(EditOp(EditKind.INSERT, None, ref[j - 1], weights[j - 1]))
        j -= 1
    edits.reverse()

    ref_to_hyp = {}
    hyp_errors = []
    ref_errors = []
    h = r = -1
    for edit in edits:
        if edit.kind in (EditKind.MATCH, EditKind.SUBSTITUTE):
            h += 1
            r += 1
            ref_to_hyp[r] = h
            error = edit.kind is EditKind.SUBSTITUTE
            hyp_errors.append(error)
            ref_errors.append(error)
        elif edit.kind is EditKind.DELETE:
            h += 1
            hyp_errors.append(True)
        else:
            r += 1
            ref_to_hyp[r] = h
            ref_errors.append(True)
    return table[-1][-1], tuple(edits), ref_to_hyp, hyp_errors, ref_errors


def _ref_ngrams(ref):
    starts = defaultdict(list)
    for length in range(1, min(MAX_SHIFT_SIZE, len(ref)) + 1):
        for start in range(len(ref) - length + 1):
            starts[tuple(ref[start:start + length])].append(start)
    return starts


def _candidate_shifts(hyp, ref_starts, ref_to_hyp, hyp_errors, ref_errors):
    for start in range(len(hyp)):
        for length in range(1, min(MAX_SHIFT_SIZE, len(hyp) - start) + 1):
            block = tuple(hyp[start:start + length])
            positions = ref_starts.get(block)
            if not positions:
                break
            if not any(hyp_errors[start:start + length]):
                continue
            for ref_start in positions:
                if not any(ref_errors[ref_start:ref_start + length]):
                    continue
                seen = set()
                for offset in range(-1, length):
                    ref_index = ref_start + offset
                    if ref_index == -1:
                        before = 0
                    elif ref_index in ref_to_hyp:
                        before = ref_to_hyp[ref_index] + 1
                    else:
                        break
                    if start <= before <= start + length:
                        continue
                    destination = before if before < start else before - length
                    if destination in seen or abs(destination - start) > MAX_SHIFT_DISTANCE:
                        continue
                    seen.add(destination)
                    yield start, length, destination, ref_start


def ter_edit_script(hypothesis, reference, weights=None, shifts=True):
    """Cheapest edit script turning the hypothesis into the reference"""
    hyp = list(hypothesis)
    ref = list(reference)
    if not ref:
        raise MetricError('empty reference')
    weights = [1.0] * len(ref) if weights is None else [float(weight) for weight in weights]
    if len(weights) != len(ref):
        raise MetricError(f'{len(weights)} weights for a reference of length {len(ref)}')

    applied = []
    ref_starts = _ref_ngrams(ref)
    while True:
        cost, edits, ref_to_hyp, hyp_errors, ref_errors = _align(hyp, ref, weights)
        if not shifts or not cost:
            break
        best = None
        for start, length, destination, ref_start in _candidate_shifts(
                hyp, ref_starts, ref_to_hyp, hyp_errors, ref_errors):
            shift_cost = max(weights[ref_start:ref_start + length])
            moved = Shift(start, tuple(hyp[start:start + length]), destination, shift_cost)
            gain = cost - _edit_distance(moved.apply(hyp), ref, weights) - shift_cost
            if gain <= 0:
                continue
            rank = (-gain, start, -length, destination)
            if best is None or rank < best[0]:
                best = (rank, moved)
        if best is None:
            break
        moved = best[1]
        applied.append(moved)
        hyp = moved.apply(hyp)
    return EditScript(tuple(applied), edits)


def weighted_length(weights):
    return float(sum(weights))


def ter(hypothesis, reference, shifts=True):
    """Edits plus shifts over the reference length; may exceed 1"""
    script = ter_edit_script(hypothesis, reference, shifts=shifts)
    return script.cost / len(reference)


def term_ter(hypothesis, reference, term_spans, term_weight=Config.TERM_WEIGHT, shifts=True):
    """1-TERm for one sentence: one minus the weighted edit rate, clamped to [0, 1]"""
    weights = term_weights(len(reference), term_spans, term_weight)
    script = ter_edit_script(hypothesis, reference, weights, shifts)
    return _clamp(1.0 - script.cost / weighted_length(weights))


def corpus_term_ter(hypotheses, references, term_spans, term_weight=Config.TERM_WEIGHT,
                    shifts=True):
    """1-TERm pooled over a corpus: total weighted cost over total weighted length"""
    if not len(hypotheses) == len(references) == len(term_spans):
        raise MetricError(f'line count mismatch {len(hypotheses)} vs {len(references)}')
    cost = 0.0
    length = 0.0
    for hypothesis, reference, spans in zip(hypotheses, references, term_spans):
        weights = term_weights(len(reference), spans, term_weight)
        cost += ter_edit_script(hypothesis, reference, weights, shifts).cost
        length += weighted_length(weights)
    if not length:
        raise MetricError('empty reference')
    return _clamp(1.0 - cost / length)


def _clamp(value):
    return min(1.0, max(0.0, value))
