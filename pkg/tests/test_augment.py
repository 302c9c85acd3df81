import random

import pytest

from termtag.augment import (
    DEFAULT_SCHEME,
    AnnotationScheme,
    annotate_corpus,
    annotation_budget,
    render_mask,
    render_record,
    render_tada,
    sample_for_annotation,
    strip_annotation,
)
from termtag.errors import AnnotationError, ReservedSymbolError
from termtag.matching import (
    PolicyKind,
    ResolutionPolicy,
    build_matcher,
    find_spans,
    resolve_targets,
)
from termtag.models.corpus import SentencePair
from termtag.models.record import ConstraintSpan, Mode
from termtag.models.terminology import load_terminology
from tests.conftest import (
    SARS_MASK,
    SARS_SOURCE,
    SARS_TADA,
    VACCINE_MASK,
    VACCINE_SOURCE,
    VACCINE_TADA,
)
from tests.factories import random_sentence

VOCABULARY = ['the', 'vaccine', 'virus', 'is', 'safe', 'new', 'york', 'city', ',', '.', 'a']


def random_constraints(rng, tokens):
    constraints = []
    position = 0
    while position < len(tokens) and rng.random() < 0.8:
        start = rng.randint(position, len(tokens) - 1)
        end = rng.randint(start + 1, min(len(tokens), start + 4))
        target = random_sentence(rng, VOCABULARY, rng.randint(1, 4))
        constraints.append(ConstraintSpan(start, end, tokens[start:end], target))
        position = end
    return constraints


class TestRender:
    """Test TADA and MASK rendering"""

    def test_sars_tada(self, sars_tokens, sars_constraints):
        """Test the single-term TADA row"""
        assert ' '.join(render_tada(sars_tokens, sars_constraints)) == SARS_TADA

    def test_sars_mask(self, sars_tokens, sars_constraints):
        """Test the single-term MASK row"""
        assert ' '.join(render_mask(sars_tokens, sars_constraints)) == SARS_MASK

    def test_vaccine_tada(self, vaccine_tokens, vaccine_constraints):
        """Test the four-term TADA row with its four constraints"""
        assert ' '.join(render_tada(vaccine_tokens, vaccine_constraints)) == VACCINE_TADA

    def test_vaccine_mask(self, vaccine_tokens, vaccine_constraints):
        """Test a two-token term becomes a two-token mask run"""
        rendered = ' '.join(render_mask(vaccine_tokens, vaccine_constraints))
        assert rendered == VACCINE_MASK
        assert '<S> MASK MASK <C> épidémie de coronavirus </C>' in rendered

    def test_no_constraints(self, sars_tokens):
        """Test rendering without constraints leaves tokens unchanged"""
        assert render_tada(sars_tokens, []) == sars_tokens
        assert render_mask(sars_tokens, []) == sars_tokens

    def test_overlapping_spans(self):
        """Test overlapping spans are rejected"""
        tokens = ['a', 'b', 'c']
        spans = [ConstraintSpan(0, 2, ['a', 'b'], ['x']), ConstraintSpan(1, 3, ['b', 'c'], ['y'])]
        with pytest.raises(AnnotationError, match='overlapping'):
            render_tada(tokens, spans)

    def test_span_out_of_bounds(self):
        """Test a span past the sentence end"""
        with pytest.raises(AnnotationError):
            render_mask(['a'], [ConstraintSpan(1, 2, ['b'], ['x'])])

    def test_reserved_symbol_in_sentence(self):
        """Test a tag already present in the sentence"""
        with pytest.raises(ReservedSymbolError, match='reserved symbol collision'):
            render_tada(['a', 'MASK', 'b'], [ConstraintSpan(0, 1, ['a'], ['x'])])

    def test_reserved_symbol_in_target(self):
        """Test a tag inside a target term"""
        with pytest.raises(ReservedSymbolError, match='reserved symbol collision'):
            render_tada(['a', 'b'], [ConstraintSpan(0, 1, ['a'], ['</C>'])])

    def test_scheme_symbols_distinct(self):
        """Test a scheme cannot reuse one symbol twice"""
        with pytest.raises(AnnotationError):
            AnnotationScheme(open_src_tag='<C>')

    def test_custom_scheme(self):
        """Test rendering with other tag symbols"""
        scheme = AnnotationScheme('[s]', '[c]', '[/c]', '[m]')
        rendered = render_mask(['a', 'b'], [ConstraintSpan(1, 2, ['b'], ['x'])], scheme)
        assert rendered == ['a', '[s]', '[m]', '[c]', 'x', '[/c]']
        assert strip_annotation(rendered, scheme).mode is Mode.MASK


class TestStrip:
    """Test removing annotation"""

    def test_sars_tada(self, sars_tokens):
        """Test stripping the single-term TADA row"""
        stripped = strip_annotation(SARS_TADA.split())
        assert stripped.mode is Mode.TADA
        assert list(stripped.tokens) == sars_tokens
        (constraint,) = stripped.constraints
        assert (constraint.source, constraint.target) == (('SARS-CoV',), ('SARS-CoV',))
        assert (constraint.start, constraint.end) == (5, 6)

    def test_vaccine_mask_runs(self):
        """Test mask run lengths are recovered"""
        stripped = strip_annotation(VACCINE_MASK.split())
        assert stripped.mode is Mode.MASK
        assert [constraint.mask_run for constraint in stripped.constraints] == [1, 1, 1, 2]

    def test_plain(self):
        """Test a sentence without tags"""
        stripped = strip_annotation(['a', 'b'])
        assert (stripped.mode, stripped.tokens, stripped.constraints) == \
            (Mode.PLAIN, ('a', 'b'), ())

    @pytest.mark.parametrize('line,index', [
        ('a <C> b </C>', 1),
        ('a </C>', 1),
        ('<S> a <S> b <C> c </C>', 2),
        ('<S> a <C> b <C> c </C>', 4),
        ('<S> <C> b </C>', 1),
        ('<S> a <C> </C>', 3),
    ])
    def test_malformed_names_token_index(self, line, index):
        """Test dangling or misnested tags name the offending token"""
        with pytest.raises(AnnotationError, match=f'token {index}'):
            strip_annotation(line.split())

    def test_unterminated(self):
        """Test an annotation left open at the end"""
        with pytest.raises(AnnotationError, match='unterminated'):
            strip_annotation('a <S> b <C> c'.split())

    def test_mixed_modes(self):
        """Test masked and unmasked spans in one sentence"""
        with pytest.raises(AnnotationError, match='mixes'):
            strip_annotation('<S> a <C> x </C> <S> MASK <C> y </C>'.split())

    def test_partial_mask(self):
        """Test a source side that is only partly masked"""
        with pytest.raises(AnnotationError, match='partially masked'):
            strip_annotation('<S> MASK a <C> x </C>'.split())

    def test_round_trip_random(self):
        """Test strip inverts both renderings on random cases"""
        rng = random.Random(10000)
        for _ in range(10000):
            tokens = random_sentence(rng, VOCABULARY, rng.randint(1, 20))
            constraints = random_constraints(rng, tokens)

            tada = render_tada(tokens, constraints)
            stripped = strip_annotation(tada)
            assert list(stripped.tokens) == tokens
            assert [(c.start, c.end, c.source, c.target) for c in stripped.constraints] == \
                [(s.start, s.end, s.source_term, s.chosen_target) for s in constraints]

            mask = render_mask(tokens, constraints)
            stripped = strip_annotation(mask)
            assert [c.mask_run for c in stripped.constraints] == [len(s) for s in constraints]
            assert [c.target for c in stripped.constraints] == \
                [s.chosen_target for s in constraints]

            reserved = DEFAULT_SCHEME
            for rendered in (tada, mask):
                assert rendered.count(reserved.open_src_tag) == len(constraints)
                assert rendered.count(reserved.open_tgt_tag) == len(constraints)
                assert rendered.count(reserved.close_tgt_tag) == len(constraints)

            masked_tada = list(tada)
            offset = 0
            for span in constraints:
                begin = span.start + offset + 1
                masked_tada[begin:begin + len(span)] = ['MASK'] * len(span)
                offset += 3 + len(span.chosen_target)
            assert masked_tada == mask


class TestSampling:
    """Test the annotation budget and sampling"""

    def test_budget_of_ten_percent(self):
        """Test 10% of 1000 sentences from 400 grounded"""
        grounded = list(range(0, 1000, 2))[:400]
        selected = sample_for_annotation(1000, grounded, 0.1, 1234)
        assert len(selected) == 100
        assert selected <= set(grounded)

    def test_rate_zero(self):
        """Test no sentence is selected at rate 0"""
        assert sample_for_annotation(1000, range(400), 0.0, 1) == frozenset()

    def test_budget_capped_by_grounded(self):
        """Test the budget never exceeds the grounded count"""
        assert len(sample_for_annotation(100, range(5), 1.0, 1)) == 5

    def test_seeded(self):
        """Test equal seeds agree and different seeds differ"""
        first = sample_for_annotation(1000, range(400), 0.1, 7)
        assert first == sample_for_annotation(1000, range(400), 0.1, 7)
        assert first != sample_for_annotation(1000, range(400), 0.1, 8)

    def test_rate_out_of_range(self):
        """Test rates outside [0, 1]"""
        with pytest.raises(AnnotationError):
            sample_for_annotation(10, range(5), 1.5, 1)

    def test_budget_exact_decimal(self):
        """Test the floor is taken on the decimal rate"""
        assert annotation_budget(1000, 0.1) == 100
        assert annotation_budget(10, 0.3) == 3


class TestAnnotateCorpus:
    """Test the match, resolve, sample and render pipeline"""

    def test_sars_tada(self):
        """Test the single-term pair at rate 1"""
        terminology = load_terminology(['SARS-CoV\tSARS-CoV'])
        pair = SentencePair(0, SARS_SOURCE.split(), 'le SARS-CoV et le MERS-CoV'.split())
        (record,) = annotate_corpus([pair], terminology, Mode.TADA, rate=1.0)
        assert ' '.join(record.annotated_source) == SARS_TADA
        assert record.mode is Mode.TADA

    def test_sars_mask(self):
        """Test the single-term pair in mask mode"""
        terminology = load_terminology(['SARS-CoV\tSARS-CoV'])
        pair = SentencePair(0, SARS_SOURCE.split(), ['SARS-CoV'])
        (record,) = annotate_corpus([pair], terminology, 'mask', rate=1.0)
        assert ' '.join(record.annotated_source) == SARS_MASK

    def test_vaccine_test_policy(self, vaccine_terminology):
        """Test the four-term rows with random variant choice"""
        pair = SentencePair(0, VACCINE_SOURCE.split())
        policy = ResolutionPolicy(PolicyKind.TEST_RANDOM, 1234)
        (tada,) = annotate_corpus([pair], vaccine_terminology, Mode.TADA, policy, rate=1.0)
        (mask,) = annotate_corpus([pair], vaccine_terminology, Mode.MASK, policy, rate=1.0)
        assert ' '.join(tada.annotated_source) == VACCINE_TADA
        assert ' '.join(mask.annotated_source) == VACCINE_MASK

    def test_terminology_free_corpus(self):
        """Test a corpus without terms stays plain"""
        terminology = load_terminology(['vaccine\tvaccin'])
        pairs = [SentencePair(index, ['le', 'produit'], ['x']) for index in range(10)]
        records = annotate_corpus(pairs, terminology, Mode.TADA, rate=1.0)
        assert all(record.mode is Mode.PLAIN for record in records)
        assert [record.annotated_source for record in records] == [p.source for p in pairs]

    def test_annotated_fraction(self):
        """Test exactly the budgeted number of records is annotated"""
        terminology = load_terminology(['vaccine\tvaccin'])
        pairs = [SentencePair(index, ['a', 'vaccine' if index % 5 < 2 else 'b'], ['vaccin'])
                 for index in range(1000)]
        records = annotate_corpus(pairs, terminology, Mode.MASK, rate=0.1, seed=1234)
        annotated = [record for record in records if record.mode is not Mode.PLAIN]
        assert len(annotated) == 100
        assert [record.id for record in records] == list(range(1000))

    def test_composition_oracle(self):
        """Test the pipeline equals hand-composed match, resolve and render"""
        rng = random.Random(31)
        terminology = load_terminology(['vaccine\tvaccin', 'new york\tnew york',
                                        'virus\tvirus', 'virus\tvirion'])
        pairs = [SentencePair(index, random_sentence(rng, VOCABULARY, rng.randint(1, 12)))
                 for index in range(100)]
        policy = ResolutionPolicy(PolicyKind.TEST_RANDOM, 77)
        records = annotate_corpus(pairs, terminology, Mode.TADA, policy, rate=1.0, seed=77)

        matcher = build_matcher(terminology)
        for pair, record in zip(pairs, records):
            spans = find_spans(pair.source, matcher)
            expected = resolve_targets(spans, pair.source, None, policy,
                                       rng=policy.rng_for(pair.id))
            assert record == render_record(pair, expected, Mode.TADA)

    def test_worker_count_does_not_change_output(self):
        """Test parallel matching keeps input order and choices"""
        rng = random.Random(8)
        terminology = load_terminology(['vaccine\tvaccin', 'virus\tvirus', 'virus\tvirion'])
        pairs = [SentencePair(index, random_sentence(rng, VOCABULARY, 10))
                 for index in range(300)]
        policy = ResolutionPolicy(PolicyKind.TEST_RANDOM, 3)
        sequential = annotate_corpus(pairs, terminology, Mode.MASK, policy, rate=0.5)
        parallel = annotate_corpus(pairs, terminology, Mode.MASK, policy, rate=0.5,
                                   workers=3, batch_size=17)
        assert parallel == sequential

    def test_train_policy_needs_reference(self):
        """Test reference-match resolution on a source-only corpus"""
        terminology = load_terminology(['vaccine\tvaccin'])
        with pytest.raises(AnnotationError, match='no reference'):
            annotate_corpus([SentencePair(0, ['vaccine'])], terminology, Mode.TADA)

    def test_plain_mode_rejected(self):
        """Test annotation needs tada or mask"""
        terminology = load_terminology(['vaccine\tvaccin'])
        with pytest.raises(AnnotationError):
            annotate_corpus([SentencePair(0, ['vaccine'], ['vaccin'])], terminology, 'plain')

    def test_reserved_symbol_in_corpus(self):
        """Test a corpus token that collides with a tag"""
        terminology = load_terminology(['vaccine\tvaccin'])
        with pytest.raises(ReservedSymbolError, match='sentence 0'):
            annotate_corpus([SentencePair(0, ['<S>', 'b'], ['x'])], terminology, Mode.TADA)

    def test_reserved_symbol_in_parallel_corpus(self):
        """Test a collision found by a worker keeps its one-line message"""
        terminology = load_terminology(['vaccine\tvaccin'])
        pairs = [SentencePair(0, ['a', 'b'], ['x']), SentencePair(1, ['a', '<S>'], ['x'])]
        with pytest.raises(ReservedSymbolError) as sequential:
            annotate_corpus(pairs, terminology, Mode.TADA)
        with pytest.raises(ReservedSymbolError) as parallel:
            annotate_corpus(pairs, terminology, Mode.TADA, workers=2, batch_size=1)
        assert str(parallel.value) == str(sequential.value)
        assert str(parallel.value) == "reserved symbol collision: '<S>' at token 1 of sentence 1"
