import os
import random
import time

import pytest

from termtag.augment import annotate_corpus
from termtag.matching import PolicyKind, ResolutionPolicy, build_matcher
from termtag.models.terminology import load_terminology
from tests.conftest import TestConfig
from tests.factories import synthetic_corpus, synthetic_terminology, synthetic_vocabulary

pytestmark = pytest.mark.skipif(os.environ.get('TERMTAG_BENCHMARK') != 'true',
                                reason='set TERMTAG_BENCHMARK=true to run throughput checks')


@pytest.fixture(scope='module')
def workload():
    rng = random.Random(TestConfig.SEED)
    vocabulary = synthetic_vocabulary(TestConfig.SEED)
    lines = synthetic_terminology(rng, vocabulary, 1000)
    pairs = synthetic_corpus(rng, vocabulary, lines, 1_000_000)
    return build_matcher(load_terminology(lines)), pairs


def timed_annotation(matcher, pairs):
    policy = ResolutionPolicy(PolicyKind.TEST_RANDOM, TestConfig.SEED)
    started = time.perf_counter()
    annotate_corpus(pairs, matcher, 'tada', policy, rate=0.1, seed=TestConfig.SEED)
    return time.perf_counter() - started


class TestThroughput:
    """Test annotation speed on a large synthetic corpus"""

    def test_million_sentences(self, workload):
        """Test a million sentences against a thousand terms within a minute"""
        matcher, pairs = workload
        assert timed_annotation(matcher, pairs) < 60

    def test_near_linear_scaling(self, workload):
        """Test doubling the corpus roughly doubles the runtime"""
        matcher, pairs = workload
        half = timed_annotation(matcher, pairs[:250_000])
        full = timed_annotation(matcher, pairs[:500_000])
        assert 1.6 <= full / half <= 2.6
