"""Test-data factories for corpus objects."""
import factory
from faker import Faker

from termtag.models.corpus import SentencePair
from termtag.models.terminology import TermEntry


class SentencePairFactory(factory.Factory):
    class Meta:
        model = SentencePair

    id = factory.Sequence(lambda n: n)
    source = factory.Faker('words', nb=8)
    target = factory.Faker('words', nb=9)


class MonolingualPairFactory(SentencePairFactory):
    target = None


class TermEntryFactory(factory.Factory):
    class Meta:
        model = TermEntry

    source_term = factory.Sequence(lambda n: (f'term{n}',))
    target_variants = factory.LazyAttribute(
        lambda entry: [(f'cible{entry.source_term[0][4:]}',)])


def random_sentence(rng, vocabulary, length):
    """Token list drawn uniformly from a vocabulary"""
    return [rng.choice(vocabulary) for _ in range(length)]


def synthetic_vocabulary(seed, size=400):
    """Distinct lowercase filler words drawn from Faker"""
    fake = Faker()
    fake.seed_instance(seed)
    words = {word.lower() for word in fake.words(nb=size * 4) if word.isalpha()}
    return sorted(words)[:size]


def synthetic_terminology(rng, vocabulary, size):
    """Terms whose first token is unique, each with one or two target variants"""
    lines = []
    for index in range(size):
        source = [f'{rng.choice(vocabulary)}{index}']
        source += rng.sample(vocabulary, rng.choice((0, 0, 1, 2)))
        for variant in range(rng.choice((1, 1, 2))):
            target = [f'terme{index}v{variant}'] + [f'x{word}' for word in source[1:]]
            lines.append(f"{' '.join(source)}\t{' '.join(target)}")
    return lines


def synthetic_corpus(rng, vocabulary, terminology, size, grounded_rate=0.3, length=(5, 12)):
    """Sentence pairs; grounded ones hold a term and one of its variants"""
    entries = [line.split('\t') for line in terminology]
    pairs = []
    for index in range(size):
        source = random_sentence(rng, vocabulary, rng.randint(*length))
        target = [f'x{word}' for word in source]
        if rng.random() < grounded_rate:
            term, variant = rng.choice(entries)
            position = rng.randint(0, len(source))
            source[position:position] = term.split()
            target[position:position] = variant.split()
        pairs.append(SentencePair(index, source, target))
    return pairs
