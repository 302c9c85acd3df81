import pytest
from click.testing import CliRunner

from termtag import create_cli
from termtag.models.record import ConstraintSpan
from termtag.models.terminology import load_terminology


class TestConfig:
    """Test configuration"""
    __test__ = False
    SEED = 1234
    ANNOTATION_RATE = 1.0
    WORKERS = 1
    BATCH_SIZE = 7
    TERM_WEIGHT = 2.0
    WINDOW_SIZES = [2, 3]


SARS_SOURCE = ('since COVID-19 shows similarities to SARS-CoV and MERS-CoV , it is likely '
                  'that their effect on pregnancy are similar .')
SARS_TADA = ('since COVID-19 shows similarities to <S> SARS-CoV <C> SARS-CoV </C> and '
                'MERS-CoV , it is likely that their effect on pregnancy are similar .')
SARS_MASK = ('since COVID-19 shows similarities to <S> MASK <C> SARS-CoV </C> and '
                'MERS-CoV , it is likely that their effect on pregnancy are similar .')

VACCINE_SOURCE = ('the Canadian government announced CA $ 275 million in funding for 96 '
                  'research projects on medical countermeasures against COVID-19 , including '
                  'numerous vaccine candidates at Canadian universities , with plans to '
                  'establish a " vaccine bank " of new vaccines for implementation if another '
                  'Coronavirus outbreak occurs .')
VACCINE_TADA = ('the Canadian government announced CA $ 275 million in funding for 96 '
                'research projects on medical countermeasures against COVID-19 , including '
                'numerous <S> vaccine <C> vaccin </C> candidates at Canadian universities , '
                'with plans to establish a " <S> vaccine <C> vaccin </C> bank " of new '
                '<S> vaccines <C> vaccins </C> for implementation if another '
                '<S> Coronavirus outbreak <C> épidémie de coronavirus </C> occurs .')
VACCINE_MASK = ('the Canadian government announced CA $ 275 million in funding for 96 '
                'research projects on medical countermeasures against COVID-19 , including '
                'numerous <S> MASK <C> vaccin </C> candidates at Canadian universities , '
                'with plans to establish a " <S> MASK <C> vaccin </C> bank " of new '
                '<S> MASK <C> vaccins </C> for implementation if another '
                '<S> MASK MASK <C> épidémie de coronavirus </C> occurs .')
VACCINE_TERMINOLOGY = ('vaccine\tvaccin\n'
                       'vaccines\tvaccins\n'
                       'Coronavirus outbreak\tépidémie de coronavirus\n')


def span_at(tokens, source_term, chosen_target, occurrence=0):
    """Constraint span for the n-th occurrence of a source term"""
    source = source_term.split()
    starts = [index for index in range(len(tokens) - len(source) + 1)
              if list(tokens[index:index + len(source)]) == source]
    start = starts[occurrence]
    return ConstraintSpan(start, start + len(source), source, chosen_target.split())


@pytest.fixture
def sars_tokens():
    """Source with one term, pre-tokenized"""
    return SARS_SOURCE.split()


@pytest.fixture
def sars_constraints(sars_tokens):
    return [span_at(sars_tokens, 'SARS-CoV', 'SARS-CoV')]


@pytest.fixture
def vaccine_tokens():
    """Source with four terms, pre-tokenized"""
    return VACCINE_SOURCE.split()


@pytest.fixture
def vaccine_constraints(vaccine_tokens):
    return [
        span_at(vaccine_tokens, 'vaccine', 'vaccin', 0),
        span_at(vaccine_tokens, 'vaccine', 'vaccin', 1),
        span_at(vaccine_tokens, 'vaccines', 'vaccins'),
        span_at(vaccine_tokens, 'Coronavirus outbreak', 'épidémie de coronavirus'),
    ]


@pytest.fixture
def vaccine_terminology():
    return load_terminology(VACCINE_TERMINOLOGY.splitlines(keepends=True))


@pytest.fixture
def runner():
    """Click test runner with a separate diagnostic stream"""
    return CliRunner()


@pytest.fixture
def cli():
    return create_cli()


@pytest.fixture
def write_file(tmp_path):
    """Write UTF-8 text under the test's temp dir and return its path"""
    def _write(name, content):
        path = tmp_path / name
        path.write_text(content, encoding='utf-8')
        return str(path)
    return _write
