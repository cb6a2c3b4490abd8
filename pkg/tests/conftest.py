from contextlib import contextmanager
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

primes = st.sampled_from([2, 3, 5, 7])


@st.composite
def rationals(draw, max_num=200, max_den=60):
    num = draw(st.integers(-max_num, max_num))
    den = draw(st.integers(1, max_den))
    return Fraction(num, den)


@st.composite
def nonzero_rationals(draw, max_num=200, max_den=60):
    x = draw(rationals(max_num, max_den))
    return x if x != 0 else Fraction(1)


_ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE_KEY] = []


@pytest.fixture
def criterion(request):
    log = request.config.stash[_ACCEPTANCE_KEY]

    @contextmanager
    def run(label):
        try:
            yield
        except BaseException:
            log.append(f"FAIL  {label}")
            raise
        log.append(f"PASS  {label}")

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
