import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from ldiag.kernel import Coeff, Lin, Monomial, Word  # noqa: E402

_CRITERIA: list = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _CRITERIA.append((marker.args[0], marker.args[1], rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, duration in sorted(_CRITERIA):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number:>2}: {title} ({duration:.1f} s)")


# -- conversions to the oracle representation -------------------------------

def as_tuple(w: Word) -> tuple:
    return tuple(m.exps for m in w.letters)


def from_tuple(t: tuple) -> Word:
    return Word(Monomial(e) for e in t)


def lin_to_counter(v: Lin) -> dict:
    """Integer-coefficient Lin as ``{tuple_word: int}``; fails on symbolic coefficients."""
    out = {}
    for w, c in v.items():
        assert c.is_constant(), f"symbolic coefficient {c} on {w}"
        out[as_tuple(w)] = c.constant()
    return out


def counter_clean(c) -> dict:
    return {k: v for k, v in c.items() if v}


# -- hypothesis strategies ------------------------------------------------

coeffs = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-4, 4), max_size=4
).map(Coeff)

monomials = st.dictionaries(st.integers(1, 4), st.integers(1, 3), min_size=1, max_size=3).map(Monomial)

words = st.lists(monomials, max_size=3).map(Word)

small_words = st.lists(
    st.dictionaries(st.integers(1, 3), st.integers(1, 2), min_size=1, max_size=2).map(Monomial),
    max_size=2,
).map(Word)


@st.composite
def code_words(draw, max_letters=3):
    w = draw(st.lists(monomials, min_size=0, max_size=max_letters).map(Word))
    idx = sorted(w.indices())
    relabel = {old: new for new, old in enumerate(idx, start=1)}
    return Word(Monomial({relabel[v]: e for v, e in m.exps}) for m in w.letters)


letter_words = st.lists(st.integers(1, 3), max_size=3).map(lambda js: Word(Monomial({j: 1}) for j in js))
