import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from grassym.falg import AlgebraElement, commutator_indices
from grassym.poly import Polynomial


def random_polynomial(rng: random.Random, nvars: int, max_degree: int, max_terms: int = 4,
                      min_degree: int = 0) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        d = rng.randint(min_degree, max_degree)
        cuts = sorted(rng.randint(0, d) for _ in range(nvars - 1))
        exps = [b - a for a, b in zip([0] + cuts, cuts + [d])]
        terms[tuple(exps)] = Fraction(rng.randint(-5, 5), rng.choice([1, 1, 1, 2, 3]))
    return Polynomial(nvars, terms)


def random_element(rng: random.Random, n: int, max_degree: int, scalar: bool = True,
                   max_terms: int = 3) -> AlgebraElement:
    s = random_polynomial(rng, n, max_degree, max_terms) if scalar else None
    module = {k: random_polynomial(rng, n, max_degree - 2, max_terms)
              for k in commutator_indices(n)} if max_degree >= 2 else {}
    return AlgebraElement(n, s, module)


@st.composite
def polynomials(draw, nvars=3, max_degree=4, max_terms=4):
    n_terms = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n_terms):
        exps = tuple(draw(st.lists(st.integers(0, max_degree), min_size=nvars, max_size=nvars)))
        terms[exps] = Fraction(draw(st.integers(-4, 4)), draw(st.integers(1, 3)))
    return Polynomial(nvars, terms)


@st.composite
def elements(draw, n=3, max_degree=3, scalar=True):
    s = draw(polynomials(n, max_degree, 3)) if scalar else Polynomial.zero(n)
    module = {k: draw(polynomials(n, max(max_degree - 2, 0), 2)) for k in commutator_indices(n)}
    return AlgebraElement(n, s, module)


# ----- acceptance summary: one PASS/FAIL line per criterion -----

_CRITERIA = []


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    _CRITERIA.append((number, title, call.excinfo is None))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(_CRITERIA):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}")


@pytest.fixture
def rng():
    return random.Random(20261016)
