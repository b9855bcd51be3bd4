from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grassym import oracle
from grassym.errors import UsageError
from grassym.falg import (
    AlgebraElement,
    bracket,
    equals,
    lift_to_words,
    monomial_bracket,
    mul,
    normalize_word,
    normalize_words,
)
from grassym.poly import Polynomial

from conftest import elements

P = lambda i: Polynomial.var(i, 3)  # noqa: E731
X1, X2, X3 = (AlgebraElement.generator(i, 3) for i in (1, 2, 3))
C21 = AlgebraElement.basic_commutator(2, 1, 3)
C31 = AlgebraElement.basic_commutator(3, 1, 3)
C32 = AlgebraElement.basic_commutator(3, 2, 3)


@pytest.fixture(scope="module")
def T3():
    return oracle.build(3, 5)


def test_normalize_word_examples():
    f = normalize_word((2, 1), 3)
    assert f.scalar == P(1) * P(2) and f.module == {(2, 1): Polynomial.one(3)}
    f = normalize_word((1, 2), 3)
    assert f.scalar == P(1) * P(2) and f.module == {}
    f = normalize_word((3, 2, 1), 3)
    assert f.scalar == P(1) * P(2) * P(3)
    assert f.module == {(2, 1): P(3), (3, 1): P(2), (3, 2): P(1)}


def test_normalize_word_agrees_with_oracle(T3):
    # x3 x2 x1 and its normal form are the same element of the quotient
    assert oracle.oracle_equal({(3, 2, 1): 1}, normalize_word((3, 2, 1), 3), T3)
    for w in product((1, 2, 3), repeat=4):
        assert oracle.oracle_equal({w: 1}, normalize_word(w, 3), T3)


def test_normalize_word_range():
    with pytest.raises(UsageError):
        normalize_word((1, 4), 3)
    with pytest.raises(UsageError):
        normalize_word((1,), 4)


def test_mul_examples():
    assert X1 * C21 == C21 * X1 == AlgebraElement(3, None, {(2, 1): P(1)})
    assert (C21 * C32).is_zero()
    assert X2 * X1 == normalize_word((2, 1), 3)


def test_bracket_examples():
    assert bracket(X2, X1) == C21
    u = X1 * X1 + C31 * X2
    assert bracket(u, u).is_zero()
    got = bracket(X1 * X1, X2)
    assert got == AlgebraElement(3, None, {(2, 1): -2 * P(1)})
    # independently: normalize the two words x1 x1 x2 and x2 x1 x1
    assert got == normalize_word((1, 1, 2), 3) - normalize_word((2, 1, 1), 3)
    assert bracket(X1, X1).scalar.is_zero()


def test_monomial_bracket_examples():
    assert monomial_bracket((0, 1, 0), (1, 0, 0)) == C21
    assert monomial_bracket((2, 0, 0), (0, 1, 0)) == bracket(X1 * X1, X2)
    assert monomial_bracket((1, 1, 0), (1, 1, 0)).is_zero()


@settings(max_examples=80, deadline=None)
@given(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
       st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)))
def test_monomial_bracket_matches_bracket(a, b):
    u = AlgebraElement(3, Polynomial.monomial(a))
    v = AlgebraElement(3, Polynomial.monomial(b))
    assert monomial_bracket(a, b) == bracket(u, v)


def test_equals_examples():
    assert equals(normalize_word((2, 1), 3), X1 * X2 + bracket(X2, X1))
    assert not equals(C21, bracket(X1, X2))
    assert equals(AlgebraElement.zero(3), mul(C21, C31))
    with pytest.raises(UsageError):
        equals(C21, AlgebraElement.generator(1, 2))


def test_arity_mismatch():
    with pytest.raises(UsageError):
        mul(X1, AlgebraElement.generator(1, 2))
    with pytest.raises(UsageError):
        AlgebraElement.generator(1, 4)


def test_n2_has_single_commutator():
    with pytest.raises(UsageError):
        AlgebraElement(2, None, {(3, 1): Polynomial.one(2)})


def test_left_module_well_defined():
    for w in (C21, C31, C32, X1 * C32 + C21):
        results = {normalize_words({p: 1}, 3) * w for p in
                   [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]}
        assert len(results) == 1


def test_bracket_products_vanish():
    gens = [X1, X2, X3]
    for z in product(gens, repeat=4):
        lhs = bracket(z[0], z[1]) * bracket(z[2], z[3])
        rhs = -(bracket(z[0], z[2]) * bracket(z[1], z[3]))
        assert lhs == rhs
        assert lhs.is_zero()


@settings(max_examples=60, deadline=None)
@given(elements(), elements(), elements())
def test_grassmann_identity_and_associativity(u, v, w):
    assert bracket(bracket(u, v), w).is_zero()
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w
    assert (u + v) * w == u * w + v * w


@settings(max_examples=60, deadline=None)
@given(elements(scalar=False), elements(scalar=False))
def test_module_annihilation(u, v):
    assert (u * v).is_zero()


@settings(max_examples=40, deadline=None)
@given(elements())
def test_lift_round_trip(f):
    assert normalize_words(lift_to_words(f), 3) == f


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=0, max_size=7))
def test_normalize_word_equals_letter_product(word):
    expected = AlgebraElement.one(3)
    for a in word:
        expected = expected * AlgebraElement.generator(a, 3)
    assert normalize_word(tuple(word), 3) == expected


def test_render():
    assert str(normalize_word((3, 2, 1), 3)) == "x1 x2 x3 + x3[x2,x1] + x2[x3,x1] + x1[x3,x2]"
    assert str(-C21) == "-[x2,x1]"
    assert str(AlgebraElement.zero(3)) == "0"
