from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grassym.decomp import make_f
from grassym.errors import UsageError
from grassym.falg import AlgebraElement
from grassym.poly import Polynomial
from grassym.symmetry import (
    Permutation,
    act,
    all_permutations,
    is_antisymmetric_12,
    is_symmetric,
    symmetrize,
)

from conftest import elements

P = lambda i: Polynomial.var(i, 3)  # noqa: E731
C21 = AlgebraElement.basic_commutator(2, 1, 3)
T12 = Permutation.transposition(1, 2, 3)
T13 = Permutation.transposition(1, 3, 3)
perms3 = st.sampled_from(all_permutations(3))


def test_act_examples():
    assert act(T12, C21) == -C21
    assert act(T13, C21) == -AlgebraElement.basic_commutator(3, 2, 3)
    f = make_f((0, 1, 0))
    for xi in all_permutations(3):
        assert act(xi, f) == f


def test_act_arity_mismatch():
    with pytest.raises(UsageError):
        act(Permutation.transposition(1, 2, 2), C21)


def test_permutation_validation():
    with pytest.raises(UsageError):
        Permutation((1, 1, 2))
    c = Permutation.cycle(1, 2, 3, n=3)
    assert c.images == (2, 3, 1)
    assert c * c.inverse() == Permutation.identity(3)


def test_is_symmetric_examples():
    assert is_symmetric(make_f((0, 2, 0)))
    assert not is_symmetric(C21)
    sigma1 = AlgebraElement(3, P(1) + P(2) + P(3))
    assert is_symmetric(sigma1)


def test_symmetrize_examples():
    assert symmetrize(AlgebraElement.generator(1, 3)) == AlgebraElement(3, (P(1) + P(2) + P(3)).scale(Fraction(1, 3)))
    f120 = make_f((1, 2, 0))
    assert symmetrize(f120) == f120
    # each of the 6 images is (x_b - x_a)[x_b, x_a] for one of the three pairs,
    # every pair occurring twice: the average is f(0,1,0)/3
    g = AlgebraElement(3, None, {(2, 1): P(2) - P(1)})
    assert symmetrize(g) == make_f((0, 1, 0)).scale(Fraction(1, 3))


def test_is_antisymmetric_12_examples():
    assert is_antisymmetric_12(P(2) - P(1))
    assert not is_antisymmetric_12(P(1) * P(2))
    assert is_antisymmetric_12(P(1) * P(2) ** 2 - P(1) ** 2 * P(2))


@settings(max_examples=50, deadline=None)
@given(perms3, perms3, elements())
def test_group_action(xi, eta, f):
    assert act(xi * eta, f) == act(xi, act(eta, f))


@settings(max_examples=30, deadline=None)
@given(elements())
def test_symmetrize_projection(f):
    s = symmetrize(f)
    assert is_symmetric(s)
    assert symmetrize(s) == s


@settings(max_examples=50, deadline=None)
@given(elements())
def test_transpositions_suffice(f):
    assert is_symmetric(f) == all(act(xi, f) == f for xi in all_permutations(3))


@settings(max_examples=30, deadline=None)
@given(elements())
def test_transpositions_suffice_on_symmetric(f):
    s = symmetrize(f)
    assert all(act(xi, s) == s for xi in all_permutations(3))
