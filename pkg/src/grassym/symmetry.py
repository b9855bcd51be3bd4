"""The symmetric group acting on F_2 and F_3 by permuting generators."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

from .errors import UsageError
from .falg import AlgebraElement
from .poly import Polynomial


@dataclass(frozen=True)
class Permutation:
    """xi with ``images[i-1] = xi(i)``; acts by ``x_i -> x_{xi(i)}``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise UsageError(f"{images} is not a bijection on 1..{len(images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self o other``: apply ``other`` first."""
        if other.n != self.n:
            raise UsageError("permutations of different degree")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    __mul__ = compose

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, a: int, b: int, n: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    @classmethod
    def cycle(cls, *cycle_: int, n: int) -> "Permutation":
        images = list(range(1, n + 1))
        for k, a in enumerate(cycle_):
            images[a - 1] = cycle_[(k + 1) % len(cycle_)]
        return cls(tuple(images))


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def act(xi: Permutation, f: AlgebraElement) -> AlgebraElement:
    if xi.n != f.n:
        raise UsageError(f"arity mismatch: permutation on {xi.n}, element of arity {f.n}")
    out = AlgebraElement(f.n, f.scalar.permute(xi.images))
    for (j, i), p in f.module.items():
        out = out + AlgebraElement.basic_commutator(xi(j), xi(i), f.n).times_polynomial(
            p.permute(xi.images))
    return out


def is_symmetric(f: AlgebraElement) -> bool:
    # (12) and (1n) generate S_n
    n = f.n
    if act(Permutation.transposition(1, 2, n), f) != f:
        return False
    return n < 3 or act(Permutation.transposition(1, 3, n), f) == f


def violating_transposition(f: AlgebraElement) -> Permutation | None:
    for a, b in ((1, 2), (1, 3)):
        if b <= f.n:
            t = Permutation.transposition(a, b, f.n)
            if act(t, f) != f:
                return t
    return None


def symmetrize(f: AlgebraElement) -> AlgebraElement:
    total = AlgebraElement.zero(f.n)
    for xi in all_permutations(f.n):
        total = total + act(xi, f)
    return total.scale(Fraction(1, factorial(f.n)))


def is_antisymmetric_12(p: Polynomial) -> bool:
    swap = Permutation.transposition(1, 2, p.nvars)
    return p.permute(swap.images) == -p


def symmetrize_polynomial(p: Polynomial) -> Polynomial:
    total = Polynomial.zero(p.nvars)
    for xi in all_permutations(p.nvars):
        total = total + p.permute(xi.images)
    return total.scale(Fraction(1, factorial(p.nvars)))


def is_symmetric_polynomial(p: Polynomial) -> bool:
    n = p.nvars
    return all(p.permute(Permutation.transposition(1, b, n).images) == p
               for b in range(2, n + 1))
