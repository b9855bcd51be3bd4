"""Sparse commutative polynomials over the rationals.

A polynomial in ``x1..xn`` is stored as a mapping from exponent tuples to
:class:`fractions.Fraction` coefficients. Zero coefficients are never
stored, so equal polynomials have identical term maps.

Monomials are ordered degree-lexicographically with ``x1 > x2 > ... > xn``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, UsageError

Monomial = tuple[int, ...]

MAX_VARS = 4


def deglex_key(mono: Monomial):
    """Sort key realising the degree-lexicographic order."""
    return (sum(mono), mono)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


class Polynomial:
    __slots__ = ("nvars", "_terms", "_hash")

    order_key = staticmethod(deglex_key)

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        if not 1 <= nvars <= MAX_VARS:
            raise UsageError(f"variable count must be in 1..{MAX_VARS}, got {nvars}")
        self.nvars = nvars
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                mono = tuple(mono)
                if len(mono) != nvars or any(e < 0 for e in mono):
                    raise UsageError(f"bad exponent vector {mono} for {nvars} variables")
                c = _as_fraction(c)
                if c:
                    clean[mono] = clean.get(mono, 0) + c
                    if not clean[mono]:
                        del clean[mono]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Monomial, Fraction]) -> "Polynomial":
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    # ----- constructors -----
    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.constant(1, nvars)

    @classmethod
    def var(cls, i: int, nvars: int) -> "Polynomial":
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise UsageError(f"x{i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff=1) -> "Polynomial":
        return cls(len(exponents), {tuple(exponents): coeff})

    # ----- inspection -----
    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        parts: dict[int, dict] = {}
        for m, c in self._terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {d: type(self)._raw(self.nvars, t) for d, t in sorted(parts.items())}

    def sorted_terms(self, reverse=True):
        return sorted(self._terms.items(), key=lambda mc: self.order_key(mc[0]), reverse=reverse)

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise DomainError("zero polynomial has no leading monomial")
        return max(self._terms, key=self.order_key)

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.leading_monomial()]

    # ----- arithmetic -----
    def _check(self, other: "Polynomial"):
        if type(other) is not type(self):
            raise UsageError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.nvars != self.nvars:
            raise UsageError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return type(self).constant(other, self.nvars)
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return type(self)._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return type(self)._raw(self.nvars, {})
        return type(self)._raw(self.nvars, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Monomial, Fraction] = {}
        n = self.nvars
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(m1[i] + m2[i] for i in range(n))
                terms[m] = terms.get(m, 0) + c1 * c2
        return type(self)._raw(n, {m: c for m, c in terms.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise UsageError("exponent must be a nonnegative integer")
        result = type(self).one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, mono: Monomial, coeff=1) -> "Polynomial":
        coeff = _as_fraction(coeff)
        if not coeff:
            return type(self)._raw(self.nvars, {})
        n = self.nvars
        return type(self)._raw(n, {
            tuple(m[i] + mono[i] for i in range(n)): c * coeff for m, c in self._terms.items()
        })

    def diff(self, i: int) -> "Polynomial":
        """Partial derivative with respect to ``x_i`` (1-based)."""
        k = i - 1
        terms = {}
        for m, c in self._terms.items():
            if m[k]:
                e = list(m)
                e[k] -= 1
                terms[tuple(e)] = c * m[k]
        return type(self)._raw(self.nvars, terms)

    def divide_exact(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; raises DomainError on a remainder."""
        self._check(divisor)
        if divisor.is_zero():
            raise DomainError("division by zero polynomial")
        lm = divisor.leading_monomial()
        lc = divisor._terms[lm]
        rem = self
        quot: dict[Monomial, Fraction] = {}
        n = self.nvars
        while rem:
            m = rem.leading_monomial()
            q = tuple(m[i] - lm[i] for i in range(n))
            if min(q) < 0:
                raise DomainError("polynomial is not divisible")
            c = rem._terms[m] / lc
            quot[q] = c
            rem = rem - divisor.mul_monomial(q, c)
        return type(self)._raw(n, quot)

    # ----- substitution -----
    def permute(self, images: Sequence[int]) -> "Polynomial":
        """Substitute ``x_i -> x_{images[i-1]}`` (images are 1-based)."""
        n = self.nvars
        images = tuple(images)
        if sorted(images) != list(range(1, n + 1)):
            raise UsageError(f"{images} is not a permutation of 1..{n}")
        terms = {}
        for m, c in self._terms.items():
            e = [0] * n
            for i in range(n):
                e[images[i] - 1] = m[i]
            terms[tuple(e)] = c
        return type(self)._raw(n, terms)

    def evaluate(self, values: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self._terms.items():
            t = c
            for v, e in zip(values, m):
                if e:
                    t *= Fraction(v) ** e
            total += t
        return total

    # ----- comparison -----
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = type(self).constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return type(self) is type(other) and self.nvars == other.nvars \
            and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.nvars, frozenset(self._terms.items())))
        return self._hash

    # ----- rendering -----
    variable_prefix = "x"

    def _mono_str(self, m: Monomial) -> str:
        parts = []
        for i, e in enumerate(m, start=1):
            if e == 1:
                parts.append(f"{self.variable_prefix}{i}")
            elif e > 1:
                parts.append(f"{self.variable_prefix}{i}^{e}")
        return " ".join(parts)

    def render(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            mono = self._mono_str(m)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag} {mono}"
            else:
                body = str(mag)
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"{type(self).__name__}({self.nvars}, {self.render()!r})"


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    return p * q


def permute(p: Polynomial, images: Sequence[int]) -> Polynomial:
    return p.permute(images)


def leading_monomial(p: Polynomial) -> Monomial:
    return p.leading_monomial()


def variables(nvars: int) -> list[Polynomial]:
    return [Polynomial.var(i, nvars) for i in range(1, nvars + 1)]


def monomials_of_degree(d: int, nvars: int) -> Iterable[Monomial]:
    """All exponent vectors of total degree ``d``, in descending deglex order."""
    if nvars == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(d - first, nvars - 1):
            yield (first,) + rest
