"""Symmetric polynomials: elementary symmetric polynomials, power sums and
the expression of a symmetric polynomial in the elementary ones.

:class:`SigmaPolynomial` is a polynomial in abstract indeterminates
``sigma1, sigma2, sigma3`` (or ``e1, e2`` in two variables) kept separate
from its expansion in the ``x_i``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .errors import ConsistencyError, DomainError, UsageError
from .poly import Monomial, Polynomial
from .symmetry import Permutation


def weighted_key(mono: Monomial):
    # sigma_k has degree k in the x variables
    return (sum(k * e for k, e in enumerate(mono, start=1)), mono)


class SigmaPolynomial(Polynomial):
    __slots__ = ()

    order_key = staticmethod(weighted_key)

    def _mono_str(self, m: Monomial) -> str:
        name = "sigma" if self.nvars == 3 else "e"
        parts = []
        for k, e in enumerate(m, start=1):
            if e == 1:
                parts.append(f"{name}{k}")
            elif e > 1:
                parts.append(f"{name}{k}^{e}")
        return " ".join(parts)

    @classmethod
    def elementary(cls, k: int, n: int = 3) -> "SigmaPolynomial":
        """The indeterminate sigma_k itself."""
        e = [0] * n
        e[k - 1] = 1
        return cls(n, {tuple(e): 1})

    def weighted_degree(self) -> int:
        return max((weighted_key(m)[0] for m in self._terms), default=-1)

    def weighted_components(self) -> dict[int, "SigmaPolynomial"]:
        parts: dict[int, dict] = {}
        for m, c in self._terms.items():
            parts.setdefault(weighted_key(m)[0], {})[m] = c
        return {d: SigmaPolynomial._raw(self.nvars, t) for d, t in sorted(parts.items())}


def sigma_monomials(weight: int, n: int = 3) -> list[Monomial]:
    """Exponent vectors ``(i, j[, k])`` with ``i + 2j (+ 3k) = weight``, ascending."""
    out = []
    if n == 2:
        for j in range(weight // 2 + 1):
            out.append((weight - 2 * j, j))
    elif n == 3:
        for k in range(weight // 3 + 1):
            for j in range((weight - 3 * k) // 2 + 1):
                out.append((weight - 3 * k - 2 * j, j, k))
    else:
        raise UsageError("only 2 or 3 elementary indeterminates supported")
    return sorted(out, key=weighted_key)


@lru_cache(maxsize=None)
def elementary(k: int, n: int = 3) -> Polynomial:
    """sigma_k as an explicit polynomial in x_1..x_n."""
    if not 1 <= k <= n:
        raise UsageError(f"sigma{k} undefined in {n} variables")
    terms = {}
    for idx in combinations(range(n), k):
        e = [0] * n
        for i in idx:
            e[i] = 1
        terms[tuple(e)] = 1
    return Polynomial(n, terms)


@lru_cache(maxsize=None)
def power_sum(k: int, n: int = 3) -> Polynomial:
    """nu_k = x_1^k + ... + x_n^k."""
    if not isinstance(k, int) or k < 1:
        raise UsageError(f"power sum index must be >= 1, got {k}")
    terms = {}
    for i in range(n):
        e = [0] * n
        e[i] = k
        terms[tuple(e)] = 1
    return Polynomial(n, terms)


@lru_cache(maxsize=None)
def power_sum_sigma(k: int, n: int = 3) -> SigmaPolynomial:
    """nu_k written in the sigmas via Newton's identities."""
    if k < 1:
        raise UsageError(f"power sum index must be >= 1, got {k}")
    s = [None] + [SigmaPolynomial.elementary(i, n) for i in range(1, n + 1)]
    # nu_k = sum_{i=1}^{min(k-1,n)} (-1)^(i-1) sigma_i nu_{k-i} + (-1)^(k-1) k sigma_k [k <= n]
    total = SigmaPolynomial.zero(n)
    for i in range(1, min(k - 1, n) + 1):
        term = s[i] * power_sum_sigma(k - i, n)
        total = total + term if i % 2 else total - term
    if k <= n:
        term = s[k] * k
        total = total + term if k % 2 else total - term
    return total


@lru_cache(maxsize=None)
def _elementary_power(k: int, e: int, n: int) -> Polynomial:
    return elementary(k, n) ** e


@lru_cache(maxsize=4096)
def _eval_monomial(mono: Monomial) -> Polynomial:
    n = len(mono)
    out = Polynomial.one(n)
    for k, e in enumerate(mono, start=1):
        if e:
            out = out * _elementary_power(k, e, n)
    return out


def eval_sigma(g: SigmaPolynomial) -> Polynomial:
    """Substitute the explicit elementary symmetric polynomials and expand."""
    out = Polynomial.zero(g.nvars)
    for m, c in g.items():
        out = out + _eval_monomial(m).scale(c)
    return out


def decompose_symmetric(p: Polynomial) -> SigmaPolynomial:
    """The unique g with ``eval_sigma(g) == p`` for a symmetric polynomial p.

    Leading-term reduction: the deglex leading exponent (a1 >= a2 >= ...) of a
    symmetric polynomial is matched by sigma1^(a1-a2) sigma2^(a2-a3) ... .
    """
    n = p.nvars
    if n not in (2, 3):
        raise UsageError("decompose_symmetric supports 2 or 3 variables")
    for b in range(2, n + 1):
        t = Permutation.transposition(1, b, n)
        if p.permute(t.images) != p:
            raise DomainError(f"polynomial is not symmetric: not fixed by transposition (1{b})")
    terms: dict[Monomial, object] = {}
    rem = p
    while rem:
        lead = rem.leading_monomial()
        if any(lead[i] < lead[i + 1] for i in range(n - 1)):
            raise ConsistencyError(f"leading exponent {lead} of a symmetric polynomial is not weakly decreasing")
        sig = tuple(lead[i] - lead[i + 1] for i in range(n - 1)) + (lead[-1],)
        c = rem.coefficient(lead)
        terms[sig] = c
        rem = rem - _eval_monomial(sig).scale(c)
    return SigmaPolynomial(n, terms)
