"""Symmetric elements of the commutator ideal of F_3 (and F_2).

Every symmetric element of F_3' is a combination, with coefficients that are
polynomials in sigma1, sigma2, sigma3, of the elements

    f(a,b,c) = (x1^a x2^b - x1^b x2^a) x3^c [x2,x1]
             + (x1^a x3^b - x1^b x3^a) x2^c [x3,x1]
             + (x2^a x3^b - x2^b x3^a) x1^c [x3,x2]

and in fact a unique combination of f(0,1,0), f(0,2,0), f(1,2,0). This
module builds the f's, expands symmetric elements over them and reduces
everything to the three free generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import ConsistencyError, DomainError, UsageError
from .falg import AlgebraElement, commutator_indices
from .invariants import (
    SigmaPolynomial,
    decompose_symmetric,
    eval_sigma,
    power_sum_sigma,
    sigma_monomials,
)
from .linalg import Echelon
from .poly import Polynomial, monomials_of_degree
from .symmetry import Permutation, is_antisymmetric_12, violating_transposition


class FIndex(NamedTuple):
    a: int
    b: int
    c: int

    def sort_key(self):
        return (self.a + self.b + self.c, self.a, self.b, self.c)

    @property
    def degree(self) -> int:
        """Degree of f(a,b,c) in F_3 (the bracket contributes 2)."""
        return self.a + self.b + self.c + 2

    def __str__(self):
        return f"f({self.a},{self.b},{self.c})"


F010, F020, F120 = FIndex(0, 1, 0), FIndex(0, 2, 0), FIndex(1, 2, 0)
GENERATORS = (F010, F020, F120)

_S = [None] + [SigmaPolynomial.elementary(k) for k in (1, 2, 3)]


def _check_index(idx) -> FIndex:
    idx = FIndex(*idx)
    if min(idx) < 0:
        raise UsageError(f"f-index entries must be nonnegative, got {tuple(idx)}")
    return idx


def make_f(idx) -> AlgebraElement:
    a, b, c = _check_index(idx)

    def part(i, j, k):
        # (x_i^a x_j^b - x_i^b x_j^a) x_k^c
        e1, e2 = [0, 0, 0], [0, 0, 0]
        e1[i - 1] += a
        e1[j - 1] += b
        e2[i - 1] += b
        e2[j - 1] += a
        e1[k - 1] += c
        e2[k - 1] += c
        return Polynomial(3, {tuple(e1): 1}) - Polynomial(3, {tuple(e2): 1})

    return AlgebraElement(3, None, {(2, 1): part(1, 2, 3), (3, 1): part(1, 3, 2), (3, 2): part(2, 3, 1)})


def _scale_module(f: AlgebraElement, p: Polynomial) -> AlgebraElement:
    # p acts on a commutator-ideal element by plain multiplication of coefficients
    return AlgebraElement(f.n, None, {k: p * q for k, q in f.module.items()})


def _require_symmetric_module_element(f: AlgebraElement, n: int = 3):
    if f.n != n:
        raise UsageError(f"expected an element of arity {n}, got {f.n}")
    if not f.in_commutator_ideal():
        raise DomainError("element has a nonzero commutative part; only the commutator ideal is decomposed here")
    t = violating_transposition(f)
    if t is not None:
        raise DomainError(f"element is not symmetric: not fixed by transposition {t.images}")


_SWAP23 = (1, 3, 2)      # p(x1,x3,x2)
_CYCLE = (2, 3, 1)       # x1->x2, x2->x3, x3->x1: p(x1,x2,x3) becomes p(x2,x3,x1)


def extract_structure(f: AlgebraElement) -> Polynomial:
    """The polynomial p with f = p[x2,x1] + p(x1,x3,x2)[x3,x1] + p(x2,x3,x1)[x3,x2]."""
    _require_symmetric_module_element(f)
    p = f.coefficient((2, 1))
    if not is_antisymmetric_12(p):
        raise ConsistencyError("coefficient of [x2,x1] is not antisymmetric in x1, x2")
    if f.coefficient((3, 1)) != p.permute(_SWAP23):
        raise ConsistencyError("coefficient of [x3,x1] is not p(x1,x3,x2)")
    if f.coefficient((3, 2)) != p.permute(_CYCLE):
        raise ConsistencyError("coefficient of [x3,x2] is not p(x2,x3,x1)")
    return p


def from_structure(p: Polynomial) -> AlgebraElement:
    """Inverse of :func:`extract_structure` for antisymmetric p."""
    if not is_antisymmetric_12(p):
        raise DomainError("p must satisfy p(x1,x2,x3) = -p(x2,x1,x3)")
    return AlgebraElement(3, None, {(2, 1): p, (3, 1): p.permute(_SWAP23), (3, 2): p.permute(_CYCLE)})


# ---------------------------------------------------------------------------
# generator combinations

@dataclass(frozen=True)
class GeneratorCombo:
    """c010 f(0,1,0) + c020 f(0,2,0) + c120 f(1,2,0)."""

    c010: SigmaPolynomial
    c020: SigmaPolynomial
    c120: SigmaPolynomial

    @classmethod
    def zero(cls) -> "GeneratorCombo":
        z = SigmaPolynomial.zero(3)
        return cls(z, z, z)

    @classmethod
    def unit(cls, idx: FIndex, coeff=1) -> "GeneratorCombo":
        z = SigmaPolynomial.zero(3)
        c = SigmaPolynomial.constant(coeff, 3)
        return cls(*(c if g == idx else z for g in GENERATORS))

    @property
    def coefficients(self) -> tuple[SigmaPolynomial, SigmaPolynomial, SigmaPolynomial]:
        return (self.c010, self.c020, self.c120)

    def as_dict(self) -> dict[FIndex, SigmaPolynomial]:
        return dict(zip(GENERATORS, self.coefficients))

    def __add__(self, other: "GeneratorCombo") -> "GeneratorCombo":
        return GeneratorCombo(*(x + y for x, y in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "GeneratorCombo") -> "GeneratorCombo":
        return GeneratorCombo(*(x - y for x, y in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "GeneratorCombo":
        return GeneratorCombo(*(-x for x in self.coefficients))

    def times(self, s) -> "GeneratorCombo":
        """Multiply every coefficient by a sigma-polynomial or a rational."""
        return GeneratorCombo(*(x * s for x in self.coefficients))

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def evaluate(self) -> AlgebraElement:
        out = AlgebraElement.zero(3)
        for g, c in zip(GENERATORS, self.coefficients):
            if c:
                out = out + _scale_module(make_f(g), eval_sigma(c))
        return out


# ---------------------------------------------------------------------------
# reduction of f(a,b,c) to the generators

_REDUCE_CACHE: dict[FIndex, GeneratorCombo] = {}


def reduce_f(idx) -> GeneratorCombo:
    """Express f(a,b,c) through f(0,1,0), f(0,2,0), f(1,2,0).

    Steps: antisymmetry in (a, b); pull out sigma3^min(a,b,c); remove the
    third exponent with f(0,b,c) = nu_c f(0,b,0) - f(0,b+c,0) + f(b,c,0);
    then recurse on two-index elements with the order-three recurrences.
    """
    a, b, c = _check_index(idx)
    if a == b:
        return GeneratorCombo.zero()
    if a > b:
        return -reduce_f(FIndex(b, a, c))
    key = FIndex(a, b, c)
    hit = _REDUCE_CACHE.get(key)
    if hit is not None:
        return hit
    result = _reduce_canonical(a, b, c)
    _REDUCE_CACHE[key] = result
    return result


def _reduce_canonical(a: int, b: int, c: int) -> GeneratorCombo:
    s1, s2, s3 = _S[1], _S[2], _S[3]
    m = min(a, c)
    if m:
        return reduce_f((a - m, b - m, c - m)).times(s3 ** m)
    if c:
        # a == 0 < b, c >= 1
        return (reduce_f((0, b, 0)).times(power_sum_sigma(c))
                - reduce_f((0, b + c, 0)) + reduce_f((b, c, 0)))
    if (a, b) in ((0, 1), (0, 2), (1, 2)):
        return GeneratorCombo.unit(FIndex(a, b, 0))
    if a == 0 and b == 3:
        return reduce_f((0, 2, 0)).times(s1) - reduce_f((0, 1, 0)).times(s2)
    if a >= 1 and b == 3:
        return (reduce_f((a, 2, 0)).times(s1) - reduce_f((a, 1, 0)).times(s2)
                - reduce_f((0, a, 0)).times(s3))
    # b >= 4, any a < b
    return (reduce_f((a, b - 1, 0)).times(s1) - reduce_f((a, b - 2, 0)).times(s2)
            + reduce_f((a, b - 3, 0)).times(s3))


def clear_reduce_cache():
    _REDUCE_CACHE.clear()


def export_reduce_table() -> list[dict]:
    """Memoized reductions as JSON-ready records."""
    def enc(s: SigmaPolynomial):
        return [[list(m), str(c)] for m, c in s.sorted_terms()]

    return [
        {"index": list(idx), "combo": {"c010": enc(v.c010), "c020": enc(v.c020), "c120": enc(v.c120)}}
        for idx, v in sorted(_REDUCE_CACHE.items(), key=lambda kv: kv[0].sort_key())
    ]


def import_reduce_table(records: Iterable[Mapping]):
    def dec(terms):
        return SigmaPolynomial(3, {tuple(m): Fraction(c) for m, c in terms})

    for rec in records:
        idx = FIndex(*rec["index"])
        if not idx.a < idx.b:
            raise UsageError(f"cached index {tuple(idx)} is not canonical")
        combo = rec["combo"]
        _REDUCE_CACHE[idx] = GeneratorCombo(dec(combo["c010"]), dec(combo["c020"]), dec(combo["c120"]))


# ---------------------------------------------------------------------------
# expansion over all f(a,b,c)

def f_indices_of_weight(w: int) -> list[FIndex]:
    """Canonical indices (a < b) with a + b + c = w, sorted by sort_key."""
    out = [FIndex(a, b, w - a - b) for a in range(w + 1) for b in range(a + 1, w - a + 1)]
    return sorted(out, key=FIndex.sort_key)


def _antisym_coords(p: Polynomial) -> dict:
    # an antisymmetric p is determined by its coefficients on x1^a x2^b x3^c with a < b
    return {m: c for m, c in p.items() if m[0] < m[1]}


_EXPANSION_SOLVERS: dict[int, Echelon] = {}


def _expansion_solver(e: int) -> Echelon:
    """Greedy column basis for antisymmetric polynomials of degree e.

    Columns sigma^m * f(a,b,c) are offered in f-index order, sigma order
    within; a column is kept when independent of those already kept.
    """
    solver = _EXPANSION_SOLVERS.get(e)
    if solver is not None:
        return solver
    solver = Echelon(track=True)
    target = sum(1 for m in monomials_of_degree(e, 3) if m[0] < m[1])
    for w in range(1, e + 1):
        for idx in f_indices_of_weight(w):
            p_f = make_f(idx).coefficient((2, 1))
            for sm in sigma_monomials(e - w):
                if solver.rank == target:
                    break
                col = eval_sigma(SigmaPolynomial(3, {sm: 1})) * p_f
                solver.insert(_antisym_coords(col), (idx, sm))
    if solver.rank != target:
        raise ConsistencyError(f"f-elements do not span degree {e}")
    _EXPANSION_SOLVERS[e] = solver
    return solver


def expand_in_fbasis(f: AlgebraElement) -> dict[FIndex, SigmaPolynomial]:
    """Expansion ``f = sum delta_abc f(a,b,c)`` with symmetric coefficients.

    The f(a,b,c) are not independent over the symmetric polynomials (e.g.
    f(0,1,1) = sigma1 f(0,1,0) - f(0,2,0)), so the result is the canonical
    expansion over the greedy column basis of :func:`_expansion_solver`.
    """
    p = extract_structure(f)
    coeffs: dict[FIndex, dict] = {}
    for e, comp in p.homogeneous_components().items():
        combo = _expansion_solver(e).express(_antisym_coords(comp))
        if combo is None:
            raise ConsistencyError(f"degree-{e} component is outside the span of the f-elements")
        for (idx, sm), v in combo.items():
            coeffs.setdefault(idx, {})
            coeffs[idx][sm] = coeffs[idx].get(sm, 0) + v
    out = {}
    for idx in sorted(coeffs, key=FIndex.sort_key):
        s = SigmaPolynomial(3, coeffs[idx])
        if s:
            out[idx] = s
    result = out
    if evaluate_expansion(result) != f:
        raise ConsistencyError("f-basis expansion does not reproduce its input")
    return result


def evaluate_expansion(expansion: Mapping[FIndex, SigmaPolynomial]) -> AlgebraElement:
    out = AlgebraElement.zero(3)
    for idx, s in expansion.items():
        out = out + _scale_module(make_f(idx), eval_sigma(s))
    return out


def reduce_symmetric(f: AlgebraElement) -> GeneratorCombo:
    expansion = expand_in_fbasis(f)
    combo = GeneratorCombo.zero()
    for idx, delta in expansion.items():
        combo = combo + reduce_f(idx).times(delta)
    return combo


# ---------------------------------------------------------------------------
# direct linear algebra over the generators

def _full_coords(f: AlgebraElement) -> dict:
    out = {}
    for key, p in f.module.items():
        for m, c in p.items():
            out[(key, m)] = c
    for m, c in f.scalar.items():
        out[((0, 0), m)] = c
    return out


def _generator_columns(gens: Sequence, degree: int):
    """(label, coords) for sigma-monomial multiples of gens landing in ``degree``."""
    for g in gens:
        g = FIndex(*g)
        w = degree - g.degree
        if w < 0:
            continue
        base = make_f(g)
        for sm in sigma_monomials(w):
            yield (g, sm), _full_coords(_scale_module(base, eval_sigma(SigmaPolynomial(3, {sm: 1}))))


def _collect(combo: Mapping) -> dict[FIndex, SigmaPolynomial]:
    acc: dict[FIndex, dict] = {}
    for (g, sm), v in combo.items():
        acc.setdefault(g, {})
        acc[g][sm] = acc[g].get(sm, 0) + v
    return {g: SigmaPolynomial(3, t) for g, t in acc.items() if SigmaPolynomial(3, t)}


def submodule_membership(target: AlgebraElement, gens: Sequence) -> dict[FIndex, SigmaPolynomial] | None:
    """Coefficients expressing ``target`` in the sigma-span of ``gens``, or None."""
    total: dict = {}
    for d, comp in target.homogeneous_components().items():
        solver = Echelon(track=True)
        for label, coords in _generator_columns(gens, d):
            solver.insert(coords, label)
        combo = solver.express(_full_coords(comp))
        if combo is None:
            return None
        for k, v in combo.items():
            total[k] = total.get(k, 0) + v
    return _collect(total)


def solve_in_generators(f: AlgebraElement) -> GeneratorCombo:
    """Generator coefficients found by plain linear solving (no recurrences)."""
    _require_symmetric_module_element(f)
    sol = submodule_membership(f, GENERATORS)
    if sol is None:
        raise ConsistencyError("symmetric element outside the span of the three generators")
    z = SigmaPolynomial.zero(3)
    return GeneratorCombo(*(sol.get(g, z) for g in GENERATORS))


@dataclass(frozen=True)
class FreenessVerdict:
    independent: bool
    max_degree: int
    witness: dict | None = None          # FIndex -> SigmaPolynomial, summing to zero
    witness_degree: int | None = None


def check_freeness(max_degree: int, gens: Sequence = GENERATORS) -> FreenessVerdict:
    """Search every degree up to ``max_degree`` for a relation sum s_g * g = 0."""
    gens = [FIndex(*g) for g in gens]
    if tuple(gens) == GENERATORS and max_degree < 5:
        raise UsageError("freeness check needs a degree bound of at least 5")
    for d in range(min(g.degree for g in gens), max_degree + 1):
        solver = Echelon(track=True)
        for label, coords in _generator_columns(gens, d):
            dep = solver.insert(coords, label)
            if dep is not None:
                return FreenessVerdict(False, max_degree, _collect(dep), d)
    return FreenessVerdict(True, max_degree)


def minimality_report() -> dict[FIndex, bool]:
    """For each generator: True when it lies outside the span of the other two."""
    out = {}
    for g in GENERATORS:
        others = [h for h in GENERATORS if h != g]
        out[g] = submodule_membership(make_f(g), others) is None
    return out


def check_minimality() -> bool:
    return all(minimality_report().values())


# ---------------------------------------------------------------------------
# rank two

def n2_generator() -> AlgebraElement:
    """(x2 - x1)[x2,x1] in F_2."""
    x1, x2 = Polynomial.var(1, 2), Polynomial.var(2, 2)
    return AlgebraElement(2, None, {(2, 1): x2 - x1})


def decompose_n2(f: AlgebraElement) -> SigmaPolynomial:
    """q in e1 = x1 + x2, e2 = x1 x2 with f = q (x2 - x1)[x2,x1]."""
    _require_symmetric_module_element(f, n=2)
    p = f.coefficient((2, 1))
    x1, x2 = Polynomial.var(1, 2), Polynomial.var(2, 2)
    try:
        q = p.divide_exact(x2 - x1)
    except DomainError as exc:
        raise ConsistencyError("coefficient of a symmetric element is not divisible by x2 - x1") from exc
    return decompose_symmetric(q)


def evaluate_n2(q: SigmaPolynomial) -> AlgebraElement:
    return _scale_module(n2_generator(), eval_sigma(q))
