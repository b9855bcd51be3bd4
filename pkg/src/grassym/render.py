"""Text and JSON renderings shared by the command line and tests.

Every text form here parses back (see :mod:`grassym.parsing`) to the same
element.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .decomp import FIndex, GeneratorCombo
from .falg import AlgebraElement, commutator_indices, render as render_element
from .invariants import SigmaPolynomial, power_sum_sigma
from .poly import Polynomial


def terms_json(p: Polynomial) -> list:
    """``[[exponents], "coefficient"], ...`` in descending order."""
    return [[list(m), str(c)] for m, c in p.sorted_terms()]


def sigma_from_json(terms, n: int = 3) -> SigmaPolynomial:
    return SigmaPolynomial(n, {tuple(m): Fraction(c) for m, c in terms})


def element_json(f: AlgebraElement) -> dict:
    return {
        "arity": f.n,
        "rendering": render_element(f),
        "scalar": terms_json(f.scalar),
        "module": {f"{j},{i}": terms_json(f.coefficient((j, i)))
                   for (j, i) in commutator_indices(f.n) if f.coefficient((j, i))},
    }


def _nu_rewrite(g: SigmaPolynomial):
    """Greedily trade sigma1^k t for nu_k t (k = 2, 3) while it shortens g."""
    nu_terms: list[tuple[Fraction, tuple, int]] = []
    rest = g
    improved = True
    while improved and rest:
        improved = False
        for m, c in rest.sorted_terms():
            for k in (3, 2):
                if m[0] < k:
                    continue
                t = (m[0] - k,) + tuple(m[1:])
                nu_t = power_sum_sigma(k).mul_monomial(t, c)
                cand = rest - nu_t
                if len(cand) + 1 < len(rest):
                    nu_terms.append((c, t, k))
                    rest = cand
                    improved = True
                    break
            if improved:
                break
    return nu_terms, rest


def render_sigma(g: SigmaPolynomial, nu: bool = False) -> str:
    if not nu or g.nvars != 3:
        return g.render()
    nu_terms, rest = _nu_rewrite(g)
    if not nu_terms:
        return g.render()
    pieces = []
    for c, t, k in nu_terms:
        mono = SigmaPolynomial(3, {t: 1})._mono_str(t)
        body = " ".join(x for x in (str(abs(c)) if abs(c) != 1 else "", mono, f"nu{k}") if x)
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    if rest:
        r = rest.render()
        pieces.append(f"- {r[1:]}" if r.startswith("-") else f"+ {r}")
    return " ".join(pieces)


def render_combo(combo: GeneratorCombo | Mapping[FIndex, SigmaPolynomial], nu: bool = False) -> str:
    items = combo.as_dict().items() if isinstance(combo, GeneratorCombo) else combo.items()
    pieces = []
    for idx, c in sorted(items, key=lambda kv: FIndex(*kv[0]).sort_key()):
        if not c:
            continue
        pieces.append(f"({render_sigma(c, nu)}) {FIndex(*idx)}")
    return " + ".join(pieces) if pieces else "0"


def combo_json(combo: GeneratorCombo) -> dict:
    return {name: terms_json(c) for name, c in zip(("c010", "c020", "c120"), combo.coefficients)}


def combo_from_json(data: Mapping) -> GeneratorCombo:
    return GeneratorCombo(*(sigma_from_json(data[k]) for k in ("c010", "c020", "c120")))
