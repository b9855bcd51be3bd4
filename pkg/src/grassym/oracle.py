"""Ground truth for the relatively free algebra, computed from scratch.

The free associative algebra on ``x1..xn`` is truncated at degree ``D`` and
divided, degree by degree, by the linear span of all consequences
``u [[m1, m2], m3] v`` of the Grassmann identity (u, v, m_i words). Nothing
here uses the normal forms of :mod:`grassym.falg`; the two are compared in
the test suite.

Relations are multihomogeneous, so elimination runs separately on each
block of words sharing a letter content. Within a block the pivot of a row
is its lexicographically largest word; the words that are never pivots are
the *standard words* and give coordinates on the quotient.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb
from typing import Iterable, Mapping

from .errors import UsageError
from .falg import AlgebraElement, lift_to_words
from .linalg import Echelon

log = logging.getLogger(__name__)

Word = tuple[int, ...]
WordCombo = dict[Word, Fraction]

DEFAULT_CAPS = {2: 10, 3: 7, 4: 5}


def multidegree(word: Word, n: int) -> tuple[int, ...]:
    out = [0] * n
    for a in word:
        out[a - 1] += 1
    return tuple(out)


def words(n: int, d: int) -> Iterable[Word]:
    return product(range(1, n + 1), repeat=d)


def _acc(target: dict, w: Word, c):
    s = target.get(w, 0) + c
    if s:
        target[w] = s
    else:
        target.pop(w, None)


def word_bracket(p: Mapping[Word, object], q: Mapping[Word, object]) -> WordCombo:
    """pq - qp in the free associative algebra."""
    out: WordCombo = {}
    for u, a in p.items():
        for v, b in q.items():
            _acc(out, u + v, Fraction(a) * Fraction(b))
            _acc(out, v + u, -Fraction(a) * Fraction(b))
    return out


def word_product(p: Mapping[Word, object], q: Mapping[Word, object]) -> WordCombo:
    out: WordCombo = {}
    for u, a in p.items():
        for v, b in q.items():
            _acc(out, u + v, Fraction(a) * Fraction(b))
    return out


def core_relation(m1: Word, m2: Word, m3: Word) -> WordCombo:
    """Expansion of [[m1, m2], m3] for words m1, m2, m3."""
    return word_bracket(word_bracket({m1: 1}, {m2: 1}), {m3: 1})


def basis_count(n: int, d: int) -> int:
    """Number of elements x^a [x_i1,x_i2]...[x_i(2c-1),x_i2c] (i1 > ... > i2c) of degree d."""
    total = 0
    for c in range(0, n // 2 + 1):
        rest = d - 2 * c
        if rest < 0:
            break
        total += comb(n, 2 * c) * comb(rest + n - 1, n - 1)
    return total


@dataclass
class TruncatedAlgebra:
    n: int
    D: int
    blocks: dict[tuple[int, ...], Echelon] = field(default_factory=dict)
    relation_rank: dict[int, int] = field(default_factory=dict)

    def word_count(self, d: int) -> int:
        return self.n ** d

    def quotient_dimension(self, d: int) -> int:
        return self.word_count(d) - self.relation_rank.get(d, 0)

    def standard_words(self, d: int) -> list[Word]:
        out = []
        for w in words(self.n, d):
            block = self.blocks.get(multidegree(w, self.n))
            if block is None or w not in block.rows:
                out.append(w)
        return out

    def relation_rows(self, d: int) -> Iterable[dict]:
        for md, block in self.blocks.items():
            if sum(md) == d:
                yield from block.rows.values()

    def _check_combo(self, combo: Mapping[Word, object]):
        for w in combo:
            if len(w) > self.D:
                raise UsageError(f"word of degree {len(w)} exceeds truncation degree {self.D}")
            if any(not 1 <= a <= self.n for a in w):
                raise UsageError(f"word {w} uses letters outside x1..x{self.n}")

    def project(self, combo: Mapping[Word, object]) -> WordCombo:
        """Coordinates of a word combination on the standard words (sparse)."""
        self._check_combo(combo)
        parts: dict[tuple, dict] = {}
        for w, c in combo.items():
            if c:
                _acc(parts.setdefault(multidegree(w, self.n), {}), w, Fraction(c))
        out: WordCombo = {}
        for md, vec in parts.items():
            block = self.blocks.get(md)
            out.update(block.reduce(vec) if block is not None else vec)
        return out

    def is_zero(self, combo: Mapping[Word, object]) -> bool:
        return not self.project(combo)


def build(n: int, D: int, cap: int | None = None, full: bool = False) -> TruncatedAlgebra:
    """Quotient of the free algebra of rank ``n`` by identity consequences, degrees <= D.

    By default each degree is spanned by letter multiples of the previous
    degree's relations together with the cores [[m1, m2], z] for a letter z,
    which generate the same space as all u [[m1, m2], m3] v because
    [[m1, m2], y m] = [[m1, m2], y] m + y [[m1, m2], m]. ``full=True``
    enumerates every u [[m1, m2], m3] v instead (slow; for cross-checks).
    """
    if not 2 <= n <= 4:
        raise UsageError(f"oracle arity must be 2..4, got {n}")
    limit = cap if cap is not None else DEFAULT_CAPS[n]
    if not 1 <= D <= limit:
        raise UsageError(f"degree bound must be in 1..{limit} for arity {n}, got {D}")
    T = TruncatedAlgebra(n, D)
    letters = [(a,) for a in range(1, n + 1)]

    def insert(rel: WordCombo):
        if not rel:
            return
        md = multidegree(next(iter(rel)), n)
        block = T.blocks.get(md)
        if block is None:
            block = T.blocks[md] = Echelon()
        block.insert(rel)

    for d in range(3, D + 1):
        if full:
            for m_lens in _compositions(d):
                lu, l1, l2, l3, lv = m_lens
                for w in words(n, d):
                    u, rest = w[:lu], w[lu:]
                    m1, m2, m3 = rest[:l1], rest[l1:l1 + l2], rest[l1 + l2:l1 + l2 + l3]
                    v = rest[l1 + l2 + l3:]
                    core = core_relation(m1, m2, m3)
                    insert({u + k + v: c for k, c in core.items()})
        else:
            prev = [dict(r) for r in T.relation_rows(d - 1)]
            for row in prev:
                for (a,) in letters:
                    insert({(a,) + w: c for w, c in row.items()})
                    insert({w + (a,): c for w, c in row.items()})
            for l1 in range(1, d - 1):
                l2 = d - 1 - l1
                for m1 in words(n, l1):
                    for m2 in words(n, l2):
                        if (l1, m1) >= (l2, m2):
                            continue   # [[m2,m1],z] = -[[m1,m2],z]
                        for z in letters:
                            insert(core_relation(m1, m2, z))
        T.relation_rank[d] = sum(len(b) for md, b in T.blocks.items() if sum(md) == d)
        log.debug("arity %d degree %d: %d words, relation rank %d", n, d, n ** d, T.relation_rank[d])
    return T


def _compositions(d: int):
    # (|u|, |m1|, |m2|, |m3|, |v|) with |m_i| >= 1 summing to d
    for l1 in range(1, d + 1):
        for l2 in range(1, d + 1):
            for l3 in range(1, d + 1):
                r = d - l1 - l2 - l3
                if r < 0:
                    continue
                for lu in range(r + 1):
                    yield (lu, l1, l2, l3, r - lu)


def project(combo: Mapping[Word, object], T: TruncatedAlgebra) -> WordCombo:
    return T.project(combo)


def _as_words(x) -> Mapping[Word, object]:
    if isinstance(x, AlgebraElement):
        return lift_to_words(x)
    return x


def oracle_equal(u, v, T: TruncatedAlgebra) -> bool:
    """Equality in the truncated quotient; accepts AlgebraElements or word combos."""
    diff: WordCombo = {}
    for w, c in _as_words(u).items():
        _acc(diff, w, Fraction(c))
    for w, c in _as_words(v).items():
        _acc(diff, w, -Fraction(c))
    return T.is_zero(diff)


def commutator_words(j: int, i: int) -> WordCombo:
    return {(j, i): Fraction(1), (i, j): Fraction(-1)}


def witness_non_module_n4(T: TruncatedAlgebra) -> bool:
    """True iff x1 x2 [x3,x4] and x2 x1 [x3,x4] differ in the quotient."""
    if T.n != 4 or T.D < 4:
        raise UsageError("the rank-4 witness needs an oracle built with n=4 and D>=4")
    c34 = commutator_words(3, 4)
    lhs = word_product({(1, 2): 1}, c34)
    rhs = word_product({(2, 1): 1}, c34)
    return not oracle_equal(lhs, rhs, T)


def bracket_product_nonzero_n4(T: TruncatedAlgebra) -> bool:
    """True iff [x1,x2][x3,x4] is nonzero in the quotient."""
    if T.n != 4 or T.D < 4:
        raise UsageError("needs an oracle built with n=4 and D>=4")
    return not T.is_zero(word_product(commutator_words(1, 2), commutator_words(3, 4)))
