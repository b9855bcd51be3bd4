"""Exact sparse row echelon forms over the rationals.

Vectors are dicts ``column -> Fraction`` with comparable column keys. Each
stored row has a distinct pivot (its largest column) with coefficient 1,
and every later insertion is reduced against the existing rows, so the
set of pivots is the set of leading columns of the spanned subspace and
:meth:`Echelon.reduce` yields a unique normal form.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Mapping


def _axpy(target: dict, row: Mapping, factor: Fraction):
    for k, v in row.items():
        s = target.get(k, 0) + factor * v
        if s:
            target[k] = s
        else:
            target.pop(k, None)


class Echelon:
    """Incremental echelon basis, optionally tracking how rows were built.

    With ``track=True`` each stored row remembers the combination of input
    labels it equals; :meth:`insert` then returns the dependency certificate
    when a new vector is already in the span.
    """

    def __init__(self, track: bool = False, key=None):
        self.rows: dict[Hashable, dict] = {}
        self.track = track
        self.history: dict[Hashable, dict] = {}
        self.key = key

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> set:
        return set(self.rows)

    def _max(self, cols):
        return max(cols, key=self.key) if self.key else max(cols)

    def reduce(self, vector: Mapping, combo: dict | None = None) -> dict:
        """Normal form of ``vector`` modulo the span (no pivot columns left)."""
        vec = {k: Fraction(v) for k, v in vector.items() if v}
        rows = self.rows
        while True:
            cand = [k for k in vec if k in rows]
            if not cand:
                return vec
            piv = self._max(cand)
            factor = -vec[piv]
            _axpy(vec, rows[piv], factor)
            if combo is not None:
                _axpy(combo, self.history[piv], factor)

    def insert(self, vector: Mapping, label: Hashable = None):
        """Add ``vector``; returns None if it was independent, else the
        dependency (``{label: coeff}`` summing to zero) when tracking, or
        an empty dict when not tracking."""
        combo = {label: Fraction(1)} if self.track else None
        vec = self.reduce(vector, combo)
        if not vec:
            return combo if self.track else {}
        piv = self._max(vec)
        inv = 1 / vec[piv]
        self.rows[piv] = {k: v * inv for k, v in vec.items()}
        if self.track:
            self.history[piv] = {k: v * inv for k, v in combo.items()}
        return None

    def express(self, vector: Mapping):
        """Write ``vector`` in terms of the inserted labels, or None if it is
        outside the span. Requires tracking."""
        if not self.track:
            raise ValueError("express() needs a tracking echelon")
        combo: dict = {}
        rem = self.reduce(vector, combo)
        if rem:
            return None
        return {k: -v for k, v in combo.items()}
