"""Normal forms in the relatively free algebras F_2 and F_3 of the Grassmann variety.

The variety is cut out by ``[[z1, z2], z3] = 0``. In rank ``n <= 3`` every
commutator is central and any product of two commutators vanishes, so an
element has the unique shape

    s + sum_{j > i} p_ji [x_j, x_i]

with ``s`` and every ``p_ji`` commutative polynomials. :class:`AlgebraElement`
stores exactly that pair; equality of elements is equality of these data.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import UsageError
from .poly import Monomial, Polynomial

CommutatorIndex = tuple[int, int]   # (hi, lo) with hi > lo

SUPPORTED_ARITIES = (2, 3)


def commutator_indices(n: int) -> list[CommutatorIndex]:
    """Basic commutators [x_j, x_i], j > i, in the order (2,1), (3,1), (3,2)."""
    return [(j, i) for j in range(2, n + 1) for i in range(1, j)]


def _check_arity(n: int):
    if n not in SUPPORTED_ARITIES:
        raise UsageError(f"arity {n} not supported here (use 2 or 3; rank 4 lives in the oracle)")


class AlgebraElement:
    __slots__ = ("n", "scalar", "_module", "_hash")

    def __init__(self, n: int, scalar: Polynomial | None = None,
                 module: Mapping[CommutatorIndex, Polynomial] | None = None):
        _check_arity(n)
        self.n = n
        if scalar is None:
            scalar = Polynomial.zero(n)
        if scalar.nvars != n:
            raise UsageError("scalar part has the wrong variable count")
        self.scalar = scalar
        clean: dict[CommutatorIndex, Polynomial] = {}
        allowed = set(commutator_indices(n))
        for key, p in (module or {}).items():
            key = tuple(key)
            if key not in allowed:
                raise UsageError(f"{key} is not a basic commutator index for arity {n}")
            if p.nvars != n:
                raise UsageError("module coefficient has the wrong variable count")
            if p:
                clean[key] = p
        self._module = clean
        self._hash = None

    # ----- constructors -----
    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "AlgebraElement":
        return cls(n, Polynomial.one(n))

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "AlgebraElement":
        return cls(p.nvars, p)

    @classmethod
    def constant(cls, c, n: int) -> "AlgebraElement":
        return cls(n, Polynomial.constant(c, n))

    @classmethod
    def generator(cls, i: int, n: int) -> "AlgebraElement":
        return cls(n, Polynomial.var(i, n))

    @classmethod
    def basic_commutator(cls, j: int, i: int, n: int) -> "AlgebraElement":
        """[x_j, x_i] for any j, i in range (sign-normalised)."""
        _check_arity(n)
        if not (1 <= i <= n and 1 <= j <= n):
            raise UsageError(f"commutator index out of range for arity {n}")
        if i == j:
            return cls.zero(n)
        if j > i:
            return cls(n, None, {(j, i): Polynomial.one(n)})
        return cls(n, None, {(i, j): -Polynomial.one(n)})

    # ----- inspection -----
    @property
    def module(self) -> dict[CommutatorIndex, Polynomial]:
        return dict(self._module)

    def coefficient(self, key: CommutatorIndex) -> Polynomial:
        return self._module.get(tuple(key), Polynomial.zero(self.n))

    def is_zero(self) -> bool:
        return not self.scalar and not self._module

    def __bool__(self):
        return not self.is_zero()

    def in_commutator_ideal(self) -> bool:
        return self.scalar.is_zero()

    def degree(self) -> int:
        degs = [self.scalar.degree()] + [p.degree() + 2 for p in self._module.values()]
        return max(degs)

    def homogeneous_components(self) -> dict[int, "AlgebraElement"]:
        scal = self.scalar.homogeneous_components()
        parts: dict[int, dict] = {}
        for key, p in self._module.items():
            for d, comp in p.homogeneous_components().items():
                parts.setdefault(d + 2, {})[key] = comp
        out = {}
        for d in sorted(set(scal) | set(parts)):
            out[d] = AlgebraElement(self.n, scal.get(d), parts.get(d))
        return out

    # ----- arithmetic -----
    def _check(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement):
            raise UsageError(f"expected AlgebraElement, got {type(other).__name__}")
        if other.n != self.n:
            raise UsageError(f"arity mismatch: {self.n} vs {other.n}")

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraElement.constant(other, self.n)
        if isinstance(other, Polynomial):
            if other.nvars != self.n:
                raise UsageError("arity mismatch")
            return AlgebraElement(self.n, other)
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        module = dict(self._module)
        for key, p in other._module.items():
            module[key] = module[key] + p if key in module else p
        return AlgebraElement(self.n, self.scalar + other.scalar, module)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.n, -self.scalar, {k: -p for k, p in self._module.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "AlgebraElement":
        return AlgebraElement(self.n, self.scalar.scale(c),
                              {k: p.scale(c) for k, p in self._module.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Polynomial):
            return mul(self._coerce(other), self)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise UsageError("exponent must be a nonnegative integer")
        result = AlgebraElement.one(self.n)
        for _ in range(k):
            result = mul(result, self)
        return result

    def times_polynomial(self, p: Polynomial) -> "AlgebraElement":
        """Left multiplication by a commutative polynomial viewed as ordered word sum."""
        return mul(AlgebraElement(self.n, p), self)

    # ----- comparison -----
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgebraElement.constant(other, self.n)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.scalar == other.scalar \
            and self._module == other._module

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.scalar, frozenset(self._module.items())))
        return self._hash

    def render(self) -> str:
        return render(self)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"AlgebraElement({self.n}, {render(self)!r})"


def mul(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    u._check(v)
    n = u.n
    s1, s2 = u.scalar, v.scalar
    module: dict[CommutatorIndex, Polynomial] = {}

    def acc(key, p):
        if p:
            module[key] = module[key] + p if key in module else p

    # commutators are central and multiply each other to zero
    if s1:
        for key, p in v._module.items():
            acc(key, s1 * p)
    if s2:
        for key, p in u._module.items():
            acc(key, s2 * p)
    # reordering the ordered word of s1 past that of s2 produces one bracket
    # per inverted letter pair: coefficient of [x_j, x_i] is d_j(s1) * d_i(s2)
    if s1 and s2:
        for (j, i) in commutator_indices(n):
            acc((j, i), s1.diff(j) * s2.diff(i))
    return AlgebraElement(n, s1 * s2, module)


def bracket(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    u._check(v)
    return mul(u, v) - mul(v, u)


def equals(u: AlgebraElement, v: AlgebraElement) -> bool:
    u._check(v)
    return u == v


def monomial_bracket(u: Monomial, v: Monomial) -> AlgebraElement:
    """Closed form of the bracket of two monomials (as ordered words)."""
    n = len(u)
    if len(v) != n:
        raise UsageError("monomials must have the same length")
    _check_arity(n)
    prod = tuple(a + b for a, b in zip(u, v))
    module = {}
    for (j, i) in commutator_indices(n):
        c = u[j - 1] * v[i - 1] - u[i - 1] * v[j - 1]
        if c:
            e = list(prod)
            e[i - 1] -= 1
            e[j - 1] -= 1
            module[(j, i)] = Polynomial(n, {tuple(e): c})
    return AlgebraElement(n, None, module)


def normalize_word(word: Sequence[int], n: int) -> AlgebraElement:
    """Normal form of the product of letters ``x_{word[0]} x_{word[1]} ...``.

    Bubble sort: every adjacent swap ``x_j x_i -> x_i x_j + [x_j, x_i]`` (j > i)
    emits a bracket whose cofactor is the commutative product of the other
    letters, since brackets are central and kill each other.
    """
    _check_arity(n)
    letters = list(word)
    for a in letters:
        if not isinstance(a, int) or not 1 <= a <= n:
            raise UsageError(f"letter x{a} out of range for arity {n}")
    total = [0] * n
    for a in letters:
        total[a - 1] += 1
    module: dict[CommutatorIndex, dict] = {}
    changed = True
    while changed:
        changed = False
        for k in range(len(letters) - 1):
            j, i = letters[k], letters[k + 1]
            if j > i:
                rest = list(total)
                rest[j - 1] -= 1
                rest[i - 1] -= 1
                terms = module.setdefault((j, i), {})
                terms[tuple(rest)] = terms.get(tuple(rest), 0) + 1
                letters[k], letters[k + 1] = i, j
                changed = True
    return AlgebraElement(n, Polynomial(n, {tuple(total): 1}),
                          {key: Polynomial(n, t) for key, t in module.items()})


def normalize_words(combo: Mapping[tuple, object], n: int) -> AlgebraElement:
    """Normal form of a linear combination of words."""
    out = AlgebraElement.zero(n)
    for w, c in combo.items():
        out = out + normalize_word(w, n).scale(Fraction(c))
    return out


def lift_to_words(f: AlgebraElement) -> dict[tuple, Fraction]:
    """A word combination representing ``f``; inverse of :func:`normalize_words`.

    Monomials become ordered words and ``[x_j, x_i]`` becomes ``x_j x_i - x_i x_j``.
    """
    out: dict[tuple, Fraction] = {}

    def add(w, c):
        s = out.get(w, 0) + c
        if s:
            out[w] = s
        else:
            out.pop(w, None)

    def word_of(m):
        return tuple(k + 1 for k, e in enumerate(m) for _ in range(e))

    for m, c in f.scalar.items():
        add(word_of(m), c)
    for (j, i), p in f.module.items():
        for m, c in p.items():
            w = word_of(m)
            add(w + (j, i), c)
            add(w + (i, j), -c)
    return out


def generators(n: int) -> list[AlgebraElement]:
    return [AlgebraElement.generator(i, n) for i in range(1, n + 1)]


def render(f: AlgebraElement) -> str:
    """Text form, e.g. ``x1 x2 x3 + x3[x2,x1] + x2[x3,x1] + x1[x3,x2]``."""
    pieces: list[str] = []
    if f.scalar:
        pieces.append(f.scalar.render())
    for key in commutator_indices(f.n):
        p = f.coefficient(key)
        if not p:
            continue
        br = f"[x{key[0]},x{key[1]}]"
        if len(p) == 1:
            (m, c), = p.items()
            mono = Polynomial.monomial(m).render()
            mono = "" if mono == "1" else mono
            mag = abs(c)
            body = (mono if mag == 1 else (f"{mag} {mono}" if mono else f"{mag} ")) + br
            sign = "-" if c < 0 else "+"
        else:
            body = f"({p.render()}){br}"
            sign = "+"
        if not pieces:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f"{sign} {body}")
    return " ".join(pieces) if pieces else "0"
