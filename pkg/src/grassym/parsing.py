"""Expression language for the command line.

Grammar::

    expr   := ["+"|"-"] term (("+"|"-") term)*
    term   := factor ("*"? factor)*
    factor := atom ("^" NAT)?
    atom   := VAR | RATIONAL | "(" expr ")" | "[" expr "," expr "]" | NAME ["(" args ")"]

``VAR`` is ``x1``..``x4``; ``NAME`` is one of ``f`` (three integer
arguments), ``sigma1``..``sigma3``, ``nu<k>``, ``e1``, ``e2``. Adjacent
factors multiply, so ``x3 x2 x1`` and ``x3*x2*x1`` mean the same.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ParseError, UsageError
from .falg import AlgebraElement, bracket, lift_to_words
from .poly import Polynomial

# ----- AST -----


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sum:
    terms: tuple  # of (sign, node)


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Commutator:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Symbol:
    name: str          # "f", "sigma", "nu", "e"
    args: tuple[int, ...]


Node = Union[Var, Num, Sum, Product, Power, Commutator, Symbol]

# ----- tokenizer -----

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\s*/\s*\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*^()\[\],])
""", re.VERBOSE)

_VAR_RUN = re.compile(r"(?:x\d)+")


@dataclass
class Token:
    kind: str      # num, var, name, op, end
    text: str
    pos: int


def _position(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            line, col = _position(text, pos)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        tok = m.group()
        if kind == "ident":
            if _VAR_RUN.fullmatch(tok):
                # x1x2 is shorthand for x1 x2
                for k in range(0, len(tok), 2):
                    out.append(Token("var", tok[k:k + 2], pos + k))
            else:
                out.append(Token("name", tok, pos))
        elif kind != "ws":
            out.append(Token(kind, tok, pos))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


_NAME = re.compile(r"(sigma|nu|e)(\d+)|f")
_FACTOR_START = ("VAR", "RATIONAL", "NAME", "'('", "'['")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message, expected=()):
        line, col = _position(self.text, self.tok.pos)
        raise ParseError(message, line, col, expected)

    def take(self, text: str):
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return
        found = self.tok.text or "end of input"
        self.error(f"unexpected {found!r}", (f"'{text}'",))

    def at_op(self, *ops) -> bool:
        return self.tok.kind == "op" and self.tok.text in ops

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}", ("'+'", "'-'", "'*'") + _FACTOR_START + ("end of input",))
        return node

    def expr(self) -> Node:
        terms = []
        sign = 1
        if self.at_op("+", "-"):
            sign = -1 if self.tok.text == "-" else 1
            self.i += 1
        terms.append((sign, self.term()))
        while self.at_op("+", "-"):
            sign = -1 if self.tok.text == "-" else 1
            self.i += 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def starts_factor(self) -> bool:
        t = self.tok
        return t.kind in ("num", "var", "name") or (t.kind == "op" and t.text in "([")

    def term(self) -> Node:
        factors = [self.factor()]
        while True:
            if self.at_op("*"):
                self.i += 1
                factors.append(self.factor())
            elif self.starts_factor():
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> Node:
        node = self.atom()
        if self.at_op("^"):
            self.i += 1
            if self.tok.kind != "num" or "/" in self.tok.text:
                self.error("exponent must be a nonnegative integer", ("NAT",))
            exp = int(self.tok.text)
            self.i += 1
            node = Power(node, exp)
        return node

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "var":
            self.i += 1
            return Var(int(t.text[1:]))
        if t.kind == "num":
            self.i += 1
            return Num(Fraction(t.text.replace(" ", "")))
        if t.kind == "op" and t.text == "(":
            self.i += 1
            node = self.expr()
            self.take(")")
            return node
        if t.kind == "op" and t.text == "[":
            self.i += 1
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take("]")
            return Commutator(left, right)
        if t.kind == "name":
            m = _NAME.fullmatch(t.text)
            if not m:
                self.error(f"unknown identifier {t.text!r}", ("x1..x4", "f", "sigma1..sigma3", "nu<k>", "e1", "e2"))
            self.i += 1
            if t.text == "f":
                self.take("(")
                args = [self.integer()]
                for _ in range(2):
                    self.take(",")
                    args.append(self.integer())
                self.take(")")
                return Symbol("f", tuple(args))
            return Symbol(m.group(1), (int(m.group(2)),))
        found = t.text or "end of input"
        self.error(f"unexpected {found!r}", _FACTOR_START)

    def integer(self) -> int:
        if self.tok.kind != "num" or "/" in self.tok.text:
            self.error("expected a nonnegative integer", ("NAT",))
        v = int(self.tok.text)
        self.i += 1
        return v


def parse(text: str) -> Node:
    return _Parser(text).parse()


# ----- evaluation -----

MAX_DEGREE = 64


def _symbol_polynomial(node: Symbol, n: int) -> Polynomial:
    from .invariants import elementary, power_sum

    (k,) = node.args
    if node.name == "sigma":
        if n != 3:
            raise UsageError("sigma1..sigma3 need arity 3 (use e1, e2 in arity 2)")
        return elementary(k, 3) if 1 <= k <= 3 else _bad_index(node)
    if node.name == "e":
        if n != 2:
            raise UsageError("e1, e2 are the arity-2 elementary symmetric polynomials")
        return elementary(k, 2) if 1 <= k <= 2 else _bad_index(node)
    if node.name == "nu":
        if k < 1:
            _bad_index(node)
        return power_sum(k, n)
    raise UsageError(f"unknown symbol {node.name}")


def _bad_index(node: Symbol):
    raise UsageError(f"{node.name}{node.args[0]} is out of range")


def evaluate(node: Node, arity: int, max_degree: int = MAX_DEGREE) -> AlgebraElement:
    """Fold the AST into an element of F_arity (arity 2 or 3)."""
    from .decomp import make_f

    if arity not in (2, 3):
        raise UsageError("expressions are evaluated in arity 2 or 3 (x4 only in oracle commands)")

    def guard(e: AlgebraElement) -> AlgebraElement:
        if e.degree() > max_degree:
            raise UsageError(f"expression degree {e.degree()} exceeds the limit {max_degree}")
        return e

    def ev(node) -> AlgebraElement:
        if isinstance(node, Var):
            if not 1 <= node.index <= arity:
                raise UsageError(f"x{node.index} is not a generator in arity {arity}")
            return AlgebraElement.generator(node.index, arity)
        if isinstance(node, Num):
            return AlgebraElement.constant(node.value, arity)
        if isinstance(node, Sum):
            out = AlgebraElement.zero(arity)
            for sign, t in node.terms:
                out = out + ev(t) if sign > 0 else out - ev(t)
            return out
        if isinstance(node, Product):
            out = ev(node.factors[0])
            for f in node.factors[1:]:
                out = guard(out * ev(f))
            return out
        if isinstance(node, Power):
            base = ev(node.base)
            if base.degree() * node.exponent > max_degree:
                raise UsageError(f"power exceeds the degree limit {max_degree}")
            return base ** node.exponent
        if isinstance(node, Commutator):
            return bracket(ev(node.left), ev(node.right))
        if isinstance(node, Symbol):
            if node.name == "f":
                if arity != 3:
                    raise UsageError("f(a,b,c) lives in arity 3")
                if sum(node.args) + 2 > max_degree:
                    raise UsageError(f"f{node.args} exceeds the degree limit {max_degree}")
                return make_f(node.args)
            return AlgebraElement.from_polynomial(_symbol_polynomial(node, arity))
        raise TypeError(node)

    return guard(ev(node))


def evaluate_words(node: Node, arity: int, max_degree: int = MAX_DEGREE) -> dict:
    """Fold the AST into the free associative algebra (word combinations)."""
    from .decomp import make_f
    from .oracle import word_bracket, word_product

    def ev(node) -> dict:
        if isinstance(node, Var):
            if not 1 <= node.index <= arity:
                raise UsageError(f"x{node.index} is not a generator in arity {arity}")
            return {(node.index,): Fraction(1)}
        if isinstance(node, Num):
            return {(): node.value} if node.value else {}
        if isinstance(node, Sum):
            out: dict = {}
            for sign, t in node.terms:
                for w, c in ev(t).items():
                    s = out.get(w, 0) + sign * c
                    if s:
                        out[w] = s
                    else:
                        out.pop(w, None)
            return out
        if isinstance(node, Product):
            out = ev(node.factors[0])
            for f in node.factors[1:]:
                out = word_product(out, ev(f))
                if any(len(w) > max_degree for w in out):
                    raise UsageError(f"expression degree exceeds the limit {max_degree}")
            return out
        if isinstance(node, Power):
            base = ev(node.base)
            out = {(): Fraction(1)}
            for _ in range(node.exponent):
                out = word_product(out, base)
                if any(len(w) > max_degree for w in out):
                    raise UsageError(f"expression degree exceeds the limit {max_degree}")
            return out
        if isinstance(node, Commutator):
            return word_bracket(ev(node.left), ev(node.right))
        if isinstance(node, Symbol):
            if node.name == "f":
                if arity != 3:
                    raise UsageError("f(a,b,c) lives in arity 3")
                return lift_to_words(make_f(node.args))
            if arity == 4:
                raise UsageError("symmetric-function symbols are not available in arity 4")
            return lift_to_words(AlgebraElement.from_polynomial(_symbol_polynomial(node, arity)))
        raise TypeError(node)

    return ev(node)


def parse_element(text: str, arity: int = 3, max_degree: int = MAX_DEGREE) -> AlgebraElement:
    return evaluate(parse(text), arity, max_degree)


def evaluate_polynomial(node: Node, nvars: int) -> Polynomial:
    """Fold the AST into the commutative polynomial ring (no brackets or f's)."""

    def ev(node) -> Polynomial:
        if isinstance(node, Var):
            if not 1 <= node.index <= nvars:
                raise UsageError(f"x{node.index} is not a variable in arity {nvars}")
            return Polynomial.var(node.index, nvars)
        if isinstance(node, Num):
            return Polynomial.constant(node.value, nvars)
        if isinstance(node, Sum):
            out = Polynomial.zero(nvars)
            for sign, t in node.terms:
                out = out + ev(t) if sign > 0 else out - ev(t)
            return out
        if isinstance(node, Product):
            out = ev(node.factors[0])
            for f in node.factors[1:]:
                out = out * ev(f)
            return out
        if isinstance(node, Power):
            return ev(node.base) ** node.exponent
        if isinstance(node, Symbol) and node.name != "f":
            return _symbol_polynomial(node, nvars)
        raise UsageError("brackets and f(a,b,c) are not commutative polynomials")

    return ev(node)
