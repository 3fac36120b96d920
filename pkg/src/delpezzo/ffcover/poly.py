"""Multivariate polynomials over a :class:`FiniteField`, plus a string parser.

Terms are a dict from exponent tuples to nonzero field elements; iteration and
printing use graded lexicographic order (highest first).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Sequence

from ..errors import FieldMismatch, InvalidInput, WrongDegree
from .field import FiniteField

Exps = tuple[int, ...]


def _grlex_key(e: Exps):
    return (sum(e), e)


@dataclass(frozen=True, eq=False)
class FinitePoly:
    field: FiniteField
    variables: tuple[str, ...]
    terms: Mapping[Exps, int]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        n = len(self.variables)
        clean = {}
        for e, c in self.terms.items():
            e = tuple(e)
            if len(e) != n or any(x < 0 for x in e):
                raise InvalidInput(f"bad exponent vector {e} for variables {self.variables}")
            self.field.check(c)
            if c:
                clean[e] = c
        ordered = dict(sorted(clean.items(), key=lambda t: _grlex_key(t[0]), reverse=True))
        object.__setattr__(self, "terms", ordered)

    # construction helpers

    @classmethod
    def zero(cls, field: FiniteField, variables: Sequence[str]) -> "FinitePoly":
        return cls(field, tuple(variables), {})

    @classmethod
    def constant(cls, field: FiniteField, variables: Sequence[str], c: int) -> "FinitePoly":
        return cls(field, tuple(variables), {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, field: FiniteField, variables: Sequence[str], exps: Sequence[int],
                 c: int = 1) -> "FinitePoly":
        return cls(field, tuple(variables), {tuple(exps): c})

    @classmethod
    def variable(cls, field: FiniteField, variables: Sequence[str], name: str) -> "FinitePoly":
        variables = tuple(variables)
        e = [0] * len(variables)
        e[variables.index(name)] = 1
        return cls(field, variables, {tuple(e): 1})

    # basic queries

    def _same(self, other: "FinitePoly") -> None:
        if self.field != other.field or self.variables != other.variables:
            raise FieldMismatch(f"{self.field}{self.variables} vs {other.field}{other.variables}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinitePoly):
            return NotImplemented
        return (self.field, self.variables, self.terms) == (other.field, other.variables, other.terms)

    def __hash__(self) -> int:
        return hash((self.field, self.variables, tuple(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if d is None:
            return len(degs) <= 1
        return degs <= {d}

    def require_form(self, d: int, nvars: int | None = None) -> None:
        """Raise :class:`WrongDegree` unless this is a form of degree ``d`` (zero allowed)."""
        if nvars is not None and len(self.variables) != nvars:
            raise WrongDegree(f"expected {nvars} variables, got {self.variables}")
        if not self.is_homogeneous(d):
            raise WrongDegree(f"expected a form of degree {d}, got {self}")

    # arithmetic

    def __add__(self, other: "FinitePoly") -> "FinitePoly":
        self._same(other)
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = F.add(out.get(e, 0), c)
        return FinitePoly(F, self.variables, out)

    def __neg__(self) -> "FinitePoly":
        F = self.field
        return FinitePoly(F, self.variables, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other: "FinitePoly") -> "FinitePoly":
        return self + (-other)

    def scale(self, c: int) -> "FinitePoly":
        F = self.field
        return FinitePoly(F, self.variables, {e: F.mul(c, v) for e, v in self.terms.items()})

    def __mul__(self, other: "FinitePoly") -> "FinitePoly":
        self._same(other)
        F = self.field
        out: dict[Exps, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = F.add(out.get(e, 0), F.mul(c1, c2))
        return FinitePoly(F, self.variables, out)

    def __pow__(self, n: int) -> "FinitePoly":
        if n < 0:
            raise InvalidInput("negative powers of polynomials are not defined")
        result = FinitePoly.constant(self.field, self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def partial_derivative(self, var: str | int) -> "FinitePoly":
        """Formal derivative: the exponent is reduced mod ``p`` as a coefficient."""
        i = self.variables.index(var) if isinstance(var, str) else var
        F = self.field
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            m = F.from_int(e[i])
            if m == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            out[tuple(ne)] = F.mul(m, c)
        return FinitePoly(F, self.variables, out)

    def gradient(self) -> list["FinitePoly"]:
        return [self.partial_derivative(i) for i in range(len(self.variables))]

    def eval(self, point: Sequence[int], field: FiniteField | None = None) -> int:
        """Value at ``point``; coordinates may live in an extension ``field``."""
        F = self.field if field is None else field
        if len(point) != len(self.variables):
            raise InvalidInput(f"point has {len(point)} coordinates, need {len(self.variables)}")
        for v in point:
            F.check(v)
        total = 0
        for e, c in self.terms.items():
            term = c if F is self.field else F.embed(c, self.field)
            for v, k in zip(point, e):
                if k:
                    term = F.mul(term, F.pow(v, k))
                    if term == 0:
                        break
            total = F.add(total, term)
        return total

    def over(self, field: FiniteField) -> "FinitePoly":
        """The same polynomial with coefficients pushed into an extension field."""
        if field == self.field:
            return self
        return FinitePoly(field, self.variables, {e: field.embed(c, self.field) for e, c in self.terms.items()})

    def restrict_to_line(self, point: Sequence[int], direction: Sequence[int]) -> list[int]:
        """Coefficients (lowest first) of ``s -> f(point + s*direction)``."""
        F = self.field
        lin = [[point[i], direction[i]] for i in range(len(self.variables))]
        total = [0]
        for e, c in self.terms.items():
            term = [c]
            for i, k in enumerate(e):
                for _ in range(k):
                    term = upoly_mul(F, term, lin[i])
            total = upoly_add(F, total, term)
        return upoly_trim(total)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"FinitePoly({self.field}, {self.variables}, {format_poly(self)!r})"


# univariate helpers, coefficient lists lowest degree first


def upoly_trim(a: list[int]) -> list[int]:
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def upoly_add(F: FiniteField, a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]


def upoly_mul(F: FiniteField, a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


def vanishing_order(a: Sequence[int]) -> int | None:
    """Order of the zero at ``s = 0``; ``None`` for the zero polynomial."""
    for i, c in enumerate(a):
        if c:
            return i
    return None


# printing and parsing


def format_element(F: FiniteField, c: int) -> str:
    """Integers for the prime field; ``g`` (the Conway root) otherwise, as in ``g^2 + 1``."""
    if c < F.p:
        return str(c)
    parts = []
    for i, d in reversed(list(enumerate(F.to_vector(c)))):
        if d == 0:
            continue
        base = "1" if i == 0 else ("g" if i == 1 else f"g^{i}")
        if i == 0:
            parts.append(str(d))
        else:
            parts.append(base if d == 1 else f"{d}*{base}")
    return "(" + " + ".join(parts) + ")"


def format_poly(f: FinitePoly) -> str:
    if not f.terms:
        return "0"
    F = f.field
    out = []
    for e, c in f.terms.items():
        mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(f.variables, e) if k)
        if not mono:
            out.append(format_element(F, c))
        elif c == 1:
            out.append(mono)
        else:
            out.append(f"{format_element(F, c)}*{mono}")
    return " + ".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        num, name, sym = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif name is not None:
            tokens.append(("name", name))
        else:
            if sym not in "+-*^()":
                raise InvalidInput(f"unexpected character {sym!r} in polynomial {text!r}")
            tokens.append(("sym", sym))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, F: FiniteField, variables: tuple[str, ...]):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.F = F
        self.vars = variables

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise InvalidInput(f"could not parse polynomial {self.text!r} near token {self.i}")
        self.i += 1
        return tok

    def const(self, c: int) -> FinitePoly:
        return FinitePoly.constant(self.F, self.vars, c)

    def expr(self) -> FinitePoly:
        sign = self.sign()
        out = self.term()
        if sign:
            out = -out
        while self.peek() in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            t = self.term()
            out = out + t if op == "+" else out - t
        return out

    def sign(self) -> bool:
        neg = False
        while self.peek() in (("sym", "+"), ("sym", "-")):
            neg ^= self.take()[1] == "-"
        return neg

    def term(self) -> FinitePoly:
        out = self.power()
        while True:
            tok = self.peek()
            if tok == ("sym", "*"):
                self.take()
                out = out * self.power()
            elif tok[0] in ("num", "name") or tok == ("sym", "("):
                out = out * self.power()  # juxtaposition, e.g. "2x" or "(x+y)(x-y)"
            else:
                return out

    def power(self) -> FinitePoly:
        base = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            n = int(self.take("num")[1])
            base = base ** n
        return base

    def atom(self) -> FinitePoly:
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return self.const(self.F.from_int(int(val)))
        if kind == "name":
            self.take()
            if val in self.vars:
                return FinitePoly.variable(self.F, self.vars, val)
            if val == "g":
                return self.const(self.F.generator)
            raise InvalidInput(f"unknown symbol {val!r}; variables are {self.vars} and g is the field generator")
        if (kind, val) == ("sym", "("):
            self.take()
            inner = self.expr()
            self.take("sym", ")")
            return inner
        if (kind, val) in (("sym", "-"), ("sym", "+")):
            neg = self.sign()
            inner = self.power()
            return -inner if neg else inner
        raise InvalidInput(f"could not parse polynomial {self.text!r}")


def parse_poly(text: str, field: FiniteField, variables: Sequence[str] = ("x", "y", "z")) -> FinitePoly:
    """Parse e.g. ``"x^3*z + y^4"`` or ``"g*x^2*y + 2*z^3"`` (``g`` is the Conway root)."""
    if not isinstance(text, str) or not text.strip():
        raise InvalidInput("empty polynomial string")
    p = _Parser(text, field, tuple(variables))
    out = p.expr()
    if p.i != len(p.toks):
        raise InvalidInput(f"trailing input in polynomial {text!r}")
    return out
