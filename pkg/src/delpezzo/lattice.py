"""Picard lattice of the blowup of P^2 in r points.

A class is stored as ``(a; b_1, ..., b_r)`` and stands for ``a*H - sum b_i*E_i``,
so the exceptional class ``E_1`` is ``(0; -1, 0, ...)`` and ``-K`` is
``(3; 1, ..., 1)``.  The intersection form is ``diag(1, -1, ..., -1)`` in the
basis ``(H, E_1, ..., E_r)``; in the ``(a; b)`` coordinates this reads
``a*a' - sum b_i*b_i'``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from operator import mul
from typing import Iterable, Sequence

from .errors import InvalidInput, InvalidR, MismatchedLattice

MAX_R = 8


def _check_r(r: int) -> None:
    if not isinstance(r, int) or not 0 <= r <= MAX_R:
        raise InvalidR(f"r must be an integer in [0, {MAX_R}], got {r!r}")


@dataclass(frozen=True, order=True)
class DivisorClass:
    """An integral class ``a*H - sum b_i*E_i`` on the blowup in ``r`` points."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise InvalidInput("a divisor class needs at least the H coefficient")
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise InvalidInput(f"coefficients must be integers, got {c!r}")
        _check_r(len(coeffs) - 1)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> "DivisorClass":
        """Skip validation; for coefficient tuples built from already valid classes."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def of(cls, a: int, *b: int) -> "DivisorClass":
        return cls((a, *b))

    @property
    def r(self) -> int:
        return len(self.coeffs) - 1

    @property
    def a(self) -> int:
        return self.coeffs[0]

    @property
    def b(self) -> tuple[int, ...]:
        return self.coeffs[1:]

    def _same(self, other: "DivisorClass") -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError(f"expected DivisorClass, got {type(other).__name__}")
        if other.r != self.r:
            raise MismatchedLattice(f"classes live on r={self.r} and r={other.r}")

    def __add__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        self._same(other)
        return DivisorClass._raw(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        self._same(other)
        return DivisorClass._raw(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return DivisorClass._raw(tuple(-x for x in self.coeffs))

    def __mul__(self, k: int):
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return DivisorClass._raw(tuple(k * x for x in self.coeffs))

    __rmul__ = __mul__

    def __matmul__(self, other: "DivisorClass") -> int:
        return intersect(self, other)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "DivisorClass":
        if not isinstance(data, (list, tuple)):
            raise InvalidInput(f"a class must be a JSON array of integers, got {data!r}")
        return cls(tuple(data))

    def __str__(self) -> str:
        parts = []
        if self.a:
            parts.append(f"{self.a}H" if self.a != 1 else "H")
        for i, b in enumerate(self.b, 1):
            if b:
                c = -b
                mag = "" if abs(c) == 1 else str(abs(c))
                parts.append(("+ " if c > 0 else "- ") + f"{mag}E{i}")
        if not parts:
            return "0"
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else s


def hyperplane(r: int) -> DivisorClass:
    _check_r(r)
    return DivisorClass((1,) + (0,) * r)


def exceptional(r: int, i: int) -> DivisorClass:
    """The exceptional class ``E_i`` (1-based)."""
    _check_r(r)
    if not 1 <= i <= r:
        raise InvalidInput(f"E_{i} does not exist for r={r}")
    b = [0] * r
    b[i - 1] = -1
    return DivisorClass((0, *b))


def zero(r: int) -> DivisorClass:
    _check_r(r)
    return DivisorClass((0,) * (r + 1))


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    try:
        c1, c2 = d1.coeffs, d2.coeffs
    except AttributeError:
        raise TypeError("intersect expects two DivisorClass values") from None
    if len(c1) != len(c2):
        d1._same(d2)
    return 2 * c1[0] * c2[0] - sum(map(mul, c1, c2))


def canonical_class(r: int) -> DivisorClass:
    """``K = -3H + sum E_i``, stored as ``(-3; -1, ..., -1)``."""
    _check_r(r)
    return DivisorClass((-3,) + (-1,) * r)


def anticanonical(r: int) -> DivisorClass:
    return -canonical_class(r)


def degree(d: DivisorClass) -> int:
    """Anticanonical degree ``-K . d``."""
    return intersect(anticanonical(d.r), d)


def arithmetic_genus(c: DivisorClass) -> Fraction:
    k = canonical_class(c.r)
    return Fraction(intersect(c, c) + intersect(k, c), 2) + 1


def gram_matrix(classes: Sequence[DivisorClass]) -> list[list[int]]:
    return [[intersect(x, y) for y in classes] for x in classes]


# Rational classes: tuples of Fractions in the same (a; b) coordinates.

RationalClass = tuple[Fraction, ...]


def as_rational(d: DivisorClass) -> RationalClass:
    return tuple(Fraction(c) for c in d.coeffs)


def rational_combination(terms: Iterable[tuple[Fraction | int, DivisorClass]], r: int) -> RationalClass:
    acc = [Fraction(0)] * (r + 1)
    for coeff, d in terms:
        if d.r != r:
            raise MismatchedLattice(f"class on r={d.r} in a combination over r={r}")
        for i, c in enumerate(d.coeffs):
            acc[i] += coeff * c
    return tuple(acc)


def rational_intersect(x: Sequence[Fraction | int], y: Sequence[Fraction | int]) -> Fraction:
    if len(x) != len(y):
        raise MismatchedLattice("rational classes of different length")
    return Fraction(x[0]) * y[0] - sum((Fraction(u) * v for u, v in zip(x[1:], y[1:])), Fraction(0))


def primitive_integral(x: Sequence[Fraction]) -> DivisorClass:
    """The primitive integral class on the ray spanned by a nonzero rational class."""
    from math import gcd, lcm

    den = lcm(*(Fraction(c).denominator for c in x))
    ints = [int(Fraction(c) * den) for c in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        raise InvalidInput("the zero class spans no ray")
    return DivisorClass(tuple(v // g for v in ints))


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"not a rational number: {s!r}") from exc
