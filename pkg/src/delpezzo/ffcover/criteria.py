"""Coefficient criteria for inseparable families on degree 2 and 3 del Pezzo surfaces.

Double covers of P^2 in characteristic 2 are ``w^2 + w g2 + g4 = 0``;
``a_ijk`` is the coefficient of ``x^i y^j z^k`` in ``g4``.  Cubic surfaces are
``sum y_ijkl x0^i x1^j x2^k x3^l``.  Plane quartics in characteristic 3 are
tested for non-reflexivity by checking whether every tangent is a flex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterator, Sequence

from ..errors import (
    FieldMismatch,
    InternalInconsistency,
    InvalidChar,
    InvalidInput,
    NotOnCurve,
    SingularPoint,
    Undefined,
    WrongDegree,
)
from .field import GF, FiniteField
from .poly import FinitePoly, vanishing_order

PLANE_VARS = ("x", "y", "z")
SPACE_VARS = ("x0", "x1", "x2", "x3")


def _char2(f: FinitePoly) -> None:
    if f.field.p != 2:
        raise InvalidChar(f"this criterion lives in characteristic 2, got {f.field}")


def _quartic(g4: FinitePoly) -> None:
    g4.require_form(4, 3)


def _a(g4: FinitePoly, i: int, j: int, k: int) -> int:
    return g4.coefficient((i, j, k))


# criteria for double planes


def case2a_insep_conditions(g4: FinitePoly) -> bool:
    """Every line has cuspidal preimage on ``w^2 + w(yz - x^2) + g4``.

    Holds iff ``a130 = a103 = 0``, ``a121 = a310`` and ``a112 = a301``.
    """
    _quartic(g4)
    _char2(g4)
    return (_a(g4, 1, 3, 0) == 0 and _a(g4, 1, 0, 3) == 0
            and _a(g4, 1, 2, 1) == _a(g4, 3, 1, 0) and _a(g4, 1, 1, 2) == _a(g4, 3, 0, 1))


def case2b_insep_conditions(g4: FinitePoly) -> bool:
    """Same question for ``g2 = yz``: iff ``a310 = a301 = 0``."""
    _quartic(g4)
    _char2(g4)
    return _a(g4, 3, 1, 0) == 0 and _a(g4, 3, 0, 1) == 0


def case2c_cusp_slope(g4: FinitePoly, b: int) -> int:
    """Slope ``c`` so that the line ``z = bx + cy`` has cuspidal preimage (``g2 = y^2``).

    The cusp condition is the vanishing of the ``x^3 y`` coefficient of
    ``g4(x, y, bx + cy)``, which is ``dg4/dy(p) + c dg4/dz(p)`` at ``p = (1:0:b)``.
    So ``c = dg4/dy(p) / dg4/dz(p)``.  The answer is checked against the expanded
    coefficient identity ``c(a301 + a103 b^2) = a310 + a211 b + a112 b^2 + a013 b^3``.
    """
    _quartic(g4)
    _char2(g4)
    F = g4.field
    F.check(b)
    p = (1, 0, b)
    gy = g4.partial_derivative("y").eval(p)
    gz = g4.partial_derivative("z").eval(p)
    if gz == 0:
        raise Undefined(f"dg4/dz vanishes at (1:0:{b}); no slope is determined")
    c = F.div(gy, gz)
    b2 = F.mul(b, b)
    b3 = F.mul(b2, b)
    lhs = F.mul(c, F.add(_a(g4, 3, 0, 1), F.mul(_a(g4, 1, 0, 3), b2)))
    rhs = F.sum([_a(g4, 3, 1, 0), F.mul(_a(g4, 2, 1, 1), b), F.mul(_a(g4, 1, 1, 2), b2),
                 F.mul(_a(g4, 0, 1, 3), b3)])
    if lhs != rhs:
        raise InternalInconsistency(f"slope {c} from derivatives fails the coefficient identity")
    # the line restriction itself is a third, direct check
    restricted = g4.restrict_to_line((1, 0, b), (0, 1, c))
    if len(restricted) > 1 and restricted[1] != 0:
        raise InternalInconsistency(f"x^3 y coefficient of g4 on z = {b}x + {c}y is nonzero")
    return c


# Double planes in characteristic 2


@dataclass(frozen=True)
class DoublePlaneCover:
    """``w^2 + w g2 + g4 = 0`` in ``P(1,1,1,2)``."""

    g2: FinitePoly
    g4: FinitePoly

    def __post_init__(self):
        if self.g2.field != self.g4.field or self.g2.variables != self.g4.variables:
            raise FieldMismatch("g2 and g4 must share a field and variables")
        self.g2.require_form(2, 3)
        self.g4.require_form(4, 3)
        _char2(self.g4)

    @property
    def field(self) -> FiniteField:
        return self.g2.field


def projective_points(F: FiniteField, n: int = 3) -> Iterator[tuple[int, ...]]:
    """Points of ``P^{n-1}(F)``, normalised so the last nonzero coordinate is 1."""
    for lead in range(n - 1, -1, -1):
        for head in product(range(F.q), repeat=lead):
            yield tuple(head) + (1,) + (0,) * (n - 1 - lead)


def singular_points(cover: DoublePlaneCover, k: int) -> Iterator[tuple[int, int, int, int]]:
    """Singular points ``(x, y, z, w)`` of the cover with coordinates in ``F_{2^k}``.

    ``dF/dw = g2`` must vanish, so over each plane point with ``g2 = 0`` the only
    candidate is ``w = sqrt(g4)``; the remaining partials
    ``dF/dv = w dg2/dv + dg4/dv`` are then tested.
    """
    base = cover.field
    if k % base.k:
        return
    F = GF(2, k)
    g2, g4 = cover.g2.over(F), cover.g4.over(F)
    d2 = [g2.partial_derivative(v) for v in PLANE_VARS]
    d4 = [g4.partial_derivative(v) for v in PLANE_VARS]
    for pt in projective_points(F):
        if g2.eval(pt) != 0:
            continue
        w = F.pth_root(g4.eval(pt))
        if all(F.add(F.mul(w, a.eval(pt)), b.eval(pt)) == 0 for a, b in zip(d2, d4)):
            yield pt + (w,)


def double_cover_singular_search(cover: DoublePlaneCover, max_ext: int) -> dict | None:
    """First singular point found over ``F_{2^k}``, ``k <= max_ext``.

    Returns ``{"ext": k, "point": [x, y, z, w]}`` or ``None``.  ``None`` does not
    prove smoothness.
    """
    if not isinstance(max_ext, int) or not 1 <= max_ext <= 9:
        raise InvalidInput(f"max_ext must lie in 1..9, got {max_ext!r}")
    for k in range(1, max_ext + 1):
        for pt in singular_points(cover, k):
            return {"ext": k, "point": list(pt)}
    return None


# Cubic surfaces in characteristic 2


MIXED = ((0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0))


@dataclass(frozen=True)
class CubicSurface:
    equation: FinitePoly

    def __post_init__(self):
        self.equation.require_form(3, 4)
        _char2(self.equation)
        if self.equation.is_zero():
            raise InvalidInput("the cubic form is identically zero")

    @property
    def field(self) -> FiniteField:
        return self.equation.field

    def y(self, i: int, j: int, k: int, l: int) -> int:
        return self.equation.coefficient((i, j, k, l))


def cubic_c4(S: CubicSurface, z: Sequence[int]) -> int:
    """``(y0111 z0 + y1011 z1 + y1101 z2 + y1110 z3)^4``."""
    F = S.field
    if len(z) != 4:
        raise InvalidInput("z must have four coordinates")
    lin = F.sum(F.mul(S.y(*e), F.check(v)) for e, v in zip(MIXED, z))
    return F.pow(lin, 4)


def cubic_all_cuspidal_condition(S: CubicSurface) -> bool:
    """Whether ``y0111 = y1011 = y1101 = y1110 = 0``."""
    return all(S.y(*e) == 0 for e in MIXED)


# Plane quartics in characteristic 3


def _tangent_direction(F: FiniteField, grad: Sequence[int], pt: Sequence[int]) -> tuple[int, int, int]:
    """A point on the line ``grad . v = 0`` other than ``pt``."""
    # kernel basis of a nonzero linear form
    i = next(j for j in range(3) if grad[j])
    basis = []
    for j in range(3):
        if j == i:
            continue
        v = [0, 0, 0]
        v[j] = 1
        v[i] = F.neg(F.div(grad[j], grad[i]))
        basis.append(tuple(v))
    for v in basis:
        # v is proportional to pt iff all 2x2 minors vanish
        if any(F.sub(F.mul(pt[a], v[b]), F.mul(pt[b], v[a])) for a in range(3) for b in range(a + 1, 3)):
            return v
    raise InternalInconsistency("kernel of the tangent form is one-dimensional")


def tangent_flex_multiplicity(q4: FinitePoly, pt: Sequence[int]) -> int | float:
    """Intersection multiplicity of the tangent line at ``pt`` with ``q4 = 0``.

    ``>= 3`` means a flex.  Returns ``math.inf`` if the tangent line is a
    component of the curve.
    """
    q4.require_form(4, 3)
    F = q4.field
    pt = tuple(F.check(v) for v in pt)
    if len(pt) != 3 or not any(pt):
        raise InvalidInput("a plane point needs three coordinates, not all zero")
    if q4.eval(pt) != 0:
        raise NotOnCurve(f"{list(pt)} is not on the curve")
    grad = [d.eval(pt) for d in q4.gradient()]
    if not any(grad):
        raise SingularPoint(f"the curve is singular at {list(pt)}")
    v = _tangent_direction(F, grad, pt)
    order = vanishing_order(q4.restrict_to_line(pt, v))
    return math.inf if order is None else order


class FlexVerdict(str, Enum):
    ALL_FLEX = "all_flex"
    FOUND_NONFLEX = "found_nonflex"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class FlexReport:
    verdict: FlexVerdict
    witness: tuple[int, int, int] | None = None
    smooth_points: int = 0
    singular_points: int = 0
    min_multiplicity: int | float | None = None

    def to_json(self) -> dict:
        return {"verdict": self.verdict.value,
                "witness": None if self.witness is None else list(self.witness),
                "smooth_points": self.smooth_points, "singular_points": self.singular_points,
                "min_multiplicity": None if self.min_multiplicity is None
                else ("inf" if self.min_multiplicity == math.inf else self.min_multiplicity)}


def plane_points(q4: FinitePoly, F: FiniteField) -> Iterator[tuple[int, int, int]]:
    g = q4.over(F)
    for pt in projective_points(F):
        if g.eval(pt) == 0:
            yield pt


def nonreflexive_sample_test(q4: FinitePoly, ext: int) -> FlexReport:
    """Check every smooth ``F_{3^ext}``-point of the quartic for a flex tangent."""
    q4.require_form(4, 3)
    if q4.field.p != 3:
        raise InvalidChar(f"non-reflexivity sampling is for characteristic 3, got {q4.field}")
    if not isinstance(ext, int) or not 1 <= ext <= 6 or ext % q4.field.k:
        raise InvalidInput(f"ext must lie in 1..6 and be a multiple of {q4.field.k}, got {ext!r}")
    F = GF(3, ext)
    g = q4.over(F)
    grads = g.gradient()
    smooth = singular = 0
    lowest = None
    for pt in plane_points(g, F):
        if not any(d.eval(pt) for d in grads):
            singular += 1
            continue
        smooth += 1
        m = tangent_flex_multiplicity(g, pt)
        lowest = m if lowest is None else min(lowest, m)
        if m < 3:
            return FlexReport(FlexVerdict.FOUND_NONFLEX, pt, smooth, singular, m)
    if smooth == 0:
        return FlexReport(FlexVerdict.INCONCLUSIVE, None, 0, singular, None)
    return FlexReport(FlexVerdict.ALL_FLEX, None, smooth, singular, lowest)


def is_klein_branch(q4: FinitePoly, ext: int = 3) -> bool:
    """Detector for the excluded char-3 surface: a smooth non-reflexive branch quartic.

    Sampling only: ``True`` means every sampled tangent was a flex and no
    singular point was seen over ``F_{3^ext}``.
    """
    if q4.field.p != 3:
        return False
    ext = max(ext, q4.field.k)
    ext += (-ext) % q4.field.k
    report = nonreflexive_sample_test(q4, ext)
    return report.verdict is FlexVerdict.ALL_FLEX and report.singular_points == 0
