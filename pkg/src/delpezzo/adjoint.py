"""Fujita invariants, adjoint rigidity and the breaking-map case table."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import _simplex
from .errors import InternalInconsistency, NotBig, NotNef
from .lattice import (
    DivisorClass,
    RationalClass,
    canonical_class,
    format_rational,
    intersect,
    primitive_integral,
    rational_intersect,
)
from .manin import PathologyFlags, Tri, check_char
from .surface import SurfaceModel, ZariskiDecomposition, is_nef, zariski_decompose

INFINITE = math.inf


def fujita_invariant(S: SurfaceModel, L: DivisorClass) -> Fraction | float:
    """``min t`` with ``K + tL`` pseudo-effective; ``inf`` when ``L`` is not big.

    Solved as one exact LP in ``(lambda, t)``: minimise ``t`` subject to
    ``sum lambda_g g - t L = K`` with ``lambda, t >= 0``.
    """
    if not is_nef(S, L):
        raise NotNef(f"{L} is not nef")
    if intersect(L, L) <= 0:
        return INFINITE
    gens = S.generators
    K = canonical_class(S.r).coeffs
    n = len(gens)
    A = [[g.coeffs[i] for g in gens] + [-L.coeffs[i]] for i in range(S.r + 1)]
    cost = [0] * n + [1]
    res = _simplex.solve(A, K, cost)
    if res.status != _simplex.OPTIMAL:
        raise InternalInconsistency(f"Fujita LP for {L} ended {res.status}")
    return res.x[-1]


class CaseLabel(str, Enum):
    P2_O1 = "P2_O1"
    QUADRIC_O1 = "QUADRIC_O1"
    RULED_FIBRATION = "RULED_FIBRATION"
    P2_O2 = "P2_O2"
    GENERAL = "GENERAL"


@dataclass(frozen=True)
class AInvariantResult:
    a: Fraction | float
    rigid: bool
    case_label: CaseLabel
    fiber_class: DivisorClass | None = None
    boundary: RationalClass | None = None
    zariski: ZariskiDecomposition | None = None

    def to_json(self) -> dict:
        return {
            "a": "inf" if self.a == INFINITE else format_rational(self.a),
            "rigid": self.rigid,
            "case": self.case_label.value,
            "fiber": None if self.fiber_class is None else self.fiber_class.to_json(),
        }


def adjoint_analyze(S: SurfaceModel, L: DivisorClass) -> AInvariantResult:
    if not is_nef(S, L):
        raise NotNef(f"{L} is not nef")
    if intersect(L, L) <= 0:
        raise NotBig(f"L^2 = {intersect(L, L)} <= 0")
    a = fujita_invariant(S, L)
    K = canonical_class(S.r)
    boundary = tuple(Fraction(k) + a * l for k, l in zip(K.coeffs, L.coeffs))
    zd = zariski_decompose(S, boundary)
    fiber = None
    if zd.positive_is_zero():
        rigid = True
    else:
        rigid = False
        P = zd.positive
        if rational_intersect(P, P) != 0:
            raise InternalInconsistency(f"positive part of K + aL has P^2 = {rational_intersect(P, P)}")
        fiber = primitive_integral(P)
        if Fraction(2, intersect(L, fiber)) != a:
            raise InternalInconsistency(f"a = {a} but 2/(L.F) = {Fraction(2, intersect(L, fiber))}")
    if a == 3:
        label = CaseLabel.P2_O1
    elif a == 2:
        label = CaseLabel.QUADRIC_O1 if rigid else CaseLabel.RULED_FIBRATION
    elif a == Fraction(3, 2):
        label = CaseLabel.P2_O2
    elif a > 1:
        raise InternalInconsistency(f"a = {a} > 1 outside {{3, 2, 3/2}}")
    else:
        label = CaseLabel.GENERAL
    return AInvariantResult(a, rigid, label, fiber, boundary, zd)


# Breaking maps


@dataclass(frozen=True)
class BreakingCase:
    case_id: int
    description: str
    required_char: frozenset[int]
    required_degree: int
    required_type: str
    a_value: Fraction
    possible: Tri = Tri.YES

    def to_json(self) -> dict:
        return {"case": self.case_id, "description": self.description,
                "required_char": sorted(self.required_char), "required_degree": self.required_degree,
                "required_type": self.required_type, "a": format_rational(self.a_value),
                "possible": str(self.possible)}


BREAKING_TABLE = (
    BreakingCase(1, "base change of a quasi-elliptic fibration by a non-separable map to the base curve",
                 frozenset({2, 3}), 1, "Type1", Fraction(2)),
    BreakingCase(2, "purely inseparable degree 2 morphism from P^2 to the anticanonical model",
                 frozenset({2}), 2, "Type2", Fraction(3, 2)),
    BreakingCase(3, "purely inseparable degree 2 morphism from the quadric cone to the anticanonical model",
                 frozenset({2}), 1, "Type3", Fraction(2)),
    BreakingCase(4, "non-separable degree 4 morphism from P^2 to the anticanonical model",
                 frozenset({2}), 1, "Type1or3", Fraction(3, 2)),
)


def _type_flag(flags: PathologyFlags, required: str) -> Tri:
    if required == "Type1":
        return flags.type1
    if required == "Type2":
        return flags.type2
    if required == "Type3":
        return flags.type3
    a, b = flags.type1, flags.type3
    if Tri.YES in (a, b):
        return Tri.YES
    if a is Tri.NO and b is Tri.NO:
        return Tri.NO
    return Tri.UNKNOWN


def classify_breaking_cases(S: SurfaceModel, p: int, flags: PathologyFlags) -> list[BreakingCase]:
    """Rows of the breaking-map table compatible with ``S``, ``p`` and the flags."""
    check_char(p)
    if S.is_del_pezzo():
        return []
    out = []
    for row in BREAKING_TABLE:
        if p not in row.required_char or S.degree != row.required_degree:
            continue
        flag = _type_flag(flags, row.required_type)
        if flag is Tri.NO:
            continue
        out.append(BreakingCase(row.case_id, row.description, row.required_char, row.required_degree,
                                row.required_type, row.a_value, flag))
    return out


def breaking_dim_bound(a: Fraction | int, deg_pushed: int, dim_x: int) -> tuple[Fraction, bool]:
    """Dimension lower bound ``a*deg + dim X - 3`` for curves pushed through a breaking map.

    The second value says whether it beats the expected ``deg + dim X - 3``.
    """
    a = Fraction(a)
    if a <= 0 or deg_pushed < 0:
        from .errors import InvalidInput

        raise InvalidInput("need a > 0 and a nonnegative degree")
    bound = a * deg_pushed + dim_x - 3
    return bound, bound > deg_pushed + dim_x - 3
