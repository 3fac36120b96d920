"""Low-degree curve classes, pathology flags and the component census.

The census returns the predicted irreducible components of the space of rational
curves in a nef class ``beta`` on a del Pezzo surface, together with whether the
characteristic hypotheses under which the prediction is known are met.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .curves import ade_type
from .errors import DegreeTooSmall, HodgeViolation, InvalidChar, InvalidDegree, NotDelPezzo, NotNef
from .lattice import DivisorClass, anticanonical, degree, intersect
from .surface import SurfaceModel, is_nef


class Tri(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


def tri(value) -> Tri:
    if isinstance(value, Tri):
        return value
    if isinstance(value, bool):
        return Tri.YES if value else Tri.NO
    return Tri(str(value).lower())


def check_char(p: int) -> None:
    if isinstance(p, bool) or not isinstance(p, int) or p < 0 or p == 1:
        raise InvalidChar(f"characteristic must be 0 or a prime, got {p!r}")
    if p > 1 and any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise InvalidChar(f"characteristic must be 0 or a prime, got {p}")


def delta(d: int) -> int:
    """Smallest characteristic for which the census applies in degree ``d`` (``p = 0`` always does)."""
    if isinstance(d, bool) or not isinstance(d, int) or not 1 <= d <= 9:
        raise InvalidDegree(f"degree must lie in 1..9, got {d!r}")
    if d >= 4:
        return 2
    if d >= 2:
        return 3
    return 11


def expected_dim(beta: DivisorClass) -> int:
    return degree(beta) - 1


# Pathology flags

# Dynkin types of the anticanonical models, by characteristic.
TYPE1_SPORADIC = {
    2: frozenset({"E8", "D8", "A1+E7", "2A1+D6", "2D4", "4A1+D4", "8A1"}),
    3: frozenset({"E8", "A2+E6", "4A2"}),
}
TYPE2_SPORADIC = {2: frozenset({"E7", "A1+D6", "3A1+D4", "7A1"})}


@dataclass(frozen=True)
class PathologyFlags:
    type1: Tri = Tri.NO
    type2: Tri = Tri.NO
    type3: Tri = Tri.NO
    source: str = "asserted"

    def __post_init__(self):
        for name in ("type1", "type2", "type3"):
            object.__setattr__(self, name, tri(getattr(self, name)))

    def validate(self, p: int, d: int) -> None:
        """Check the structural constraints for characteristic ``p`` and degree ``d``."""
        from .errors import InvalidInput

        flags = (self.type1, self.type2, self.type3)
        if p not in (2, 3) and any(f is not Tri.NO for f in flags):
            raise InvalidInput("pathology types only occur in characteristic 2 or 3")
        if p == 2 and self.type3 is not self.type1:
            raise InvalidInput("in characteristic 2 Type 3 coincides with Type 1")
        if p == 3 and self.type3 is not Tri.NO:
            raise InvalidInput("Type 3 only occurs in characteristic 2")
        if p == 3 and self.type2 is Tri.YES:
            raise InvalidInput("Type 2 only occurs in characteristic 2")
        if self.type2 is Tri.YES and d != 2:
            raise InvalidInput("Type 2 requires degree 2")
        if (self.type1 is Tri.YES or self.type3 is Tri.YES) and d != 1:
            raise InvalidInput("Types 1 and 3 require degree 1")

    def to_json(self) -> dict:
        return {"type1": str(self.type1), "type2": str(self.type2), "type3": str(self.type3),
                "source": self.source}


def pathology_from_roots(S: SurfaceModel, p: int) -> PathologyFlags:
    """Match the Dynkin type of the (-2)-curves against the sporadic lists.

    A match gives ``yes``.  Outside characteristics 2 and 3, in the wrong degree,
    or on a del Pezzo model (no (-2)-curves) the answer is ``no``.  Otherwise the
    answer is ``unknown`` since the infinite families are not listed.
    """
    check_char(p)
    d = S.degree
    if p not in (2, 3) or S.is_del_pezzo():
        return PathologyFlags(source="sporadic_list")
    label = ade_type(S.effective_roots)
    if d == 1:
        t1 = Tri.YES if label in TYPE1_SPORADIC[p] else Tri.UNKNOWN
    else:
        t1 = Tri.NO
    if d == 2 and p == 2:
        t2 = Tri.YES if label in TYPE2_SPORADIC[2] else Tri.UNKNOWN
    else:
        t2 = Tri.NO
    t3 = t1 if p == 2 else Tri.NO
    return PathologyFlags(t1, t2, t3, source="sporadic_list")


def excess_family_predicate(flags: PathologyFlags) -> Tri:
    """Whether a dominant family of larger than expected dimension exists."""
    values = (flags.type1, flags.type2, flags.type3)
    if Tri.YES in values:
        return Tri.YES
    if all(v is Tri.NO for v in values):
        return Tri.NO
    return Tri.UNKNOWN


# Low-degree classification


class LowDegreeCase(str, Enum):
    MINUS_TWO_CURVE = "MinusTwoCurve"
    MINUS_ONE_CURVE = "MinusOneCurve"
    ANTICANONICAL_DEGREE1 = "AnticanonicalDegree1"
    CONIC_FIBRATION_FIBER = "ConicFibrationFiber"
    ANTICANONICAL_DEGREE2 = "AnticanonicalDegree2"
    TWO_K_TIMES = "TwoKTimes"


@dataclass(frozen=True)
class LowDegreeClassification:
    case: LowDegreeCase
    anticanonical_degree: int
    self_intersection: int
    surface_degree: int
    # only meaningful for AnticanonicalDegree1: can the class move in a quasi-elliptic pencil?
    quasi_elliptic: Tri = Tri.NO

    def to_json(self) -> dict:
        return {"case": self.case.value, "degree": self.anticanonical_degree,
                "self_intersection": self.self_intersection, "quasi_elliptic": str(self.quasi_elliptic)}


def classify_low_degree(S: SurfaceModel, C: DivisorClass,
                        flags: PathologyFlags | None = None) -> LowDegreeClassification:
    e = degree(C)
    s = intersect(C, C)
    d = S.degree
    if not 0 <= e <= 2:
        raise HodgeViolation(f"-K.C = {e} is outside 0..2")
    if (s - e) % 2:
        raise HodgeViolation(f"C^2 + K.C = {s - e} is odd")
    if d * s > e * e:
        raise HodgeViolation(f"Hodge index: {d}*{s} > {e}^2")
    case = None
    qe = Tri.NO
    if e == 0 and s == -2:
        case = LowDegreeCase.MINUS_TWO_CURVE
    elif e == 1 and s == -1:
        case = LowDegreeCase.MINUS_ONE_CURVE
    elif e == 1 and s == 1 and d == 1:
        case = LowDegreeCase.ANTICANONICAL_DEGREE1
        qe = Tri.NO if flags is None else flags.type1
    elif e == 2 and s == 0:
        case = LowDegreeCase.CONIC_FIBRATION_FIBER
    elif e == 2 and s == 2 and d in (1, 2):
        case = LowDegreeCase.ANTICANONICAL_DEGREE2
    elif e == 2 and s == 4 and d == 1:
        case = LowDegreeCase.TWO_K_TIMES
    if case is None:
        raise HodgeViolation(f"no rational curve has -K.C = {e}, C^2 = {s} in degree {d}")
    return LowDegreeClassification(case, e, s, d, qe)


# Conics and the census


@dataclass(frozen=True)
class ConicClass:
    cls: DivisorClass
    multiplicity: int
    square: int

    def to_json(self) -> dict:
        return {"class": self.cls.to_json(), "m": self.multiplicity, "square": self.square}


def conic_classes(S: SurfaceModel, beta: DivisorClass) -> list[ConicClass]:
    """Nef classes ``Q`` with ``-K.Q = 2`` and ``beta = m*Q`` for a positive integer ``m``."""
    e = degree(beta)
    out = []
    if e <= 0:
        return out
    for m in range(1, e // 2 + 1):
        if any(c % m for c in beta.coeffs):
            continue
        q = DivisorClass(tuple(c // m for c in beta.coeffs))
        if degree(q) == 2 and is_nef(S, q):
            out.append(ConicClass(q, m, intersect(q, q)))
    return out


class EntryKind(str, Enum):
    BIRATIONAL_FREE = "BirationalFree"
    CONIC_COVERS = "ConicCovers"
    CONIC_COVERS_AT_LEAST = "ConicCoversAtLeast"


@dataclass(frozen=True)
class CensusEntry:
    kind: EntryKind
    expected_dim: int
    conic: DivisorClass | None = None
    multiplicity: int | None = None

    def to_json(self) -> dict:
        out = {"kind": self.kind.value, "expected_dim": self.expected_dim}
        if self.conic is not None:
            out["conic"] = self.conic.to_json()
            out["m"] = self.multiplicity
        return out


@dataclass(frozen=True)
class ComponentCensus:
    applicable: bool
    reason: str
    entries: tuple[CensusEntry, ...] = field(default_factory=tuple)
    lower_bound_only: bool = False

    def kinds(self) -> list[str]:
        return [e.kind.value for e in self.entries]

    def to_json(self) -> dict:
        return {"applicable": self.applicable, "reason": self.reason,
                "entries": [e.to_json() for e in self.entries],
                "lower_bound_only": self.lower_bound_only}


def component_census(S: SurfaceModel, p: int, beta: DivisorClass,
                     exceptional: bool = False) -> ComponentCensus:
    check_char(p)
    if not S.is_del_pezzo():
        raise NotDelPezzo("the census is stated for del Pezzo surfaces")
    if not is_nef(S, beta):
        raise NotNef(f"{beta} is not nef")
    e = degree(beta)
    d = S.degree
    # -2K on a degree 1 surface is admitted as the first multiple of -2K
    if e < 3 and not (d == 1 and beta == 2 * anticanonical(S.r)):
        raise DegreeTooSmall(f"-K.beta = {e} < 3")
    if p != 0 and p < delta(d):
        return ComponentCensus(False, f"p < delta({d}) = {delta(d)}")
    if exceptional:
        return ComponentCensus(False, "excluded surface (Klein quartic double cover, characteristic 3)")
    dim = expected_dim(beta)
    free = CensusEntry(EntryKind.BIRATIONAL_FREE, dim)
    reason = "characteristic 0" if p == 0 else f"p = {p} >= delta({d}) = {delta(d)}"
    conics = conic_classes(S, beta)
    if not conics:
        return ComponentCensus(True, reason, (free,))
    q = conics[0]
    if q.square == 0:
        entries = (CensusEntry(EntryKind.CONIC_COVERS, dim, q.cls, q.multiplicity),)
        return ComponentCensus(True, reason, entries)
    if q.square == 2:
        entries = (free, CensusEntry(EntryKind.CONIC_COVERS, dim, q.cls, q.multiplicity))
        return ComponentCensus(True, reason, entries)
    # q.square == 4: d = 1 and beta is a multiple of -2K
    entries = (free, CensusEntry(EntryKind.CONIC_COVERS_AT_LEAST, dim, q.cls, q.multiplicity))
    return ComponentCensus(True, reason, entries, lower_bound_only=True)
