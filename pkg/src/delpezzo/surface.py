"""Weak del Pezzo surfaces as Picard lattices with a set of effective (-2)-curves.

Cone computations use the generator set
``G = (-2)-curves + irreducible (-1)-curves + {-K}`` (``{H}`` on P^2 and
``{E_1, H - E_1}`` on F_1).  Pseudo-effectivity is exact cone membership in
``cone(G)``; nefness is nonnegativity against ``G``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import _simplex
from .curves import RootBasis, _reflect_root, enum_minus1_classes, reflect
from .errors import (
    DecompositionFailed,
    InternalInconsistency,
    InvalidModel,
    InvalidR,
    NotDelPezzo,
    NotNef,
    NotPseudoEffective,
)
from .lattice import (
    DivisorClass,
    RationalClass,
    _check_r,
    anticanonical,
    as_rational,
    exceptional,
    hyperplane,
    intersect,
    rational_combination,
    rational_intersect,
)


@dataclass(frozen=True)
class SurfaceModel:
    r: int
    effective_roots: RootBasis = None  # type: ignore[assignment]

    def __post_init__(self):
        _check_r(self.r)
        roots = self.effective_roots
        if roots is None:
            roots = RootBasis(self.r, ())
        elif not isinstance(roots, RootBasis):
            roots = RootBasis(self.r, tuple(roots))
        if roots.r != self.r:
            raise InvalidModel(f"roots live on r={roots.r}, model has r={self.r}")
        object.__setattr__(self, "effective_roots", roots)

    @property
    def degree(self) -> int:
        return 9 - self.r

    def is_del_pezzo(self) -> bool:
        return len(self.effective_roots) == 0

    @cached_property
    def negative_curves(self) -> tuple[DivisorClass, ...]:
        return tuple(irreducible_negative_curves(self))

    @cached_property
    def generators(self) -> tuple[DivisorClass, ...]:
        return tuple(effective_generators(self))

    def to_json(self) -> dict:
        return {"r": self.r, "effective_roots": [rho.to_json() for rho in self.effective_roots]}

    @classmethod
    def from_json(cls, data: dict) -> "SurfaceModel":
        if not isinstance(data, dict) or "r" not in data:
            raise InvalidModel('a model is a JSON object {"r": int, "effective_roots": [...]}')
        r = data["r"]
        raw = data.get("effective_roots", [])
        if not isinstance(raw, list):
            raise InvalidModel("effective_roots must be a list of integer arrays")
        roots = tuple(DivisorClass.from_json(v) for v in raw)
        try:
            return cls(r, RootBasis(r, roots))
        except InvalidR:
            raise
        except InvalidModel:
            raise
        except ValueError as exc:
            raise InvalidModel(str(exc)) from exc

    @classmethod
    def load(cls, path) -> "SurfaceModel":
        with open(path) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise InvalidModel(f"{path}: {exc}") from exc
        return cls.from_json(data)


def del_pezzo(r: int) -> SurfaceModel:
    return SurfaceModel(r)


def _check_same(S: SurfaceModel, D: DivisorClass) -> None:
    if D.r != S.r:
        from .errors import MismatchedLattice

        raise MismatchedLattice(f"class on r={D.r} used with a model on r={S.r}")


def irreducible_negative_curves(S: SurfaceModel) -> list[DivisorClass]:
    """The (-2)-curves plus the (-1)-classes meeting every (-2)-curve nonnegatively.

    On P^2 there are none and ``[H]`` is returned instead.
    """
    if S.r == 0:
        return [hyperplane(0)]
    roots = list(S.effective_roots)
    lines = [e for e in enum_minus1_classes(S.r) if all(intersect(e, rho) >= 0 for rho in roots)]
    return roots + lines


def effective_generators(S: SurfaceModel) -> list[DivisorClass]:
    if S.r == 0:
        return [hyperplane(0)]
    if S.r == 1:
        return [exceptional(1, 1), hyperplane(1) - exceptional(1, 1)]
    return list(S.negative_curves) + [anticanonical(S.r)]


def is_nef(S: SurfaceModel, D: DivisorClass) -> bool:
    _check_same(S, D)
    if intersect(D, hyperplane(S.r)) < 0 or intersect(D, anticanonical(S.r)) < 0:
        return False
    return all(intersect(D, g) >= 0 for g in S.generators)


def is_nef_rational(S: SurfaceModel, x: Sequence[Fraction]) -> bool:
    return all(rational_intersect(x, g.coeffs) >= 0 for g in S.generators)


def cone_coefficients(S: SurfaceModel, x: Sequence[Fraction | int]) -> list[Fraction] | None:
    """Nonnegative weights on ``S.generators`` summing to ``x``, if they exist."""
    return _simplex.cone_combination([g.coeffs for g in S.generators], list(x))


def is_pseudo_effective(S: SurfaceModel, D: DivisorClass | Sequence[Fraction]) -> bool:
    if isinstance(D, DivisorClass):
        _check_same(S, D)
        D = D.coeffs
    if len(D) != S.r + 1:
        from .errors import MismatchedLattice

        raise MismatchedLattice("class length does not match the model")
    return cone_coefficients(S, D) is not None


# Zariski decomposition


@dataclass(frozen=True)
class ZariskiDecomposition:
    positive: RationalClass
    negative: tuple[tuple[DivisorClass, Fraction], ...] = field(default_factory=tuple)

    @property
    def r(self) -> int:
        return len(self.positive) - 1

    def negative_class(self) -> RationalClass:
        return rational_combination(((c, d) for d, c in self.negative), self.r)

    def total(self) -> RationalClass:
        return tuple(p + n for p, n in zip(self.positive, self.negative_class()))

    def positive_is_zero(self) -> bool:
        return not any(self.positive)


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col] / aug[col][col]
                aug[i] = [u - f * v for u, v in zip(aug[i], aug[col])]
    return [aug[i][n] / aug[i][i] for i in range(n)]


def is_negative_definite(gram: Sequence[Sequence[int | Fraction]]) -> bool:
    """Sylvester's criterion on ``-gram`` via exact elimination."""
    n = len(gram)
    m = [[-Fraction(v) for v in row] for row in gram]
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                m[i] = [u - f * v for u, v in zip(m[i], m[k])]
    return True


def zariski_decompose(S: SurfaceModel, D: DivisorClass | Sequence[Fraction],
                      curves: Sequence[DivisorClass] | None = None) -> ZariskiDecomposition:
    """Zariski decomposition by the iterated Gram-system algorithm.

    ``D`` may be integral or a rational class.  At each round every negative
    curve meeting the current positive part negatively joins the support, and the
    coefficients are re-solved so that the positive part is orthogonal to the
    whole support.  ``curves`` overrides the order in which candidates are
    scanned (the result does not depend on it).
    """
    if isinstance(D, DivisorClass):
        _check_same(S, D)
        target = as_rational(D)
    else:
        target = tuple(Fraction(v) for v in D)
        if len(target) != S.r + 1:
            from .errors import MismatchedLattice

            raise MismatchedLattice("class length does not match the model")
    candidates = [c for c in (curves if curves is not None else S.generators) if intersect(c, c) < 0]
    support: list[DivisorClass] = []
    coeffs: list[Fraction] = []
    positive = target
    while True:
        bad = [c for c in candidates if c not in support and rational_intersect(positive, c.coeffs) < 0]
        if not bad:
            break
        support.extend(bad)
        gram = [[Fraction(intersect(x, y)) for y in support] for x in support]
        if not is_negative_definite(gram):
            raise NotPseudoEffective("support of the negative part is not negative definite")
        rhs = [rational_intersect(target, c.coeffs) for c in support]
        sol = _solve(gram, rhs)
        if sol is None or any(x <= 0 for x in sol):
            raise NotPseudoEffective("negative part would need a nonpositive coefficient")
        coeffs = sol
        neg = rational_combination(zip(coeffs, support), S.r)
        positive = tuple(t - n for t, n in zip(target, neg))
    if not is_nef_rational(S, positive):
        raise NotPseudoEffective("residual is not nef against a nonnegative generator")
    # canonical order of the negative part
    pairs = tuple(sorted(zip(support, coeffs)))
    return ZariskiDecomposition(positive, pairs)


# Nef decomposition along a chain of (-1)-curve contractions


@dataclass(frozen=True)
class NefDecomposition:
    """``D = sum n_k * phi_k^*(-K_{Y_k}) + phi^*(D')``.

    ``coeffs`` maps the degree ``k`` of ``Y_k`` to ``n_k`` for ``k = d..7``.
    ``terminal`` names the degree-8 end: ``"F1"`` (``residual`` is a class on the
    r=1 lattice) or ``"P1xP1"`` (``residual`` is the bidegree ``(x, y)`` with
    respect to the two rulings, pulled back as ``H - E_1`` and ``H - E_2``).
    ``chain`` lists the contracted (-1)-curves in the original lattice.
    """

    coeffs: dict[int, int]
    residual: DivisorClass | tuple[int, int]
    terminal: str
    chain: tuple[DivisorClass, ...]
    anticanonical_pullbacks: dict[int, DivisorClass]
    residual_pullback: DivisorClass

    def reconstruct(self) -> DivisorClass:
        total = self.residual_pullback
        for k, n in self.coeffs.items():
            total = total + n * self.anticanonical_pullbacks[k]
        return total

    def to_json(self) -> dict:
        residual = list(self.residual) if self.terminal == "P1xP1" else self.residual.to_json()
        return {"coefficients": {str(k): n for k, n in sorted(self.coeffs.items())},
                "terminal": self.terminal, "residual": residual,
                "residual_pullback": self.residual_pullback.to_json(),
                "chain": [c.to_json() for c in self.chain]}


def _extend(c: DivisorClass, r0: int) -> DivisorClass:
    return DivisorClass(c.coeffs + (0,) * (r0 - c.r))


def _truncate(c: DivisorClass, r: int) -> DivisorClass:
    if any(c.coeffs[r + 1:]):
        raise InternalInconsistency(f"{c} does not descend to r={r}")
    return DivisorClass(c.coeffs[: r + 1])


def _to_last_exceptional(e: DivisorClass) -> list[DivisorClass] | None:
    """Reflections taking the (-1)-class ``e`` to ``E_r``; ``None`` if impossible."""
    r = e.r
    target = exceptional(r, r)
    refl: list[DivisorClass] = []
    cur = e
    while cur.a > 0:
        if r < 3:
            return None
        order = sorted(range(r), key=lambda i: (-cur.b[i], i))[:3]
        rho = [0] * r
        for i in order:
            rho[i] = 1
        root = DivisorClass((1, *rho))
        nxt = _reflect_root(cur, root)
        if nxt.a >= cur.a:
            raise DecompositionFailed(f"Cremona step does not lower the degree of {cur}")
        refl.append(root)
        cur = nxt
    if cur != target:
        j = next(i for i, v in enumerate(cur.b) if v)
        rho = [0] * r
        rho[j], rho[r - 1] = -1, 1
        root = DivisorClass((0, *rho))
        refl.append(root)
        cur = _reflect_root(cur, root)
    if cur != target:
        raise InternalInconsistency(f"failed to move {e} onto E_{r}")
    return refl


def nef_decompose(S: SurfaceModel, D: DivisorClass) -> NefDecomposition:
    if not S.is_del_pezzo():
        raise NotDelPezzo("the nef decomposition is only defined on del Pezzo models")
    if S.r < 1:
        raise InvalidR("the nef decomposition needs degree <= 8 (r >= 1)")
    _check_same(S, D)
    if not is_nef(S, D):
        raise NotNef(f"{D} is not nef")
    r0 = S.r
    history: list[DivisorClass] = []  # reflections (in the r0 lattice), in application order

    def pull(c: DivisorClass) -> DivisorClass:
        x = _extend(c, r0)
        for rho in reversed(history):
            x = _reflect_root(x, rho)
        return x

    coeffs: dict[int, int] = {}
    pullbacks: dict[int, DivisorClass] = {}
    chain: list[DivisorClass] = []
    cur, r = D, r0
    terminal = "F1"
    residual: DivisorClass | tuple[int, int]
    while r >= 2:
        lines = enum_minus1_classes(r)  # sorted, so the first hit below is the smallest
        pairings = [intersect(cur, e) for e in lines]
        n = min(pairings)
        k = 9 - r
        coeffs[k] = n
        pullbacks[k] = pull(anticanonical(r))
        cur = cur - n * anticanonical(r)
        # (-K).E = 1 for every line, so the new pairings are the old ones minus n
        if n < 0 or intersect(cur, anticanonical(r)) < 0:
            raise DecompositionFailed(f"{cur} is not nef after removing {n}(-K) at degree {k}")
        e0 = lines[pairings.index(n)]
        refl = _to_last_exceptional(e0)
        if refl is None:
            # r = 2 and only H - E1 - E2 is orthogonal: the end is P1 x P1
            chain.append(pull(e0))
            terminal = "P1xP1"
            break
        for rho in refl:
            cur = _reflect_root(cur, rho)
            history.append(_extend(rho, r0))
        chain.append(pull(exceptional(r, r)))
        cur = _truncate(cur, r - 1)
        r -= 1
    if terminal == "P1xP1":
        x, y = cur.b
        if cur.a != x + y:
            raise InternalInconsistency(f"{cur} is not pulled back from P1 x P1")
        if x < 0 or y < 0:
            raise DecompositionFailed(f"residual bidegree ({x}, {y}) is not nef")
        residual = (x, y)
        rulings = (hyperplane(2) - exceptional(2, 1), hyperplane(2) - exceptional(2, 2))
        residual_pullback = pull(x * rulings[0] + y * rulings[1])
    else:
        if intersect(cur, exceptional(1, 1)) < 0 or intersect(cur, hyperplane(1) - exceptional(1, 1)) < 0:
            raise DecompositionFailed(f"residual {cur} is not nef on F1")
        residual = cur
        residual_pullback = pull(cur)
    result = NefDecomposition(coeffs, residual, terminal, tuple(chain), pullbacks, residual_pullback)
    if result.reconstruct() != D:
        raise InternalInconsistency(f"nef decomposition of {D} does not reconstruct it")
    return result


def contract_to_last(S: SurfaceModel, e: DivisorClass) -> tuple[SurfaceModel, list[DivisorClass]]:
    """Contract the (-1)-curve ``e`` on a del Pezzo model.

    Returns the smaller model and the reflections (on the r lattice) that move
    ``e`` to ``E_r``; push a class ``L`` with ``L.e = 0`` down with
    :func:`push_down`.
    """
    if not S.is_del_pezzo():
        raise NotDelPezzo("contraction is only implemented for del Pezzo models")
    refl = _to_last_exceptional(e)
    if refl is None:
        raise DecompositionFailed(f"{e} is not Weyl-equivalent to E_{S.r}")
    return SurfaceModel(S.r - 1), refl


def push_down(L: DivisorClass, refl: Sequence[DivisorClass]) -> DivisorClass:
    for rho in refl:
        L = reflect(L, rho)
    return _truncate(L, L.r - 1)
