"""(-1)-classes, (-2)-roots, Weyl reflections and Dynkin types of root sets."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import InvalidR, NotADE, NotARoot
from .lattice import DivisorClass, _check_r, canonical_class, intersect


def _solutions(r: int, self_int: int, deg: int) -> list[DivisorClass]:
    """All integral classes with ``C^2 = self_int`` and ``-K.C = deg``.

    With ``s = sum b_i = 3a - deg`` and ``q = sum b_i^2 = a^2 - self_int``,
    Cauchy-Schwarz gives ``s^2 <= r*q``, which bounds ``a``; the coordinate
    search below is exhaustive over ``b_i^2 <= q`` and only prunes branches whose
    remaining sum and sum of squares cannot be met (again by Cauchy-Schwarz).
    """
    found = []
    a_bound = 3 * abs(deg) + 2 * abs(self_int) + 10
    for a in range(-a_bound, a_bound + 1):
        s = 3 * a - deg
        q = a * a - self_int
        if q < 0 or s * s > r * q or (s - q) % 2:
            continue
        if r == 0:
            if s == 0 and q == 0:
                found.append(DivisorClass((a,)))
            continue
        bmax = math.isqrt(q)
        b: list[int] = []

        def rec(i: int, s_left: int, q_left: int) -> None:
            slots = r - i
            if slots == 0:
                if s_left == 0 and q_left == 0:
                    found.append(DivisorClass((a, *b)))
                return
            if q_left < 0 or s_left * s_left > slots * q_left:
                return
            lim = min(bmax, math.isqrt(q_left))
            for v in range(-lim, lim + 1):
                b.append(v)
                rec(i + 1, s_left - v, q_left - v * v)
                b.pop()

        rec(0, s, q)
    return sorted(found)


@lru_cache(maxsize=None)
def _minus1(r: int) -> tuple[DivisorClass, ...]:
    return tuple(_solutions(r, -1, 1))


@lru_cache(maxsize=None)
def _roots(r: int) -> tuple[DivisorClass, ...]:
    return tuple(_solutions(r, -2, 0))


def enum_minus1_classes(r: int) -> list[DivisorClass]:
    """Every class with ``C^2 = -1`` and ``-K.C = 1``, sorted lexicographically."""
    if not isinstance(r, int) or not 1 <= r <= 8:
        raise InvalidR(f"enumeration needs 1 <= r <= 8, got {r!r}")
    return list(_minus1(r))


def enum_root_classes(r: int) -> list[DivisorClass]:
    """Every class with ``C^2 = -2`` and ``K.C = 0`` (both signs), sorted."""
    if not isinstance(r, int) or not 1 <= r <= 8:
        raise InvalidR(f"enumeration needs 1 <= r <= 8, got {r!r}")
    return list(_roots(r))


def is_root(rho: DivisorClass) -> bool:
    return intersect(rho, rho) == -2 and intersect(canonical_class(rho.r), rho) == 0


def reflect(c: DivisorClass, rho: DivisorClass) -> DivisorClass:
    """Weyl reflection ``s_rho(C) = C + (C.rho) rho``."""
    if not is_root(rho):
        raise NotARoot(f"{rho} is not a (-2)-root")
    c._same(rho)
    return _reflect_root(c, rho)


def _reflect_root(c: DivisorClass, rho: DivisorClass) -> DivisorClass:
    """``reflect`` without the root check, for roots the caller built itself."""
    k = intersect(c, rho)
    if not k:
        return c
    return DivisorClass._raw(tuple(x + k * y for x, y in zip(c.coeffs, rho.coeffs)))


def is_positive_root(rho: DivisorClass) -> bool:
    """Positivity for the ordering used by effective roots of point blowups.

    ``E_i - E_j`` with ``i < j`` and anything with positive ``H`` coefficient
    count as positive.
    """
    if rho.a != 0:
        return rho.a > 0
    # a == 0: rho = E_i - E_j, stored with b_i = -1, b_j = +1
    for v in rho.b:
        if v:
            return v < 0
    return False


def _rank(vectors: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class RootBasis:
    """Simple roots: pairwise products 0 or 1, linearly independent."""

    r: int
    roots: tuple[DivisorClass, ...] = ()

    def __post_init__(self):
        _check_r(self.r)
        roots = tuple(self.roots)
        object.__setattr__(self, "roots", roots)
        for rho in roots:
            if rho.r != self.r:
                raise NotARoot(f"root {rho} does not live on r={self.r}")
            if not is_root(rho):
                raise NotARoot(f"{rho} has rho^2={intersect(rho, rho)}, K.rho={intersect(canonical_class(self.r), rho)}")
        for i, x in enumerate(roots):
            for y in roots[i + 1:]:
                if intersect(x, y) not in (0, 1):
                    raise NotARoot(f"{x} and {y} meet in {intersect(x, y)}, not a simple-root pair")
        if len(set(roots)) != len(roots) or (roots and _rank([x.coeffs for x in roots]) != len(roots)):
            raise NotARoot("roots are linearly dependent")

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def _component_type(nodes: list[int], adj: dict[int, set[int]]) -> tuple[str, int]:
    n = len(nodes)
    edges = sum(len(adj[v]) for v in nodes) // 2
    if edges != n - 1:
        raise NotADE("intersection graph has a cycle")
    degs = {v: len(adj[v]) for v in nodes}
    if max(degs.values(), default=0) > 3:
        raise NotADE("a root meets four or more others")
    branch = [v for v in nodes if degs[v] == 3]
    if not branch:
        return "A", n
    if len(branch) > 1:
        raise NotADE("more than one branch node")
    centre = branch[0]
    arms = []
    for start in adj[centre]:
        length, prev, cur = 1, centre, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return "D", n
    if arms == [1, 2, 2]:
        return "E", 6
    if arms == [1, 2, 3]:
        return "E", 7
    if arms == [1, 2, 4]:
        return "E", 8
    raise NotADE(f"branch arms {arms} are not of type D or E")


def ade_components(basis: RootBasis) -> list[tuple[str, int]]:
    """Dynkin components ``(letter, rank)`` sorted by rank, then letter."""
    roots = basis.roots
    adj: dict[int, set[int]] = {i: set() for i in range(len(roots))}
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if intersect(roots[i], roots[j]) == 1:
                adj[i].add(j)
                adj[j].add(i)
    seen: set[int] = set()
    comps = []
    for v in range(len(roots)):
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(_component_type(comp, adj))
    return sorted(comps, key=lambda t: (t[1], t[0]))


def format_ade(components: Sequence[tuple[str, int]]) -> str:
    if not components:
        return ""
    counts = Counter(components)
    ordered = sorted(counts, key=lambda t: (t[1], t[0]))
    parts = []
    for letter, rank in ordered:
        m = counts[(letter, rank)]
        parts.append(f"{m if m > 1 else ''}{letter}{rank}")
    return "+".join(parts)


def ade_type(basis: RootBasis) -> str:
    """Canonical Dynkin label, e.g. ``"7A1"``, ``"A1+D6"``, ``"E8"``; empty basis gives ``""``."""
    return format_ade(ade_components(basis))
