"""Fujita invariants of big classes and the maps that can break them.

The invariant a(S, L) is the least t with K + tL pseudo-effective.  A value
above the anticanonical one marks a class that some dominant family can
break; the breaking cases depend on the characteristic and Type flags.
"""

from fractions import Fraction

from delpezzo import (
    DivisorClass,
    adjoint_analyze,
    anticanonical,
    classify_breaking_cases,
    del_pezzo,
    fixtures,
    fujita_invariant,
    pathology_from_roots,
)
from delpezzo.surface import SurfaceModel


def main():
    p2 = SurfaceModel(0)
    print(f"a(P^2, H) = {fujita_invariant(p2, DivisorClass.of(1))}")

    S = del_pezzo(3)
    for L in (anticanonical(3), DivisorClass.of(1, 0, 0, 0), DivisorClass.of(2, 1, 0, 0)):
        res = adjoint_analyze(S, L)
        fiber = "" if res.fiber_class is None else f", fibers {res.fiber_class}"
        print(f"degree 6: L = {L}: a = {res.a}, rigid = {res.rigid}, {res.case_label.value}{fiber}")

    ct18 = SurfaceModel.from_json(fixtures.load("ct18"))
    flags = pathology_from_roots(ct18, 2)
    print(f"\nct18 in characteristic 2 has flags {flags.to_json()}")
    for case in classify_breaking_cases(ct18, 2, flags):
        print(f"  case {case.case_id}: {case.description} (a = {case.a_value}, possible: {case.possible.value})")
    assert all(c.a_value > Fraction(1) for c in classify_breaking_cases(ct18, 2, flags))


if __name__ == "__main__":
    main()
