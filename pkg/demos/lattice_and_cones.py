"""Curve classes and cones on blow-ups of the plane.

Counts the (-1)-curves and roots, tests nefness, and splits classes into
positive and negative parts on a degree 2 surface with seven A1 roots.
"""

from delpezzo import (
    DivisorClass,
    anticanonical,
    ade_type,
    del_pezzo,
    enum_minus1_classes,
    enum_root_classes,
    fixtures,
    is_nef,
    nef_decompose,
    zariski_decompose,
)
from delpezzo.surface import SurfaceModel


def main():
    print("(-1)-classes and (-2)-roots by number of blown-up points")
    for r in range(1, 9):
        print(f"  r={r}: {len(enum_minus1_classes(r)):3d} lines, {len(enum_root_classes(r)):3d} roots")

    dp1 = del_pezzo(8)
    beta = DivisorClass.of(6, *[2] * 8)
    print(f"\non a degree 1 del Pezzo, -2K = {beta} is nef: {is_nef(dp1, beta)}")
    print(f"and its negative {DivisorClass.of(6, *[-2] * 8)} is nef: {is_nef(dp1, DivisorClass.of(6, *[-2] * 8))}")

    D = DivisorClass.of(5, 2, 2, 1, 1, 1, 0, 0, 0)
    nd = nef_decompose(dp1, D)
    print(f"\n{D} splits along a chain of contractions: {nd.to_json()['coefficients']} "
          f"with {nd.terminal} residual {nd.residual}")
    assert nd.reconstruct() == D

    ct18 = SurfaceModel.from_json(fixtures.load("ct18"))
    print(f"\nthe ct18 model has root system {ade_type(ct18.effective_roots)}")
    L = DivisorClass.of(1, 1, 1, 1, 0, 0, 0, 0)
    zd = zariski_decompose(ct18, L)
    print(f"the line through three points, {L}, is its own negative part:")
    for c, x in zd.negative:
        print(f"  {x} * ({c})")
    K = anticanonical(7)
    print(f"while -K = {K} is nef there: {is_nef(ct18, K)}")


if __name__ == "__main__":
    main()
