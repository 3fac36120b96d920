"""Coefficient tests for inseparable families over small finite fields.

Checks the characteristic 2 conditions on double plane branch quartics and
cubic surfaces, then looks for non-reflexive plane quartics in
characteristic 3, where every smooth point is a flex.
"""

from delpezzo import fixtures
from delpezzo.ffcover import (
    GF,
    CubicSurface,
    DoublePlaneCover,
    case2a_insep_conditions,
    case2c_cusp_slope,
    cubic_all_cuspidal_condition,
    double_cover_singular_search,
    nonreflexive_sample_test,
    parse_poly,
    singular_points,
)
from delpezzo.ffcover.criteria import SPACE_VARS


def main():
    F2, F3 = GF(2), GF(3)
    for text in ("x^4", "x^3*y + x*y^2*z", "x^3*y + x*y*z^2"):
        print(f"g2 = yz - x^2, g4 = {text}: conditions hold = {case2a_insep_conditions(parse_poly(text, F2))}")
    F8 = GF(2, 3)
    g4 = parse_poly("x^3*z + y^4 + x*y^2*z", F8)
    print(f"cusp slopes along y^2 = 0 for g4 = {g4}: "
          f"{[case2c_cusp_slope(g4, b) for b in range(1, 8)]}")

    cubic = CubicSurface(parse_poly(fixtures.load("fermat_cubic")["cubic"], F2, SPACE_VARS))
    print(f"\nthe Fermat cubic {cubic.equation} has all cuspidal sections: "
          f"{cubic_all_cuspidal_condition(cubic)}")

    data = fixtures.load("seven_lines")
    cover = DoublePlaneCover(parse_poly(data["g2"], F2), parse_poly(data["g4"], F2))
    sing = sorted(p[:3] for p in singular_points(cover, 1))
    print(f"w^2 + w g2 + g4 with g2 = {data['g2'] or 0}, g4 = {data['g4']} is singular over {len(sing)} points: {sing}")
    smooth = DoublePlaneCover(parse_poly("y*z + x^2", F2), parse_poly("x*y^3 + z^4", F2))
    print(f"a cover with g4 = x*y^3 + z^4 has a singular point up to F_8: {double_cover_singular_search(smooth, 3)}")

    print()
    for text, ext in (("z*x^3 + x*y^3 + y*z^3", 3), ("x^4 + y^4 + z^4 + x^2*y*z", 1),
                      ("x^4 + y^4 + z^4 + x^2*y*z", 2)):
        rep = nonreflexive_sample_test(parse_poly(text, F3), ext)
        print(f"{text} over F_{3 ** ext}: {rep.verdict.value}, witness {rep.witness}, "
              f"{rep.smooth_points} smooth points")


if __name__ == "__main__":
    main()
