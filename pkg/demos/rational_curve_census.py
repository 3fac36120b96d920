"""Components of the space of rational curves in a nef class.

In large enough characteristic every nef class has one birational free
component, plus one component of conic covers for each conic class that
divides it.  The census refuses to answer below the characteristic bound
and on the excluded Klein double plane.
"""

from delpezzo import DivisorClass, anticanonical, component_census, del_pezzo, delta
from delpezzo.ffcover import GF, is_klein_branch, parse_poly


def show(S, p, beta, exceptional=False):
    census = component_census(S, p, beta, exceptional)
    print(f"degree {S.degree}, p = {p}, beta = {beta}: {census.reason}")
    for e in census.entries:
        extra = "" if e.conic is None else f" with conic {e.conic}, m = {e.multiplicity}"
        print(f"  {e.kind.value}, expected dimension {e.expected_dim}{extra}")


def main():
    print("characteristic bounds:", {d: delta(d) for d in range(1, 10)})
    dp1 = del_pezzo(8)
    show(dp1, 11, anticanonical(8) * 2)
    show(dp1, 7, anticanonical(8) * 2)
    dp2 = del_pezzo(7)
    show(dp2, 0, DivisorClass.of(4, 2, 2, 1, 1, 1, 1, 1))

    F3 = GF(3)
    klein = parse_poly("x^3*z + y^3*x + z^3*y", F3)
    print(f"\nbranch quartic {klein} is the Klein case: {is_klein_branch(klein)}")
    show(dp2, 3, anticanonical(7) * 2, exceptional=is_klein_branch(klein))


if __name__ == "__main__":
    main()
