"""Lattice-triangle geometry: Pick's identity and Scott's inequality.

Walks through area, boundary/interior point counts, the Pick relation
2A = 2I + B - 2, and Scott's bound B <= 2I + 7 with its unique extremal
shape.
"""

from cleantri import lattice
from cleantri.lattice import LatticeTriangle, pick_counts, scott_exhaustive, twice_area

T = LatticeTriangle.from_coords


def main():
    t = T(0, 0, -3, -3, 2, 4)
    pc = pick_counts(t)
    print(f"triangle {t}")
    print(f"  twice area = {twice_area(t)}")
    print(f"  boundary points B = {pc.boundary}, interior points I = {pc.interior}")
    print(f"  Pick check: 2I + B - 2 = {2 * pc.interior + pc.boundary - 2}")
    print()

    iso = T(1, 1, 1, 4, 4, 1)
    pc = pick_counts(iso)
    print(f"right isosceles with legs 3: I = {pc.interior}, B = {pc.boundary}")
    print(f"  Scott bound 2I + 7 = {2 * pc.interior + 7}  (equality!)")
    print()

    rep = scott_exhaustive(5)
    print(f"exhaustive scan of the 6x6 grid: {rep.checked} triangles")
    print(f"  violations of B <= 2I + 7: {len(rep.violations)}")
    print(f"  equality cases: {len(rep.equality_cases)}")
    print(f"  distinct base forms among equality cases: {set(rep.equality_base_forms)}")
    for t in rep.equality_cases[:3]:
        bf, _ = lattice.reduce_to_base_form(t)
        print(f"    {t} -> base form {bf.as_tuple()}")


if __name__ == "__main__":
    main()
