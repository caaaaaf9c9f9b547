"""Exact planar lattice geometry for triangle classification.

Triangles live on Z^2 and all predicates are exact integer arithmetic.
The key operation is the reduction of an arbitrary lattice triangle to a
base-form representative (0,0), (b,0), (m,h) by an affine unimodular map,
with the witness map returned alongside.  Clean triangles (boundary lattice
points = vertices only) reduce to b = 1, and their equivalence test goes
through the orbit of m under the six residue maps mod h.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .arith import extended_gcd, ip_members, mod_inverse

__all__ = [
    "DegenerateTriangleError",
    "LatticePoint",
    "LatticeTriangle",
    "AffineUnimodularMap",
    "BaseForm",
    "PickCounts",
    "ScottResult",
    "ScottScanReport",
    "twice_area",
    "boundary_count",
    "pick_counts",
    "interior_count_enum",
    "is_clean",
    "is_empty",
    "apply_map",
    "reduce_to_base_form",
    "equivalent_clean",
    "scott_check",
    "scott_exhaustive",
    "enumerate_clean",
]

ENUM_BOX_BOUND = 10**8
SCOTT_SCAN_BOUND = 8
ENUMERATE_CLEAN_BOUND = 10**5


class DegenerateTriangleError(ValueError):
    """Raised when a triangle's vertices are collinear."""


@dataclass(frozen=True, order=True)
class LatticePoint:
    x: int
    y: int

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.x - other.x, self.y - other.y)

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.x + other.x, self.y + other.y)


@dataclass(frozen=True)
class LatticeTriangle:
    v0: LatticePoint
    v1: LatticePoint
    v2: LatticePoint

    @classmethod
    def from_coords(cls, x0, y0, x1, y1, x2, y2) -> "LatticeTriangle":
        return cls(LatticePoint(x0, y0), LatticePoint(x1, y1), LatticePoint(x2, y2))

    @property
    def vertices(self) -> tuple[LatticePoint, LatticePoint, LatticePoint]:
        return (self.v0, self.v1, self.v2)

    def vertex_set(self) -> frozenset[LatticePoint]:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class AffineUnimodularMap:
    """x -> M x + t with M = [[a, b], [c, d]], det M = +-1, integer t."""

    a: int
    b: int
    c: int
    d: int
    t: LatticePoint = LatticePoint(0, 0)

    def __post_init__(self) -> None:
        if self.det not in (1, -1):
            raise ValueError(f"matrix determinant must be +-1, got {self.det}")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @classmethod
    def identity(cls) -> "AffineUnimodularMap":
        return cls(1, 0, 0, 1)

    @classmethod
    def translation(cls, t: LatticePoint) -> "AffineUnimodularMap":
        return cls(1, 0, 0, 1, t)

    def apply(self, p: LatticePoint) -> LatticePoint:
        return LatticePoint(
            self.a * p.x + self.b * p.y + self.t.x,
            self.c * p.x + self.d * p.y + self.t.y,
        )

    def compose(self, other: "AffineUnimodularMap") -> "AffineUnimodularMap":
        """self after other: (self.compose(other))(p) = self(other(p))."""
        return AffineUnimodularMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            LatticePoint(
                self.a * other.t.x + self.b * other.t.y + self.t.x,
                self.c * other.t.x + self.d * other.t.y + self.t.y,
            ),
        )

    def inverse(self) -> "AffineUnimodularMap":
        s = self.det  # +-1, so the adjugate scaled by s is the exact inverse
        ia, ib, ic, id_ = s * self.d, -s * self.b, -s * self.c, s * self.a
        return AffineUnimodularMap(
            ia,
            ib,
            ic,
            id_,
            LatticePoint(-(ia * self.t.x + ib * self.t.y), -(ic * self.t.x + id_ * self.t.y)),
        )


@dataclass(frozen=True)
class BaseForm:
    """Reduced triangle (0,0), (b,0), (m,h) with the base the richest edge."""

    b: int
    m: int
    h: int

    def __post_init__(self) -> None:
        if self.b <= 0 or self.h <= 0:
            raise ValueError(f"b and h must be positive: {self}")
        if not (0 <= self.m < self.h):
            raise ValueError(f"m must satisfy 0 <= m < h: {self}")
        if self.b < math.gcd(self.m, self.h) or self.b < math.gcd(self.m - self.b, self.h):
            raise ValueError(f"base edge carries fewer lattice points than a leg: {self}")

    def triangle(self) -> LatticeTriangle:
        return LatticeTriangle.from_coords(0, 0, self.b, 0, self.m, self.h)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.b, self.m, self.h)


@dataclass(frozen=True)
class PickCounts:
    interior: int
    boundary: int
    twice_area: int

    def __post_init__(self) -> None:
        if self.twice_area != 2 * self.interior + self.boundary - 2:
            raise ValueError(f"Pick identity violated: {self}")


def twice_area(t: LatticeTriangle) -> int:
    """|cross product of two edge vectors|; raises on collinear vertices."""
    u = t.v1 - t.v0
    v = t.v2 - t.v0
    cross = u.x * v.y - u.y * v.x
    if cross == 0:
        raise DegenerateTriangleError(f"collinear vertices: {t.vertices}")
    return abs(cross)


def boundary_count(t: LatticeTriangle) -> int:
    """Lattice points on the three sides: sum of edge gcds."""
    twice_area(t)  # degeneracy check
    total = 0
    for p, q in ((t.v0, t.v1), (t.v1, t.v2), (t.v2, t.v0)):
        d = q - p
        total += math.gcd(abs(d.x), abs(d.y))
    return total


def pick_counts(t: LatticeTriangle) -> PickCounts:
    """Interior count via Pick's identity from the exact area and boundary."""
    a2 = twice_area(t)
    b = boundary_count(t)
    if (a2 - b + 2) % 2 != 0:
        raise AssertionError(f"Pick parity violated for {t}")  # pragma: no cover
    return PickCounts((a2 - b + 2) // 2, b, a2)


def interior_count_enum(t: LatticeTriangle) -> int:
    """Oracle for Pick: count strictly interior lattice points by box scan."""
    twice_area(t)
    xs = [v.x for v in t.vertices]
    ys = [v.y for v in t.vertices]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if (x1 - x0 + 1) * (y1 - y0 + 1) > ENUM_BOX_BOUND:
        raise ValueError("bounding box too large for enumeration")
    gx, gy = np.meshgrid(
        np.arange(x0, x1 + 1, dtype=np.int64),
        np.arange(y0, y1 + 1, dtype=np.int64),
    )
    inside = np.ones(gx.shape, dtype=bool)
    verts = t.vertices
    # orientation sign so that "left of every edge" means strictly interior
    u = verts[1] - verts[0]
    v = verts[2] - verts[0]
    orient = 1 if u.x * v.y - u.y * v.x > 0 else -1
    for p, q in ((verts[0], verts[1]), (verts[1], verts[2]), (verts[2], verts[0])):
        cross = (q.x - p.x) * (gy - p.y) - (q.y - p.y) * (gx - p.x)
        inside &= orient * cross > 0
    return int(inside.sum())


def is_clean(t: LatticeTriangle) -> bool:
    """True when the only boundary lattice points are the three vertices."""
    return boundary_count(t) == 3

def is_empty(t: LatticeTriangle) -> bool:
    """True for clean triangles with no interior point, i.e. twice_area = 1."""
    return is_clean(t) and twice_area(t) == 1


def apply_map(L: AffineUnimodularMap, t: LatticeTriangle) -> LatticeTriangle:
    return LatticeTriangle(L.apply(t.v0), L.apply(t.v1), L.apply(t.v2))


# --------------------------------------------------------------------------
# base-form reduction
# --------------------------------------------------------------------------


def _edge_gcd(p: LatticePoint, q: LatticePoint) -> int:
    d = q - p
    return math.gcd(abs(d.x), abs(d.y))


def _reduce_oriented(
    origin: LatticePoint, other: LatticePoint, apex: LatticePoint
) -> tuple[BaseForm, AffineUnimodularMap]:
    """Reduce with the base edge directed origin -> other.

    Steps: translate origin to (0,0); map the primitive base direction to
    (1,0) via an extended-Euclid companion row; flip into the upper half
    plane if needed; shear the apex x-coordinate into [0, h).
    """
    shift = AffineUnimodularMap.translation(LatticePoint(-origin.x, -origin.y))
    u = other - origin
    v = apex - origin
    g = math.gcd(abs(u.x), abs(u.y))
    w = LatticePoint(u.x // g, u.y // g)
    _, s, t = extended_gcd(w.x, w.y)
    # rows (s, t) and (-w.y, w.x): sends w -> (1, 0), determinant +1
    m0 = AffineUnimodularMap(s, t, -w.y, w.x)
    L = m0.compose(shift)
    a = L.apply(apex)
    if a.y < 0:
        L = AffineUnimodularMap(1, 0, 0, -1).compose(L)
        a = LatticePoint(a.x, -a.y)
    h = a.y
    q = a.x // h
    if q != 0:
        L = AffineUnimodularMap(1, -q, 0, 1).compose(L)
    m = a.x - q * h
    return BaseForm(g, m, h), L


def _reduce_once(t: LatticeTriangle) -> tuple[BaseForm, AffineUnimodularMap]:
    """Single reduction pass: pick a richest edge, reduce both directions.

    Ties between equally rich edges go to the lexicographically smallest
    sorted endpoint pair; of the two directions of the chosen edge the
    smaller (b, m, h) wins.
    """
    twice_area(t)
    verts = t.vertices
    edges = []
    for i, j in ((0, 1), (1, 2), (2, 0)):
        p, q = verts[i], verts[j]
        lo, hi = sorted((p, q))
        edges.append((-_edge_gcd(p, q), (lo.x, lo.y, hi.x, hi.y), lo, hi))
    edges.sort(key=lambda e: (e[0], e[1]))
    _, _, lo, hi = edges[0]
    apex = next(v for v in verts if v not in (lo, hi))
    best: tuple[BaseForm, AffineUnimodularMap] | None = None
    for origin, other in ((lo, hi), (hi, lo)):
        bf, L = _reduce_oriented(origin, other, apex)
        if best is None or bf.as_tuple() < best[0].as_tuple():
            best = (bf, L)
    return best


def reduce_to_base_form(t: LatticeTriangle) -> tuple[BaseForm, AffineUnimodularMap]:
    """Reduce t to (0,0), (b,0), (m,h) and return the witness map.

    Runs the single reduction pass until the (b, m, h) triples repeat and
    returns the smallest triple of that cycle.  The stabilization makes the
    operation idempotent: reducing an already-reduced triangle returns the
    same triple, even when several edges tie for the most lattice points.
    """
    seen: dict[tuple[int, int, int], int] = {}
    chain: list[tuple[BaseForm, AffineUnimodularMap]] = []
    cur = t
    L = AffineUnimodularMap.identity()
    while True:
        bf, step = _reduce_once(cur)
        L = step.compose(L)
        key = bf.as_tuple()
        if key in seen:
            cycle = chain[seen[key] :]
            break
        seen[key] = len(chain)
        chain.append((bf, L))
        cur = bf.triangle()
    bf, L = min(cycle, key=lambda pair: pair[0].as_tuple())
    image = apply_map(L, t)
    if image.vertex_set() != bf.triangle().vertex_set():  # pragma: no cover
        raise AssertionError(f"witness map does not realize the base form for {t}")
    return bf, L


# --------------------------------------------------------------------------
# clean-triangle equivalence
# --------------------------------------------------------------------------


def _residue_orbit(m: int, h: int) -> frozenset[int]:
    """Orbit of m under the six residue maps mod h, as residues in [1, h]."""

    def norm(v: int) -> int:
        return (v - 1) % h + 1

    mi = mod_inverse(m, h)
    omi = mod_inverse(1 - m, h)
    return frozenset(
        norm(v)
        for v in (m, mi, 1 - m, 1 - mi, omi, mod_inverse(norm(1 - mi), h))
    )


@lru_cache(maxsize=None)
def _orbit_min(m: int, h: int) -> int:
    return min(_residue_orbit(m, h))


def _affine_map_between(
    t1: LatticeTriangle, t2: LatticeTriangle
) -> AffineUnimodularMap | None:
    """Search the six vertex bijections for a unimodular map t1 -> t2."""
    p0, p1, p2 = t1.vertices
    e1, e2 = p1 - p0, p2 - p0
    det = e1.x * e2.y - e1.y * e2.x
    w = t2.vertices
    for perm in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
        q0, q1, q2 = (w[i] for i in perm)
        f1, f2 = q1 - q0, q2 - q0
        # M * [e1 e2] = [f1 f2]  =>  M = [f1 f2] * adj([e1 e2]) / det
        na = f1.x * e2.y - f2.x * e1.y
        nb = -f1.x * e2.x + f2.x * e1.x
        nc = f1.y * e2.y - f2.y * e1.y
        nd = -f1.y * e2.x + f2.y * e1.x
        if any(v % det for v in (na, nb, nc, nd)):
            continue
        a, b, c, d = (v // det for v in (na, nb, nc, nd))
        if a * d - b * c not in (1, -1):
            continue
        t = LatticePoint(q0.x - a * p0.x - b * p0.y, q0.y - c * p0.x - d * p0.y)
        L = AffineUnimodularMap(a, b, c, d, t)
        if apply_map(L, t1).vertex_set() == t2.vertex_set():
            return L
    return None


def equivalent_clean(
    t1: LatticeTriangle, t2: LatticeTriangle, with_witness: bool = False
):
    """Unimodular-equivalence test for clean triangles.

    Reduces both triangles to base form (b = 1 for clean input) and compares
    the minimal elements of the residue orbits of m mod h.  With
    ``with_witness=True`` returns (equivalent, map-or-None), the witness being
    found by an independent vertex-bijection search on the reduced forms.
    """
    for t in (t1, t2):
        if not is_clean(t):
            raise ValueError(f"equivalence test requires clean triangles: {t.vertices}")
    bf1, r1 = _reduce_cached(t1)
    bf2, r2 = _reduce_cached(t2)
    equivalent = False
    if bf1.h == bf2.h:
        h = bf1.h
        m1 = (bf1.m - 1) % h + 1
        m2 = (bf2.m - 1) % h + 1
        equivalent = _orbit_min(m1, h) == _orbit_min(m2, h)
    if not with_witness:
        return equivalent
    witness = None
    if equivalent:
        bridge = _affine_map_between(bf1.triangle(), bf2.triangle())
        if bridge is None:  # pragma: no cover - orbit test and search must agree
            raise AssertionError("orbit test succeeded but no witness map exists")
        witness = r2.inverse().compose(bridge).compose(r1)
        if apply_map(witness, t1).vertex_set() != t2.vertex_set():  # pragma: no cover
            raise AssertionError("composed witness map failed verification")
    return equivalent, witness


# --------------------------------------------------------------------------
# Scott's inequality
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ScottResult:
    applicable: bool
    holds: bool
    equality: bool
    interior: int
    boundary: int


@dataclass(frozen=True)
class ScottScanReport:
    grid_bound: int
    checked: int
    violations: tuple[LatticeTriangle, ...]
    equality_cases: tuple[LatticeTriangle, ...]
    equality_base_forms: tuple[tuple[int, int, int], ...]


def scott_check(t: LatticeTriangle) -> ScottResult:
    """Evaluate B <= 2I + 7; not applicable when there is no interior point."""
    pc = pick_counts(t)
    if pc.interior < 1:
        return ScottResult(False, False, False, pc.interior, pc.boundary)
    holds = pc.boundary <= 2 * pc.interior + 7
    equality = pc.boundary == 2 * pc.interior + 7
    return ScottResult(True, holds, equality, pc.interior, pc.boundary)


def scott_exhaustive(grid_bound: int) -> ScottScanReport:
    """Scan every non-degenerate triangle with vertices in [0, grid_bound]^2.

    Collects violations (expected: none) and equality cases along with their
    base forms; the only equality class is the legs-3 right isosceles
    triangle, base form (3, 0, 3).
    """
    if grid_bound < 0:
        raise ValueError("grid bound must be nonnegative")
    if grid_bound > SCOTT_SCAN_BOUND:
        raise ValueError(f"scan capped at grid bound {SCOTT_SCAN_BOUND}")
    points = [
        LatticePoint(x, y)
        for x in range(grid_bound + 1)
        for y in range(grid_bound + 1)
    ]
    checked = 0
    violations: list[LatticeTriangle] = []
    equality: list[LatticeTriangle] = []
    base_forms: list[tuple[int, int, int]] = []
    for p, q, r in combinations(points, 3):
        u, v = q - p, r - p
        if u.x * v.y - u.y * v.x == 0:
            continue
        t = LatticeTriangle(p, q, r)
        res = scott_check(t)
        if not res.applicable:
            continue
        checked += 1
        if not res.holds:
            violations.append(t)
        elif res.equality:
            equality.append(t)
            base_forms.append(reduce_to_base_form(t)[0].as_tuple())
    return ScottScanReport(
        grid_bound, checked, tuple(violations), tuple(equality), tuple(base_forms)
    )


# --------------------------------------------------------------------------
# clean-triangle enumeration
# --------------------------------------------------------------------------


def enumerate_clean(h: int) -> list[LatticeTriangle]:
    """All base-form clean triangles (0,0), (1,0), (m,h) with m in IP(h).

    One triangle per member of IP(h); empty for even h.  These exhaust the
    clean triangles of twice-area h up to unimodular equivalence (with
    repetition across an orbit).
    """
    if h < 1:
        raise ValueError(f"h must be positive, got {h}")
    if h > ENUMERATE_CLEAN_BOUND:
        raise ValueError(f"enumeration capped at {ENUMERATE_CLEAN_BOUND}")
    if h % 2 == 0 and h > 1:
        return []
    return [
        LatticeTriangle.from_coords(0, 0, 1, 0, int(m), h) for m in ip_members(h)
    ]


@lru_cache(maxsize=4096)
def _reduce_cached(t: LatticeTriangle) -> tuple[BaseForm, AffineUnimodularMap]:
    return reduce_to_base_form(t)
