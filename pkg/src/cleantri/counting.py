"""Burnside machinery on IP(n) and the class-counting function T(n).

The six residue maps come from relabeling the vertices of the base-form
triangle (0,0), (1,0), (m,n); they form a group of order 6 acting on IP(n).
T(n), the number of equivalence classes of clean triangles of twice-area n,
is computed three independent ways: a closed three-case formula from the
prime factorization, the Burnside average of brute-force fixed-point counts,
and a purely geometric partition of the enumerated triangles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import (
    IPSet,
    _cached_factorization,
    count_roots_quad_n,
    imph_from_factorization,
    ip_members,
    mod_inverse,
)
from .lattice import enumerate_clean, equivalent_clean

__all__ = [
    "OrbitDecomposition",
    "TCountReport",
    "ip_set",
    "map_g",
    "fix_count_bruteforce",
    "fix_count_closed",
    "t_burnside",
    "t_closed",
    "orbit_decomposition",
    "canonical_m",
    "t_geometric",
    "t_report",
]

BRUTEFORCE_N_BOUND = 10**5
GEOMETRIC_N_BOUND = 2000


def ip_set(n: int) -> IPSet:
    """IP(n) as a validated set object."""
    return IPSet(n, tuple(int(x) for x in ip_members(n)))


def _check_member(m: int, n: int) -> None:
    if not (1 <= m <= n) or math.gcd(m, n) != 1 or math.gcd(m - 1, n) != 1:
        raise ValueError(f"{m} is not in IP({n})")


def map_g(i: int, m: int, n: int) -> int:
    """The i-th residue map (i = 1..6) applied to m in IP(n); result in [1, n].

    g1 = id, g2 = m^-1, g3 = 1 - m, g4 = 1 - m^-1, g5 = (1 - m)^-1,
    g6 = (1 - m^-1)^-1, all mod n.
    """
    if i not in range(1, 7):
        raise ValueError(f"map index must be 1..6, got {i}")
    _check_member(m, n)
    if i == 1:
        v = m
    elif i == 2:
        v = mod_inverse(m, n)
    elif i == 3:
        v = 1 - m
    elif i == 4:
        v = 1 - mod_inverse(m, n)
    elif i == 5:
        v = mod_inverse(1 - m, n)
    else:
        v = mod_inverse(1 - mod_inverse(m, n), n)
    return (v - 1) % n + 1


def fix_count_bruteforce(i: int, n: int) -> int:
    """Count fixed points of g_i on IP(n) by direct application of the map."""
    if n > BRUTEFORCE_N_BOUND:
        raise ValueError(f"brute force capped at n = {BRUTEFORCE_N_BOUND}")
    if i not in range(1, 7):
        raise ValueError(f"map index must be 1..6, got {i}")
    return sum(1 for m in ip_members(n) if map_g(i, int(m), n) == int(m))


@lru_cache(maxsize=1 << 15)
def _fix_counts_vectorized(n: int) -> tuple[int, int, int, int, int, int]:
    """All six brute-force fixed-point counts at once, vectorized.

    Inverses are taken elementwise with pow(m, -1, n); the six fixed-point
    conditions are then array comparisons.  Matches fix_count_bruteforce
    pointwise but is fast enough to sweep n up to 10^4.
    """
    members = ip_members(n)
    if members.size == 0:
        return (0, 0, 0, 0, 0, 0)
    inv = np.fromiter(
        (pow(int(m), -1, n) for m in members), dtype=np.int64, count=members.size
    )
    table = np.zeros(n + 1, dtype=np.int64)
    table[members] = inv

    def norm(a: np.ndarray) -> np.ndarray:
        return (a - 1) % n + 1

    g2 = norm(inv)
    g3 = norm(1 - members)
    g4 = norm(1 - inv)
    g5 = norm(table[norm(1 - members)])
    g6 = norm(table[g4])
    return (
        int(members.size),
        int((g2 == members).sum()),
        int((g3 == members).sum()),
        int((g4 == members).sum()),
        int((g5 == members).sum()),
        int((g6 == members).sum()),
    )


def fix_count_closed(i: int, n: int) -> int:
    """Closed-form fixed-point count: imph(n) for g1, 1 for g2/g3/g6, and the
    quadratic-congruence root count for g4/g5."""
    if n % 2 == 0:
        raise ValueError(f"n must be odd, got {n}")
    if i not in range(1, 7):
        raise ValueError(f"map index must be 1..6, got {i}")
    if i == 1:
        return imph_from_factorization(_cached_factorization(n))
    if i in (2, 3, 6):
        return 1
    return count_roots_quad_n(n)


def t_burnside(n: int) -> int:
    """T(n) as the Burnside average of the brute-force fixed-point counts."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n % 2 == 0:
        return 0
    if n > BRUTEFORCE_N_BOUND:
        raise ValueError(f"Burnside route capped at n = {BRUTEFORCE_N_BOUND}")
    total = sum(_fix_counts_vectorized(n))
    if total % 6 != 0:  # pragma: no cover - Burnside guarantees divisibility
        raise AssertionError(f"fixed-point total {total} not divisible by 6 at n={n}")
    return total // 6


def t_closed(n: int) -> int:
    """T(n) from the three-case closed formula over the prime factorization.

    With w = omega(n): (imph(n) + 3) / 6 when 9 | n or some prime divisor is
    5 mod 6; (imph(n) + 2^w + 3) / 6 when 3 || n and the rest are 1 mod 6;
    (imph(n) + 2^(w+1) + 3) / 6 when every prime divisor is 1 mod 6.
    Zero for even n.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n % 2 == 0:
        return 0
    f = _cached_factorization(n)
    im = imph_from_factorization(f)
    w = f.omega
    div9 = any(p == 3 and e >= 2 for p, e in f.factors)
    bad5 = any(p % 6 == 5 for p, _ in f.factors)
    div3 = any(p == 3 for p, _ in f.factors)
    if div9 or bad5:
        numerator = im + 3
    elif div3:
        numerator = im + 2**w + 3
    else:
        numerator = im + 2 ** (w + 1) + 3
    if numerator % 6 != 0:  # pragma: no cover
        raise AssertionError(f"closed-form numerator {numerator} not divisible by 6")
    return numerator // 6


@dataclass(frozen=True)
class OrbitDecomposition:
    n: int
    orbits: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        flat = sorted(x for orbit in self.orbits for x in orbit)
        if flat != sorted(set(flat)):
            raise ValueError("orbits overlap")
        for orbit in self.orbits:
            if 6 % len(orbit) != 0:
                raise ValueError(f"orbit size {len(orbit)} does not divide 6")

    @property
    def count(self) -> int:
        return len(self.orbits)


def orbit_decomposition(n: int) -> OrbitDecomposition:
    """Partition IP(n) into orbits of the six-map action (closure by BFS)."""
    if n % 2 == 0 and n > 1:
        return OrbitDecomposition(n, ())
    if n > BRUTEFORCE_N_BOUND:
        raise ValueError(f"orbit decomposition capped at n = {BRUTEFORCE_N_BOUND}")
    remaining = set(int(x) for x in ip_members(n))
    orbits = []
    while remaining:
        seed = min(remaining)
        orbit = {map_g(i, seed, n) for i in range(1, 7)}
        if not orbit <= remaining:  # pragma: no cover - maps are closed on IP(n)
            raise AssertionError("orbit escaped IP(n)")
        remaining -= orbit
        orbits.append(tuple(sorted(orbit)))
    return OrbitDecomposition(n, tuple(sorted(orbits)))


def canonical_m(m: int, n: int) -> int:
    """Orbit representative: the minimum of {g_i(m)} over the six maps."""
    _check_member(m, n)
    return min(map_g(i, m, n) for i in range(1, 7))


def t_geometric(n: int) -> int:
    """Geometric oracle for T(n): partition the enumerated clean triangles
    of twice-area n into classes with the pairwise equivalence test."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > GEOMETRIC_N_BOUND:
        raise ValueError(f"geometric route capped at n = {GEOMETRIC_N_BOUND}")
    reps = []
    for t in enumerate_clean(n):
        if not any(equivalent_clean(r, t) for r in reps):
            reps.append(t)
    return len(reps)


@dataclass(frozen=True)
class TCountReport:
    n: int
    t_closed: int
    t_burnside: int
    t_geometric: int | None
    fix_counts: tuple[int, int, int, int, int, int]

    def __post_init__(self) -> None:
        if self.t_closed != self.t_burnside:
            raise ValueError(f"closed/Burnside disagreement at n={self.n}: {self}")
        if self.t_geometric is not None and self.t_geometric != self.t_closed:
            raise ValueError(f"geometric disagreement at n={self.n}: {self}")
        if 6 * self.t_burnside != sum(self.fix_counts):
            raise ValueError(f"Burnside average violated at n={self.n}: {self}")


def t_report(n: int, with_geometric: bool = False) -> TCountReport:
    """Compute T(n) by all routes and cross-validate."""
    if n % 2 == 0:
        fix = (0, 0, 0, 0, 0, 0)
        return TCountReport(n, 0, 0, 0 if with_geometric else None, fix)
    fix = _fix_counts_vectorized(n)
    geo = t_geometric(n) if with_geometric else None
    return TCountReport(n, t_closed(n), t_burnside(n), geo, fix)
