"""Summatory functions and limit constants for the triangle counts.

The mean value of imph(n)/n is (1/2) * prod_{p odd} (1 - 2/p^2), which ties
the averages of imph and T to the Feller-Tornier constant
C_FT = 1/2 + (1/2) * prod_p (1 - 2/p^2).  All constants are computed by
truncated products or sums with explicit tail brackets, and every constant
has at least two independent representations that are checked against each
other rather than against hardcoded literals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import imph_sieve, sieve_memory_budget

__all__ = [
    "ConstantEstimate",
    "MeanValueReport",
    "GrosswaldReport",
    "partial_sum_imph",
    "partial_sum_T",
    "t_closed_sieve",
    "euler_product_odd",
    "feller_tornier",
    "feller_tornier_zeta",
    "moebius_sum_odd",
    "mean_value_report",
    "grosswald_growth",
    "grosswald_ratios",
]

PARTIAL_SUM_IMPH_BOUND = 10**8
PARTIAL_SUM_T_BOUND = 10**7


@dataclass(frozen=True)
class ConstantEstimate:
    """A truncated product/sum value with a rigorous truncation-error bracket."""

    value: float
    prime_bound: int
    tail_bound: float

    def __post_init__(self) -> None:
        if self.tail_bound < 0:
            raise ValueError("tail bound must be nonnegative")

    def agrees_with(self, other: "ConstantEstimate") -> bool:
        return abs(self.value - other.value) <= self.tail_bound + other.tail_bound


def _primes_upto(limit: int) -> np.ndarray:
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    if limit + 1 > sieve_memory_budget():
        raise ValueError(f"prime sieve to {limit} exceeds the memory budget")
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.nonzero(mask)[0].astype(np.int64)


# --------------------------------------------------------------------------
# summatory functions
# --------------------------------------------------------------------------


def partial_sum_imph(x: int) -> int:
    """Exact sum of imph(n) for n <= x."""
    if x < 1:
        raise ValueError(f"bound must be positive, got {x}")
    if x > PARTIAL_SUM_IMPH_BOUND:
        raise ValueError(f"partial sum capped at {PARTIAL_SUM_IMPH_BOUND}")
    table = imph_sieve(x)
    if table[2::2].any():  # pragma: no cover - imph vanishes on even n
        raise AssertionError("even n contributed to the imph sum")
    return int(table.sum())


def t_closed_sieve(x: int) -> np.ndarray:
    """Table t with t[n] = T(n) for n <= x, built from sieved factor data.

    Uses the same three-case classification as the scalar closed form but
    with sieved imph, omega, and prime-class flags, so large ranges stay
    affordable.
    """
    if x < 1:
        raise ValueError(f"bound must be positive, got {x}")
    if x > PARTIAL_SUM_T_BOUND:
        raise ValueError(f"T sieve capped at {PARTIAL_SUM_T_BOUND}")
    im = imph_sieve(x)
    omega = np.zeros(x + 1, dtype=np.int64)
    bad5 = np.zeros(x + 1, dtype=bool)
    for p in _primes_upto(x):
        omega[p::p] += 1
        if p % 6 == 5:
            bad5[p::p] = True
    n = np.arange(x + 1, dtype=np.int64)
    odd = n % 2 == 1
    case1 = bad5 | (n % 9 == 0)
    case2 = ~case1 & (n % 3 == 0)
    numer = np.where(
        case1,
        im + 3,
        np.where(case2, im + 2**omega + 3, im + 2 ** (omega + 1) + 3),
    )
    if (numer[odd] % 6).any():  # pragma: no cover
        raise AssertionError("closed-form numerator not divisible by 6")
    table = np.where(odd, numer // 6, 0)
    table[0] = 0
    return table


def partial_sum_T(x: int) -> int:
    """Exact sum of T(n) for n <= x, via the sieved closed form."""
    if x < 1:
        return 0
    return int(t_closed_sieve(x).sum())


# --------------------------------------------------------------------------
# constants
# --------------------------------------------------------------------------


def euler_product_odd(prime_bound: int) -> ConstantEstimate:
    """Truncated product over odd primes p <= P of (1 - 2/p^2).

    Tail bracket: the omitted factors change the value by at most
    value * sum_{p > P} 2.5/p^2 < 3/(P - 1); accumulation is in ascending
    prime order for reproducibility.
    """
    if prime_bound < 3:
        raise ValueError("prime bound must be at least 3")
    p = _primes_upto(prime_bound)[1:].astype(np.float64)  # drop p = 2
    value = float(np.multiply.reduce(1.0 - 2.0 / (p * p)))
    return ConstantEstimate(value, prime_bound, 3.0 / (prime_bound - 1))


def feller_tornier(prime_bound: int) -> ConstantEstimate:
    """C_FT = 1/2 + (1/2) prod_{p <= P} (1 - 2/p^2), cross-checked against
    the zeta(2) representation before being returned."""
    if prime_bound < 2:
        raise ValueError("prime bound must be at least 2")
    p = _primes_upto(prime_bound).astype(np.float64)
    prod = float(np.multiply.reduce(1.0 - 2.0 / (p * p)))
    est = ConstantEstimate(0.5 + 0.5 * prod, prime_bound, 3.0 / max(prime_bound - 1, 1))
    if prime_bound >= 3:
        alt = feller_tornier_zeta(prime_bound)
        if not est.agrees_with(alt):
            raise AssertionError(
                f"Feller-Tornier representations disagree: {est.value} vs {alt.value}"
            )
    return est


def feller_tornier_zeta(prime_bound: int) -> ConstantEstimate:
    """C_FT via (1/2) (1 + (1/zeta(2)) prod_{p <= P} (1 - 1/(p^2 - 1)))."""
    if prime_bound < 2:
        raise ValueError("prime bound must be at least 2")
    p = _primes_upto(prime_bound).astype(np.float64)
    prod = float(np.multiply.reduce(1.0 - 1.0 / (p * p - 1.0)))
    zeta2 = math.pi**2 / 6.0
    return ConstantEstimate(
        0.5 * (1.0 + prod / zeta2), prime_bound, 3.0 / max(prime_bound - 1, 1)
    )


def moebius_sum_odd(d_bound: int) -> ConstantEstimate:
    """The Moebius-sum representation 1 + sum_{d > 1 odd} mu(d) 2^omega(d) / d^2.

    For squarefree d the summand's numerator is (-2)^omega(d); non-squarefree
    d contribute nothing.  Converges to the odd Euler product.  Tail bracket:
    |tail| <= sum_{d > D} tau(d)/d^2 <= (ln D + 1 + pi^2/6)/D.
    """
    if d_bound < 1:
        raise ValueError("bound must be positive")
    if d_bound == 1:
        return ConstantEstimate(1.0, 1, math.pi**2 / 6 + 1.0)
    coeff = np.ones(d_bound + 1, dtype=np.float64)
    for p in _primes_upto(d_bound):
        coeff[p::p] *= -2.0
        if p * p <= d_bound:
            coeff[p * p :: p * p] = 0.0
    d = np.arange(d_bound + 1, dtype=np.float64)
    d[0] = 1.0
    terms = coeff / (d * d)
    odd_terms = terms[3::2]
    value = 1.0 + float(np.add.reduce(odd_terms))
    tail = (math.log(d_bound) + 1.0 + math.pi**2 / 6.0) / d_bound
    return ConstantEstimate(value, d_bound, tail)


# --------------------------------------------------------------------------
# empirical reports
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class MeanValueReport:
    x: int
    sum_imph: int
    sum_t: int
    ratio_imph: float
    ratio_t: float
    limit_imph: float
    limit_t: float
    deviation_imph: float
    deviation_t: float
    product: ConstantEstimate


def mean_value_report(x: int, prime_bound: int = 10**7) -> MeanValueReport:
    """Empirical sums against the limit constants.

    sum imph(n) / x^2 tends to product/4 and sum T(n) / x^2 to product/24,
    with product the odd Euler product of (1 - 2/p^2).
    """
    if x < 1:
        raise ValueError(f"bound must be positive, got {x}")
    prod = euler_product_odd(prime_bound)
    s_imph = partial_sum_imph(x)
    s_t = partial_sum_T(x) if x <= PARTIAL_SUM_T_BOUND else 0
    ratio_imph = s_imph / (x * x)
    ratio_t = s_t / (x * x)
    limit_imph = prod.value / 4.0
    limit_t = prod.value / 24.0
    return MeanValueReport(
        x,
        s_imph,
        s_t,
        ratio_imph,
        ratio_t,
        limit_imph,
        limit_t,
        abs(ratio_imph - limit_imph) / limit_imph,
        abs(ratio_t - limit_t) / limit_t,
        prod,
    )


@dataclass(frozen=True)
class GrosswaldReport:
    x: int
    total: int
    ratio_to_xlog2x: float


def _big_omega_table(x: int) -> np.ndarray:
    """Omega(n) (prime factors with multiplicity) for n <= x."""
    omega = np.zeros(x + 1, dtype=np.int64)
    for p in _primes_upto(x):
        pk = p
        while pk <= x:
            omega[pk::pk] += 1
            pk *= p
    return omega


def grosswald_growth(x: int) -> GrosswaldReport:
    """Sum of 2^Omega(n) for n <= x, with the ratio to x ln^2 x.

    Grosswald's bound says the average order of 2^Omega(n) is O(x log^2 x),
    which is what makes the 2^omega terms in T(n) negligible on average.
    """
    if x < 1:
        raise ValueError(f"bound must be positive, got {x}")
    if x > PARTIAL_SUM_T_BOUND:
        raise ValueError(f"Grosswald sum capped at {PARTIAL_SUM_T_BOUND}")
    total = int((np.int64(1) << _big_omega_table(x)[1:]).sum())
    denom = x * math.log(x) ** 2 if x > 1 else 1.0
    return GrosswaldReport(x, total, total / denom)


def grosswald_ratios(bounds: list[int]) -> list[GrosswaldReport]:
    """grosswald_growth at several bounds sharing one sieve pass."""
    if not bounds:
        return []
    xmax = max(bounds)
    if xmax > PARTIAL_SUM_T_BOUND:
        raise ValueError(f"Grosswald sum capped at {PARTIAL_SUM_T_BOUND}")
    cumulative = np.cumsum(np.int64(1) << _big_omega_table(xmax)[1:])
    out = []
    for x in sorted(bounds):
        total = int(cumulative[x - 1])
        denom = x * math.log(x) ** 2 if x > 1 else 1.0
        out.append(GrosswaldReport(x, total, total / denom))
    return out
