"""Average behavior of imph(n) and T(n), and the constants behind it.

The partial sums of imph and T grow quadratically; the normalized sums
converge to explicit constants built from an Euler product over odd
primes, which also appears (rescaled) as the Feller-Tornier constant.
"""

import math

from cleantri.meanvalue import (
    euler_product_odd,
    feller_tornier,
    feller_tornier_zeta,
    grosswald_ratios,
    mean_value_report,
    moebius_sum_odd,
)


def main():
    prod = euler_product_odd(10**7)
    print(f"odd Euler product prod(1 - 2/p^2) = {prod.value:.9f}"
          f"  (tail bound {prod.tail_bound:.1e})")
    print(f"same constant as a Moebius sum    = {moebius_sum_odd(10**6).value:.9f}")
    print()

    print("   x        sum imph / x^2    sum T / x^2")
    for x in (10**3, 10**4, 10**5, 10**6):
        rep = mean_value_report(x, prime_bound=10**6)
        print(f"{x:8d}      {rep.ratio_imph:.7f}       {rep.ratio_t:.7f}")
    print(f"  limit       {prod.value / 4:.7f}       {prod.value / 24:.7f}")
    print()

    ft = feller_tornier(10**7)
    print(f"Feller-Tornier constant: {ft.value:.9f}")
    print(f"  via zeta(2) form:      {feller_tornier_zeta(10**7).value:.9f}")
    print()

    print("growth of sum 2^Omega(n), normalized by x log^2 x:")
    for r in grosswald_ratios([10**4, 10**5, 10**6]):
        print(f"  x = {r.x:7d}: sum = {r.total:12d},"
              f" ratio = {r.ratio_to_xlog2x:.4f}")


if __name__ == "__main__":
    main()
