import math

import numpy as np
import pytest

from cleantri import arith, counting
from cleantri.meanvalue import (
    ConstantEstimate,
    euler_product_odd,
    feller_tornier,
    feller_tornier_zeta,
    grosswald_growth,
    grosswald_ratios,
    mean_value_report,
    moebius_sum_odd,
    partial_sum_T,
    partial_sum_imph,
    t_closed_sieve,
)


class TestPartialSums:
    def test_imph_spot(self):
        assert partial_sum_imph(10) == 13
        assert partial_sum_imph(1) == 1
        assert partial_sum_imph(49) - partial_sum_imph(48) == 35

    def test_imph_matches_scalar(self):
        total = 0
        for n in range(1, 300):
            total += arith.imph(n)
            assert partial_sum_imph(n) == total

    def test_t_spot(self):
        assert partial_sum_T(10) == 6
        assert partial_sum_T(2) == 1
        assert partial_sum_T(0) == 0

    def test_t_sieve_matches_scalar(self):
        table = t_closed_sieve(2000)
        for n in range(1, 2001):
            assert table[n] == counting.t_closed(n)

    def test_t_sieve_odd_only(self):
        table = t_closed_sieve(500)
        assert not table[2::2].any()


class TestEulerProduct:
    def test_single_factor(self):
        est = euler_product_odd(3)
        assert est.value == pytest.approx(7 / 9, abs=1e-15)

    def test_two_factors(self):
        assert euler_product_odd(5).value == pytest.approx(161 / 225, abs=1e-15)

    def test_monotone_decreasing_with_shrinking_tail(self):
        prev = None
        for bound in (10, 100, 1000, 10**4, 10**5):
            est = euler_product_odd(bound)
            if prev is not None:
                assert est.value < prev.value
                assert est.tail_bound < prev.tail_bound
            prev = est

    def test_tail_bracket(self):
        # refined estimates stay within the coarse estimate's tail bracket
        coarse = euler_product_odd(10**3)
        fine = euler_product_odd(10**6)
        assert abs(coarse.value - fine.value) <= coarse.tail_bound


class TestFellerTornier:
    def test_two_prime_truncation(self):
        assert feller_tornier(2).value == pytest.approx(0.75, abs=1e-15)

    def test_representations_agree(self):
        a = feller_tornier(10**6)
        b = feller_tornier_zeta(10**6)
        assert abs(a.value - b.value) < 1e-6

    def test_relation_to_odd_product(self):
        # 2 * C_FT - 1 = (1/2) * odd product, exactly at matched truncation
        p = 10**5
        ft = feller_tornier(p)
        odd = euler_product_odd(p)
        assert 2 * ft.value - 1 == pytest.approx(0.5 * odd.value, abs=1e-12)


class TestMoebiusSum:
    def test_empty(self):
        assert moebius_sum_odd(1).value == 1.0

    def test_single_term(self):
        assert moebius_sum_odd(3).value == pytest.approx(7 / 9, abs=1e-15)

    def test_matches_euler_product(self):
        mo = moebius_sum_odd(10**5)
        eu = euler_product_odd(10**6)
        assert abs(mo.value - eu.value) <= mo.tail_bound + eu.tail_bound

    def test_estimate_validation(self):
        with pytest.raises(ValueError):
            ConstantEstimate(1.0, 10, -0.1)


class TestMeanValueReport:
    def test_small_x(self):
        rep = mean_value_report(10, prime_bound=10**4)
        assert rep.sum_imph == 13
        assert rep.ratio_imph == pytest.approx(0.13)

    def test_convergence_envelope(self):
        devs = [
            mean_value_report(x, prime_bound=10**5).deviation_imph
            for x in (10**3, 10**4, 10**5, 10**6)
        ]
        assert max(devs[2:]) < max(devs[:2])


class TestGrosswald:
    def test_spot(self):
        assert grosswald_growth(10).total == 33
        assert grosswald_growth(1).total == 1

    def test_ratio_bounded(self):
        reports = grosswald_ratios([10**4 * 2**k for k in range(7)])
        ratios = [r.ratio_to_xlog2x for r in reports]
        assert max(ratios) < 10 * min(ratios)

    def test_ratios_match_single_calls(self):
        for r in grosswald_ratios([100, 1000]):
            single = grosswald_growth(r.x)
            assert single.total == r.total
            assert single.ratio_to_xlog2x == pytest.approx(r.ratio_to_xlog2x)
