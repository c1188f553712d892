import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from altruist.altruism import (BracketError, altruism_constants, f_ht, g_hi, g_hi_prime,
                               solve_hierarchical_constant, verify_root_uniqueness)


def _broken_cdf(chi):
    return np.ones_like(np.asarray(chi, dtype=float))


class TestHierarchicalConstant:
    def test_against_high_precision_root(self):
        with mpmath.workdps(40):
            g = lambda x: mpmath.npdf(x) - 2 * x * (1 - mpmath.ncdf(x))  # noqa: E731
            root = mpmath.findroot(g, 0.6)
            c_ref = 4 * root ** 2 * (1 - mpmath.ncdf(root))
        k = solve_hierarchical_constant()
        assert_allclose(k.chi_star, float(root), rtol=1e-13)
        assert_allclose(k.c_hi, float(c_ref), rtol=1e-12)

    def test_quoted_values(self):
        k = solve_hierarchical_constant()
        assert abs(k.w_hi - 1.224) < 5e-4
        assert abs(k.c_hi - 0.405) < 5e-4
        assert k.c_ht == 2 / math.pi

    def test_residual(self):
        assert abs(g_hi(altruism_constants().chi_star)) <= 1e-14

    def test_cost_coefficient_identity(self):
        # c_hi = 2 chi* phi(chi*) follows from g_hi(chi*) = 0
        k = altruism_constants()
        phi = math.exp(-0.5 * k.chi_star ** 2) / math.sqrt(2 * math.pi)
        assert_allclose(k.c_hi, 2 * k.chi_star * phi, rtol=1e-13)

    def test_cached(self):
        assert altruism_constants() is altruism_constants()

    def test_broken_cdf_raises(self):
        with pytest.raises(BracketError, match="sign change"):
            solve_hierarchical_constant(cdf=_broken_cdf)


class TestAltruismFunctions:
    def test_f_ht_root_at_zero(self):
        assert f_ht(0.0) == 0.0

    @settings(max_examples=200, deadline=None)
    @given(st.floats(min_value=-30, max_value=30, allow_nan=False))
    def test_f_ht_odd(self, chi):
        assert abs(f_ht(chi) + f_ht(-chi)) <= 1e-12

    def test_f_ht_odd_random(self):
        chis = np.random.default_rng(5).uniform(-10, 10, 100)
        assert np.max(np.abs(f_ht(chis) + f_ht(-chis))) <= 1e-12

    def test_g_hi_limits(self):
        assert_allclose(g_hi(0.0), 1 / math.sqrt(2 * math.pi), rtol=1e-15)
        assert g_hi(math.sqrt(3)) < 0

    def test_g_hi_tail_decays(self):
        chis = np.linspace(9.0, 40.0, 300)
        assert np.max(np.abs(g_hi(chis))) < 1e-10

    def test_g_hi_prime_matches_finite_difference(self):
        chis = np.linspace(0.1, 3.0, 30)
        h = 1e-6
        fd = (g_hi(chis + h) - g_hi(chis - h)) / (2 * h)
        assert_allclose(g_hi_prime(chis), fd, atol=1e-8)

    def test_vector_and_scalar_agree(self):
        chis = np.array([0.3, 1.1, 2.5])
        assert_allclose(f_ht(chis), [f_ht(c) for c in chis], rtol=0, atol=0)


class TestRootUniqueness:
    def test_default_scan_passes(self):
        report = verify_root_uniqueness()
        assert report.passed, [c.detail for c in report.checks]
        assert len(report.checks) == 3

    def test_crossing_location(self):
        report = verify_root_uniqueness()
        g_check = report.checks[1]
        assert "chi = 0.612" in g_check.detail

    def test_broken_cdf_fails(self):
        report = verify_root_uniqueness(cdf=_broken_cdf)
        assert not report.passed
        assert any("found 0" in c.detail for c in report.checks)

    @pytest.mark.parametrize("kw", [dict(grid_step=0.01), dict(grid_step=0.0), dict(chi_max=5)])
    def test_bad_arguments(self, kw):
        with pytest.raises(ValueError):
            verify_root_uniqueness(**kw)
