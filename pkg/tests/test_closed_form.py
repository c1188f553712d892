import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from altruist import (GaussianBelief, analytic_cost, heterarchical_pair, hierarchical_pair,
                      reduction_bounds, sample_gaussian, upsilon)
from altruist.altruism import altruism_constants
from oracles import random_spd

C_HI = altruism_constants().c_hi
W_HI = altruism_constants().w_hi


class TestPairs:
    def test_scalar_heterarchical(self, belief_1d):
        pair = heterarchical_pair(belief_1d)
        assert_allclose(pair.first, [10 * math.sqrt(2 / math.pi)], rtol=1e-14)
        assert_allclose(pair.second, -pair.first)
        assert pair.kind == "heterarchical"

    def test_scalar_hierarchical(self, belief_1d):
        plus = hierarchical_pair(belief_1d)
        minus = hierarchical_pair(belief_1d, "minus")
        assert plus.first.tolist() == [0.0]
        assert_allclose(plus.second, [10 * W_HI], rtol=1e-14)
        assert_allclose(minus.second, -plus.second)

    def test_two_dim(self, belief_2d):
        ht = heterarchical_pair(belief_2d)
        assert_allclose(ht.first, [1.775, 0.592], atol=2e-3)
        hi = hierarchical_pair(belief_2d)
        assert_allclose(hi.second, [2.723, 0.908], atol=2e-3)

    def test_identity_tie_break(self):
        b = GaussianBelief([3.0, 3.0], np.eye(2))
        pair = heterarchical_pair(b)
        assert_allclose(pair.first, [3 + math.sqrt(2 / math.pi), 3.0])
        b = GaussianBelief(np.ones(4), np.eye(4))
        assert_allclose(hierarchical_pair(b).second, [1 + W_HI, 1, 1, 1])

    def test_translation_equivariance(self, rng):
        R = random_spd(rng, 3)
        shift = rng.normal(size=3) * 5
        a = GaussianBelief(np.zeros(3), R)
        b = GaussianBelief(shift, R)
        for f in (heterarchical_pair, hierarchical_pair):
            pa, pb = f(a), f(b)
            assert_allclose(pb.first - shift, pa.first, atol=1e-12)
            assert_allclose(pb.second - shift, pa.second, atol=1e-12)

    def test_bad_branch(self, belief_1d):
        with pytest.raises(ValueError, match="branch"):
            hierarchical_pair(belief_1d, "up")


class TestCosts:
    def test_scalar(self, belief_1d):
        ht = analytic_cost(belief_1d, "heterarchical")
        hi = analytic_cost(belief_1d, "hierarchical")
        assert ht.j_ms == 100.0
        assert abs(ht.j_value - 36.338) < 1e-3
        assert abs(hi.j_value - 59.5) < 0.1
        assert_allclose(ht.j_value, 100 - 200 / math.pi, rtol=1e-15)

    def test_two_dim(self, belief_2d):
        assert_allclose(analytic_cost(belief_2d, "heterarchical").j_value, 6 - 11 / math.pi,
                        rtol=1e-14)
        assert_allclose(analytic_cost(belief_2d, "hierarchical").j_value, 6 - 5.5 * C_HI,
                        rtol=1e-14)

    def test_mc_attached(self, belief_1d, gauss1d_1e5):
        rep = analytic_cost(belief_1d, "heterarchical", gauss1d_1e5)
        assert abs(rep.mc_value - rep.j_value) < 4 * rep.mc_stderr
        rep = analytic_cost(belief_1d, "hierarchical-minus", gauss1d_1e5)
        assert abs(rep.mc_value - rep.j_value) < 4 * rep.mc_stderr

    def test_unknown_kind(self, belief_1d):
        with pytest.raises(ValueError, match="kind"):
            analytic_cost(belief_1d, "both")

    @pytest.mark.parametrize("seed", range(50))
    def test_strict_ordering(self, seed):
        rng = np.random.default_rng(1000 + seed)
        n = int(rng.integers(1, 7))
        b = GaussianBelief(rng.normal(size=n), random_spd(rng, n))
        ht = analytic_cost(b, "heterarchical").j_value
        hi = analytic_cost(b, "hierarchical").j_value
        assert ht < hi < float(np.trace(b.cov))

    def test_hierarchical_branches_equal(self, belief_2d):
        samples = sample_gaussian(belief_2d, 20_000, 3)
        plus = analytic_cost(belief_2d, "hierarchical-plus", samples)
        minus = analytic_cost(belief_2d, "hierarchical-minus", samples)
        assert plus.j_value == minus.j_value
        assert plus.mc_value != minus.mc_value


class TestUpsilon:
    def test_values(self):
        b = GaussianBelief(np.zeros(3), np.diag([1000.0, 1.0, 1.0]))
        assert_allclose(upsilon(b, "heterarchical"), (2 / math.pi) * 1000 / 1002, rtol=1e-14)
        assert abs(upsilon(b, "heterarchical") - 0.6354) < 1e-4

    def test_matches_cost_report(self, belief_2d):
        for kind in ("heterarchical", "hierarchical"):
            assert_allclose(upsilon(belief_2d, kind), analytic_cost(belief_2d, kind).upsilon,
                            rtol=1e-14)

    def test_isotropic_hits_lower_bound(self):
        for n in (1, 2, 5):
            b = GaussianBelief(np.zeros(n), 3 * np.eye(n))
            lo_ht, _, lo_hi, _ = reduction_bounds(n)
            assert_allclose(upsilon(b, "heterarchical"), lo_ht, rtol=1e-14)
            assert_allclose(upsilon(b, "hierarchical"), lo_hi, rtol=1e-14)


class TestReductionBounds:
    def test_dimension_one(self):
        assert reduction_bounds(1) == (2 / math.pi, 2 / math.pi, C_HI, C_HI)

    def test_shape(self):
        rows = np.array([reduction_bounds(n) for n in range(1, 21)])
        assert np.all(np.diff(rows[:, 0]) < 0) and np.all(np.diff(rows[:, 2]) < 0)
        assert np.all(rows[:, 1] == rows[0, 1]) and np.all(rows[:, 3] == rows[0, 3])

    @pytest.mark.parametrize("n", [0, -1, 1.5, True])
    def test_invalid(self, n):
        with pytest.raises(ValueError):
            reduction_bounds(n)
