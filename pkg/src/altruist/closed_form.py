"""Optimal estimator pairs and their costs when the posterior is Gaussian.

Both pairs lie on the line through the mean along the leading eigenvector
of the covariance:

* heterarchical: mean +/- sqrt(2 lambda_1 / pi) v_1, cost tr R - (2/pi) lambda_1
* hierarchical:  (mean, mean +/- w_hi sqrt(lambda_1) v_1), cost tr R - c_hi lambda_1
"""

from dataclasses import dataclass
import math
from typing import Optional

import numpy as np

from .altruism import altruism_constants
from .core import (GaussianBelief, EstimatorPair, HETERARCHICAL, HIERARCHICAL_MINUS,
                   HIERARCHICAL_PLUS)
from .empirical import mc_cost
from .linalg import leading_eigenpair

HIERARCHICAL = "hierarchical"


@dataclass
class CostReport:
    j_ms: float
    j_value: float
    upsilon: float
    mc_value: Optional[float] = None
    mc_stderr: Optional[float] = None


def heterarchical_pair(b: GaussianBelief) -> EstimatorPair:
    lam, v = leading_eigenpair(b.cov)
    step = math.sqrt(2.0 * lam / math.pi) * v
    return EstimatorPair(b.mean + step, b.mean - step, HETERARCHICAL)


def hierarchical_pair(b: GaussianBelief, branch="plus") -> EstimatorPair:
    """First estimator is the posterior mean; second sits w_hi sqrt(lambda_1)
    away along +v_1 (``branch="plus"``) or -v_1 (``"minus"``). Both branches
    have the same cost."""
    if branch not in ("plus", "minus"):
        raise ValueError(f"branch must be 'plus' or 'minus', got {branch!r}")
    lam, v = leading_eigenpair(b.cov)
    step = altruism_constants().w_hi * math.sqrt(lam) * v
    if branch == "plus":
        return EstimatorPair(b.mean.copy(), b.mean + step, HIERARCHICAL_PLUS)
    return EstimatorPair(b.mean.copy(), b.mean - step, HIERARCHICAL_MINUS)


def _coefficient(kind):
    if kind == HETERARCHICAL:
        return 2.0 / math.pi
    if kind in (HIERARCHICAL, HIERARCHICAL_PLUS, HIERARCHICAL_MINUS):
        return altruism_constants().c_hi
    raise ValueError(f"unknown cost kind {kind!r}")


def analytic_cost(b: GaussianBelief, kind, samples=None) -> CostReport:
    """Closed-form cost of the optimal pair of ``kind``.

    With ``samples`` (a SampleSet drawn from ``b``) the report also carries
    the Monte Carlo cost of the corresponding closed-form pair.
    """
    coef = _coefficient(kind)
    lam = leading_eigenpair(b.cov).value
    j_ms = float(np.trace(b.cov))
    j = j_ms - coef * lam
    report = CostReport(j_ms=j_ms, j_value=j, upsilon=1.0 - j / j_ms)
    if samples is not None:
        if kind == HETERARCHICAL:
            pair = heterarchical_pair(b)
        else:
            pair = hierarchical_pair(b, "minus" if kind == HIERARCHICAL_MINUS else "plus")
        report.mc_value, report.mc_stderr = mc_cost(samples, pair)
    return report


def upsilon(b: GaussianBelief, kind) -> float:
    """Relative cost reduction 1 - J/J_MS = coef * lambda_1 / tr R."""
    return _coefficient(kind) * leading_eigenpair(b.cov).value / float(np.trace(b.cov))


def reduction_bounds(n):
    """(ht_lower, ht_upper, hi_lower, hi_upper) for dimension ``n``.

    Lower bounds are attained by an isotropic covariance; the upper bounds
    are approached as lambda_2/lambda_1 -> 0.
    """
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n!r}")
    c_ht = 2.0 / math.pi
    c_hi = altruism_constants().c_hi
    return c_ht / n, c_ht, c_hi / n, c_hi
