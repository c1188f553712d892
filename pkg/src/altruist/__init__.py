"""Altruistic cooperative estimation with two information-sharing estimators.

Two estimators of the same parameter are chosen to minimise the expected
*minimum* of their squared errors, so that at least one of them lands close
to the truth. For Gaussian posteriors the optimal pairs have closed forms
(:mod:`altruist.closed_form`); for anything else they are found by a
sample-based Lloyd iteration (:mod:`altruist.empirical`).
"""

from .altruism import AltruismConstants, altruism_constants, f_ht, g_hi, solve_hierarchical_constant
from .closed_form import (CostReport, analytic_cost, heterarchical_pair, hierarchical_pair,
                          reduction_bounds, upsilon)
from .core import EstimatorPair, GaussianBelief, SampleSet
from .distributions import TRIMODAL, MixtureSpec, mixture_pdf, sample_gaussian, sample_mixture
from .empirical import (LloydConfig, LloydResult, assign, lloyd_bootstrap_stderr, lloyd_heterarchical,
                        lloyd_hierarchical, mc_cost, region_statistics, sanity_far_field)
from .linalg import EigenPair, leading_eigenpair, quadratic_form, trace

__version__ = "0.1.0"
