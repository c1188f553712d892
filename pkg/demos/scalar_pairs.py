"""
Two estimators for one scalar
=============================

A scalar parameter has the Gaussian posterior N(0, 100). The MMSE estimate
is 0 with expected squared error 100. If two estimators cooperate and only
the better of the two counts, they should spread out.
"""

import numpy as np

import altruist as al

belief = al.GaussianBelief([0.0], [[100.0]])

# Both estimators free: they sit symmetrically about the mean.
ht = al.heterarchical_pair(belief)
print("heterarchical pair:", ht.first, ht.second)

# First estimator kept at the MMSE estimate: the second moves further out.
hi = al.hierarchical_pair(belief)
print("hierarchical pair: ", hi.first, hi.second)

for kind in ("heterarchical", "hierarchical"):
    rep = al.analytic_cost(belief, kind)
    print(f"{kind:>14}: J = {rep.j_value:8.4f}  (MMSE {rep.j_ms:.0f}, reduction {rep.upsilon:.1%})")

###############################################################################
# Check the closed forms by Monte Carlo on a million posterior draws.

samples = al.sample_gaussian(belief, 10**6, seed=42)
for name, pair in (("heterarchical", ht), ("hierarchical", hi)):
    cost, se = al.mc_cost(samples, pair)
    print(f"MC {name:>14}: {cost:8.4f} +/- {se:.4f}")

###############################################################################
# Lloyd iteration knows nothing about Gaussians; it only moves each free
# estimator to the centroid of the samples it is responsible for. It should
# land on the same pairs.

small = al.sample_gaussian(belief, 10**5, seed=1)
res = al.lloyd_heterarchical(small)
print("Lloyd heterarchical:", np.round([res.pair.first[0], res.pair.second[0]], 3),
      "after", res.iterations, "iterations")
res = al.lloyd_hierarchical(small)
print("Lloyd hierarchical: ", np.round([res.pair.first[0], res.pair.second[0]], 3))

###############################################################################
# The hierarchical scale comes from a one-dimensional equation.

k = al.altruism_constants()
print(f"w_hi = {k.w_hi:.9f}, c_hi = {k.c_hi:.9f}, 2/pi = {k.c_ht:.9f}")
