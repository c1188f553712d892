"""
Pairs along the principal axis
==============================

In more than one dimension the optimal pairs sit on the line through the
posterior mean along the leading eigenvector of the covariance. Only the
largest eigenvalue enters the cost.
"""

import numpy as np

import altruist as al
from altruist.grids import pinned_pair_grid_2d, symmetric_pair_grid_2d

belief = al.GaussianBelief([0.0, 0.0], [[5.0, 1.5], [1.5, 1.0]])
lam, v = al.leading_eigenpair(belief.cov)
print(f"lambda_1 = {lam:.12g}, v_1 = {np.round(v, 4)}")

ht = al.heterarchical_pair(belief)
hi = al.hierarchical_pair(belief)
print("heterarchical:", np.round(ht.first, 4), np.round(ht.second, 4))
print("hierarchical: ", np.round(hi.first, 4), np.round(hi.second, 4))

###############################################################################
# Sweep the second estimator over a grid and read off the minimum. The first
# estimator is either its mirror image through the mean or pinned at the
# mean. Every cell is evaluated on the same sample set.

samples = al.sample_gaussian(belief, 200_000, seed=42)
nodes = np.linspace(-4, 4, 161)
for name, grid in (("mirrored", symmetric_pair_grid_2d(samples, nodes, nodes)),
                   ("pinned", pinned_pair_grid_2d(samples, nodes, nodes))):
    i, j = np.unravel_index(np.argmin(grid), grid.shape)
    print(f"{name:>8}: best cell ({nodes[i]:+.2f}, {nodes[j]:+.2f}) cost {grid[i, j]:.4f}")

###############################################################################
# With the first estimator pinned, putting the second on top of it is the
# worst choice on the grid: the pair collapses to the plain MMSE estimate.

grid = pinned_pair_grid_2d(samples, nodes, nodes)
print("pinned grid maximum at origin:", np.unravel_index(np.argmax(grid), grid.shape) == (80, 80))

###############################################################################
# Rotating the covariance rotates the pairs but leaves the costs alone.

theta = 0.7
rot = np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]])
turned = al.GaussianBelief([0.0, 0.0], rot @ belief.cov @ rot.T)
for kind in ("heterarchical", "hierarchical"):
    a = al.analytic_cost(belief, kind).j_value
    b = al.analytic_cost(turned, kind).j_value
    print(f"{kind}: {a:.6f} vs rotated {b:.6f}")
