"""
How much does a second estimator buy?
=====================================

The relative saving over the MMSE estimate depends only on the share of the
total variance carried by the leading eigenvalue. It is largest when the
posterior is a thin cigar and smallest when it is round.
"""

import numpy as np

import altruist as al

print(" dim  ht_lower  ht_upper  hi_lower  hi_upper")
for n in (1, 2, 3, 5, 10, 20):
    print(f"{n:4d}  " + "  ".join(f"{b:8.5f}" for b in al.reduction_bounds(n)))

###############################################################################
# Random covariances always land inside the band for their dimension, and
# the isotropic one sits exactly on the lower edge.

rng = np.random.default_rng(0)
for n in (2, 4, 8):
    m = rng.standard_normal((n, n))
    b = al.GaussianBelief(np.zeros(n), m @ m.T + 0.1 * np.eye(n))
    iso = al.GaussianBelief(np.zeros(n), np.eye(n))
    lo, hi, *_ = al.reduction_bounds(n)
    u = al.upsilon(b, "heterarchical")
    print(f"n={n}: random {u:.4f} in [{lo:.4f}, {hi:.4f}), isotropic {al.upsilon(iso, 'heterarchical'):.4f}")

###############################################################################
# A nearly one-dimensional posterior in three dimensions.

cigar = al.GaussianBelief(np.zeros(3), np.diag([1000.0, 1.0, 1.0]))
print(f"diag(1000, 1, 1): heterarchical {al.upsilon(cigar, 'heterarchical'):.4f}, "
      f"hierarchical {al.upsilon(cigar, 'hierarchical'):.4f}")
