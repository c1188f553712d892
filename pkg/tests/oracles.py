"""Independent reference computations used only by the tests.

Nothing here calls into the package: eigenpairs come from a cyclic Jacobi
sweep and Gaussian moments from adaptive quadrature of exp(-z^2/2).
"""

import math

import numpy as np
from scipy.integrate import quad

INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)
QUAD_KW = dict(epsabs=1e-14, epsrel=1e-13, limit=200)


def jacobi_eigh(a, sweeps=100, tol=1e-15):
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Returns (eigenvalues ascending, eigenvectors as columns).
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    for _ in range(sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off <= tol * np.linalg.norm(a):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * a[p, q])
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q], rot[q, p] = s, -s
                a = rot.T @ a @ rot
                v = v @ rot
    w = np.diag(a).copy()
    order = np.argsort(w)
    return w[order], v[:, order]


def _pdf(z):
    return INV_SQRT_2PI * math.exp(-0.5 * z * z)


def phi_integral(lo, hi):
    """Integral of the standard normal density over (lo, hi)."""
    return quad(_pdf, lo, hi, **QUAD_KW)[0]


def cdf(chi):
    if chi <= 0:
        return phi_integral(-math.inf, chi)
    return 0.5 + phi_integral(0.0, chi)


def trunc_mean_upper(mu, sigma, x):
    chi = (x - mu) / sigma
    num = quad(lambda z: z * _pdf(z), chi, math.inf, **QUAD_KW)[0]
    den = phi_integral(chi, math.inf)
    return mu + sigma * num / den


def trunc_mean_lower(mu, sigma, x):
    chi = (x - mu) / sigma
    num = quad(lambda z: z * _pdf(z), -math.inf, chi, **QUAD_KW)[0]
    den = phi_integral(-math.inf, chi)
    return mu + sigma * num / den


def folded_abs_mean(mu, sigma):
    # split at the kink and keep the finite pieces around the density peak
    z0 = -mu / sigma
    f = lambda z: abs(mu + sigma * z) * _pdf(z)  # noqa: E731
    cuts = sorted({-40.0, min(max(z0, -40.0), 40.0), 0.0, 40.0})
    return math.fsum(quad(f, lo, hi, **QUAD_KW)[0] for lo, hi in zip(cuts, cuts[1:]))


def random_spd(rng, n, cond_spread=1.0):
    m = rng.standard_normal((n, n))
    return m @ m.T + cond_spread * 0.1 * np.eye(n)
