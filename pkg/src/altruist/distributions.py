"""Seeded sampling from Gaussian beliefs and 1-D Gaussian mixtures.

All draws come from ``numpy.random.default_rng(seed)``, i.e. the PCG64
generator; the same seed always yields the same SampleSet.
"""

from dataclasses import dataclass
import math

import numpy as np

from .core import GaussianBelief, SampleSet


@dataclass(frozen=True)
class MixtureSpec:
    """1-D Gaussian mixture; ``components`` holds (weight, mean, variance)."""

    components: tuple

    def __post_init__(self):
        comps = tuple(tuple(float(v) for v in c) for c in self.components)
        if not comps:
            raise ValueError("mixture needs at least one component")
        for w, mu, var in comps:
            if not (w > 0 and var > 0 and math.isfinite(mu)):
                raise ValueError(f"invalid component (weight={w}, mean={mu}, variance={var})")
        total = math.fsum(c[0] for c in comps)
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"weights sum to {total!r}, not 1")
        object.__setattr__(self, "components", comps)

    @property
    def weights(self):
        return np.array([c[0] for c in self.components])

    @property
    def means(self):
        return np.array([c[1] for c in self.components])

    @property
    def stds(self):
        return np.sqrt([c[2] for c in self.components])

    def mean(self):
        return float(self.weights @ self.means)

    def variance(self):
        w, m = self.weights, self.means
        return float(w @ (self.stds ** 2 + m ** 2) - (w @ m) ** 2)


TRIMODAL = MixtureSpec(((1 / 3, 0.0, 1.0), (1 / 3, 10.0, 4.0), (1 / 3, -10.0, 4.0)))


def _check_n(n_samples):
    if int(n_samples) != n_samples or n_samples < 1:
        raise ValueError(f"n_samples must be a positive integer, got {n_samples!r}")
    return int(n_samples)


def sample_gaussian(b: GaussianBelief, n_samples, seed) -> SampleSet:
    """mean + L z with R = L L^T (unpivoted Cholesky) and z standard normal."""
    n_samples = _check_n(n_samples)
    try:
        chol = np.linalg.cholesky(b.cov)
    except np.linalg.LinAlgError as exc:
        raise ValueError(f"covariance is not positive definite: {exc}") from exc
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((n_samples, b.dim))
    return SampleSet(b.mean + z @ chol.T, seed)


def sample_mixture(m: MixtureSpec, n_samples, seed, return_components=False):
    """Categorical component draw followed by a scalar normal draw."""
    n_samples = _check_n(n_samples)
    rng = np.random.default_rng(seed)
    comp = rng.choice(len(m.components), size=n_samples, p=m.weights)
    x = m.means[comp] + m.stds[comp] * rng.standard_normal(n_samples)
    samples = SampleSet(x.reshape(-1, 1), seed)
    if return_components:
        return samples, comp
    return samples


def mixture_pdf(m: MixtureSpec, x):
    x = np.asarray(x, dtype=float)
    z = (x[..., None] - m.means) / m.stds
    dens = np.exp(-0.5 * z * z) / (math.sqrt(2 * math.pi) * m.stds)
    out = dens @ m.weights
    return out[()] if out.ndim == 0 else out
