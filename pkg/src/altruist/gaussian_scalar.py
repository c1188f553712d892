"""Scalar standard-normal functions and truncated/folded first moments.

The survival function and the Mills ratio are evaluated through
``scipy.special.ndtr`` and ``scipy.special.erfcx`` so that the upper tail
keeps full relative precision; ``1 - ndtr(x)`` would lose every digit for
``x`` beyond about 8.
"""

from dataclasses import dataclass
import math

import numpy as np
from scipy.special import erfcx, ndtr

INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)
SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)
_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class ScalarGaussian:
    """Univariate normal N(mean, std**2)."""

    mean: float
    std: float

    def __post_init__(self):
        if not (np.isfinite(self.mean) and np.isfinite(self.std)):
            raise ValueError(f"non-finite parameters: mean={self.mean}, std={self.std}")
        if self.std <= 0:
            raise ValueError(f"std must be positive, got {self.std}")

    def standardize(self, x):
        return (x - self.mean) / self.std


def std_pdf(chi):
    """Standard normal density."""
    chi = np.asarray(chi, dtype=float)
    out = INV_SQRT_2PI * np.exp(-0.5 * chi * chi)
    return out[()] if out.ndim == 0 else out


def std_cdf(chi):
    """Standard normal CDF, accurate to ~1e-16 absolute."""
    out = ndtr(np.asarray(chi, dtype=float))
    return out[()] if np.ndim(out) == 0 else out


def std_sf(chi):
    """Upper tail 1 - Phi(chi), computed without cancellation."""
    out = ndtr(-np.asarray(chi, dtype=float))
    return out[()] if np.ndim(out) == 0 else out


def mills_ratio(chi):
    """Hazard phi(chi) / (1 - Phi(chi)) of the standard normal.

    Uses phi/(1-Phi) = sqrt(2/pi) / erfcx(chi/sqrt(2)), which is stable for
    large positive ``chi`` (where both numerator and denominator underflow)
    and tends to 0 for large negative ``chi``.
    """
    chi = np.asarray(chi, dtype=float)
    with np.errstate(over="ignore"):
        out = SQRT_2_OVER_PI / erfcx(chi / _SQRT2)
    return out[()] if out.ndim == 0 else out


def trunc_mean_upper(g: ScalarGaussian, x):
    """E(Y | Y > x) for Y ~ g."""
    return g.mean + g.std * mills_ratio(g.standardize(x))


def trunc_mean_lower(g: ScalarGaussian, x):
    """E(Y | Y < x) for Y ~ g.

    phi(chi)/Phi(chi) is the Mills ratio evaluated at -chi.
    """
    return g.mean - g.std * mills_ratio(-g.standardize(x))


def folded_abs_mean(g: ScalarGaussian):
    """E|Y| for Y ~ N(mean, std**2) (mean of the folded normal)."""
    mu, sigma = g.mean, g.std
    return (sigma * SQRT_2_OVER_PI * math.exp(-0.5 * (mu / sigma) ** 2)
            + mu * (1.0 - 2.0 * float(ndtr(-mu / sigma))))
