"""Data types shared across the package."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .linalg import as_covariance

HETERARCHICAL = "heterarchical"
HIERARCHICAL_PLUS = "hierarchical-plus"
HIERARCHICAL_MINUS = "hierarchical-minus"
PAIR_KINDS = (HETERARCHICAL, HIERARCHICAL_PLUS, HIERARCHICAL_MINUS)


@dataclass(frozen=True, eq=False)
class GaussianBelief:
    """Posterior N(mean, cov) of the parameter given the measurements."""

    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self):
        cov = as_covariance(self.cov)
        mean = np.array(self.mean, dtype=float).reshape(-1)
        if mean.shape[0] != cov.shape[0]:
            raise ValueError(f"mean has length {mean.shape[0]} but covariance is {cov.shape}")
        if not np.all(np.isfinite(mean)):
            raise ValueError("mean has non-finite entries")
        mean.flags.writeable = False
        cov.flags.writeable = False
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)

    @property
    def dim(self):
        return self.mean.shape[0]


@dataclass(frozen=True, eq=False)
class EstimatorPair:
    """Two estimators of the same n-vector parameter.

    ``kind`` is informational (heterarchical, hierarchical-plus,
    hierarchical-minus, or None for an arbitrary pair).
    """

    first: np.ndarray
    second: np.ndarray
    kind: Optional[str] = None

    def __post_init__(self):
        a = np.array(self.first, dtype=float).reshape(-1)
        b = np.array(self.second, dtype=float).reshape(-1)
        if a.shape != b.shape:
            raise ValueError(f"estimators have different shapes {a.shape} and {b.shape}")
        if self.kind is not None and self.kind not in PAIR_KINDS:
            raise ValueError(f"unknown pair kind {self.kind!r}")
        object.__setattr__(self, "first", a)
        object.__setattr__(self, "second", b)

    @property
    def dim(self):
        return self.first.shape[0]

    @property
    def is_degenerate(self):
        return bool(np.array_equal(self.first, self.second))

    def midpoint(self):
        return 0.5 * (self.first + self.second)

    def delta(self):
        return self.second - self.first

    def axis(self):
        """Unit vector from first to second."""
        d = self.delta()
        norm = np.linalg.norm(d)
        if norm == 0:
            raise ValueError("identical estimators have no solution axis")
        return d / norm

    def swapped(self):
        return EstimatorPair(self.second, self.first, self.kind)


@dataclass(frozen=True, eq=False)
class SampleSet:
    """N x n matrix of i.i.d. draws plus the seed that produced them."""

    points: np.ndarray
    seed: Optional[int] = None

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if pts.ndim == 1:
            pts = pts.reshape(-1, 1)
        if pts.ndim != 2 or pts.shape[0] == 0 or pts.shape[1] == 0:
            raise ValueError(f"sample set must be a non-empty N x n array, got shape {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise ValueError("sample set contains non-finite points")
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    @property
    def count(self):
        return self.points.shape[0]

    @property
    def dim(self):
        return self.points.shape[1]

    def mean(self):
        return self.points.mean(axis=0)
