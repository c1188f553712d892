"""Sample-based machinery for arbitrary posteriors.

The posterior is represented by a :class:`~altruist.core.SampleSet`. The
cost of a pair is the sample mean of ``min(|a - theta|^2, |b - theta|^2)``
and the optimal pairs are fixed points of a two-generator Lloyd iteration:
each free estimator is moved to the centroid of its own Voronoi region.
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .core import EstimatorPair, HETERARCHICAL, HIERARCHICAL_MINUS, HIERARCHICAL_PLUS, SampleSet


class LloydError(RuntimeError):
    """No Lloyd restart reached a converged, non-degenerate pair."""


@dataclass
class VoronoiAssignment:
    labels: np.ndarray  # 1 or 2 per sample
    p1: float

    @property
    def in_first(self):
        return self.labels == 1


def _check_dims(samples: SampleSet, pair: EstimatorPair):
    if samples.dim != pair.dim:
        raise ValueError(f"pair has dimension {pair.dim} but samples have {samples.dim}")


def assign(samples: SampleSet, pair: EstimatorPair) -> VoronoiAssignment:
    """Label each sample by its strictly closer estimator.

    Uses the half-space form: region 1 iff <theta - midpoint, second - first> < 0.
    Points on the bisector go to region 2.
    """
    _check_dims(samples, pair)
    if pair.is_degenerate:
        raise ValueError("identical estimators do not define a Voronoi partition")
    proj = (samples.points - pair.midpoint()) @ pair.delta()
    labels = np.where(proj < 0, 1, 2).astype(np.int8)
    return VoronoiAssignment(labels, float(np.count_nonzero(labels == 1)) / samples.count)


def pointwise_cost(samples: SampleSet, pair: EstimatorPair) -> np.ndarray:
    _check_dims(samples, pair)
    d1 = np.square(samples.points - pair.first).sum(axis=1)
    d2 = np.square(samples.points - pair.second).sum(axis=1)
    return np.minimum(d1, d2)


def mc_cost(samples: SampleSet, pair: EstimatorPair):
    """Monte Carlo estimate of E min(|a - theta|^2, |b - theta|^2).

    Returns ``(mean, stderr)``; the pair may be degenerate. Symmetric in
    the two estimators bit for bit.
    """
    c = pointwise_cost(samples, pair)
    n = c.shape[0]
    stderr = float(c.std(ddof=1) / np.sqrt(n)) if n > 1 else float("nan")
    return float(c.mean()), stderr


@dataclass
class RegionStats:
    """Per-region probability mass, centroid and centroid standard error."""

    p1: float
    counts: np.ndarray       # (2,)
    centroids: np.ndarray    # (2, n), NaN rows for empty regions
    stderr: np.ndarray       # (2, n)


def region_statistics(samples: SampleSet, pair: EstimatorPair) -> RegionStats:
    a = assign(samples, pair)
    pts = samples.points
    counts = np.zeros(2, dtype=int)
    cent = np.full((2, samples.dim), np.nan)
    se = np.full((2, samples.dim), np.nan)
    for k, mask in enumerate((a.labels == 1, a.labels == 2)):
        sub = pts[mask]
        counts[k] = sub.shape[0]
        if counts[k]:
            cent[k] = sub.mean(axis=0)
        if counts[k] > 1:
            se[k] = sub.std(axis=0, ddof=1) / np.sqrt(counts[k])
    return RegionStats(a.p1, counts, cent, se)


@dataclass
class LloydConfig:
    max_iters: int = 200
    move_tol: float = 1e-8
    restarts: int = 8
    seed: int = 0

    def __post_init__(self):
        if self.max_iters < 1 or self.restarts < 1:
            raise ValueError("max_iters and restarts must be positive")
        if not self.move_tol > 0:
            raise ValueError("move_tol must be positive")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


@dataclass
class LloydResult:
    pair: EstimatorPair
    iterations: int
    converged: bool
    mc_cost: float
    mc_stderr: float
    restart_index: int
    restart_costs: list = field(default_factory=list)


_MAX_REPAIRS = 3


def _axis_scale(points):
    std = points.std(axis=0)
    if not np.any(std > 0):
        raise ValueError("zero-variance sample set: no non-degenerate pair exists")
    return np.where(std > 0, std, std.max())


def _principal_axis(points):
    if points.shape[1] == 1:
        return np.ones(1)
    _, vecs = np.linalg.eigh(np.cov(points, rowvar=False))
    u = vecs[:, -1]
    nz = np.flatnonzero(np.abs(u) > 1e-12)
    return -u if u[nz[0]] < 0 else u


def _distinct_points(points, rng, k):
    """k distinct sample points drawn uniformly (falls back to repeats if the
    set has too few distinct values)."""
    out = [points[rng.integers(points.shape[0])]]
    for _ in range(k - 1):
        for _ in range(32):
            cand = points[rng.integers(points.shape[0])]
            if not any(np.array_equal(cand, p) for p in out):
                break
        out.append(cand)
    return [p.copy() for p in out]


def _run(points, scale, a, b, pinned, cfg, rng):
    """One Lloyd restart. Returns (a, b, iterations, converged) or None when
    the restart is abandoned after repeated empty regions."""
    n_pts = points.shape[0]
    repairs = 0
    for it in range(1, cfg.max_iters + 1):
        delta = b - a
        side = (points - 0.5 * (a + b)) @ delta >= 0  # True: region 2
        n2 = int(np.count_nonzero(side))
        if n2 == 0 or (n2 == n_pts and not pinned) or not np.any(delta):
            repairs += 1
            if repairs > _MAX_REPAIRS:
                return None
            # re-seed the starved estimator at a random sample point
            if pinned or n2 == 0:
                b = points[rng.integers(n_pts)].copy()
            else:
                a = points[rng.integers(n_pts)].copy()
            continue
        new_b = points[side].mean(axis=0)
        new_a = a if pinned else points[~side].mean(axis=0)
        move = max(np.max(np.abs(new_a - a) / scale), np.max(np.abs(new_b - b) / scale))
        a, b = new_a, new_b
        if move <= cfg.move_tol:
            return a, b, it, True
    return a, b, cfg.max_iters, False


def _lloyd(samples: SampleSet, cfg: LloydConfig, pinned: bool) -> LloydResult:
    if samples.count < 2:
        raise ValueError("Lloyd iteration needs at least two samples")
    pts = samples.points
    scale = _axis_scale(pts)
    center = pts.mean(axis=0)
    delta0 = 0.5 * scale.max()
    axis0 = _principal_axis(pts)
    rng = np.random.default_rng(cfg.seed)
    kind = HIERARCHICAL_PLUS if pinned else HETERARCHICAL

    best = None
    costs = []
    for r in range(cfg.restarts):
        if r == 0:
            a = center.copy() if pinned else center - delta0 * axis0
            b = center + delta0 * axis0
        elif pinned:
            a = center.copy()
            b = _distinct_points(pts, rng, 1)[0]
        else:
            a, b = _distinct_points(pts, rng, 2)
        out = _run(pts, scale, a, b, pinned, cfg, rng)
        if out is None or not out[3] or np.array_equal(out[0], out[1]):
            costs.append(float("nan"))
            continue
        a, b, iters, _ = out
        pair = EstimatorPair(a, b, kind)
        cost, se = mc_cost(samples, pair)
        costs.append(cost)
        if best is None or cost < best.mc_cost:
            best = LloydResult(pair, iters, True, cost, se, r)
    if best is None:
        raise LloydError(f"none of {cfg.restarts} Lloyd restarts converged to a valid pair")
    best.restart_costs = costs
    return best


def lloyd_heterarchical(samples: SampleSet, cfg: Optional[LloydConfig] = None) -> LloydResult:
    """Both estimators free; returns the lowest-cost converged restart.

    Restart 0 starts symmetric about the sample mean along the leading
    principal axis (half the largest per-axis std each side); later restarts
    start from two distinct random sample points.
    """
    return _lloyd(samples, cfg or LloydConfig(), pinned=False)


def lloyd_hierarchical(samples: SampleSet, cfg: Optional[LloydConfig] = None) -> LloydResult:
    """First estimator pinned at the sample mean (the empirical MMSE
    estimate); only the second moves to its region's centroid."""
    return _lloyd(samples, cfg or LloydConfig(), pinned=True)


def lloyd_from(samples: SampleSet, pair: EstimatorPair, cfg: Optional[LloydConfig] = None,
               pinned=False) -> LloydResult:
    """Single Lloyd run started at ``pair`` (first estimator held fixed when
    ``pinned``)."""
    cfg = cfg or LloydConfig()
    _check_dims(samples, pair)
    scale = _axis_scale(samples.points)
    rng = np.random.default_rng(cfg.seed)
    out = _run(samples.points, scale, pair.first.copy(), pair.second.copy(), pinned, cfg, rng)
    if out is None:
        raise LloydError("Lloyd run abandoned after repeated empty regions")
    a, b, iters, converged = out
    res = EstimatorPair(a, b, HIERARCHICAL_PLUS if pinned else HETERARCHICAL)
    cost, se = mc_cost(samples, res)
    return LloydResult(res, iters, converged, cost, se, 0, [cost])


@dataclass
class FarFieldReport:
    passed: bool
    worst_margin: float
    threshold: float
    costs: np.ndarray
    worst_pair: EstimatorPair
    detail: str = ""


def sanity_far_field(samples: SampleSet, radius_factor=10.0, n_pairs=20, seed=0) -> FarFieldReport:
    """Cost of pairs with both estimators far from the data stays above the
    empirical MMSE (minus 1%).

    Estimators are placed at distance [radius_factor, 2 radius_factor] x the
    RMS sample radius from the sample mean, in seeded random directions.
    """
    if radius_factor < 5:
        raise ValueError(f"radius_factor must be >= 5, got {radius_factor}")
    pts = samples.points
    center = pts.mean(axis=0)
    j_ms = float(np.square(pts - center).sum(axis=1).mean())
    radius = np.sqrt(j_ms)
    threshold = 0.99 * j_ms
    rng = np.random.default_rng(seed)
    costs = np.empty(n_pairs)
    pairs = []
    for k in range(n_pairs):
        ends = []
        for _ in range(2):
            u = rng.standard_normal(samples.dim)
            u /= np.linalg.norm(u)
            ends.append(center + radius_factor * radius * rng.uniform(1.0, 2.0) * u)
        pair = EstimatorPair(*ends)
        pairs.append(pair)
        costs[k] = mc_cost(samples, pair)[0]
    worst = int(np.argmin(costs))
    margin = float(costs[worst] - threshold)
    passed = bool(margin > 0)
    detail = "" if passed else (
        f"pair ({pairs[worst].first}, {pairs[worst].second}) has cost {costs[worst]:.6g} "
        f"<= {threshold:.6g}")
    return FarFieldReport(passed, margin, threshold, costs, pairs[worst], detail)


def lloyd_bootstrap_stderr(samples: SampleSet, result: LloydResult, n_boot=64, seed=0):
    """Bootstrap standard error of a converged Lloyd pair, shape (2, n).

    Each replicate resamples the points with replacement and reruns Lloyd
    from ``result.pair`` (re-pinning the first estimator at the resample mean
    for hierarchical pairs). Unlike the per-region centroid error this picks
    up the feedback through the moving Voronoi boundary, which inflates the
    spread of the fixed point by roughly 1.5-2x for Gaussian data.
    """
    if n_boot < 2:
        raise ValueError(f"n_boot must be at least 2, got {n_boot}")
    pinned = result.pair.kind in (HIERARCHICAL_PLUS, HIERARCHICAL_MINUS)
    rng = np.random.default_rng(seed)
    pts = samples.points
    reps = np.empty((n_boot, 2, samples.dim))
    for k in range(n_boot):
        boot = SampleSet(pts[rng.integers(0, samples.count, samples.count)])
        first = boot.mean() if pinned else result.pair.first
        out = lloyd_from(boot, EstimatorPair(first, result.pair.second), pinned=pinned)
        reps[k] = out.pair.first, out.pair.second
    return reps.std(axis=0, ddof=1)
