"""Monte Carlo cost surfaces over grids of estimator positions.

Every cell is the same sample-mean estimate that :func:`mc_cost` returns,
but the sums are rearranged so a whole grid costs roughly one pass over the
samples per grid row instead of one pass per cell:

* 1-D pairs: sorted samples and prefix sums of x and x**2.
* 2-D symmetric pairs (c - d, c + d): |<theta - c, d>| is piecewise linear
  along a grid row, with the kink of each sample at a fixed ratio, so prefix
  sums over samples sorted by that ratio give every cell.
* 2-D pinned pairs (c, c + d): each sample contributes a truncated parabola
  on an interval of each grid row, accumulated with difference arrays.

Results agree with direct evaluation to rounding error.
"""

import numpy as np

from .core import SampleSet


def _prefix(values):
    return np.concatenate(([0.0], np.cumsum(values)))


def grid_index(grid, values, side):
    """``np.searchsorted(grid, values, side)`` for an increasing grid.

    Uniformly spaced grids take an arithmetic shortcut (floor, then a one-step
    correction for rounding), which is several times faster for the large
    unsorted query arrays used below.
    """
    grid = np.asarray(grid, float)
    g = grid.shape[0]
    h = (grid[-1] - grid[0]) / (g - 1) if g > 1 else 0.0
    if g < 3 or not np.all(np.abs(np.diff(grid) - h) <= 1e-9 * h):
        return np.searchsorted(grid, values, side=side)
    k = np.floor((np.clip(values, grid[0] - h, grid[-1] + h) - grid[0]) / h).astype(np.intp) + 1
    np.clip(k, 0, g, out=k)
    below = grid[np.maximum(k - 1, 0)]
    if side == "right":
        k -= (k > 0) & (below > values)
        k += (k < g) & (grid[np.minimum(k, g - 1)] <= values)
    else:
        k -= (k > 0) & (below >= values)
        k += (k < g) & (grid[np.minimum(k, g - 1)] < values)
    return k


def pair_cost_grid_1d(samples: SampleSet, first_values, second_values):
    """cost[i, j] = mean_k min((f_i - x_k)^2, (s_j - x_k)^2) for scalar samples.

    Exactly symmetric: swapping the roles of the two estimators gives the
    same floating-point value.
    """
    if samples.dim != 1:
        raise ValueError("pair_cost_grid_1d needs scalar samples")
    x = np.sort(samples.points[:, 0])
    n = x.shape[0]
    s1, s2 = _prefix(x), _prefix(x * x)
    a, b = np.meshgrid(np.asarray(first_values, float), np.asarray(second_values, float),
                       indexing="ij")
    lo, hi = np.minimum(a, b), np.maximum(a, b)
    k = np.searchsorted(x, 0.5 * (lo + hi), side="left")
    left = s2[k] - 2.0 * lo * s1[k] + lo * lo * k
    right = (s2[n] - s2[k]) - 2.0 * hi * (s1[n] - s1[k]) + hi * hi * (n - k)
    return (left + right) / n


def symmetric_pair_grid_2d(samples: SampleSet, xs, ys, center=(0.0, 0.0)):
    """Cost with second = (x_i, y_j) and first mirrored through ``center``.

    Returns an array indexed [i, j]. Uses
    min(|t - d|^2, |t + d|^2) = |t|^2 + |d|^2 - 2 |<t, d>| with t = theta - c.
    """
    if samples.dim != 2:
        raise ValueError("symmetric_pair_grid_2d needs 2-D samples")
    t = samples.points - np.asarray(center, float)
    n = t.shape[0]
    p, q = t[:, 0], t[:, 1]
    base = np.square(t).sum(axis=1).mean()
    dxs = np.asarray(xs, float) - center[0]
    dys = np.asarray(ys, float) - center[1]

    zero = p == 0
    abs_q_zero = np.abs(q[zero]).sum()
    p, q = p[~zero], q[~zero]
    sgn = np.sign(p)
    ratio = -q / p  # kink of |p dx + q dy| sits at dx = ratio * dy
    order = np.argsort(ratio, kind="stable")
    ratio = ratio[order]
    cum_abs_p = _prefix(np.abs(p)[order])
    cum_sq = _prefix((sgn * q)[order])
    tot_abs_p, tot_sq = cum_abs_p[-1], cum_sq[-1]

    dx, dy = np.meshgrid(dxs, dys, indexing="ij")
    # samples whose term has already flipped to +sgn(p)(p dx + q dy)
    flip_abs_p = np.zeros_like(dx)
    flip_sq = np.zeros_like(dx)
    pos, neg, flat = dy > 0, dy < 0, dy == 0
    if pos.any():
        k = np.searchsorted(ratio, dx[pos] / dy[pos], side="left")
        flip_abs_p[pos], flip_sq[pos] = cum_abs_p[k], cum_sq[k]
    if neg.any():
        k = np.searchsorted(ratio, dx[neg] / dy[neg], side="right")
        flip_abs_p[neg], flip_sq[neg] = tot_abs_p - cum_abs_p[k], tot_sq - cum_sq[k]
    if flat.any():
        on = dx[flat] > 0
        flip_abs_p[flat] = np.where(on, tot_abs_p, 0.0)
        flip_sq[flat] = np.where(on, tot_sq, 0.0)
    abs_dot = (-(dx * tot_abs_p + dy * tot_sq) + 2.0 * (dx * flip_abs_p + dy * flip_sq)
               + np.abs(dy) * abs_q_zero)
    return base + dx * dx + dy * dy - 2.0 * abs_dot / n


def pinned_pair_grid_2d(samples: SampleSet, xs, ys, first=(0.0, 0.0)):
    """Cost with the first estimator fixed at ``first`` and second = (x_i, y_j).

    Returns an array indexed [i, j]. Uses
    min(|t|^2, |t - d|^2) = |t|^2 - max(0, 2<t, d> - |d|^2) with t = theta - first.
    """
    if samples.dim != 2:
        raise ValueError("pinned_pair_grid_2d needs 2-D samples")
    t = samples.points - np.asarray(first, float)
    n = t.shape[0]
    p, q = t[:, 0], t[:, 1]
    r2 = p * p + q * q
    base = r2.mean()
    dxs = np.asarray(xs, float) - first[0]
    dys = np.asarray(ys, float) - first[1]
    if np.any(np.diff(dxs) <= 0):
        raise ValueError("xs must be strictly increasing")
    g = dxs.shape[0]
    gain = np.empty((g, dys.shape[0]))
    for j, dy in enumerate(dys):
        # row dy: sample gains on the open interval |dx - p| < sqrt(disc)
        disc = r2 - (dy - q) ** 2
        live = disc > 0
        pl, ql = p[live], q[live]
        half = np.sqrt(disc[live])
        lo = grid_index(dxs, pl - half, "right")
        hi = grid_index(dxs, pl + half, "left")
        keep = lo < hi
        lo, hi, pl, ql = lo[keep], hi[keep], pl[keep], ql[keep]
        c1 = 2.0 * pl
        c0 = 2.0 * ql * dy - dy * dy
        cnt = np.cumsum(np.bincount(lo, minlength=g + 1) - np.bincount(hi, minlength=g + 1))[:g]
        s1 = np.cumsum(np.bincount(lo, c1, g + 1) - np.bincount(hi, c1, g + 1))[:g]
        s0 = np.cumsum(np.bincount(lo, c0, g + 1) - np.bincount(hi, c0, g + 1))[:g]
        gain[:, j] = -dxs * dxs * cnt + dxs * s1 + s0
    np.maximum(gain, 0.0, out=gain)
    return base - gain / n
