"""Scalar altruism equations for a standardized Gaussian solution axis.

For Y ~ N(mu, sigma^2) and chi = (x - mu)/sigma the heterarchical midpoint
condition x = [E(Y|Y<x) + E(Y|Y>x)]/2 becomes ``f_ht(chi) = 0`` and the
hierarchical one x = [mu + E(Y|Y>x)]/2 becomes ``g_hi(chi) = 0``. The
first has the single root 0; the second has a single positive root
chi* = w_hi/2 which fixes the hierarchical scale ``w_hi`` and the cost
coefficient ``c_hi``.
"""

from dataclasses import dataclass, field
import functools
import math

import numpy as np

from .gaussian_scalar import mills_ratio, std_pdf, std_sf

SQRT3 = math.sqrt(3.0)
_SQRT2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


class BracketError(RuntimeError):
    """g_hi does not change sign on (0, sqrt(3)); the CDF in use is broken."""


def _sf(chi, cdf):
    return std_sf(chi) if cdf is None else 1.0 - cdf(chi)


def f_ht(chi, cdf=None):
    """phi/(2[1-Phi]) - phi/(2 Phi) - chi.

    The default path evaluates both ratios as Mills ratios at +chi and -chi,
    which makes the function exactly odd in floating point. ``cdf`` swaps in
    a different Phi (fault-injection hook).
    """
    chi = np.asarray(chi, dtype=float)
    if cdf is None:
        out = 0.5 * (mills_ratio(chi) - mills_ratio(-chi)) - chi
    else:
        p = np.asarray(cdf(chi), dtype=float)
        phi = std_pdf(chi)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = phi / (2.0 * (1.0 - p)) - phi / (2.0 * p) - chi
    return out[()] if np.ndim(out) == 0 else out


def g_hi(chi, cdf=None):
    """phi(chi) - 2 chi [1 - Phi(chi)]."""
    chi = np.asarray(chi, dtype=float)
    out = std_pdf(chi) - 2.0 * chi * _sf(chi, cdf)
    return out[()] if np.ndim(out) == 0 else out


def g_hi_prime(chi, cdf=None):
    """Derivative of g_hi: chi phi(chi) - 2 [1 - Phi(chi)]."""
    chi = np.asarray(chi, dtype=float)
    out = chi * std_pdf(chi) - 2.0 * _sf(chi, cdf)
    return out[()] if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class AltruismConstants:
    w_hi: float
    c_hi: float
    c_ht: float = 2.0 / math.pi

    @property
    def chi_star(self):
        return 0.5 * self.w_hi


def _scalar_sf(cdf):
    if cdf is None:
        return lambda chi: 0.5 * math.erfc(chi / _SQRT2)
    return lambda chi: 1.0 - float(cdf(chi))


def solve_hierarchical_constant(cdf=None) -> AltruismConstants:
    """Root of g_hi in (0, sqrt(3)) by bisection then Newton polish.

    Bisection shrinks the bracket to width 1e-10; at most five Newton steps
    then drive |g_hi| to 1e-14 or below.
    """
    sf = _scalar_sf(cdf)

    def g(chi):
        return math.exp(-0.5 * chi * chi) * _INV_SQRT_2PI - 2.0 * chi * sf(chi)

    def dg(chi):
        return chi * math.exp(-0.5 * chi * chi) * _INV_SQRT_2PI - 2.0 * sf(chi)

    lo, hi = 0.0, SQRT3
    g_lo, g_hi_val = g(lo), g(hi)
    if not (g_lo * g_hi_val < 0):
        raise BracketError(
            f"g_hi has no sign change on (0, sqrt(3)): g(0)={g_lo!r}, g(sqrt3)={g_hi_val!r}")
    while hi - lo > 1e-10:
        mid = 0.5 * (lo + hi)
        g_mid = g(mid)
        if g_mid == 0.0:
            lo = hi = mid
            break
        if (g_mid > 0) == (g_lo > 0):
            lo, g_lo = mid, g_mid
        else:
            hi = mid
    chi = 0.5 * (lo + hi)
    val = g(chi)
    for _ in range(5):
        if abs(val) <= 1e-14:
            break
        chi -= val / dg(chi)
        val = g(chi)
    if abs(val) > 1e-14:
        raise BracketError(f"Newton polish stalled at chi={chi!r}, g_hi={val!r}")
    w = 2.0 * chi
    return AltruismConstants(w_hi=w, c_hi=w * w * sf(chi))


@functools.lru_cache(maxsize=None)
def altruism_constants() -> AltruismConstants:
    """Process-wide cached constants; use these rather than literals."""
    return solve_hierarchical_constant()


@dataclass
class CheckResult:
    name: str
    passed: bool
    worst_margin: float
    detail: str = ""


@dataclass
class UniquenessReport:
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)


def _sign_changes(grid, values):
    # exact zeros are dropped so a touch is not counted as a crossing
    s = np.sign(values)
    idx = np.flatnonzero(s != 0)
    flips = np.flatnonzero(s[idx][:-1] != s[idx][1:])
    return [0.5 * (grid[idx[k]] + grid[idx[k + 1]]) for k in flips]


def verify_root_uniqueness(grid_step=1e-3, chi_max=10.0, cdf=None) -> UniquenessReport:
    """Grid scan backing the uniqueness of both altruism-equation roots.

    Checks that f_ht < 0 on (grid_step, chi_max], and that g_hi and its
    derivative each change sign exactly once on (0, chi_max], inside
    (0, sqrt(3)).
    """
    if not (0 < grid_step <= 1e-3):
        raise ValueError(f"grid_step must lie in (0, 1e-3], got {grid_step}")
    if chi_max < 10:
        raise ValueError(f"chi_max must be >= 10, got {chi_max}")
    n = int(round(chi_max / grid_step))
    grid = grid_step * np.arange(1, n + 1)

    report = UniquenessReport()
    f = f_ht(grid, cdf)
    bad = np.flatnonzero(~(f < 0))
    report.checks.append(CheckResult(
        "f_ht < 0 on (0, chi_max]", bool(bad.size == 0), float(np.max(f)),
        "" if bad.size == 0 else f"f_ht({grid[bad[0]]:.6g}) = {f[bad[0]]:.3e} is not negative"))

    for name, fn in (("g_hi", g_hi), ("g_hi'", g_hi_prime)):
        vals = fn(np.concatenate(([0.0], grid)), cdf)
        crossings = _sign_changes(np.concatenate(([0.0], grid)), vals)
        ok = bool(len(crossings) == 1 and 0 < crossings[0] < SQRT3)
        if ok:
            detail = f"single crossing near chi = {crossings[0]:.6f}"
            margin = min(abs(vals[0]), abs(float(fn(SQRT3, cdf))))
        else:
            where = ", ".join(f"{c:.6g}" for c in crossings[:5]) or "none"
            detail = f"expected one crossing in (0, sqrt(3)); found {len(crossings)} at chi = {where}"
            margin = float("nan")
        report.checks.append(CheckResult(f"{name}: one sign change in (0, sqrt(3))",
                                         ok, margin, detail))
    return report
