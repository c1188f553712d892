"""``altruist`` command line: regenerate the numerical examples as CSV files.

    altruist <command> [--seed INT] [--samples INT] [--out DIR] [--grid INT]
                       [--grid-min F] [--grid-max F]

Exit status: 0 success, 1 invalid input or I/O failure, 2 a verification
check failed.
"""

import argparse
import csv
from dataclasses import dataclass
import math
from pathlib import Path
import sys
from typing import Optional

import numpy as np

from . import altruism
from .closed_form import analytic_cost, heterarchical_pair, hierarchical_pair, reduction_bounds
from .core import EstimatorPair, GaussianBelief
from .distributions import TRIMODAL, mixture_pdf, sample_gaussian, sample_mixture
from .empirical import (LloydConfig, lloyd_from, lloyd_heterarchical, lloyd_hierarchical,
                        mc_cost, sanity_far_field)
from .gaussian_scalar import mills_ratio, std_pdf
from .grids import pair_cost_grid_1d, pinned_pair_grid_2d, symmetric_pair_grid_2d
from .linalg import leading_eigenpair

COMMANDS = ("example-1d", "example-2d", "trimodal", "bounds", "cost-grid", "verify")
EXIT_OK, EXIT_INVALID, EXIT_VERIFY = 0, 1, 2

BELIEF_1D = GaussianBelief([0.0], [[100.0]])
BELIEF_2D = GaussianBelief([0.0, 0.0], [[5.0, 1.5], [1.5, 1.0]])

# per-command defaults: (samples, grid_min, grid_max)
_DEFAULTS = {
    "example-1d": (10**6, -30.0, 30.0),
    "example-2d": (10**6, -4.0, 4.0),
    "trimodal": (99_999, -25.0, 25.0),
    "cost-grid": (99_999, -25.0, 25.0),
    "bounds": (10**6, None, None),
    "verify": (10**6, None, None),
}
HIST_BINS, HIST_RANGE = 200, (-25.0, 25.0)


class InvalidInput(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    seed: int = 42
    samples: Optional[int] = None
    out: Path = Path(".")
    grid: int = 500
    grid_min: Optional[float] = None
    grid_max: Optional[float] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InvalidInput(f"unknown command {self.command!r}")
        default_n, default_lo, default_hi = _DEFAULTS[self.command]
        if self.samples is None:
            self.samples = default_n
        if self.grid_min is None:
            self.grid_min = default_lo
        if self.grid_max is None:
            self.grid_max = default_hi
        self.out = Path(self.out)
        if self.seed < 0:
            raise InvalidInput("--seed must be non-negative")
        if self.grid < 2:
            raise InvalidInput("--grid must be at least 2")
        if self.command in ("example-1d", "example-2d", "trimodal", "cost-grid"):
            if self.samples < 1000:
                raise InvalidInput("--samples must be at least 1000 for example commands")
        elif self.samples < 2:
            raise InvalidInput("--samples must be at least 2")
        if self.grid_min is not None and not self.grid_min < self.grid_max:
            raise InvalidInput("--grid-min must be below --grid-max")

    def grid_nodes(self):
        """``grid`` intervals, i.e. grid + 1 nodes, so 0 is a node of a symmetric range."""
        return np.linspace(self.grid_min, self.grid_max, self.grid + 1)


def _fmt(v):
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".12g")
    return str(v)


def write_csv(path: Path, header, rows):
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="", encoding="ascii") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            for row in rows:
                w.writerow([_fmt(v) for v in row])
    except OSError as exc:
        raise InvalidInput(f"cannot write {path}: {exc.strerror or exc}") from exc
    return path


def _write_grid(path, names, axes, values):
    a, b = np.meshgrid(*axes, indexing="ij")
    rows = zip(a.ravel(), b.ravel(), values.ravel())
    return write_csv(path, (*names, "cost"), rows)


def _summary_rows(belief, samples, cfg):
    n = belief.dim
    rows = []

    def add(method, pair, analytic, iterations="", converged=""):
        mc, se = mc_cost(samples, pair)
        up = "" if analytic == "" else 1.0 - analytic / float(np.trace(belief.cov))
        rows.append((method, *pair.first, *pair.second, analytic, mc, se, up, iterations, converged))

    add("mmse", EstimatorPair(belief.mean, belief.mean), float(np.trace(belief.cov)))
    add("heterarchical", heterarchical_pair(belief), analytic_cost(belief, "heterarchical").j_value)
    j_hi = analytic_cost(belief, "hierarchical").j_value
    add("hierarchical-plus", hierarchical_pair(belief, "plus"), j_hi)
    add("hierarchical-minus", hierarchical_pair(belief, "minus"), j_hi)
    lcfg = LloydConfig(seed=cfg.seed)
    for name, fn in (("lloyd-heterarchical", lloyd_heterarchical),
                     ("lloyd-hierarchical", lloyd_hierarchical)):
        res = fn(samples, lcfg)
        add(name, res.pair, "", res.iterations, res.converged)
    header = ("method", *[f"first_{i + 1}" for i in range(n)],
              *[f"second_{i + 1}" for i in range(n)],
              "analytic_cost", "mc_cost", "mc_stderr", "upsilon", "iterations", "converged")
    return header, rows


def run_example_1d(cfg: RunConfig):
    samples = sample_gaussian(BELIEF_1D, cfg.samples, cfg.seed)
    header, rows = _summary_rows(BELIEF_1D, samples, cfg)
    files = [write_csv(cfg.out / "example1d_summary.csv", header, rows)]
    nodes = cfg.grid_nodes()
    grid = pair_cost_grid_1d(samples, nodes, nodes)
    files.append(_write_grid(cfg.out / "example1d_grid.csv", ("first", "second"),
                             (nodes, nodes), grid))
    return files


def run_example_2d(cfg: RunConfig):
    b = BELIEF_2D
    samples = sample_gaussian(b, cfg.samples, cfg.seed)
    header, rows = _summary_rows(b, samples, cfg)
    files = [write_csv(cfg.out / "example2d_summary.csv", header, rows)]
    lam, v = leading_eigenpair(b.cov)
    files.append(write_csv(cfg.out / "example2d_eigen.csv",
                           ("lambda_1", "v_1", "v_2", "trace"),
                           [(lam, v[0], v[1], float(np.trace(b.cov)))]))
    nodes = cfg.grid_nodes()
    het = symmetric_pair_grid_2d(samples, nodes, nodes, center=tuple(b.mean))
    files.append(_write_grid(cfg.out / "example2d_heterarchical_grid.csv",
                             ("second_x", "second_y"), (nodes, nodes), het))
    hier = pinned_pair_grid_2d(samples, nodes, nodes, first=tuple(b.mean))
    files.append(_write_grid(cfg.out / "example2d_hierarchical_grid.csv",
                             ("second_x", "second_y"), (nodes, nodes), hier))
    return files


def trimodal_solutions(samples, seed):
    """Best Lloyd pair and the Lloyd fixed point reached from its mirror image,
    with their costs on the same samples.

    Returns (rows, costs_agree); the two costs agree when their difference is
    within two combined standard errors.
    """
    cfg = LloydConfig(seed=seed)
    best = lloyd_heterarchical(samples, cfg)
    lo, hi = sorted((float(best.pair.first[0]), float(best.pair.second[0])))
    mirror = lloyd_from(samples, EstimatorPair([-hi], [-lo]), cfg)
    mean = float(samples.mean()[0])
    rows, stats = [], []
    for label, res in (("lloyd", best), ("mirror", mirror)):
        a, b = sorted((float(res.pair.first[0]), float(res.pair.second[0])))
        stats.append((res.mc_cost, res.mc_stderr))
        rows.append([label, a, b, 0.5 * (a + b), res.mc_cost, res.mc_stderr, mean,
                     res.restart_index, res.iterations, res.converged])
    (c1, s1), (c2, s2) = stats
    agree = abs(c1 - c2) <= 2.0 * math.hypot(s1, s2)
    for r in rows:
        r.append(agree)
    return rows, agree


def run_trimodal(cfg: RunConfig):
    samples = sample_mixture(TRIMODAL, cfg.samples, cfg.seed)
    counts, edges = np.histogram(samples.points[:, 0], bins=HIST_BINS, range=HIST_RANGE)
    width = edges[1] - edges[0]
    centers = 0.5 * (edges[:-1] + edges[1:])
    hist_rows = zip(edges[:-1], edges[1:], counts, counts / (samples.count * width),
                    mixture_pdf(TRIMODAL, centers))
    files = [write_csv(cfg.out / "trimodal_histogram.csv",
                       ("bin_left", "bin_right", "count", "density", "pdf"), hist_rows)]
    rows, agree = trimodal_solutions(samples, cfg.seed)
    files.append(write_csv(cfg.out / "trimodal_solutions.csv",
                           ("set", "first", "second", "boundary", "mc_cost", "mc_stderr",
                            "sample_mean", "restart_index", "iterations", "converged",
                            "costs_agree"), rows))
    if not agree:
        raise VerificationFailed("mirror solution costs differ by more than 2 standard errors")
    return files


def run_cost_grid(cfg: RunConfig):
    samples = sample_mixture(TRIMODAL, cfg.samples, cfg.seed)
    nodes = cfg.grid_nodes()
    grid = pair_cost_grid_1d(samples, nodes, nodes)
    return [_write_grid(cfg.out / "trimodal_grid.csv", ("first", "second"), (nodes, nodes), grid)]


def run_bounds(cfg: RunConfig):
    rows = [(n, *reduction_bounds(n)) for n in range(1, cfg.grid + 1)]
    return [write_csv(cfg.out / "bounds.csv",
                      ("dim", "ht_lower", "ht_upper", "hi_lower", "hi_upper"), rows)]


class VerificationFailed(Exception):
    pass


def verification_table(cfg: RunConfig, cdf=None):
    """Rows of (check, passed, margin, detail). ``cdf`` replaces Phi for
    fault injection."""
    rows = []
    rep = altruism.verify_root_uniqueness(1e-3, 10.0, cdf=cdf)
    rows += [(c.name, c.passed, c.worst_margin, c.detail) for c in rep.checks]
    try:
        k = altruism.solve_hierarchical_constant(cdf=cdf)
    except altruism.BracketError as exc:
        rows.append(("solve g_hi root", False, float("nan"), str(exc)))
    else:
        chi = k.chi_star
        sf = 0.5 * math.erfc(chi / math.sqrt(2)) if cdf is None else 1.0 - float(cdf(chi))
        gval = abs(float(altruism.g_hi(chi, cdf=cdf)))
        rows.append(("g_hi(w_hi/2) = 0", gval <= 1e-12, 1e-12 - gval, f"|g_hi| = {gval:.3e}"))
        rel = abs(k.c_hi - k.w_hi ** 2 * sf)
        rows.append(("c_hi = w_hi^2 (1 - Phi(w_hi/2))", rel <= 1e-12, 1e-12 - rel, ""))
        fixed = abs(0.5 * float(mills_ratio(chi)) - chi) if cdf is None else abs(
            float(std_pdf(chi)) / (2 * sf) - chi)
        rows.append(("phi/(2[1-Phi]) = chi at chi*", fixed <= 1e-12, 1e-12 - fixed, ""))
        rows.append(("w_hi = 1.224 +/- 5e-4", abs(k.w_hi - 1.224) < 5e-4,
                     5e-4 - abs(k.w_hi - 1.224), f"w_hi = {k.w_hi:.10f}"))
        rows.append(("c_hi = 0.405 +/- 5e-4", abs(k.c_hi - 0.405) < 5e-4,
                     5e-4 - abs(k.c_hi - 0.405), f"c_hi = {k.c_hi:.10f}"))
    samples = sample_gaussian(BELIEF_1D, cfg.samples, cfg.seed)
    far = sanity_far_field(samples, 10.0, seed=cfg.seed)
    rows.append(("far-field cost > 0.99 J_MS", far.passed, far.worst_margin / far.threshold,
                 far.detail))
    return rows


def run_verify(cfg: RunConfig, cdf=None, stream=None):
    stream = stream or sys.stdout
    rows = verification_table(cfg, cdf=cdf)
    width = max(len(r[0]) for r in rows)
    for name, ok, margin, detail in rows:
        line = f"{'PASS' if ok else 'FAIL'}  {name:<{width}}  margin={margin:.3e}"
        print(line + (f"  {detail}" if detail else ""), file=stream)
    failed = sum(not r[1] for r in rows)
    print(f"{len(rows) - failed}/{len(rows)} checks passed", file=stream)
    return EXIT_OK if failed == 0 else EXIT_VERIFY


_RUNNERS = {
    "example-1d": run_example_1d,
    "example-2d": run_example_2d,
    "trimodal": run_trimodal,
    "cost-grid": run_cost_grid,
    "bounds": run_bounds,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser():
    p = _Parser(prog="altruist", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--samples", type=int, default=None,
                   help="Monte Carlo sample count (default 1e6; 99999 for trimodal/cost-grid)")
    p.add_argument("--out", type=Path, default=Path("."), help="output directory")
    p.add_argument("--grid", type=int, default=500,
                   help="grid intervals per axis (grid+1 nodes); max dimension for bounds")
    p.add_argument("--grid-min", type=float, default=None)
    p.add_argument("--grid-max", type=float, default=None)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(args.command, args.seed, args.samples, args.out, args.grid,
                        args.grid_min, args.grid_max)
        if cfg.command == "verify":
            return run_verify(cfg)
        for path in _RUNNERS[cfg.command](cfg):
            print(path)
    except InvalidInput as exc:
        print(f"altruist: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except VerificationFailed as exc:
        print(f"altruist: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
