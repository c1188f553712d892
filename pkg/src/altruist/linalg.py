"""Dense symmetric-matrix helpers: validation, trace, quadratic forms and
the leading eigenpair by power iteration."""

from typing import NamedTuple

import numpy as np

SYM_TOL = 1e-12
PD_REL_TOL = 1e-12
RAYLEIGH_RTOL = 1e-13
MAX_ITERS = 10_000
_STALL_WINDOW = 20
RESIDUAL_RTOL = 1e-10
LAMBDA_ATOL = 1e-9  # relative to |R|_F: eigenvalues closer than this count as tied


class ConvergenceError(RuntimeError):
    """Power iteration did not settle within the iteration cap."""

    def __init__(self, iterations, residual):
        super().__init__(
            f"power iteration did not converge after {iterations} iterations "
            f"(last residual {residual:.3e})")
        self.iterations = iterations
        self.residual = residual


class EigenPair(NamedTuple):
    value: float
    vector: np.ndarray


def as_covariance(R) -> np.ndarray:
    """Return ``R`` as a validated symmetric positive-definite float array.

    Raises ValueError when the matrix is not square, not finite, not
    symmetric to 1e-12 (relative to max(1, |entry|)) or has an eigenvalue
    below 1e-12 * trace.
    """
    R = np.array(R, dtype=float)
    if R.ndim == 0:
        R = R.reshape(1, 1)
    if R.ndim != 2 or R.shape[0] != R.shape[1] or R.shape[0] == 0:
        raise ValueError(f"covariance must be a non-empty square matrix, got shape {R.shape}")
    if not np.all(np.isfinite(R)):
        raise ValueError("covariance has non-finite entries")
    asym = np.abs(R - R.T)
    if np.any(asym > SYM_TOL * np.maximum(1.0, np.abs(R))):
        raise ValueError(f"covariance is not symmetric (max asymmetry {asym.max():.3e})")
    eig = np.linalg.eigvalsh(R)
    tr = np.trace(R)
    if tr <= 0 or eig[0] <= PD_REL_TOL * tr:
        raise ValueError(f"covariance is not positive definite (min eigenvalue {eig[0]:.3e})")
    return R


def trace(R) -> float:
    return float(np.trace(as_covariance(R)))


def quadratic_form(R, d) -> float:
    """d^T R d for a unit vector ``d``: the variance of the projection onto d."""
    R = as_covariance(R)
    d = np.asarray(d, dtype=float).reshape(-1)
    if d.shape[0] != R.shape[0]:
        raise ValueError(f"direction has length {d.shape[0]}, expected {R.shape[0]}")
    if abs(np.linalg.norm(d) - 1.0) > 1e-10:
        raise ValueError(f"direction must be a unit vector (norm {np.linalg.norm(d)!r})")
    return float(d @ R @ d)


def sign_normalize(v):
    """Flip ``v`` so its first component with magnitude > 1e-12 is positive."""
    v = np.asarray(v, dtype=float)
    nz = np.flatnonzero(np.abs(v) > 1e-12)
    if nz.size and v[nz[0]] < 0:
        v = -v
    return v


def _power_iterate(R, x0, scale, shift=0.0):
    # Iterates with R - shift*I; eigenvalue and residual always refer to R.
    # The Rayleigh quotient settles about twice as fast (in digits) as the
    # vector, so once it has converged keep iterating until the residual is
    # negligible or stops shrinking (a clustered or repeated lambda_1).
    x = x0 / np.linalg.norm(x0)
    lam_prev = None
    history = []
    res = np.inf
    for it in range(1, MAX_ITERS + 1):
        y = R @ x
        lam = float(x @ y)
        res = float(np.linalg.norm(y - lam * x))
        if res <= 1e-13 * scale:
            return lam, x, it
        if lam_prev is not None and abs(lam - lam_prev) <= RAYLEIGH_RTOL * abs(lam):
            history.append(res)
            stalled = len(history) > _STALL_WINDOW and res > 0.999 * history[-_STALL_WINDOW - 1]
            if stalled and res <= RESIDUAL_RTOL * scale:
                return lam, x, it
        lam_prev = lam
        y -= shift * x
        x = y / np.linalg.norm(y)
    raise ConvergenceError(MAX_ITERS, res)


def leading_eigenpair(R) -> EigenPair:
    """Largest eigenvalue of ``R`` and its sign-normalized unit eigenvector.

    Power iteration from (1, ..., 1)/sqrt(n) on R - s I with
    s = (lambda_2 + lambda_n)/2, the shift that minimizes the convergence
    ratio max|lambda_i - s| / (lambda_1 - s) over i >= 2. When the start vector has no
    component along the dominant eigenspace, or when the largest eigenvalue
    is repeated, the iteration is rerun from e1, e2, ... so that the
    returned vector is the normalized projection of the first usable basis
    vector onto the dominant eigenspace (e.g. e1 for the identity).

    A leading eigenvalue separated from the next by a relative gap too small
    to resolve in MAX_ITERS steps raises ConvergenceError.
    """
    R = as_covariance(R)
    n = R.shape[0]
    scale = float(np.linalg.norm(R))
    spectrum = np.linalg.eigvalsh(R)
    lam_max = spectrum[-1]
    repeated = n > 1 and spectrum[-2] >= lam_max - LAMBDA_ATOL * scale

    shift = 0.5 * (spectrum[-2] + spectrum[0]) if n > 1 else 0.0

    starts = [] if repeated else [np.ones(n)]
    starts += list(np.eye(n))
    failure = ConvergenceError(MAX_ITERS, float("nan"))
    for x0 in starts:
        try:
            lam, v, _ = _power_iterate(R, x0, scale, shift)
        except ConvergenceError as exc:
            failure = exc
            continue
        if lam >= lam_max - LAMBDA_ATOL * scale:
            return EigenPair(lam, sign_normalize(v / np.linalg.norm(v)))
    raise failure
