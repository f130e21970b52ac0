"""Multivariate Gaussians with cached Cholesky factors.

Provides sampling, log densities, and the exact chi-square overlap
``rho = chi2(target || proposal) + 1`` between two Gaussians, all solved
through Cholesky factors (explicit inverses are never formed).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from .logscale import LogScalar

_LOG_2PI = math.log(2.0 * math.pi)

# Cholesky pivots must clear this fraction of the largest diagonal entry,
# so matrices on the rho = inf boundary are classified consistently.
_PIVOT_FLOOR = 1e-14


class NotPositiveDefinite(ValueError):
    """A required covariance (or derived matrix) is not positive definite."""


def cholesky_pd(mat: np.ndarray) -> np.ndarray | None:
    """Lower Cholesky factor of ``mat``, or None if not numerically PD."""
    try:
        chol = np.linalg.cholesky(mat)
    except np.linalg.LinAlgError:
        return None
    diag = np.diag(chol)
    if np.min(diag) ** 2 <= _PIVOT_FLOOR * float(np.max(np.diag(mat))):
        return None
    return chol


def symmetrize(mat: np.ndarray) -> np.ndarray:
    return 0.5 * (mat + mat.T)


@dataclass(frozen=True)
class Gaussian:
    """Immutable multivariate normal; safe to share across threads.

    ``cov`` is symmetrized at construction and ``chol`` is its lower
    Cholesky factor.  Do not mutate the arrays.
    """

    mean: np.ndarray
    cov: np.ndarray
    chol: np.ndarray

    @property
    def dim(self) -> int:
        return self.mean.shape[0]

    @property
    def log_det_cov(self) -> float:
        return 2.0 * float(np.sum(np.log(np.diag(self.chol))))


def make_gaussian(mean, cov) -> Gaussian:
    """Validate, symmetrize and factor; raises NotPositiveDefinite on failure."""
    mean = np.asarray(mean, dtype=float).reshape(-1)
    cov = np.asarray(cov, dtype=float)
    if cov.ndim != 2 or cov.shape[0] != cov.shape[1]:
        raise ValueError(f"covariance must be square, got shape {cov.shape}")
    if cov.shape[0] != mean.shape[0]:
        raise ValueError(
            f"mean has dimension {mean.shape[0]} but covariance is {cov.shape[0]}x{cov.shape[1]}"
        )
    cov = symmetrize(cov)
    chol = cholesky_pd(cov)
    if chol is None:
        raise NotPositiveDefinite("covariance is not positive definite")
    return Gaussian(mean=mean, cov=cov, chol=chol)


def sample(g: Gaussian, rng: np.random.Generator, n: int) -> np.ndarray:
    """n i.i.d. draws, one per row: ``mean + chol @ z`` with z standard normal."""
    n = int(n)
    if n < 1:
        raise ValueError("need at least one draw")
    z = rng.standard_normal((n, g.dim))
    return g.mean + z @ g.chol.T


def log_pdf(g: Gaussian, x) -> float | np.ndarray:
    """Log density at x: a d-vector gives a float, an (n, d) block a length-n array."""
    x = np.asarray(x, dtype=float)
    single = x.ndim == 1
    pts = np.atleast_2d(x)
    diff = pts - g.mean
    sol = solve_triangular(g.chol, diff.T, lower=True, check_finite=False)
    quad = np.einsum("ij,ij->j", sol, sol)
    out = -0.5 * (quad + g.dim * _LOG_2PI + g.log_det_cov)
    return float(out[0]) if single else out


def chi2_rho_gaussians(target: Gaussian, proposal: Gaussian) -> LogScalar:
    """log rho for a Gaussian pair, rho = chi-square divergence + 1.

    With target N(m1, C) and proposal N(m2, S),

        rho = |S| / sqrt(|2S - C| |C|) * exp(dm' (2S - C)^{-1} dm),  dm = m1 - m2,

    whenever 2S - C is positive definite.  Otherwise rho is genuinely
    infinite and the infinite marker is returned; that is an in-band value,
    not an error.
    """
    if target.dim != proposal.dim:
        raise ValueError("target and proposal must share a dimension")
    gap = symmetrize(2.0 * proposal.cov - target.cov)
    chol_gap = cholesky_pd(gap)
    if chol_gap is None:
        return LogScalar.infinite()
    dm = target.mean - proposal.mean
    sol = solve_triangular(chol_gap, dm, lower=True, check_finite=False)
    quad = float(sol @ sol)
    log_det_gap = 2.0 * float(np.sum(np.log(np.diag(chol_gap))))
    log_rho = proposal.log_det_cov - 0.5 * (log_det_gap + target.log_det_cov) + quad
    return LogScalar(log_rho)
