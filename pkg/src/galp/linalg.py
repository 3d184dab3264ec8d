"""Normal-equations kernel: assemble A diag(dinv) A^t and solve by Cholesky.

The factorization escalates a relative diagonal regularization
rho in {0, 1e-12, 1e-10, 1e-8, 1e-6} until every pivot stays above 1e-30;
the rho actually applied is recorded on the factor so the solver trace can
surface it.  Dense storage throughout: the solver targets desk-scale
problems and the API isolates this kernel so a sparse backend could be
swapped in behind the same two calls.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

REGULARIZATIONS = (0.0, 1e-12, 1e-10, 1e-8, 1e-6)
_MIN_PIVOT = 1e-30


class NonFiniteInput(Exception):
    pass


class FactorizationFailed(Exception):
    pass


@dataclass
class CholeskyFactor:
    """Lower-triangular factor with M + rho*diag(M) ~ L L^t."""

    L: np.ndarray
    rho: float


def assemble_normal(A, dinv: np.ndarray) -> np.ndarray:
    """Dense symmetric M with M[i, k] = sum_j A[i, j] * dinv[j] * A[k, j].

    The lower triangle is computed and mirrored, so M is exactly symmetric.
    """
    dinv = np.asarray(dinv, dtype=float)
    if not np.all(np.isfinite(dinv)) or np.any(dinv < 0):
        raise NonFiniteInput("dinv must be finite and nonnegative")
    M = np.asarray((A.multiply(dinv) @ A.T).todense())
    lower = np.tril(M)
    return lower + np.tril(M, -1).T


def factor(M: np.ndarray) -> CholeskyFactor:
    """Cholesky-factor M, escalating the diagonal regularization as needed."""
    if not np.all(np.isfinite(M)):
        raise NonFiniteInput("normal matrix has non-finite entries")
    diag = np.diag(M).copy()
    for rho in REGULARIZATIONS:
        try:
            L = np.linalg.cholesky(M + rho * np.diag(diag))
        except np.linalg.LinAlgError:
            continue
        if np.min(np.diag(L)) ** 2 > _MIN_PIVOT:
            return CholeskyFactor(L=L, rho=rho)
    raise FactorizationFailed(
        "normal matrix is numerically rank deficient at every regularization level"
    )


def solve(F: CholeskyFactor, rhs: np.ndarray) -> np.ndarray:
    """Forward/back substitution with the stored factor."""
    return scipy.linalg.cho_solve((F.L, True), rhs, check_finite=False)
