# -*- coding: utf-8 -*-
"""
Linear solves with a conditioning check, and sandwich covariances
M^-1 S M^-1 / n.
"""
import logging

import numpy as np
import scipy.linalg

from selcorr import moments
from selcorr.base import constants
from selcorr.base.exceptions import (DegenerateDesignError,
                                     with_linalg_translation)

__copyright__ = "Copyright 2026, selcorr developers"

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.NullHandler())

ORTHOGONAL = "orthogonal"
ROBINSON = "robinson"


def condition_number(matrix):
    matrix = np.asarray(matrix, dtype=float)
    if not np.all(np.isfinite(matrix)):
        return np.inf
    return float(np.linalg.cond(matrix))


def check_conditioning(matrix, what="system", fold=None):
    """
    Returns the condition number; raises DegenerateDesignError above
    1e12.
    """
    condition = condition_number(matrix)
    if not np.isfinite(condition) or condition > constants.CONDITION_LIMIT:
        where = "" if fold is None else " in fold {}".format(fold)
        raise DegenerateDesignError(
            "{}{} is degenerate: condition number {:.3g}".format(
                what, where, condition), condition=condition, fold=fold)
    return condition


@with_linalg_translation
def solve_system(jacobian, vector, what="normal equations", fold=None):
    """
    Solves J beta = b after the conditioning check.  Symmetric J uses
    the symmetric-indefinite factorization, others LU.

    Returns (beta, condition number).
    """
    jacobian = np.asarray(jacobian, dtype=float)
    condition = check_conditioning(jacobian, what, fold)
    symmetric = np.allclose(jacobian, jacobian.T, rtol=1e-12, atol=0.0)
    beta = scipy.linalg.solve(jacobian, vector,
                              assume_a="sym" if symmetric else "gen")
    return beta, condition


def sandwich_covariance(jacobian, contributions):
    """
    M^-1 S M^-1 / n with S the mean outer product of the contribution
    rows, symmetrized as (C + C')/2.
    """
    contributions = np.atleast_2d(np.asarray(contributions, dtype=float))
    n = contributions.shape[0]
    bread = _inverse(jacobian)
    meat = contributions.T @ contributions / n
    covariance = bread @ meat @ bread.T / n
    return (covariance + covariance.T) / 2.0


@with_linalg_translation
def _inverse(matrix):
    check_conditioning(matrix, "variance jacobian")
    return scipy.linalg.inv(matrix)


def variance_jacobian(dataset, nv, moment=ORTHOGONAL):
    """
    M = mean D P Xr Xr' for the orthogonal moment,
    mean P^2 Xr Xr' for the plain Robinson moment.
    """
    x_res = np.asarray(dataset.x, dtype=float) - nv.mu_x
    if moment == ORTHOGONAL:
        weights = np.asarray(dataset.d, dtype=float) * nv.p
    elif moment == ROBINSON:
        weights = nv.p ** 2
    else:
        raise ValueError("Unknown moment: " + repr(moment))
    return (x_res * weights[:, np.newaxis]).T @ x_res / x_res.shape[0]


def estimate_variance(dataset, nv, beta_hat, moment=ORTHOGONAL):
    """
    Sandwich covariance of beta_hat.

    Parameters:
      dataset (Dataset)
      nv (NuisanceValues) - per-observation nuisances; for the orthogonal
          moment beta_init holds each observation's initial coefficients
      beta_hat (ndarray) - final coefficients entering the residual
      moment (str) - "orthogonal" (psi) or "robinson" (r_R)

    Returns (covariance, condition number of M).
    """
    beta_hat = np.asarray(beta_hat, dtype=float)
    if not np.all(np.isfinite(beta_hat)):
        raise ValueError("beta_hat must be finite")
    jacobian = variance_jacobian(dataset, nv, moment)
    if moment == ORTHOGONAL:
        contributions = moments.psi_contribution(dataset, nv, beta_hat)
    else:
        contributions = moments.robinson_contribution(dataset, nv, beta_hat)
    covariance = sandwich_covariance(jacobian, contributions)
    return covariance, condition_number(jacobian)


def min_eigenvalue(covariance):
    return float(np.linalg.eigvalsh(covariance).min())
