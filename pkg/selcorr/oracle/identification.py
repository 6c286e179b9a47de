# -*- coding: utf-8 -*-
"""
Constructive identification of beta and g from the conditional means of
an AnalyticModel.

Continuous coefficients come from derivatives of m0 and pi0 at two
points; the remaining continuous coefficients follow from one pivot;
discrete coefficients from one evaluation of m each.  With a single
continuous covariate and a non-injective pi0, the coefficient is a
difference quotient of m0 over two points sharing a propensity.
"""
import logging

import numpy as np

from selcorr.base import constants
from selcorr.base.exceptions import AssumptionViolationError

__copyright__ = "Copyright 2026, selcorr developers"

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.NullHandler())


def upsilon(model, xc, xc_tilde, k, j):
    """
    2 x 2 matrix with rows (d_j pi0, -d_k pi0) at xc and at xc_tilde.
    """
    rows = []
    for point in (xc, xc_tilde):
        grad = model.grad_pi0(point)
        rows.append([grad[j], -grad[k]])
    return np.array(rows)


def _cross_derivative(model, point, k, j):
    """ d_k m0 d_j pi0 - d_j m0 d_k pi0 """
    grad_m = model.grad_m0(point)
    grad_pi = model.grad_pi0(point)
    return grad_m[k] * grad_pi[j] - grad_m[j] * grad_pi[k]


def oracle_beta_pair(model, xc, xc_tilde, k, j):
    """
    (beta_k, beta_j) for continuous positions k != j from the two-point
    system  Upsilon (beta_k, beta_j)' = (cross derivative at each point)'.

    Raises AssumptionViolationError when |det Upsilon| < 1e-8, which is
    the case for any index of the form f(x'eta).
    """
    if k == j:
        raise ValueError("k and j must differ")
    matrix = upsilon(model, xc, xc_tilde, k, j)
    det = float(np.linalg.det(matrix))
    if abs(det) < constants.DET_TOLERANCE:
        raise AssumptionViolationError(
            "det Upsilon = {:.3g} at {} and {}: the propensity derivative "
            "ratio does not vary".format(det, list(xc), list(xc_tilde)))
    rhs = np.array([_cross_derivative(model, xc, k, j),
                    _cross_derivative(model, xc_tilde, k, j)])
    beta_k, beta_j = np.linalg.solve(matrix, rhs)
    logger.debug("Pair ({}, {}): det={:.4g} beta=({:.6f}, {:.6f})".format(
        k, j, det, beta_k, beta_j))
    return float(beta_k), float(beta_j)


def oracle_beta_remaining(model, xc, k_pivot, l, beta_k):
    """
    beta_l = [d_l m0 d_k pi0 - d_k m0 d_l pi0 + d_l pi0 beta_k] / d_k pi0
    for a pivot k whose coefficient beta_k is already known.
    """
    grad_m = model.grad_m0(xc)
    grad_pi = model.grad_pi0(xc)
    pivot = grad_pi[k_pivot]
    if abs(pivot) < constants.DET_TOLERANCE:
        raise AssumptionViolationError(
            "d_{} pi0 = {:.3g} at {}: invalid pivot point".format(
                k_pivot, pivot, list(xc)))
    numerator = (grad_m[l] * pivot - grad_m[k_pivot] * grad_pi[l] +
                 grad_pi[l] * beta_k)
    return float(numerator / pivot)


def oracle_beta_discrete(model, xc_k, x_dk, k, beta_c=None):
    """
    beta^D_k = [m(xc_k, x^Dk) - xc_k'beta^C - g(pi(xc_k, x^Dk))] / x_dk
    where x^Dk has x_dk at discrete position k and zeros elsewhere.

    beta_c defaults to the model's continuous coefficients.  Raises
    AssumptionViolationError when pi(xc_k, x^Dk) is outside the range of
    pi0 over the continuous support, where g is not pinned down by the
    continuous block.
    """
    if x_dk == 0:
        raise ValueError("x_dk must be nonzero")
    beta_c = model.beta_continuous if beta_c is None \
        else np.asarray(beta_c, dtype=float)
    xd = np.zeros(len(model.discrete))
    xd[k] = x_dk
    x = model.embed(xc_k, xd)
    p = model.pi(x)
    if not 0.0 < p < 1.0:
        raise AssumptionViolationError("pi = {} outside (0, 1)".format(p))
    lo, hi = model.pi0_range()
    p0 = model.pi0(xc_k)
    lo, hi = min(lo, p0), max(hi, p0)
    if not lo - constants.DET_TOLERANCE <= p <= hi + constants.DET_TOLERANCE:
        raise AssumptionViolationError(
            "pi = {:.6g} at discrete position {} is outside the range "
            "[{:.6g}, {:.6g}] of pi0".format(p, k, lo, hi))
    numerator = model.m(x) - np.dot(xc_k, beta_c) - float(model.g(p))
    return float(numerator / x_dk)


def oracle_recover_g(model, grid):
    """ g sampled on a grid in (0, 1] """
    return model.g(np.asarray(grid, dtype=float))


def oracle_beta_single_continuous(model, xc, xc_tilde):
    """
    The continuous coefficient of a one-continuous-covariate model from
    two points with equal pi0: (m0(xc) - m0(xc_tilde)) / (xc - xc_tilde).
    """
    xc = np.atleast_1d(np.asarray(xc, dtype=float))
    xc_tilde = np.atleast_1d(np.asarray(xc_tilde, dtype=float))
    if len(xc) != 1 or len(model.continuous) != 1:
        raise ValueError("needs a model with one continuous covariate")
    if xc[0] == xc_tilde[0]:
        raise ValueError("the two points must differ")
    gap = abs(model.pi0(xc) - model.pi0(xc_tilde))
    if gap > constants.DET_TOLERANCE:
        raise AssumptionViolationError(
            "pi0 differs by {:.3g} between {} and {}".format(
                gap, xc[0], xc_tilde[0]))
    return float((model.m0(xc) - model.m0(xc_tilde)) /
                 (xc[0] - xc_tilde[0]))


def oracle_full_beta(model, xc, xc_tilde):
    """
    Every coefficient: the first two continuous positions from the pair
    system, other continuous positions through the first as pivot, and
    each discrete position at xc with a unit value.
    """
    n_cont = len(model.continuous)
    beta_c = np.empty(n_cont)
    if n_cont < 2:
        raise ValueError("the pair system needs two continuous covariates")
    beta_c[0], beta_c[1] = oracle_beta_pair(model, xc, xc_tilde, 0, 1)
    for l in range(2, n_cont):
        beta_c[l] = oracle_beta_remaining(model, xc, 0, l, beta_c[0])
    beta_d = [oracle_beta_discrete(model, xc, 1.0, k, beta_c)
              for k in range(len(model.discrete))]
    beta = np.empty(model.dim_x)
    beta[list(model.continuous)] = beta_c
    beta[list(model.discrete)] = beta_d
    return beta
