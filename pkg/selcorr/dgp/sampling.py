# -*- coding: utf-8 -*-
"""
Sample generation: covariates from a Gaussian copula, selection and
outcome errors, the selection index, and assembled datasets.
"""
import logging

import numpy as np
from scipy.stats import norm

from selcorr.base import constants
from selcorr.core.dataset import Dataset
from selcorr.dgp.design import ErrorLaw, IndexForm

__copyright__ = "Copyright 2026, selcorr developers"

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.NullHandler())


def latent_correlation(dim=constants.DIM_X,
                       adjacent=constants.ADJACENT_CORRELATION):
    """ Unit diagonal, `adjacent` on the first off-diagonals, 0 elsewhere """
    return (np.eye(dim) + adjacent * np.eye(dim, k=1) +
            adjacent * np.eye(dim, k=-1))


def generate_covariates(n, rng):
    """
    n x 10 covariates.  Latent Z ~ N(0, R) with R tridiagonal (adjacent
    correlation 0.5); X1 = Z1, X2 = Phi(Z2), Xk = 1{Zk > 0} for k >= 3.
    """
    if n < 1:
        raise ValueError("n must be positive")
    latent = rng.multivariate_normal(np.zeros(constants.DIM_X),
                                     latent_correlation(), size=int(n),
                                     method="cholesky")
    x = np.empty_like(latent)
    x[:, 0] = latent[:, 0]
    x[:, 1] = norm.cdf(latent[:, 1])
    x[:, 2:] = (latent[:, 2:] > 0).astype(float)
    return x


def draw_selection_errors(law, n, rng):
    """
    Normal: N(0,1).  Logistic: scale sqrt(3)/pi (unit variance).
    T3: t(3)/sqrt(3) (unit variance).  T2: raw t(2).
    """
    if law == ErrorLaw.NORMAL:
        return rng.standard_normal(n)
    if law == ErrorLaw.LOGISTIC:
        return rng.logistic(0.0, np.sqrt(3.0) / np.pi, n)
    if law == ErrorLaw.T3:
        return rng.standard_t(3, n) / np.sqrt(3.0)
    if law == ErrorLaw.T2:
        return rng.standard_t(2, n)
    raise ValueError("Unknown error law: " + repr(law))


def draw_errors(law, rho, n, rng):
    """ (eps, u) with u = rho eps + sqrt(1 - rho^2) e, e ~ N(0,1) """
    eps = draw_selection_errors(law, n, rng)
    noise = rng.standard_normal(n)
    u = rho * eps + np.sqrt(1.0 - rho ** 2) * noise
    return eps, u


def _log_square(values):
    with np.errstate(divide="ignore"):
        return np.log(values ** 2)


def index_without_constant(h_form, x):
    """
    h(x) - c for each row of x.  Log forms map rows with x1 = 0 or
    x2 = 0 to -1e10 (never selected).
    """
    x = np.atleast_2d(np.asarray(x, dtype=float))
    x1, x2 = x[:, 0], x[:, 1]
    common = x[:, 2] * x[:, 3] - x[:, 4] * x[:, 5]
    if h_form == IndexForm.BENCHMARK:
        return x1 + x1 ** 2 - x2 - x2 ** 2 + common
    if h_form == IndexForm.EXP:
        return x1 + np.exp(x1) - x2 - np.exp(x2) + common
    if h_form == IndexForm.CONSTANT:
        return np.zeros(x.shape[0])
    if h_form in (IndexForm.LOG, IndexForm.LOG_EXP):
        value = x1 + _log_square(x1) - x2 - _log_square(x2) + common
        if h_form == IndexForm.LOG_EXP:
            value = value + np.exp(x1) - np.exp(x2)
        zero = (x1 == 0.0) | (x2 == 0.0)
        if zero.any():
            logger.debug("{} rows with a zero log argument".format(
                int(zero.sum())))
        return np.where(zero, constants.LOG_OF_ZERO, value)
    raise ValueError("Unknown index form: " + repr(h_form))


def selection_index(h_form, x, c):
    """
    h(x) including the constant c.  x may be one 10-vector (returns a
    float) or an n x 10 matrix.
    """
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != constants.DIM_X:
        raise ValueError("selection index needs {} covariates".format(
            constants.DIM_X))
    value = index_without_constant(h_form, x) + c
    zero = value <= constants.LOG_OF_ZERO / 2
    value = np.where(zero, constants.LOG_OF_ZERO, value)
    if x.ndim == 1:
        return float(value[0])
    return value


class RawSample(object):
    """
    Every simulated quantity, including the unobserved errors.
    d = 1{h(x) >= eps}, y = (x'beta + u) d.
    """

    def __init__(self, x, eps, u, d, y):
        self.x = x
        self.eps = eps
        self.u = u
        self.d = d
        self.y = y

    def to_dataset(self):
        return Dataset(self.y, self.d, self.x)


def _require_calibrated(design):
    if design.c is None:
        raise ValueError("design has no calibrated constant c; call "
                         "calibrate_constant first")


def draw_raw_sample(design, rng, n=None):
    _require_calibrated(design)
    n = design.n if n is None else int(n)
    x = generate_covariates(n, rng)
    eps, u = draw_errors(design.error_law, design.rho, n, rng)
    d = (selection_index(design.h_form, x, design.c) >= eps).astype(float)
    y = (x @ design.beta + u) * d
    return RawSample(x, eps, u, d, y)


def generate_sample(design, rng):
    """ Dataset of design.n rows; y is zero where d is zero """
    return draw_raw_sample(design, rng).to_dataset()


def generate_repeated_sample(design, rng):
    """
    n/2 rows drawn, followed by exact copies of them in the same order.
    """
    if design.n % 2:
        raise ValueError("repeated samples need an even n, got {}".format(
            design.n))
    half = draw_raw_sample(design, rng, n=design.n // 2)
    return Dataset(np.tile(half.y, 2), np.tile(half.d, 2),
                   np.tile(half.x, (2, 1)))
