# -*- coding: utf-8 -*-
"""
Second-step Nadaraya-Watson regression on the generated regressor P with a
Gaussian kernel, its analytic derivative in p, and the rule-of-thumb
bandwidth.

With A(p) = sum_j (1/h) k((P_j - p)/h) Z_j and B(p) = sum_j (1/h) k((P_j - p)/h)
the fit is A/B and the derivative is (A'B - AB')/B**2, using
k'(u) = -u k(u).
"""
import logging

import numpy as np
from scipy.stats import norm

from selcorr.base import constants

__copyright__ = "Copyright 2026, selcorr developers"

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.NullHandler())

# query rows evaluated per block; bounds the weight matrix size
_MAX_BLOCK_CELLS = 2 ** 22


def rule_of_thumb_bandwidth(inputs, m=None):
    """
    h = 1.06 * sd(inputs) * m**(-1/5), sd with one degree of freedom
    removed.  Constant inputs give the 1e-3 floor.

      >>> round(rule_of_thumb_bandwidth([0.0, 1.0, 2.0], m=1), 4)
      1.06
    """
    inputs = np.asarray(inputs, dtype=float).reshape(-1)
    m = len(inputs) if m is None else int(m)
    if m < 1:
        raise ValueError("m must be positive")
    sd = float(np.std(inputs, ddof=1)) if len(inputs) > 1 else 0.0
    if sd == 0.0:
        return constants.BANDWIDTH_FLOOR
    return constants.BANDWIDTH_CONSTANT * sd * m ** (-0.2)


class KernelFit(object):
    """
    Training inputs P_j, one or more target columns Z_j, and a bandwidth
    per target column.  Several targets sharing the same inputs (Y and
    the K covariates) are evaluated together.

    Attributes:
      inputs (ndarray, m)
      targets (ndarray, m x q)
      bandwidths (ndarray, q)
    """

    def __init__(self, inputs, targets, bandwidth=None):
        inputs = np.asarray(inputs, dtype=float).reshape(-1)
        targets = np.asarray(targets, dtype=float)
        self.single_target = targets.ndim == 1
        targets = targets.reshape(len(targets), -1)
        if len(inputs) < 1 or len(inputs) != targets.shape[0]:
            raise ValueError("inputs and targets must have equal, nonzero "
                             "length")
        if bandwidth is None:
            bandwidth = rule_of_thumb_bandwidth(inputs)
        bandwidths = np.broadcast_to(np.asarray(bandwidth, dtype=float),
                                     (targets.shape[1],)).copy()
        if np.any(bandwidths <= 0):
            raise ValueError("bandwidth must be positive")
        self.inputs = inputs
        self.targets = targets
        self.bandwidths = bandwidths
        self.inputs.setflags(write=False)
        self.targets.setflags(write=False)
        self.bandwidths.setflags(write=False)

    @property
    def bandwidth(self):
        return float(self.bandwidths[0]) if self.single_target \
            else self.bandwidths

    def _block_size(self):
        return max(1, _MAX_BLOCK_CELLS // max(1, len(self.inputs)))

    def evaluate(self, points, derivative=False):
        """
        Fitted values (and derivatives) at points.

        Returns (values, derivatives, n_fallback) with values and
        derivatives shaped (len(points), q); derivatives is None unless
        requested.  Where B(p) < 1e-300 the value falls back to the
        target of the nearest training input and the derivative to 0.
        """
        points = np.asarray(points, dtype=float).reshape(-1)
        q = self.targets.shape[1]
        values = np.empty((len(points), q))
        derivs = np.empty((len(points), q)) if derivative else None
        n_fallback = 0
        step = self._block_size()
        for column in range(q):
            h = self.bandwidths[column]
            z = self.targets[:, column]
            for start in range(0, len(points), step):
                block = points[start:start + step]
                u = (self.inputs[np.newaxis, :] - block[:, np.newaxis]) / h
                weights = norm.pdf(u) / h
                a = weights @ z
                b = weights.sum(axis=1)
                degenerate = b < constants.KERNEL_DENOMINATOR_FLOOR
                safe_b = np.where(degenerate, 1.0, b)
                values[start:start + step, column] = np.where(
                    degenerate, 0.0, a / safe_b)
                if derivative:
                    # d/dp of (1/h) k((P_j - p)/h) is u k(u) / h**2
                    dweights = weights * u / h
                    da = dweights @ z
                    db = dweights.sum(axis=1)
                    derivs[start:start + step, column] = np.where(
                        degenerate, 0.0,
                        (da * safe_b - a * db) / safe_b ** 2)
                if degenerate.any():
                    nearest = np.abs(self.inputs[np.newaxis, :] -
                                     block[degenerate, np.newaxis]).argmin(
                                         axis=1)
                    rows = start + np.flatnonzero(degenerate)
                    values[rows, column] = z[nearest]
                    if column == 0:
                        n_fallback += int(degenerate.sum())
        if n_fallback:
            logger.debug("Kernel denominator fallback at {} of {} "
                         "points".format(n_fallback, len(points)))
        return values, derivs, n_fallback

    def __repr__(self):
        return "KernelFit(m={}, targets={}, bandwidths={})".format(
            len(self.inputs), self.targets.shape[1],
            np.array2string(self.bandwidths, precision=4))


def fit_kernel(inputs, targets):
    """
    KernelFit with a rule-of-thumb bandwidth per target column, computed
    on the training inputs.
    """
    inputs = np.asarray(inputs, dtype=float).reshape(-1)
    bandwidth = rule_of_thumb_bandwidth(inputs, len(inputs))
    return KernelFit(inputs, targets, bandwidth)


def eval_kernel(fit, p):
    """ Nadaraya-Watson estimate at a scalar p (first target column) """
    return float(fit.evaluate([p])[0][0, 0])


def eval_kernel_derivative(fit, p):
    """ Analytic derivative of the estimate at a scalar p """
    return float(fit.evaluate([p], derivative=True)[1][0, 0])
