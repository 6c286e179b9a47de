# -*- coding: utf-8 -*-
"""
Calibration of the index constant c to a censoring target, and the
sidecar cache of calibrated constants.

Example:
    design = selcorr.dgp.preset("benchmark", n=1000)
    design = selcorr.dgp.calibrated(design, cache_path="calibration_cache.json")
"""
import logging
import os

import numpy as np
import scipy.optimize
import simplejson as json

from selcorr.base import constants
from selcorr.base.context import TimeIt
from selcorr.base.exceptions import CalibrationError
from selcorr.dgp.sampling import (generate_covariates, draw_selection_errors,
                                  index_without_constant)

__copyright__ = "Copyright 2026, selcorr developers"

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.NullHandler())

DEFAULT_CACHE_NAME = "calibration_cache.json"

# bisection stops once the bracket is this narrow
_XTOL = 1e-12


def censoring_rate(thresholds, c):
    """
    Pr(h(X) < eps) for h = h0 + c, where thresholds holds eps - h0(X)
    over the calibration sample.
    """
    return float(np.count_nonzero(thresholds > c)) / len(thresholds)


def calibrate_constant(design, rng=None):
    """
    Bisect on c until the censoring rate of a calibration sample of
    design.calibration_draws (X, eps) pairs is within 0.002 of
    design.censor_target.

    Parameters:
      design (SimulationDesign)
      rng (numpy.random.Generator) - defaults to one seeded by design.seed

    Returns the calibrated constant.  Raises CalibrationError when the
    bisection fails or ends outside the tolerance.
    """
    target = design.censor_target
    if not 0.02 < target < 0.98:
        raise ValueError("censor_target must lie in (0.02, 0.98), got "
                         "{}".format(target))
    if rng is None:
        rng = np.random.default_rng(design.seed)
    draws = design.calibration_draws
    with TimeIt() as timer:
        x = generate_covariates(draws, rng)
        eps = draw_selection_errors(design.error_law, draws, rng)
        thresholds = eps - index_without_constant(design.h_form, x)
        finite = thresholds[np.abs(thresholds) < -constants.LOG_OF_ZERO / 2]
        if len(finite) == 0:
            raise CalibrationError("every calibration draw has a zero log "
                                   "argument")
        low = float(finite.min()) - 1.0
        high = float(finite.max()) + 1.0

        def excess(c):
            return censoring_rate(thresholds, c) - target

        try:
            c = scipy.optimize.bisect(excess, low, high, xtol=_XTOL,
                                      maxiter=constants.CALIBRATION_MAX_ITER)
        except (ValueError, RuntimeError) as ex:
            raise CalibrationError("bisection on c failed for {}: {}".format(
                design, ex))
    rate = censoring_rate(thresholds, c)
    if abs(rate - target) >= constants.CALIBRATION_TOLERANCE:
        raise CalibrationError(
            "censoring rate {:.4f} at c={:.6f} misses target {} by more "
            "than {}".format(rate, c, target,
                             constants.CALIBRATION_TOLERANCE))
    logger.info("Calibrated c={:.6f} (censoring {:.4f}) for {} in "
                "{:.1f}s".format(c, rate, design, timer.interval))
    return c


def load_calibration_cache(path):
    """ {calibration key: entry}; a missing file is an empty cache """
    if not path or not os.path.exists(path):
        return {}
    with open(path, 'r') as fp:
        try:
            return json.load(fp)
        except ValueError as ex:
            raise CalibrationError("unreadable calibration cache {}: "
                                   "{}".format(path, ex))


def save_calibration_cache(path, cache):
    with open(path, 'w') as fp:
        json.dump(cache, fp, indent=4, sort_keys=True)


def calibrated(design, cache_path=None, rng=None):
    """
    design with c filled in.  A design that already carries c is
    returned unchanged; otherwise the cache at cache_path is consulted
    and updated.
    """
    if design.c is not None:
        return design
    key = design.calibration_key()
    cache = load_calibration_cache(cache_path)
    if key in cache:
        logger.info("Calibration cache hit for {}".format(design))
        return design.replace(c=cache[key]["c"])
    c = calibrate_constant(design, rng=rng)
    if cache_path:
        cache[key] = {"c": c,
                      "error_law": design.error_law,
                      "rho": design.rho,
                      "censor_target": design.censor_target,
                      "h_form": design.h_form}
        save_calibration_cache(cache_path, cache)
    return design.replace(c=c)
