# -*- coding: utf-8 -*-
"""
End-to-end estimators.

  estimate_locally_robust       cross-fitted nuisances, orthogonal moment
  estimate_robinson             full-sample nuisances, plain partialling out
  estimate_robinson_orthogonal  full-sample nuisances, orthogonal moment
  estimate_robinson_crossfit    cross-fitted nuisances, plain partialling out

Each accepts precomputed nuisances so that several estimators can share
one sample's fits.
"""
import logging

import numpy as np

from selcorr import moments
from selcorr.core.folds import partition_folds
from selcorr.core.results import EstimatorTag, FitResult
from selcorr.estimators import variance
from selcorr.estimators.nuisances import (fit_nuisances,
                                          fit_full_sample_nuisances)

__copyright__ = "Copyright 2026, selcorr developers"

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.NullHandler())

MIN_ROWS_PER_COVARIATE = 10


def _check_dataset(dataset):
    if dataset.n < MIN_ROWS_PER_COVARIATE * dataset.dim_x:
        raise ValueError("need n >= {}*K = {} observations, got {}".format(
            MIN_ROWS_PER_COVARIATE, MIN_ROWS_PER_COVARIATE * dataset.dim_x,
            dataset.n))


def _rng(config, rng):
    return np.random.default_rng(config.seed) if rng is None else rng


def cross_fitted_nuisances(dataset, config, rng, hyperparams=None):
    """ Partition with rng, then fit_nuisances on it """
    partition = partition_folds(dataset.n, config.folds, rng)
    return fit_nuisances(dataset, partition, config, rng,
                         hyperparams=hyperparams)


def _result(dataset, tag, beta, covariance, condition, nuisance_diagnostics,
            formulation=None):
    diagnostics = dict(nuisance_diagnostics)
    diagnostics["condition_number"] = condition
    diagnostics["min_eigenvalue"] = variance.min_eigenvalue(covariance)
    diagnostics["n"] = dataset.n
    diagnostics["selection_rate"] = dataset.selection_rate()
    if formulation is not None:
        diagnostics["formulation"] = formulation
    result = FitResult(beta, covariance, tag, diagnostics,
                       column_names=dataset.column_names)
    logger.debug("{} on n={}: beta={} se={}".format(
        tag, dataset.n, np.round(result.beta, 4),
        np.round(result.standard_errors, 4)))
    return result


def _orthogonal_fit(dataset, nv, tag, formulation, nuisance_diagnostics):
    jacobian, vector = moments.assemble_normal_equations(dataset, nv,
                                                         formulation)
    beta, condition = variance.solve_system(jacobian, vector)
    covariance, _ = variance.estimate_variance(dataset, nv, beta,
                                               variance.ORTHOGONAL)
    return _result(dataset, tag, beta, covariance, condition,
                   nuisance_diagnostics, formulation)


def _robinson_beta(dataset, nv):
    jacobian, vector = moments.assemble_robinson_equations(dataset, nv)
    return variance.solve_system(jacobian, vector)


def _robinson_fit(dataset, nv, tag, nuisance_diagnostics):
    beta, condition = _robinson_beta(dataset, nv)
    covariance, _ = variance.estimate_variance(dataset, nv, beta,
                                               variance.ROBINSON)
    return _result(dataset, tag, beta, covariance, condition,
                   nuisance_diagnostics)


def estimate_locally_robust(dataset, config, rng=None, nuisances=None):
    """
    Locally robust estimator: cross-fitted nuisances, orthogonal normal
    equations (F3 unless config.formulation says otherwise), sandwich
    covariance from psi with each fold's beta_l inside the correction.

    Parameters:
      dataset (Dataset) - n >= 10 K
      config (EstimatorConfig)
      rng (numpy.random.Generator) - defaults to one seeded by config.seed
      nuisances (NuisanceSet) - reuse existing cross-fitted nuisances
    """
    _check_dataset(dataset)
    if nuisances is None:
        nuisances = cross_fitted_nuisances(dataset, config, _rng(config, rng))
    return _orthogonal_fit(dataset, nuisances.values,
                           EstimatorTag.LOCALLY_ROBUST, config.formulation,
                           nuisances.diagnostics)


def estimate_robinson(dataset, config, rng=None, nuisances=None):
    """
    Robinson partialling-out with full-sample nuisances:
    beta = [sum P^2 Xr Xr']^-1 sum P Xr Yr, no correction term.
    """
    _check_dataset(dataset)
    if nuisances is None:
        nuisances = fit_full_sample_nuisances(dataset, config,
                                              _rng(config, rng))
    return _robinson_fit(dataset, nuisances.values, EstimatorTag.ROBINSON,
                         nuisances.diagnostics)


def estimate_robinson_orthogonal(dataset, config, rng=None, nuisances=None):
    """
    Orthogonal normal equations on full-sample nuisances; the correction
    term uses the full-sample Robinson estimate as its initial beta.
    """
    _check_dataset(dataset)
    if nuisances is None:
        nuisances = fit_full_sample_nuisances(dataset, config,
                                              _rng(config, rng))
    beta_init, _ = _robinson_beta(dataset, nuisances.values)
    nv = nuisances.values.with_beta_init(beta_init)
    diagnostics = dict(nuisances.diagnostics)
    diagnostics["beta_init"] = beta_init.tolist()
    return _orthogonal_fit(dataset, nv, EstimatorTag.ROBINSON_ORTHOGONAL,
                           config.formulation, diagnostics)


def estimate_robinson_crossfit(dataset, config, rng=None, nuisances=None):
    """
    Plain partialling-out on cross-fitted nuisances.
    """
    _check_dataset(dataset)
    if nuisances is None:
        nuisances = cross_fitted_nuisances(dataset, config, _rng(config, rng))
    return _robinson_fit(dataset, nuisances.values,
                         EstimatorTag.ROBINSON_CROSSFIT,
                         nuisances.diagnostics)
