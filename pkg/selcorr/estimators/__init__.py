# -*- coding: utf-8 -*-
"""
Estimators for linear outcome coefficients under sample selection.

Example: locally robust and Robinson fits on one dataset
    config = selcorr.estimators.EstimatorConfig(folds=5, seed=1)
    lr = selcorr.estimators.from_tag("lr")(dataset, config)
    rob = selcorr.estimators.from_tag("robinson")(dataset, config)
    print(lr.beta, lr.standard_errors)
"""
from selcorr.core.results import EstimatorTag
from .config import EstimatorConfig
from .nuisances import (NuisanceSet, FullSampleNuisances, fit_nuisances,
                        fit_full_sample_nuisances, resolve_forest_params)
from .pipelines import (estimate_locally_robust, estimate_robinson,
                        estimate_robinson_orthogonal,
                        estimate_robinson_crossfit, cross_fitted_nuisances)
from .variance import estimate_variance, solve_system

__copyright__ = "Copyright 2026, selcorr developers"

_ESTIMATORS = {
    EstimatorTag.LOCALLY_ROBUST: estimate_locally_robust,
    EstimatorTag.ROBINSON: estimate_robinson,
    EstimatorTag.ROBINSON_ORTHOGONAL: estimate_robinson_orthogonal,
    EstimatorTag.ROBINSON_CROSSFIT: estimate_robinson_crossfit,
}

# estimators sharing cross-fitted nuisances; the rest share full-sample ones
CROSS_FITTED = (EstimatorTag.LOCALLY_ROBUST, EstimatorTag.ROBINSON_CROSSFIT)


def from_tag(tag):
    """
    Estimator function for a tag or command line alias
    ("lr", "robinson", "robinson-orth", "robinson-cf").
    """
    return _ESTIMATORS[EstimatorTag.from_str(tag)]


__all__ = ['EstimatorConfig',
           'EstimatorTag',
           'NuisanceSet',
           'FullSampleNuisances',
           'fit_nuisances',
           'fit_full_sample_nuisances',
           'resolve_forest_params',
           'cross_fitted_nuisances',
           'estimate_locally_robust',
           'estimate_robinson',
           'estimate_robinson_orthogonal',
           'estimate_robinson_crossfit',
           'estimate_variance',
           'solve_system',
           'from_tag',
           'CROSS_FITTED']
