# -*- coding: utf-8 -*-
"""
First-step and second-step learners.

    hp = selcorr.learners.tune_forest_cv(x, d, grid, folds=5, rng=rng)
    model = selcorr.learners.fit_random_forest(x, d, hp, rng)
    p_hat = model.predict(x)
    mu = selcorr.learners.fit_kernel(p_hat, np.column_stack([y, x]))
    values, derivatives, _ = mu.evaluate(p_hat, derivative=True)
"""
from .forest import (ForestHyperparams, PropensityModel, default_forest_grid,
                     fit_random_forest, predict_propensity, tune_forest_cv)
from .kernel import (KernelFit, fit_kernel, eval_kernel,
                     eval_kernel_derivative, rule_of_thumb_bandwidth)

__copyright__ = "Copyright 2026, selcorr developers"

__all__ = ['ForestHyperparams',
           'PropensityModel',
           'default_forest_grid',
           'fit_random_forest',
           'predict_propensity',
           'tune_forest_cv',
           'KernelFit',
           'fit_kernel',
           'eval_kernel',
           'eval_kernel_derivative',
           'rule_of_thumb_bandwidth']
