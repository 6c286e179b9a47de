# -*- coding: utf-8 -*-
"""
First- and second-step nuisance fits.

Cross-fitted nuisances for folds I_1..I_L:
  pi_l      forest trained on the observations outside I_l
  pi_ll'    forest trained outside I_l and I_l' (one per unordered pair)
  mu_Zl     kernel regression of Z in {Y, X_1..X_K} on pi_ll'(X_j) for
            j in I_l', l' != l, evaluated at pi_l(X_i), i in I_l
  beta_l    partialling-out coefficients from the observations outside
            I_l, each block j in I_l' residualized by a kernel fit trained
            outside I_l and I_l' on pi_ll'-generated inputs

Full-sample nuisances fit one forest and one kernel regression on all
observations and evaluate them in sample.
"""
import itertools
import logging

import numpy as np

from selcorr import moments
from selcorr.base.algorithms import split_rng, draw_seed
from selcorr.base.threading import Parallel
from selcorr.learners.forest import fit_random_forest, tune_forest_cv
from selcorr.learners.kernel import fit_kernel
from selcorr.estimators.variance import solve_system

__copyright__ = "Copyright 2026, selcorr developers"

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.NullHandler())

# spawn-key prefixes for per-forest seeds
_FOLD_STREAM = 0
_PAIR_STREAM = 1
_FULL_STREAM = 2


def resolve_forest_params(dataset, config, rng):
    """
    config.forest_params when set, otherwise the CV-tuned grid member
    for this dataset.
    """
    if config.forest_params is not None:
        return config.forest_params
    grid = config.grid_for(dataset.dim_x)
    hp = tune_forest_cv(dataset.x, dataset.d, grid, config.cv_folds, rng)
    logger.debug("Tuned forest on n={}: {}".format(dataset.n, hp))
    return hp


def _targets(dataset):
    """ Z columns: Y first, then the covariates """
    return np.column_stack([dataset.y, dataset.x])


def _split_values(values, derivs):
    return values[:, 1:], values[:, 0], derivs[:, 1:], derivs[:, 0]


class NuisanceSet(object):
    """
    Cross-fitted nuisances for one dataset and partition.

    Attributes:
      partition (FoldPartition)
      hyperparams (ForestHyperparams) - forest settings used for every fit
      propensity (dict) - fold -> PropensityModel
      pair_propensity (dict) - (l, l') with l < l' -> PropensityModel
      kernels (dict) - fold -> KernelFit over targets (Y, X_1..X_K)
      beta_init (dict) - fold -> initial coefficients
      values (NuisanceValues) - every observation's nuisances from its
          own fold, beta_init set per observation
      diagnostics (dict)
    """

    def __init__(self, partition, hyperparams, propensity, pair_propensity,
                 kernels, beta_init, values, diagnostics):
        self.partition = partition
        self.hyperparams = hyperparams
        self.propensity = propensity
        self.pair_propensity = pair_propensity
        self.kernels = kernels
        self.beta_init = beta_init
        self.values = values
        self.diagnostics = diagnostics

    def pair(self, fold_a, fold_b):
        """ pi_ll', symmetric in its arguments """
        if fold_a == fold_b:
            raise ValueError("a pair needs two distinct folds")
        return self.pair_propensity[(min(fold_a, fold_b),
                                     max(fold_a, fold_b))]

    @property
    def forest_fits(self):
        return len(self.propensity) + len(self.pair_propensity)


class FullSampleNuisances(object):
    """
    Nuisances fit once on every observation (no cross-fitting).
    """

    def __init__(self, hyperparams, propensity, kernel, values, diagnostics):
        self.hyperparams = hyperparams
        self.propensity = propensity
        self.kernel = kernel
        self.values = values
        self.diagnostics = diagnostics


def _fit_forests(dataset, partition, hp, config, base_seed):
    """ L fold forests and L(L-1)/2 pair forests, keyed for determinism """
    n_folds = partition.n_folds
    jobs = [((fold,), partition.outside(fold),
             split_rng(base_seed, _FOLD_STREAM, fold))
            for fold in range(n_folds)]
    jobs += [(pair, partition.outside(*pair),
              split_rng(base_seed, _PAIR_STREAM, *pair))
             for pair in itertools.combinations(range(n_folds), 2)]
    fitted = {}

    def fit_one(key, rows, rng):
        fitted[key] = fit_random_forest(dataset.x[rows], dataset.d[rows], hp,
                                        rng, clip=config.clip)

    Parallel([fit_one] * len(jobs), args_list=jobs,
             max_workers=config.workers).run_threads()
    propensity = {key[0]: fitted[key] for key, _, _ in jobs if len(key) == 1}
    pairs = {key: fitted[key] for key, _, _ in jobs if len(key) == 2}
    return propensity, pairs


def fit_nuisances(dataset, partition, config, rng, hyperparams=None):
    """
    Cross-fitted NuisanceSet for dataset under partition.

    Parameters:
      dataset (Dataset)
      partition (FoldPartition) - needs at least three folds, so that
          every pair of folds leaves observations to train pi_ll' on
      config (EstimatorConfig)
      rng (numpy.random.Generator) - tuning and forest seeds
      hyperparams (ForestHyperparams) - skips tuning when given

    Raises DegenerateDesignError naming the fold when a beta_l system
    is singular.
    """
    n_folds = partition.n_folds
    if partition.n != dataset.n:
        raise ValueError("partition covers {} rows, dataset has {}".format(
            partition.n, dataset.n))
    if n_folds < 3:
        raise ValueError("pairwise cross-fitting needs at least 3 folds, "
                         "got {}".format(n_folds))
    hp = hyperparams or resolve_forest_params(dataset, config, rng)
    propensity, pairs = _fit_forests(dataset, partition, hp, config,
                                     draw_seed(rng))
    targets = _targets(dataset)

    # pi_ll' at every observation it is used for
    pair_p = {key: model.predict(dataset.x) for key, model in pairs.items()}

    def pair_inputs(fold_a, fold_b):
        return pair_p[(min(fold_a, fold_b), max(fold_a, fold_b))]

    dim_x = dataset.dim_x
    p = np.empty(dataset.n)
    mu = np.empty((dataset.n, dim_x + 1))
    dmu = np.empty((dataset.n, dim_x + 1))
    kernels = {}
    beta_init = {}
    clipped_low = clipped_high = fallbacks = 0
    bandwidths = []
    for fold in range(n_folds):
        rows = partition.folds[fold]
        p_fold, n_low, n_high = propensity[fold].predict_with_clip_counts(
            dataset.x[rows])
        clipped_low += n_low
        clipped_high += n_high
        others = [o for o in range(n_folds) if o != fold]
        train_inputs = np.concatenate([
            pair_inputs(fold, other)[partition.folds[other]]
            for other in others])
        train_targets = np.concatenate([
            targets[partition.folds[other]] for other in others])
        kernel = fit_kernel(train_inputs, train_targets)
        values, derivs, n_fallback = kernel.evaluate(p_fold, derivative=True)
        fallbacks += n_fallback
        bandwidths.append(float(kernel.bandwidths[0]))
        kernels[fold] = kernel
        p[rows] = p_fold
        mu[rows] = values
        dmu[rows] = derivs
        beta_init[fold] = _initial_beta(dataset, partition, targets,
                                        pair_inputs, fold)

    per_row_init = np.empty((dataset.n, dim_x))
    for fold in range(n_folds):
        per_row_init[partition.folds[fold]] = beta_init[fold]
    mu_x, mu_y, dmu_x, dmu_y = _split_values(mu, dmu)
    nv = moments.NuisanceValues(p, mu_x, mu_y, dmu_x, dmu_y, per_row_init)
    diagnostics = {
        "forest_fits": len(propensity) + len(pairs),
        "clipped_low": clipped_low,
        "clipped_high": clipped_high,
        "kernel_fallbacks": fallbacks,
        "bandwidth_mean": float(np.mean(bandwidths)),
        "fold_selection_rates": [float(dataset.d[f].mean())
                                 for f in partition.folds],
        "forest_params": hp.to_dict()}
    _warn_on_clipping(clipped_low + clipped_high, dataset.n)
    logger.debug("Cross-fitted nuisances: {}".format(diagnostics))
    return NuisanceSet(partition, hp, propensity, pairs, kernels, beta_init,
                       nv, diagnostics)


def _initial_beta(dataset, partition, targets, pair_inputs, fold):
    """
    beta_l: partialling-out over the observations outside I_l.  Block
    I_l' is residualized by a kernel fit on the rows outside I_l and
    I_l', with pi_ll'-generated inputs.
    """
    weighted_x = []
    y_res = []
    for other in range(partition.n_folds):
        if other == fold:
            continue
        train = partition.outside(fold, other)
        block = partition.folds[other]
        inputs = pair_inputs(fold, other)
        kernel = fit_kernel(inputs[train], targets[train])
        values, _, _ = kernel.evaluate(inputs[block])
        p_block = inputs[block]
        x_res = dataset.x[block] - values[:, 1:]
        weighted_x.append(p_block[:, np.newaxis] * x_res)
        y_res.append(dataset.y[block] - values[:, 0])
    weighted_x = np.concatenate(weighted_x)
    y_res = np.concatenate(y_res)
    n = weighted_x.shape[0]
    beta, _ = solve_system(weighted_x.T @ weighted_x / n,
                           weighted_x.T @ y_res / n,
                           what="initial partialling-out system", fold=fold)
    return beta


def fit_full_sample_nuisances(dataset, config, rng, hyperparams=None):
    """
    One forest and one kernel regression on all observations, evaluated
    in sample.  beta_init is left unset.
    """
    hp = hyperparams or resolve_forest_params(dataset, config, rng)
    forest = fit_random_forest(dataset.x, dataset.d, hp,
                               split_rng(draw_seed(rng), _FULL_STREAM),
                               clip=config.clip)
    p, n_low, n_high = forest.predict_with_clip_counts(dataset.x)
    kernel = fit_kernel(p, _targets(dataset))
    values, derivs, fallbacks = kernel.evaluate(p, derivative=True)
    mu_x, mu_y, dmu_x, dmu_y = _split_values(values, derivs)
    nv = moments.NuisanceValues(p, mu_x, mu_y, dmu_x, dmu_y)
    diagnostics = {"forest_fits": 1,
                   "clipped_low": n_low,
                   "clipped_high": n_high,
                   "kernel_fallbacks": fallbacks,
                   "bandwidth_mean": float(kernel.bandwidths[0]),
                   "forest_params": hp.to_dict()}
    _warn_on_clipping(n_low + n_high, dataset.n)
    return FullSampleNuisances(hp, forest, kernel, nv, diagnostics)


def _warn_on_clipping(clipped, n):
    if n and clipped > 0.1 * n:
        logger.warning("{} of {} propensities were clipped".format(clipped,
                                                                  n))
