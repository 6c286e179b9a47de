# -*- coding: utf-8 -*-
"""
First-step propensity learner: a regression forest on the binary
selection indicator, with clipped predictions and cross-validated
hyperparameter choice.
"""
import logging
import math

import numpy as np
from sklearn.ensemble import RandomForestRegressor
from sklearn.model_selection import KFold, cross_val_score

from selcorr.base import constants
from selcorr.base.algorithms import draw_seed

__copyright__ = "Copyright 2026, selcorr developers"

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.NullHandler())


class ForestHyperparams(object):
    """
    Forest settings searched by tune_forest_cv.

    Parameters:
      n_trees (int) - trees in the ensemble
      min_leaf (int) - minimum observations per leaf
      max_features (int) - features sampled per split
      bootstrap_fraction (float) - share of n drawn (with replacement)
          for each tree, in (0, 1]
      bootstrap (bool) - False fits every tree on the full sample
    """

    def __init__(self, n_trees=constants.DEFAULT_N_TREES, min_leaf=5,
                 max_features=None, bootstrap_fraction=1.0, bootstrap=True):
        self.n_trees = int(n_trees)
        self.min_leaf = int(min_leaf)
        self.max_features = None if max_features is None \
            else int(max_features)
        self.bootstrap_fraction = float(bootstrap_fraction)
        self.bootstrap = bool(bootstrap)
        if self.n_trees < 1:
            raise ValueError("n_trees must be >= 1")
        if self.min_leaf < 1:
            raise ValueError("min_leaf must be >= 1")
        if self.max_features is not None and self.max_features < 1:
            raise ValueError("max_features must be >= 1")
        if not 0.0 < self.bootstrap_fraction <= 1.0:
            raise ValueError("bootstrap_fraction must lie in (0, 1]")

    def to_dict(self):
        return {"n_trees": self.n_trees,
                "min_leaf": self.min_leaf,
                "max_features": self.max_features,
                "bootstrap_fraction": self.bootstrap_fraction,
                "bootstrap": self.bootstrap}

    @classmethod
    def from_dict(cls, data):
        return cls(**data)

    def make_regressor(self, dim_x, seed, n_jobs=1):
        """ Unfitted sklearn forest for these settings """
        max_features = dim_x if self.max_features is None \
            else self.max_features
        if max_features > dim_x:
            raise ValueError("max_features={} exceeds K={}".format(
                max_features, dim_x))
        max_samples = None
        if self.bootstrap and self.bootstrap_fraction < 1.0:
            max_samples = self.bootstrap_fraction
        return RandomForestRegressor(n_estimators=self.n_trees,
                                     criterion="squared_error",
                                     min_samples_leaf=self.min_leaf,
                                     max_features=max_features,
                                     bootstrap=self.bootstrap,
                                     max_samples=max_samples,
                                     random_state=seed,
                                     n_jobs=n_jobs)

    def __eq__(self, other):
        return isinstance(other, ForestHyperparams) and \
            self.to_dict() == other.to_dict()

    def __repr__(self):
        return "ForestHyperparams({})".format(", ".join(
            "{}={!r}".format(k, v) for k, v in self.to_dict().items()))


def default_forest_grid(dim_x, n_trees=constants.DEFAULT_N_TREES,
                        min_leaf_grid=constants.DEFAULT_MIN_LEAF_GRID):
    """
    min_leaf in {1, 5, 10, 25} x max_features in {ceil(K/3), K}, in that
    order, with 200 trees and full-size bootstrap samples.
    """
    feature_grid = sorted({int(math.ceil(dim_x / 3.0)), int(dim_x)})
    return [ForestHyperparams(n_trees=n_trees, min_leaf=leaf,
                              max_features=features)
            for leaf in min_leaf_grid for features in feature_grid]


class PropensityModel(object):
    """
    A fitted forest whose predictions are clipped to [clip_lo, clip_hi].
    Fitted models are never modified, so they can be shared by threads.
    """

    def __init__(self, forest, clip_lo=constants.CLIP_LO,
                 clip_hi=constants.CLIP_HI):
        if not 0.0 < clip_lo < clip_hi < 1.0:
            raise ValueError("clip range must satisfy 0 < lo < hi < 1")
        self.forest = forest
        self.clip_lo = float(clip_lo)
        self.clip_hi = float(clip_hi)
        self.dim_x = forest.n_features_in_

    @property
    def trees(self):
        return self.forest.estimators_

    def _check(self, x_rows):
        x_rows = np.atleast_2d(np.asarray(x_rows, dtype=float))
        if x_rows.shape[1] != self.dim_x:
            raise ValueError("expected {} covariates, got {}".format(
                self.dim_x, x_rows.shape[1]))
        return x_rows

    def predict_unclipped(self, x_rows):
        """ Tree average before clipping """
        return self.forest.predict(self._check(x_rows))

    def predict_with_clip_counts(self, x_rows):
        """ (clipped predictions, number clipped low, number clipped high) """
        raw = self.predict_unclipped(x_rows)
        n_low = int(np.sum(raw < self.clip_lo))
        n_high = int(np.sum(raw > self.clip_hi))
        return np.clip(raw, self.clip_lo, self.clip_hi), n_low, n_high

    def predict(self, x_rows):
        return self.predict_with_clip_counts(x_rows)[0]


def fit_random_forest(x_rows, d, hp, rng, clip=(constants.CLIP_LO,
                                                constants.CLIP_HI),
                      n_jobs=1):
    """
    Fits a regression forest of d on x_rows with squared-error splits.

    Every tree draws its randomness from a seed derived from rng, so the
    fit does not depend on n_jobs.

    Parameters:
      x_rows (ndarray, n x K)
      d (ndarray, n) - binary targets; constant targets are allowed
      hp (ForestHyperparams)
      rng (numpy.random.Generator)
      clip (tuple) - (clip_lo, clip_hi)
    """
    x_rows = np.atleast_2d(np.asarray(x_rows, dtype=float))
    d = np.asarray(d, dtype=float).reshape(-1)
    if x_rows.shape[0] == 0:
        raise ValueError("cannot fit a forest on empty data")
    if x_rows.shape[0] != len(d):
        raise ValueError("x_rows and d lengths differ")
    forest = hp.make_regressor(x_rows.shape[1], draw_seed(rng), n_jobs=n_jobs)
    forest.fit(x_rows, d)
    return PropensityModel(forest, clip_lo=clip[0], clip_hi=clip[1])


def predict_propensity(model, x):
    """ Clipped propensity at a single covariate vector """
    x = np.asarray(x, dtype=float).reshape(-1)
    if len(x) != model.dim_x:
        raise ValueError("expected {} covariates, got {}".format(
            model.dim_x, len(x)))
    return float(model.predict(x[np.newaxis, :])[0])


def tune_forest_cv(x_rows, d, grid, folds, rng, n_jobs=1):
    """
    Returns the grid member with the smallest cross-validated mean squared
    error of predicting d.  Every candidate sees the same folds and the
    same forest seed; ties go to the earliest grid entry.
    """
    grid = list(grid)
    if not grid:
        raise ValueError("empty hyperparameter grid")
    if int(folds) < 2:
        raise ValueError("cross-validation needs at least two folds")
    if len(grid) == 1:
        return grid[0]
    x_rows = np.atleast_2d(np.asarray(x_rows, dtype=float))
    d = np.asarray(d, dtype=float).reshape(-1)
    splitter = KFold(n_splits=int(folds), shuffle=True,
                     random_state=draw_seed(rng))
    forest_seed = draw_seed(rng)
    losses = []
    for hp in grid:
        scores = cross_val_score(
            hp.make_regressor(x_rows.shape[1], forest_seed, n_jobs=n_jobs),
            x_rows, d, cv=splitter, scoring="neg_mean_squared_error")
        losses.append(-float(np.mean(scores)))
    best = int(np.argmin(losses))
    logger.debug("Forest CV losses {}; chose {}".format(
        ["{:.5f}".format(v) for v in losses], grid[best]))
    return grid[best]
