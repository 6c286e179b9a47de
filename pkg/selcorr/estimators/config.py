# -*- coding: utf-8 -*-
"""
Estimator configuration
"""
from selcorr.base import constants
from selcorr.base.exceptions import ConfigError
from selcorr.learners.forest import ForestHyperparams, default_forest_grid
from selcorr.moments import FORMULATIONS, DEFAULT_FORMULATION

__copyright__ = "Copyright 2026, selcorr developers"

BANDWIDTH_RULE = "rule_of_thumb"

# two folds leave no rows outside a pair
MIN_FOLDS = 3


class EstimatorConfig(object):
    """
    Settings shared by the four estimators.

    Parameters:
      folds (int) - L, cross-fitting folds (>= 3: every pair of folds
          must leave rows to train pi_ll' on)
      forest_grid (list of ForestHyperparams) - tuning grid; None means
          default_forest_grid(K) for the data at hand
      tune_per_fit (bool) - tune on every dataset; when False the caller
          tunes once and passes forest_params
      forest_params (ForestHyperparams) - fixed settings, skips tuning
      clip (tuple) - (clip_lo, clip_hi) for propensities
      cv_folds (int) - folds used by tune_forest_cv
      seed (int) - seed for estimators called without an rng
      formulation (str) - normal equations of the orthogonal estimators
      workers (int) - threads for the per-fold forest fits
    """

    def __init__(self, folds=constants.DEFAULT_FOLDS, forest_grid=None,
                 tune_per_fit=True, forest_params=None,
                 clip=(constants.CLIP_LO, constants.CLIP_HI),
                 cv_folds=constants.DEFAULT_CV_FOLDS, seed=0,
                 formulation=DEFAULT_FORMULATION, workers=1):
        self.folds = int(folds)
        self.forest_grid = None if forest_grid is None else list(forest_grid)
        self.tune_per_fit = bool(tune_per_fit)
        self.forest_params = forest_params
        self.clip = (float(clip[0]), float(clip[1]))
        self.cv_folds = int(cv_folds)
        self.seed = int(seed)
        self.formulation = formulation
        self.workers = max(1, int(workers))
        self.bandwidth_rule = BANDWIDTH_RULE
        if self.folds < MIN_FOLDS:
            raise ValueError("folds must be >= {}, got {}".format(
                MIN_FOLDS, self.folds))
        if not 0.0 < self.clip[0] < self.clip[1] < 1.0:
            raise ValueError("clip range must satisfy 0 < lo < hi < 1")
        if self.cv_folds < 2:
            raise ValueError("cv_folds must be >= 2")
        if self.formulation not in FORMULATIONS:
            raise ValueError("Unknown formulation: " +
                             repr(self.formulation))
        if self.forest_grid is not None and not self.forest_grid:
            raise ValueError("forest_grid must not be empty")

    def grid_for(self, dim_x):
        if self.forest_grid is not None:
            return self.forest_grid
        return default_forest_grid(dim_x)

    def replace(self, **changes):
        """ Copy with some settings changed """
        settings = dict(folds=self.folds, forest_grid=self.forest_grid,
                        tune_per_fit=self.tune_per_fit,
                        forest_params=self.forest_params, clip=self.clip,
                        cv_folds=self.cv_folds, seed=self.seed,
                        formulation=self.formulation, workers=self.workers)
        settings.update(changes)
        return EstimatorConfig(**settings)

    def to_dict(self):
        data = {"folds": self.folds,
                "tune_per_fit": self.tune_per_fit,
                "clip_lo": self.clip[0],
                "clip_hi": self.clip[1],
                "cv_folds": self.cv_folds,
                "seed": self.seed,
                "formulation": self.formulation,
                "bandwidth_rule": self.bandwidth_rule}
        if self.forest_grid is not None:
            data["forest_grid"] = [hp.to_dict() for hp in self.forest_grid]
        if self.forest_params is not None:
            data["forest_params"] = self.forest_params.to_dict()
        return data

    @classmethod
    def from_dict(cls, data):
        """
        Builds a config from an [estimator] section.  The grid may be
        given as lists n_trees / min_leaf / max_features (crossed in that
        order) or as explicit forest_grid entries.
        """
        data = dict(data)
        known = {"folds", "tune_per_fit", "clip_lo", "clip_hi", "cv_folds",
                 "seed", "formulation", "bandwidth_rule", "forest_grid",
                 "forest_params", "n_trees", "min_leaf", "max_features",
                 "bootstrap_fraction", "workers"}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError("unknown estimator key(s): {}".format(
                ", ".join(unknown)), column=unknown[0])
        if data.pop("bandwidth_rule", BANDWIDTH_RULE) != BANDWIDTH_RULE:
            raise ConfigError("only the rule_of_thumb bandwidth is "
                              "supported", column="bandwidth_rule")
        grid = data.pop("forest_grid", None)
        if grid is not None:
            grid = [ForestHyperparams.from_dict(g) for g in grid]
        grid_keys = {k: data.pop(k) for k in ("n_trees", "min_leaf",
                                              "max_features",
                                              "bootstrap_fraction")
                     if k in data}
        if grid_keys:
            if grid is not None:
                raise ConfigError("give forest_grid or n_trees/min_leaf/"
                                  "max_features, not both")
            grid = _cross_grid(grid_keys)
        params = data.pop("forest_params", None)
        if params is not None:
            params = ForestHyperparams.from_dict(params)
        clip = (data.pop("clip_lo", constants.CLIP_LO),
                data.pop("clip_hi", constants.CLIP_HI))
        try:
            return cls(forest_grid=grid, forest_params=params, clip=clip,
                       **data)
        except (TypeError, ValueError) as ex:
            raise ConfigError("invalid estimator settings: {}".format(ex))


def _as_list(value):
    if value is None:
        return [None]
    if isinstance(value, (list, tuple)):
        return list(value)
    return [value]


def _cross_grid(keys):
    """ Cartesian grid, n_trees slowest and max_features fastest """
    fraction = keys.get("bootstrap_fraction", 1.0)
    return [ForestHyperparams(n_trees=trees, min_leaf=leaf,
                              max_features=features,
                              bootstrap_fraction=fraction)
            for trees in _as_list(keys.get("n_trees",
                                           constants.DEFAULT_N_TREES))
            for leaf in _as_list(keys.get(
                "min_leaf", list(constants.DEFAULT_MIN_LEAF_GRID)))
            for features in _as_list(keys.get("max_features"))]
