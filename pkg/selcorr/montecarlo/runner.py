# -*- coding: utf-8 -*-
"""
Monte Carlo replication driver.

Replication b draws everything from seeds split off (master_seed, b):
  (b, 0)  the sample
  (b, 1)  forest tuning
  (b, 2)  cross-fitted nuisances (partition and forests)
  (b, 3)  full-sample nuisances
so its records do not depend on the worker count or on which other
estimators were requested.  Every requested estimator is fit on the same
sample, and the cross-fitted ones share one partition.
"""
import logging

import numpy as np
import pandas as pd

from selcorr.base.algorithms import split_rng
from selcorr.base.context import TimeIt
from selcorr.base.exceptions import SelcorrError
from selcorr.base.formatters import format_full_precision
from selcorr.base.threading import Parallel
from selcorr.core.results import EstimatorTag
from selcorr import estimators as estimator_registry
from selcorr.dgp.sampling import generate_sample, generate_repeated_sample

__copyright__ = "Copyright 2026, selcorr developers"

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.NullHandler())

_SAMPLE_STREAM = 0
_TUNE_STREAM = 1
_CROSS_FIT_STREAM = 2
_FULL_SAMPLE_STREAM = 3

# a fit raising one of these becomes a failed record
_FIT_ERRORS = (SelcorrError, np.linalg.LinAlgError, ValueError)

RECORD_COLUMNS = ["n", "rep_id", "estimator", "k", "beta_hat_k", "se_k",
                  "failure"]


class ReplicationRecord(object):
    """
    One estimator's output on one replication.

    Attributes:
      rep_id (int)
      estimator_tag (str)
      n (int) - sample size of the replication
      beta_hat (ndarray) - NaN when failed
      se (ndarray) - NaN when failed
      elapsed (float) - seconds, not exported
      failure (str) - None, or the reason the fit failed
    """

    def __init__(self, rep_id, estimator_tag, beta_hat, se, elapsed=0.0,
                 failure=None, n=None):
        self.rep_id = int(rep_id)
        self.n = None if n is None else int(n)
        self.estimator_tag = estimator_tag
        self.beta_hat = np.asarray(beta_hat, dtype=float).reshape(-1)
        self.se = np.asarray(se, dtype=float).reshape(-1)
        self.elapsed = float(elapsed)
        self.failure = failure
        if self.ok and not (np.all(np.isfinite(self.beta_hat)) and
                            np.all(np.isfinite(self.se))):
            raise ValueError("successful records need finite entries")

    @property
    def ok(self):
        return self.failure is None

    @classmethod
    def failed(cls, rep_id, estimator_tag, dim_x, reason, elapsed=0.0,
               n=None):
        nan = np.full(dim_x, np.nan)
        return cls(rep_id, estimator_tag, nan, nan, elapsed, reason, n)

    def sort_key(self):
        return (self.n or 0, self.rep_id,
                EstimatorTag.ORDER.index(self.estimator_tag))

    def __eq__(self, other):
        return (isinstance(other, ReplicationRecord) and
                self.rep_id == other.rep_id and
                self.n == other.n and
                self.estimator_tag == other.estimator_tag and
                self.failure == other.failure and
                np.array_equal(self.beta_hat, other.beta_hat,
                               equal_nan=True) and
                np.array_equal(self.se, other.se, equal_nan=True))

    def __repr__(self):
        status = "ok" if self.ok else "failed: " + self.failure
        return "ReplicationRecord(rep={}, {}, {})".format(
            self.rep_id, self.estimator_tag, status)


def _normalize_estimators(estimators):
    tags = {EstimatorTag.from_str(tag) for tag in estimators}
    if not tags:
        raise ValueError("at least one estimator is required")
    return [tag for tag in EstimatorTag.ORDER if tag in tags]


def _draw_sample(design, master_seed, rep_id, repeated):
    rng = split_rng(master_seed, rep_id, _SAMPLE_STREAM)
    if repeated:
        return generate_repeated_sample(design, rng)
    return generate_sample(design, rng)


def tune_for_run(design, config, master_seed, repeated=False):
    """
    Forest settings for a run that does not tune per replication: the
    configured forest_params, or the grid member chosen on the first
    replication's sample.
    """
    if config.forest_params is not None:
        return config.forest_params
    dataset = _draw_sample(design, master_seed, 0, repeated)
    return estimator_registry.resolve_forest_params(
        dataset, config, split_rng(master_seed, 0, _TUNE_STREAM))


def run_replication(design, tags, config, master_seed, rep_id,
                    repeated=False, hyperparams=None):
    """
    Records for every tag on replication rep_id.  Fit failures become
    failed records instead of propagating.
    """
    dataset = _draw_sample(design, master_seed, rep_id, repeated)
    if hyperparams is None:
        try:
            hyperparams = estimator_registry.resolve_forest_params(
                dataset, config, split_rng(master_seed, rep_id, _TUNE_STREAM))
        except _FIT_ERRORS as ex:
            logger.warning("Replication {} tuning failed: {}".format(rep_id,
                                                                     ex))
            reason = "{}: {}".format(type(ex).__name__, ex)
            return [ReplicationRecord.failed(rep_id, tag, dataset.dim_x,
                                             reason, n=dataset.n)
                    for tag in tags]
    shared = {}

    def nuisances_for(tag):
        cross_fitted = tag in estimator_registry.CROSS_FITTED
        if cross_fitted not in shared:
            try:
                if cross_fitted:
                    shared[cross_fitted] = \
                        estimator_registry.cross_fitted_nuisances(
                            dataset, config,
                            split_rng(master_seed, rep_id, _CROSS_FIT_STREAM),
                            hyperparams)
                else:
                    shared[cross_fitted] = \
                        estimator_registry.fit_full_sample_nuisances(
                            dataset, config,
                            split_rng(master_seed, rep_id,
                                      _FULL_SAMPLE_STREAM),
                            hyperparams)
            except _FIT_ERRORS as ex:
                shared[cross_fitted] = ex
        if isinstance(shared[cross_fitted], Exception):
            raise shared[cross_fitted]
        return shared[cross_fitted]

    records = []
    for tag in tags:
        with TimeIt() as timer:
            try:
                fit = estimator_registry.from_tag(tag)(
                    dataset, config, nuisances=nuisances_for(tag))
            except _FIT_ERRORS as ex:
                fit = ex
        if isinstance(fit, Exception):
            logger.warning("Replication {} {} failed: {}".format(
                rep_id, tag, fit))
            records.append(ReplicationRecord.failed(
                rep_id, tag, dataset.dim_x,
                "{}: {}".format(type(fit).__name__, fit), timer.interval,
                n=dataset.n))
        else:
            records.append(ReplicationRecord(rep_id, tag, fit.beta,
                                             fit.standard_errors,
                                             timer.interval, n=dataset.n))
    return records


def run_design(design, estimators, reps, config, master_seed, workers=1,
               repeated=False, output_interval=None):
    """
    Runs `reps` replications of a calibrated design.

    Parameters:
      design (SimulationDesign) - with c set
      estimators (list) - tags or aliases, run in table order
      reps (int) - R >= 1
      config (EstimatorConfig)
      master_seed (int)
      workers (int) - replications run concurrently
      repeated (bool) - duplicated half samples instead of fresh ones
      output_interval (int) - seconds between progress messages

    Returns records sorted by replication, then estimator.
    """
    if reps < 1:
        raise ValueError("reps must be >= 1, got {}".format(reps))
    if design.c is None:
        raise ValueError("design has no calibrated constant c")
    tags = _normalize_estimators(estimators)
    hyperparams = None
    if config.forest_params is not None or not config.tune_per_fit:
        hyperparams = tune_for_run(design, config, master_seed, repeated)
    logger.info("Running {} replications of {} with {}".format(
        reps, design, ", ".join(tags)))

    results = {}

    def replicate(rep_id):
        results[rep_id] = run_replication(design, tags, config, master_seed,
                                          rep_id, repeated, hyperparams)

    with TimeIt() as timer:
        Parallel([replicate] * reps, args_list=[(b,) for b in range(reps)],
                 max_workers=workers,
                 output_interval=output_interval).run_threads()
    records = sorted((r for b in range(reps) for r in results[b]),
                     key=ReplicationRecord.sort_key)
    failures = sum(1 for r in records if not r.ok)
    logger.info("Finished {} replications in {:.1f}s, {} failed fits".format(
        reps, timer.interval, failures))
    return records


def records_to_frame(records):
    """ One row per (replication, estimator, k); k counts from 1 """
    rows = []
    for record in records:
        for k, (beta_k, se_k) in enumerate(zip(record.beta_hat, record.se),
                                           start=1):
            rows.append({"n": record.n,
                         "rep_id": record.rep_id,
                         "estimator": record.estimator_tag,
                         "k": k,
                         "beta_hat_k": beta_k,
                         "se_k": se_k,
                         "failure": record.failure or ""})
    return pd.DataFrame(rows, columns=RECORD_COLUMNS)


def write_records(records, path):
    """ Raw records as CSV with 17 significant digits """
    frame = records_to_frame(records)
    for column in ("beta_hat_k", "se_k"):
        frame[column] = frame[column].map(format_full_precision)
    frame.to_csv(path, index=False, lineterminator="\n")


def read_records(path):
    frame = pd.read_csv(path, keep_default_na=False,
                        dtype={"beta_hat_k": str, "se_k": str,
                               "failure": str})
    missing = [c for c in RECORD_COLUMNS if c not in frame.columns]
    if missing:
        raise ValueError("records file {} lacks column(s) {}".format(
            path, ", ".join(missing)))
    # float() parses the 17-digit text back to the identical double
    frame["beta_hat_k"] = frame["beta_hat_k"].map(float)
    frame["se_k"] = frame["se_k"].map(float)
    records = []
    for (n, rep_id, tag), group in frame.groupby(["n", "rep_id", "estimator"],
                                                 sort=False):
        group = group.sort_values("k")
        failure = group["failure"].iloc[0] or None
        records.append(ReplicationRecord(rep_id, tag,
                                         group["beta_hat_k"].to_numpy(),
                                         group["se_k"].to_numpy(),
                                         failure=failure,
                                         n=None if n == "" else n))
    return sorted(records, key=ReplicationRecord.sort_key)
