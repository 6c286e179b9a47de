# -*- coding: utf-8 -*-
"""
Summary metrics over replications.

For component k over the successful replications b = 1..R of one
estimator:
  Bias_k     = sum_b |beta_k^b - beta_k| / R
  SD_k       = (sum_b (beta_k^b - mean_b beta_k^b)^2 / R)^(1/2)
  Coverage_k = sum_b 1{|beta_k^b - beta_k| <= z SE_k^b} / R
Bias and SD are averaged over k; coverage is averaged, maximized and
minimized over k.
"""
import logging

import numpy as np

from selcorr.base import constants
from selcorr.base.formatters import format_table_value
from selcorr.core.results import EstimatorTag
from selcorr.montecarlo.runner import records_to_frame

__copyright__ = "Copyright 2026, selcorr developers"

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.NullHandler())

METRICS = ("average_bias", "average_sd", "average_coverage", "max_coverage",
           "min_coverage")

METRIC_LABELS = {"average_bias": "Average Bias",
                 "average_sd": "Average SD",
                 "average_coverage": "Average Coverage",
                 "max_coverage": "Max Coverage",
                 "min_coverage": "Min Coverage"}


class EstimatorSummary(object):
    """
    Metrics for one estimator.  `components` holds the per-k bias, sd
    and coverage arrays.
    """

    def __init__(self, estimator_tag, average_bias, average_sd,
                 average_coverage, max_coverage, min_coverage, reps,
                 failures=0, components=None):
        self.estimator_tag = estimator_tag
        self.average_bias = average_bias
        self.average_sd = average_sd
        self.average_coverage = average_coverage
        self.max_coverage = max_coverage
        self.min_coverage = min_coverage
        self.reps = reps
        self.failures = failures
        self.components = components or {}

    def metric(self, name):
        return getattr(self, name)

    def __repr__(self):
        return ("EstimatorSummary({}, bias={}, sd={}, "
                "coverage={} (max {}, min {}), reps={})".format(
                    self.estimator_tag,
                    *[format_table_value(self.metric(m)) for m in METRICS],
                    self.reps))


class SummaryTable(object):
    """
    One panel: summaries keyed by estimator tag for a sample size n.
    Estimators whose every replication failed map to None and keep their
    failure count in `failures`.
    """

    def __init__(self, summaries, n=None, failures=None, label=None):
        self.summaries = summaries
        self.n = n
        self.failures = failures or {}
        self.label = label

    @property
    def estimator_tags(self):
        return [tag for tag in EstimatorTag.ORDER if tag in self.summaries]

    def __getitem__(self, tag):
        return self.summaries[EstimatorTag.from_str(tag)]

    def __contains__(self, tag):
        return EstimatorTag.from_str(tag) in self.summaries


def summarize(records, true_beta, z=constants.COVERAGE_Z, n=None,
              label=None):
    """
    SummaryTable over records.

    Parameters:
      records (list of ReplicationRecord)
      true_beta (sequence) - the design's beta
      z (float) - critical value for coverage
      n (int) - sample size shown as the panel heading
    """
    if not records:
        raise ValueError("no records to summarize")
    true_beta = np.asarray(true_beta, dtype=float).reshape(-1)
    frame = records_to_frame(records)
    frame["truth"] = true_beta[frame["k"].to_numpy() - 1]
    failed_fits = frame[frame["failure"] != ""].groupby(
        "estimator")["rep_id"].nunique()
    frame = frame[frame["failure"] == ""].copy()
    frame["error"] = (frame["beta_hat_k"] - frame["truth"]).abs()
    frame["covered"] = frame["error"] <= z * frame["se_k"]

    summaries = {}
    failures = {tag: int(count) for tag, count in failed_fits.items()}
    requested = {r.estimator_tag for r in records}
    for tag in EstimatorTag.ORDER:
        if tag not in requested:
            continue
        group = frame[frame["estimator"] == tag]
        if group.empty:
            logger.warning("Every replication of {} failed".format(tag))
            summaries[tag] = None
            continue
        per_k = group.groupby("k").agg(
            bias=("error", "mean"),
            sd=("beta_hat_k", lambda values: float(np.std(values, ddof=0))),
            coverage=("covered", "mean"))
        summaries[tag] = EstimatorSummary(
            tag,
            average_bias=float(per_k["bias"].mean()),
            average_sd=float(per_k["sd"].mean()),
            average_coverage=float(per_k["coverage"].mean()),
            max_coverage=float(per_k["coverage"].max()),
            min_coverage=float(per_k["coverage"].min()),
            reps=int(group["rep_id"].nunique()),
            failures=failures.get(tag, 0),
            components={"bias": per_k["bias"].to_numpy(),
                        "sd": per_k["sd"].to_numpy(),
                        "coverage": per_k["coverage"].to_numpy()})
    return SummaryTable(summaries, n=n, failures=failures, label=label)
