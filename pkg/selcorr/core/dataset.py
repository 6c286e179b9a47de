# -*- coding: utf-8 -*-
"""
Observations and datasets of a sample selection model.

The outcome is only observed for selected rows: y = y* . d.  Datasets
are immutable once built; the underlying arrays are marked read-only so
they can be shared between worker threads.
"""
import logging

import numpy as np
import pandas as pd

from selcorr.base.exceptions import SchemaError, ConsistencyError

__copyright__ = "Copyright 2026, selcorr developers"

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.NullHandler())

OUTCOME_COLUMN = "y"
SELECTION_COLUMN = "d"


def _frozen(array):
    array = np.array(array, dtype=float)
    array.setflags(write=False)
    return array


class Observation(object):
    """
    One row (y, d, x).  x carries no intercept column.
    """
    __slots__ = ("y", "d", "x")

    def __init__(self, y, d, x):
        self.y = float(y)
        self.d = int(d)
        self.x = _frozen(x)
        if self.d not in (0, 1):
            raise SchemaError("selection indicator must be 0 or 1, got "
                              "{!r}".format(d), column=SELECTION_COLUMN)
        if self.d == 0 and self.y != 0.0:
            raise ConsistencyError("unselected observation with nonzero "
                                   "outcome {!r}".format(y),
                                   column=OUTCOME_COLUMN)
        if not np.all(np.isfinite(self.x)):
            raise SchemaError("non-finite covariate")

    def __eq__(self, other):
        return (isinstance(other, Observation) and self.y == other.y and
                self.d == other.d and np.array_equal(self.x, other.x))

    def __repr__(self):
        return "Observation(y={!r}, d={!r}, x={!r})".format(
            self.y, self.d, self.x.tolist())


class Dataset(object):
    """
    n observations sharing a covariate schema.

    Attributes:
      y (ndarray, n) - observed outcomes, zero where d == 0
      d (ndarray, n) - selection indicators as floats
      x (ndarray, n x K) - covariates
      column_names (tuple of str) - K covariate names
      coerced_count (int) - rows whose outcome was set to 0 on ingestion
    """

    def __init__(self, y, d, x, column_names=None, coerced_count=0):
        x = np.atleast_2d(np.asarray(x, dtype=float))
        y = np.asarray(y, dtype=float).reshape(-1)
        d = np.asarray(d, dtype=float).reshape(-1)
        if not (len(y) == len(d) == x.shape[0]):
            raise ValueError("y, d and x must have the same number of rows")
        if column_names is None:
            column_names = ["x{}".format(k + 1) for k in range(x.shape[1])]
        if len(column_names) != x.shape[1]:
            raise ValueError("{} column names for {} covariates".format(
                len(column_names), x.shape[1]))
        self.y = _frozen(y)
        self.d = _frozen(d)
        self.x = _frozen(x)
        self.column_names = tuple(str(c) for c in column_names)
        self.coerced_count = int(coerced_count)

    @property
    def n(self):
        return self.x.shape[0]

    @property
    def dim_x(self):
        return self.x.shape[1]

    @property
    def observations(self):
        return [Observation(self.y[i], self.d[i], self.x[i])
                for i in range(self.n)]

    def subset(self, indices):
        """ Dataset restricted to the given row indices, in that order """
        indices = np.asarray(indices, dtype=int)
        return Dataset(self.y[indices], self.d[indices], self.x[indices],
                       self.column_names)

    def with_outcome_scaled(self, factor):
        return Dataset(self.y * factor, self.d, self.x, self.column_names)

    def selection_rate(self):
        return float(self.d.mean())

    def to_frame(self):
        """ DataFrame with columns d, y, then the covariates """
        frame = pd.DataFrame(self.x, columns=list(self.column_names))
        frame.insert(0, OUTCOME_COLUMN, self.y)
        frame.insert(0, SELECTION_COLUMN, self.d.astype(int))
        return frame

    def to_csv(self, path):
        """ Writes the CSV schema read by `from_csv`, full precision """
        self.to_frame().to_csv(path, index=False, float_format="%.17g",
                               lineterminator="\n")

    def __eq__(self, other):
        return (isinstance(other, Dataset) and
                self.column_names == other.column_names and
                np.array_equal(self.y, other.y) and
                np.array_equal(self.d, other.d) and
                np.array_equal(self.x, other.x))

    def __repr__(self):
        return "Dataset(n={}, dim_x={}, selected={:.3f})".format(
            self.n, self.dim_x, self.selection_rate() if self.n else 0.0)


def _as_frame(rows, column_names):
    """ DataFrame from a DataFrame or a list of d, y, x... rows """
    if isinstance(rows, pd.DataFrame):
        return rows.copy()
    rows = list(rows)
    if not rows:
        raise SchemaError("no rows")
    width = len(rows[0])
    for index, row in enumerate(rows):
        if len(row) != width:
            raise SchemaError("ragged row: expected {} fields, got {}".format(
                width, len(row)), row=index)
    if column_names is None:
        column_names = [SELECTION_COLUMN, OUTCOME_COLUMN] + [
            "x{}".format(k + 1) for k in range(width - 2)]
    if len(column_names) != width:
        raise SchemaError("{} column names for rows of width {}".format(
            len(column_names), width))
    return pd.DataFrame(rows, columns=list(column_names))


def _to_numeric(frame, column):
    try:
        return pd.to_numeric(frame[column], errors="raise").to_numpy(
            dtype=float)
    except (ValueError, TypeError):
        values = pd.to_numeric(frame[column], errors="coerce")
        bad = values.isna() & frame[column].notna()
        row = int(np.flatnonzero(bad.to_numpy())[0])
        raise SchemaError("non-numeric value {!r}".format(
            frame[column].iloc[row]), row=row, column=column)


def validate_dataset(rows, column_names=None, strict=False):
    """
    Builds a Dataset from raw rows.

    Parameters:
      rows - a pandas DataFrame with columns d, y and covariates, or a
             list of equal-length sequences (d, y, x1, ..., xK)
      column_names (list) - names for sequence rows, d and y first
      strict (bool) - reject d == 0 rows with a nonzero outcome instead
             of coercing them

    Missing outcomes are allowed only where d == 0.  Every coerced
    outcome adds one to Dataset.coerced_count and is logged.
    """
    frame = _as_frame(rows, column_names)
    if frame.shape[0] == 0:
        raise SchemaError("no rows")
    for required in (SELECTION_COLUMN, OUTCOME_COLUMN):
        if required not in frame.columns:
            raise SchemaError("missing required column", column=required)
    covariates = [c for c in frame.columns
                  if c not in (SELECTION_COLUMN, OUTCOME_COLUMN)]
    if not covariates:
        raise SchemaError("no covariate columns")

    d = _to_numeric(frame, SELECTION_COLUMN)
    bad = ~np.isin(d, (0.0, 1.0))
    if bad.any():
        row = int(np.flatnonzero(bad)[0])
        raise SchemaError("selection indicator must be 0 or 1, got "
                          "{!r}".format(frame[SELECTION_COLUMN].iloc[row]),
                          row=row, column=SELECTION_COLUMN)

    x = np.column_stack([_to_numeric(frame, c) for c in covariates])
    bad_rows, bad_cols = np.nonzero(~np.isfinite(x))
    if len(bad_rows):
        raise SchemaError("non-finite covariate", row=int(bad_rows[0]),
                          column=covariates[bad_cols[0]])

    y = _to_numeric(frame, OUTCOME_COLUMN)
    missing = ~np.isfinite(y)
    selected = d == 1.0
    if (missing & selected).any():
        row = int(np.flatnonzero(missing & selected)[0])
        raise SchemaError("missing or non-finite outcome for a selected "
                          "row", row=row, column=OUTCOME_COLUMN)
    nonzero = ~selected & ~missing & (y != 0.0)
    if strict and nonzero.any():
        row = int(np.flatnonzero(nonzero)[0])
        raise ConsistencyError("unselected row has outcome {!r}".format(
            y[row]), row=row, column=OUTCOME_COLUMN)
    coerce = ~selected & (missing | nonzero)
    coerced_count = int(coerce.sum())
    if coerced_count:
        logger.warning("Coerced the outcome to 0 on {} unselected "
                       "row(s)".format(coerced_count))
    y = np.where(selected, y, 0.0)
    return Dataset(y, d, x, covariates, coerced_count=coerced_count)


def from_csv(path, strict=False):
    """
    Reads a CSV with a header row: d, y, then covariates in file order.
    """
    try:
        frame = pd.read_csv(path, skipinitialspace=True,
                            float_precision="round_trip")
    except pd.errors.ParserError as ex:
        raise SchemaError("malformed CSV {}: {}".format(path, ex))
    except pd.errors.EmptyDataError:
        raise SchemaError("empty CSV {}".format(path))
    logger.debug("Read {} rows x {} columns from {}".format(
        frame.shape[0], frame.shape[1], path))
    return validate_dataset(frame, strict=strict)
