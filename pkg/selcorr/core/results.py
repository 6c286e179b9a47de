# -*- coding: utf-8 -*-
"""
Estimation results and their JSON form
"""
import numpy as np
import simplejson as json

__copyright__ = "Copyright 2026, selcorr developers"


class EstimatorTag(object):
    """
    Estimator names.  ORDER is the column order used in every table.
    """
    LOCALLY_ROBUST = "LocallyRobust"
    ROBINSON = "Robinson"
    ROBINSON_ORTHOGONAL = "RobinsonOrthogonal"
    ROBINSON_CROSSFIT = "RobinsonCrossfit"

    ORDER = (LOCALLY_ROBUST, ROBINSON, ROBINSON_ORTHOGONAL,
             ROBINSON_CROSSFIT)

    # command line spellings
    ALIASES = {"lr": LOCALLY_ROBUST,
               "robinson": ROBINSON,
               "robinson-orth": ROBINSON_ORTHOGONAL,
               "robinson-cf": ROBINSON_CROSSFIT}

    LABELS = {LOCALLY_ROBUST: "LR",
              ROBINSON: "Robinson",
              ROBINSON_ORTHOGONAL: "Robinson with Orthogonalization",
              ROBINSON_CROSSFIT: "Robinson with Cross-fitting"}

    @classmethod
    def from_str(cls, value):
        """ Accepts a tag or a command line alias """
        if value in cls.ORDER:
            return value
        try:
            return cls.ALIASES[str(value).lower()]
        except KeyError:
            raise ValueError("Unknown estimator: " + repr(value))


class FitResult(object):
    """
    Coefficients, their covariance and diagnostics from one estimator.

    The covariance is symmetrized on construction and the standard errors
    are its square-rooted diagonal.
    """

    def __init__(self, beta, covariance, estimator_tag, diagnostics=None,
                 column_names=None):
        self.beta = np.asarray(beta, dtype=float).reshape(-1)
        covariance = np.asarray(covariance, dtype=float)
        self.covariance = (covariance + covariance.T) / 2.0
        if self.covariance.shape != (len(self.beta), len(self.beta)):
            raise ValueError("covariance shape {} does not match {} "
                             "coefficients".format(self.covariance.shape,
                                                   len(self.beta)))
        self.estimator_tag = EstimatorTag.from_str(estimator_tag)
        self.diagnostics = dict(diagnostics or {})
        self.column_names = tuple(column_names) if column_names else tuple(
            "x{}".format(k + 1) for k in range(len(self.beta)))

    @property
    def standard_errors(self):
        return np.sqrt(np.clip(np.diag(self.covariance), 0.0, None))

    def to_dict(self):
        return {"beta": self.beta.tolist(),
                "covariance": self.covariance.tolist(),
                "standard_errors": self.standard_errors.tolist(),
                "estimator_tag": self.estimator_tag,
                "column_names": list(self.column_names),
                "diagnostics": _plain(self.diagnostics)}

    @classmethod
    def from_dict(cls, data):
        return cls(data["beta"], data["covariance"], data["estimator_tag"],
                   diagnostics=data.get("diagnostics"),
                   column_names=data.get("column_names"))

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), sort_keys=True, ignore_nan=True,
                          **kwargs)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return "FitResult({}, beta={})".format(
            self.estimator_tag, np.array2string(self.beta, precision=3))


def _plain(value):
    """ numpy scalars and arrays to JSON-able python values """
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    return value
