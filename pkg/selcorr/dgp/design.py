# -*- coding: utf-8 -*-
"""
Simulation designs: error law, error correlation, censoring target and
selection index form, plus named presets for the robustness panels.
"""
import hashlib

import numpy as np
import simplejson as json

from selcorr.base import constants
from selcorr.base.exceptions import ConfigError

__copyright__ = "Copyright 2026, selcorr developers"


class ErrorLaw(object):
    """ Distribution of the selection error epsilon """
    NORMAL = "Normal"
    LOGISTIC = "Logistic"
    T3 = "T3"
    T2 = "T2"
    ALL = (NORMAL, LOGISTIC, T3, T2)


class IndexForm(object):
    """
    Selection index h(x); c is added to every form.

      Benchmark      x1 + x1^2 - x2 - x2^2 + x3 x4 - x5 x6
      LogVariant     x1 + log(x1^2) - x2 - log(x2^2) + x3 x4 - x5 x6
      ExpVariant     x1 + exp(x1) - x2 - exp(x2) + x3 x4 - x5 x6
      LogExpVariant  x1 + exp(x1) + log(x1^2) - x2 - exp(x2) - log(x2^2)
                     + x3 x4 - x5 x6
      Constant       0 (h = c)
    """
    BENCHMARK = "Benchmark"
    LOG = "LogVariant"
    EXP = "ExpVariant"
    LOG_EXP = "LogExpVariant"
    CONSTANT = "Constant"
    ALL = (BENCHMARK, LOG, EXP, LOG_EXP, CONSTANT)


class SimulationDesign(object):
    """
    One data generating process.

    Parameters:
      n (int) - sample size
      beta (sequence) - outcome coefficients, default ten ones
      rho (float) - U = rho eps + sqrt(1 - rho^2) e, |rho| < 1
      error_law (str) - one of ErrorLaw.ALL
      censor_target (float) - target Pr(D = 0)
      h_form (str) - one of IndexForm.ALL
      c (float) - calibrated index constant; None until calibrated
      seed (int) - seed of the calibration sample
      calibration_draws (int) - size of the calibration sample
    """

    def __init__(self, n=1000, beta=None, rho=0.5,
                 error_law=ErrorLaw.NORMAL, censor_target=0.5,
                 h_form=IndexForm.BENCHMARK, c=None, seed=0,
                 calibration_draws=constants.CALIBRATION_DRAWS):
        self.n = int(n)
        self.beta = np.ones(constants.DIM_X) if beta is None \
            else np.asarray(beta, dtype=float).reshape(-1)
        self.rho = float(rho)
        self.error_law = error_law
        self.censor_target = float(censor_target)
        self.h_form = h_form
        self.c = None if c is None else float(c)
        self.seed = int(seed)
        self.calibration_draws = int(calibration_draws)
        if self.n < 1:
            raise ValueError("n must be positive")
        if len(self.beta) != constants.DIM_X:
            raise ValueError("built-in designs have K = {} covariates".format(
                constants.DIM_X))
        if not -1.0 < self.rho < 1.0:
            raise ValueError("rho must satisfy |rho| < 1")
        if self.error_law not in ErrorLaw.ALL:
            raise ValueError("Unknown error law: " + repr(self.error_law))
        if self.h_form not in IndexForm.ALL:
            raise ValueError("Unknown index form: " + repr(self.h_form))
        if not 0.0 < self.censor_target < 1.0:
            raise ValueError("censor_target must lie in (0, 1)")

    @property
    def dim_x(self):
        return len(self.beta)

    def replace(self, **changes):
        settings = self.to_dict()
        settings.update(changes)
        return SimulationDesign(**settings)

    def to_dict(self):
        return {"n": self.n,
                "beta": self.beta.tolist(),
                "rho": self.rho,
                "error_law": self.error_law,
                "censor_target": self.censor_target,
                "h_form": self.h_form,
                "c": self.c,
                "seed": self.seed,
                "calibration_draws": self.calibration_draws}

    @classmethod
    def from_dict(cls, data):
        """
        Design from a [design] config section.  A "preset" key starts
        from the named preset; other keys override it.
        """
        data = dict(data)
        preset_name = data.pop("preset", None)
        known = set(cls().to_dict())
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError("unknown design key(s): {}".format(
                ", ".join(unknown)), column=unknown[0])
        try:
            if preset_name is not None:
                return preset(preset_name, data.pop("n", 1000)).replace(**data)
            return cls(**data)
        except (TypeError, ValueError) as ex:
            raise ConfigError("invalid design: {}".format(ex))

    def calibration_key(self):
        """
        SHA-256 over the fields that determine c.
        """
        fields = {"error_law": self.error_law,
                  "rho": self.rho,
                  "censor_target": self.censor_target,
                  "h_form": self.h_form,
                  "seed": self.seed,
                  "calibration_draws": self.calibration_draws}
        text = json.dumps(fields, sort_keys=True)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    def __repr__(self):
        return ("SimulationDesign(n={}, rho={}, error_law={}, "
                "censor_target={}, h_form={}, c={})".format(
                    self.n, self.rho, self.error_law, self.censor_target,
                    self.h_form, self.c))


_PRESETS = {
    "benchmark": {},
    "rho_high": {"rho": 0.75},
    "censor_high": {"censor_target": 0.75},
    "rho_censor_high": {"rho": 0.75, "censor_target": 0.75},
    "logistic": {"error_law": ErrorLaw.LOGISTIC},
    "t3": {"error_law": ErrorLaw.T3},
    "t2": {"error_law": ErrorLaw.T2},
    "log_index": {"h_form": IndexForm.LOG},
    "exp_index": {"h_form": IndexForm.EXP},
    "logexp_index": {"h_form": IndexForm.LOG_EXP},
}

PRESET_NAMES = tuple(sorted(_PRESETS))


def preset(name, n=1000, **overrides):
    """
    Named design: the benchmark (rho 0.5, 50% censoring, Normal errors,
    Benchmark index) with one panel's changes applied.
    """
    try:
        settings = dict(_PRESETS[name])
    except KeyError:
        raise ValueError("Unknown design preset: " + repr(name))
    settings.update(overrides)
    return SimulationDesign(n=n, **settings)
