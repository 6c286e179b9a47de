# -*- coding: utf-8 -*-
"""
Per-observation moment algebra.

Every function takes an observation-like object with attributes y, d, x
(an Observation, or a Dataset for all rows at once) together with a
NuisanceValues of matching shape, and returns one K-vector per row.

Notation, with Xr = x - mu_x(p) and Yr = y - mu_y(p):
  robinson   r_R = p Xr (Yr - p Xr'beta)
  correction a   = -p Xr (dmu_y - p dmu_x'beta_init)
  orthogonal psi = p Xr (Yr - d Xr'beta) + a (d - p)
"""
import numpy as np

__copyright__ = "Copyright 2026, selcorr developers"

FORMULATIONS = ("F1", "F2", "F3", "F4")
DEFAULT_FORMULATION = "F3"


class NuisanceValues(object):
    """
    Nuisance estimates evaluated at each observation's generated regressor.

    Attributes (n rows, or a single row without the leading axis):
      p - propensity, in (0, 1)
      mu_x, dmu_x - E[X | P = p] and its derivative, K columns
      mu_y, dmu_y - E[Y | P = p] and its derivative
      beta_init - initial coefficients entering the correction term,
                  either one K-vector or one per row
    """

    def __init__(self, p, mu_x, mu_y, dmu_x, dmu_y, beta_init=None):
        self.p = np.asarray(p, dtype=float)
        self.mu_x = np.asarray(mu_x, dtype=float)
        self.mu_y = np.asarray(mu_y, dtype=float)
        self.dmu_x = np.asarray(dmu_x, dtype=float)
        self.dmu_y = np.asarray(dmu_y, dtype=float)
        self.beta_init = None if beta_init is None \
            else np.asarray(beta_init, dtype=float)
        if np.any((self.p <= 0.0) | (self.p >= 1.0)):
            raise ValueError("propensities must lie strictly inside (0, 1)")
        for name in ("mu_x", "mu_y", "dmu_x", "dmu_y"):
            if not np.all(np.isfinite(getattr(self, name))):
                raise ValueError("non-finite {}".format(name))

    def take(self, indices):
        """ Rows at indices """
        beta_init = self.beta_init
        if beta_init is not None and beta_init.ndim == 2:
            beta_init = beta_init[indices]
        return NuisanceValues(self.p[indices], self.mu_x[indices],
                              self.mu_y[indices], self.dmu_x[indices],
                              self.dmu_y[indices], beta_init)

    def with_beta_init(self, beta_init):
        return NuisanceValues(self.p, self.mu_x, self.mu_y, self.dmu_x,
                              self.dmu_y, beta_init)

    def with_propensity(self, p):
        return NuisanceValues(p, self.mu_x, self.mu_y, self.dmu_x,
                              self.dmu_y, self.beta_init)


def _col(values):
    """ trailing axis for broadcasting a per-row scalar against K columns """
    return np.asarray(values, dtype=float)[..., np.newaxis]


def _dot(rows, beta):
    return np.sum(rows * np.asarray(beta, dtype=float), axis=-1)


def _residuals(obs, nv):
    x_res = np.asarray(obs.x, dtype=float) - nv.mu_x
    y_res = np.asarray(obs.y, dtype=float) - nv.mu_y
    return x_res, y_res


def _require_beta_init(nv):
    if nv.beta_init is None:
        raise ValueError("beta_init is required for the correction term")
    return nv.beta_init


def robinson_contribution(obs, nv, beta):
    """ p Xr (Yr - p Xr'beta) """
    x_res, y_res = _residuals(obs, nv)
    return _col(nv.p) * x_res * _col(y_res - nv.p * _dot(x_res, beta))


def alpha_correction(obs, nv):
    """ -p Xr (dmu_y - p dmu_x'beta_init) """
    beta_init = _require_beta_init(nv)
    x_res, _ = _residuals(obs, nv)
    bracket = nv.dmu_y - nv.p * _dot(nv.dmu_x, beta_init)
    return -_col(nv.p) * x_res * _col(bracket)


def selected_residual_contribution(obs, nv, beta):
    """ p Xr (Yr - d Xr'beta), the part of psi before the correction """
    x_res, y_res = _residuals(obs, nv)
    d = np.asarray(obs.d, dtype=float)
    return _col(nv.p) * x_res * _col(y_res - d * _dot(x_res, beta))


def psi_contribution(obs, nv, beta):
    """ Orthogonal moment: selected residual part plus a (d - p) """
    d = np.asarray(obs.d, dtype=float)
    return (selected_residual_contribution(obs, nv, beta) +
            alpha_correction(obs, nv) * _col(d - nv.p))


def assemble_normal_equations(dataset, nv, formulation=DEFAULT_FORMULATION):
    """
    (J, b) with beta = solve(J, b) for one of four equivalent ways of
    writing the orthogonal estimator.  With Xr, Yr residuals, P the
    propensity, D the selection indicator and beta_init the initial
    coefficients, averaging over observations:

      F1: J = P Xr (D Xr - P (D-P) dmu_x)'
          b = P Xr (Yr - (D-P) dmu_y)
      F2: J = P^2 Xr (Xr - (D-P) dmu_x)'
          b = P Xr (Yr - (D-P) (dmu_y + Xr'beta_init))
      F3: J = P D Xr Xr'
          b = P Xr (Yr - (D-P) (dmu_y - P dmu_x'beta_init))
      F4: J = P^2 Xr Xr'
          b = P Xr (Yr - (D-P) (dmu_y + (Xr - P dmu_x)'beta_init))

    Singular J is left for the solver to report.
    """
    if formulation not in FORMULATIONS:
        raise ValueError("Unknown formulation: " + repr(formulation))
    x_res, y_res = _residuals(dataset, nv)
    p = nv.p
    d = np.asarray(dataset.d, dtype=float)
    gap = d - p
    n = x_res.shape[0]
    weighted = _col(p) * x_res

    if formulation == "F1":
        right = _col(d) * x_res - _col(p * gap) * nv.dmu_x
        rhs = y_res - gap * nv.dmu_y
    elif formulation == "F2":
        beta_init = _require_beta_init(nv)
        right = _col(p) * (x_res - _col(gap) * nv.dmu_x)
        rhs = y_res - gap * (nv.dmu_y + _dot(x_res, beta_init))
    elif formulation == "F3":
        beta_init = _require_beta_init(nv)
        right = _col(d) * x_res
        rhs = y_res - gap * (nv.dmu_y - p * _dot(nv.dmu_x, beta_init))
    else:
        beta_init = _require_beta_init(nv)
        right = _col(p) * x_res
        rhs = y_res - gap * (nv.dmu_y + _dot(x_res - _col(p) * nv.dmu_x,
                                              beta_init))
    jacobian = weighted.T @ right / n
    vector = weighted.T @ rhs / n
    return jacobian, vector


def assemble_robinson_equations(dataset, nv):
    """
    Plain partialling-out: J = mean P^2 Xr Xr', b = mean P Xr Yr.
    """
    x_res, y_res = _residuals(dataset, nv)
    weighted = _col(nv.p) * x_res
    n = x_res.shape[0]
    return weighted.T @ weighted / n, weighted.T @ y_res / n
