# -*- coding: utf-8 -*-
"""
Exact nuisance functions for designs with Normal selection errors.

With eps ~ N(0, 1) and U = rho eps + sqrt(1 - rho^2) e:
  pi(x)    = Phi(h(x))
  eta(p)   = E[U D | P = p] = -rho phi(Phi^-1(p))
  eta'(p)  = rho Phi^-1(p)
  mu_Y(p)  = p mu_X(p)'beta + eta(p)

mu_X(p) = E[X | pi(X) = p] has no closed form; it is smoothed from a
large covariate-only draw onto a grid and interpolated by a cubic spline,
so its derivative is the spline's derivative.
"""
import logging

import numpy as np
import scipy.interpolate
from scipy.stats import norm

from selcorr import moments
from selcorr.dgp.design import ErrorLaw
from selcorr.dgp.sampling import generate_covariates, selection_index
from selcorr.learners.kernel import KernelFit, rule_of_thumb_bandwidth

__copyright__ = "Copyright 2026, selcorr developers"

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.NullHandler())

DEFAULT_SUPPORT = (0.01, 0.99)
DEFAULT_DRAWS = 200000
DEFAULT_GRID_SIZE = 197


class PopulationNuisances(object):
    """
    pi, mu_X, mu_Y and their derivatives for one calibrated Normal design.

    Attributes:
      design (SimulationDesign)
      support (tuple) - propensity range the spline covers
      spline (scipy.interpolate.CubicSpline) - mu_X on the support
    """

    def __init__(self, design, spline, support=DEFAULT_SUPPORT):
        self.design = design
        self.spline = spline
        self.dspline = spline.derivative()
        self.support = support

    @property
    def beta(self):
        return self.design.beta

    @property
    def rho(self):
        return self.design.rho

    def propensity(self, x):
        return norm.cdf(selection_index(self.design.h_form, x, self.design.c))

    def eta(self, p):
        return -self.rho * norm.pdf(norm.ppf(p))

    def deta(self, p):
        return self.rho * norm.ppf(p)

    def mu_x(self, p):
        return self.spline(p)

    def dmu_x(self, p):
        return self.dspline(p)

    def mu_y(self, p):
        p = np.asarray(p, dtype=float)
        return p * (self.mu_x(p) @ self.beta) + self.eta(p)

    def dmu_y(self, p):
        p = np.asarray(p, dtype=float)
        return (self.mu_x(p) @ self.beta + p * (self.dmu_x(p) @ self.beta) +
                self.deta(p))

    def conditional_outcome(self, x, p=None):
        """ E[Y | X = x] = pi(x) x'beta + eta(pi(x)) """
        p = self.propensity(x) if p is None else p
        return p * (np.asarray(x) @ self.beta) + self.eta(p)

    def values(self, x, p=None, beta_init=None):
        """
        NuisanceValues at propensities p (pi(x) by default); beta_init
        defaults to the true beta.
        """
        p = self.propensity(x) if p is None else np.asarray(p, dtype=float)
        self._check_support(p)
        return moments.NuisanceValues(
            p, self.mu_x(p), self.mu_y(p), self.dmu_x(p), self.dmu_y(p),
            self.beta if beta_init is None else beta_init)

    def in_support(self, p):
        return (p >= self.support[0]) & (p <= self.support[1])

    def _check_support(self, p):
        if not np.all(self.in_support(p)):
            raise ValueError("propensities outside the spline support "
                             "{}".format(self.support))


def population_nuisances(design, rng, draws=DEFAULT_DRAWS,
                         grid_size=DEFAULT_GRID_SIZE,
                         support=DEFAULT_SUPPORT):
    """
    PopulationNuisances for a calibrated design with Normal errors.

    mu_X is the Nadaraya-Watson regression of X on pi(X) over `draws`
    covariate rows, evaluated on `grid_size` equally spaced points of
    the support and joined by a cubic spline.
    """
    if design.error_law != ErrorLaw.NORMAL:
        raise ValueError("exact nuisances need Normal errors, got "
                         "{}".format(design.error_law))
    if design.c is None:
        raise ValueError("design has no calibrated constant c")
    x = generate_covariates(draws, rng)
    p = norm.cdf(selection_index(design.h_form, x, design.c))
    inside = (p >= support[0]) & (p <= support[1])
    if np.count_nonzero(inside) < 2 or np.ptp(p[inside]) == 0.0:
        raise ValueError("design has no propensity spread on {}".format(
            support))
    kernel = KernelFit(p[inside], x[inside],
                       bandwidth=rule_of_thumb_bandwidth(p[inside]))
    grid = np.linspace(support[0], support[1], grid_size)
    smoothed, _, fallbacks = kernel.evaluate(grid)
    logger.debug("Population mu_X from {} draws, bandwidth {:.4f}, {} "
                 "fallbacks".format(np.count_nonzero(inside),
                                    kernel.bandwidths[0], fallbacks))
    spline = scipy.interpolate.CubicSpline(grid, smoothed, axis=0)
    return PopulationNuisances(design, spline, support)


def trim_to_support(dataset, population):
    """ Rows of dataset whose true propensity is inside the support """
    keep = np.flatnonzero(population.in_support(
        population.propensity(dataset.x)))
    return dataset.subset(keep)


class _ConditionalObservation(object):
    """ x with D and Y replaced by their conditional means given X """

    def __init__(self, x, d, y):
        self.x = x
        self.d = d
        self.y = y


def conditional_moment_means(population, x, direction, t,
                             moment="orthogonal"):
    """
    Average over rows of x of E[m | X] when the propensity is moved to
    pi + t * direction(x) and mu_X, mu_Y, their derivatives and the
    correction term follow the moved propensity.

    Both moments are linear in D and Y, so E[m | X] is m evaluated at
    E[D | X] = pi(x) and E[Y | X].  At t = 0 both are zero row by row.

    Parameters:
      population (PopulationNuisances)
      x (ndarray) - n x K covariates with pi(x) inside the support
      direction (callable) - x -> n-vector perturbation
      t (float) - step size
      moment (str) - "orthogonal" or "robinson"

    Returns the K-vector mean.
    """
    p_true = population.propensity(x)
    moved = p_true + t * np.asarray(direction(x), dtype=float)
    nv = population.values(x, p=moved)
    obs = _ConditionalObservation(x, p_true,
                                  population.conditional_outcome(x, p_true))
    beta = population.beta
    if moment == "orthogonal":
        contributions = moments.psi_contribution(obs, nv, beta)
    elif moment == "robinson":
        contributions = moments.robinson_contribution(obs, nv, beta)
    else:
        raise ValueError("Unknown moment: " + repr(moment))
    return contributions.mean(axis=0)
