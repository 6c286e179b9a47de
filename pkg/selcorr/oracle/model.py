# -*- coding: utf-8 -*-
"""
Analytic selection models with closed-form propensity, selectivity
correction and derivatives.

A model has Normal selection errors, so with V = Phi^-1(pi(x)):
  pi(x) = f(h(x))                      f a link: probit, logit or linear
  g(v)  = E[U | eps <= Phi^-1(v)] = -rho phi(Phi^-1(v)) / v,  g(1) = 0
  m(x)  = E[Y | X = x, D = 1] = x'beta + g(pi(x))

Continuous covariates are the ones listed in `continuous`; the rest are
discrete and sit at 0 in the m0 and pi0 restrictions.
"""
import itertools

import numpy as np
from scipy.special import expit
from scipy.stats import norm

from selcorr.base import constants
from selcorr.dgp.design import IndexForm
from selcorr.dgp.sampling import index_without_constant

__copyright__ = "Copyright 2026, selcorr developers"


class Link(object):
    PROBIT = "probit"
    LOGIT = "logit"
    LINEAR = "linear"
    ALL = (PROBIT, LOGIT, LINEAR)


def link_value(link, t):
    t = np.asarray(t, dtype=float)
    if link == Link.PROBIT:
        return norm.cdf(t)
    if link == Link.LOGIT:
        return expit(t)
    if link == Link.LINEAR:
        if np.any((t <= 0.0) | (t >= 1.0)):
            raise ValueError("linear link needs an index inside (0, 1)")
        return t
    raise ValueError("Unknown link: " + repr(link))


def link_derivative(link, t):
    t = np.asarray(t, dtype=float)
    if link == Link.PROBIT:
        return norm.pdf(t)
    if link == Link.LOGIT:
        value = expit(t)
        return value * (1.0 - value)
    if link == Link.LINEAR:
        return np.ones_like(t)
    raise ValueError("Unknown link: " + repr(link))


class DesignIndex(object):
    """
    One of the simulation index forms, h(x) = c + h0(x), with its
    gradient in x.
    """

    def __init__(self, h_form=IndexForm.BENCHMARK, c=0.0):
        if h_form not in IndexForm.ALL:
            raise ValueError("Unknown index form: " + repr(h_form))
        self.h_form = h_form
        self.c = float(c)

    def value(self, x):
        return float(index_without_constant(self.h_form, x)[0]) + self.c

    def gradient(self, x):
        x = np.asarray(x, dtype=float)
        grad = np.zeros(len(x))
        if self.h_form == IndexForm.CONSTANT:
            return grad
        x1, x2 = x[0], x[1]
        if self.h_form in (IndexForm.LOG, IndexForm.LOG_EXP) and \
                (x1 == 0.0 or x2 == 0.0):
            raise ValueError("log index is not differentiable at a zero "
                             "argument")
        grad[0], grad[1] = 1.0, -1.0
        if self.h_form == IndexForm.BENCHMARK:
            grad[0] += 2.0 * x1
            grad[1] -= 2.0 * x2
        if self.h_form in (IndexForm.EXP, IndexForm.LOG_EXP):
            grad[0] += np.exp(x1)
            grad[1] -= np.exp(x2)
        if self.h_form in (IndexForm.LOG, IndexForm.LOG_EXP):
            grad[0] += 2.0 / x1
            grad[1] -= 2.0 / x2
        grad[2], grad[3] = x[3], x[2]
        grad[4], grad[5] = -x[5], -x[4]
        return grad


class LinearIndex(object):
    """ h(x) = c + x'coefficients """

    def __init__(self, coefficients, c=0.0):
        self.coefficients = np.asarray(coefficients, dtype=float)
        self.c = float(c)

    def value(self, x):
        return float(self.c + np.dot(x, self.coefficients))

    def gradient(self, x):
        return self.coefficients.copy()


class SquareIndex(object):
    """
    h(x) = c + x1^2 + weight * (x2 + ... + xK).  pi0 is symmetric in x1,
    so points x1 and -x1 share a propensity.
    """

    def __init__(self, c=0.0, weight=0.5):
        self.c = float(c)
        self.weight = float(weight)

    def value(self, x):
        x = np.asarray(x, dtype=float)
        return float(self.c + x[0] ** 2 + self.weight * np.sum(x[1:]))

    def gradient(self, x):
        x = np.asarray(x, dtype=float)
        grad = np.full(len(x), self.weight)
        grad[0] = 2.0 * x[0]
        return grad


def selectivity_correction(rho, v):
    """ g(v) = -rho phi(Phi^-1(v)) / v on (0, 1], with g(1) = 0 """
    v = np.asarray(v, dtype=float)
    if np.any((v <= 0.0) | (v > 1.0)):
        raise ValueError("g is defined on (0, 1]")
    with np.errstate(divide="ignore", invalid="ignore"):
        value = -rho * norm.pdf(norm.ppf(v)) / v
    return np.where(v == 1.0, 0.0, value)


def selectivity_correction_derivative(rho, v):
    """ g'(v) = rho (z v + phi(z)) / v^2 with z = Phi^-1(v), v in (0, 1) """
    v = np.asarray(v, dtype=float)
    if np.any((v <= 0.0) | (v >= 1.0)):
        raise ValueError("g' is defined on (0, 1)")
    z = norm.ppf(v)
    return rho * (z * v + norm.pdf(z)) / v ** 2


class AnalyticModel(object):
    """
    Selection model with closed-form conditional means.

    Parameters:
      index - object with value(x) and gradient(x)
      beta (sequence) - outcome coefficients
      rho (float) - error correlation
      link (str) - one of Link.ALL
      continuous (sequence) - positions of the continuous covariates
      support (sequence) - (lo, hi) per continuous covariate, open
        bounds, None for an unbounded side; default the real line
    """

    def __init__(self, index, beta, rho, link=Link.PROBIT,
                 continuous=(0, 1), support=None):
        if link not in Link.ALL:
            raise ValueError("Unknown link: " + repr(link))
        if not -1.0 < rho < 1.0:
            raise ValueError("rho must satisfy |rho| < 1")
        self.index = index
        self.beta = np.asarray(beta, dtype=float)
        self.rho = float(rho)
        self.link = link
        self.continuous = tuple(int(k) for k in continuous)
        self.discrete = tuple(k for k in range(len(self.beta))
                              if k not in self.continuous)
        if support is None:
            support = [(None, None)] * len(self.continuous)
        if len(support) != len(self.continuous):
            raise ValueError("support needs one (lo, hi) per continuous "
                             "covariate")
        self.support = tuple((lo, hi) for lo, hi in support)
        self._pi0_range = None

    @classmethod
    def benchmark(cls, beta=None, rho=0.5, c=0.0,
                  h_form=IndexForm.BENCHMARK):
        """ The simulation index with X1, X2 continuous and X3..X10 binary """
        beta = np.ones(constants.DIM_X) if beta is None else beta
        # X1 normal, X2 = Phi(Z2)
        return cls(DesignIndex(h_form, c), beta, rho,
                   support=[(None, None), (0.0, 1.0)])

    @property
    def dim_x(self):
        return len(self.beta)

    @property
    def beta_continuous(self):
        return self.beta[list(self.continuous)]

    @property
    def beta_discrete(self):
        return self.beta[list(self.discrete)]

    def embed(self, xc, xd=None):
        """ Full covariate vector from continuous and discrete parts """
        x = np.zeros(self.dim_x)
        x[list(self.continuous)] = np.asarray(xc, dtype=float)
        if xd is not None:
            x[list(self.discrete)] = np.asarray(xd, dtype=float)
        return x

    def pi(self, x):
        return float(link_value(self.link, self.index.value(x)))

    def grad_pi(self, x):
        return (float(link_derivative(self.link, self.index.value(x))) *
                self.index.gradient(x))

    def g(self, v):
        return selectivity_correction(self.rho, v)

    def dg(self, v):
        return selectivity_correction_derivative(self.rho, v)

    def m(self, x):
        return float(np.dot(x, self.beta) + self.g(self.pi(x)))

    def grad_m(self, x):
        return self.beta + float(self.dg(self.pi(x))) * self.grad_pi(x)

    # restrictions to the continuous block with discrete covariates at 0

    def pi0(self, xc):
        return self.pi(self.embed(xc))

    def m0(self, xc):
        return self.m(self.embed(xc))

    def grad_pi0(self, xc):
        return self.grad_pi(self.embed(xc))[list(self.continuous)]

    def grad_m0(self, xc):
        return self.grad_m(self.embed(xc))[list(self.continuous)]

    def _support_axis(self, lo, hi):
        points = constants.SUPPORT_GRID_POINTS
        if lo is None and hi is None:
            # an even count keeps 0 off the grid
            return np.linspace(-constants.SUPPORT_HALF_WIDTH,
                               constants.SUPPORT_HALF_WIDTH, points)
        lo = hi - 2.0 * constants.SUPPORT_HALF_WIDTH if lo is None else lo
        hi = lo + 2.0 * constants.SUPPORT_HALF_WIDTH if hi is None else hi
        return np.linspace(lo, hi, points + 2)[1:-1]

    def pi0_range(self):
        """
        (min, max) of pi0 over a grid on the continuous support.  Grid
        points outside the link's domain are skipped.
        """
        if self._pi0_range is None:
            axes = [self._support_axis(lo, hi) for lo, hi in self.support]
            values = []
            for xc in itertools.product(*axes):
                try:
                    values.append(self.pi0(xc))
                except ValueError:
                    continue
            if not values:
                raise ValueError("pi0 is undefined on the whole support")
            self._pi0_range = (min(values), max(values))
        return self._pi0_range

    def __repr__(self):
        return "AnalyticModel(index={}, rho={}, link={})".format(
            type(self.index).__name__, self.rho, self.link)
