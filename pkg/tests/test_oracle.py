#!/usr/bin/env python
# -*- coding: utf-8 -*-
import numpy as np
from scipy.stats import norm

import selcorr_test
from selcorr.base.exceptions import AssumptionViolationError
from selcorr.dgp import IndexForm
from selcorr.oracle import (AnalyticModel, DesignIndex, LinearIndex,
                            SquareIndex, Link, link_value, link_derivative,
                            selectivity_correction,
                            selectivity_correction_derivative, upsilon,
                            oracle_beta_pair, oracle_beta_remaining,
                            oracle_beta_discrete, oracle_recover_g,
                            oracle_beta_single_continuous, oracle_full_beta)

__copyright__ = "Copyright 2026, selcorr developers"

POINT = (0.5, 0.3)
OTHER_POINT = (-0.5, 0.7)


def central_difference(function, x, step=1e-6):
    x = np.asarray(x, dtype=float)
    grad = np.empty(len(x))
    for k in range(len(x)):
        shift = np.zeros(len(x))
        shift[k] = step
        grad[k] = (function(x + shift) - function(x - shift)) / (2 * step)
    return grad


class PairTestCase(selcorr_test.TestCase):

    def test_benchmark_pair(self):
        model = AnalyticModel.benchmark(rho=0.5)
        beta_1, beta_2 = oracle_beta_pair(model, POINT, OTHER_POINT, 0, 1)
        self.assertAlmostEqual(beta_1, 1.0, delta=1e-8)
        self.assertAlmostEqual(beta_2, 1.0, delta=1e-8)

    def test_pair_order(self):
        beta = np.arange(1.0, 11.0)
        model = AnalyticModel.benchmark(beta=beta, rho=-0.3)
        beta_2, beta_1 = oracle_beta_pair(model, POINT, OTHER_POINT, 1, 0)
        self.assertAlmostEqual(beta_1, 1.0, delta=1e-8)
        self.assertAlmostEqual(beta_2, 2.0, delta=1e-8)

    def test_without_selectivity(self):
        beta = np.linspace(-2.0, 2.0, 10)
        model = AnalyticModel.benchmark(beta=beta, rho=0.0)
        pair = oracle_beta_pair(model, POINT, OTHER_POINT, 0, 1)
        self.assertArrayClose(pair, beta[:2], atol=1e-8)

    def test_same_index_rejected(self):
        with self.assertRaises(ValueError):
            oracle_beta_pair(AnalyticModel.benchmark(), POINT, OTHER_POINT,
                             0, 0)

    def test_single_index_models_rejected(self):
        rng = self.make_rng(91)
        eta = np.array([0.2, 0.1] + [0.0] * 8)
        models = [AnalyticModel(LinearIndex(eta, c=0.3), np.ones(10), 0.5,
                                link=link)
                  for link in (Link.LINEAR, Link.PROBIT, Link.LOGIT)]
        models.append(AnalyticModel(LinearIndex(np.ones(10)), np.ones(10),
                                    0.5))
        for model in models:
            for trial in range(5):
                xc = rng.uniform(0.0, 1.0, 2)
                xc_tilde = rng.uniform(0.0, 1.0, 2)
                self.assertLess(abs(np.linalg.det(
                    upsilon(model, xc, xc_tilde, 0, 1))), 1e-8)
                with self.assertRaises(AssumptionViolationError):
                    oracle_beta_pair(model, xc, xc_tilde, 0, 1)


class RemainingTestCase(selcorr_test.TestCase):

    def setUp(self):
        self.beta = np.array([1.5, -0.5, 2.0, 0.25, -1.0])
        self.model = AnalyticModel(SquareIndex(c=-0.3, weight=0.5),
                                   self.beta, 0.6, continuous=(0, 1, 2))

    def test_remaining_coefficient(self):
        for xc in ((0.5, 0.2, 0.1), (-0.9, 0.4, -0.3)):
            self.assertAlmostEqual(
                oracle_beta_remaining(self.model, xc, 0, 2, self.beta[0]),
                self.beta[2], delta=1e-8)

    def test_without_selectivity(self):
        model = AnalyticModel(SquareIndex(c=-0.3), self.beta, 0.0,
                              continuous=(0, 1, 2))
        xc = (0.5, 0.2, 0.1)
        self.assertAlmostEqual(oracle_beta_remaining(model, xc, 0, 2, 1.5),
                               model.grad_m0(xc)[2], places=14)

    def test_agrees_with_pair(self):
        model = AnalyticModel.benchmark(beta=np.linspace(0.5, 5.0, 10),
                                        rho=0.5)
        beta_1, beta_2 = oracle_beta_pair(model, POINT, OTHER_POINT, 0, 1)
        self.assertAlmostEqual(
            oracle_beta_remaining(model, POINT, 0, 1, beta_1), beta_2,
            delta=1e-10)

    def test_invalid_pivot(self):
        with self.assertRaises(AssumptionViolationError):
            oracle_beta_remaining(self.model, (0.0, 0.2, 0.1), 0, 2, 1.5)


class DiscreteTestCase(selcorr_test.TestCase):

    def test_benchmark_discrete(self):
        model = AnalyticModel.benchmark(rho=0.5)
        self.assertAlmostEqual(oracle_beta_discrete(model, POINT, 1.0, 0),
                               1.0, delta=1e-8)

    def test_zero_discrete_block(self):
        beta = np.array([1.0, 1.0] + [0.0] * 8)
        model = AnalyticModel.benchmark(beta=beta, rho=0.5)
        for k in range(8):
            self.assertAlmostEqual(oracle_beta_discrete(model, POINT, 1.0, k),
                                   0.0, delta=1e-10)

    def test_scale_invariance(self):
        beta = np.linspace(1.0, 3.0, 10)
        model = AnalyticModel.benchmark(beta=beta, rho=0.5)
        once = oracle_beta_discrete(model, POINT, 1.0, 3)
        twice = oracle_beta_discrete(model, POINT, 2.0, 3)
        self.assertAlmostEqual(once, beta[5], delta=1e-8)
        self.assertAlmostEqual(once, twice, delta=1e-10)

    def test_zero_value_rejected(self):
        with self.assertRaises(ValueError):
            oracle_beta_discrete(AnalyticModel.benchmark(), POINT, 0, 0)

    def test_shift_inside_propensity_range(self):
        # h ranges over (-1, 1.5) on the support; the shift adds 0.3
        model = AnalyticModel(LinearIndex([1.0, 0.5, 0.3]), np.ones(3), 0.5,
                              support=[(-1.0, 1.0), (0.0, 1.0)])
        self.assertAlmostEqual(oracle_beta_discrete(model, (0.2, 0.5), 1.0, 0),
                               1.0, delta=1e-8)

    def test_shift_outside_propensity_range(self):
        # the shift of 5 moves h to 5.45, above every value on the support
        model = AnalyticModel(LinearIndex([1.0, 0.5, 5.0]), np.ones(3), 0.5,
                              support=[(-1.0, 1.0), (0.0, 1.0)])
        lo, hi = model.pi0_range()
        self.assertLess(hi, norm.cdf(1.5))
        self.assertGreater(lo, norm.cdf(-1.0))
        with self.assertRaises(AssumptionViolationError):
            oracle_beta_discrete(model, (0.2, 0.5), 1.0, 0)

    def test_support_length_checked(self):
        with self.assertRaises(ValueError):
            AnalyticModel(SquareIndex(), np.ones(3), 0.5,
                          support=[(0.0, 1.0)])


class SelectivityTestCase(selcorr_test.TestCase):

    def test_values(self):
        model = AnalyticModel.benchmark(rho=0.5)
        self.assertEqual(float(model.g(1.0)), 0.0)
        self.assertAlmostEqual(float(model.g(0.5)), -norm.pdf(0.0),
                               places=14)
        self.assertAlmostEqual(float(model.g(0.5)), -0.3989, places=4)
        np.testing.assert_array_equal(
            oracle_recover_g(AnalyticModel.benchmark(rho=0.0),
                             [0.1, 0.5, 0.9, 1.0]), np.zeros(4))

    def test_monte_carlo_conditional_mean(self):
        rng = self.make_rng(92)
        rho = 0.5
        eps = rng.standard_normal(1000000)
        u = rho * eps + np.sqrt(1.0 - rho ** 2) * rng.standard_normal(
            1000000)
        v = norm.cdf(eps)
        grid = np.array([0.2, 0.5, 0.8])
        analytic = oracle_recover_g(AnalyticModel.benchmark(rho=rho), grid)
        for point, value in zip(grid, analytic):
            self.assertLess(abs(u[v <= point].mean() - value), 0.01)

    def test_domain(self):
        with self.assertRaises(ValueError):
            selectivity_correction(0.5, 0.0)
        with self.assertRaises(ValueError):
            selectivity_correction(0.5, 1.5)
        with self.assertRaises(ValueError):
            selectivity_correction_derivative(0.5, 1.0)

    def test_derivative_matches_finite_difference(self):
        for v in (0.05, 0.3, 0.5, 0.9):
            numeric = (selectivity_correction(0.7, v + 1e-6) -
                       selectivity_correction(0.7, v - 1e-6)) / 2e-6
            self.assertAlmostEqual(
                float(selectivity_correction_derivative(0.7, v)),
                float(numeric), delta=1e-6 * max(1.0, abs(float(numeric))))


class DerivativeTestCase(selcorr_test.TestCase):

    def test_links(self):
        for link in (Link.PROBIT, Link.LOGIT, Link.LINEAR):
            for t in (0.2, 0.5, 0.7):
                numeric = (link_value(link, t + 1e-6) -
                           link_value(link, t - 1e-6)) / 2e-6
                self.assertAlmostEqual(float(link_derivative(link, t)),
                                       float(numeric), delta=1e-8)
        with self.assertRaises(ValueError):
            link_value(Link.LINEAR, 1.2)
        with self.assertRaises(ValueError):
            link_value("cloglog", 0.1)

    def test_design_indices(self):
        rng = self.make_rng(93)
        for h_form in IndexForm.ALL:
            model = AnalyticModel.benchmark(rho=0.5, h_form=h_form)
            for trial in range(4):
                x = np.concatenate([[rng.uniform(0.3, 1.0),
                                     rng.uniform(0.3, 0.9)],
                                    rng.integers(0, 2, 8)]).astype(float)
                self.assertArrayClose(model.grad_pi(x),
                                      central_difference(model.pi, x),
                                      atol=1e-6)
                self.assertArrayClose(model.grad_m(x),
                                      central_difference(model.m, x),
                                      atol=1e-6)

    def test_square_index(self):
        model = AnalyticModel(SquareIndex(c=-0.2), np.ones(4), 0.4,
                              link=Link.LOGIT, continuous=(0, 1))
        x = np.array([0.6, -0.4, 1.0, 0.0])
        self.assertArrayClose(model.grad_m(x),
                              central_difference(model.m, x), atol=1e-6)

    def test_log_index_at_zero(self):
        index = DesignIndex(IndexForm.LOG)
        with self.assertRaises(ValueError):
            index.gradient(np.zeros(10))

    def test_model_arguments(self):
        with self.assertRaises(ValueError):
            AnalyticModel(SquareIndex(), np.ones(3), 1.0)
        with self.assertRaises(ValueError):
            AnalyticModel(SquareIndex(), np.ones(3), 0.5, link="cloglog")
        with self.assertRaises(ValueError):
            DesignIndex("Cubic")


class FullRecoveryTestCase(selcorr_test.TestCase):

    def test_random_configurations(self):
        rng = self.make_rng(94)
        recovered = 0
        while recovered < 20:
            beta = rng.normal(size=10)
            model = AnalyticModel.benchmark(beta=beta,
                                            rho=rng.uniform(-0.8, 0.8),
                                            c=rng.uniform(-0.5, 0.5))
            xc = np.array([rng.uniform(-1.0, 1.0), rng.uniform(0.05, 0.95)])
            xc_tilde = np.array([rng.uniform(-1.0, 1.0),
                                 rng.uniform(0.05, 0.95)])
            if abs(np.linalg.det(upsilon(model, xc, xc_tilde, 0, 1))) < 1e-2:
                continue
            self.assertArrayClose(oracle_full_beta(model, xc, xc_tilde),
                                  beta, atol=1e-6)
            recovered += 1

    def test_three_continuous(self):
        beta = np.array([1.5, -0.5, 2.0, 0.25, -1.0])
        model = AnalyticModel(SquareIndex(c=-0.3), beta, 0.6,
                              continuous=(0, 1, 2))
        self.assertArrayClose(oracle_full_beta(model, (0.5, 0.2, 0.1),
                                               (-0.8, 0.3, 0.4)),
                              beta, atol=1e-8)

    def test_needs_two_continuous(self):
        model = AnalyticModel(SquareIndex(), np.ones(3), 0.5,
                              continuous=(0,))
        with self.assertRaises(ValueError):
            oracle_full_beta(model, (0.5,), (-0.5,))


class SingleContinuousTestCase(selcorr_test.TestCase):

    def setUp(self):
        self.model = AnalyticModel(SquareIndex(c=-0.5, weight=0.5),
                                   np.array([2.0, 1.0, 1.0]), 0.5,
                                   continuous=(0,))

    def test_symmetric_points(self):
        self.assertAlmostEqual(self.model.pi0([0.7]), self.model.pi0([-0.7]),
                               places=15)
        self.assertAlmostEqual(
            oracle_beta_single_continuous(self.model, 0.7, -0.7), 2.0,
            delta=1e-12)

    def test_unequal_propensity(self):
        with self.assertRaises(AssumptionViolationError):
            oracle_beta_single_continuous(self.model, 0.7, -0.6)

    def test_bad_arguments(self):
        with self.assertRaises(ValueError):
            oracle_beta_single_continuous(self.model, 0.7, 0.7)
        with self.assertRaises(ValueError):
            oracle_beta_single_continuous(AnalyticModel.benchmark(),
                                          (0.5, 0.3), (-0.5, 0.3))
