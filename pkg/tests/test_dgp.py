#!/usr/bin/env python
# -*- coding: utf-8 -*-
import os
import shutil
import tempfile

import numpy as np
import simplejson as json
from scipy.stats import norm

import selcorr_test
from selcorr.base import constants
from selcorr.base.exceptions import CalibrationError, ConfigError
from selcorr.dgp import (SimulationDesign, ErrorLaw, IndexForm, preset,
                         PRESET_NAMES, generate_covariates, draw_errors,
                         selection_index, draw_raw_sample, generate_sample,
                         generate_repeated_sample, latent_correlation,
                         calibrate_constant, calibrated, censoring_rate,
                         load_calibration_cache, population_nuisances,
                         trim_to_support)

__copyright__ = "Copyright 2026, selcorr developers"

LARGE = 1000000


class CovariateTestCase(selcorr_test.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.x = generate_covariates(LARGE, np.random.default_rng(71))

    def test_shape_and_support(self):
        self.assertEqual(self.x.shape, (LARGE, 10))
        self.assertTrue(np.all((self.x[:, 1] > 0) & (self.x[:, 1] < 1)))
        self.assertTrue(np.all(np.isin(self.x[:, 2:], [0.0, 1.0])))

    def test_marginal_means(self):
        means = self.x.mean(axis=0)
        self.assertLess(abs(means[0]), 0.01)
        for k in range(1, 10):
            self.assertLess(abs(means[k] - 0.5), 0.01)

    def test_latent_adjacent_correlation(self):
        corr = np.corrcoef(self.x[:, 0], norm.ppf(self.x[:, 1]))[0, 1]
        self.assertLess(abs(corr - 0.5), 0.02)

    def test_non_adjacent_independence(self):
        corr = np.corrcoef(self.x[:, 0], 2.0 * self.x[:, 2] - 1.0)[0, 1]
        self.assertLess(abs(corr), 0.02)

    def test_latent_matrix_is_positive_definite(self):
        matrix = latent_correlation()
        self.assertEqual(matrix[3, 4], 0.5)
        self.assertEqual(matrix[3, 5], 0.0)
        self.assertAlmostEqual(np.linalg.eigvalsh(matrix).min(),
                               1.0 - np.cos(np.pi / 11.0), places=12)

    def test_rejects_empty(self):
        with self.assertRaises(ValueError):
            generate_covariates(0, np.random.default_rng(0))


class ErrorLawTestCase(selcorr_test.TestCase):

    def draw(self, law, rho):
        return draw_errors(law, rho, LARGE, self.make_rng(72))

    def test_independent_at_zero_rho(self):
        eps, u = self.draw(ErrorLaw.NORMAL, 0.0)
        self.assertLess(abs(np.corrcoef(eps, u)[0, 1]), 0.01)

    def test_normal_correlation(self):
        eps, u = self.draw(ErrorLaw.NORMAL, 0.5)
        self.assertLess(abs(np.corrcoef(eps, u)[0, 1] - 0.5), 0.01)
        self.assertLess(abs(u.var() - 1.0), 0.01)

    def test_unit_variance_laws(self):
        eps, _ = self.draw(ErrorLaw.LOGISTIC, 0.5)
        self.assertLess(abs(eps.var() - 1.0), 0.01)
        eps, _ = self.draw(ErrorLaw.T3, 0.5)
        self.assertLess(abs(np.median(eps)), 0.01)
        # E|t3| = 2 sqrt(3) / pi
        self.assertLess(abs(np.mean(np.abs(eps)) - 2.0 / np.pi), 0.01)

    def test_t2_is_raw(self):
        eps, u = self.draw(ErrorLaw.T2, 0.5)
        # P(|t2| > 1) = 1 - 1/sqrt(3)
        self.assertLess(abs(np.mean(np.abs(eps) > 1.0) -
                            (1.0 - 1.0 / np.sqrt(3.0))), 0.01)
        noise = (u - 0.5 * eps) / np.sqrt(0.75)
        self.assertLess(abs(noise.var() - 1.0), 0.01)

    def test_unknown_law(self):
        with self.assertRaises(ValueError):
            draw_errors("Cauchy", 0.5, 10, self.make_rng(0))


class SelectionIndexTestCase(selcorr_test.TestCase):

    def test_benchmark_examples(self):
        self.assertEqual(selection_index(IndexForm.BENCHMARK, np.zeros(10),
                                         0.0), 0.0)
        x = np.array([1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0])
        self.assertEqual(selection_index(IndexForm.BENCHMARK, x, 0.0), 1.0)
        self.assertEqual(selection_index(IndexForm.BENCHMARK, x, -0.25),
                         0.75)

    def test_exp_variant_at_zero(self):
        self.assertEqual(selection_index(IndexForm.EXP, np.zeros(10), 0.0),
                         0.0)

    def test_log_variants(self):
        x = np.array([2.0, 0.5, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0])
        expected = 2.0 + np.log(4.0) - 0.5 - np.log(0.25) + 1.0
        self.assertAlmostEqual(selection_index(IndexForm.LOG, x, 0.0),
                               expected, places=12)
        self.assertAlmostEqual(
            selection_index(IndexForm.LOG_EXP, x, 0.0),
            expected + np.exp(2.0) - np.exp(0.5), places=12)

    def test_log_of_zero_never_selects(self):
        x = np.zeros((3, 10))
        x[:, 1] = 0.5
        x[1, 0] = 1.0
        values = selection_index(IndexForm.LOG, x, 5.0)
        self.assertEqual(values[0], constants.LOG_OF_ZERO)
        self.assertEqual(values[2], constants.LOG_OF_ZERO)
        self.assertGreater(values[1], constants.LOG_OF_ZERO)

    def test_constant_form(self):
        values = selection_index(IndexForm.CONSTANT, np.ones((4, 10)), 0.3)
        np.testing.assert_array_equal(values, np.full(4, 0.3))

    def test_wrong_width(self):
        with self.assertRaises(ValueError):
            selection_index(IndexForm.BENCHMARK, np.zeros(9), 0.0)


class CalibrationTestCase(selcorr_test.TestCase):

    def setUp(self):
        self.tempdir = tempfile.mkdtemp(prefix="selcorr_test_")

    def tearDown(self):
        shutil.rmtree(self.tempdir, ignore_errors=True)

    def test_constant_index(self):
        design = SimulationDesign(h_form=IndexForm.CONSTANT)
        self.assertLess(abs(calibrate_constant(design)), 0.01)
        design = design.replace(censor_target=0.75)
        self.assertLess(abs(calibrate_constant(design) - norm.ppf(0.25)),
                        0.01)

    def test_deterministic(self):
        design = preset("benchmark", calibration_draws=50000, seed=3)
        self.assertEqual(calibrate_constant(design),
                         calibrate_constant(design))

    def test_benchmark_censoring(self):
        design = calibrated(preset("benchmark", n=100000))
        dataset = generate_sample(design, self.make_rng(73))
        self.assertLess(abs(1.0 - dataset.selection_rate() - 0.5), 0.01)

    def test_high_censoring_preset(self):
        design = calibrated(preset("censor_high", n=100000,
                                   calibration_draws=200000))
        dataset = generate_sample(design, self.make_rng(74))
        self.assertLess(abs(1.0 - dataset.selection_rate() - 0.75), 0.01)

    def test_censoring_rate(self):
        thresholds = np.array([-1.0, 0.0, 1.0, 2.0])
        self.assertEqual(censoring_rate(thresholds, 0.5), 0.5)
        self.assertEqual(censoring_rate(thresholds, -2.0), 1.0)

    def test_target_range(self):
        design = SimulationDesign(censor_target=0.99)
        with self.assertRaises(ValueError):
            calibrate_constant(design)

    def test_cache(self):
        path = os.path.join(self.tempdir, "cache.json")
        design = preset("benchmark", calibration_draws=50000)
        first = calibrated(design, cache_path=path)
        cache = load_calibration_cache(path)
        self.assertEqual(list(cache), [design.calibration_key()])
        self.assertEqual(cache[design.calibration_key()]["c"], first.c)
        with open(path, 'w') as fp:
            json.dump({design.calibration_key(): {"c": 0.125}}, fp)
        self.assertEqual(calibrated(design, cache_path=path).c, 0.125)
        # n does not enter the key
        self.assertEqual(calibrated(design.replace(n=250), path).c, 0.125)
        self.assertEqual(calibrated(design.replace(c=0.5), path).c, 0.5)

    def test_corrupt_cache(self):
        path = os.path.join(self.tempdir, "cache.json")
        with open(path, 'w') as fp:
            fp.write("{not json")
        with self.assertRaises(CalibrationError):
            calibrated(preset("benchmark"), cache_path=path)

    def test_missing_cache_is_empty(self):
        self.assertEqual(load_calibration_cache(
            os.path.join(self.tempdir, "absent.json")), {})


class SampleTestCase(selcorr_test.TestCase):

    def setUp(self):
        self.design = preset("benchmark", n=2000, c=0.1)

    def test_row_invariants(self):
        raw = draw_raw_sample(self.design, self.make_rng(75))
        index = selection_index(self.design.h_form, raw.x, self.design.c)
        np.testing.assert_array_equal(raw.d, (index >= raw.eps).astype(float))
        np.testing.assert_array_equal(raw.y * (1.0 - raw.d), 0.0)
        selected = raw.d == 1
        self.assertArrayClose(raw.y[selected],
                              raw.x[selected] @ self.design.beta +
                              raw.u[selected], atol=1e-12)

    def test_deterministic(self):
        first = generate_sample(self.design, self.make_rng(76))
        second = generate_sample(self.design, self.make_rng(76))
        np.testing.assert_array_equal(first.x, second.x)
        np.testing.assert_array_equal(first.y, second.y)
        np.testing.assert_array_equal(first.d, second.d)

    def test_uncalibrated(self):
        with self.assertRaises(ValueError):
            generate_sample(preset("benchmark"), self.make_rng(0))

    def test_no_selection_bias_without_correlation(self):
        design = preset("benchmark", n=100000, rho=0.0, c=0.0)
        dataset = generate_sample(design, self.make_rng(77))
        selected = dataset.d == 1
        beta, _, _, _ = np.linalg.lstsq(dataset.x[selected],
                                        dataset.y[selected], rcond=None)
        self.assertArrayClose(beta, design.beta, atol=0.05)

    def test_repeated_sample(self):
        dataset = generate_repeated_sample(self.design.replace(n=4),
                                           self.make_rng(78))
        self.assertEqual(dataset.n, 4)
        np.testing.assert_array_equal(dataset.x[:2], dataset.x[2:])
        np.testing.assert_array_equal(dataset.y[:2], dataset.y[2:])
        self.assertFalse(np.array_equal(dataset.x[0], dataset.x[1]))
        big = generate_repeated_sample(self.design, self.make_rng(79))
        np.testing.assert_array_equal(big.x[:1000], big.x[1000:])
        np.testing.assert_array_equal(big.d[:1000], big.d[1000:])

    def test_repeated_needs_even_n(self):
        with self.assertRaises(ValueError):
            generate_repeated_sample(self.design.replace(n=5),
                                     self.make_rng(0))


class DesignTestCase(selcorr_test.TestCase):

    def test_presets(self):
        self.assertIn("benchmark", PRESET_NAMES)
        self.assertEqual(len(PRESET_NAMES), 10)
        design = preset("rho_censor_high", n=250)
        self.assertEqual((design.n, design.rho, design.censor_target),
                         (250, 0.75, 0.75))
        self.assertEqual(preset("t2").error_law, ErrorLaw.T2)
        with self.assertRaises(ValueError):
            preset("nonsense")

    def test_dict_round_trip(self):
        design = preset("logexp_index", n=500, c=-0.3)
        again = SimulationDesign.from_dict(design.to_dict())
        self.assertEqual(again.to_dict(), design.to_dict())

    def test_preset_in_config(self):
        design = SimulationDesign.from_dict({"preset": "rho_high", "n": 250,
                                             "censor_target": 0.6})
        self.assertEqual((design.n, design.rho, design.censor_target),
                         (250, 0.75, 0.6))

    def test_invalid_config(self):
        for bad in ({"bogus": 1}, {"rho": 1.0}, {"error_law": "Cauchy"},
                    {"h_form": "Cubic"}, {"censor_target": 0.0},
                    {"beta": [1.0, 2.0]}):
            with self.assertRaises(ConfigError):
                SimulationDesign.from_dict(bad)

    def test_calibration_key(self):
        design = preset("benchmark")
        self.assertEqual(design.calibration_key(),
                         design.replace(n=50, c=1.0).calibration_key())
        self.assertNotEqual(design.calibration_key(),
                            design.replace(rho=0.75).calibration_key())


class PopulationTestCase(selcorr_test.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.design = preset("benchmark", c=-0.2)
        cls.population = population_nuisances(cls.design,
                                               np.random.default_rng(80),
                                               draws=50000)

    def test_closed_forms(self):
        self.assertAlmostEqual(self.population.eta(0.5),
                               -0.5 * norm.pdf(0.0), places=14)
        self.assertAlmostEqual(self.population.deta(0.5), 0.0, places=14)
        x = np.zeros((1, 10))
        self.assertAlmostEqual(self.population.propensity(x)[0],
                               norm.cdf(-0.2), places=14)

    def test_mu_y_matches_conditional_outcome(self):
        rng = self.make_rng(81)
        x = generate_sample(self.design.replace(n=50000), rng).x
        p = self.population.propensity(x)
        inside = self.population.in_support(p)
        outcome = self.population.conditional_outcome(x[inside])
        # mu_Y(p) averages E[Y | X] within narrow propensity bins
        edges = np.linspace(0.2, 0.8, 7)
        bins = np.digitize(p[inside], edges)
        for b in range(1, len(edges)):
            members = bins == b
            centre = p[inside][members].mean()
            self.assertLess(abs(outcome[members].mean() -
                                self.population.mu_y(centre)), 0.15)

    def test_derivatives(self):
        step = 1e-5
        for p in (0.2, 0.5, 0.8):
            numeric = (self.population.mu_y(p + step) -
                       self.population.mu_y(p - step)) / (2 * step)
            self.assertAlmostEqual(float(self.population.dmu_y(p)),
                                   float(numeric), delta=1e-4)

    def test_values(self):
        x = generate_sample(self.design.replace(n=200), self.make_rng(82)).x
        p = self.population.propensity(x)
        x = x[self.population.in_support(p)]
        nv = self.population.values(x)
        self.assertEqual(nv.mu_x.shape, x.shape)
        np.testing.assert_array_equal(nv.beta_init, self.design.beta)
        with self.assertRaises(ValueError):
            self.population.values(x, p=np.full(len(x), 0.999))

    def test_trim(self):
        dataset = generate_sample(self.design.replace(n=500),
                                  self.make_rng(83))
        trimmed = trim_to_support(dataset, self.population)
        p = self.population.propensity(trimmed.x)
        self.assertTrue(np.all(self.population.in_support(p)))
        self.assertLessEqual(trimmed.n, dataset.n)

    def test_requirements(self):
        with self.assertRaises(ValueError):
            population_nuisances(preset("logistic", c=0.0),
                                 self.make_rng(0), draws=100)
        with self.assertRaises(ValueError):
            population_nuisances(preset("benchmark"), self.make_rng(0),
                                 draws=100)
