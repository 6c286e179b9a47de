#!/usr/bin/env python
# -*- coding: utf-8 -*-
import os
import shutil
import tempfile

import numpy as np
import pandas as pd

import selcorr_test
from selcorr.base.exceptions import SchemaError, ConsistencyError
from selcorr.core import (Dataset, Observation, FoldPartition, FitResult,
                          EstimatorTag, partition_folds, validate_dataset,
                          from_csv)

__copyright__ = "Copyright 2026, selcorr developers"


class FoldPartitionTestCase(selcorr_test.TestCase):

    def test_even_split(self):
        partition = partition_folds(10, 5, self.make_rng(1))
        self.assertEqual(partition.sizes(), [2] * 5)
        np.testing.assert_array_equal(
            np.sort(np.concatenate(partition.folds)), np.arange(10))

    def test_uneven_split(self):
        partition = partition_folds(7, 2, self.make_rng(2))
        self.assertEqual(sorted(partition.sizes()), [3, 4])

    def test_deterministic_given_seed(self):
        first = partition_folds(101, 5, self.make_rng(3))
        second = partition_folds(101, 5, self.make_rng(3))
        self.assertEqual(first, second)
        self.assertNotEqual(first, partition_folds(101, 5, self.make_rng(4)))

    def test_partition_property_over_seeds(self):
        for seed in range(25):
            rng = self.make_rng(seed)
            n = int(rng.integers(3, 500))
            n_folds = int(rng.integers(2, min(n, 12) + 1))
            partition = partition_folds(n, n_folds, rng)
            sizes = partition.sizes()
            self.assertEqual(sum(sizes), n)
            self.assertLessEqual(max(sizes) - min(sizes), 1)
            for fold, rows in enumerate(partition.folds):
                self.assertTrue(np.all(partition.membership[rows] == fold))

    def test_invalid_fold_counts(self):
        for n_folds in (0, 1, 11):
            with self.assertRaises(ValueError):
                partition_folds(10, n_folds, self.make_rng(0))

    def test_outside(self):
        partition = FoldPartition([[0, 3], [1, 4], [2, 5]], 6)
        np.testing.assert_array_equal(partition.outside(0), [1, 2, 4, 5])
        np.testing.assert_array_equal(partition.outside(0, 2), [1, 4])

    def test_rejects_overlap(self):
        with self.assertRaises(ValueError):
            FoldPartition([[0, 1], [1, 2]], 3)


class ValidateDatasetTestCase(selcorr_test.TestCase):

    def test_valid_rows(self):
        dataset = validate_dataset([(1, 2.5, 0.1, 1.0),
                                    (0, 0.0, -0.3, 0.0),
                                    (1, -1.0, 2.0, 1.0)])
        self.assertEqual(dataset.n, 3)
        self.assertEqual(dataset.dim_x, 2)
        self.assertEqual(dataset.column_names, ("x1", "x2"))
        self.assertEqual(dataset.coerced_count, 0)

    def test_lenient_coercion(self):
        with self.assertLogs("selcorr.core.dataset", level="WARNING"):
            dataset = validate_dataset([(0, None, 0.5, 1.0),
                                        (0, 3.0, 0.2, 0.0),
                                        (1, 1.0, 0.1, 1.0)])
        np.testing.assert_array_equal(dataset.y, [0.0, 0.0, 1.0])
        self.assertEqual(dataset.coerced_count, 2)

    def test_strict_mode(self):
        with self.assertRaises(ConsistencyError) as ctx:
            validate_dataset([(1, 1.0, 0.1), (0, 3.0, 0.2)], strict=True)
        self.assertEqual(ctx.exception.row, 1)
        # a missing outcome is still fine when unselected
        dataset = validate_dataset([(1, 1.0, 0.1), (0, None, 0.2)],
                                   strict=True)
        self.assertEqual(dataset.y[1], 0.0)

    def test_schema_errors(self):
        with self.assertRaises(SchemaError) as ctx:
            validate_dataset([(1, 1.0, 0.1), (2, 1.0, 0.2)])
        self.assertEqual((ctx.exception.row, ctx.exception.column), (1, "d"))
        with self.assertRaises(SchemaError):
            validate_dataset([(1, 1.0, 0.1), (1, 1.0)])
        with self.assertRaises(SchemaError):
            validate_dataset([(1, 1.0, float("inf"))])
        with self.assertRaises(SchemaError):
            validate_dataset([(1, None, 0.3)])
        with self.assertRaises(SchemaError):
            validate_dataset([])
        with self.assertRaises(SchemaError):
            validate_dataset(pd.DataFrame({"d": [1], "x1": [0.2]}))

    def test_observation_invariants(self):
        obs = Observation(0.0, 0, [1.0, 2.0])
        self.assertEqual(obs.x.tolist(), [1.0, 2.0])
        with self.assertRaises(ConsistencyError):
            Observation(1.0, 0, [1.0])
        with self.assertRaises(SchemaError):
            Observation(1.0, 3, [1.0])


class DatasetCsvTestCase(selcorr_test.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir, ignore_errors=True)

    def test_csv_round_trip(self):
        """ ingesting a written dataset reproduces it exactly """
        rng = self.make_rng(5)
        d = (rng.random(50) > 0.4).astype(float)
        x = rng.normal(size=(50, 3))
        y = (x.sum(axis=1) + rng.normal(size=50)) * d
        dataset = Dataset(y, d, x, ["age", "educ", "tenure"])
        path = os.path.join(self.tmpdir, "sample.csv")
        dataset.to_csv(path)
        self.assertEqual(from_csv(path), dataset)

    def test_csv_with_missing_outcomes(self):
        path = os.path.join(self.tmpdir, "wages.csv")
        with open(path, 'w') as f:
            f.write("d,y,educ,exper\n1,2.5,12,3\n0,,16,1\n1,3.0,10,7\n")
        dataset = from_csv(path)
        self.assertEqual(dataset.column_names, ("educ", "exper"))
        np.testing.assert_array_equal(dataset.y, [2.5, 0.0, 3.0])
        self.assertEqual(dataset.coerced_count, 1)

    def test_csv_bad_selection(self):
        path = os.path.join(self.tmpdir, "bad.csv")
        with open(path, 'w') as f:
            f.write("d,y,x1\n1,1.0,0.5\n2,1.0,0.1\n")
        with self.assertRaises(SchemaError):
            from_csv(path)

    def test_subset_and_scaling(self):
        dataset = Dataset([1.0, 0.0, 2.0], [1, 0, 1], [[1.0], [2.0], [3.0]])
        self.assertEqual(dataset.subset([2, 0]).y.tolist(), [2.0, 1.0])
        self.assertEqual(dataset.with_outcome_scaled(2.0).y.tolist(),
                         [2.0, 0.0, 4.0])
        self.assertAlmostEqual(dataset.selection_rate(), 2.0 / 3.0)
        with self.assertRaises(ValueError):
            dataset.x[0, 0] = 5.0


class FitResultTestCase(selcorr_test.TestCase):

    def test_symmetrized_covariance(self):
        covariance = np.array([[4.0, 1.0], [1.0 + 1e-14, 9.0]])
        fit = FitResult([1.0, 2.0], covariance, "lr")
        self.assertEqual(fit.estimator_tag, EstimatorTag.LOCALLY_ROBUST)
        np.testing.assert_array_equal(fit.covariance, fit.covariance.T)
        self.assertArrayClose(fit.standard_errors, [2.0, 3.0], atol=1e-12)
        with self.assertRaises(ValueError):
            FitResult([1.0], np.eye(2), "lr")

    def test_json_round_trip(self):
        fit = FitResult([0.5, -1.5], np.diag([0.01, 0.04]), "robinson",
                        diagnostics={"condition_number": np.float64(12.5),
                                     "fold_selection_rates": np.array(
                                         [0.5, 0.4])},
                        column_names=["educ", "exper"])
        back = FitResult.from_json(fit.to_json())
        np.testing.assert_array_equal(back.beta, fit.beta)
        np.testing.assert_array_equal(back.covariance, fit.covariance)
        self.assertEqual(back.estimator_tag, EstimatorTag.ROBINSON)
        self.assertEqual(back.column_names, ("educ", "exper"))
        self.assertEqual(back.diagnostics["fold_selection_rates"], [0.5, 0.4])
        self.assertEqual(set(fit.to_dict()), {"beta", "covariance",
                                              "standard_errors",
                                              "estimator_tag", "column_names",
                                              "diagnostics"})

    def test_tag_aliases(self):
        self.assertEqual(EstimatorTag.from_str("robinson-cf"),
                         EstimatorTag.ROBINSON_CROSSFIT)
        self.assertEqual(EstimatorTag.from_str("RobinsonOrthogonal"),
                         EstimatorTag.ROBINSON_ORTHOGONAL)
        with self.assertRaises(ValueError):
            EstimatorTag.from_str("ahn-powell")
