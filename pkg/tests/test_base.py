#!/usr/bin/env python
# -*- coding: utf-8 -*-
import logging
import os
import shutil
import tempfile
import threading

import numpy as np

import selcorr_test
from selcorr.base import algorithms, formatters, parsers
from selcorr.base.exceptions import (SchemaError, DegenerateDesignError,
                                     with_linalg_translation)
from selcorr.base.log import (configure_tool_logging, make_logdir,
                              TOOL_DEBUGLOG_NAME)
from selcorr.base.threading import Parallel

__copyright__ = "Copyright 2026, selcorr developers"


class AlgorithmsTestCase(selcorr_test.TestCase):

    def test_round_robin_examples(self):
        self.assertEqual(algorithms.round_robin([0, 1], ['a', 'b', 'c']),
                         {0: ['a', 'c'], 1: ['b']})
        self.assertEqual(algorithms.round_robin([0, 1, 2], ['a', 'b']),
                         {0: ['a'], 1: ['b'], 2: []})
        with self.assertRaises(ValueError):
            algorithms.round_robin([], ['a'])
        with self.assertRaises(ValueError):
            algorithms.round_robin([0, 1, 2], ['a'], no_empty=True)

    def test_split_seed_is_path_addressed(self):
        """ child b of a master seed does not depend on other children """
        first = algorithms.split_rng(7, 3).random(5)
        algorithms.split_rng(7, 0).random(100)
        again = algorithms.split_rng(7, 3).random(5)
        np.testing.assert_array_equal(first, again)
        other = algorithms.split_rng(7, 4).random(5)
        self.assertFalse(np.array_equal(first, other))
        nested = algorithms.split_rng(7, 3, 1).random(5)
        self.assertFalse(np.array_equal(first, nested))

    def test_draw_seed_range(self):
        rng = np.random.default_rng(0)
        seeds = [algorithms.draw_seed(rng) for _ in range(50)]
        self.assertTrue(all(0 <= s < algorithms.MAX_SEED for s in seeds))


class FormattersTestCase(selcorr_test.TestCase):

    def test_table_values(self):
        self.assertEqual(formatters.format_table_value(0.0994), "0.099")
        self.assertEqual(formatters.format_table_value(1), "1.000")
        self.assertEqual(formatters.format_table_value(None), "n/a")
        self.assertEqual(formatters.format_table_value(float("nan")), "n/a")
        self.assertEqual(formatters.format_standard_error(0.10123),
                         "(0.101)")

    def test_full_precision_round_trips(self):
        rng = np.random.default_rng(1)
        for value in rng.normal(size=20) * 10.0 ** rng.integers(-8, 8, 20):
            text = formatters.format_full_precision(value)
            self.assertEqual(float(text), value)

    def test_human_readable_time(self):
        hrts = formatters.human_readable_time_from_seconds
        self.assertEqual(hrts(0), "0 seconds")
        self.assertEqual(hrts(400), "6 minutes, 40 seconds")
        self.assertEqual(hrts(4000, depth=2), "1 hour, 6 minutes")


class ParallelTestCase(selcorr_test.TestCase):

    def test_runs_every_task(self):
        results = {}
        lock = threading.Lock()

        def square(key):
            with lock:
                results[key] = key * key

        for workers in (1, 4):
            results.clear()
            Parallel([square] * 20, args_list=[(k,) for k in range(20)],
                     max_workers=workers).run_threads()
            self.assertEqual(results, {k: k * k for k in range(20)})

    def test_reraises_task_exception(self):
        def fail(key):
            if key == 3:
                raise DegenerateDesignError("singular", fold=3)

        for workers in (1, 3):
            with self.assertRaises(DegenerateDesignError) as ctx:
                Parallel([fail] * 6, args_list=[(k,) for k in range(6)],
                         max_workers=workers).run_threads()
            self.assertEqual(ctx.exception.fold, 3)

    def test_rejects_string_args(self):
        with self.assertRaises(ValueError):
            Parallel([len], args_list=["abc"], max_workers=1).run_threads()


class ExceptionsTestCase(selcorr_test.TestCase):

    def test_schema_error_location(self):
        ex = SchemaError("bad value", row=4, column="d")
        self.assertEqual(str(ex), "bad value (row 4, column 'd')")
        self.assertIsInstance(ex, ValueError)
        self.assertEqual(str(SchemaError("plain")), "plain")

    def test_linalg_translation(self):
        @with_linalg_translation
        def invert(matrix):
            return np.linalg.inv(matrix)

        with self.assertRaises(DegenerateDesignError):
            invert(np.zeros((2, 2)))
        np.testing.assert_array_equal(invert(np.eye(2)), np.eye(2))


class ParsersTestCase(selcorr_test.TestCase):

    def test_parse_csv_table(self):
        text = ("panel,n,metric,LR,Robinson\n"
                "Panel A,250,Average Bias,0.240,n/a\n")
        rows = parsers.parse_csv_table(text)
        self.assertEqual(rows, [{"panel": "Panel A", "n": 250,
                                 "metric": "Average Bias", "LR": 0.24,
                                 "Robinson": None}])

    def test_parse_overrides(self):
        parsed = parsers.parse_key_value_overrides(
            ["run.sizes=250,500", "design.rho=0.5", "run.repeated=true",
             "design.error_law=T3"])
        self.assertEqual(parsed, {"run": {"sizes": [250, 500],
                                          "repeated": True},
                                  "design": {"rho": 0.5,
                                             "error_law": "T3"}})
        for bad in ("rho=0.5", "design.rho"):
            with self.assertRaises(ValueError):
                parsers.parse_key_value_overrides([bad])


class LogTestCase(selcorr_test.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()
        self.rootlogger = logging.getLogger()
        self.saved = (list(self.rootlogger.handlers), self.rootlogger.level)

    def tearDown(self):
        for handler in list(self.rootlogger.handlers):
            self.rootlogger.removeHandler(handler)
            handler.close()
        for handler in self.saved[0]:
            self.rootlogger.addHandler(handler)
        self.rootlogger.setLevel(self.saved[1])
        shutil.rmtree(self.tmpdir, ignore_errors=True)

    def test_make_logdir_is_fresh(self):
        first = make_logdir(toplevelname="selcorr_test_logdirs")
        second = make_logdir(toplevelname="selcorr_test_logdirs")
        self.assertTrue(os.path.isdir(first))
        self.assertNotEqual(first, second)

    def test_tool_logging_writes_debug_file(self):
        debuglog = configure_tool_logging(logdir=self.tmpdir,
                                          stream=open(os.devnull, 'w'))
        self.assertEqual(debuglog, os.path.join(self.tmpdir,
                                                TOOL_DEBUGLOG_NAME))
        logging.getLogger("selcorr.test").debug("fine grained detail")
        with open(debuglog) as f:
            self.assertIn("fine grained detail", f.read())
