# -*- coding: utf-8 -*-
"""
Provides the TestCase object
"""
__copyright__ = "Copyright 2026, selcorr developers"

import logging
import os
import unittest

import numpy as np

from selcorr.base.algorithms import split_rng


class TestCase(unittest.TestCase):
    """
    A base class for test cases.

    You can over-ride setUp() and tearDown().
    You could also over-ride setUpClass() and tearDownClass().

    Important attributes:
      self.logger (logging.Logger) - Use this for all messages
    """

    def __get_scriptname(self):
        """ Determines the basename of self's script, without .py/.pyc """
        mod = self.__module__
        try:
            if self.__module__ == "__main__":
                import __main__

                mod = os.path.splitext(os.path.basename(__main__.__file__))[0]
        except (ImportError, AttributeError):
            pass
        return mod.split('.')[-1]

    def id(self):
        """
        Over-rides the default id() function to change "__main__" to the
        actual script name, so that test results are reported consistently
        regardless of whether run by a runner or stand-alone.
        """
        testid = super(TestCase, self).id()
        if '__main__' in testid:
            testid = testid.replace('__main__', self.__get_scriptname())
        return testid

    def __init__(self, *args, **kwargs):
        super(TestCase, self).__init__(*args, **kwargs)
        self.logger = logging.getLogger(self.__get_scriptname())

    def make_rng(self, *keys):
        """ A generator seeded from keys, independent across test cases """
        return split_rng(*keys) if keys else split_rng(0)

    def log_instrumentation(self, key, value):
        """ Records a measured value in the debug log """
        self.logger.debug("{0}: {1} is {2}".format(self.id(), key, value))

    def assertArrayClose(self, actual, expected, atol=1e-8, rtol=0.0,
                         msg=None):
        """ Elementwise |actual - expected| <= atol + rtol*|expected| """
        actual = np.asarray(actual, dtype=float)
        expected = np.asarray(expected, dtype=float)
        self.assertEqual(actual.shape, expected.shape, msg)
        if not np.allclose(actual, expected, atol=atol, rtol=rtol):
            worst = np.max(np.abs(actual - expected))
            self.fail(msg or "arrays differ by up to {!r}:\n{}\n{}".format(
                worst, actual, expected))

    def assertBetween(self, value, low, high, msg=None):
        if not low <= value <= high:
            self.fail(msg or "{!r} not in [{!r}, {!r}]".format(value, low,
                                                              high))

    def setUp(self):
        """ Over-ride this to prepare the test. """
        pass

    def tearDown(self):
        """ Over-ride this to clean up after the test. """
        pass
