# -*- coding: utf-8 -*-
"""
selcorr test package

This skeleton code demonstrates how this package should be used to
write a test:

    import selcorr_test
    class TestCase(selcorr_test.TestCase):
        def setUp(self):
            self.rng = self.make_rng(7)
        def test_run(self):
            pass

    @selcorr_test.slow
    class SlowTestCase(selcorr_test.TestCase):
        ...

Tests marked slow are skipped unless run_tests.py is given --slow.
"""
__copyright__ = "Copyright 2026, selcorr developers"

import pytest

from .case import TestCase

slow = pytest.mark.slow

__all__ = ['TestCase',
           'slow']
