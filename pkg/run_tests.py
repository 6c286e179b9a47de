#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Runs the selcorr test suite, writing a debug log and a PASS/FAIL summary
file to a fresh results directory.

Example usage:
$ python run_tests.py
$ python run_tests.py --slow tests/test_acceptance.py
"""
import argparse
import logging
import sys

import pytest

import selcorr_test.log as log
from selcorr_test.results_plugin import ResultsPlugin

logger = logging.getLogger(__name__)


def get_args():
    """
    Parses and return commandline arguments
    """
    parser = argparse.ArgumentParser()
    parser.add_argument("--slow",
                        help="Also run the slow Monte Carlo acceptance tests",
                        action='store_true',
                        default=False)
    parser.add_argument("--logdir", default=None,
                        help="Results directory; a fresh one under the "
                             "temporary directory by default")
    parser.add_argument("tests", nargs="*", default=["tests"],
                        help="Test files or directories")
    return parser.parse_args()


def main():
    opts = get_args()

    logdir = log.configure_logging(logdir=opts.logdir)
    print("Test results in " + logdir)

    pytest_argv = ["-p", "no:cacheprovider",
                   "-p", "no:logging",
                   "--verbose"]
    if opts.slow:
        # replaces the -m "not slow" from pytest.ini
        pytest_argv += ["-m", "slow or not slow"]
    pytest_argv += opts.tests

    status = pytest.main(pytest_argv, plugins=[ResultsPlugin(logdir)])
    return int(status) == 0


if __name__ == "__main__":
    sys.exit(0 if main() else 1)
