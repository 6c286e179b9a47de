# -*- coding: utf-8 -*-
"""
Provides the ResultsPlugin class
"""
__copyright__ = "Copyright 2026, selcorr developers"

import os

from . import result_utils

RESULTS_NAME = "selcorr_test_results.txt"


class ResultsPlugin(object):
    """
    A pytest plugin to write a simple summary file of the test case results

    The file will look like:
      PASS CalibrationTestCase.test_cache
      FAIL OracleTestCase.test_pair_recovery

    When a test starts, it's added to a dictionary.  As it runs, the
    dictionary is updated with the test result.  When the test is over,
    it is removed from the dictionary and its result is written to the
    results file.
    """

    def __init__(self, logdir):
        self.logdir = logdir
        self.results_txt = os.path.join(logdir, RESULTS_NAME)
        # Test result dictionary:
        self.test_result = dict()
        # Create the file:
        with open(self.results_txt, 'a'):
            pass

    def _dump_test_result(self, nodeid):
        """ Writes the test result to the file, then forgets it """
        resultstr = self.test_result.pop(nodeid, 'UNKNOWN')
        with open(self.results_txt, 'a') as f:
            f.write("{} {}.{}\n".format(
                resultstr, result_utils.get_test_case_class(nodeid),
                result_utils.get_test_case_name(nodeid)))

    def pytest_runtest_logstart(self, nodeid, location):
        self.test_result[nodeid] = 'UNKNOWN'

    def pytest_runtest_logreport(self, report):
        if report.skipped:
            self.test_result[report.nodeid] = 'SKIP'
        elif report.failed:
            # errors in setup/teardown are not test failures
            self.test_result[report.nodeid] = \
                'FAIL' if report.when == "call" else 'ERROR'
        elif report.when == "call" and \
                self.test_result.get(report.nodeid) == 'UNKNOWN':
            self.test_result[report.nodeid] = 'PASS'

    def pytest_runtest_logfinish(self, nodeid, location):
        self._dump_test_result(nodeid)
