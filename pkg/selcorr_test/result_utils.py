# -*- coding: utf-8 -*-
"""
Helper functions which may be useful when reporting test results
"""
__copyright__ = "Copyright 2026, selcorr developers"


def get_test_case_name(nodeid):
    """
    Returns the test function name.
    e.g. for "tests/test_dgp.py::CalibrationTestCase::test_cache" this
    returns "test_cache".
    """
    return nodeid.split("::")[-1] if nodeid else "UNKNOWN"


def get_test_case_class(nodeid):
    """
    Returns the test class name, or the module name for plain functions.
    e.g. for "tests/test_dgp.py::CalibrationTestCase::test_cache" this
    returns "CalibrationTestCase".
    """
    if not nodeid:
        return "UNKNOWN"
    components = nodeid.split("::")
    if len(components) >= 3:
        return components[-2]
    return components[0].rsplit("/", 1)[-1].rsplit(".", 1)[0]
