# -*- coding: utf-8 -*-
"""
Location for selcorr exceptions
"""
import functools

import numpy as np
import scipy.linalg

__copyright__ = "Copyright 2026, selcorr developers"


class SelcorrError(Exception):
    """ Base class for every error raised by this package """
    pass

###############################################################################


class SchemaError(SelcorrError, ValueError):
    """
    Raised when input rows or configuration do not match the expected
    schema.  The offending row index and column name are attached when
    known.
    """

    def __init__(self, msg, row=None, column=None):
        super(SchemaError, self).__init__(msg)
        self.msg = msg
        self.row = row
        self.column = column

    def __str__(self):
        where = []
        if self.row is not None:
            where.append("row {}".format(self.row))
        if self.column is not None:
            where.append("column {!r}".format(self.column))
        if where:
            return "{} ({})".format(self.msg, ", ".join(where))
        return self.msg


class ConsistencyError(SchemaError):
    """ d = 0 with a nonzero outcome under strict ingestion """
    pass


class ConfigError(SchemaError):
    """ Unknown or ill-typed configuration key """
    pass

###############################################################################


class DegenerateDesignError(SelcorrError):
    """
    A linear system that should be positive definite is singular or too
    ill-conditioned to solve.
    """

    def __init__(self, msg, condition=None, fold=None):
        super(DegenerateDesignError, self).__init__(msg)
        self.condition = condition
        self.fold = fold


class CalibrationError(SelcorrError):
    """ The censoring constant could not be bracketed or bisected """
    pass


class AssumptionViolationError(SelcorrError):
    """ Identification conditions fail at the requested points """
    pass

##############################################################################


def with_linalg_translation(function):
    """
    Decorator to translate numpy and scipy linear algebra failures into
    DegenerateDesignError.
    """
    @functools.wraps(function)
    def wrapper_function(*args, **kwargs):
        """ Call the original function, translate exceptions if needed """
        try:
            return function(*args, **kwargs)
        except (np.linalg.LinAlgError, scipy.linalg.LinAlgError) as ex:
            raise DegenerateDesignError(
                "{} failed: {}".format(function.__name__, ex))
    return wrapper_function


__all__ = ['SelcorrError',
           'SchemaError',
           'ConsistencyError',
           'ConfigError',
           'DegenerateDesignError',
           'CalibrationError',
           'AssumptionViolationError',
           'with_linalg_translation']
