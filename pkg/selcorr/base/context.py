# -*- coding: utf-8 -*-
"""
Common context manager libraries
"""

import time
import logging

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.NullHandler())


class TimeIt(object):
    """ Measure the elapsed time inside the context
        Eg.
           with TimeIt("lr fit") as t:
               estimate_locally_robust(dataset, config)
           logger.info("elapsed time : {}".format(t.interval))
    """

    def __init__(self, label=None):
        self.label = label
        self.interval = 0.0

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *args):
        self.end = time.perf_counter()
        self.interval = self.end - self.start
        logger.debug("[TimeIt] {}elapsed time : [{:.3f}] seconds".format(
            self.label + " " if self.label else "", self.interval))
