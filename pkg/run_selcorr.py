#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Locally robust estimation of sample selection models, and the Monte Carlo
study of its finite-sample behavior.

Example usage:
$ python run_selcorr.py simulate --preset benchmark --sizes 250,500,1000
$ python run_selcorr.py estimate my_sample.csv --json-out fits.json

See selcorr/cli.py for every subcommand.
"""
__copyright__ = "Copyright 2026, selcorr developers"

import sys

from selcorr.base.log import log_exceptions
from selcorr.cli import main


if __name__ == '__main__':
    sys.excepthook = log_exceptions
    sys.exit(main())
