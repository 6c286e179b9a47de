# -*- coding: utf-8 -*-
"""
selcorr: coefficients of a linear outcome equation under sample
selection, with no exclusion restriction.

Packages:
  base         exceptions, logging, seeds, threading, formatting
  core         datasets, fold partitions, fit results
  learners     propensity forests and kernel regression
  estimators   locally robust and Robinson-type estimators
  dgp          simulation designs, calibration, population nuisances
  oracle       identification from known population functions
  montecarlo   replication runs, summaries and tables
"""
__copyright__ = "Copyright 2026, selcorr developers"

__version__ = "1.0.0"
