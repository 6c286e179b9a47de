# -*- coding: utf-8 -*-
"""
Identification oracle on analytic selection models.

Example:
    model = selcorr.oracle.AnalyticModel.benchmark(rho=0.5)
    beta_1, beta_2 = selcorr.oracle.oracle_beta_pair(
        model, (0.5, 0.3), (-0.5, 0.7), 0, 1)
"""
from .model import (AnalyticModel, DesignIndex, LinearIndex, SquareIndex,
                    Link, link_value, link_derivative, selectivity_correction,
                    selectivity_correction_derivative)
from .identification import (upsilon, oracle_beta_pair, oracle_beta_remaining,
                             oracle_beta_discrete, oracle_recover_g,
                             oracle_beta_single_continuous, oracle_full_beta)

__copyright__ = "Copyright 2026, selcorr developers"

__all__ = ['AnalyticModel',
           'DesignIndex',
           'LinearIndex',
           'SquareIndex',
           'Link',
           'link_value',
           'link_derivative',
           'selectivity_correction',
           'selectivity_correction_derivative',
           'upsilon',
           'oracle_beta_pair',
           'oracle_beta_remaining',
           'oracle_beta_discrete',
           'oracle_recover_g',
           'oracle_beta_single_continuous',
           'oracle_full_beta']
