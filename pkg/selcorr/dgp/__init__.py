# -*- coding: utf-8 -*-
"""
Simulation designs and sample generation.

Example: one benchmark sample
    design = selcorr.dgp.calibrated(selcorr.dgp.preset("benchmark", n=1000))
    dataset = selcorr.dgp.generate_sample(design, np.random.default_rng(3))
"""
from .design import (SimulationDesign, ErrorLaw, IndexForm, preset,
                     PRESET_NAMES)
from .sampling import (RawSample, generate_covariates, draw_errors,
                       selection_index, draw_raw_sample, generate_sample,
                       generate_repeated_sample, latent_correlation)
from .calibration import (calibrate_constant, calibrated, censoring_rate,
                          load_calibration_cache, DEFAULT_CACHE_NAME)
from .population import (PopulationNuisances, population_nuisances,
                         trim_to_support, conditional_moment_means)

__copyright__ = "Copyright 2026, selcorr developers"

__all__ = ['SimulationDesign',
           'ErrorLaw',
           'IndexForm',
           'preset',
           'PRESET_NAMES',
           'RawSample',
           'generate_covariates',
           'draw_errors',
           'selection_index',
           'draw_raw_sample',
           'generate_sample',
           'generate_repeated_sample',
           'latent_correlation',
           'calibrate_constant',
           'calibrated',
           'censoring_rate',
           'load_calibration_cache',
           'DEFAULT_CACHE_NAME',
           'PopulationNuisances',
           'population_nuisances',
           'trim_to_support',
           'conditional_moment_means']
