# -*- coding: utf-8 -*-
"""
Data model shared by every selcorr package: observations, datasets,
fold partitions and estimation results.

Example:
    dataset = selcorr.core.from_csv("wages.csv")
    partition = selcorr.core.partition_folds(dataset.n, 5, rng)
"""
from .dataset import Observation, Dataset, validate_dataset, from_csv
from .folds import FoldPartition, partition_folds
from .results import EstimatorTag, FitResult

__copyright__ = "Copyright 2026, selcorr developers"

__all__ = ['Observation',
           'Dataset',
           'validate_dataset',
           'from_csv',
           'FoldPartition',
           'partition_folds',
           'EstimatorTag',
           'FitResult']
