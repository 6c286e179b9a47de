# -*- coding: utf-8 -*-
"""
Monte Carlo replications, their summary metrics and rendered tables.

Example: benchmark panel at n=250
    design = selcorr.dgp.calibrated(selcorr.dgp.preset("benchmark", n=250))
    records = selcorr.montecarlo.run_design(
        design, ["lr", "robinson"], 100, EstimatorConfig(), master_seed=1)
    table = selcorr.montecarlo.summarize(records, design.beta, n=250)
    print(selcorr.montecarlo.render_table(table))
"""
from .runner import (ReplicationRecord, run_design, run_replication,
                     tune_for_run, records_to_frame, write_records,
                     read_records, RECORD_COLUMNS)
from .summary import (EstimatorSummary, SummaryTable, summarize, METRICS,
                      METRIC_LABELS)
from .tables import render_table, parse_table_csv, TableFormat

__copyright__ = "Copyright 2026, selcorr developers"

__all__ = ['ReplicationRecord',
           'run_design',
           'run_replication',
           'tune_for_run',
           'records_to_frame',
           'write_records',
           'read_records',
           'RECORD_COLUMNS',
           'EstimatorSummary',
           'SummaryTable',
           'summarize',
           'METRICS',
           'METRIC_LABELS',
           'render_table',
           'parse_table_csv',
           'TableFormat']
