# -*- coding: utf-8 -*-
"""
Rendering of summary tables: one panel per SummaryTable, one row per
metric and one column per estimator in table order.
"""
import csv
import io
import string

from selcorr.base.formatters import format_table_value
from selcorr.base.parsers import parse_csv_table
from selcorr.core.results import EstimatorTag
from selcorr.montecarlo.summary import (EstimatorSummary, SummaryTable,
                                        METRICS, METRIC_LABELS)

__copyright__ = "Copyright 2026, selcorr developers"


class TableFormat(object):
    MARKDOWN = "markdown"
    CSV = "csv"
    ALL = (MARKDOWN, CSV)


def _panel_name(index, table):
    name = "Panel {}".format(string.ascii_uppercase[index % 26])
    if table.label:
        return "{}: {}".format(name, table.label)
    if table.n is not None:
        return "{}: n={}".format(name, table.n)
    return name


def _columns(tables):
    present = set()
    for table in tables:
        present.update(table.summaries)
    return [tag for tag in EstimatorTag.ORDER if tag in present]


def _cell(table, tag, metric):
    summary = table.summaries.get(tag)
    if summary is None:
        return format_table_value(None)
    return format_table_value(summary.metric(metric))


def render_table(summaries, fmt=TableFormat.MARKDOWN):
    """
    Text of one or more panels.

    Parameters:
      summaries (SummaryTable or list of SummaryTable) - panels in order
      fmt (str) - "markdown" or "csv"
    """
    tables = [summaries] if isinstance(summaries, SummaryTable) \
        else list(summaries)
    if not tables:
        raise ValueError("nothing to render")
    if fmt not in TableFormat.ALL:
        raise ValueError("Unknown table format: " + repr(fmt))
    columns = _columns(tables)
    labels = [EstimatorTag.LABELS[tag] for tag in columns]
    if fmt == TableFormat.CSV:
        return _render_csv(tables, columns, labels)
    return _render_markdown(tables, columns, labels)


def _render_markdown(tables, columns, labels):
    lines = ["| | " + " | ".join(labels) + " |",
             "|---|" + "---:|" * len(labels)]
    for index, table in enumerate(tables):
        lines.append("| **{}** |".format(_panel_name(index, table)) +
                     " |" * len(labels))
        for metric in METRICS:
            cells = [_cell(table, tag, metric) for tag in columns]
            lines.append("| {} | {} |".format(METRIC_LABELS[metric],
                                              " | ".join(cells)))
        failed = {tag: count for tag, count in table.failures.items()
                  if count}
        if failed:
            cells = [str(failed.get(tag, 0)) for tag in columns]
            lines.append("| Failed Fits | {} |".format(" | ".join(cells)))
    return "\n".join(lines) + "\n"


def _render_csv(tables, columns, labels):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["panel", "n", "metric"] + labels)
    for index, table in enumerate(tables):
        panel = _panel_name(index, table).split(":")[0]
        for metric in METRICS:
            writer.writerow([panel, "" if table.n is None else table.n,
                             METRIC_LABELS[metric]] +
                            [_cell(table, tag, metric) for tag in columns])
    return out.getvalue()


def parse_table_csv(text):
    """
    SummaryTables back from render_table(..., "csv").  Values carry the
    rendered precision; "n/a" columns come back as absent estimators.
    """
    by_label = {label: tag for tag, label in EstimatorTag.LABELS.items()}
    by_metric_label = {label: metric
                       for metric, label in METRIC_LABELS.items()}
    panels = []
    current = None
    for row in parse_csv_table(text):
        if current is None or row["panel"] != current[0]:
            current = (row["panel"], row["n"], {})
            panels.append(current)
        metric = by_metric_label[row["metric"]]
        for label, tag in by_label.items():
            if label in row:
                current[2].setdefault(tag, {})[metric] = row[label]
    tables = []
    for _, n, values in panels:
        summaries = {}
        for tag in EstimatorTag.ORDER:
            if tag not in values:
                continue
            metrics = values[tag]
            if any(metrics.get(m) is None for m in METRICS):
                summaries[tag] = None
            else:
                summaries[tag] = EstimatorSummary(tag, reps=None, **metrics)
        tables.append(SummaryTable(summaries, n=n))
    return tables
