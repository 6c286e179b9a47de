# -*- coding: utf-8 -*-
"""
Code for formatting numbers for tables, records and progress messages
"""
import numpy as np

__copyright__ = "Copyright 2026, selcorr developers"


def format_table_value(value, decimals=3):
    """
    Format a summary statistic for a rendered table.
    Missing values render as "n/a".
    Examples:
      >>> format_table_value(0.0994)
      '0.099'
      >>> format_table_value(1)
      '1.000'
      >>> format_table_value(None)
      'n/a'
    """
    if value is None or not np.isfinite(value):
        return "n/a"
    return "{:.{}f}".format(float(value), decimals)


def format_standard_error(value, decimals=3):
    """
    Parenthesized standard error, as printed under a coefficient.
      >>> format_standard_error(0.10123)
      '(0.101)'
    """
    return "(" + format_table_value(value, decimals) + ")"


def format_full_precision(value):
    """
    17 significant digits; round-trips every finite double exactly.
      >>> format_full_precision(0.1)
      '0.10000000000000001'
      >>> format_full_precision(float('nan'))
      'nan'
    """
    return "{:.17g}".format(float(value))


def human_readable_time_from_seconds(seconds, depth=4):
    """
    Convert seconds  to a human-readable str.
    The exact format may change, so this string should not be parsed.
      seconds (int) - a time in seconds
      depth (int) max larged units to report.
    Examples:
      >>> human_readable_time_from_seconds(4)
      '4 seconds'
      >>> human_readable_time_from_seconds(400)
      '6 minutes, 40 seconds'
      >>> human_readable_time_from_seconds(4000, depth=2)
      '1 hour, 6 minutes'
    """
    seconds = int(seconds)
    if seconds == 0:
        return "0 seconds"
    m, s = divmod(seconds, 60)
    h, m = divmod(m, 60)
    d, h = divmod(h, 24)
    parts = []
    for count, unit in ((d, "day"), (h, "hour"), (m, "minute"),
                        (s, "second")):
        if count > 0:
            parts.append("{} {}{}".format(count, unit,
                                          "s" if count > 1 else ""))
        if len(parts) >= depth:
            break
    return ", ".join(parts)
