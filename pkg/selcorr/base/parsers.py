# -*- coding: utf-8 -*-
"""
Location for generic parsing functions
"""
import csv
import io
import logging

log = logging.getLogger(__name__)
if not log.handlers:
    log.addHandler(logging.NullHandler())


def _parse_cell(value):
    """ int, then float, then the stripped string """
    value = value.strip()
    try:
        return int(value)
    except ValueError:
        try:
            return float(value)
        except ValueError:
            return value


def parse_csv_table(text):
    """
    Takes a headed CSV table such as a rendered summary:

        panel,n,metric,LR,Robinson
        Panel A,250,Average Bias,0.240,0.106
        Panel A,250,Average SD,0.257,0.090

    And returns a list of dictionaries like this, with numeric cells
    converted:

        [{'panel': 'Panel A', 'n': 250, 'metric': 'Average Bias',
          'LR': 0.24, 'Robinson': 0.106}, ...]

    "n/a" cells are returned as None.
    """
    reader = csv.DictReader(io.StringIO(text))
    result = []
    for row in reader:
        parsed = {}
        for key, value in row.items():
            value = (value or "").strip()
            parsed[key.strip()] = None if value in ("", "n/a") \
                else _parse_cell(value)
        result.append(parsed)
    log.debug("Parsed {} table rows".format(len(result)))
    return result


def parse_key_value_overrides(pairs):
    """
    Parses ["section.key=value", ...] command line overrides into
    {"section": {"key": value}}.  Values go through the same cell
    conversion as tables; comma-separated values become lists.
      >>> parse_key_value_overrides(["run.sizes=250,500", "design.rho=0.5"])
      {'run': {'sizes': [250, 500]}, 'design': {'rho': 0.5}}
    """
    result = {}
    for pair in pairs:
        if "=" not in pair or "." not in pair.split("=", 1)[0]:
            raise ValueError("Override {!r} is not section.key=value".format(
                pair))
        dotted, value = pair.split("=", 1)
        section, key = dotted.strip().split(".", 1)
        if "," in value:
            parsed = [_parse_cell(v) for v in value.split(",") if v.strip()]
        elif value.strip().lower() in ("true", "false"):
            parsed = value.strip().lower() == "true"
        else:
            parsed = _parse_cell(value)
        result.setdefault(section, {})[key] = parsed
    return result
