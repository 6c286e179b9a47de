# -*- coding: utf-8 -*-
"""
Command line front end.

Example usage:
$ python run_selcorr.py estimate wages.csv --estimator lr --estimator robinson
$ python run_selcorr.py simulate --config sample/benchmark.toml --reps 100
$ python run_selcorr.py calibrate --preset censor_high
$ python run_selcorr.py render selcorr_out/records.csv --format csv
$ python run_selcorr.py show-config --config sample/benchmark.toml

Exit codes: 0 ok, 2 schema or argument error, 3 degenerate design,
4 calibration failure.
"""
import argparse
import logging
import os

import numpy as np
import simplejson as json

from selcorr.base.exceptions import (SchemaError, DegenerateDesignError,
                                     CalibrationError, SelcorrError)
from selcorr.base.formatters import format_table_value, format_standard_error
from selcorr.base.log import configure_tool_logging, make_logdir
from selcorr.base.parsers import parse_key_value_overrides
from selcorr.core.dataset import from_csv
from selcorr.core.results import EstimatorTag
from selcorr import dgp
from selcorr import estimators
from selcorr import montecarlo
from selcorr.settings import load_settings, to_toml_text

__copyright__ = "Copyright 2026, selcorr developers"

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.NullHandler())

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_DEGENERATE = 3
EXIT_CALIBRATION = 4

DEFAULT_ESTIMATE_TAGS = (EstimatorTag.LOCALLY_ROBUST, EstimatorTag.ROBINSON)

RECORDS_NAME = "records.csv"
SUMMARY_MARKDOWN_NAME = "summary.md"
SUMMARY_CSV_NAME = "summary.csv"


class _OverrideArgparseAction(argparse.Action):
    """ Parses --set section.key=value, appending to earlier ones """
    def __call__(self, parser, namespace, values, option_string=None):
        try:
            parsed = parse_key_value_overrides([values])
        except ValueError as ex:
            raise argparse.ArgumentError(self, str(ex))
        merged = getattr(namespace, self.dest, None) or {}
        for section, entries in parsed.items():
            merged.setdefault(section, {}).update(entries)
        setattr(namespace, self.dest, merged)


class _EstimatorArgparseAction(argparse.Action):
    """ Parses --estimator, accepting tags and short aliases """
    def __call__(self, parser, namespace, values, option_string=None):
        try:
            tag = EstimatorTag.from_str(values)
        except ValueError as ex:
            raise argparse.ArgumentError(self, str(ex))
        chosen = list(getattr(namespace, self.dest, None) or [])
        if tag not in chosen:
            chosen.append(tag)
        setattr(namespace, self.dest, chosen)


class _SizesArgparseAction(argparse.Action):
    """ Parses --sizes 250,500,1000 """
    def __call__(self, parser, namespace, values, option_string=None):
        try:
            sizes = [int(v) for v in values.split(",") if v.strip()]
        except ValueError:
            raise argparse.ArgumentError(
                self, "sizes must be comma separated integers: " + values)
        if not sizes:
            raise argparse.ArgumentError(self, "no sizes given")
        setattr(namespace, self.dest, sizes)


def _add_common_arguments(parser):
    parser.add_argument("--config", metavar="PATH",
                        help="TOML or JSON file with [design], [estimator] "
                             "and [run] sections")
    parser.add_argument("--set", dest="overrides", metavar="SECTION.KEY=VALUE",
                        action=_OverrideArgparseAction, default=None,
                        help="Override one config key, e.g. "
                             "--set estimator.folds=4 (repeatable)")
    parser.add_argument("--threads", type=int, default=None,
                        help="Worker threads; defaults to $SELCORR_THREADS, "
                             "then 1")
    parser.add_argument("--verbose", action="store_true", default=False,
                        help="Log debug messages to the screen")
    parser.add_argument("--logdir", default=None,
                        help="Directory for the debug log; a fresh "
                             "timestamped directory by default")


def _add_design_arguments(parser):
    parser.add_argument("--preset", choices=dgp.PRESET_NAMES, default=None,
                        help="Start the design from a named preset")
    parser.add_argument("--rho", type=float, default=None,
                        help="Correlation of the selection and outcome "
                             "errors")
    parser.add_argument("--censor-target", type=float, default=None,
                        help="Target share of censored observations")
    parser.add_argument("--error-law", choices=dgp.ErrorLaw.ALL,
                        default=None,
                        help="Distribution of the selection error")
    parser.add_argument("--h-form", choices=dgp.IndexForm.ALL, default=None,
                        help="Selection index form")
    parser.add_argument("--cache-dir", default=None,
                        help="Directory holding calibration_cache.json")


def _add_estimator_arguments(parser, default_help):
    parser.add_argument("--estimator", dest="estimators", default=None,
                        action=_EstimatorArgparseAction,
                        help="Estimator to run: lr, robinson, robinson-orth "
                             "or robinson-cf (repeatable; default "
                             "{})".format(default_help))
    parser.add_argument("--folds", type=int, default=None,
                        help="Cross-fitting folds (at least 3)")
    parser.add_argument("--seed", type=int, default=None,
                        help="Seed for splits, tuning and forests")
    parser.add_argument("--formulation", choices=("F1", "F2", "F3", "F4"),
                        default=None,
                        help="Normal equations of the orthogonal estimators")
    parser.add_argument("--fixed-forest", action="store_true", default=None,
                        help="Tune the forest once per run instead of per "
                             "fit")


def get_argument_parser():
    """ argparse parser for every subcommand """
    parser = argparse.ArgumentParser(
        prog="selcorr",
        description="Locally robust estimation of sample selection models "
                    "without exclusion restrictions")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    estimate = subparsers.add_parser(
        "estimate",
        help="Estimate beta from a CSV file: cross-fitted locally robust "
             "moment and the Robinson comparators, with sandwich SEs")
    estimate.add_argument("csv_path",
                          help="CSV with a header row: d, y, then covariates")
    estimate.add_argument("--json-out", default=None, metavar="PATH",
                          help="Also write the fits as JSON")
    estimate.add_argument("--strict", action="store_true", default=None,
                          help="Reject rows with d = 0 and a nonzero y "
                               "instead of zeroing y")
    _add_common_arguments(estimate)
    _add_estimator_arguments(estimate, "lr and robinson")
    estimate.set_defaults(handler=cmd_estimate)

    simulate = subparsers.add_parser(
        "simulate",
        help="Run Monte Carlo replications of a design and tabulate bias, "
             "SD, RMSE and coverage of beta_hat +- 1.96 SE per sample size")
    simulate.add_argument("--reps", type=int, default=None,
                          help="Replications per sample size")
    simulate.add_argument("--sizes", action=_SizesArgparseAction,
                          default=None,
                          help="Comma separated sample sizes, one panel each")
    simulate.add_argument("--repeated", action="store_true", default=None,
                          help="Draw n/2 rows and duplicate them")
    simulate.add_argument("--master-seed", type=int, default=None,
                          help="Seed every replication is derived from")
    simulate.add_argument("--out", default=None,
                          help="Output directory for records and summaries")
    _add_common_arguments(simulate)
    _add_design_arguments(simulate)
    _add_estimator_arguments(simulate, "all four")
    simulate.set_defaults(handler=cmd_simulate)

    calibrate = subparsers.add_parser(
        "calibrate",
        help="Calibrate the index constant c so that P(D = 0) hits the "
             "target censoring share")
    _add_common_arguments(calibrate)
    _add_design_arguments(calibrate)
    calibrate.set_defaults(handler=cmd_calibrate)

    render = subparsers.add_parser(
        "render",
        help="Render the bias, SD, RMSE and coverage table of a "
             "simulation from its records.csv")
    render.add_argument("records_path", help="records.csv from simulate")
    render.add_argument("--format", dest="table_format",
                        choices=montecarlo.TableFormat.ALL,
                        default=montecarlo.TableFormat.MARKDOWN,
                        help="Table format")
    render.add_argument("--output", default=None, metavar="PATH",
                        help="Write the table here instead of printing it")
    _add_common_arguments(render)
    render.set_defaults(handler=cmd_render)

    show = subparsers.add_parser(
        "show-config",
        help="Print the effective design, estimator and run configuration "
             "after overrides")
    _add_common_arguments(show)
    _add_design_arguments(show)
    _add_estimator_arguments(show, "all four")
    show.set_defaults(handler=cmd_show_config)
    return parser


# flag dest -> (section, key)
_FLAG_KEYS = {"preset": ("design", "preset"),
              "rho": ("design", "rho"),
              "censor_target": ("design", "censor_target"),
              "error_law": ("design", "error_law"),
              "h_form": ("design", "h_form"),
              "folds": ("estimator", "folds"),
              "seed": ("estimator", "seed"),
              "formulation": ("estimator", "formulation"),
              "reps": ("run", "reps"),
              "sizes": ("run", "sizes"),
              "repeated": ("run", "repeated"),
              "master_seed": ("run", "master_seed"),
              "threads": ("run", "threads"),
              "estimators": ("run", "estimators"),
              "out": ("run", "out"),
              "cache_dir": ("run", "cache_dir"),
              "strict": ("run", "strict")}


def _flag_overrides(opts):
    """ {section: {key: value}} for every flag given on the command line """
    overrides = {}
    for dest, (section, key) in _FLAG_KEYS.items():
        value = getattr(opts, dest, None)
        if value is not None:
            overrides.setdefault(section, {})[key] = value
    if getattr(opts, "fixed_forest", None):
        overrides.setdefault("estimator", {})["tune_per_fit"] = False
    for section, entries in (opts.overrides or {}).items():
        overrides.setdefault(section, {}).update(entries)
    return overrides


def settings_from_args(opts):
    return load_settings(opts.config, _flag_overrides(opts))


def _print(text):
    print(text, end="" if text.endswith("\n") else "\n")


def coefficient_table(fits, column_names):
    """
    Estimates with parenthesized standard errors underneath, one column
    per fit.
    """
    labels = [EstimatorTag.LABELS[fit.estimator_tag] for fit in fits]
    width = max([len(name) for name in column_names] + [8])
    cell = max([len(label) for label in labels] + [10])
    lines = ["{:<{w}}".format("", w=width) + "".join(
        " {:>{c}}".format(label, c=cell) for label in labels)]
    for k, name in enumerate(column_names):
        lines.append("{:<{w}}".format(name, w=width) + "".join(
            " {:>{c}}".format(format_table_value(fit.beta[k]), c=cell)
            for fit in fits))
        lines.append("{:<{w}}".format("", w=width) + "".join(
            " {:>{c}}".format(format_standard_error(
                fit.standard_errors[k]), c=cell)
            for fit in fits))
    return "\n".join(lines) + "\n"


def cmd_estimate(opts):
    settings = settings_from_args(opts)
    tags = opts.estimators or list(DEFAULT_ESTIMATE_TAGS)
    dataset = from_csv(opts.csv_path, strict=settings.run.strict)
    config = settings.estimator.replace(
        workers=settings.run.resolved_threads())
    logger.info("Read {} rows ({} selected) from {}".format(
        dataset.n, int(dataset.d.sum()), opts.csv_path))
    if config.forest_params is None:
        config = config.replace(forest_params=estimators.resolve_forest_params(
            dataset, config, np.random.default_rng(config.seed)))
    fits = [estimators.from_tag(tag)(dataset, config,
                                     rng=np.random.default_rng(config.seed))
            for tag in tags]
    _print(coefficient_table(fits, dataset.column_names))
    if opts.json_out:
        with open(opts.json_out, 'w', encoding="utf-8") as fp:
            json.dump([fit.to_dict() for fit in fits], fp, indent=2,
                      sort_keys=True, ignore_nan=True)
        logger.info("Wrote " + opts.json_out)
    return EXIT_OK


def _calibrated_design(settings):
    return dgp.calibrated(settings.design,
                          cache_path=settings.run.cache_path(
                              dgp.DEFAULT_CACHE_NAME))


def cmd_simulate(opts):
    settings = settings_from_args(opts)
    run = settings.run
    design = _calibrated_design(settings)
    threads = run.resolved_threads()
    records = []
    tables = []
    for n in settings.sizes():
        sized = design.replace(n=n)
        sized_records = montecarlo.run_design(
            sized, run.estimators, run.reps, settings.estimator,
            run.master_seed, workers=threads, repeated=run.repeated,
            output_interval=60)
        records.extend(sized_records)
        tables.append(montecarlo.summarize(sized_records, sized.beta, n=n))
    if not os.path.isdir(run.out):
        os.makedirs(run.out)
    montecarlo.write_records(records, os.path.join(run.out, RECORDS_NAME))
    markdown = montecarlo.render_table(tables, montecarlo.TableFormat.MARKDOWN)
    _write_text(os.path.join(run.out, SUMMARY_MARKDOWN_NAME), markdown)
    _write_text(os.path.join(run.out, SUMMARY_CSV_NAME),
                montecarlo.render_table(tables, montecarlo.TableFormat.CSV))
    logger.info("Wrote {}, {} and {} to {}".format(
        RECORDS_NAME, SUMMARY_MARKDOWN_NAME, SUMMARY_CSV_NAME, run.out))
    _print(markdown)
    return EXIT_OK


def _write_text(path, text):
    with open(path, 'w', encoding="utf-8", newline="\n") as fp:
        fp.write(text)


def cmd_calibrate(opts):
    settings = settings_from_args(opts)
    design = _calibrated_design(settings)
    _print("c = {:.6f}  ({}, {}, rho={}, censor_target={})".format(
        design.c, design.h_form, design.error_law, design.rho,
        design.censor_target))
    return EXIT_OK


def cmd_render(opts):
    settings = settings_from_args(opts)
    records = montecarlo.read_records(opts.records_path)
    sizes = sorted({record.n for record in records},
                   key=lambda n: -1 if n is None else n)
    tables = [montecarlo.summarize([r for r in records if r.n == n],
                                   settings.design.beta, n=n)
              for n in sizes]
    text = montecarlo.render_table(tables, opts.table_format)
    if opts.output:
        _write_text(opts.output, text)
        logger.info("Wrote " + opts.output)
    else:
        _print(text)
    return EXIT_OK


def cmd_show_config(opts):
    settings = settings_from_args(opts)
    _print(to_toml_text(settings.to_dict()))
    return EXIT_OK


def main(argv=None):
    """
    Runs one subcommand and returns its exit code.
    """
    opts = get_argument_parser().parse_args(argv)
    configure_tool_logging(logdir=opts.logdir or make_logdir(),
                           verbose=opts.verbose)
    try:
        return opts.handler(opts)
    except CalibrationError as ex:
        logger.error("calibration failed: {}".format(ex))
        return EXIT_CALIBRATION
    except DegenerateDesignError as ex:
        where = "" if ex.fold is None else " (fold {})".format(ex.fold)
        logger.error("degenerate design{}: {}".format(where, ex))
        return EXIT_DEGENERATE
    except (SchemaError, ValueError) as ex:
        logger.error("error: {}".format(ex))
        return EXIT_SCHEMA
    except SelcorrError as ex:
        logger.error("error: {}".format(ex))
        return EXIT_SCHEMA
