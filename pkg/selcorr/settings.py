# -*- coding: utf-8 -*-
"""
Run configuration files for the command line tool.

A config file has up to three sections:

    [design]      SimulationDesign keys, or preset = "<name>" plus overrides
    [estimator]   EstimatorConfig keys
    [run]         RunConfig keys

TOML files (*.toml) and JSON files (*.json) are accepted.  Unknown
sections and keys are rejected before anything is computed.
"""
import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

import simplejson as json

from selcorr.base import constants
from selcorr.base.exceptions import ConfigError
from selcorr.core.results import EstimatorTag
from selcorr.dgp.design import SimulationDesign
from selcorr.estimators.config import EstimatorConfig

__copyright__ = "Copyright 2026, selcorr developers"

SECTIONS = ("design", "estimator", "run")

THREADS_ENV = "SELCORR_THREADS"


class RunConfig(object):
    """
    Settings of a command line run that are neither design nor estimator
    settings.

    Parameters:
      reps (int) - Monte Carlo replications per sample size
      sizes (list) - sample sizes, one table panel each
      repeated (bool) - duplicated half samples
      master_seed (int)
      threads (int) - concurrent replications; None defers to
          SELCORR_THREADS, then 1
      estimators (list) - estimator tags or aliases
      out (str) - output directory of simulate
      cache_dir (str) - directory of the calibration cache
      strict (bool) - reject d = 0 rows with nonzero y
    """

    def __init__(self, reps=constants.DEFAULT_REPS, sizes=None,
                 repeated=False, master_seed=0, threads=None,
                 estimators=None, out="selcorr_out", cache_dir=".",
                 strict=False):
        self.reps = int(reps)
        self.sizes = None if sizes is None else [int(n) for n in
                                                 _as_list(sizes)]
        self.repeated = bool(repeated)
        self.master_seed = int(master_seed)
        self.threads = None if threads is None else int(threads)
        self.estimators = list(EstimatorTag.ORDER) if estimators is None \
            else [EstimatorTag.from_str(e) for e in _as_list(estimators)]
        self.out = out
        self.cache_dir = cache_dir
        self.strict = bool(strict)
        if self.reps < 1:
            raise ValueError("reps must be >= 1")
        if self.sizes is not None and any(n < 1 for n in self.sizes):
            raise ValueError("sizes must be positive")
        if self.threads is not None and self.threads < 1:
            raise ValueError("threads must be >= 1")

    def resolved_threads(self):
        """ threads, else $SELCORR_THREADS, else 1 """
        if self.threads is not None:
            return self.threads
        value = os.environ.get(THREADS_ENV)
        if value:
            try:
                return max(1, int(value))
            except ValueError:
                raise ConfigError("{} must be an integer, got {!r}".format(
                    THREADS_ENV, value))
        return 1

    def cache_path(self, name):
        return os.path.join(self.cache_dir or ".", name)

    def to_dict(self):
        return {"reps": self.reps,
                "sizes": self.sizes,
                "repeated": self.repeated,
                "master_seed": self.master_seed,
                "threads": self.threads,
                "estimators": self.estimators,
                "out": self.out,
                "cache_dir": self.cache_dir,
                "strict": self.strict}

    @classmethod
    def from_dict(cls, data):
        known = set(cls().to_dict())
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError("unknown run key(s): {}".format(
                ", ".join(unknown)), column=unknown[0])
        try:
            return cls(**data)
        except (TypeError, ValueError) as ex:
            raise ConfigError("invalid run settings: {}".format(ex))


def _as_list(value):
    if isinstance(value, (list, tuple)):
        return list(value)
    return [value]


class Settings(object):
    """
    A validated design, estimator config and run config.
    """

    def __init__(self, design, estimator, run):
        self.design = design
        self.estimator = estimator
        self.run = run

    @classmethod
    def from_dict(cls, data):
        """ data: {"design": {...}, "estimator": {...}, "run": {...}} """
        unknown = sorted(set(data) - set(SECTIONS))
        if unknown:
            raise ConfigError("unknown config section(s): {}".format(
                ", ".join(unknown)), column=unknown[0])
        return cls(SimulationDesign.from_dict(data.get("design", {})),
                   EstimatorConfig.from_dict(data.get("estimator", {})),
                   RunConfig.from_dict(data.get("run", {})))

    def sizes(self):
        return self.run.sizes or [self.design.n]

    def to_dict(self):
        return {"design": self.design.to_dict(),
                "estimator": self.estimator.to_dict(),
                "run": self.run.to_dict()}


def load_config_file(path):
    """
    Sections of a TOML or JSON config file as nested dictionaries.
    """
    suffix = os.path.splitext(path)[1].lower()
    try:
        if suffix == ".toml":
            with open(path, 'rb') as fp:
                data = tomllib.load(fp)
        elif suffix == ".json":
            with open(path, 'r') as fp:
                data = json.load(fp)
        else:
            raise ConfigError("config files must end in .toml or .json: "
                              "{}".format(path))
    except (OSError, tomllib.TOMLDecodeError, ValueError) as ex:
        if isinstance(ex, ConfigError):
            raise
        raise ConfigError("cannot read config {}: {}".format(path, ex))
    if not isinstance(data, dict) or not all(
            isinstance(section, dict) for section in data.values()):
        raise ConfigError("config {} must hold tables of keys".format(path))
    return data


def merge_sections(*layers):
    """
    Later layers win key by key within each section.
      >>> merge_sections({"run": {"reps": 5}}, {"run": {"seed": 1}})
      {'run': {'reps': 5, 'seed': 1}}
    """
    merged = {}
    for layer in layers:
        for section, values in (layer or {}).items():
            merged.setdefault(section, {}).update(values)
    return merged


def load_settings(config_path=None, overrides=None):
    """
    Settings from an optional config file with command line overrides
    applied on top.
    """
    data = load_config_file(config_path) if config_path else {}
    return Settings.from_dict(merge_sections(data, overrides))


def _toml_value(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return repr(value)
    if isinstance(value, dict):
        items = ["{} = {}".format(k, _toml_value(v))
                 for k, v in sorted(value.items()) if v is not None]
        return "{ " + ", ".join(items) + " }"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_toml_value(v) for v in value) + "]"
    return json.dumps(str(value))


def to_toml_text(sections):
    """
    TOML text of {"section": {"key": value}}; None values are omitted.
    """
    lines = []
    for section in SECTIONS:
        if section not in sections:
            continue
        if lines:
            lines.append("")
        lines.append("[{}]".format(section))
        for key, value in sorted(sections[section].items()):
            if value is None:
                continue
            lines.append("{} = {}".format(key, _toml_value(value)))
    return "\n".join(lines) + "\n"
