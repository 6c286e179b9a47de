# -*- coding: utf-8 -*-
"""
Setup logging

Used by the selcorr command line tool and the test runner

Library modules should never use this module
"""
import logging
import os
import sys
import tempfile
import time

__copyright__ = "Copyright 2026, selcorr developers"


LOGFILE_FORMAT = '%(asctime)s %(name)s:%(levelname)s: %(message)s'
TESTRUN_LOGSCREEN_FORMAT = '%(asctime)s %(levelname)s: %(message)s'
TOOL_LOGSCREEN_FORMAT = r'%(message)s'  # just like print
TOOL_DEBUGLOG_NAME = "selcorr_debuglog.txt"
DIRMODE = int("01777", base=8)

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.NullHandler())


def make_logdir(toplevelname="selcorr_logs"):
    """
    Generates a newly-created log directory, using the current time
      e.g. "/tmp/selcorr_logs/20260201.1730.33.0"
    A "latest" symlink in the top-level directory points at it.
    """
    topleveldir = os.path.join(tempfile.gettempdir(), toplevelname)
    # /tmp/selcorr_logs/
    try:
        if not os.path.isdir(topleveldir):
            os.mkdir(topleveldir)
            try:
                os.chmod(topleveldir, DIRMODE)
            except (OSError, AttributeError, NotImplementedError):
                pass  # running on Windows, or not owner of directory
    except OSError:
        if os.path.isdir(topleveldir):
            pass  # EEXIST; another proc running in parallel beat us to it
        else:
            raise

    # /tmp/selcorr_logs/<datestamp>.<n>
    logdirbase = time.strftime("%Y%m%d.%H%M.%S")
    # several runs may start within the same second, so a counter is
    # appended to the timestamp
    attempts = 0
    while True:
        logdirname = logdirbase + "." + str(attempts)
        logdir = os.path.join(topleveldir, logdirname)
        try:
            if not os.path.isdir(logdir):
                os.mkdir(logdir)  # mkdir is atomic; only succeeds for 1 proc
                try:
                    symlinkpath = os.path.join(topleveldir, "latest")
                    if os.path.lexists(symlinkpath):
                        os.remove(symlinkpath)
                    os.symlink(logdirname, symlinkpath)
                except (AttributeError, NotImplementedError):
                    pass  # We're running on Windows; no symlink()
                except OSError:
                    pass  # Probably somebody beat us to it
                return logdir     # we got it
        except OSError:
            if os.path.isdir(logdir):
                pass  # EEXIST; somebody else beat us to the mkdir()
            else:
                raise
        attempts += 1
        if attempts > 10000:
            raise EnvironmentError("Failed to create results dir")


def _remove_existing_handlers(rootlogger):
    """ Removes all handlers from a logger object """
    for handler in list(rootlogger.handlers):
        rootlogger.removeHandler(handler)


def configure_tool_logging(logdir=None, verbose=False, stream=None):
    """
    Configures the root logger for the command line tool:
      >= INFO (>= DEBUG when verbose) to the screen, bare messages
      everything to <logdir>/selcorr_debuglog.txt
    Timestamps are UTC.  Returns the debug log path, or None when
    logdir is None.
    """
    logging.Formatter.converter = time.gmtime
    rootlogger = logging.getLogger()
    rootlogger.setLevel(logging.DEBUG)
    _remove_existing_handlers(rootlogger)
    handler = logging.StreamHandler(stream=stream or sys.stderr)
    handler.setLevel(logging.DEBUG if verbose else logging.INFO)
    handler.setFormatter(logging.Formatter(TOOL_LOGSCREEN_FORMAT))
    rootlogger.addHandler(handler)
    if logdir is None:
        return None
    if not os.path.isdir(logdir):
        os.makedirs(logdir)
    debuglog = os.path.join(logdir, TOOL_DEBUGLOG_NAME)
    handler = logging.FileHandler(debuglog, encoding="utf-8")
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(LOGFILE_FORMAT))
    rootlogger.addHandler(handler)
    logger.debug("Logging to " + debuglog)
    return debuglog


def log_exceptions(exc_type, exc_value, exc_traceback):
    """
    Hook for logging any unhandled exceptions
    """
    if issubclass(exc_type, KeyboardInterrupt):
        sys.__excepthook__(exc_type, exc_value, exc_traceback)
        return
    logging.getLogger().critical(
        "Encountered an exception",
        exc_info=(exc_type, exc_value, exc_traceback))
