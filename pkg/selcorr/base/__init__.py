# -*- coding: utf-8 -*-
"""
selcorr base package

Base package for the selcorr library.  This package is not allowed to
have any dependencies on any other selcorr package, but is allowed to
have 3rd party dependencies.

The purpose of this package is to hold classes and functions that are
needed by all the rest of the selcorr packages.  Exceptions should go
here first before anywhere else so they're available for unit tests to
import.
"""
__copyright__ = "Copyright 2026, selcorr developers"
