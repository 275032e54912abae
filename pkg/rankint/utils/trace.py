# -----------------------------------------------------------------------------------------------------
# RANKINT
# Exact weighted matroid intersection under rank oracles
# -----------------------------------------------------------------------------------------------------
# Copyright 2026 The rankint developers
# rankint is distributed under the terms of the BSD 2-Clause License (see file "copyright")
# -----------------------------------------------------------------------------------------------------
# General note:
# All weights are exact integers. Inside the solver weights are in scaled units
# (input weight times 2**scale_exp). Exceptions explicit by variable name.
# -----------------------------------------------------------------------------------------------------
"""
Newline-delimited JSON trace of the shortest-path iterations
"""

from __future__ import print_function, absolute_import # Compatibility with python 2 and 3
import json

import logging
logger = logging.getLogger(__name__)

from .log import log_and_raise_error,log_warning,log_info,log_debug


class TraceWriter:
    """
    Append one JSON object per line to a file

    Args:
      :filename (str): Output file, truncated on opening

    Kwargs:
      :context (dict): Entries added to every record, e.g. the scaling round (default ``None``)
    """
    def __init__(self, filename, context=None):
        self.filename = filename
        self.context = dict(context) if context is not None else {}
        self._f = open(filename, "w")
        self._count = 0
        log_debug(logger, "Writing trace to %s" % filename)

    def set_context(self, **kwargs):
        self.context.update(kwargs)

    def write(self, record):
        if self._f is None:
            log_and_raise_error(logger, "Cannot write to closed trace %s." % self.filename, exception=ValueError)
        out = dict(self.context)
        out.update(record)
        self._f.write(json.dumps(out, sort_keys=True) + "\n")
        self._count += 1

    def __call__(self, record):
        self.write(record)

    def close(self):
        if self._f is not None:
            self._f.close()
            self._f = None
            log_debug(logger, "Trace %s closed after %i records" % (self.filename, self._count))

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()
        return False


def read_trace(filename):
    """
    Return the records of a trace file as a list of dictionaries
    """
    with open(filename, "r") as f:
        return [json.loads(l) for l in f if l.strip()]
