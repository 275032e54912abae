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
Per-phase accounting of rank-oracle queries
"""

from __future__ import print_function, absolute_import # Compatibility with python 2 and 3
import threading
import contextlib

import logging
logger = logging.getLogger(__name__)

from .log import log_and_raise_error,log_warning,log_info,log_debug

PHASES = ("init", "adjustment", "sssp", "augmentation", "verification")

class QueryStats:
    """
    Counters of rank-oracle calls per solver phase and per matroid

    The solver attaches one instance to both of its (outermost) oracles and switches the current phase with :meth:`phase`. Counters never decrease.

    Kwargs:
      :phase (str): Initial phase (default ``'init'``)
    """
    def __init__(self, phase="init"):
        self._lock = threading.Lock()
        self._counts = dict([(p, [0, 0]) for p in PHASES])
        self.set_phase(phase)

    def set_phase(self, phase):
        if phase not in PHASES:
            log_and_raise_error(logger, "%s is not a valid query phase. Choose one of %s." % (phase, ", ".join(PHASES)), exception=ValueError)
        self._phase = phase

    def get_phase(self):
        return self._phase

    @contextlib.contextmanager
    def phase(self, phase):
        """
        Count all queries issued inside the ``with`` block under ``phase`` and restore the previous phase afterwards
        """
        previous = self._phase
        self.set_phase(phase)
        try:
            yield self
        finally:
            self._phase = previous

    def count(self, side):
        """
        Register one query of matroid ``side`` (1 or 2) in the current phase
        """
        with self._lock:
            self._counts[self._phase][side - 1] += 1

    def get(self, phase=None, side=None):
        """
        Return the number of queries, optionally restricted to one phase and/or one matroid side
        """
        phases = PHASES if phase is None else [phase]
        sides = [0, 1] if side is None else [side - 1]
        with self._lock:
            return sum([self._counts[p][s] for p in phases for s in sides])

    def total(self, exclude=()):
        return sum([self.get(p) for p in PHASES if p not in exclude])

    def snapshot(self):
        """
        Return the counters as a plain dictionary ``{phase: [matroid1, matroid2]}``
        """
        with self._lock:
            return dict([(p, list(c)) for p, c in self._counts.items()])


@contextlib.contextmanager
def in_phase(stats, phase):
    """
    Same as ``stats.phase(phase)`` but does nothing if ``stats`` is ``None``
    """
    if stats is None:
        yield None
    else:
        with stats.phase(phase):
            yield stats
