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
Augmentation of a partial solution along a shortest exchange path
"""

from __future__ import print_function, absolute_import # Compatibility with python 2 and 3

import logging
logger = logging.getLogger(__name__)
from rankint.utils.log import log_and_raise_error,log_warning,log_info,log_debug
from rankint.utils.log import InvariantViolation
from rankint.utils.querystats import in_phase

from rankint.splitting import WeightSplit, PartialSolution, is_maximum_basis


class AugmentationRecord:
    """
    Diagnostics of one augmentation: the path, the intersection sizes before and after, and the applied distance shifts
    """
    def __init__(self, path, before, after, deltas):
        self.path = path
        self.before = before
        self.after = after
        self.deltas = deltas

    def to_dict(self):
        return {"path": self.path.to_dict(), "before": self.before, "after": self.after}

    def __repr__(self):
        return "AugmentationRecord(|S1&S2|: %i -> %i, %i edges)" % (self.before, self.after, len(self.path.sides))


def _fail(message, record):
    log_and_raise_error(logger, message, exception=lambda msg: InvariantViolation(msg, record=record))

def apply_augmentation(m1, m2, sol, result, debug_level=1, stats=None):
    r"""
    Exchange the bases of ``sol`` along the path of ``result`` and shift the weights by the distances

    Every E1 edge ``x -> y`` of the path replaces ``x`` by ``y`` in :math:`S_1`, every E2 edge ``y -> x`` replaces ``x`` by ``y`` in :math:`S_2`. The new weights are :math:`w_1 + d` and :math:`w_2 - d`, which keeps :math:`w_1 + w_2` unchanged.

    Args:
      :m1: Rank oracle of matroid 1

      :m2: Rank oracle of matroid 2

      :sol (PartialSolution): Partial solution the path was computed for

      :result (ShortestPathResult): Output of :func:`rankint.sssp.shortest_path_tree` for ``sol``

    Kwargs:
      :debug_level (int): From level 1 on both new bases are checked for independence and maximality (default ``1``)

      :stats: :class:`rankint.utils.querystats.QueryStats` attached to the oracles (default ``None``)

    Returns a tuple ``(sol, record)`` with the new :class:`rankint.splitting.PartialSolution` and the :class:`AugmentationRecord`.
    """
    s1 = set(sol.s1)
    s2 = set(sol.s2)
    for tail, head, side in result.edges():
        if side == 1:
            s1.remove(tail)
            s1.add(head)
        else:
            s2.remove(head)
            s2.add(tail)
    split = sol.split
    d = result.distances()
    w1 = [a + b for a, b in zip(split.w1, d)]
    w2 = [a - b for a, b in zip(split.w2, d)]
    new = PartialSolution(WeightSplit(split.w, w1, w2, split.epsilon, split.scale_exp), s1, s2)
    record = AugmentationRecord(result, len(sol.s1 & sol.s2), len(s1 & s2), d)

    if record.after <= record.before:
        _fail("Augmentation did not grow the intersection (%i -> %i)." % (record.before, record.after), record)
    if len(s1) != len(sol.s1) or len(s2) != len(sol.s2):
        _fail("Augmentation changed the basis sizes.", record)
    for x in range(len(w1)):
        if w1[x] + w2[x] != split.w1[x] + split.w2[x]:
            _fail("Augmentation changed w1+w2 of element %i." % x, record)
    if debug_level >= 1:
        with in_phase(stats, "verification"):
            for i, m, s, f in ((1, m1, s1, w1), (2, m2, s2, w2)):
                if not m.is_independent(s):
                    _fail("Augmented basis of matroid %i is dependent." % i, record)
                if not is_maximum_basis(m, f, s):
                    _fail("Augmented basis of matroid %i is not w%i-maximum." % (i, i), record)
    return new, record
