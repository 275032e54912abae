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
Oracle transformations used by the solver (restriction, truncation, zero-weight padding) and construction of oracles from descriptors
"""

from __future__ import print_function, absolute_import # Compatibility with python 2 and 3

import logging
logger = logging.getLogger(__name__)
from rankint.utils.log import log_and_raise_error,log_warning,log_info,log_debug
from rankint.utils.log import InstanceFormatError

from .matroid_abstract import AbstractMatroid
from .matroid_uniform import UniformMatroid
from .matroid_partition import PartitionMatroid
from .matroid_graphic import GraphicMatroid
from .matroid_linear import LinearMatroidGF2


class TruncatedMatroid(AbstractMatroid):
    """
    Truncation of a matroid to rank ``r``: every set of more than ``r`` elements is dependent

    Each query issues exactly one query to the inner oracle.

    Args:
      :inner: Matroid to be truncated

      :r (int): Rank bound
    """
    def __init__(self, inner, r):
        AbstractMatroid.__init__(self, inner.get_size())
        if r < 0:
            log_and_raise_error(logger, "Truncation rank must be non-negative (got %i)." % r, exception=ValueError)
        self.inner = inner
        self.r = int(r)

    def _rank(self, ids):
        return min(self.inner.rank(ids), self.r)

    def get_conf(self):
        return {"type": "truncated", "r": self.r, "inner": self.inner.get_conf()}


class PaddedMatroid(AbstractMatroid):
    r"""
    Extension of a rank-``r`` matroid by ``r`` free elements :math:`Z` with ids ``n .. n+r-1``

    The rank of :math:`\tilde{S}` is :math:`\min(\mathrm{rank}(\tilde{S} \setminus Z) + |\tilde{S} \cap Z|, r)`. Padding elements carry weight 0 in the solver.

    Args:
      :inner: Matroid already truncated to rank ``r``

      :r (int): Number of padding elements
    """
    def __init__(self, inner, r):
        AbstractMatroid.__init__(self, inner.get_size() + r)
        self.inner = inner
        self.r = int(r)
        self._offset = inner.get_size()

    def is_padding(self, x):
        return x >= self._offset

    def get_padding(self):
        return list(range(self._offset, self._offset + self.r))

    def _rank(self, ids):
        core = [x for x in ids if not self.is_padding(x)]
        free = len(ids) - len(core)
        return min(self.inner.rank(core) + free, self.r)

    def get_conf(self):
        return {"type": "padded", "r": self.r, "inner": self.inner.get_conf()}


class RestrictedMatroid(AbstractMatroid):
    """
    Restriction of a matroid to a subset of its elements, re-indexed densely

    Args:
      :inner: Matroid to be restricted

      :kept: List of ids of ``inner``; element *i* of the restriction is ``kept[i]``
    """
    def __init__(self, inner, kept):
        AbstractMatroid.__init__(self, len(kept))
        self.inner = inner
        self.kept = list(kept)

    def _rank(self, ids):
        kept = self.kept
        return self.inner.rank([kept[x] for x in ids])

    def get_conf(self):
        return {"type": "restricted", "kept": list(self.kept), "inner": self.inner.get_conf()}


def truncate(oracle, r):
    """
    Return an oracle computing ``min(rank(S), r)``
    """
    return TruncatedMatroid(oracle, r)

def pad_with_free_elements(oracle, r):
    """
    Return ``oracle`` extended by ``r`` free elements (ids ``n .. n+r-1``), see :class:`PaddedMatroid`
    """
    return PaddedMatroid(oracle, r)

def restrict(oracle, kept):
    return RestrictedMatroid(oracle, kept)

def discard_negative(weights):
    """
    Split off the elements with negative weight

    Args:
      :weights: Integer weight per element

    Returns a tuple ``(kept, remapping)`` with ``kept`` the ascending list of ids with weight >= 0 and ``remapping`` a dictionary from original id to dense new id.
    """
    kept = [x for x, w in enumerate(weights) if w >= 0]
    remapping = dict([(x, i) for i, x in enumerate(kept)])
    return kept, remapping


def matroid_from_descriptor(descriptor):
    """
    Initialise a matroid from a descriptor dictionary (the ``matroid1``/``matroid2`` objects of an instance file)

    *See also:*

      - :meth:`rankint.matroid.matroid_abstract.AbstractMatroid.get_conf`
    """
    if not isinstance(descriptor, dict) or "type" not in descriptor:
        log_and_raise_error(logger, "Matroid descriptor must be an object with a \"type\" field.", exception=InstanceFormatError)
    t = descriptor["type"]
    try:
        if t == "uniform":
            return UniformMatroid(n=descriptor["n"], k=descriptor["k"])
        elif t == "partition":
            return PartitionMatroid(blocks=descriptor["blocks"], caps=descriptor["caps"])
        elif t == "graphic":
            return GraphicMatroid(vertices=descriptor["vertices"], edges=descriptor["edges"])
        elif t == "linear_gf2":
            return LinearMatroidGF2(rows=descriptor["rows"], cols=descriptor["cols"])
        elif t == "truncated":
            return TruncatedMatroid(matroid_from_descriptor(descriptor["inner"]), descriptor["r"])
        elif t == "padded":
            return PaddedMatroid(matroid_from_descriptor(descriptor["inner"]), descriptor["r"])
        elif t == "restricted":
            return RestrictedMatroid(matroid_from_descriptor(descriptor["inner"]), descriptor["kept"])
    except KeyError as e:
        log_and_raise_error(logger, "Matroid descriptor of type \"%s\" lacks field %s." % (t, e), exception=InstanceFormatError)
    except (TypeError, ValueError) as e:
        log_and_raise_error(logger, "Matroid descriptor of type \"%s\" is malformed: %s" % (t, e), exception=InstanceFormatError)
    log_and_raise_error(logger, "Matroid type \"%s\" is not implemented." % t, exception=InstanceFormatError)
