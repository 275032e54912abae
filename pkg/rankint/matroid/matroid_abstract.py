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

from __future__ import print_function, absolute_import # Compatibility with python 2 and 3

# System packages
import threading

# Logging
import logging
logger = logging.getLogger(__name__)
from rankint.utils.log import log_and_raise_error,log_warning,log_info,log_debug
from rankint.utils.log import InstanceFormatError


class SetExpr:
    r"""
    Set of element ids of the form ``base - minus + plus``

    ``minus`` and ``plus`` are typically contiguous prefix views of an :class:`rankint.exchange.OrderedPool`, so that a binary-search step does not have to build a new set. The size is known without evaluating the expression.

    Args:
      :base: Collection of element ids

    Kwargs:
      :minus: Sized collection of ids contained in ``base`` that are removed (default ``None``)

      :plus: Sized collection of ids disjoint from ``base`` that are added (default ``None``)
    """
    __slots__ = ("base", "minus", "plus")

    def __init__(self, base, minus=None, plus=None):
        self.base = base
        self.minus = minus
        self.plus = plus

    def __len__(self):
        l = len(self.base)
        if self.minus is not None:
            l -= len(self.minus)
        if self.plus is not None:
            l += len(self.plus)
        return l

    def members(self):
        """
        Evaluate the expression and return the ids as a list
        """
        if self.minus is not None and len(self.minus) > 0:
            removed = set(self.minus)
            ids = [x for x in self.base if x not in removed]
        else:
            ids = list(self.base)
        if self.plus is not None:
            ids.extend(self.plus)
        return ids


def as_members(s):
    """
    Return the element ids of a :class:`SetExpr` or of any iterable of ids as a list
    """
    if isinstance(s, SetExpr):
        return s.members()
    return list(s)


class AbstractMatroid:
    r"""
    Base class for every rank oracle

    A matroid over the ground set :math:`\{0, \ldots, n-1\}` is accessed exclusively through :meth:`rank`. Every call increments :attr:`query_count` by exactly one and, if a :class:`rankint.utils.querystats.QueryStats` instance is attached, the counter of its current phase.

    Args:
      :size (int): Number of elements *n* of the ground set
    """
    def __init__(self, size):
        if size < 0:
            log_and_raise_error(logger, "Ground set size must be non-negative (got %i)." % size, exception=InstanceFormatError)
        self._size = int(size)
        self._lock = threading.Lock()
        self.query_count = 0
        self._stats = None
        self._side = None

    def get_size(self):
        """
        Return the size of the ground set
        """
        return self._size

    def attach_stats(self, stats, side):
        """
        Report every further query to ``stats`` as a query of matroid ``side`` (1 or 2)
        """
        self._stats = stats
        self._side = side

    def detach_stats(self):
        self._stats = None
        self._side = None

    def rank(self, s):
        """
        Return the rank of a set of element ids

        Args:
          :s: :class:`SetExpr` or iterable of element ids
        """
        ids = as_members(s)
        self._check_ids(ids)
        with self._lock:
            self.query_count += 1
        if self._stats is not None:
            self._stats.count(self._side)
        return self._rank(ids)

    def is_independent(self, s):
        """
        Return ``True`` if the set is independent, i.e. its rank equals its size (one rank query)
        """
        ids = as_members(s)
        return self.rank(ids) == len(ids)

    def get_full_rank(self):
        """
        Return the rank of the whole ground set (one rank query)
        """
        return self.rank(range(self._size))

    def _check_ids(self, ids):
        if ids and (min(ids) < 0 or max(ids) >= self._size):
            log_and_raise_error(logger, "Element id out of range [0, %i) in rank query." % self._size, exception=InstanceFormatError)

    def _rank(self, ids):
        log_and_raise_error(logger, "%s does not implement a rank rule." % self.__class__.__name__, exception=NotImplementedError)

    def get_conf(self):
        """
        Get the descriptor of the matroid in form of a dictionary (the ``matroid1``/``matroid2`` objects of an instance file)
        """
        log_and_raise_error(logger, "%s cannot be described by a descriptor." % self.__class__.__name__, exception=NotImplementedError)

    def __repr__(self):
        return "%s(n=%i)" % (self.__class__.__name__, self._size)
