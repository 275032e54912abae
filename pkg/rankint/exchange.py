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
Ordered pools, binary-search exchange finders and the greedy maximum-weight basis
"""

from __future__ import print_function, absolute_import # Compatibility with python 2 and 3
from sortedcontainers import SortedList

import logging
logger = logging.getLogger(__name__)
from rankint.utils.log import log_and_raise_error,log_warning,log_info,log_debug
from rankint.utils.log import ContractViolation

from rankint.matroid import SetExpr

MIN = "min"
MAX = "max"


class OrderedPool:
    """
    Elements with an exact integer priority, iterated in ascending (priority, id) order

    With ``descending=True`` the iteration order is descending priority and ascending id, which is the order a maximizing search needs. Insert, remove, re-key and k-th element access take O(log n) comparisons. :meth:`prefix` returns a view of the first *j* elements that can be placed in a :class:`rankint.matroid.SetExpr`.

    Kwargs:
      :items: Iterable of ``(element, priority)`` pairs (default ``()``)

      :descending (bool): Order by descending priority (default ``False``)
    """
    def __init__(self, items=(), descending=False):
        self.descending = descending
        self._keys = dict(items)
        self._list = SortedList([self._entry(x, k) for x, k in self._keys.items()])

    def _entry(self, x, key):
        return (-key, x) if self.descending else (key, x)

    def insert(self, x, key):
        if x in self._keys:
            log_and_raise_error(logger, "Element %i is already in the pool." % x, exception=ContractViolation)
        self._keys[x] = key
        self._list.add(self._entry(x, key))

    def remove(self, x):
        key = self._keys.pop(x)
        self._list.remove(self._entry(x, key))

    def discard(self, x):
        if x in self._keys:
            self.remove(x)

    def rekey(self, x, key):
        self.remove(x)
        self.insert(x, key)

    def key(self, x):
        """
        Return the priority of element ``x``
        """
        return self._keys[x]

    def clear(self):
        self._keys.clear()
        self._list.clear()

    def first(self):
        return self._list[0][1] if self._list else None

    def prefix(self, j):
        """
        Return a view of the first ``j`` elements in pool order
        """
        return PoolSlice(self, 0, j)

    def __getitem__(self, k):
        return self._list[k][1]

    def __len__(self):
        return len(self._keys)

    def __contains__(self, x):
        return x in self._keys

    def __iter__(self):
        return (x for _, x in self._list)

    def __repr__(self):
        return "OrderedPool(%s%s)" % ([(x, self._keys[x]) for x in self], ", descending" if self.descending else "")


class PoolSlice:
    """
    Contiguous slice ``[start, stop)`` of an :class:`OrderedPool`, evaluated lazily against the pool state at iteration time
    """
    __slots__ = ("_pool", "_start", "_stop")

    def __init__(self, pool, start, stop):
        self._pool = pool
        self._start = start
        self._stop = stop

    def __len__(self):
        return self._stop - self._start

    def __iter__(self):
        return (x for _, x in self._pool._list.islice(self._start, self._stop))


def _check_objective(pool, objective):
    if objective not in (MIN, MAX):
        log_and_raise_error(logger, "Objective %s is invalid. Has to be either \'min\' or \'max\'." % objective, exception=ValueError)
    if pool.descending != (objective == MAX):
        log_and_raise_error(logger, "Pool order does not match objective \'%s\'." % objective, exception=ContractViolation)

def _first_true(predicate, m):
    # predicate is monotone on 1..m and predicate(m) holds
    lo, hi = 1, m
    while lo < hi:
        mid = (lo + hi) // 2
        if predicate(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo

def find_removal_exchange(oracle, s, x, pool, objective=MIN, basis=False):
    r"""
    Find the objective-extreme :math:`b \in B` such that :math:`(S \setminus \{b\}) \cup \{x\}` is independent

    The first *j* pool elements :math:`P_j` meet the unique circuit of :math:`S \cup \{x\}` if and only if :math:`\mathrm{rank}((S \cup \{x\}) \setminus P_j) = |S| + 1 - j`. The predicate is monotone in *j*, so a binary search finds the first valid element in pool order with at most :math:`\lceil \log_2 |B| \rceil + 2` rank queries.

    Args:
      :oracle: Rank oracle

      :s: Independent set (set of ids)

      :x: Element not in ``s``

      :pool (OrderedPool): Candidates :math:`B \subseteq S`, ascending for ``MIN``, descending for ``MAX``

    Kwargs:
      :objective (str): ``MIN`` or ``MAX`` (default ``MIN``)

      :basis (bool): ``s`` is known to be a basis, which saves the independence query on :math:`S \cup \{x\}` (default ``False``)

    Returns the element or ``None`` if no valid element exists (also if :math:`S \cup \{x\}` is independent).
    """
    _check_objective(pool, objective)
    if x in s:
        log_and_raise_error(logger, "Removal exchange requires x=%i outside of S." % x, exception=ContractViolation)
    assert all([b in s for b in pool]), "pool is not a subset of S"
    m = len(pool)
    if m == 0:
        return None
    size = len(s)
    plus = (x,)
    if not basis and oracle.rank(SetExpr(s, plus=plus)) == size + 1:
        return None
    predicate = lambda j: oracle.rank(SetExpr(s, minus=pool.prefix(j), plus=plus)) == size + 1 - j
    if not predicate(m):
        return None
    return pool[_first_true(predicate, m) - 1]

def find_insertion_exchange(oracle, s, x, pool, objective=MAX):
    r"""
    Find the objective-extreme :math:`b \in B` such that :math:`(S \setminus \{x\}) \cup \{b\}` is independent

    :math:`\mathrm{rank}((S \setminus \{x\}) \cup P_j) = |S|` holds if and only if the first *j* pool elements contain a valid element. At most :math:`\lceil \log_2 |B| \rceil + 1` rank queries are used.

    Args:
      :oracle: Rank oracle

      :s: Independent set (set of ids)

      :x: Element of ``s``

      :pool (OrderedPool): Candidates :math:`B \subseteq V \setminus S`, ascending for ``MIN``, descending for ``MAX``

    Kwargs:
      :objective (str): ``MIN`` or ``MAX`` (default ``MAX``)

    Returns the element or ``None``.
    """
    _check_objective(pool, objective)
    if x not in s:
        log_and_raise_error(logger, "Insertion exchange requires x=%i inside of S." % x, exception=ContractViolation)
    assert not any([b in s for b in pool]), "pool intersects S"
    m = len(pool)
    if m == 0:
        return None
    size = len(s)
    minus = (x,)
    predicate = lambda j: oracle.rank(SetExpr(s, minus=minus, plus=pool.prefix(j))) == size
    if not predicate(m):
        return None
    return pool[_first_true(predicate, m) - 1]

def find_free_element(oracle, s, pool):
    r"""
    Find the first pool element :math:`b` such that :math:`S \cup \{b\}` is independent (``S`` independent, pool disjoint from ``S``)

    Uses at most :math:`\lceil \log_2 |B| \rceil + 1` rank queries and returns ``None`` if no such element exists.
    """
    m = len(pool)
    if m == 0:
        return None
    size = len(s)
    predicate = lambda j: oracle.rank(SetExpr(s, plus=pool.prefix(j))) > size
    if not predicate(m):
        return None
    return pool[_first_true(predicate, m) - 1]

def greedy_max_basis(oracle, f, elements=None, rank=None):
    """
    Return an ``f``-maximum basis

    Elements are scanned in descending (f, id) order and added whenever the set stays independent (one rank query per scanned element).

    Args:
      :oracle: Rank oracle

      :f: Weight per element id (list or dictionary of exact integers)

    Kwargs:
      :elements: Elements to scan (default: whole ground set)

      :rank (int): Known rank of the matroid; the scan stops once the basis has this size (default ``None``)
    """
    if elements is None:
        elements = range(oracle.get_size())
    order = sorted(elements, key=lambda x: (-f[x], x))
    basis = []
    for x in order:
        if rank is not None and len(basis) >= rank:
            break
        if oracle.rank(SetExpr(basis, plus=(x,))) == len(basis) + 1:
            basis.append(x)
    return set(basis)

def weight_of(f, s):
    return sum([f[x] for x in s])
