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
Independent reference oracles: exhaustive search, explicit exchange graphs, textbook shortest paths and sampled matroid-axiom checks
"""

from __future__ import print_function, absolute_import # Compatibility with python 2 and 3
import heapq
import numpy
import scipy.sparse
import scipy.sparse.csgraph

import logging
logger = logging.getLogger(__name__)
from rankint.utils.log import log_and_raise_error,log_warning,log_info,log_debug
from rankint.utils.log import BruteForceRefused, ContractViolation, InvariantViolation

BRUTE_FORCE_LIMIT = 24


def brute_force_best(m1, m2, w, objective="independent", limit=BRUTE_FORCE_LIMIT):
    """
    Return ``(set, weight)`` of the maximum-weight common independent set by enumeration

    Common independent sets are enumerated depth-first in ascending id order (the family is closed under subsets, so only common independent sets are ever extended). Ties are resolved in favour of the lexicographically smallest sorted id tuple.

    Args:
      :m1: Rank oracle of matroid 1

      :m2: Rank oracle of matroid 2

      :w: Integer weight per element

    Kwargs:
      :objective (str): ``'independent'`` or ``'basis'`` (maximum weight among the common independent sets of maximum size) (default ``'independent'``)

      :limit (int): Largest ground set that is enumerated (default ``24``)
    """
    n = len(w)
    if n > limit:
        log_and_raise_error(logger, "Refusing exhaustive enumeration of %i > %i elements." % (n, limit), exception=BruteForceRefused)
    if objective not in ("independent", "basis"):
        log_and_raise_error(logger, "Objective %s is invalid. Has to be either \'independent\' or \'basis\'." % objective, exception=ValueError)
    best = [(), 0]

    def score(s, weight):
        return (len(s), weight) if objective == "basis" else weight

    def extend(current, weight, start):
        for x in range(start, n):
            cand = current + [x]
            if m1.is_independent(cand) and m2.is_independent(cand):
                wc = weight + w[x]
                if score(cand, wc) > score(best[0], best[1]):
                    best[0] = tuple(cand)
                    best[1] = wc
                extend(cand, wc, x + 1)

    extend([], 0, 0)
    return set(best[0]), best[1]


class ExplicitExchangeGraph:
    """
    Exchange graph of a partial solution with every edge materialised

    Attributes:
      :n (int): Number of elements, the source and sink get the indices ``n`` and ``n + 1``

      :sources (list): Heads of the zero-weight source edges (``S1 - S2``)

      :sinks (list): Tails of the zero-weight sink edges (``S2 - S1``)

      :edges (list): ``(tail, head, side, weight)`` for every E1 (``side=1``) and E2 (``side=2``) edge
    """
    def __init__(self, n, sources, sinks, edges):
        self.n = n
        self.sources = list(sources)
        self.sinks = list(sinks)
        self.edges = list(edges)

    def in_edges(self, v):
        return [e for e in self.edges if e[1] == v]

    def get_edges(self, side):
        return [e for e in self.edges if e[2] == side]

    def to_csgraph(self):
        """
        Return the adjacency matrix including source and sink as ``scipy.sparse.csr_matrix`` (entries 1)
        """
        s, t = self.n, self.n + 1
        rows = [e[0] for e in self.edges] + [s] * len(self.sources) + list(self.sinks)
        cols = [e[1] for e in self.edges] + list(self.sources) + [t] * len(self.sinks)
        data = numpy.ones(len(rows), dtype=numpy.int8)
        return scipy.sparse.csr_matrix((data, (rows, cols)), shape=(self.n + 2, self.n + 2))


def build_explicit_exchange_graph(m1, m2, sol):
    """
    Build the exchange graph of ``sol`` by one independence test per candidate edge

    Raises :class:`rankint.utils.log.InvariantViolation` if an edge has negative weight, i.e. a basis is not weight-maximum.
    """
    if sol.is_solution():
        log_and_raise_error(logger, "Exchange graph requires S1 != S2.", exception=ContractViolation)
    n = sol.split.get_size()
    w1, w2 = sol.split.w1, sol.split.w2
    s1, s2 = sorted(sol.s1), sorted(sol.s2)
    edges = []
    for x in s1:
        for y in range(n):
            if y in sol.s1:
                continue
            if m1.is_independent([z for z in s1 if z != x] + [y]):
                edges.append((x, y, 1, w1[x] - w1[y]))
    for x in s2:
        for y in range(n):
            if y in sol.s2:
                continue
            if m2.is_independent([z for z in s2 if z != x] + [y]):
                edges.append((y, x, 2, w2[x] - w2[y]))
    for tail, head, side, weight in edges:
        if weight < 0:
            log_and_raise_error(logger, "Negative exchange edge %i -> %i in E%i (weight %i): basis %i is not maximum." % (tail, head, side, weight, side), exception=InvariantViolation)
    return ExplicitExchangeGraph(n, sol.sources(), sol.sinks(), edges)


def has_st_path(graph):
    """
    Return ``True`` if the sink is reachable from the source (breadth-first search on the unweighted graph)
    """
    order = scipy.sparse.csgraph.breadth_first_order(graph.to_csgraph(), graph.n, directed=True, return_predecessors=False)
    return (graph.n + 1) in set(order.tolist())


def reference_shortest_paths(graph):
    """
    Dijkstra with a binary heap on the explicit graph under combined labels ``distance * (n + 1) + hops``

    The path is traced back from the sink element with the smallest (label, id). The predecessor of each element is the in-neighbour with the smallest id whose edge realises its label, E1 edges first on equal id.

    Returns ``(labels, path, sides)`` with ``labels`` a dictionary of the combined labels of the reachable elements.
    """
    N = graph.n + 1
    adjacency = {}
    for tail, head, side, weight in graph.edges:
        adjacency.setdefault(tail, []).append((head, weight * N + 1))
    labels = {}
    heap = [(0, x) for x in graph.sources]
    heapq.heapify(heap)
    while heap:
        label, v = heapq.heappop(heap)
        if v in labels:
            continue
        labels[v] = label
        for head, c in adjacency.get(v, []):
            if head not in labels:
                heapq.heappush(heap, (label + c, head))
    sinks = [x for x in graph.sinks if x in labels]
    if not sinks:
        log_and_raise_error(logger, "Explicit exchange graph has no st-path.", exception=InvariantViolation)
    v = min(sinks, key=lambda x: (labels[x], x))
    path, sides = [v], []
    while labels[v] > 0:
        tight = [(u, side) for u, _, side, weight in graph.in_edges(v) if u in labels and labels[u] + weight * N + 1 == labels[v]]
        v, side = min(tight)
        path.append(v)
        sides.append(side)
    path.reverse()
    sides.reverse()
    return labels, path, sides


def _random_subset(rng, n, p=0.5):
    return [int(x) for x in numpy.flatnonzero(rng.rand(n) < p)]

def _greedy_independent(oracle, candidates):
    s = []
    for x in candidates:
        if oracle.rank(s + [x]) == len(s) + 1:
            s.append(x)
    return s

def check_matroid_axioms(oracle, sample_count=1000, seed=0):
    """
    Test the rank function of ``oracle`` on random samples and return the list of violations found (empty for a matroid)

    Checked are the normalisation, the bounds :math:`0 \\leq r(A) \\leq |A|`, monotonicity, unit increments, submodularity, closure of independence under subsets and the exchange property between independent sets of different sizes.
    """
    n = oracle.get_size()
    rng = numpy.random.RandomState(seed)
    violations = []
    if oracle.rank([]) != 0:
        violations.append("rank of the empty set is %i" % oracle.rank([]))
    if n == 0:
        return violations
    for i in range(sample_count):
        a = _random_subset(rng, n)
        b = _random_subset(rng, n)
        x = int(rng.randint(n))
        ra, rb = oracle.rank(a), oracle.rank(b)
        union = sorted(set(a) | set(b))
        inter = sorted(set(a) & set(b))
        ru, ri = oracle.rank(union), oracle.rank(inter)
        if not (0 <= ra <= len(a)):
            violations.append("sample %i: rank %i outside [0, %i]" % (i, ra, len(a)))
        if ri > ra or ra > ru:
            violations.append("sample %i: rank not monotone (%i, %i, %i)" % (i, ri, ra, ru))
        if ra + rb < ru + ri:
            violations.append("sample %i: rank not submodular (%i + %i < %i + %i)" % (i, ra, rb, ru, ri))
        if x not in a:
            inc = oracle.rank(a + [x]) - ra
            if inc not in (0, 1):
                violations.append("sample %i: rank increment %i" % (i, inc))
        if ra == len(a) and len(a) > 0:
            sub = [y for y in a if rng.rand() < 0.5]
            if oracle.rank(sub) != len(sub):
                violations.append("sample %i: subset of an independent set is dependent" % i)
        small = _greedy_independent(oracle, [int(y) for y in rng.permutation(a)])
        large = _greedy_independent(oracle, [int(y) for y in rng.permutation(b)])
        if len(small) > len(large):
            small, large = large, small
        if len(small) < len(large):
            witness = any(y not in small and oracle.rank(small + [y]) == len(small) + 1 for y in large)
            if not witness:
                violations.append("sample %i: no exchange element for independent sets of sizes %i and %i" % (i, len(small), len(large)))
    if violations:
        log_warning(logger, "%s violates the matroid axioms in %i checks." % (oracle, len(violations)))
    return violations
