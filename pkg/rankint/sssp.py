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
Buffered Dijkstra on the implicit exchange graph of a partial solution

Edges are never materialised. Every relaxation is one exchange search over an :class:`rankint.exchange.OrderedPool`:

  - E1 edge ``x -> y`` (``x`` in S1, ``y`` not in S1, ``S1 - x + y`` independent in matroid 1) has weight ``w1(x) - w1(y)``
  - E2 edge ``y -> x`` (``y`` not in S2, ``x`` in S2, ``S2 - x + y`` independent in matroid 2) has weight ``w2(x) - w2(y)``

Labels are combined integers ``distance * (n + 1) + hops``, so that ordering by label prefers fewer edges among paths of equal weight.
"""

from __future__ import print_function, absolute_import # Compatibility with python 2 and 3
from fractions import Fraction
from sortedcontainers import SortedList

import logging
logger = logging.getLogger(__name__)
from rankint.utils.log import log_and_raise_error,log_warning,log_info,log_debug
from rankint.utils.log import ContractViolation, InvariantViolation
from rankint.utils.querystats import in_phase

from rankint.exchange import OrderedPool, MIN, MAX
from rankint.exchange import find_removal_exchange, find_insertion_exchange
from rankint.splitting import ceil_power

# Debug-level-2 invariant checks are restricted to small ground sets
INVARIANT_CHECK_LIMIT = 64


class DistanceLabel:
    """
    Distance of an element combined with the number of edges of the path realising it

    Args:
      :combined (int): ``distance * base + hops``

      :base (int): Hop base ``n + 1``
    """
    __slots__ = ("combined", "base")

    def __init__(self, combined, base):
        self.combined = combined
        self.base = base

    @classmethod
    def from_parts(cls, distance, hops, base):
        return cls(distance * base + hops, base)

    @property
    def distance(self):
        return self.combined // self.base

    @property
    def hops(self):
        return self.combined % self.base

    def __eq__(self, other):
        return isinstance(other, DistanceLabel) and self.combined == other.combined

    def __lt__(self, other):
        return self.combined < other.combined

    def __le__(self, other):
        return self.combined <= other.combined

    def __hash__(self):
        return hash(self.combined)

    def __repr__(self):
        return "DistanceLabel(distance=%i, hops=%i)" % (self.distance, self.hops)


def sentinel_distance(split):
    """
    Return a distance that exceeds the weight of every path of the exchange graph of ``split``
    """
    n = split.get_size()
    M = max([max(abs(a), abs(b)) for a, b in zip(split.w1, split.w2)] + [0])
    return 2 * n * M + 1


def buffer_size(r, exponent=None):
    r"""
    Flush threshold :math:`\tau = \max(1, \lceil r^{e} \rceil)`, by default with :math:`e = 1/2`
    """
    if exponent is None:
        exponent = Fraction(1, 2)
    return max(1, ceil_power(r, exponent))


class ShortestPathResult:
    """
    Output of :func:`shortest_path_tree`

    Attributes:
      :labels (dict): Combined label of every reachable element

      :base (int): Hop base ``n + 1``

      :sentinel (int): Distance assigned to unreachable elements

      :path (list): Elements of the shortest path with fewest edges, from ``S1 - S2`` to ``S2 - S1``

      :sides (list): Edge set (1 or 2) of every edge of ``path``

      :parents (dict): Relaxing element and edge set of every non-source element as found by the search

      :case1 (list): Number of buffer flushes per side

      :case2 (list): Number of single-element exchange searches per side

      :iterations (int): Number of finalised elements
    """
    def __init__(self, labels, base, sentinel, path, sides, parents, case1, case2, iterations):
        self.labels = labels
        self.base = base
        self.sentinel = sentinel
        self.path = path
        self.sides = sides
        self.parents = parents
        self.case1 = case1
        self.case2 = case2
        self.iterations = iterations

    def is_reachable(self, x):
        return x in self.labels

    def label(self, x):
        if x in self.labels:
            return DistanceLabel(self.labels[x], self.base)
        return DistanceLabel.from_parts(self.sentinel, 0, self.base)

    def distance(self, x):
        """
        True distance of ``x`` (the sentinel if ``x`` is unreachable)
        """
        if x in self.labels:
            return self.labels[x] // self.base
        return self.sentinel

    def hops(self, x):
        return self.labels[x] % self.base if x in self.labels else 0

    def distances(self):
        return [self.distance(x) for x in range(self.base - 1)]

    def edges(self):
        """
        Return the path as a list of ``(tail, head, side)`` triples
        """
        return [(self.path[i], self.path[i+1], self.sides[i]) for i in range(len(self.sides))]

    def get_weight(self):
        return self.distance(self.path[-1])

    def to_dict(self):
        return {"path": list(self.path), "sides": list(self.sides),
                "weight": self.get_weight(), "hops": len(self.sides),
                "case1": list(self.case1), "case2": list(self.case2), "iterations": self.iterations}


class ExchangeGraphView:
    r"""
    State of the buffered Dijkstra over the exchange graph of a partial solution

    Besides the estimate queue the view keeps four ordered pools: unvisited :math:`V \setminus S_1` by :math:`w_1` (descending), unvisited :math:`S_2` by :math:`w_2` (ascending), and the buffers :math:`B_1 \subseteq S_1` by :math:`d + N w_1` and :math:`B_2 \subseteq V \setminus S_2` by :math:`d - N w_2` (:math:`N = n + 1`). A buffer is flushed by :func:`batch_relax` once it holds :math:`\tau` elements. Below that size every buffered element relaxes its single best edge into the unvisited elements, and remembers the head until it is visited.

    Args:
      :m1: Rank oracle of matroid 1

      :m2: Rank oracle of matroid 2

      :sol (PartialSolution): Partial solution with ``s1 != s2``

      :tau (int): Flush threshold of the buffers
    """
    def __init__(self, m1, m2, sol, tau):
        if sol.is_solution():
            log_and_raise_error(logger, "Exchange graph requires S1 != S2.", exception=ContractViolation)
        self.m1 = m1
        self.m2 = m2
        self.sol = sol
        self.s1 = sol.s1
        self.s2 = sol.s2
        self.w1 = sol.split.w1
        self.w2 = sol.split.w2
        self.n = sol.split.get_size()
        self.N = self.n + 1
        self.tau = max(1, int(tau))
        N, w1, w2 = self.N, self.w1, self.w2

        self.free1 = OrderedPool([(y, w1[y]) for y in range(self.n) if y not in self.s1], descending=True)
        self.free2 = OrderedPool([(x, w2[x]) for x in self.s2])
        self.buffer1 = OrderedPool()
        self.buffer2 = OrderedPool()
        # Best unvisited head of every buffered element, None if it has none
        self.target1 = {}
        self.target2 = {}

        self.estimate = {}
        self.queue = SortedList()
        self.parents = {}
        self.labels = {}
        self.finalized = []
        self.case1 = [0, 0]
        self.case2 = [0, 0]
        for x in sol.sources():
            self.relax(x, 0, None, None)

    def relax(self, v, candidate, tail, side):
        old = self.estimate.get(v)
        if old is not None and old <= candidate:
            return
        if old is not None:
            self.queue.remove((old, v))
        self.estimate[v] = candidate
        self.queue.add((candidate, v))
        self.parents[v] = (tail, side)

    def edge_weight(self, tail, head, side):
        if side == 1:
            w = self.w1[tail] - self.w1[head]
        else:
            w = self.w2[head] - self.w2[tail]
        if w < 0:
            log_and_raise_error(logger, "Negative exchange edge %i -> %i in E%i (weight %i): basis %i is not maximum." % (tail, head, side, w, side), exception=InvariantViolation)
        return w

    def candidate(self, tail, head, side):
        return self.labels[tail] + self.N * self.edge_weight(tail, head, side) + 1

    def pop(self):
        """
        Finalise the unvisited element with the smallest (estimate, id) and put it into the buffers
        """
        label, v = self.queue.pop(0)
        del self.estimate[v]
        self.labels[v] = label
        self.finalized.append(v)
        self.free1.discard(v)
        self.free2.discard(v)
        N = self.N
        if v in self.s1:
            self.buffer1.insert(v, label + N * self.w1[v])
        if v not in self.s2:
            self.buffer2.insert(v, label - N * self.w2[v])
        return v

    def best_head(self, b, side):
        if side == 1:
            return find_insertion_exchange(self.m1, self.s1, b, self.free1, MAX)
        return find_removal_exchange(self.m2, self.s2, b, self.free2, MIN, basis=True)

    def relax_buffered(self, side):
        """
        Relax the best edge of every buffered element whose remembered head is visited (or not yet searched)
        """
        buf = self.buffer1 if side == 1 else self.buffer2
        target = self.target1 if side == 1 else self.target2
        for b in list(buf):
            if b in target:
                y = target[b]
                if y is None or y not in self.labels:
                    continue
            y = self.best_head(b, side)
            self.case2[side - 1] += 1
            target[b] = y
            if y is not None:
                self.relax(y, self.candidate(b, y, side), b, side)

    def flush(self, side):
        batch_relax(self, side)
        self.case1[side - 1] += 1
        if side == 1:
            self.buffer1.clear()
            self.target1.clear()
        else:
            self.buffer2.clear()
            self.target2.clear()

    def step(self):
        v = self.pop()
        for side, buf in ((1, self.buffer1), (2, self.buffer2)):
            if len(buf) >= self.tau:
                self.flush(side)
            elif len(buf) > 0:
                self.relax_buffered(side)
        return v

    def tight_predecessor(self, v):
        """
        Return ``(u, side)``: the smallest-id finalised in-neighbour ``u`` of ``v`` whose edge realises the label of ``v`` (E1 before E2 on equal id)
        """
        N, label = self.N, self.labels[v]
        found = []
        if v not in self.s1:
            pool = OrderedPool([(u, self.labels[u] + N * self.w1[u]) for u in self.finalized if u in self.s1])
            u = find_removal_exchange(self.m1, self.s1, v, pool, MIN, basis=True)
            if u is not None and pool.key(u) - N * self.w1[v] + 1 == label:
                found.append((u, 1))
        if v in self.s2:
            pool = OrderedPool([(u, self.labels[u] - N * self.w2[u]) for u in self.finalized if u not in self.s2])
            u = find_insertion_exchange(self.m2, self.s2, v, pool, MIN)
            if u is not None and pool.key(u) + N * self.w2[v] + 1 == label:
                found.append((u, 2))
        if not found:
            log_and_raise_error(logger, "Element %i has no tight predecessor." % v, exception=InvariantViolation)
        return min(found)

    def trace_path(self):
        sinks = [x for x in self.sol.sinks() if x in self.labels]
        if not sinks:
            log_and_raise_error(logger, "No element of S2 - S1 is reachable from S1 - S2.", exception=InvariantViolation)
        v = min(sinks, key=lambda x: (self.labels[x], x))
        path, sides = [v], []
        while self.labels[v] > 0:
            v, side = self.tight_predecessor(v)
            path.append(v)
            sides.append(side)
        path.reverse()
        sides.reverse()
        return path, sides


def batch_relax(view, side):
    r"""
    Relax all edges leaving the buffer of one side into the unvisited elements

    For side 1 every unvisited :math:`v \notin S_1` gets the value :math:`\min_b d(b) + N (w_1(b) - w_1(v)) + 1` over :math:`b \in B_1` with :math:`S_1 - b + v` independent, by one removal search over :math:`B_1` ordered by :math:`d + N w_1`. For side 2 every unvisited :math:`v \in S_2` gets :math:`\min_b d(b) + N (w_2(v) - w_2(b)) + 1` over :math:`b \in B_2` by one insertion search over :math:`B_2` ordered by :math:`d - N w_2`.

    Args:
      :view (ExchangeGraphView): Search state

      :side (int): 1 or 2
    """
    N = view.N
    if side == 1:
        buf = view.buffer1
        if len(buf) == 0:
            return
        for v in list(view.free1):
            b = find_removal_exchange(view.m1, view.s1, v, buf, MIN, basis=True)
            if b is not None:
                view.relax(v, view.candidate(b, v, 1), b, 1)
    else:
        buf = view.buffer2
        if len(buf) == 0:
            return
        for v in list(view.free2):
            b = find_insertion_exchange(view.m2, view.s2, v, buf, MIN)
            if b is not None:
                view.relax(v, view.candidate(b, v, 2), b, 2)


def _check_search_invariants(view, graph, reference):
    # Invariants of the buffered search against the explicit exchange graph
    unvisited = list(view.estimate)
    bound = {}
    for tail, head, side, weight in graph.edges:
        if tail not in view.labels or head in view.labels:
            continue
        if (side == 1 and tail in view.buffer1) or (side == 2 and tail in view.buffer2):
            continue
        c = view.labels[tail] + view.N * weight + 1
        if c < bound.get(head, c + 1):
            bound[head] = c
    for v in unvisited:
        if view.estimate[v] < reference[v] or (v in bound and view.estimate[v] > bound[v]):
            log_and_raise_error(logger, "Estimate of %i outside [d, d~]: %i not in [%i, %s]." % (v, view.estimate[v], reference[v], bound.get(v)), exception=InvariantViolation)
    best = min([reference[v] for v in reference if v not in view.labels])
    if view.queue[0][0] != best:
        log_and_raise_error(logger, "Smallest estimate %i differs from the next distance %i." % (view.queue[0][0], best), exception=InvariantViolation)


def shortest_path_tree(m1, m2, sol, tau=None, debug_level=1, stats=None, trace=None):
    """
    Compute the distances of all elements from ``S1 - S2`` and the shortest path with fewest edges to ``S2 - S1``

    The search runs until the estimate queue is exhausted, so every reachable element ends up with its exact label. Unreachable elements get the distance :func:`sentinel_distance`.

    Args:
      :m1: Rank oracle of matroid 1

      :m2: Rank oracle of matroid 2

      :sol (PartialSolution): Partial solution with ``s1 != s2``

    Kwargs:
      :tau (int): Buffer flush threshold (default ``ceil(sqrt(r))``)

      :debug_level (int): At level 2 the search invariants are checked after every iteration on ground sets of at most 64 elements (default ``1``)

      :stats: :class:`rankint.utils.querystats.QueryStats` attached to the oracles (default ``None``)

      :trace: Callable receiving one dictionary per iteration (default ``None``)
    """
    if tau is None:
        tau = buffer_size(sol.get_rank())
    graph = reference = None
    if debug_level >= 2 and sol.split.get_size() <= INVARIANT_CHECK_LIMIT:
        from rankint.verify import build_explicit_exchange_graph, reference_shortest_paths
        with in_phase(stats, "verification"):
            graph = build_explicit_exchange_graph(m1, m2, sol)
        reference = reference_shortest_paths(graph)[0]

    with in_phase(stats, "sssp"):
        view = ExchangeGraphView(m1, m2, sol, tau)
        it = 0
        while len(view.queue) > 0:
            v = view.step()
            it += 1
            if trace is not None:
                trace({"iteration": it, "element": v,
                       "distance": view.labels[v] // view.N, "hops": view.labels[v] % view.N,
                       "buffer1": len(view.buffer1), "buffer2": len(view.buffer2),
                       "case1": list(view.case1), "case2": list(view.case2),
                       "queries": [m1.query_count, m2.query_count]})
            if graph is not None and len(view.queue) > 0:
                _check_search_invariants(view, graph, reference)
        path, sides = view.trace_path()

    result = ShortestPathResult(dict(view.labels), view.N, sentinel_distance(sol.split), path, sides,
                                view.parents, view.case1, view.case2, it)
    log_debug(logger, "Shortest path: %i edges, weight %i, %i iterations, flushes %s, single searches %s." % (len(sides), result.get_weight(), it, view.case1, view.case2))
    return result
