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
Seeded instance generators with a planted common independent set of size ``r``
"""

from __future__ import print_function, absolute_import # Compatibility with python 2 and 3
import numpy
import scipy.sparse
import scipy.sparse.csgraph

import logging
logger = logging.getLogger(__name__)
from rankint.utils.log import log_and_raise_error,log_warning,log_info,log_debug

from rankint.instance import Instance

FAMILIES = ("matching", "graphic-partition", "linear-graphic", "uniform-uniform", "uniform-partition", "uniform-graphic")


def _check_parameters(family, n, r, W):
    if family not in FAMILIES:
        log_and_raise_error(logger, "Generator family %s is not implemented. Choose one of %s." % (family, ", ".join(FAMILIES)), exception=ValueError)
    if n < 0 or r < 0 or W < 0:
        log_and_raise_error(logger, "Parameters n=%i, r=%i, W=%i must be non-negative." % (n, r, W), exception=ValueError)
    if r > n:
        log_and_raise_error(logger, "Rank r=%i cannot exceed n=%i." % (r, n), exception=ValueError)
    if r == 0 and n > 0 and family != "uniform-uniform":
        log_and_raise_error(logger, "Family %s has no elements of rank 0 (r=0 requires n=0)." % family, exception=ValueError)

def _weights(rng, n, W, signed):
    low = -W if signed else 0
    return [int(x) for x in rng.randint(low, W + 1, size=n)]

def _spanning_tree_graph(rng, r, extra):
    # Random tree on r+1 vertices followed by ``extra`` random non-loop edges
    tree = [[int(rng.randint(i)), i] for i in range(1, r + 1)]
    edges = []
    for i in range(extra):
        u, v = rng.choice(r + 1, size=2, replace=False)
        edges.append([int(u), int(v)])
    graph = scipy.sparse.coo_matrix((numpy.ones(len(tree)), ([u for u, v in tree], [v for u, v in tree])), shape=(r + 1, r + 1))
    ncomp = scipy.sparse.csgraph.connected_components(graph, directed=False, return_labels=False)
    if ncomp != 1:
        log_and_raise_error(logger, "Planted tree on %i vertices is not connected." % (r + 1), exception=RuntimeError)
    return tree, edges

def _graphic(rng, n, r):
    tree, extra = _spanning_tree_graph(rng, r, n - r) if r > 0 else ([], [])
    order = rng.permutation(n)
    edges = [None] * n
    for i, e in enumerate(tree + extra):
        edges[order[i]] = e
    return {"type": "graphic", "vertices": r + 1, "edges": edges}, [int(order[i]) for i in range(len(tree))]

def _partition_by_label(labels, nblocks, cap=1):
    blocks = [[] for i in range(nblocks)]
    for x, b in enumerate(labels):
        blocks[b].append(x)
    return {"type": "partition", "blocks": blocks, "caps": [cap] * nblocks}

def _uniform(n, k):
    return {"type": "uniform", "n": n, "k": k}


def generate(family, n, r=None, W=32, seed=0, signed=False):
    """
    Generate an instance whose largest common independent set has exactly ``r`` elements

    Families:
      - ``matching``: edges of a bipartite graph with ``r`` vertices per side and a planted perfect matching, one partition matroid per side
      - ``graphic-partition``: colourful spanning tree; graph on ``r+1`` vertices with a planted spanning tree whose edges have distinct colours
      - ``linear-graphic``: binary matrix with ``r`` rows whose planted columns are unit vectors, against a graph with a planted spanning tree on the same elements
      - ``uniform-uniform``, ``uniform-partition``, ``uniform-graphic``: uniform matroid of rank ``r`` against a second family

    Args:
      :family (str): One of :data:`FAMILIES`

      :n (int): Number of elements

    Kwargs:
      :r (int): Common rank (default ``(n+1)//2``)

      :W (int): Largest absolute weight (default ``32``)

      :seed (int): Seed of ``numpy.random.RandomState`` (default ``0``)

      :signed (bool): Draw weights from ``[-W, W]`` instead of ``[0, W]`` (default ``False``)
    """
    if r is None:
        r = (n + 1) // 2
    _check_parameters(family, n, r, W)
    rng = numpy.random.RandomState(seed)
    if family == "matching":
        left = list(range(r)) + [int(x) for x in rng.randint(r, size=n - r)] if r > 0 else []
        right = [int(x) for x in rng.permutation(r)] + [int(x) for x in rng.randint(r, size=n - r)] if r > 0 else []
        order = rng.permutation(n)
        l, rr = [0] * n, [0] * n
        for i in range(n):
            l[order[i]] = left[i]
            rr[order[i]] = right[i]
        m1 = _partition_by_label(l, r)
        m2 = _partition_by_label(rr, r)
    elif family == "graphic-partition":
        m1, planted = _graphic(rng, n, r)
        colours = [int(x) for x in rng.randint(r, size=n)] if r > 0 else []
        for i, x in enumerate(planted):
            colours[x] = i
        m2 = _partition_by_label(colours, r)
    elif family == "linear-graphic":
        m2, planted = _graphic(rng, n, r)
        cols = ["".join([str(b) for b in rng.randint(2, size=r)]) for x in range(n)]
        for i, x in enumerate(planted):
            cols[x] = "".join(["1" if j == i else "0" for j in range(r)])
        m1 = {"type": "linear_gf2", "rows": r, "cols": cols}
    elif family == "uniform-uniform":
        m1 = _uniform(n, r)
        m2 = _uniform(n, int(rng.randint(r, n + 1)))
    elif family == "uniform-partition":
        m1 = _uniform(n, r)
        labels = [i for i in range(r)] + [int(x) for x in rng.randint(r, size=n - r)]
        labels = [labels[i] for i in rng.permutation(n)]
        m2 = _partition_by_label(labels, r)
    elif family == "uniform-graphic":
        m1 = _uniform(n, r)
        m2, planted = _graphic(rng, n, r)
    weights = _weights(rng, n, W, signed)
    meta = {"name": "%s-n%i-r%i-W%i-s%i" % (family, n, r, W, seed), "seed": seed,
            "family": family, "n": n, "r": r, "W": W}
    log_debug(logger, "Generated %s" % meta["name"])
    return Instance(m1, m2, weights, meta)
