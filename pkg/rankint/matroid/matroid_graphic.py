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

import logging
logger = logging.getLogger(__name__)
from rankint.utils.log import log_and_raise_error,log_warning,log_info,log_debug
from rankint.utils.log import InstanceFormatError

from .matroid_abstract import AbstractMatroid

class GraphicMatroid(AbstractMatroid):
    """
    Graphic (cycle) matroid of an undirected multigraph: a set of edges is independent if it is a forest

    The rank of an edge set is its size minus the number of edges that close a cycle. A disjoint-set forest over the touched endpoints is rebuilt for every query.

    Args:
      :vertices (int): Number of vertices

      :edges: List of ``[u, v]`` vertex pairs; edge *i* is element *i* of the ground set
    """
    def __init__(self, vertices, edges):
        edges = [(int(u), int(v)) for u, v in edges]
        AbstractMatroid.__init__(self, len(edges))
        for u, v in edges:
            if u < 0 or v < 0 or u >= vertices or v >= vertices:
                log_and_raise_error(logger, "Edge (%i, %i) has an endpoint outside of 0..%i." % (u, v, vertices - 1), exception=InstanceFormatError)
        self.vertices = int(vertices)
        self.edges = edges

    def _rank(self, ids):
        parent = {}
        def find(a):
            root = parent.setdefault(a, a)
            while root != parent[root]:
                # Path halving
                parent[root] = parent[parent[root]]
                root = parent[root]
            return root
        rank = 0
        for x in ids:
            u, v = self.edges[x]
            ru = find(u)
            rv = find(v)
            if ru != rv:
                parent[ru] = rv
                rank += 1
        return rank

    def get_conf(self):
        return {"type": "graphic", "vertices": self.vertices, "edges": [[u, v] for u, v in self.edges]}
