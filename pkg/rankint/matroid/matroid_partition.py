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

class PartitionMatroid(AbstractMatroid):
    r"""
    Partition matroid: a set is independent if it holds at most ``caps[b]`` elements of every block ``b``

    The blocks have to partition the ground set :math:`\{0, \ldots, n-1\}` with *n* the total number of listed elements. A block with capacity 0 consists of loops.

    Args:
      :blocks: List of lists of element ids

      :caps: List of block capacities (same length as ``blocks``)
    """
    def __init__(self, blocks, caps):
        blocks = [[int(x) for x in b] for b in blocks]
        caps = [int(c) for c in caps]
        if len(blocks) != len(caps):
            log_and_raise_error(logger, "Partition matroid has %i blocks but %i capacities." % (len(blocks), len(caps)), exception=InstanceFormatError)
        n = sum([len(b) for b in blocks])
        AbstractMatroid.__init__(self, n)
        self._block_of = [-1] * n
        for i, b in enumerate(blocks):
            if caps[i] < 0:
                log_and_raise_error(logger, "Capacity of block %i is negative." % i, exception=InstanceFormatError)
            for x in b:
                if x < 0 or x >= n or self._block_of[x] != -1:
                    log_and_raise_error(logger, "Blocks of a partition matroid must partition 0..%i (element %i is out of range or listed twice)." % (n - 1, x), exception=InstanceFormatError)
                self._block_of[x] = i
        self.blocks = blocks
        self.caps = caps

    def get_block(self, x):
        """
        Return the index of the block that holds element ``x``
        """
        return self._block_of[x]

    def _rank(self, ids):
        used = {}
        for x in ids:
            b = self.get_block(x)
            used[b] = used.get(b, 0) + 1
        return sum([min(c, self.caps[b]) for b, c in used.items()])

    def get_conf(self):
        return {"type": "partition", "blocks": [list(b) for b in self.blocks], "caps": list(self.caps)}
