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
import numpy

import logging
logger = logging.getLogger(__name__)
from rankint.utils.log import log_and_raise_error,log_warning,log_info,log_debug
from rankint.utils.log import InstanceFormatError

from .matroid_abstract import AbstractMatroid

WORD_BITS = 64

class LinearMatroidGF2(AbstractMatroid):
    """
    Linear matroid of the columns of a binary matrix: a set of columns is independent if it is linearly independent over GF(2)

    Columns are stored as bitsets. Matrices with up to 64 rows use one machine word per column (a Python integer), larger matrices use ``uint64`` word arrays and eliminate word by word.

    Args:
      :rows (int): Number of matrix rows

      :cols: List of bit strings, one per element; character *i* is the entry in row *i*
    """
    def __init__(self, rows, cols):
        AbstractMatroid.__init__(self, len(cols))
        self.rows = int(rows)
        self.cols = [str(c) for c in cols]
        for c in self.cols:
            if len(c) != self.rows or c.strip("01") != "":
                log_and_raise_error(logger, "Column %s is not a bit string of length %i." % (c, self.rows), exception=InstanceFormatError)
        self._nwords = max(1, -(-self.rows // WORD_BITS))
        bits = numpy.zeros((len(self.cols), self._nwords * WORD_BITS), dtype=numpy.uint8)
        for i, c in enumerate(self.cols):
            if self.rows > 0:
                bits[i, :self.rows] = numpy.frombuffer(c.encode("ascii"), dtype=numpy.uint8) - ord("0")
        words = numpy.packbits(bits, axis=-1, bitorder="little").view("<u8")
        if self._nwords == 1:
            self._columns = [int(w) for w in words[:, 0]] if len(self.cols) > 0 else []
        else:
            self._columns = words.copy()

    def _rank(self, ids):
        if self._nwords == 1:
            return self._rank_single_word(ids)
        return self._rank_multi_word(ids)

    def _rank_single_word(self, ids):
        pivots = {}
        rank = 0
        for x in ids:
            v = self._columns[x]
            while v:
                bit = v.bit_length() - 1
                p = pivots.get(bit)
                if p is None:
                    pivots[bit] = v
                    rank += 1
                    break
                v ^= p
            if rank == self.rows:
                break
        return rank

    def _rank_multi_word(self, ids):
        pivots = {}
        rank = 0
        for x in ids:
            v = self._columns[x].copy()
            while True:
                nz = numpy.flatnonzero(v)
                if nz.size == 0:
                    break
                w = int(nz[-1])
                bit = w * WORD_BITS + int(v[w]).bit_length() - 1
                p = pivots.get(bit)
                if p is None:
                    pivots[bit] = v
                    rank += 1
                    break
                numpy.bitwise_xor(v, p, out=v)
            if rank == self.rows:
                break
        return rank

    def get_conf(self):
        return {"type": "linear_gf2", "rows": self.rows, "cols": list(self.cols)}
