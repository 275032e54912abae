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

class UniformMatroid(AbstractMatroid):
    """
    Uniform matroid: every set of at most ``k`` elements is independent

    Args:
      :n (int): Size of the ground set

      :k (int): Rank of the matroid
    """
    def __init__(self, n, k):
        AbstractMatroid.__init__(self, n)
        if k < 0:
            log_and_raise_error(logger, "Rank of a uniform matroid must be non-negative (got k=%i)." % k, exception=InstanceFormatError)
        self.k = int(k)

    def _rank(self, ids):
        return min(len(ids), self.k)

    def get_conf(self):
        return {"type": "uniform", "n": self.get_size(), "k": self.k}
