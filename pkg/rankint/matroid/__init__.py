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

from .matroid_abstract import AbstractMatroid, SetExpr, as_members
from .matroid_uniform import UniformMatroid
from .matroid_partition import PartitionMatroid
from .matroid_graphic import GraphicMatroid
from .matroid_linear import LinearMatroidGF2
from .matroid_transform import TruncatedMatroid, PaddedMatroid, RestrictedMatroid
from .matroid_transform import truncate, pad_with_free_elements, restrict, discard_negative, matroid_from_descriptor
