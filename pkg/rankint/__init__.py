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

from .matroid import UniformMatroid, PartitionMatroid, GraphicMatroid, LinearMatroidGF2
from .matroid import truncate, pad_with_free_elements, discard_negative, matroid_from_descriptor
from .exchange import OrderedPool, find_removal_exchange, find_insertion_exchange, find_free_element, greedy_max_basis
from .splitting import WeightSplit, PartialSolution, initial_solution, adjust_weights
from .sssp import shortest_path_tree, batch_relax
from .augment import apply_augmentation
from .solver import SolveConfig, Solver, Certificate, RunReport
from .solver import solve, refine, max_cardinality_intersection, certify_optimality, solver_from_configfile, config_from_configdict
from .instance import Instance, read_instance, write_instance
import rankint.utils

__version__ = '0.1.0'

def _init():
    # Log to stdout
    import logging, sys
    h = logging.StreamHandler(sys.stdout)
    logging.getLogger('rankint').addHandler(h)

_init()
