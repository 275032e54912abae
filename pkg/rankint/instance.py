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
Instance files: two matroid descriptors, integer weights and optional metadata in a JSON object
"""

from __future__ import print_function, absolute_import # Compatibility with python 2 and 3
import json

import logging
logger = logging.getLogger(__name__)
from rankint.utils.log import log_and_raise_error,log_warning,log_info,log_debug
from rankint.utils.log import InstanceFormatError

from rankint.matroid import matroid_from_descriptor


class Instance:
    """
    Weighted matroid intersection instance

    Args:
      :matroid1 (dict): Descriptor of matroid 1

      :matroid2 (dict): Descriptor of matroid 2

      :weights (list): Integer weight per element

    Kwargs:
      :meta (dict): Free-form metadata, e.g. ``{"name": ..., "seed": ...}`` (default ``None``)
    """
    def __init__(self, matroid1, matroid2, weights, meta=None):
        self.matroid1 = matroid1
        self.matroid2 = matroid2
        for x in weights:
            if isinstance(x, bool) or not isinstance(x, int):
                log_and_raise_error(logger, "Field \"weights\": %r is not an integer." % (x,), exception=InstanceFormatError)
        self.weights = list(weights)
        self.meta = dict(meta) if meta is not None else {}
        m1, m2 = self.get_matroids()
        if m1.get_size() != m2.get_size():
            log_and_raise_error(logger, "Descriptors disagree on the ground-set size (%i != %i)." % (m1.get_size(), m2.get_size()), exception=InstanceFormatError)
        if m1.get_size() != len(self.weights):
            log_and_raise_error(logger, "Field \"weights\" has %i entries but the ground set has %i elements." % (len(self.weights), m1.get_size()), exception=InstanceFormatError)

    def get_size(self):
        return len(self.weights)

    def get_matroids(self):
        """
        Return a fresh pair of rank oracles (query counters at zero)
        """
        return matroid_from_descriptor(self.matroid1), matroid_from_descriptor(self.matroid2)

    def get_name(self):
        return self.meta.get("name", "instance")

    def to_dict(self):
        return {"matroid1": self.matroid1, "matroid2": self.matroid2,
                "weights": list(self.weights), "meta": dict(self.meta)}


def instance_from_dict(d):
    """
    Initialise an :class:`Instance` from the dictionary of an instance file
    """
    if not isinstance(d, dict):
        log_and_raise_error(logger, "Instance must be a JSON object.", exception=InstanceFormatError)
    for key in ("matroid1", "matroid2", "weights"):
        if key not in d:
            log_and_raise_error(logger, "Instance lacks field \"%s\"." % key, exception=InstanceFormatError)
    if not isinstance(d["weights"], list):
        log_and_raise_error(logger, "Field \"weights\" must be a list.", exception=InstanceFormatError)
    meta = d.get("meta")
    if meta is not None and not isinstance(meta, dict):
        log_and_raise_error(logger, "Field \"meta\" must be an object.", exception=InstanceFormatError)
    return Instance(d["matroid1"], d["matroid2"], d["weights"], meta)

def read_instance(filename):
    """
    Read an instance file
    """
    with open(filename, "r") as f:
        try:
            d = json.load(f)
        except ValueError as e:
            log_and_raise_error(logger, "%s is not valid JSON: %s" % (filename, e), exception=InstanceFormatError)
    return instance_from_dict(d)

def write_instance(instance, filename):
    with open(filename, "w") as f:
        json.dump(instance.to_dict(), f, sort_keys=True)
        f.write("\n")
