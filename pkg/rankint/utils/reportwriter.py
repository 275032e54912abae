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
HDF5 output of run telemetry: every written record becomes one position of a stack of datasets
"""

from __future__ import print_function, absolute_import # Compatibility with python 2 and 3
import numpy, os

import logging
logger = logging.getLogger(__name__)

from .log import log_and_raise_error,log_warning,log_info,log_debug

try:
    import h5py
except ImportError:
    log_warning(logger, "Could not import h5py.")


class ReportWriter:
    """
    Write a sequence of (nested) dictionaries to an HDF5 file

    Each key becomes a dataset whose first axis enumerates the records; nested dictionaries become groups. Scalars are stacked to 1-d datasets, equal-shape arrays to (n+1)-d datasets.

    Args:
      :filename (str): Output file (overwritten)

    Kwargs:
      :chunksize (int): Stack growth increment (default ``16``)

      :gzip_compression (bool): Compress datasets (default ``False``)
    """
    def __init__(self, filename, chunksize=16, gzip_compression=False):
        self._filename = os.path.expandvars(filename)
        if os.path.exists(self._filename):
            log_warning(logger, "File %s exists and is being overwritten" % self._filename)
        self._f = h5py.File(self._filename, "w")
        self._i = 0
        self._chunksize = chunksize
        self._create_dataset_kwargs = {}
        if gzip_compression:
            self._create_dataset_kwargs["compression"] = "gzip"

    def write(self, D):
        self._write_without_iterate(D)
        self._f.flush()
        self._i += 1

    def _write_without_iterate(self, D, group_prefix="/"):
        for k in D.keys():
            if isinstance(D[k], dict):
                group_prefix_new = group_prefix + k + "/"
                if k not in self._f[group_prefix]:
                    self._f.create_group(group_prefix_new)
                self._write_without_iterate(D[k], group_prefix_new)
                continue
            name = group_prefix + k
            data = D[k]
            if data is None:
                continue
            if isinstance(data, str):
                dtype = h5py.string_dtype()
                data_shape = ()
            else:
                data = numpy.asarray(data)
                if data.dtype == object:
                    log_warning(logger, "Could not save dataset %s. Conversion to numpy array failed" % name)
                    continue
                dtype = data.dtype
                data_shape = data.shape
            if k not in self._f[group_prefix]:
                maxshape = tuple([None] + list(data_shape))
                shape = tuple([self._chunksize] + list(data_shape))
                log_debug(logger, "Create dataset %s [shape=%s, dtype=%s]" % (name, str(shape), str(dtype)))
                self._f.create_dataset(name, shape, maxshape=maxshape, dtype=dtype, **self._create_dataset_kwargs)
            if self._f[name].shape[0] <= self._i:
                new_shape = tuple([self._chunksize * (self._i // self._chunksize + 1)] + list(data_shape))
                self._f[name].resize(new_shape)
            self._f[name][self._i] = data

    def _shrink_stacks(self, group_prefix="/"):
        for k in self._f[group_prefix].keys():
            name = group_prefix + k
            if isinstance(self._f[name], h5py.Dataset):
                s = list(self._f[name].shape)
                s[0] = self._i
                self._f[name].resize(tuple(s))
            else:
                self._shrink_stacks(name + "/")

    def close(self):
        self._shrink_stacks()
        log_debug(logger, "Closing file %s after %i records" % (self._filename, self._i))
        self._f.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()
        return False
