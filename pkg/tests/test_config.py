import os
import shutil
import tempfile
import unittest
from fractions import Fraction

import rankint.utils.config
from rankint.solver import SolveConfig, config_from_configdict, solver_from_configfile


class TestCaseConfig(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def _write(self, text):
        fn = os.path.join(self.tmpdir, "solver.conf")
        with open(fn, "w") as f:
            f.write(text)
        return fn

    def test_read(self):
        fn = self._write("[solver]\nk_exponent=2/3\nbuffer_size=3\nobjective=basis\ntrace_path=none\nseed=7\n")
        C = rankint.utils.config.read_configfile(fn)
        self.assertEqual(C["solver"]["k_exponent"], Fraction(2, 3))
        self.assertEqual(C["solver"]["buffer_size"], 3)
        self.assertIsNone(C["solver"]["trace_path"])
        S = solver_from_configfile(fn)
        self.assertEqual(S.config.k_exponent, Fraction(2, 3))
        self.assertEqual(S.config.get_buffer_size(100), 3)
        self.assertEqual(S.config.objective, "basis")
        self.assertEqual(S.config.seed, 7)

    def test_missing(self):
        with self.assertRaises(IOError):
            rankint.utils.config.read_configfile(os.path.join(self.tmpdir, "missing.conf"))

    def test_float_exponent(self):
        with self.assertRaises(ValueError):
            config_from_configdict({"solver": {"k_exponent": "0.75"}})

    def test_unknown_option(self):
        with self.assertRaises(ValueError):
            config_from_configdict({"solver": {"blocking_flow": True}})

    def test_write_read(self):
        c0 = SolveConfig(k_exponent=Fraction(1, 2), k=4, adjust_order="random", debug_level=2)
        fn = os.path.join(self.tmpdir, "out.conf")
        rankint.utils.config.write_configfile(c0.get_conf(), fn)
        c1 = config_from_configdict(rankint.utils.config.read_configfile(fn))
        self.assertEqual(c1.get_conf(), c0.get_conf())
        # Dictionaries with string values are parsed the same way
        c2 = config_from_configdict(c0.get_conf())
        self.assertEqual(c2.get_conf(), c0.get_conf())

    def test_lists(self):
        fn = self._write("[sweep]\nn=[32, 64,128]\nlabel=$RANKINT_TEST_LABEL\n")
        os.environ["RANKINT_TEST_LABEL"] = "nightly"
        try:
            C = rankint.utils.config.read_configfile(fn)
        finally:
            del os.environ["RANKINT_TEST_LABEL"]
        self.assertEqual(C["sweep"]["n"], [32, 64, 128])
        self.assertEqual(C["sweep"]["label"], "nightly")
