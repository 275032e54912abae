import os
import json
import shutil
import tempfile
import unittest
import h5py
import numpy

from rankint.instance import Instance, read_instance, write_instance, instance_from_dict
from rankint.generators import generate, FAMILIES
from rankint.solver import solve, max_cardinality_intersection
from rankint.utils.log import InstanceFormatError
from rankint.utils.trace import TraceWriter, read_trace
from rankint.utils.reportwriter import ReportWriter

TESTS_DIR = os.path.dirname(os.path.realpath(__file__))
MATCHING = os.path.join(TESTS_DIR, "data", "matching3.json")
# Output of "rankint gen" for fixed parameters, see TestCaseGenerators.test_golden
GOLDEN = [(("matching", 3, None, 0), "gen_matching_n3_s0.json"),
          (("graphic-partition", 40, 10, 7), "gen_graphic_partition_n40_r10_s7.json")]


class TestCaseInstance(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_read(self):
        instance = read_instance(MATCHING)
        self.assertEqual(instance.get_size(), 3)
        self.assertEqual(instance.get_name(), "matching3")
        m1, m2 = instance.get_matroids()
        self.assertEqual(m1.query_count, 0)
        self.assertEqual(m1.rank([0, 1]), 1)

    def test_write_read(self):
        instance = generate("linear-graphic", 10, r=4, seed=1)
        fn = os.path.join(self.tmpdir, "inst.json")
        write_instance(instance, fn)
        again = read_instance(fn)
        self.assertEqual(again.to_dict(), instance.to_dict())

    def test_errors(self):
        d = read_instance(MATCHING).to_dict()
        bad = dict(d)
        bad["weights"] = [3, 5]
        with self.assertRaises(InstanceFormatError):
            instance_from_dict(bad)
        bad = dict(d)
        bad["weights"] = [3, 5, 4.5]
        with self.assertRaises(InstanceFormatError):
            instance_from_dict(bad)
        bad = dict(d)
        del bad["matroid2"]
        with self.assertRaises(InstanceFormatError):
            instance_from_dict(bad)
        bad = dict(d)
        bad["matroid2"] = {"type": "uniform", "n": 4, "k": 1}
        with self.assertRaises(InstanceFormatError):
            instance_from_dict(bad)
        with self.assertRaises(InstanceFormatError):
            instance_from_dict([1, 2, 3])
        fn = os.path.join(self.tmpdir, "broken.json")
        with open(fn, "w") as f:
            f.write("{\"matroid1\": ")
        with self.assertRaises(InstanceFormatError):
            read_instance(fn)


class TestCaseGenerators(unittest.TestCase):

    def test_planted_rank(self):
        for family in FAMILIES:
            for seed in range(2):
                instance = generate(family, 15, r=6, W=9, seed=seed)
                self.assertEqual(instance.get_size(), 15)
                self.assertTrue(all([0 <= x <= 9 for x in instance.weights]))
                m1, m2 = instance.get_matroids()
                self.assertEqual(max_cardinality_intersection(m1, m2)[1], 6)

    def test_golden(self):
        tmpdir = tempfile.mkdtemp()
        try:
            for (family, n, r, seed), name in GOLDEN:
                out = os.path.join(tmpdir, name)
                write_instance(generate(family, n, r=r, seed=seed), out)
                with open(out, "rb") as f:
                    written = f.read()
                with open(os.path.join(TESTS_DIR, "data", name), "rb") as f:
                    self.assertEqual(written, f.read(), name)
        finally:
            shutil.rmtree(tmpdir)
        instance = read_instance(os.path.join(TESTS_DIR, "data", GOLDEN[1][1]))
        m1, m2 = instance.get_matroids()
        self.assertEqual(max_cardinality_intersection(m1, m2)[1], 10)
        instance = read_instance(os.path.join(TESTS_DIR, "data", GOLDEN[0][1]))
        m1, m2 = instance.get_matroids()
        self.assertEqual(solve(m1, m2, instance.weights)[:2], ([1, 2], 28))

    def test_seeded(self):
        a = generate("graphic-partition", 20, seed=3, signed=True)
        b = generate("graphic-partition", 20, seed=3, signed=True)
        self.assertEqual(a.to_dict(), b.to_dict())
        self.assertTrue(all([-32 <= x <= 32 for x in a.weights]))
        self.assertEqual(a.meta["r"], 10)

    def test_parameters(self):
        with self.assertRaises(ValueError):
            generate("graphic-partition", 5, r=6)
        with self.assertRaises(ValueError):
            generate("matching", 5, r=0)
        with self.assertRaises(ValueError):
            generate("transversal", 5)
        instance = generate("uniform-uniform", 4, r=0)
        m1, m2 = instance.get_matroids()
        self.assertEqual(max_cardinality_intersection(m1, m2)[1], 0)


class TestCaseOutput(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_trace(self):
        fn = os.path.join(self.tmpdir, "trace.jsonl")
        with TraceWriter(fn, context={"run": 1}) as T:
            T({"iteration": 1})
            T.set_context(epsilon=4)
            T.write({"iteration": 2})
        records = read_trace(fn)
        self.assertEqual(records, [{"run": 1, "iteration": 1}, {"run": 1, "epsilon": 4, "iteration": 2}])
        with self.assertRaises(ValueError):
            T.write({"iteration": 3})

    def test_trace_from_solve(self):
        from rankint.solver import SolveConfig
        fn = os.path.join(self.tmpdir, "trace.jsonl")
        instance = generate("graphic-partition", 14, r=5, W=20, seed=1)
        m1, m2 = instance.get_matroids()
        solution, weight, cert, report = solve(m1, m2, instance.weights, SolveConfig(trace_path=fn))
        records = read_trace(fn)
        self.assertEqual(len(records) > 0, report.get_augmentations() > 0)
        for rec in records:
            self.assertIn("epsilon", rec)
            self.assertIn("queries", rec)

    def test_report_writer(self):
        fn = os.path.join(self.tmpdir, "report.h5")
        with ReportWriter(fn, chunksize=2) as W:
            for i in range(5):
                W.write({"name": "cell%i" % i, "n": 10 * i, "solution": [True, False, i % 2 == 0],
                         "queries": {"sssp": [i, 2 * i]}})
        with h5py.File(fn, "r") as f:
            self.assertEqual(f["/n"].shape, (5,))
            self.assertEqual(list(f["/n"][:]), [0, 10, 20, 30, 40])
            self.assertEqual(f["/solution"].shape, (5, 3))
            self.assertEqual(f["/queries/sssp"][4, 1], 8)
            name = f["/name"][3]
            if isinstance(name, bytes):
                name = name.decode("utf-8")
            self.assertEqual(name, "cell3")

    def test_run_report(self):
        instance = read_instance(MATCHING)
        m1, m2 = instance.get_matroids()
        solution, weight, cert, report = solve(m1, m2, instance.weights)
        fn = os.path.join(self.tmpdir, "report.json")
        report.write_json(fn)
        with open(fn, "r") as f:
            d = json.load(f)
        self.assertEqual(d["r"], 2)
        self.assertEqual(d["n_hat"], 5)
        self.assertTrue(d["init_excluded_from_budget"])
        self.assertEqual(d["queries_total"], report.get_queries())
        self.assertEqual(sorted(d["phases"].keys()), ["adjustment", "augmentation", "init", "sssp", "verification"])
        self.assertGreater(d["phases"]["init"][0], 0)
        self.assertEqual(len(d["rounds"]), 6)
        self.assertTrue(d["certified"])
        self.assertGreaterEqual(report.get_budget_ratio(), 0.)
