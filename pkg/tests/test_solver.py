# -----------------------------------------------------------------------------------------------------
# RANKINT
# Exact weighted matroid intersection under rank oracles
# -----------------------------------------------------------------------------------------------------
# Copyright 2026 The rankint developers
# rankint is distributed under the terms of the BSD 2-Clause License (see file "copyright")
# -----------------------------------------------------------------------------------------------------
import os
import copy
import unittest
from fractions import Fraction
import numpy

from rankint.matroid import UniformMatroid, PartitionMatroid, GraphicMatroid
from rankint.generators import generate, FAMILIES
from rankint.instance import read_instance
from rankint.solver import SolveConfig, Certificate, solve, refine, max_cardinality_intersection, certify_optimality
from rankint.splitting import initial_solution
from rankint.verify import brute_force_best
from rankint.utils.log import InstanceFormatError

TESTS_DIR = os.path.dirname(os.path.realpath(__file__))
MATCHING = os.path.join(TESTS_DIR, "data", "matching3.json")


def _matching():
    instance = read_instance(MATCHING)
    m1, m2 = instance.get_matroids()
    return m1, m2, instance.weights


class TestCaseMaxCardinality(unittest.TestCase):

    def test_matching(self):
        m1, m2, w = _matching()
        s0, r = max_cardinality_intersection(m1, m2)
        self.assertEqual(r, 2)
        self.assertEqual(len(s0), 2)
        self.assertTrue(m1.is_independent(s0) and m2.is_independent(s0))

    def test_identical(self):
        m = GraphicMatroid(4, [[0, 1], [1, 2], [2, 3], [0, 3], [0, 2]])
        s0, r = max_cardinality_intersection(m, m)
        self.assertEqual(r, 3)

    def test_empty(self):
        # Element 0 is a loop of matroid 1, element 1 a loop of matroid 2
        m1 = PartitionMatroid([[0], [1]], [0, 1])
        m2 = PartitionMatroid([[0], [1]], [1, 0])
        self.assertEqual(max_cardinality_intersection(m1, m2), ([], 0))

    def test_augmenting_paths(self):
        # Greedy takes 0=(L0,R0) first and has to be repaired
        m1 = PartitionMatroid([[0, 1], [2]], [1, 1])
        m2 = PartitionMatroid([[0, 2], [1]], [1, 1])
        s0, r = max_cardinality_intersection(m1, m2)
        self.assertEqual(sorted(s0), [1, 2])
        for family in FAMILIES:
            for seed in range(3):
                instance = generate(family, 20, r=7, seed=seed)
                m1, m2 = instance.get_matroids()
                s0, r = max_cardinality_intersection(m1, m2)
                self.assertEqual(r, 7)
                self.assertTrue(m1.is_independent(s0) and m2.is_independent(s0))


class TestCaseSolve(unittest.TestCase):

    def test_matching(self):
        m1, m2, w = _matching()
        solution, weight, cert, report = solve(m1, m2, w)
        self.assertEqual(solution, [1, 2])
        self.assertEqual(weight, 9)
        self.assertTrue(report.certified)
        self.assertEqual(report.r, 2)
        # 2**s >= 4r
        self.assertEqual(report.scale_exp, 3)
        # epsilon0 = 64 >= 5 * 2**3, one round per halving
        self.assertEqual(report.epsilon0, 64)
        self.assertEqual(len(report.rounds), 6)

    def test_equal_weights(self):
        instance = generate("graphic-partition", 14, r=5, seed=1)
        m1, m2 = instance.get_matroids()
        solution, weight, cert, report = solve(m1, m2, [3] * 14)
        self.assertEqual(len(solution), 5)
        self.assertEqual(weight, 15)

    def test_negative_weights(self):
        solution, weight, cert, report = solve(UniformMatroid(1, 1), UniformMatroid(1, 1), [-5])
        self.assertEqual(solution, [])
        self.assertEqual(weight, 0)
        solution, weight, cert, report = solve(UniformMatroid(3, 2), UniformMatroid(3, 2), [-1, -2, -3])
        self.assertEqual(solution, [])
        m1, m2, w = _matching()
        solution, weight, cert, report = solve(m1, m2, [3, 5, -4])
        self.assertEqual(solution, [1])
        self.assertEqual(weight, 5)
        self.assertEqual(cert.kept, [0, 1])

    def test_empty(self):
        solution, weight, cert, report = solve(UniformMatroid(0, 0), UniformMatroid(0, 0), [])
        self.assertEqual((solution, weight), ([], 0))
        solution, weight, cert, report = solve(UniformMatroid(3, 0), UniformMatroid(3, 2), [1, 2, 3])
        self.assertEqual((solution, weight), ([], 0))
        self.assertEqual(report.rounds, [])
        self.assertTrue(certify_optimality(cert, UniformMatroid(3, 0), UniformMatroid(3, 2), [1, 2, 3])[0])

    def test_padding_hygiene(self):
        instance = generate("uniform-graphic", 16, r=6, W=10, seed=4, signed=True)
        m1, m2 = instance.get_matroids()
        solution, weight, cert, report = solve(m1, m2, instance.weights)
        self.assertTrue(all([0 <= x < 16 for x in solution]))
        self.assertTrue(all([instance.weights[x] >= 0 for x in solution]))
        self.assertEqual(cert.padding, report.r)

    def test_k_one(self):
        instance = generate("graphic-partition", 16, r=6, W=40, seed=8)
        m1, m2 = instance.get_matroids()
        s, w_default, cert, report = solve(m1, m2, instance.weights)
        m1, m2 = instance.get_matroids()
        s, w_k1, cert, report = solve(m1, m2, instance.weights, SolveConfig(k=1, buffer_size=1))
        self.assertEqual(w_default, w_k1)
        for rnd in report.rounds:
            self.assertEqual(rnd["k"], 1)
            self.assertLessEqual(rnd["augmentations"], 2 * report.r)

    def test_rounds(self):
        instance = generate("matching", 20, r=8, W=100, seed=2)
        m1, m2 = instance.get_matroids()
        solution, weight, cert, report = solve(m1, m2, instance.weights)
        self.assertEqual(report.scale_exp, 5)
        epsilon0 = 2
        while epsilon0 < max(instance.weights) << 5:
            epsilon0 *= 2
        self.assertEqual(report.epsilon0, epsilon0)
        self.assertEqual(2 ** len(report.rounds), epsilon0)
        for rnd in report.rounds:
            self.assertLessEqual(rnd["augmentations"], -(-2 * report.r // rnd["k"]))
            self.assertLessEqual(rnd["augmentations"], rnd["difference"])
        phases = report.to_dict()["phases"]
        self.assertEqual(sum([sum(c) for c in phases.values()]), report.get_queries())
        self.assertEqual(report.get_queries(), m1.query_count + m2.query_count)

    def test_brute_force(self):
        for family in FAMILIES:
            for seed in range(5):
                instance = generate(family, 12, r=4, W=15, seed=seed, signed=(seed % 2 == 1))
                m1, m2 = instance.get_matroids()
                expected = brute_force_best(m1, m2, instance.weights)[1]
                for objective in ("independent", "basis"):
                    m1, m2 = instance.get_matroids()
                    solution, weight, cert, report = solve(m1, m2, instance.weights, SolveConfig(objective=objective, debug_level=2))
                    if objective == "independent":
                        self.assertEqual(weight, expected)
                    else:
                        self.assertEqual(len(solution), 4)
                        self.assertEqual(weight, brute_force_best(m1, m2, instance.weights, objective="basis")[1])

    def _check_exact(self, instance, basis=False):
        m1, m2 = instance.get_matroids()
        expected = brute_force_best(m1, m2, instance.weights)[1]
        solution, weight, cert, report = solve(m1, m2, instance.weights, SolveConfig(debug_level=1))
        self.assertEqual(weight, expected, instance.get_name())
        self.assertTrue(report.certified)
        f1, f2 = instance.get_matroids()
        self.assertEqual(certify_optimality(cert, f1, f2, instance.weights), (True, None))
        if basis:
            best, best_weight = brute_force_best(f1, f2, instance.weights, objective="basis")
            f1, f2 = instance.get_matroids()
            solution, weight, cert, report = solve(f1, f2, instance.weights, SolveConfig(objective="basis", debug_level=1))
            self.assertEqual((len(solution), weight), (len(best), best_weight), instance.get_name())

    def test_brute_force_sweep(self):
        rng = numpy.random.RandomState(2026)
        count = 0
        for family in FAMILIES:
            for i in range(84):
                n = int(rng.randint(1, 17))
                r = int(rng.randint(1, min(n, 8) + 1))
                W = int(rng.randint(1, 33))
                signed = bool(rng.randint(2))
                instance = generate(family, n, r=r, W=W, seed=int(rng.randint(2 ** 31)), signed=signed)
                self._check_exact(instance, basis=(i % 3 == 0))
                count += 1
        # Rank 0 and the empty ground set
        for n in range(0, 17, 2):
            self._check_exact(generate("uniform-uniform", n, r=0, W=20, seed=n, signed=True), basis=True)
            count += 1
        self.assertGreaterEqual(count, 500)

    def test_graphic_partition_seed_11(self):
        instance = generate("graphic-partition", 14, seed=11)
        m1, m2 = instance.get_matroids()
        solution, weight, cert, report = solve(m1, m2, instance.weights)
        self.assertEqual(weight, brute_force_best(m1, m2, instance.weights)[1])

    def test_invalid_weights(self):
        with self.assertRaises(InstanceFormatError):
            solve(UniformMatroid(2, 1), UniformMatroid(2, 1), [1, 2.5])
        with self.assertRaises(InstanceFormatError):
            solve(UniformMatroid(2, 1), UniformMatroid(3, 1), [1, 2])

    def test_refine_timed(self):
        m1, m2 = UniformMatroid(3, 3), UniformMatroid(3, 3)
        sol = initial_solution(m1, m2, [4, 4, 4], [0, 1, 2])
        with self.assertLogs("rankint.solver", level="DEBUG") as cm:
            refine(m1, m2, sol)
        self.assertTrue(any(["Execution time" in line and "in function 'refine'" in line for line in cm.output]))
        self.assertEqual(refine.__name__, "refine")

    def test_refine_stable(self):
        # A solution whose bases are already optimal needs no augmentation
        m1, m2 = UniformMatroid(3, 3), UniformMatroid(3, 3)
        sol = initial_solution(m1, m2, [4, 4, 4], [0, 1, 2])
        sol, info = refine(m1, m2, sol)
        self.assertTrue(sol.is_solution())
        self.assertEqual(info["augmentations"], 0)


class TestCaseCertificate(unittest.TestCase):

    def setUp(self):
        self.m1, self.m2, self.w = _matching()
        self.solution, self.weight, self.cert, self.report = solve(self.m1, self.m2, self.w)

    def _check(self, cert):
        m1, m2, w = _matching()
        return certify_optimality(cert, m1, m2, w)

    def test_passes(self):
        self.assertEqual(self._check(self.cert), (True, None))
        self.assertEqual(self._check(Certificate.from_dict(self.cert.to_dict())), (True, None))

    def test_generated(self):
        for family in ("graphic-partition", "linear-graphic", "uniform-partition"):
            instance = generate(family, 18, r=6, W=50, seed=3, signed=True)
            m1, m2 = instance.get_matroids()
            solution, weight, cert, report = solve(m1, m2, instance.weights)
            f1, f2 = instance.get_matroids()
            self.assertEqual(certify_optimality(cert, f1, f2, instance.weights), (True, None))

    def test_perturbed_weight(self):
        cert = copy.deepcopy(self.cert)
        cert.split.w1[1] += 1
        self.assertFalse(self._check(cert)[0])
        cert = copy.deepcopy(self.cert)
        cert.split.w[0] += 1
        self.assertEqual(self._check(cert), (False, "splitting"))

    def test_suboptimal_basis(self):
        # {0} plus a padding element instead of {1, 2}
        cert = copy.deepcopy(self.cert)
        cert.basis = [0, 3]
        cert.solution = [0]
        cert.weight = 3
        passed, reason = self._check(cert)
        self.assertFalse(passed)
        self.assertIn(reason, ("maximality_1", "maximality_2"))

    def test_dependent_basis(self):
        cert = copy.deepcopy(self.cert)
        cert.basis = [0, 1]
        self.assertEqual(self._check(cert), (False, "independence"))

    def test_rank_cover(self):
        cert = copy.deepcopy(self.cert)
        cert.cover = [0]
        self.assertEqual(self._check(cert), (False, "rank"))

    def test_epsilon(self):
        cert = copy.deepcopy(self.cert)
        cert.split.epsilon = 4
        self.assertEqual(self._check(cert), (False, "epsilon"))

    def test_claimed_weight(self):
        cert = copy.deepcopy(self.cert)
        cert.weight = 10
        self.assertEqual(self._check(cert), (False, "weight"))
        cert = copy.deepcopy(self.cert)
        cert.solution = [1]
        self.assertEqual(self._check(cert), (False, "elements"))

    def test_wrong_weights(self):
        m1, m2, w = _matching()
        self.assertFalse(certify_optimality(self.cert, m1, m2, [3, 5, 40])[0])


class TestCaseConfig(unittest.TestCase):

    def test_defaults(self):
        c = SolveConfig(debug_level=1)
        self.assertEqual(c.get_k(16), 8)
        self.assertEqual(c.get_k(0), 1)
        self.assertEqual(c.get_buffer_size(16), 4)
        self.assertEqual(c.get_scale_exp(2), 3)
        self.assertEqual(c.get_scale_exp(0), 0)
        self.assertEqual(c.get_scale_exp(5), 5)

    def test_explicit(self):
        c = SolveConfig(k=3, buffer_size=2, scale_policy=6, debug_level=0)
        self.assertEqual(c.get_k(100), 3)
        self.assertEqual(c.get_buffer_size(100), 2)
        self.assertEqual(c.get_scale_exp(4), 6)
        with self.assertRaises(ValueError):
            c.get_scale_exp(17)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            SolveConfig(k_exponent=Fraction(3, 2))
        with self.assertRaises(ValueError):
            SolveConfig(k_exponent=0)
        with self.assertRaises(ValueError):
            SolveConfig(objective="matroid")
        with self.assertRaises(ValueError):
            SolveConfig(debug_level=3)
        with self.assertRaises(ValueError):
            SolveConfig(k=0)

    def test_environment(self):
        os.environ["DEBUG_ASSERT_LEVEL"] = "2"
        try:
            self.assertEqual(SolveConfig().debug_level, 2)
        finally:
            del os.environ["DEBUG_ASSERT_LEVEL"]
        self.assertEqual(SolveConfig().debug_level, 1)
