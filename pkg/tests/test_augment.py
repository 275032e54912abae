import unittest

from rankint.matroid import UniformMatroid, PartitionMatroid
from rankint.generators import generate
from rankint.splitting import WeightSplit, PartialSolution
from rankint.sssp import shortest_path_tree
from rankint.augment import apply_augmentation
from rankint.utils.log import InvariantViolation
from rankint.utils.querystats import QueryStats

from test_sssp import partial_solutions


def _two_elements():
    split = WeightSplit([4, 3], [4, 1], [0, 2], 1)
    return UniformMatroid(2, 1), UniformMatroid(2, 1), PartialSolution(split, [0], [1])


class TestCaseAugmentation(unittest.TestCase):

    def test_two_elements(self):
        m1, m2, sol = _two_elements()
        new, record = apply_augmentation(m1, m2, sol, shortest_path_tree(m1, m2, sol))
        # The path has no E1 edge, S1 stays
        self.assertEqual(new.s1, {0})
        self.assertEqual(new.s2, {0})
        self.assertEqual(new.split.w1, [4, 3])
        self.assertEqual(new.split.w2, [0, 0])
        self.assertTrue(new.is_solution())
        self.assertEqual(record.before, 0)
        self.assertEqual(record.after, 1)
        self.assertEqual(record.deltas, [0, 2])
        # Input untouched
        self.assertEqual(sol.s2, {1})
        self.assertEqual(sol.split.w2, [0, 2])

    def test_unreachable_sentinel(self):
        m = lambda: PartitionMatroid([[0, 1], [2]], [1, 0])
        split = WeightSplit([4, 3, 0], [4, 1, 0], [0, 2, 0], 1)
        sol = PartialSolution(split, [0], [1])
        m1, m2 = m(), m()
        new, record = apply_augmentation(m1, m2, sol, shortest_path_tree(m1, m2, sol))
        self.assertEqual(new.split.w1[2], 25)
        self.assertEqual(new.split.w2[2], -25)
        self.assertEqual(new.split.violations(), [])

    def test_tampered_distances(self):
        m1, m2, sol = _two_elements()
        result = shortest_path_tree(m1, m2, sol)
        # Distance 0 for y leaves w2 = (0, 2) and S2 = {x} is not w2-maximum
        result.labels[1] = 1
        with self.assertRaises(InvariantViolation) as cm:
            apply_augmentation(m1, m2, sol, result)
        self.assertIsNotNone(cm.exception.record)
        self.assertEqual(cm.exception.record.after, 1)

    def test_growth(self):
        for family in ("graphic-partition", "matching", "linear-graphic"):
            for seed in range(5):
                instance = generate(family, 16, r=6, W=16, seed=seed)
                for o1, o2, sol in partial_solutions(instance):
                    stats = QueryStats()
                    o1.attach_stats(stats, 1)
                    o2.attach_stats(stats, 2)
                    before = len(sol.s1 & sol.s2)
                    new, record = apply_augmentation(o1, o2, sol, shortest_path_tree(o1, o2, sol), stats=stats)
                    o1.detach_stats()
                    o2.detach_stats()
                    self.assertGreater(len(new.s1 & new.s2), before)
                    self.assertEqual(len(new.s1), len(sol.s1))
                    for x in range(new.split.get_size()):
                        self.assertEqual(new.split.w1[x] + new.split.w2[x], sol.split.w1[x] + sol.split.w2[x])
                    self.assertEqual(new.split.violations(), [])
                    self.assertGreater(stats.get("verification"), 0)
