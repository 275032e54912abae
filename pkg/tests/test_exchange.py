import math
import unittest
import numpy

from rankint.matroid import UniformMatroid, PartitionMatroid, GraphicMatroid, LinearMatroidGF2
from rankint.exchange import OrderedPool, MIN, MAX
from rankint.exchange import find_removal_exchange, find_insertion_exchange, find_free_element, greedy_max_basis, weight_of
from rankint.utils.log import ContractViolation

TRIANGLE = [[0, 1], [1, 2], [0, 2]]
FINDER_FAMILIES = ("uniform", "partition", "graphic", "linear_gf2")


def _random_independent(oracle, rng):
    s = []
    for x in rng.permutation(oracle.get_size()):
        x = int(x)
        if rng.rand() < 0.7 and oracle.is_independent(s + [x]):
            s.append(x)
    return set(s)

def _scan_removal(oracle, s, x, pool):
    for b in pool:
        if oracle.is_independent([y for y in s if y != b] + [x]):
            return b
    return None

def _scan_insertion(oracle, s, x, pool):
    for b in pool:
        if oracle.is_independent([y for y in s if y != x] + [b]):
            return b
    return None

def _scan_free(oracle, s, pool):
    for b in pool:
        if oracle.is_independent(list(s) + [b]):
            return b
    return None


class TestCaseOrderedPool(unittest.TestCase):

    def test_order(self):
        pool = OrderedPool([(3, 5), (1, 5), (0, 7), (2, -1)])
        self.assertEqual(list(pool), [2, 1, 3, 0])
        pool = OrderedPool([(3, 5), (1, 5), (0, 7), (2, -1)], descending=True)
        self.assertEqual(list(pool), [0, 1, 3, 2])
        self.assertEqual(list(pool.prefix(2)), [0, 1])
        self.assertEqual(len(pool.prefix(2)), 2)
        self.assertEqual(pool[2], 3)

    def test_updates(self):
        pool = OrderedPool()
        pool.insert(4, 10)
        pool.insert(1, 2)
        pool.rekey(4, 0)
        self.assertEqual(pool.first(), 4)
        self.assertEqual(pool.key(4), 0)
        pool.remove(4)
        pool.discard(4)
        self.assertNotIn(4, pool)
        self.assertEqual(len(pool), 1)
        with self.assertRaises(ContractViolation):
            pool.insert(1, 3)
        pool.clear()
        self.assertIsNone(pool.first())


class TestCaseRemoval(unittest.TestCase):

    def test_partition(self):
        m = PartitionMatroid([[0, 1], [2, 3]], [1, 1])
        pool = OrderedPool([(0, 3), (2, 1)])
        self.assertEqual(find_removal_exchange(m, {0, 2}, 1, pool, MIN), 0)

    def test_uniform_min_priority(self):
        m = UniformMatroid(4, 2)
        pool = OrderedPool([(0, 1), (1, 5)])
        self.assertEqual(find_removal_exchange(m, {0, 1}, 2, pool, MIN), 0)
        pool = OrderedPool([(0, 1), (1, 5)], descending=True)
        self.assertEqual(find_removal_exchange(m, {0, 1}, 2, pool, MAX), 1)

    def test_graphic_circuit(self):
        m = GraphicMatroid(3, TRIANGLE)
        pool = OrderedPool([(0, 9), (1, 4)])
        self.assertEqual(find_removal_exchange(m, {0, 1}, 2, pool, MIN), 1)

    def test_absent(self):
        # S+x is independent: nothing has to leave
        m = UniformMatroid(4, 3)
        pool = OrderedPool([(0, 0), (1, 0)])
        self.assertIsNone(find_removal_exchange(m, {0, 1}, 2, pool, MIN))
        # Pool misses the circuit of S+x
        m = PartitionMatroid([[0, 1], [2, 3]], [1, 1])
        pool = OrderedPool([(2, 0)])
        self.assertIsNone(find_removal_exchange(m, {0, 2}, 1, pool, MIN))
        self.assertIsNone(find_removal_exchange(m, {0, 2}, 1, OrderedPool(), MIN))

    def test_contract(self):
        m = UniformMatroid(4, 2)
        pool = OrderedPool([(0, 1), (1, 5)])
        with self.assertRaises(ContractViolation):
            find_removal_exchange(m, {0, 1}, 1, pool, MIN)
        with self.assertRaises(ContractViolation):
            find_removal_exchange(m, {0, 1}, 2, pool, MAX)
        with self.assertRaises(AssertionError):
            find_removal_exchange(m, {0}, 2, pool, MIN)


class TestCaseInsertion(unittest.TestCase):

    def test_uniform_max_priority(self):
        m = UniformMatroid(4, 2)
        pool = OrderedPool([(2, 2), (3, 7)], descending=True)
        self.assertEqual(find_insertion_exchange(m, {0, 1}, 0, pool, MAX), 3)

    def test_partition_absent(self):
        m = PartitionMatroid([[0, 1], [2, 3]], [1, 1])
        pool = OrderedPool([(3, 0)])
        self.assertIsNone(find_insertion_exchange(m, {0, 2}, 0, pool, MIN))

    def test_graphic_path(self):
        # Path a-b-c with the closing edge a-c
        m = GraphicMatroid(3, TRIANGLE)
        pool = OrderedPool([(2, 0)], descending=True)
        self.assertEqual(find_insertion_exchange(m, {0, 1}, 0, pool, MAX), 2)

    def test_contract(self):
        m = UniformMatroid(4, 2)
        with self.assertRaises(ContractViolation):
            find_insertion_exchange(m, {0, 1}, 2, OrderedPool([(3, 0)], descending=True), MAX)


class TestCaseFreeElement(unittest.TestCase):

    def test_free(self):
        m = PartitionMatroid([[0, 1], [2, 3]], [1, 1])
        pool = OrderedPool([(1, 0), (3, 1)])
        self.assertEqual(find_free_element(m, [0], pool), 3)
        self.assertIsNone(find_free_element(m, [0, 2], pool))
        self.assertIsNone(find_free_element(m, [0], OrderedPool()))


class TestCaseRandomSearches(unittest.TestCase):
    """
    Binary searches against a linear scan over the pool, 1000 calls per matroid family
    """
    CALLS = 1000

    def _matroid(self, family, rng, n=14):
        if family == "uniform":
            return UniformMatroid(n, int(rng.randint(1, n)))
        if family == "partition":
            labels = rng.randint(4, size=n)
            blocks = [[x for x in range(n) if labels[x] == b] for b in range(4)]
            return PartitionMatroid(blocks, [int(c) for c in rng.randint(0, 4, size=4)])
        if family == "graphic":
            return GraphicMatroid(6, [[int(u) for u in rng.choice(6, size=2, replace=False)] for x in range(n)])
        return LinearMatroidGF2(5, ["".join([str(b) for b in rng.randint(2, size=5)]) for x in range(n)])

    def _calls(self, family, seed, call):
        rng = numpy.random.RandomState(seed)
        calls, attempts = 0, 0
        while calls < self.CALLS and attempts < 20 * self.CALLS:
            if attempts % 25 == 0:
                m = self._matroid(family, rng)
            attempts += 1
            s = _random_independent(m, rng)
            outside = [y for y in range(m.get_size()) if y not in s]
            if call(m, s, outside, rng):
                calls += 1
        self.assertEqual(calls, self.CALLS)

    def _removal(self, m, s, outside, rng):
        if not s or not outside:
            return False
        x = outside[rng.randint(len(outside))]
        # Random subsets of S, so that the pool can miss the circuit
        members = [b for b in sorted(s) if rng.rand() < 0.8]
        pool = OrderedPool([(b, int(rng.randint(4))) for b in members])
        basis = len(s) == m.get_full_rank() and rng.rand() < 0.5
        before = m.query_count
        b = find_removal_exchange(m, s, x, pool, MIN, basis=basis)
        queries = m.query_count - before
        expected = None if m.is_independent(list(s) + [x]) else _scan_removal(m, s, x, pool)
        self.assertEqual(b, expected)
        self.assertLessEqual(queries, int(math.ceil(math.log(max(len(pool), 1), 2))) + (1 if basis else 2))
        return True

    def _insertion(self, m, s, outside, rng):
        if not s or not outside:
            return False
        x = sorted(s)[rng.randint(len(s))]
        members = [b for b in outside if rng.rand() < 0.8]
        pool = OrderedPool([(b, int(rng.randint(4))) for b in members], descending=True)
        before = m.query_count
        b = find_insertion_exchange(m, s, x, pool, MAX)
        queries = m.query_count - before
        self.assertEqual(b, _scan_insertion(m, s, x, pool))
        self.assertLessEqual(queries, int(math.ceil(math.log(max(len(pool), 1), 2))) + 1)
        return True

    def _free(self, m, s, outside, rng):
        if not outside:
            return False
        pool = OrderedPool([(b, int(rng.randint(4))) for b in outside])
        before = m.query_count
        b = find_free_element(m, sorted(s), pool)
        queries = m.query_count - before
        self.assertEqual(b, _scan_free(m, s, pool))
        self.assertLessEqual(queries, int(math.ceil(math.log(len(pool), 2))) + 1)
        return True

    def test_removal(self):
        for i, family in enumerate(FINDER_FAMILIES):
            self._calls(family, 10 + i, self._removal)

    def test_insertion(self):
        for i, family in enumerate(FINDER_FAMILIES):
            self._calls(family, 20 + i, self._insertion)

    def test_free_element(self):
        for i, family in enumerate(FINDER_FAMILIES):
            self._calls(family, 30 + i, self._free)


class TestCaseGreedy(unittest.TestCase):

    def test_uniform(self):
        b = greedy_max_basis(UniformMatroid(4, 2), [5, 3, 9, 1])
        self.assertEqual(b, {0, 2})
        self.assertEqual(weight_of([5, 3, 9, 1], b), 14)

    def test_ties(self):
        self.assertEqual(greedy_max_basis(GraphicMatroid(3, TRIANGLE), [2, 2, 2]), {0, 1})

    def test_partition(self):
        self.assertEqual(greedy_max_basis(PartitionMatroid([[0, 1], [2, 3]], [1, 1]), [1, 9, 4, 4]), {1, 2})

    def test_known_rank(self):
        m = UniformMatroid(6, 2)
        b = greedy_max_basis(m, [0, 1, 2, 3, 4, 5], rank=2)
        self.assertEqual(b, {4, 5})
        # Scan stops after the basis is complete
        self.assertEqual(m.query_count, 2)
