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
Weight splittings, partial solutions and the weight-adjustment procedure that makes the two bases of a partial solution overlap
"""

from __future__ import print_function, absolute_import # Compatibility with python 2 and 3
import collections
import numpy

import logging
logger = logging.getLogger(__name__)
from rankint.utils.log import log_and_raise_error,log_warning,log_info,log_debug
from rankint.utils.log import ContractViolation, InvariantViolation
from rankint.utils.querystats import in_phase

from rankint.exchange import OrderedPool, MIN, MAX
from rankint.exchange import find_removal_exchange, find_insertion_exchange, greedy_max_basis, weight_of

# Above this ground-set size maximality is spot-checked by sampled exchanges instead of a greedy re-run
MAXIMALITY_GREEDY_LIMIT = 200
MAXIMALITY_SAMPLES = 64


def ceil_power(r, exponent):
    r"""
    Return the smallest integer :math:`k \geq 0` with :math:`k \geq r^{e}` for a rational exponent :math:`e` (exact integer arithmetic)

    Args:
      :r (int): Non-negative base

      :exponent (fractions.Fraction): Exponent in (0, 1]
    """
    num, den = exponent.numerator, exponent.denominator
    target = r ** num
    lo, hi = 0, max(1, r)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** den >= target:
            hi = mid
        else:
            lo = mid + 1
    return lo


class WeightSplit:
    r"""
    Pair of weight functions :math:`(w_1, w_2)` splitting the scaled weight :math:`w` up to :math:`\epsilon`

    The splitting condition is :math:`w(x) \leq w_1(x) + w_2(x) \leq w(x) + \epsilon` for every element.

    Args:
      :w: Scaled weight per element

      :w1: Weight of matroid 1 per element

      :w2: Weight of matroid 2 per element

      :epsilon (int): Positive slack of the splitting

    Kwargs:
      :scale_exp (int): Input weights were multiplied by ``2**scale_exp`` (default ``0``)
    """
    def __init__(self, w, w1, w2, epsilon, scale_exp=0):
        self.w = list(w)
        self.w1 = list(w1)
        self.w2 = list(w2)
        self.epsilon = int(epsilon)
        self.scale_exp = int(scale_exp)
        if not (len(self.w) == len(self.w1) == len(self.w2)):
            log_and_raise_error(logger, "Weight vectors of a splitting must have equal lengths.", exception=ContractViolation)

    def get_size(self):
        return len(self.w)

    def holds(self, x):
        s = self.w1[x] + self.w2[x]
        return self.w[x] <= s <= self.w[x] + self.epsilon

    def violations(self):
        """
        Return the elements for which the splitting condition fails
        """
        return [x for x in range(len(self.w)) if not self.holds(x)]

    def check(self):
        v = self.violations()
        if v:
            x = v[0]
            log_and_raise_error(logger, "Splitting bound violated for %i element(s), first x=%i: w=%i, w1=%i, w2=%i, epsilon=%i." % (len(v), x, self.w[x], self.w1[x], self.w2[x], self.epsilon), exception=InvariantViolation)

    def copy(self):
        return WeightSplit(self.w, self.w1, self.w2, self.epsilon, self.scale_exp)

    def get_conf(self):
        return {"w": list(self.w), "w1": list(self.w1), "w2": list(self.w2),
                "epsilon": self.epsilon, "scale_exp": self.scale_exp}


class PartialSolution:
    """
    Weight splitting together with a ``w1``-maximum basis ``s1`` of matroid 1 and a ``w2``-maximum basis ``s2`` of matroid 2

    The partial solution is a solution if both bases coincide.
    """
    def __init__(self, split, s1, s2):
        self.split = split
        self.s1 = set(s1)
        self.s2 = set(s2)

    @property
    def epsilon(self):
        return self.split.epsilon

    def get_rank(self):
        return len(self.s1)

    def is_solution(self):
        return self.s1 == self.s2

    def sources(self):
        """
        Return the elements of ``s1 - s2`` in ascending id order
        """
        return sorted(self.s1 - self.s2)

    def sinks(self):
        """
        Return the elements of ``s2 - s1`` in ascending id order
        """
        return sorted(self.s2 - self.s1)

    def copy(self):
        return PartialSolution(self.split.copy(), self.s1, self.s2)

    def __repr__(self):
        return "PartialSolution(epsilon=%i, |S1|=%i, |S1&S2|=%i)" % (self.epsilon, len(self.s1), len(self.s1 & self.s2))


class AdjustmentState:
    """
    Bookkeeping of :func:`adjust_weights`: adjustment counters ``p`` and the queue of elements waiting for an adjustment

    Args:
      :size (int): Ground-set size

      :k (int): Upper bound of the counters

    Kwargs:
      :order (str): ``'fifo'`` or ``'random'`` (default ``'fifo'``)

      :seed (int): Seed of the random order (default ``None``)
    """
    def __init__(self, size, k, order="fifo", seed=None):
        if order not in ("fifo", "random"):
            log_and_raise_error(logger, "Adjustment order %s is invalid. Has to be either \'fifo\' or \'random\'." % order, exception=ValueError)
        self.k = k
        self.order = order
        self.p = [0] * size
        self.adjustments = [0] * size
        self.steps = 0
        self._pending = collections.deque()
        self._queued = set()
        self._rng = numpy.random.RandomState(seed) if order == "random" else None

    def push(self, x):
        if x not in self._queued and self.p[x] < self.k:
            self._queued.add(x)
            self._pending.append(x)

    def pop(self):
        if self._rng is not None:
            i = self._rng.randint(len(self._pending))
            self._pending.rotate(-i)
        x = self._pending.popleft()
        self._queued.discard(x)
        return x

    def __len__(self):
        return len(self._pending)


def is_maximum_basis(oracle, f, s, seed=0):
    r"""
    Return ``True`` if the independent set ``s`` is an ``f``-maximum basis of ``oracle``

    Up to :data:`MAXIMALITY_GREEDY_LIMIT` elements the weight of ``s`` is compared to the greedy basis. On larger ground sets a sample of elements :math:`y \notin S` is checked for an exchange :math:`b` with :math:`f(b) < f(y)`.
    """
    n = oracle.get_size()
    if n <= MAXIMALITY_GREEDY_LIMIT:
        basis = greedy_max_basis(oracle, f)
        return len(basis) == len(s) and weight_of(f, basis) == weight_of(f, s)
    if oracle.get_full_rank() != len(s):
        return False
    outside = [y for y in range(n) if y not in s]
    if not outside:
        return True
    rng = numpy.random.RandomState(seed)
    sample = rng.choice(len(outside), size=min(MAXIMALITY_SAMPLES, len(outside)), replace=False)
    pool = OrderedPool([(b, f[b]) for b in s])
    for i in sample:
        y = outside[i]
        b = find_removal_exchange(oracle, s, y, pool, MIN, basis=True)
        if b is not None and f[b] < f[y]:
            return False
    return True

def check_partial_solution(m1, m2, sol, stats=None):
    """
    Raise :class:`rankint.utils.log.InvariantViolation` unless both bases of ``sol`` are independent and weight-maximum (queries counted in the verification phase)
    """
    with in_phase(stats, "verification"):
        for side, m, s, f in ((1, m1, sol.s1, sol.split.w1), (2, m2, sol.s2, sol.split.w2)):
            if not m.is_independent(s):
                log_and_raise_error(logger, "Basis of matroid %i is dependent." % side, exception=InvariantViolation)
            if not is_maximum_basis(m, f, s):
                log_and_raise_error(logger, "Basis of matroid %i is not w%i-maximum." % (side, side), exception=InvariantViolation)


def initial_solution(m1, m2, w, s0, scale_exp=0):
    r"""
    Build the starting solution of the scaling loop

    :math:`\epsilon_0` is the smallest power of two with :math:`\epsilon_0 \geq \max_x w(x)` and :math:`\epsilon_0 \geq 2`; both weight functions are constant :math:`\epsilon_0 / 2`. Constant weights make every basis maximum, so the common basis ``s0`` is a valid basis of both sides.

    Args:
      :m1: Rank oracle of matroid 1

      :m2: Rank oracle of matroid 2

      :w: Non-negative scaled weight per element

      :s0: Common basis

    Kwargs:
      :scale_exp (int): Scaling exponent recorded in the splitting (default ``0``)
    """
    if any([x < 0 for x in w]):
        log_and_raise_error(logger, "Initial solution requires non-negative weights.", exception=ContractViolation)
    wmax = max(w) if len(w) else 0
    epsilon = 2
    while epsilon < wmax:
        epsilon *= 2
    half = epsilon // 2
    split = WeightSplit(w, [half] * len(w), [half] * len(w), epsilon, scale_exp)
    return PartialSolution(split, s0, s0)


def adjust_weights(m1, m2, sol, k, order="fifo", seed=None, debug_level=1, stats=None):
    r"""
    Turn a :math:`2\epsilon`-solution into an :math:`\epsilon`-partial-solution whose bases overlap in all but at most :math:`\lceil 2r/k \rceil` elements

    Starting from :math:`w_1 = w_1^{2\epsilon}` and :math:`w_2 = w - w_1^{2\epsilon} + \epsilon` and greedy bases, an element :math:`x \in S_1 \setminus S_2` with :math:`p(x) < k` is adjusted until no such element is left. If :math:`w_1(x) + w_2(x) = w(x) + \epsilon`, :math:`w_1(x)` drops by :math:`\epsilon` and :math:`x` is swapped for the :math:`w_1`-maximum insertion candidate if that one is strictly heavier. Otherwise :math:`p(x)` and :math:`w_2(x)` grow and :math:`x` is swapped into :math:`S_2` against the :math:`w_2`-minimum removal candidate if that one is strictly lighter.

    Args:
      :m1: Rank oracle of matroid 1

      :m2: Rank oracle of matroid 2

      :sol (PartialSolution): :math:`2\epsilon`-solution (``s1 == s2``)

      :k (int): Counter bound (>= 1)

    Kwargs:
      :order (str): Order of the pending elements, ``'fifo'`` or ``'random'`` (default ``'fifo'``)

      :seed (int): Seed of the random order (default ``None``)

      :debug_level (int): 0, 1 or 2; at 2 both bases are checked for maximality after every step (default ``1``)

      :stats: :class:`rankint.utils.querystats.QueryStats` attached to the oracles (default ``None``)

    Returns a tuple ``(sol, state)`` with the new :class:`PartialSolution` and the :class:`AdjustmentState`.
    """
    if k < 1:
        log_and_raise_error(logger, "Adjustment bound k must be positive (got %i)." % k, exception=ContractViolation)
    if not sol.is_solution():
        log_and_raise_error(logger, "Weight adjustment requires a solution with S1 = S2.", exception=ContractViolation)
    if sol.epsilon % 2 != 0 or sol.epsilon < 2:
        log_and_raise_error(logger, "Cannot halve epsilon=%i exactly." % sol.epsilon, exception=ContractViolation)
    eps = sol.epsilon // 2
    w = sol.split.w
    n = len(w)
    r = sol.get_rank()
    w1 = list(sol.split.w1)
    w2 = [w[x] - w1[x] + eps for x in range(n)]
    split = WeightSplit(w, w1, w2, eps, sol.split.scale_exp)
    w1, w2 = split.w1, split.w2

    with in_phase(stats, "adjustment"):
        s1 = greedy_max_basis(m1, w1, rank=r)
        s2 = greedy_max_basis(m2, w2, rank=r)
        if len(s1) != r or len(s2) != r:
            log_and_raise_error(logger, "Greedy bases have sizes %i and %i instead of rank %i." % (len(s1), len(s2), r), exception=InvariantViolation)
        # V - S1 by w1 (descending) and S2 by w2 (ascending)
        pool1 = OrderedPool([(y, w1[y]) for y in range(n) if y not in s1], descending=True)
        pool2 = OrderedPool([(y, w2[y]) for y in s2])

        state = AdjustmentState(n, k, order=order, seed=seed)
        for x in sorted(s1 - s2):
            state.push(x)

        while len(state) > 0:
            x = state.pop()
            if x not in s1 or x in s2 or state.p[x] >= k:
                continue
            state.steps += 1
            state.adjustments[x] += 1
            if w1[x] + w2[x] == w[x] + eps:
                w1[x] -= eps
                y = find_insertion_exchange(m1, s1, x, pool1, MAX)
                if y is not None and w1[x] < w1[y]:
                    s1.remove(x)
                    s1.add(y)
                    pool1.remove(y)
                    pool1.insert(x, w1[x])
                    if y not in s2:
                        state.push(y)
            else:
                state.p[x] += 1
                w2[x] += eps
                y = find_removal_exchange(m2, s2, x, pool2, MIN, basis=True)
                if y is not None and w2[x] > w2[y]:
                    s2.remove(y)
                    s2.add(x)
                    pool2.remove(y)
                    pool2.insert(x, w2[x])
                    if y in s1:
                        state.push(y)
            if not split.holds(x):
                log_and_raise_error(logger, "Splitting bound violated at x=%i during weight adjustment (w=%i, w1=%i, w2=%i, epsilon=%i)." % (x, w[x], w1[x], w2[x], eps), exception=InvariantViolation)
            # Decrements and increments alternate, starting with a decrement
            if state.adjustments[x] > 2 * state.p[x] + 1:
                log_and_raise_error(logger, "Element x=%i was adjusted %i times with p(x)=%i (bound 2p(x)+1)." % (x, state.adjustments[x], state.p[x]), exception=InvariantViolation)
            if x in s1 and x not in s2:
                state.push(x)
            if debug_level >= 2:
                check_partial_solution(m1, m2, PartialSolution(split, s1, s2), stats=stats)

    result = PartialSolution(split, s1, s2)
    bound = -(-2 * r // k)
    if len(s1 - s2) > bound:
        log_and_raise_error(logger, "Weight adjustment left |S1-S2|=%i > ceil(2r/k)=%i (r=%i, k=%i)." % (len(s1 - s2), bound, r, k), exception=InvariantViolation)
    if debug_level >= 1:
        check_partial_solution(m1, m2, result, stats=stats)
    log_debug(logger, "Weight adjustment at epsilon=%i: %i steps, |S1-S2|=%i (bound %i)." % (eps, state.steps, len(s1 - s2), bound))
    return result, state
