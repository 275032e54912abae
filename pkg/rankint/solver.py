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
End-to-end weighted matroid intersection: preprocessing, unweighted initialisation, the scaling loop and optimality certification
"""

from __future__ import print_function, absolute_import # Compatibility with python 2 and 3
import os, time, json, math, collections
from fractions import Fraction
import numpy

import logging
logger = logging.getLogger(__name__)
from rankint.utils.log import log_and_raise_error,log_warning,log_info,log_debug,log_execution_time
from rankint.utils.log import RankintError, InstanceFormatError, ContractViolation, InvariantViolation, CertificateError
from rankint.utils.querystats import QueryStats, in_phase
from rankint.utils.trace import TraceWriter
import rankint.utils.config

from rankint.matroid import SetExpr, restrict, truncate, pad_with_free_elements, discard_negative
from rankint.exchange import OrderedPool, MIN
from rankint.exchange import find_removal_exchange, find_insertion_exchange, find_free_element, greedy_max_basis, weight_of
from rankint.splitting import WeightSplit, PartialSolution, initial_solution, adjust_weights, ceil_power
from rankint.sssp import shortest_path_tree
from rankint.augment import apply_augmentation

OBJECTIVES = ("independent", "basis")


def default_debug_level():
    """
    Debug level from the environment variable ``DEBUG_ASSERT_LEVEL`` (default 1)
    """
    level = os.environ.get("DEBUG_ASSERT_LEVEL", "1")
    try:
        level = int(level)
    except ValueError:
        log_and_raise_error(logger, "DEBUG_ASSERT_LEVEL=%s is not an integer." % level, exception=ValueError)
    return level

def _fraction(value, name):
    v = Fraction(value)
    if v <= 0 or v > 1:
        log_and_raise_error(logger, "%s=%s is outside of (0, 1]." % (name, value), exception=ValueError)
    return v


class SolveConfig:
    """
    Parameters of :class:`Solver`

    Kwargs:
      :k_exponent: Exponent *e* of the adjustment bound :math:`k = \\lceil r^e \\rceil` (default ``3/4``)

      :buffer_exponent: Exponent *e* of the buffer flush threshold :math:`\\tau = \\lceil r^e \\rceil` (default ``1/2``)

      :k (int): Explicit adjustment bound, overrides ``k_exponent`` (default ``None``)

      :buffer_size (int): Explicit flush threshold, overrides ``buffer_exponent``; 1 gives plain Dijkstra with full relaxation (default ``None``)

      :scale_policy: ``'auto'`` (smallest *s* with :math:`2^s \\geq 4r`) or an explicit integer *s* (default ``'auto'``)

      :debug_level (int): 0, 1 or 2 (default: environment variable ``DEBUG_ASSERT_LEVEL`` or 1)

      :seed (int): Seed of the random adjustment order (default ``0``)

      :adjust_order (str): ``'fifo'`` or ``'random'`` (default ``'fifo'``)

      :objective (str): ``'independent'`` (maximum-weight common independent set) or ``'basis'`` (maximum-weight common independent set of maximum size) (default ``'independent'``)

      :trace_path (str): Write a newline-delimited JSON trace of the shortest-path iterations to this file (default ``None``)
    """
    def __init__(self, k_exponent=Fraction(3, 4), buffer_exponent=Fraction(1, 2), k=None, buffer_size=None,
                 scale_policy="auto", debug_level=None, seed=0, adjust_order="fifo", objective="independent", trace_path=None):
        self.k_exponent = _fraction(k_exponent, "k_exponent")
        self.buffer_exponent = _fraction(buffer_exponent, "buffer_exponent")
        if k is not None and k < 1:
            log_and_raise_error(logger, "k=%s must be a positive integer." % k, exception=ValueError)
        if buffer_size is not None and buffer_size < 1:
            log_and_raise_error(logger, "buffer_size=%s must be a positive integer." % buffer_size, exception=ValueError)
        self.k = k
        self.buffer_size = buffer_size
        if scale_policy != "auto" and not isinstance(scale_policy, int):
            log_and_raise_error(logger, "scale_policy=%s is invalid. Has to be either \'auto\' or an integer." % scale_policy, exception=ValueError)
        self.scale_policy = scale_policy
        self.debug_level = default_debug_level() if debug_level is None else int(debug_level)
        if self.debug_level not in (0, 1, 2):
            log_and_raise_error(logger, "debug_level=%s is invalid. Has to be 0, 1 or 2." % debug_level, exception=ValueError)
        self.seed = seed
        if adjust_order not in ("fifo", "random"):
            log_and_raise_error(logger, "adjust_order=%s is invalid. Has to be either \'fifo\' or \'random\'." % adjust_order, exception=ValueError)
        self.adjust_order = adjust_order
        if objective not in OBJECTIVES:
            log_and_raise_error(logger, "objective=%s is invalid. Has to be either \'independent\' or \'basis\'." % objective, exception=ValueError)
        self.objective = objective
        self.trace_path = trace_path

    def get_k(self, r):
        if self.k is not None:
            return self.k
        return max(1, ceil_power(r, self.k_exponent))

    def get_buffer_size(self, r):
        if self.buffer_size is not None:
            return self.buffer_size
        return max(1, ceil_power(r, self.buffer_exponent))

    def get_scale_exp(self, r):
        """
        Return the exponent *s* of the weight pre-multiplier :math:`2^s`, with :math:`2^s \\geq 4r`
        """
        if self.scale_policy == "auto":
            s = 0
            while 2 ** s < 4 * r:
                s += 1
            return s
        if 2 ** self.scale_policy < 4 * r:
            log_and_raise_error(logger, "scale_policy=%i is too small for rank %i (need 2**s >= 4r)." % (self.scale_policy, r), exception=ValueError)
        return self.scale_policy

    def get_conf(self):
        """
        Get configuration in form of a dictionary. An identically configured instance can be initialised by:

        .. code-block:: python

          conf = C0.get_conf()                          # C0: already existing SolveConfig instance
          C1 = rankint.config_from_configdict(conf)     # C1: new SolveConfig instance with the same configuration as C0
        """
        conf = {}
        conf["solver"] = {}
        conf["solver"]["k_exponent"]      = str(self.k_exponent)
        conf["solver"]["buffer_exponent"] = str(self.buffer_exponent)
        conf["solver"]["k"]               = self.k
        conf["solver"]["buffer_size"]     = self.buffer_size
        conf["solver"]["scale_policy"]    = self.scale_policy
        conf["solver"]["debug_level"]     = self.debug_level
        conf["solver"]["seed"]            = self.seed
        conf["solver"]["adjust_order"]    = self.adjust_order
        conf["solver"]["objective"]       = self.objective
        conf["solver"]["trace_path"]      = self.trace_path
        return conf


def config_from_configdict(configdict):
    """
    Initialise a :class:`SolveConfig` from the ``solver`` section of a configuration dictionary
    """
    section = dict(rankint.utils.config.read_configdict(configdict.get("solver", {})))
    for key in ("k_exponent", "buffer_exponent"):
        if key in section and isinstance(section[key], float):
            log_and_raise_error(logger, "%s must be given as an exact fraction like 3/4 (got %s)." % (key, section[key]), exception=ValueError)
    allowed = SolveConfig.__init__.__code__.co_varnames[1:SolveConfig.__init__.__code__.co_argcount]
    unknown = [k for k in section if k not in allowed]
    if unknown:
        log_and_raise_error(logger, "Unknown solver option(s): %s" % ", ".join(sorted(unknown)), exception=ValueError)
    return SolveConfig(**section)

def solver_from_configfile(configfile):
    """
    Initialise a :class:`Solver` from an INI configuration file with a ``[solver]`` section

    *See also:*

      - :class:`rankint.solver.SolveConfig`
    """
    C = rankint.utils.config.read_configfile(configfile)
    return Solver(config_from_configdict(C))


class Certificate:
    """
    Self-contained proof that a common independent set has maximum weight

    All weights are in the units of the transformed problem: restricted to ``kept``, shifted by ``shift``, multiplied by ``2**scale_exp`` and extended by ``padding`` zero-weight elements.

    Args:
      :split (WeightSplit): Final weight splitting (``epsilon`` in scaled units)

      :basis (list): Common basis of the transformed problem

      :kept (list): Original ids of the transformed elements

      :r (int): Maximum size of a common independent set

      :cover (list): Transformed ids *A* with ``rank1(A) + rank2(kept - A) == r``

      :padding (int): Number of padding elements

      :objective (str): ``'independent'`` or ``'basis'``

      :shift (int): Constant added to every weight

      :solution (list): The optimal set in original ids

      :weight (int): Its weight under the original weights

      :witness (list): Weights of the greedy bases under ``w1`` and ``w2``
    """
    def __init__(self, split, basis, kept, r, cover, padding, objective, shift, solution, weight, witness):
        self.split = split
        self.basis = sorted(basis)
        self.kept = list(kept)
        self.r = r
        self.cover = sorted(cover)
        self.padding = padding
        self.objective = objective
        self.shift = shift
        self.solution = sorted(solution)
        self.weight = weight
        self.witness = list(witness)

    def to_dict(self):
        d = {"split": self.split.get_conf(), "basis": self.basis, "kept": self.kept, "r": self.r,
             "cover": self.cover, "padding": self.padding, "objective": self.objective, "shift": self.shift,
             "solution": self.solution, "weight": self.weight, "witness": self.witness}
        return d

    @classmethod
    def from_dict(cls, d):
        split = WeightSplit(**d["split"])
        return cls(split, d["basis"], d["kept"], d["r"], d["cover"], d["padding"], d["objective"],
                   d["shift"], d["solution"], d["weight"], d["witness"])


class RunReport:
    """
    Telemetry of one solve: sizes, parameters, per-round statistics, per-phase query counts and wall-clock time
    """
    def __init__(self, n, objective="independent"):
        self.n = n
        self.objective = objective
        self.n_kept = 0
        self.n_hat = 0
        self.r = 0
        self.W = 0
        self.scale_exp = 0
        self.epsilon0 = 0
        self.k = None
        self.tau = None
        self.rounds = []
        self.phases = {}
        self.wall_ms = 0.
        self.certified = None

    def get_queries(self, phase=None):
        if phase is None:
            return sum([sum(c) for c in self.phases.values()])
        return sum(self.phases.get(phase, [0, 0]))

    def get_augmentations(self):
        return sum([rnd["augmentations"] for rnd in self.rounds])

    def get_budget_ratio(self):
        r"""
        Non-initialisation queries divided by :math:`n r^{3/4} \log_2(\hat{n}+2) \log_2(rW+2)`
        """
        if self.r == 0 or self.n == 0:
            return 0.
        denom = self.n * self.r ** 0.75 * math.log2(self.n_hat + 2) * math.log2(self.r * self.W + 2)
        return (self.get_queries() - self.get_queries("init") - self.get_queries("verification")) / denom

    def to_dict(self):
        return {"n": self.n, "n_kept": self.n_kept, "n_hat": self.n_hat, "r": self.r, "W": self.W,
                "objective": self.objective, "scale_exp": self.scale_exp, "epsilon0": self.epsilon0,
                "k": self.k, "tau": self.tau, "rounds": list(self.rounds),
                "augmentations": self.get_augmentations(),
                "phases": dict(self.phases), "queries_total": self.get_queries(),
                # initialisation uses plain augmenting paths and is not part of the budget
                "init_excluded_from_budget": True,
                "budget_ratio": self.get_budget_ratio(),
                "wall_ms": self.wall_ms, "certified": self.certified}

    def write_json(self, filename):
        with open(filename, "w") as f:
            json.dump(self.to_dict(), f, indent=2, sort_keys=True)


def _augmenting_path(m1, m2, s):
    # Breadth-first search for a shortest path from {y : S+y in I1} to {y : S+y in I2}.
    # Edges x -> y if S-x+y in I1 and y -> x if S-x+y in I2 (x in S, y not in S).
    n = m1.get_size()
    sset = set(s)
    slist = sorted(s)
    size = len(slist)
    outside = OrderedPool([(y, 0) for y in range(n) if y not in sset])
    inside = OrderedPool([(x, 0) for x in slist])
    parent = {}
    queue = collections.deque()
    while True:
        y = find_free_element(m1, slist, outside)
        if y is None:
            break
        outside.remove(y)
        parent[y] = None
        queue.append(y)
    reached = set(queue)
    while queue:
        v = queue.popleft()
        if v not in sset:
            if m2.rank(SetExpr(slist, plus=(v,))) == size + 1:
                path = [v]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1], reached
            nxt = lambda: find_removal_exchange(m2, sset, v, inside, MIN, basis=True)
            pool = inside
        else:
            nxt = lambda: find_insertion_exchange(m1, sset, v, outside, MIN)
            pool = outside
        while True:
            u = nxt()
            if u is None:
                break
            pool.remove(u)
            parent[u] = v
            reached.add(u)
            queue.append(u)
    return None, reached

def _max_cardinality(m1, m2):
    n = m1.get_size()
    s = []
    # Greedy warm start
    for x in range(n):
        if m1.rank(SetExpr(s, plus=(x,))) == len(s) + 1 and m2.rank(SetExpr(s, plus=(x,))) == len(s) + 1:
            s.append(x)
    s = set(s)
    warm = len(s)
    while True:
        path, reached = _augmenting_path(m1, m2, s)
        if path is None:
            break
        s.symmetric_difference_update(path)
    log_debug(logger, "Maximum common independent set: r=%i (%i from the warm start)." % (len(s), warm))
    cover = [v for v in range(n) if v not in reached]
    return sorted(s), len(s), cover

def max_cardinality_intersection(m1, m2):
    """
    Return ``(S0, r)``: a maximum-cardinality common independent set and its size

    A greedy pass over the elements in id order is completed by shortest augmenting paths in the unweighted exchange graph. Neighbours are discovered with the exchange searches and removed from the pool of unvisited elements, so each discovered element costs a logarithmic number of queries.
    """
    s0, r, cover = _max_cardinality(m1, m2)
    return s0, r


def _preprocess(w, objective):
    # kept elements, weight shift and the transformed weights
    if objective == "independent":
        kept, remapping = discard_negative(w)
        shift = 0
    else:
        kept = list(range(len(w)))
        shift = max(0, -min(w)) if len(w) else 0
    return kept, shift, [w[x] + shift for x in kept]

def _extend(c1, c2, r, objective):
    o1, o2 = truncate(c1, r), truncate(c2, r)
    padding = 0
    if objective == "independent":
        o1, o2 = pad_with_free_elements(o1, r), pad_with_free_elements(o2, r)
        padding = r
    return o1, o2, padding

def _check_certificate(cert, c1, c2, o1, o2, w_scaled, w):
    split = cert.split
    if split.w != w_scaled:
        return False, "splitting"
    if split.epsilon < 1 or cert.r * split.epsilon >= 2 ** split.scale_exp:
        return False, "epsilon"
    if split.violations():
        return False, "splitting"
    n_kept = len(cert.kept)
    cover = set(cert.cover)
    if any([x < 0 or x >= n_kept for x in cover]):
        return False, "rank"
    if c1.rank(sorted(cover)) + c2.rank([x for x in range(n_kept) if x not in cover]) != cert.r:
        return False, "rank"
    basis = cert.basis
    n_hat = o1.get_size()
    if len(basis) != cert.r or len(set(basis)) != len(basis) or any([x < 0 or x >= n_hat for x in basis]):
        return False, "independence"
    if not (o1.is_independent(basis) and o2.is_independent(basis)):
        return False, "independence"
    for side, o, f in ((1, o1, split.w1), (2, o2, split.w2)):
        g = greedy_max_basis(o, f, rank=cert.r)
        if len(g) != cert.r or weight_of(f, g) != weight_of(f, basis) or weight_of(f, g) != cert.witness[side - 1]:
            return False, "maximality_%i" % side
    if cert.solution != sorted([cert.kept[x] for x in basis if x < n_kept]):
        return False, "elements"
    if cert.weight != sum([w[x] for x in cert.solution]):
        return False, "weight"
    return True, None

def certify_optimality(cert, m1, m2, w):
    r"""
    Check a :class:`Certificate` against fresh oracles and the original weights

    The check is independent of the solver state: the transformed oracles are rebuilt from the certificate data, the cover proves that no common independent set has more than ``r`` elements, and two greedy runs prove that the basis is ``w1``- and ``w2``-maximum. With :math:`r \epsilon < 2^s` this implies optimality.

    Returns ``(passed, reason)``. ``reason`` is ``None`` on success and otherwise one of ``'splitting'``, ``'epsilon'``, ``'rank'``, ``'independence'``, ``'maximality_1'``, ``'maximality_2'``, ``'elements'``, ``'weight'``.
    """
    try:
        w = [int(x) for x in w]
        if cert.objective not in OBJECTIVES:
            return False, "elements"
        kept, shift, wk = _preprocess(w, cert.objective)
        if kept != cert.kept or shift != cert.shift:
            return False, "elements"
        c1, c2 = restrict(m1, kept), restrict(m2, kept)
        o1, o2, padding = _extend(c1, c2, cert.r, cert.objective)
        if padding != cert.padding:
            return False, "elements"
        w_scaled = [x << cert.split.scale_exp for x in wk] + [0] * padding
        return _check_certificate(cert, c1, c2, o1, o2, w_scaled, w)
    except (RankintError, IndexError, ValueError) as e:
        log_debug(logger, "Certificate check aborted: %s" % e)
        return False, "elements"


@log_execution_time(logger)
def refine(m1, m2, sol, config=None, stats=None, trace=None):
    r"""
    Turn a :math:`2\epsilon`-solution into an :math:`\epsilon`-solution

    Weight adjustment leaves at most :math:`\lceil 2r/k \rceil` elements in :math:`S_1 \setminus S_2`; every augmentation along a shortest exchange path removes at least one of them.

    Args:
      :m1: Rank oracle of matroid 1 (truncated to the common rank)

      :m2: Rank oracle of matroid 2 (truncated to the common rank)

      :sol (PartialSolution): :math:`2\epsilon`-solution

    Kwargs:
      :config (SolveConfig): Parameters (default ``SolveConfig()``)

      :stats: :class:`rankint.utils.querystats.QueryStats` attached to the oracles (default ``None``)

      :trace: :class:`rankint.utils.trace.TraceWriter` (default ``None``)

    Returns ``(sol, info)`` with the :math:`\epsilon`-solution and a dictionary of round statistics.
    """
    if config is None:
        config = SolveConfig()
    r = sol.get_rank()
    k = config.get_k(r)
    tau = config.get_buffer_size(r)
    before = stats.total() if stats is not None else None
    sol, state = adjust_weights(m1, m2, sol, k, order=config.adjust_order, seed=config.seed,
                                debug_level=config.debug_level, stats=stats)
    difference = len(sol.s1 - sol.s2)
    if trace is not None:
        trace.set_context(epsilon=sol.epsilon)
    augmentations = 0
    while not sol.is_solution():
        result = shortest_path_tree(m1, m2, sol, tau=tau, debug_level=config.debug_level, stats=stats, trace=trace)
        with in_phase(stats, "augmentation"):
            sol, record = apply_augmentation(m1, m2, sol, result, debug_level=config.debug_level, stats=stats)
        augmentations += 1
        if augmentations > difference:
            log_and_raise_error(logger, "More augmentations (%i) than elements of S1 - S2 after adjustment (%i)." % (augmentations, difference), exception=InvariantViolation)
    info = {"epsilon": sol.epsilon, "k": k, "tau": tau, "adjustment_steps": state.steps,
            "max_p": max(state.p) if state.p else 0, "difference": difference, "augmentations": augmentations}
    if stats is not None:
        info["queries"] = stats.total() - before
    log_info(logger, "Round epsilon=%i: %i adjustment steps, |S1-S2|=%i, %i augmentations%s" % (sol.epsilon, state.steps, difference, augmentations, (", %i queries" % info["queries"]) if "queries" in info else ""))
    return sol, info


class Solver:
    """
    Exact maximum-weight common independent set of two matroids given by rank oracles

    Kwargs:
      :config (SolveConfig): Parameters (default ``SolveConfig()``)
    """
    def __init__(self, config=None):
        self.config = config if config is not None else SolveConfig()

    def get_conf(self):
        return self.config.get_conf()

    @log_execution_time(logger)
    def solve(self, m1, m2, w):
        """
        Solve the instance and return ``(solution, weight, certificate, report)``

        Args:
          :m1: Rank oracle of matroid 1

          :m2: Rank oracle of matroid 2

          :w: Integer weight per element
        """
        t0 = time.time()
        cfg = self.config
        n = len(w)
        if m1.get_size() != n or m2.get_size() != n:
            log_and_raise_error(logger, "Ground-set sizes %i, %i and %i weights do not agree." % (m1.get_size(), m2.get_size(), n), exception=InstanceFormatError)
        for x in w:
            if isinstance(x, bool) or not isinstance(x, (int, numpy.integer)):
                log_and_raise_error(logger, "Weight %r is not an integer." % (x,), exception=InstanceFormatError)
        w = [int(x) for x in w]

        report = RunReport(n, objective=cfg.objective)
        report.W = max([abs(x) for x in w] + [0])
        stats = QueryStats("init")
        kept, shift, wk = _preprocess(w, cfg.objective)
        report.n_kept = len(kept)
        c1, c2 = restrict(m1, kept), restrict(m2, kept)
        c1.attach_stats(stats, 1)
        c2.attach_stats(stats, 2)
        trace = TraceWriter(cfg.trace_path) if cfg.trace_path else None
        try:
            with stats.phase("init"):
                s0, r, cover = _max_cardinality(c1, c2)
            o1, o2, padding = _extend(c1, c2, r, cfg.objective)
            s = cfg.get_scale_exp(r)
            ws = [x << s for x in wk] + [0] * padding
            report.r = r
            report.n_hat = len(ws)
            report.scale_exp = s
            if r == 0:
                sol = PartialSolution(WeightSplit(ws, ws, [0] * len(ws), 1, s), [], [])
            else:
                sol = initial_solution(o1, o2, ws, s0, s)
                report.epsilon0 = sol.epsilon
                report.k = cfg.get_k(r)
                report.tau = cfg.get_buffer_size(r)
                while sol.epsilon > 1:
                    sol, info = refine(o1, o2, sol, cfg, stats, trace)
                    report.rounds.append(info)
            basis = sorted(sol.s1)
            padding_ids = set(o1.get_padding()) if padding else set()
            solution = sorted([kept[x] for x in basis if x not in padding_ids])
            weight = sum([w[x] for x in solution])
            with stats.phase("verification"):
                witness = [weight_of(sol.split.w1, greedy_max_basis(o1, sol.split.w1, rank=r)),
                           weight_of(sol.split.w2, greedy_max_basis(o2, sol.split.w2, rank=r))]
                cert = Certificate(sol.split, basis, kept, r, cover, padding, cfg.objective, shift, solution, weight, witness)
                if cfg.debug_level >= 1:
                    passed, reason = _check_certificate(cert, c1, c2, o1, o2, ws, w)
                    report.certified = passed
                    if not passed:
                        log_and_raise_error(logger, "Certificate check failed: %s" % reason, exception=CertificateError)
        finally:
            c1.detach_stats()
            c2.detach_stats()
            if trace is not None:
                trace.close()
        report.phases = stats.snapshot()
        report.wall_ms = 1000. * (time.time() - t0)
        log_info(logger, "Solved n=%i r=%i: weight %i, %i rounds, %i augmentations, %i queries (%i init)" % (n, r, weight, len(report.rounds), report.get_augmentations(), report.get_queries(), report.get_queries("init")))
        return solution, weight, cert, report


def solve(m1, m2, w, config=None):
    """
    Return ``(solution, weight, certificate, report)`` for the instance, see :meth:`Solver.solve`
    """
    return Solver(config).solve(m1, m2, w)
