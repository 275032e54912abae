#!/usr/bin/env python
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
from __future__ import print_function, absolute_import # Compatibility with python 2 and 3
import argparse
import csv
import json
import math
import sys
import concurrent.futures
import numpy
import rankint
import rankint.utils.config
from rankint.utils.log import log_info, log_warning, log_execution_time
from rankint.utils.log import RankintError, InstanceFormatError, CertificateError, BruteForceRefused, InvariantViolation, ContractViolation
from rankint.utils.reportwriter import ReportWriter
from rankint.instance import read_instance, write_instance
from rankint.generators import generate, FAMILIES
from rankint.solver import Solver, SolveConfig, certify_optimality, config_from_configdict
from rankint.verify import brute_force_best
import logging
logger = logging.getLogger("rankint")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CERTIFICATE = 2
EXIT_REFUSED = 3
EXIT_INTERNAL = 4

BENCH_COLUMNS = ["name", "n", "r", "W", "queries_init", "queries_adjust", "queries_sssp", "queries_total",
                 "augmentations", "rounds", "wall_ms", "budget_ratio", "error"]

# Largest admissible max/min budget ratio across sizes and query growth exponent per size step
RATIO_SPREAD_LIMIT = 4.
GROWTH_EXPONENT_LIMIT = 1.85


def _make_config(config_path=None, debug_level=None, objective=None, trace_path=None, buffer_size=None, k=None, k_exponent=None, adjust_order=None):
    conf = rankint.utils.config.read_configfile(config_path) if config_path else {}
    section = dict(conf.get("solver", {}))
    if debug_level is not None:
        section["debug_level"] = debug_level
    if objective is not None:
        section["objective"] = objective
    if trace_path is not None:
        section["trace_path"] = trace_path
    if buffer_size is not None:
        section["buffer_size"] = buffer_size
    if k is not None:
        section["k"] = k
    if k_exponent is not None:
        section["k_exponent"] = k_exponent
    if adjust_order is not None:
        section["adjust_order"] = adjust_order
    return config_from_configdict({"solver": section})

def _phase_summary(report):
    return ", ".join(["%s %i" % (p, sum(c)) for p, c in sorted(report.phases.items())])


@log_execution_time(logger)
def cmd_solve(instance_path, certify=False, debug_level=None, report_path=None, h5_path=None, trace_path=None, config_path=None, objective=None):
    """
    Solve an instance file, print the optimal set, its weight and the query totals

    Returns the exit code: 0 on success, 1 on input errors, 2 if the certificate does not pass and 4 if an internal invariant of the solver failed.
    """
    try:
        instance = read_instance(instance_path)
        config = _make_config(config_path, debug_level, objective, trace_path)
        m1, m2 = instance.get_matroids()
        solution, weight, cert, report = Solver(config).solve(m1, m2, instance.weights)
    except CertificateError as e:
        print("Certificate check failed: %s" % e, file=sys.stderr)
        return EXIT_CERTIFICATE
    except (InvariantViolation, ContractViolation) as e:
        print("Solver invariant violated on %s (please report this as a bug): %s" % (instance_path, e), file=sys.stderr)
        return EXIT_INTERNAL
    except (RankintError, IOError, ValueError) as e:
        print("Cannot solve %s: %s" % (instance_path, e), file=sys.stderr)
        return EXIT_INPUT
    print("solution: %s" % " ".join([str(x) for x in solution]))
    print("weight: %i" % weight)
    print("queries: %i (%s)" % (report.get_queries(), _phase_summary(report)))
    if certify:
        f1, f2 = instance.get_matroids()
        passed, reason = certify_optimality(cert, f1, f2, instance.weights)
        print("certificate: %s" % ("passed" if passed else "FAILED (%s)" % reason))
        if not passed:
            return EXIT_CERTIFICATE
    try:
        if report_path is not None:
            report.write_json(report_path)
        if h5_path is not None:
            with ReportWriter(h5_path) as W:
                W.write({"name": instance.get_name(), "weight": weight, "solution": [int(x) in solution for x in range(instance.get_size())],
                         "n": report.n, "r": report.r, "W": report.W, "wall_ms": report.wall_ms,
                         "augmentations": report.get_augmentations(), "budget_ratio": report.get_budget_ratio(),
                         "queries": report.phases})
    except IOError as e:
        print("Cannot write report: %s" % e, file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK

def cmd_gen(family, n, r, W, seed, out_path, signed=False):
    """
    Write a generated instance to ``out_path`` (exit code 1 for unsatisfiable parameters)
    """
    try:
        instance = generate(family, n, r=r, W=W, seed=seed, signed=signed)
        write_instance(instance, out_path)
    except (ValueError, IOError) as e:
        print("Cannot generate instance: %s" % e, file=sys.stderr)
        return EXIT_INPUT
    print("wrote %s to %s" % (instance.get_name(), out_path))
    return EXIT_OK

def _bench_cell(cell):
    family, n, r, W, seed, conf = cell
    row = dict([(c, "") for c in BENCH_COLUMNS])
    row.update({"name": "%s-n%i-r%i-W%i-s%i" % (family, n, r, W, seed), "n": n, "r": r, "W": W})
    try:
        instance = generate(family, n, r=r, W=W, seed=seed)
        m1, m2 = instance.get_matroids()
        solution, weight, cert, report = Solver(config_from_configdict(conf)).solve(m1, m2, instance.weights)
    except (RankintError, ValueError) as e:
        row["error"] = str(e).replace("\n", " ")
        return row
    row.update({"queries_init": report.get_queries("init"),
                "queries_adjust": report.get_queries("adjustment"),
                "queries_sssp": report.get_queries("sssp"),
                "queries_total": report.get_queries() - report.get_queries("verification"),
                "augmentations": report.get_augmentations(),
                "rounds": len(report.rounds),
                "wall_ms": round(report.wall_ms, 1),
                "budget_ratio": round(report.get_budget_ratio(), 6)})
    return row

def summarize_sweep(rows):
    """
    Aggregate bench rows per ground-set size and evaluate the query-budget criteria

    Per size the budget ratio and the non-init queries are averaged over all successful cells. ``growth_exponents`` holds :math:`\\log(Q_{i+1}/Q_i) / \\log(n_{i+1}/n_i)` for consecutive sizes, so a doubling of ``n`` with a query factor of :math:`2^{1.85}` gives 1.85.

    Returns a dictionary with the keys ``sizes``, ``budget_ratio``, ``queries_non_init``, ``augmentations``, ``queries_sssp``, ``failed_cells``, ``ratio_spread``, ``growth_exponents`` and ``within_limits``.
    """
    ok = [row for row in rows if not row["error"]]
    sizes = sorted(set([int(row["n"]) for row in ok]))
    ratios, queries = [], []
    for n in sizes:
        cell = [row for row in ok if int(row["n"]) == n]
        ratios.append(float(numpy.mean([float(row["budget_ratio"]) for row in cell])))
        queries.append(float(numpy.mean([int(row["queries_total"]) - int(row["queries_init"]) for row in cell])))
    spread = None
    if ratios and min(ratios) > 0:
        spread = max(ratios) / min(ratios)
    growth = []
    for i in range(1, len(sizes)):
        if queries[i - 1] > 0 and queries[i] > 0:
            growth.append(math.log(queries[i] / queries[i - 1]) / math.log(float(sizes[i]) / sizes[i - 1]))
    within = spread is not None and spread <= RATIO_SPREAD_LIMIT and all([g <= GROWTH_EXPONENT_LIMIT for g in growth])
    return {"sizes": sizes, "budget_ratio": ratios, "queries_non_init": queries,
            "augmentations": sum([int(row["augmentations"]) for row in ok]),
            "queries_sssp": sum([int(row["queries_sssp"]) for row in ok]),
            "failed_cells": len(rows) - len(ok),
            "ratio_spread": spread, "growth_exponents": growth, "within_limits": within}

@log_execution_time(logger)
def cmd_bench(cells, out_path, family="graphic-partition", jobs=1, h5_path=None, config=None, summary_path=None):
    """
    Solve one generated instance per sweep cell ``(n, r, W, seed)`` and write one CSV row per cell

    Failing cells are recorded in the ``error`` column and the sweep continues. The :func:`summarize_sweep` result is logged and, if ``summary_path`` is given, written as JSON.
    """
    conf = (config if config is not None else SolveConfig()).get_conf()
    work = [(family, n, r, W, seed, conf) for n, r, W, seed in cells]
    if jobs > 1 and len(work) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_bench_cell, work))
    else:
        rows = [_bench_cell(c) for c in work]
    for row in rows:
        if row["error"]:
            log_warning(logger, "Bench cell %s failed: %s" % (row["name"], row["error"]))
        else:
            log_info(logger, "%s: %s queries, budget ratio %s" % (row["name"], row["queries_total"], row["budget_ratio"]))
    summary = summarize_sweep(rows)
    log_info(logger, "Sweep over n=%s: budget ratio spread %s, growth exponents %s, %i augmentations" % (summary["sizes"], summary["ratio_spread"], ["%.2f" % g for g in summary["growth_exponents"]], summary["augmentations"]))
    try:
        with open(out_path, "w") as f:
            writer = csv.DictWriter(f, fieldnames=BENCH_COLUMNS, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        if h5_path is not None and rows:
            with ReportWriter(h5_path) as W:
                for row in rows:
                    W.write(dict([(c, row[c]) for c in BENCH_COLUMNS if row[c] != ""]))
        if summary_path is not None:
            with open(summary_path, "w") as f:
                json.dump(summary, f, indent=2, sort_keys=True)
    except IOError as e:
        print("Cannot write benchmark output: %s" % e, file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK

def cmd_verify(instance_path, debug_level=None, objective=None):
    """
    Compare the solver against exhaustive enumeration

    Returns 0 if both weights agree, 2 if they differ, 3 if the instance is too large for enumeration, 4 if an internal invariant of the solver failed and 1 on input errors.
    """
    try:
        instance = read_instance(instance_path)
        config = _make_config(debug_level=debug_level, objective=objective)
        m1, m2 = instance.get_matroids()
        best, best_weight = brute_force_best(m1, m2, instance.weights, objective=config.objective)
        solution, weight, cert, report = Solver(config).solve(m1, m2, instance.weights)
    except BruteForceRefused as e:
        print("%s" % e, file=sys.stderr)
        return EXIT_REFUSED
    except CertificateError as e:
        print("Certificate check failed: %s" % e, file=sys.stderr)
        return EXIT_CERTIFICATE
    except (InvariantViolation, ContractViolation) as e:
        print("Solver invariant violated on %s (please report this as a bug): %s" % (instance_path, e), file=sys.stderr)
        return EXIT_INTERNAL
    except (RankintError, IOError, ValueError) as e:
        print("Cannot verify %s: %s" % (instance_path, e), file=sys.stderr)
        return EXIT_INPUT
    print("solver weight: %i, brute force weight: %i" % (weight, best_weight))
    return EXIT_OK if weight == best_weight else EXIT_CERTIFICATE


def _sweep(ns, rs, Ws, seeds, r_fraction):
    cells = []
    for i, n in enumerate(ns):
        r = rs[i] if rs else max(1, int(n * r_fraction))
        for W in Ws:
            for seed in seeds:
                cells.append((n, r, W, seed))
    return cells

def main(argv=None):
    parser = argparse.ArgumentParser(description='rankint - exact weighted matroid intersection under rank oracles')
    parser.add_argument('-v', '--verbose', dest='verbose',  action='store_true', help='verbose mode', default=False)
    parser.add_argument('-d', '--debug', dest='debug',  action='store_true', help='debugging mode (even more output than in verbose mode)', default=False)
    sub = parser.add_subparsers(dest='command')

    p = sub.add_parser('solve', help='solve an instance file')
    p.add_argument('instance', help='instance JSON file')
    p.add_argument('--certify', action='store_true', default=False, help='re-check the optimality certificate with fresh oracles')
    p.add_argument('--debug-asserts', dest='debug_asserts', type=int, choices=[0, 1, 2], default=None, help='debug assertion level (default: DEBUG_ASSERT_LEVEL or 1)')
    p.add_argument('--report', default=None, help='write the run report as JSON')
    p.add_argument('--h5', default=None, help='write the run summary as HDF5')
    p.add_argument('--trace', default=None, help='write a newline-delimited JSON trace of the shortest-path iterations')
    p.add_argument('--config', default=None, help='INI file with a [solver] section')
    p.add_argument('--objective', choices=['independent', 'basis'], default=None)

    p = sub.add_parser('gen', help='generate an instance file')
    p.add_argument('family', choices=FAMILIES)
    p.add_argument('-n', type=int, required=True, help='number of elements')
    p.add_argument('-r', type=int, default=None, help='common rank (default (n+1)//2)')
    p.add_argument('-W', type=int, default=32, help='largest weight')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--signed', action='store_true', default=False, help='draw weights from [-W, W]')
    p.add_argument('-o', '--out', required=True, help='output JSON file')

    p = sub.add_parser('bench', help='query-count sweep over generated instances')
    p.add_argument('--family', choices=FAMILIES, default='graphic-partition')
    p.add_argument('-n', type=int, nargs='*', default=[], help='ground-set sizes')
    p.add_argument('-r', type=int, nargs='*', default=[], help='common ranks, one per size (default n/4)')
    p.add_argument('--r-fraction', dest='r_fraction', type=float, default=0.25)
    p.add_argument('-W', type=int, nargs='+', default=[2**10])
    p.add_argument('--seeds', type=int, nargs='+', default=[0])
    p.add_argument('--buffer-size', dest='buffer_size', type=int, default=None, help='buffer flush threshold (1 = eager relaxation)')
    p.add_argument('--k', dest='k', type=int, default=None, help='explicit adjustment bound k (small k leaves S1 != S2 after adjustment)')
    p.add_argument('--k-exponent', dest='k_exponent', default=None, help='exponent e of k = ceil(r**e) as an exact fraction (default 3/4)')
    p.add_argument('--adjust-order', dest='adjust_order', choices=['fifo', 'random'], default=None)
    p.add_argument('--debug-asserts', dest='debug_asserts', type=int, choices=[0, 1, 2], default=None)
    p.add_argument('--jobs', type=int, default=1, help='number of parallel processes')
    p.add_argument('--h5', default=None, help='also write the rows as HDF5')
    p.add_argument('-o', '--out', required=True, help='output CSV file')
    p.add_argument('--summary', default=None, help='write the sweep summary (budget ratio spread, query growth exponents) as JSON')

    p = sub.add_parser('verify', help='compare the solver against exhaustive enumeration (n <= 24)')
    p.add_argument('instance', help='instance JSON file')
    p.add_argument('--debug-asserts', dest='debug_asserts', type=int, choices=[0, 1, 2], default=None)
    p.add_argument('--objective', choices=['independent', 'basis'], default=None)

    args = parser.parse_args(argv)
    if args.verbose:
        logger.setLevel("INFO")
    if args.debug:
        logger.setLevel("DEBUG")
    if args.command is None:
        parser.print_help()
        return EXIT_INPUT

    if args.command == 'solve':
        return cmd_solve(args.instance, certify=args.certify, debug_level=args.debug_asserts, report_path=args.report,
                         h5_path=args.h5, trace_path=args.trace, config_path=args.config, objective=args.objective)
    elif args.command == 'gen':
        return cmd_gen(args.family, args.n, args.r, args.W, args.seed, args.out, signed=args.signed)
    elif args.command == 'bench':
        if args.r and len(args.r) != len(args.n):
            parser.error("Give either no ranks or one rank per size.")
        try:
            config = _make_config(debug_level=args.debug_asserts, buffer_size=args.buffer_size, k=args.k,
                                  k_exponent=args.k_exponent, adjust_order=args.adjust_order)
        except ValueError as e:
            print("Invalid configuration: %s" % e, file=sys.stderr)
            return EXIT_INPUT
        cells = _sweep(args.n, args.r, args.W, args.seeds, args.r_fraction)
        return cmd_bench(cells, args.out, family=args.family, jobs=args.jobs, h5_path=args.h5, config=config, summary_path=args.summary)
    elif args.command == 'verify':
        return cmd_verify(args.instance, debug_level=args.debug_asserts, objective=args.objective)

if __name__ == "__main__":
    sys.exit(main())
