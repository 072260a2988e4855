#!/usr/bin/env python3
"""
Command line entry point for every verification suite.

Runs the exhaustive, numerical and exact-rational checks and prints one line
per check, or a single JSON document with --json. Suites are reported in name
order and checks in name order within a suite, so the output only depends on
the command line.

Usage:
    python run_checks.py <suite> [options] [--json] [--output <file>]

Suites:
    boolean    Euler and trigonometric identities on A x A x A, the weak B-ring
               axioms of the twisted pair structure, and the exponential E on
               A x A.  --atoms n [n ...], --base-e mask, --import-table file
    braid      braid condition for the complement map and the parametrised
               family.  --atoms n [n ...], --enumerate, --import-map file
    matrix     (tr A + 1)(tr A^3 + 1) A^5 = A + ... + A^9 for det A = 1.
               --random N --seed S --tol T, or --input file
    curve      L/D <= pi <= L/d, dD > area, the quadratic x^2 - (L/2)x + area.
               --shape kind with --r/--a/--b/--width/--side/--sides/--radius,
               --polyline file, --samples N, --emit-plot-data file.csv
    incidence  random exact-rational triangle configurations.
               --trials T --seed S --counterexample-file file.json
    all        every suite at default scales; --jobs N runs them in parallel

Global options:
    --json           one JSON document instead of text
    --timings        include per-check durations in the JSON document
    --no-progress    no progress bars on standard error
    -v, --verbose    debug logging on standard error
    --output FILE    write the report to FILE instead of standard output

Exit status: 0 when every asserted check passed (known misprints are reported
as refuted-as-printed and do not count), 1 when a check failed, 2 on usage
errors and invalid input.

Example:
    python run_checks.py all --json > report.json
    python run_checks.py matrix --random 1000 --seed 42
"""

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

import boolalg
import braid
import bring_euler
import incidence
import jordan
import matrix_series
import triple_trig
import weak_bring
from reports import SuiteReport, render_json, render_text, timed

logger = logging.getLogger("run_checks")

DEFAULT_ATOMS = 2
ALL_ATOMS = (1, 2, 3)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def run_boolean(atoms=(DEFAULT_ATOMS,), base_e=None, table=None) -> SuiteReport:
    checks = []
    for n in atoms:
        alg = boolalg.BoolAlgebra(n)
        base = None if base_e is None else bring_euler.ExpBase(alg.element(base_e))
        if n <= boolalg.MAX_LAW_ATOMS:
            checks += timed(boolalg.check_laws, alg)
        checks += timed(triple_trig.suite, alg)
        checks += timed(weak_bring.suite, alg)
        checks += timed(bring_euler.suite, alg, base)
    if table is not None:
        checks += timed(weak_bring.candidate_suite, weak_bring.read_table(table))
    return SuiteReport("boolean", checks)


def run_braid(atoms=(DEFAULT_ATOMS,), enumerate_m2=False, map_file=None) -> SuiteReport:
    checks = []
    for n in atoms:
        checks += timed(braid.suite, boolalg.BoolAlgebra(n))
    if enumerate_m2:
        checks += timed(braid.check_enumeration)
    if map_file is not None:
        checks += timed(braid.check_map, braid.read_map(map_file))
    return SuiteReport("braid", checks)


def run_matrix(count=matrix_series.DEFAULT_RANDOM_MATRICES, seed=matrix_series.DEFAULT_SEED,
               tol=matrix_series.DEFAULT_REL_TOL, input_file=None, progress=True) -> SuiteReport:
    if input_file is not None:
        matrices = matrix_series.read_matrices(input_file)
        checks = timed(matrix_series.check_examples) + timed(matrix_series.check_inputs, matrices, tol)
        return SuiteReport("matrix", checks)
    checks = timed(matrix_series.suite, count, seed, tol, progress)
    return SuiteReport("matrix", checks, {"matrix": seed})


def run_curve(shapes=None, plot_file=None) -> SuiteReport:
    shapes = shapes or jordan.default_shapes()
    if plot_file is not None:
        jordan.emit_plot_data(shapes[0], plot_file)
    return SuiteReport("curve", timed(jordan.suite, shapes))


def run_incidence(trials=incidence.DEFAULT_TRIALS, seed=incidence.DEFAULT_SEED, certificate_file=None,
                  progress=True) -> SuiteReport:
    checks = timed(incidence.suite, trials, seed, progress)
    cert = incidence.failing_certificate(checks)
    if cert is not None and certificate_file is not None:
        with open(certificate_file, "w") as fh:
            json.dump(cert, fh, indent=2, sort_keys=True)
        logger.warning("conclusion failed; certificate written to %s", certificate_file)
    return SuiteReport("incidence", checks, {"incidence": seed})


def run_all(progress=True, jobs=1) -> list:
    tasks = [
        (run_boolean, (ALL_ATOMS,)),
        (run_braid, (ALL_ATOMS, True)),
        (run_matrix, (matrix_series.DEFAULT_RANDOM_MATRICES, matrix_series.DEFAULT_SEED,
                      matrix_series.DEFAULT_REL_TOL, None, progress)),
        (run_curve, ()),
        (run_incidence, (incidence.DEFAULT_TRIALS, incidence.DEFAULT_SEED, None, progress)),
    ]
    if jobs <= 1:
        return [fn(*args) for fn, args in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(fn, *args) for fn, args in tasks]
        return [f.result() for f in futures]


def shape_from_args(args) -> list:
    if args.shape is None:
        return jordan.default_shapes(args.samples)
    if args.shape == "polyline":
        if args.polyline is None:
            raise jordan.CurveError("--shape polyline needs --polyline FILE")
        return [jordan.read_polyline(args.polyline)]
    builders = {
        "circle": lambda: jordan.CurveSpec.circle(args.r, args.samples),
        "ellipse": lambda: jordan.CurveSpec.ellipse(args.a, args.b, args.samples),
        "reuleaux": lambda: jordan.CurveSpec.reuleaux(args.width, args.samples),
        "square": lambda: jordan.CurveSpec.square(args.side, args.samples),
        "regular_polygon": lambda: jordan.CurveSpec.regular_polygon(args.sides, args.radius, args.samples),
    }
    return [builders[args.shape]()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print a single JSON document.")
    common.add_argument("--timings", action="store_true", help="Include check durations in the JSON output.")
    common.add_argument("--no-progress", action="store_true", help="Disable progress bars.")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on standard error.")
    common.add_argument("--output", help="Write the report to this file instead of standard output.")

    parser = argparse.ArgumentParser(description="Verify algebraic, geometric and matrix identities.")
    sub = parser.add_subparsers(dest="suite", required=True)

    p = sub.add_parser("boolean", parents=[common], help="Boolean-algebra identities and weak B-rings.")
    p.add_argument("--atoms", type=int, nargs="+", default=[DEFAULT_ATOMS],
                   help=f"Atom counts of the Boolean algebra (default: {DEFAULT_ATOMS}).")
    p.add_argument("--base-e", type=int, default=None,
                   help="Exponential base as an atom mask (default: every nonzero base).")
    p.add_argument("--import-table", help="Check the weak B-ring axioms on an operation table file.")

    p = sub.add_parser("braid", parents=[common], help="Braid condition for set maps.")
    p.add_argument("--atoms", type=int, nargs="+", default=[DEFAULT_ATOMS],
                   help=f"Atom counts of the Boolean algebra (default: {DEFAULT_ATOMS}).")
    p.add_argument("--enumerate", action="store_true", help="Enumerate every solution on a 2-element set.")
    p.add_argument("--import-map", help="Check a map read from an 'i j -> p q' file.")

    p = sub.add_parser("matrix", parents=[common], help="Power-sum identity for det-1 2x2 matrices.")
    source = p.add_mutually_exclusive_group()
    source.add_argument("--input", help="File with one matrix per line, four entries row-major.")
    source.add_argument("--random", type=int, default=matrix_series.DEFAULT_RANDOM_MATRICES,
                        help=f"Number of random matrices (default: {matrix_series.DEFAULT_RANDOM_MATRICES}).")
    p.add_argument("--seed", type=int, default=matrix_series.DEFAULT_SEED,
                   help=f"Random seed (default: {matrix_series.DEFAULT_SEED}).")
    p.add_argument("--tol", type=float, default=matrix_series.DEFAULT_REL_TOL,
                   help=f"Relative tolerance of the float path (default: {matrix_series.DEFAULT_REL_TOL:g}).")

    p = sub.add_parser("curve", parents=[common], help="Metrics of closed plane curves.")
    p.add_argument("--shape", choices=jordan.KINDS, default=None,
                   help="Curve kind (default: circle, ellipse, reuleaux and square).")
    p.add_argument("--r", type=float, default=1.0, help="Circle radius (default: 1).")
    p.add_argument("--a", type=float, default=2.0, help="Ellipse semi-axis a (default: 2).")
    p.add_argument("--b", type=float, default=1.0, help="Ellipse semi-axis b (default: 1).")
    p.add_argument("--width", type=float, default=1.0, help="Reuleaux triangle width (default: 1).")
    p.add_argument("--side", type=float, default=2.0, help="Square side (default: 2).")
    p.add_argument("--sides", type=int, default=6, help="Regular polygon side count (default: 6).")
    p.add_argument("--radius", type=float, default=1.0, help="Regular polygon circumradius (default: 1).")
    p.add_argument("--polyline", help="CSV file with x and y columns.")
    p.add_argument("--samples", type=int, default=jordan.DEFAULT_SAMPLES,
                   help=f"Sample points per curve (default: {jordan.DEFAULT_SAMPLES}).")
    p.add_argument("--emit-plot-data", help="Write theta/chord and curve point CSV files.")

    p = sub.add_parser("incidence", parents=[common], help="Exact triangle incidence configurations.")
    p.add_argument("--trials", type=int, default=incidence.DEFAULT_TRIALS,
                   help=f"Number of random configurations (default: {incidence.DEFAULT_TRIALS}).")
    p.add_argument("--seed", type=int, default=incidence.DEFAULT_SEED,
                   help=f"First seed; trial i uses seed + i (default: {incidence.DEFAULT_SEED}).")
    p.add_argument("--counterexample-file", help="Where to write the certificate of a failing configuration.")

    p = sub.add_parser("all", parents=[common], help="Every suite at default scales.")
    p.add_argument("--jobs", type=int, default=1, help="Run suites in this many processes (default: 1).")
    return parser


def run(args) -> list:
    progress = not args.no_progress
    if args.suite == "boolean":
        return [run_boolean(tuple(args.atoms), args.base_e, args.import_table)]
    if args.suite == "braid":
        return [run_braid(tuple(args.atoms), args.enumerate, args.import_map)]
    if args.suite == "matrix":
        return [run_matrix(args.random, args.seed, args.tol, args.input, progress)]
    if args.suite == "curve":
        if args.emit_plot_data is not None and args.shape is None:
            raise jordan.CurveError("--emit-plot-data needs --shape")
        return [run_curve(shape_from_args(args), args.emit_plot_data)]
    if args.suite == "incidence":
        return [run_incidence(args.trials, args.seed, args.counterexample_file, progress)]
    return run_all(progress, args.jobs)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(asctime)s %(name)s %(levelname)s: %(message)s")
    try:
        suites = run(args)
    except (ValueError, OSError) as exc:
        print(f"{parser.prog} {args.suite}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render_json(suites, args.timings) if args.json else render_text(suites, args.timings)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if all(s.ok for s in suites) else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
