"""Command-line front end.

Exit status: 0 on success, 2 on usage errors, 3 on I/O or file-format
errors, 4 on numerical-domain errors.
"""
from __future__ import annotations

import argparse
import statistics
import sys
import time

import numpy as np

from .conversion import leg2cheb_apply
from .errors import DLTError, VectorFileError
from .ndct import ndct_apply
from .oracle import eval_chebyshev_direct, eval_legendre_direct, idlt_direct
from .quadrature import legendre_nodes_weights
from .transforms import dlt, idlt, transform_config
from .vectorfile import read_vector, write_vector

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NUMERIC = 4

BENCH_REPEATS = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _UsageError


class _UsageError(Exception):
    pass


def random_coefficients(rng: np.random.Generator, n: int, decay: float) -> np.ndarray:
    """Standard-normal entries scaled so that entry ``n`` is O(n^-decay)."""
    return rng.standard_normal(n) * np.arange(1.0, n + 1) ** -decay


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fastdlt", description="Fast discrete Legendre transforms.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    io_opts = _Parser(add_help=False)
    io_opts.add_argument("--in", dest="input", default="-", help="input vector file (default: stdin)")
    io_opts.add_argument("--out", dest="output", default="-", help="output vector file (default: stdout)")
    io_opts.add_argument("--format", choices=("csv", "bin"), default="csv",
                         help="output format; input format is detected automatically")

    num_opts = _Parser(add_help=False)
    num_opts.add_argument("--tol", type=float, default=2.2e-16, help="NDCT working tolerance")
    num_opts.add_argument("--grid", choices=("cheb1", "chebstar"), default="chebstar",
                          help="Taylor expansion grid")

    sub.add_parser("dlt", parents=[io_opts, num_opts], help="Legendre coefficients -> values at Legendre nodes")
    sub.add_parser("idlt", parents=[io_opts, num_opts], help="values at Legendre nodes -> Legendre coefficients")
    sub.add_parser("ndct", parents=[io_opts, num_opts], help="Chebyshev coefficients -> values at Legendre nodes")
    sub.add_parser("leg2cheb", parents=[io_opts, num_opts], help="Legendre -> Chebyshev coefficients")

    nodes = sub.add_parser("nodes", help="emit Gauss-Legendre theta, x, w as CSV")
    nodes.add_argument("--n", type=_positive_int, required=True)

    compare = sub.add_parser("compare", parents=[num_opts], help="max error of fast vs direct on random inputs")
    compare.add_argument("--n", type=_positive_int, required=True)
    compare.add_argument("--decay", type=float, default=0.0)
    compare.add_argument("--trials", type=_positive_int, default=1)
    compare.add_argument("--seed", type=int, default=0)
    compare.add_argument("--transform", choices=("dlt", "idlt", "ndct"), default="dlt")

    bench = sub.add_parser("bench", parents=[num_opts], help="time fast vs direct over a range of sizes")
    bench.add_argument("--min", dest="nmin", type=_positive_int, required=True)
    bench.add_argument("--max", dest="nmax", type=_positive_int, required=True)
    bench.add_argument("--points", type=_positive_int, default=10)
    bench.add_argument("--stage", choices=("dlt", "ndct"), default="dlt",
                       help="time the full DLT or only the NDCT stage")
    bench.add_argument("--seed", type=int, default=0)
    return parser


def _transform_file(args) -> None:
    values = read_vector(args.input)
    config = transform_config(values.size, args.tol, args.grid)
    if args.command == "dlt":
        out = dlt(values, config)
    elif args.command == "idlt":
        out = idlt(values, config)
    elif args.command == "ndct":
        out = ndct_apply(config.plan, values)
    else:
        out = leg2cheb_apply(values)
    write_vector(args.output, out, args.format)


def _emit(rows, header: str) -> None:
    out = sys.stdout
    out.write(header + "\n")
    for row in rows:
        out.write(",".join(repr(v) for v in row) + "\n")
    out.flush()


def _nodes(args) -> None:
    grid = legendre_nodes_weights(args.n)
    _emit(zip(grid.theta.tolist(), grid.x.tolist(), grid.weights.tolist()), "theta,x,w")


def _compare(args) -> None:
    rng = np.random.default_rng(args.seed)
    config = transform_config(args.n, args.tol, args.grid)
    x = config.grid.x
    rows = []
    for _ in range(args.trials):
        c = random_coefficients(rng, args.n, args.decay)
        if args.transform == "dlt":
            err = np.max(np.abs(dlt(c, config) - eval_legendre_direct(c, x)))
        elif args.transform == "ndct":
            err = np.max(np.abs(ndct_apply(config.plan, c) - eval_chebyshev_direct(c, x)))
        else:
            f = eval_legendre_direct(c, x)
            err = np.max(np.abs(idlt(f, config) - idlt_direct(f, config.grid)))
        rows.append((args.n, float(err)))
    _emit(rows, "N,error")


def _median_time(fn, repeats: int = BENCH_REPEATS) -> float:
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def _bench(args) -> None:
    if args.nmax < args.nmin:
        raise _UsageError
    sizes = np.unique(np.round(np.geomspace(args.nmin, args.nmax, args.points)).astype(int))
    rng = np.random.default_rng(args.seed)
    rows = []
    for n in sizes.tolist():
        config = transform_config(n, args.tol, args.grid)
        c = rng.standard_normal(n)
        x = config.grid.x
        if args.stage == "dlt":
            fast = _median_time(lambda: dlt(c, config))
            direct = _median_time(lambda: eval_legendre_direct(c, x))
        else:
            fast = _median_time(lambda: ndct_apply(config.plan, c))
            direct = _median_time(lambda: eval_chebyshev_direct(c, x))
        rows.append((n, fast, direct))
    _emit(rows, "N,seconds_fast,seconds_direct")


_COMMANDS = {
    "dlt": _transform_file,
    "idlt": _transform_file,
    "ndct": _transform_file,
    "leg2cheb": _transform_file,
    "nodes": _nodes,
    "compare": _compare,
    "bench": _bench,
}


def run(argv=None) -> int:
    """Run the CLI with ``argv`` and return the exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError:
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        _COMMANDS[args.command](args)
    except _UsageError:
        print("fastdlt: error: --max must not be smaller than --min", file=sys.stderr)
        return EXIT_USAGE
    except (VectorFileError, OSError) as exc:
        print(f"fastdlt: error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DLTError, ValueError, ArithmeticError) as exc:
        print(f"fastdlt: error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def main() -> None:
    sys.exit(run())
