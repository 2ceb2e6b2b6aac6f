"""Command-line entry point.

Subcommands: enumerate, mutate, coxeter, verify, serve.
Exit codes: 0 pass, 1 verification failure, 2 bad input, 3 seed bound
exceeded, 4 unsupported (infinite type where finite is required).
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import parse_quiver_record
from .coxeter import verify_denominator_theorem
from .errors import (
    BoundExceeded,
    CyclicOrientation,
    InfiniteTypeError,
    LaurentViolation,
    QuiverInputError,
)
from .finite_type import verify_any_cluster_denominators, verify_compatibility_axioms
from .mutation import (
    DEFAULT_MAX_SEEDS,
    ExchangeMatrix,
    enumerate_exchange_graph,
    mutate_seed,
    seed_from_quiver,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BOUND = 3
EXIT_UNSUPPORTED = 4


def _load_quiver(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            record = json.load(fh)
    except OSError as exc:
        raise QuiverInputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise QuiverInputError(f"{path} is not valid JSON: {exc}") from exc
    return parse_quiver_record(record)


def _parse_m_range(text: str) -> tuple:
    try:
        lo, hi = text.split(":")
        lo, hi = int(lo), int(hi)
    except ValueError as exc:
        raise QuiverInputError(f"bad --m-range {text!r}, expected lo:hi") from exc
    if not lo <= 0 <= hi:
        raise QuiverInputError("--m-range must contain 0")
    return lo, hi


def _parse_seq(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x != "")
    except ValueError as exc:
        raise QuiverInputError(f"bad --seq {text!r}, expected k1,k2,...") from exc


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def cmd_enumerate(args) -> int:
    cartan, orientation = _load_quiver(args.input)
    matrix = ExchangeMatrix.from_quiver(cartan, orientation)
    code = EXIT_OK
    try:
        result = enumerate_exchange_graph(matrix, max_seeds=args.max_seeds)
    except BoundExceeded as exc:
        result = exc.partial
        code = EXIT_BOUND
    if args.format == "json":
        _emit(result.to_json())
    else:
        line = f"{result.cluster_count} clusters, {result.variable_count} variables"
        if result.truncated:
            line += f" (truncated at --max-seeds {args.max_seeds})"
        print(line)
        if args.list_variables:
            for v in result.variables:
                print(f"  {v.display()}")
    return code


def cmd_mutate(args) -> int:
    cartan, orientation = _load_quiver(args.input)
    seed = seed_from_quiver(cartan, orientation)
    for z in _parse_seq(args.seq):
        if not 1 <= z <= seed.n:
            raise QuiverInputError(f"direction {z} out of range 1..{seed.n}")
        seed = mutate_seed(seed, z)
    if args.format == "json":
        _emit(
            {
                "vars": [v.to_json() for v in seed.vars],
                "matrix": [list(row) for row in seed.matrix.rows],
                "path": list(seed.path),
            }
        )
    else:
        print("cluster: (" + ", ".join(v.display() for v in seed.vars) + ")")
        print("matrix:")
        for row in seed.matrix.rows:
            print("  [" + ", ".join(f"{x:3d}" for x in row) + "]")
    return EXIT_OK


def cmd_coxeter(args) -> int:
    cartan, orientation = _load_quiver(args.input)
    lo, hi = _parse_m_range(args.m_range)
    report = verify_denominator_theorem(cartan, orientation, lo, hi)
    if args.format == "json":
        for row in report.rows:
            _emit(row.to_json())
        _emit(
            {
                "summary": True,
                "rows": len(report.rows),
                "distinct_variables": report.distinct_variables,
                "period": report.period,
                "failures": len(report.failures),
            }
        )
    else:
        for row in report.rows:
            status = "PASS" if row.ok else "FAIL"
            print(
                f"m={row.m:3d} k={row.k}  dim={list(row.dim)}  "
                f"{row.variable.display()}  {status}"
            )
        if report.period is not None:
            print(f"period: p={report.period}")
        else:
            print("no period within range")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_verify(args) -> int:
    cartan, orientation = _load_quiver(args.input)
    if args.theorem == "thm44":
        lo, hi = _parse_m_range(args.m_range)
        report = verify_denominator_theorem(cartan, orientation, lo, hi)
    elif args.theorem == "prop48":
        report = verify_any_cluster_denominators(
            cartan, orientation, max_seeds=args.max_seeds
        )
    else:
        report = verify_compatibility_axioms(cartan)
    payload = report.to_json()
    if args.format == "json":
        _emit(payload)
    else:
        status = "PASS" if report.ok else "FAIL"
        detail = ", ".join(
            f"{key}={value}"
            for key, value in payload.items()
            if key not in ("failures", "theorem")
        )
        print(f"{args.theorem}: {status} ({detail})")
        for failure in payload["failures"][:20]:
            print(f"  counterexample: {failure}")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clusterkit",
        description="Exact engine for acyclic valued cluster algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--input", required=True, help="quiver record (JSON file)")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_enum = sub.add_parser("enumerate", help="breadth-first exchange-graph closure")
    add_common(p_enum)
    p_enum.add_argument("--max-seeds", type=int, default=DEFAULT_MAX_SEEDS)
    p_enum.add_argument("--list-variables", action="store_true")
    p_enum.set_defaults(func=cmd_enumerate)

    p_mut = sub.add_parser("mutate", help="apply a mutation sequence to the seed")
    add_common(p_mut)
    p_mut.add_argument("--seq", required=True, help="directions, e.g. 1,2,1")
    p_mut.set_defaults(func=cmd_mutate)

    p_cox = sub.add_parser("coxeter", help="Coxeter orbit table with verification")
    add_common(p_cox)
    p_cox.add_argument("--m-range", default="-6:6", help="lo:hi, must contain 0")
    p_cox.set_defaults(func=cmd_coxeter)

    p_ver = sub.add_parser("verify", help="run a theorem verifier")
    p_ver.add_argument("theorem", choices=("thm44", "prop48", "axioms"))
    add_common(p_ver)
    p_ver.add_argument("--m-range", default="-6:6")
    p_ver.add_argument("--max-seeds", type=int, default=DEFAULT_MAX_SEEDS)
    p_ver.set_defaults(func=cmd_verify)

    p_srv = sub.add_parser("serve", help="run the explorer service")
    p_srv.add_argument("--port", type=int, default=7357)
    p_srv.add_argument("--host", default="127.0.0.1")
    p_srv.add_argument("--static", default=None, help="static UI directory")
    p_srv.set_defaults(func=cmd_serve)
    return parser


def _join_range_values(argv):
    """Let `--m-range -2:2` work: argparse would read the value as a flag."""
    out, skip = [], False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok == "--m-range" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"--m-range={argv[i + 1]}")
            skip = True
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_join_range_values(list(argv)))
    try:
        return args.func(args)
    except QuiverInputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CyclicOrientation as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InfiniteTypeError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except BoundExceeded as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except LaurentViolation as exc:
        print(f"engine error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
