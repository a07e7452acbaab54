"""Command-line interface.

Subcommands:

  count            NC(n) for one n
  sequence         NC(1..n) as table, json, csv, or OEIS b-file
  list             the cube records with side <= n
  invariants       (alpha0, alpha, beta, gamma) and k-values of a given cube
  verify           census vs brute-force oracle vs the two published lists
  representations  solutions of a^2+b^2+c^2 = 3d^2 and the count formula

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 verification or validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .census import (
    CubeRegistry,
    _record_to_json,
    build_irreducible_list,
    build_multiples,
    count_cubes,
    load_registry,
    save_registry,
    sequence,
)
from .diophantine import pi_epsilon, solve_three_squares
from .lattice_geometry import Cube
from .oracle import brute_force_count
from .reference import COUNTS_LISTED, COUNTS_LOG
from .symmetry import invariants


@dataclass
class RunConfig:
    n: int
    command: str
    format: str = "table"
    cache_path: Optional[str] = None
    threads: int = 1
    multiples: bool = False
    oracle_max: Optional[int] = None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError("value must be >= 1")
    return value


def _get_registry(cfg: RunConfig) -> CubeRegistry:
    if cfg.cache_path:
        reg = load_registry(cfg.cache_path, cfg.n)
        if reg is not None:
            print(f"loaded registry cache (N={reg.n_built})", file=sys.stderr)
            return reg
    reg = build_irreducible_list(cfg.n, threads=cfg.threads)
    if cfg.cache_path:
        save_registry(reg, cfg.cache_path)
        print(f"saved registry cache to {cfg.cache_path}", file=sys.stderr)
    return reg


def cmd_count(cfg: RunConfig) -> int:
    reg = _get_registry(cfg)
    value = count_cubes(cfg.n, reg, build_multiples(cfg.n, reg))
    print(json.dumps(value) if cfg.format == "json" else value)
    return 0


def cmd_sequence(cfg: RunConfig) -> int:
    values = sequence(cfg.n, threads=cfg.threads, registry=_get_registry(cfg))
    if cfg.format == "json":
        print(json.dumps(values))
    elif cfg.format == "csv":
        print("n,nc")
        for i, v in enumerate(values, 1):
            print(f"{i},{v}")
    elif cfg.format == "bfile":
        out = "".join(f"{i} {v}\n" for i, v in enumerate(values, 1))
        sys.stdout.write(out)
    else:
        for i, v in enumerate(values, 1):
            print(f"{i:4d} {v}")
    return 0


def cmd_list(cfg: RunConfig) -> int:
    reg = _get_registry(cfg)
    records = [r for r in reg.records if r.side <= cfg.n]
    if cfg.multiples:
        records += [r for r in build_multiples(cfg.n, reg) if r.side <= cfg.n]
    records.sort(key=lambda r: (r.side, -r.bound_dim, r.cube.vertices))
    if cfg.format == "json":
        print(json.dumps([_record_to_json(r) for r in records], indent=1))
    else:
        for r in records:
            cube = ", ".join(str(v) for v in r.cube.as_lists())
            kvals = ",".join(str(k) for k in sorted(r.k_values))
            print(f"{r.side} | {r.bound_dim} | {cube} | {kvals} | {list(r.invariants)}")
    return 0


def cmd_invariants(cfg: RunConfig, cube_json: Optional[str]) -> int:
    text = cube_json if cube_json is not None else sys.stdin.read()
    try:
        pts = json.loads(text)
        cube = Cube.from_points(pts).translate_to_octant()
    except (json.JSONDecodeError, TypeError, IndexError, ValueError) as exc:
        print(f"not a lattice cube: {exc}", file=sys.stderr)
        return 1
    inv = invariants(cube)
    kvals = sorted(cube.four_k_values())
    if cfg.format == "json":
        print(
            json.dumps(
                {
                    "side": cube.side,
                    "bound_dim": cube.bounding_dim(),
                    "invariants": list(inv),
                    "k_values": kvals,
                }
            )
        )
    else:
        print(" ".join(str(x) for x in inv))
        print("k-values:", ",".join(str(k) for k in kvals))
        print("side:", cube.side, " bound:", cube.bounding_dim(), file=sys.stderr)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    reg = _get_registry(cfg)
    census_vals = sequence(cfg.n, threads=cfg.threads, registry=reg)
    oracle_cap = min(cfg.n, cfg.oracle_max) if cfg.oracle_max else cfg.n
    failures = 0
    print(f"{'n':>4} {'census':>12} {'oracle':>12} {'listed':>12} {'log':>12}")
    for n in range(1, cfg.n + 1):
        c = census_vals[n - 1]
        o = brute_force_count(n) if n <= oracle_cap else None
        listed = COUNTS_LISTED[n - 1] if n <= len(COUNTS_LISTED) else None
        logged = COUNTS_LOG[n - 1] if n <= len(COUNTS_LOG) else None
        mark = ""
        if o is not None and o != c:
            mark = "  << census/oracle MISMATCH"
            failures += 1
        else:
            flags = []
            if listed is not None and listed != c:
                flags.append("listed differs")
            if logged is not None and logged != c:
                flags.append("log differs")
            if flags:
                mark = "  * " + ", ".join(flags)
        row = [f"{n:>4}", f"{c:>12}"]
        row.append(f"{o if o is not None else '-':>12}")
        row.append(f"{listed if listed is not None else '-':>12}")
        row.append(f"{logged if logged is not None else '-':>12}")
        print(" ".join(row) + mark)
    if failures:
        print(f"{failures} census/oracle mismatches", file=sys.stderr)
        return 1
    print("census and oracle agree on all checked n", file=sys.stderr)
    return 0


def cmd_representations(cfg: RunConfig, d: int) -> int:
    if d % 2 == 0:
        print("d must be odd", file=sys.stderr)
        return 1
    sols = solve_three_squares(d)
    formula = pi_epsilon(d)
    if cfg.format == "json":
        print(
            json.dumps(
                {
                    "d": d,
                    "solutions": [[s.a, s.b, s.c] for s in sols],
                    "enumerated": len(sols),
                    "formula": formula,
                }
            )
        )
    else:
        for s in sols:
            print(f"{s.a} {s.b} {s.c}")
        print(f"enumerated: {len(sols)}")
        print(f"formula:    {formula}")
    if formula != len(sols):
        print("MISMATCH between formula and enumeration", file=sys.stderr)
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--n", type=_positive_int, default=1, help="grid size n")
    shared.add_argument(
        "--format",
        choices=("table", "json", "csv", "bfile"),
        default="table",
        help="output format (default: table)",
    )
    shared.add_argument("--cache", dest="cache_path", help="registry cache file")
    shared.add_argument("--threads", type=_positive_int, default=1)

    parser = argparse.ArgumentParser(
        prog="latticecubes",
        description="Count the lattice cubes with vertices in {0..n}^3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("count", parents=[shared], help="print NC(n)")
    sub.add_parser("sequence", parents=[shared], help="print NC(1..n)")
    p_list = sub.add_parser("list", parents=[shared], help="cube records with side <= n")
    p_list.add_argument(
        "--multiples", action="store_true", help="include dilated (reducible) cubes"
    )
    p_inv = sub.add_parser(
        "invariants", parents=[shared], help="invariants of a cube given as JSON"
    )
    p_inv.add_argument(
        "cube",
        nargs="?",
        help="cube as JSON [[x,y,z] * 8]; read from stdin when omitted",
    )
    p_ver = sub.add_parser(
        "verify", parents=[shared], help="census vs oracle vs published values"
    )
    p_ver.add_argument(
        "--oracle-max",
        type=_positive_int,
        help="run the brute-force oracle only up to this n",
    )
    p_rep = sub.add_parser(
        "representations",
        parents=[shared],
        help="solutions of a^2+b^2+c^2=3d^2 and their count",
    )
    p_rep.add_argument("d", type=_positive_int, help="odd d >= 1")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    cfg = RunConfig(
        n=args.n,
        command=args.command,
        format=args.format,
        cache_path=args.cache_path,
        threads=args.threads,
        multiples=getattr(args, "multiples", False),
        oracle_max=getattr(args, "oracle_max", None),
    )
    if cfg.command == "count":
        return cmd_count(cfg)
    if cfg.command == "sequence":
        return cmd_sequence(cfg)
    if cfg.command == "list":
        return cmd_list(cfg)
    if cfg.command == "invariants":
        return cmd_invariants(cfg, args.cube)
    if cfg.command == "verify":
        return cmd_verify(cfg)
    if cfg.command == "representations":
        return cmd_representations(cfg, args.d)
    raise AssertionError(f"unhandled command {cfg.command}")


if __name__ == "__main__":
    sys.exit(main())
