"""Command-line front end.

Standard output carries only the result (json, csv or text); progress for
long runs goes to standard error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import burnside, golden
from .census import CensusError, default_cache_dir, format_cycle_type, get_census
from .lattice import REFERENCE_TYPES, enumerate_roots
from .perm import FULL, MODES, PROJECTIVE, PermError, build_action, schreier_sims

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GOLDEN = 2
EXIT_VERIFY = 3
EXIT_CACHE_MISS = 4

TAU_TO_N = {tau: n for n, tau in zip(range(3, 9), REFERENCE_TYPES)}
MAX_ORBIT_K = 3


class UsageError(ValueError):
    pass


def parse_k_range(text: str, upper: int) -> list[int]:
    """'8', '1-9', '1,5,60' or 'all'."""
    if text == "all":
        return list(range(upper + 1))
    ks: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            ks.extend(range(int(lo), int(hi) + 1))
        elif part:
            ks.append(int(part))
    if not ks or any(k < 0 or k > upper for k in ks):
        raise UsageError(f"k must lie in 0..{upper}, got {text!r}")
    return ks


def read_points(path: Path) -> list[tuple[int, int]]:
    pts = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        x, y = line.replace(",", " ").split()
        pts.append((int(x), int(y)))
    if len(pts) != 8:
        raise UsageError(f"{path}: expected 8 points, found {len(pts)}")
    return pts


def read_classes(path: Path):
    from .ff.curves import LineCurveClass

    out = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out[len(out) + 1] = LineCurveClass.parse(line)
    return out


# ------------------------------------------------------------- rendering --


def render(fmt: str, columns: list[str], rows: list[list], payload=None) -> str:
    """One table in the requested format; ``payload`` overrides the json body."""
    if fmt == "json":
        body = payload if payload is not None else [dict(zip(columns, r)) for r in rows]
        return json.dumps(body, indent=2, sort_keys=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        w.writerows(rows)
        return buf.getvalue()
    cells = [columns] + [[str(c) for c in r] for r in rows]
    widths = [max(len(str(r[i])) for r in cells) for i in range(len(columns))]
    return "".join(
        "  ".join(str(c).rjust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in cells
    )


def _emit(args, columns, rows, payload=None):
    sys.stdout.write(render(args.format, columns, rows, payload))


def _action(tau: str, mode: str):
    if tau not in TAU_TO_N:
        raise UsageError(f"unknown type {tau!r}; choose from {', '.join(TAU_TO_N)}")
    return build_action(enumerate_roots(TAU_TO_N[tau]), mode)


# ----------------------------------------------------------- subcommands --


def cmd_lattice(args) -> int:
    from .delpezzo import LatticeRow, lattice_row

    rows = [lattice_row(n).as_tuple() for n in range(3, 9)]
    _emit(args, list(LatticeRow.__dataclass_fields__), [list(r) for r in rows])
    expected = golden.lattice_rows()
    bad = [r for r, g in zip(rows, expected) if r != g]
    for r in bad:
        print(f"golden mismatch in row n={r[1]}: {r}", file=sys.stderr)
    return EXIT_GOLDEN if bad or len(rows) != len(expected) else EXIT_OK


def cmd_degrees(args) -> int:
    from .delpezzo import bertini_degree_map, format_pattern, degree_table

    rows = [[d, format_pattern(p), c] for d, p, c in degree_table()]
    _emit(args, ["degree", "multiplicities", "count"], rows)
    bad = rows != [list(r) for r in golden.load()["degrees"]]
    swaps = bertini_degree_map()
    bad = bad or any(v != {6 - d} for d, v in swaps.items())
    return EXIT_GOLDEN if bad else EXIT_OK


def _census_or_exit(args, action):
    census = get_census(
        action,
        cache_dir=args.cache,
        compute=args.compute,
        workers=args.workers,
        progress=True,
    )
    if census is None:
        print(
            f"no cached census for {action.tau}/{action.mode} in {args.cache or default_cache_dir()}; "
            "rerun with --compute to enumerate the group",
            file=sys.stderr,
        )
    return census


def cmd_nk(args) -> int:
    action = _action(args.tau, args.mode)
    census = _census_or_exit(args, action)
    if census is None:
        return EXIT_CACHE_MISS
    table = burnside.orbit_counts(census)
    ks = parse_k_range(args.k, table.n_points)
    if args.format == "json":
        payload = {str(k): str(table[k]) for k in ks}
        _emit(args, [], [], payload)
    else:
        _emit(args, ["k", "N(k)"], [[k, table[k]] for k in ks])

    status = EXIT_OK
    if args.tau == "E8":
        for k, v in golden.nk(args.mode).items():
            if table[k] != v:
                print(f"golden mismatch: N({k}) = {table[k]}, expected {v}", file=sys.stderr)
                status = EXIT_GOLDEN
        for k, bound in golden.nk_lower_bounds(args.mode).items():
            if not table[k] > bound:
                print(f"golden mismatch: N({k}) = {table[k]} is not above {bound:g}", file=sys.stderr)
                status = EXIT_GOLDEN
    return status


def cmd_census(args) -> int:
    action = _action(args.tau, args.mode)
    census = _census_or_exit(args, action)
    if census is None:
        return EXIT_CACHE_MISS
    rows = [[format_cycle_type(c), census.table[c]] for c in sorted(census.table)]
    _emit(args, ["cycle_type", "count"], rows)
    return EXIT_OK if sum(census.table.values()) == schreier_sims(action).order else EXIT_GOLDEN


def cmd_orbits(args) -> int:
    from . import delpezzo as dp
    from .perm import orbit_partition

    k = int(args.k)
    if k > MAX_ORBIT_K:
        raise UsageError(
            f"direct orbit partition is limited to k <= {MAX_ORBIT_K}; "
            "use the nk subcommand for orbit counts at larger k"
        )
    if args.tau != "E8":
        raise UsageError("orbit reports are defined for E8 only")
    action = _action("E8", args.mode)
    table = orbit_partition(action, k)
    if k == 1:
        records = [dp.OrbitRecord((), s, r) for s, r in zip(table.sizes, table.representatives)]
    elif args.mode == FULL:
        records = (dp.pair_orbit_report if k == 2 else dp.triple_orbit_report)(action, table)
    else:
        records = (dp.projective_pair_report if k == 2 else dp.projective_triple_report)(action, table)
    if args.format == "json":
        _emit(args, [], [], [r.as_dict() for r in records])
    else:
        rows = [
            [" ".join(map(str, r.invariant)), r.size, " ".join(map(str, r.representative))]
            for r in records
        ]
        _emit(args, ["invariant", "size", "representative"], rows)
    expected = golden.orbit_sizes(args.mode, k)
    if expected is not None and {r.invariant: r.size for r in records} != expected:
        print("golden mismatch in orbit sizes", file=sys.stderr)
        return EXIT_GOLDEN
    return EXIT_OK


def cmd_ff_verify(args) -> int:
    from .ff.curves import REFERENCE_POINTS, GeometryError, PointConfig
    from .ff.verify import verification_report

    pts = read_points(args.points) if args.points else list(REFERENCE_POINTS)
    try:
        cfg = PointConfig.affine(pts, args.p)
    except (GeometryError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    classes = read_classes(args.classes) if args.classes else None
    report = verification_report(cfg, seed=args.seed, all_classes=args.all_classes, classes=classes)
    if args.format == "json":
        _emit(args, [], [], report)
    else:
        rows = [[c["check"], "pass" if c["pass"] else "FAIL"] for c in report["checks"]]
        _emit(args, ["check", "result"], rows)
    return EXIT_OK if report["ok"] else EXIT_VERIFY


# ---------------------------------------------------------------- parser --


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="e8lines", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")

    group = argparse.ArgumentParser(add_help=False)
    group.add_argument("--tau", default="E8", help="root system type (default E8)")
    group.add_argument("--mode", choices=MODES, default=PROJECTIVE)
    group.add_argument("--cache", type=Path, default=None, help="census cache directory")
    group.add_argument("--workers", type=int, default=1)
    group.add_argument("--compute", action="store_true", help="enumerate the group on a cache miss")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("lattice", parents=[common], help="lattice data for n = 3..8").set_defaults(
        func=cmd_lattice
    )
    sub.add_parser("degrees", parents=[common], help="the 240 lines by degree").set_defaults(
        func=cmd_degrees
    )
    p = sub.add_parser("nk", parents=[common, group], help="orbit counts N(k) by Burnside")
    p.add_argument("--k", default="1-9", help="k, a range a-b, a list, or 'all'")
    p.set_defaults(func=cmd_nk)
    p = sub.add_parser("census", parents=[common, group], help="cycle-type census")
    p.set_defaults(func=cmd_census)
    p = sub.add_parser("orbits", parents=[common], help="orbit partition of k-subsets, k <= 3")
    p.add_argument("--tau", default="E8")
    p.add_argument("--mode", choices=MODES, default=PROJECTIVE)
    p.add_argument("--k", default="2")
    p.set_defaults(func=cmd_orbits)
    p = sub.add_parser("ff-verify", parents=[common], help="finite-field checks for 8 points")
    p.add_argument("--p", type=int, default=19)
    p.add_argument("--points", type=Path, help='file of "x y" lines (default: built-in F_19 points)')
    p.add_argument("--classes", type=Path, help='file of "[d; mu_1, ..., mu_8]" lines')
    p.add_argument("--all-classes", action="store_true", help="also interpolate every line class")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_ff_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "seed", 0) is None:
        from .ff.verify import DEFAULT_SEED

        args.seed = DEFAULT_SEED
    if getattr(args, "workers", 1) < 1:
        print("error: --workers must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, PermError, CensusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
