"""Command line front end: print multiplicity and dimension tables.

Examples::

    tiltsl2 weyl --max-n 16
    tiltsl2 tilting --l 5 --max-n 16
    tiltsl2 bmw --l 5 --p 2 --max-n 10 --what simple --format csv
    tiltsl2 endo --gen "2:1" --l 5 --max-n 6 --format json
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from typing import Optional, Sequence

from .algebra_dims import (
    RegimeNotSupported,
    bmw_dims,
    endo_dims,
    tl_simple_dims,
)
from .grothendieck import WeylVector
from .tensor_power import ContractViolation, MultiplicityGrid, fusion_grid, tilting_grid, weyl_grid
from .tilting_tables import regime_from_flags, regime_from_json

FORMATS = ("pretty", "csv", "json")


def emit_grid(grid: MultiplicityGrid, fmt: str = "pretty", min_n: int = 0) -> str:
    """Serialize rows ``min_n..max_n`` of ``grid``; zero entries are left blank."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    rows = list(enumerate(grid.rows))[min_n:]
    cols = sorted({m for _, r in rows for m in r})
    if fmt == "json":
        payload = {
            "regime": grid.regime.describe(),
            "kind": grid.kind,
            "rows": [{"n": n, "entries": {str(m): str(v) for m, v in r.items()}} for n, r in rows],
        }
        return json.dumps(payload, indent=1) + "\n"
    table = [["n"] + [str(m) for m in cols]]
    for n, r in rows:
        table.append([str(n)] + [str(r[m]) if m in r else "" for m in cols])
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(table)
        return buf.getvalue()
    widths = [max(len(line[i]) for line in table) for i in range(len(table[0]))]
    out = []
    for k, line in enumerate(table):
        cells = [line[0].rjust(widths[0]), "|"] + [c.rjust(w) for c, w in zip(line[1:], widths[1:])]
        out.append(" ".join(cells).rstrip())
        if k == 0:
            out.append("-" * len(" ".join(cells)))
    return "\n".join(out) + "\n"


def parse_json_grid(text: str) -> MultiplicityGrid:
    obj = json.loads(text)
    rows = {r["n"]: WeylVector({int(m): int(v) for m, v in r["entries"].items()}) for r in obj["rows"]}
    top = max(rows, default=-1)
    return MultiplicityGrid(
        regime_from_json(obj["regime"]),
        obj["kind"],
        tuple(rows.get(n, WeylVector()) for n in range(top + 1)),
    )


def parse_csv_rows(text: str) -> dict[int, dict[int, int]]:
    reader = list(csv.reader(io.StringIO(text)))
    cols = [int(c) for c in reader[0][1:]]
    return {
        int(line[0]): {m: int(v) for m, v in zip(cols, line[1:]) if v}
        for line in reader[1:]
    }


def _parse_generator(text: str) -> WeylVector:
    pairs = []
    for item in text.split(","):
        m, _, c = item.strip().partition(":")
        pairs.append((int(m), int(c) if c else 1))
    gen = WeylVector(pairs)
    if not gen:
        raise ValueError("generator is zero")
    return gen


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tiltsl2", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--l", type=int, help="order of q^2 (root of unity case)")
    common.add_argument("--p", type=int, help="characteristic of the field (prime)")
    common.add_argument("--max-n", type=int, default=16, help="last row (default 16)")
    common.add_argument("--min-n", type=int, default=0, help="first row printed (default 0)")
    common.add_argument("--format", choices=FORMATS, default="pretty")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("weyl", parents=[common], help="Weyl multiplicities in tensor powers of V")
    sub.add_parser("tilting", parents=[common], help="tilting multiplicities in tensor powers of V")
    sub.add_parser("fusion", parents=[common], help="fusion multiplicities (barrier = l, or p)")
    sub.add_parser("jones", parents=[common], help="simple dimensions of the Jones quotients")
    for name, helptext in (
        ("tl", "Temperley-Lieb cell/simple dimensions"),
        ("endo", "End of tensor powers of a tilting module"),
        ("bmw", "End of tensor powers of D(2)"),
    ):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("--what", choices=("cell", "simple", "both"), default="both")
        if name == "endo":
            sp.add_argument("--gen", required=True, help='Weyl class of the generator, e.g. "2:1" or "1:1,3:1"')
    return parser


def _report_grids(reports, regime, what):
    grids = []
    if what in ("cell", "both"):
        grids.append(MultiplicityGrid(regime, "cell", tuple(WeylVector(r.cell_dims) for r in reports)))
    if what in ("simple", "both"):
        grids.append(MultiplicityGrid(regime, "simple", tuple(WeylVector(r.simple_dims) for r in reports)))
    return grids


def _compute(args, parser) -> list[MultiplicityGrid]:
    try:
        regime = regime_from_flags(args.l, args.p)
    except ValueError as exc:
        parser.error(str(exc))
    n_max = args.max_n
    cmd = args.command
    if cmd == "weyl":
        return [weyl_grid(n_max)]
    if cmd == "tilting":
        return [tilting_grid(regime, n_max)]
    if cmd in ("fusion", "jones"):
        barrier = args.l if args.l is not None else args.p
        if barrier is None:
            parser.error(f"{cmd} needs --l or --p")
        grid = fusion_grid(barrier, n_max)
        if cmd == "jones":
            grid = MultiplicityGrid(grid.regime, "jones", grid.rows)
        return [grid]
    if cmd == "tl":
        grid = tilting_grid(regime, n_max)
        reports = [tl_simple_dims(regime, n, grid) for n in range(n_max + 1)]
        return _report_grids(reports, regime, args.what)
    if cmd == "endo":
        try:
            gen = _parse_generator(args.gen)
        except ValueError as exc:
            parser.error(f"bad --gen: {exc}")
        reports = [endo_dims(regime, gen, n) for n in range(n_max + 1)]
        return _report_grids(reports, regime, args.what)
    if cmd == "bmw":
        grid = tilting_grid(regime, 2 * n_max)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            reports = [bmw_dims(regime, n, grid) for n in range(n_max + 1)]
        if caught:
            print(f"warning: {caught[0].message}", file=sys.stderr)
        return _report_grids(reports, regime, args.what)
    parser.error(f"unknown command {cmd}")


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.max_n < 0 or args.min_n < 0:
            parser.error("--max-n and --min-n must be nonnegative")
        grids = _compute(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except RegimeNotSupported as exc:
        print(f"tiltsl2: error: {exc}", file=sys.stderr)
        return 2
    except ContractViolation as exc:
        print(f"tiltsl2: contract violation: {exc}", file=sys.stderr)
        return 1

    if args.format == "json" and len(grids) > 1:
        text = "[\n" + ",\n".join(emit_grid(g, "json", args.min_n).rstrip("\n") for g in grids) + "\n]\n"
    elif len(grids) > 1:
        text = "\n".join(f"# {g.kind}\n" + emit_grid(g, args.format, args.min_n) for g in grids)
    else:
        text = emit_grid(grids[0], args.format, args.min_n)
    try:
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"tiltsl2: cannot write output: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
