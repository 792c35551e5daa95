"""Command-line interface.

Subcommands: ``count``, ``verify``, ``det-image``, ``conjecture``,
``table``.  Reports go to standard output (JSON by default, CSV with
``--emit csv``); diagnostics go to standard error.  Identical commands
with identical caps produce byte-identical output.

Exit codes: 0 success / verified; 1 usage or configuration errors;
2 a verification cell mismatched (a falsified theorem, i.e. a bug);
3 a conjecture scan found a counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import census
from .counting import CountQuery, DeterminantClass, circulant_count, diagonal_count
from .errors import ChainDetError
from .limits import DEFAULT_ENUMERATION_CAP, enumeration_cap
from .products import ProductRing, product_circulant_count, \
    product_diagonal_count, product_tally
from .reports import CellResult, VerificationReport
from .rings import ChainRing
from .ringspec import parse_ring_list, parse_ring_spec


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage problems must exit 1, not argparse's default 2
    def error(self, message):
        raise _UsageError(message)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--emit", choices=("json", "csv"), default="json",
                   help="report format (default json)")
    p.add_argument("--max-enum", type=int, default=None, metavar="N",
                   help=f"per-cell candidate cap (default {DEFAULT_ENUMERATION_CAP}; "
                        f"env CENSUS_MAX_ENUM also overrides)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chaindet",
                     description="Exact determinant counts over finite chain rings")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[], help="one class or element count")
    c.add_argument("--ring", required=True, help="ring spec, e.g. Z/8 or Z/4 x F2[u]/u^2")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--shape", choices=census.SHAPES, required=True)
    c.add_argument("--class", dest="det_class", required=True,
                   help="unit | zero | gamma^s | digit list like 0,1,1 "
                        "(per-factor lists joined by ';' for products)")
    c.add_argument("--method", choices=("formula", "oracle", "both"), default="both")
    _add_common(c)
    c.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", help="formula-vs-census grid")
    v.add_argument("--rings", required=True, help="comma-separated ring specs")
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--shape", choices=("diagonal", "circulant", "both"),
                   default="both")
    _add_common(v)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("det-image", help="attained determinant values")
    d.add_argument("--ring", required=True)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--shape", choices=census.SHAPES, default="circulant")
    d.add_argument("--cheap", action="store_true",
                   help="restrict to the two-parameter circulant family")
    _add_common(d)
    d.set_defaults(func=cmd_det_image)

    j = sub.add_parser("conjecture", help="scan open cases for counterexamples")
    j.add_argument("which", choices=census.CONJECTURES)
    j.add_argument("--ring", help="single ring spec")
    j.add_argument("--n", type=int, help="single dimension")
    j.add_argument("--rings", help="comma-separated ring specs")
    j.add_argument("--n-max", type=int)
    _add_common(j)
    j.set_defaults(func=cmd_conjecture)

    t = sub.add_parser("table", help="formula values over a grid (no census)")
    t.add_argument("--rings", required=True)
    t.add_argument("--n-max", type=int, required=True)
    t.add_argument("--shape", choices=("diagonal", "circulant", "both"),
                   default="both")
    _add_common(t)
    t.set_defaults(func=cmd_table)

    return parser


def _shapes_of(arg: str) -> tuple[str, ...]:
    return census.SHAPES if arg == "both" else (arg,)


def _chain_rings(text: str) -> list[ChainRing]:
    rings = parse_ring_list(text)
    for r in rings:
        if isinstance(r, ProductRing):
            raise _UsageError(
                f"{r.spec_string()}: product rings are supported by `count` only"
            )
    return rings


def _emit(args, report) -> None:
    sys.stdout.write(report.to_csv() if args.emit == "csv" else report.to_json())


# -- count ------------------------------------------------------------------


def _parse_chain_class(ring: ChainRing, text: str):
    text = text.strip()
    if text in ("unit", "zero") or text.startswith("gamma^"):
        return DeterminantClass.parse(text)
    digits = [int(t) for t in text.replace(";", ",").split(",")]
    return ring.element(digits)


def cmd_count(args) -> int:
    ring = parse_ring_spec(args.ring)
    if isinstance(ring, ProductRing):
        return _count_product(args, ring)
    target = _parse_chain_class(ring, args.det_class)
    if isinstance(target, DeterminantClass):
        # validates the class against e early, before any enumeration
        CountQuery(ring.q, ring.e, args.n, target)
    cell = census.count_cell(ring, args.n, args.shape, target,
                             method=args.method, cap=args.max_enum)
    report = VerificationReport(cells=[cell], cap=enumeration_cap(args.max_enum))
    _emit(args, report)
    return 2 if cell.match is False else 0


def _product_target(ring: ProductRing, text: str):
    text = text.strip()
    if text == "unit":
        return ring.one
    if text == "zero":
        return ring.zero
    parts = text.split(";")
    if len(parts) != ring.m:
        raise _UsageError(
            f"expected {ring.m} ';'-separated digit lists, got {len(parts)}"
        )
    return ring.element([[int(t) for t in part.split(",")] for part in parts])


def _count_product(args, ring: ProductRing) -> int:
    r = _product_target(ring, args.det_class)
    formula = oracle = match = None
    applicable = True
    reason = None
    if args.method in ("formula", "both"):
        if args.shape == "diagonal":
            formula = product_diagonal_count(ring, args.n, r)
        else:
            res = product_circulant_count(ring, args.n, r)
            formula, applicable, reason = res.value, res.applicable, res.reason
    if args.method in ("oracle", "both"):
        tally = product_tally(ring, args.n, args.shape, cap=args.max_enum)
        oracle = tally.get(r.key(), 0)
        if formula is not None:
            match = formula == oracle
    payload = {
        "kind": "product-count",
        "ring": ring.spec_string(),
        "n": str(args.n),
        "shape": args.shape,
        "element": [list(x.coords) for x in r.components],
        "formula": "" if formula is None else str(formula),
        "oracle": "" if oracle is None else str(oracle),
        "applicable": applicable,
        "reason": reason or "",
        "match": match,
    }
    if args.emit == "csv":
        row = [payload["ring"], payload["n"], payload["shape"],
               ";".join(",".join(map(str, c)) for c in payload["element"]),
               payload["formula"], payload["oracle"],
               "true" if applicable else "false",
               "" if match is None else ("true" if match else "false")]
        sys.stdout.write("ring,n,shape,element,formula,oracle,applicable,match\n")
        sys.stdout.write(",".join(f'"{v}"' if "," in str(v) else str(v)
                                  for v in row) + "\n")
    else:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return 2 if match is False else 0


# -- verify -----------------------------------------------------------------


def cmd_verify(args) -> int:
    rings = _chain_rings(args.rings)
    report = census.verify_counts(rings, args.n_max,
                                  shapes=_shapes_of(args.shape),
                                  cap=args.max_enum)
    _emit(args, report)
    if report.elapsed_seconds is not None:
        print(f"verified {len(report.cells)} cells in "
              f"{report.elapsed_seconds:.2f}s", file=sys.stderr)
    if not report.all_match:
        for cell in report.mismatches():
            print(f"MISMATCH: {cell}", file=sys.stderr)
        return 2
    return 0


# -- det-image --------------------------------------------------------------


def cmd_det_image(args) -> int:
    ring = parse_ring_spec(args.ring)
    if isinstance(ring, ProductRing):
        raise _UsageError("det-image supports chain rings only")
    image = census.determinant_image(ring, args.n, args.shape,
                                     cheap=args.cheap, cap=args.max_enum)
    attained = {x.index for x in image}
    missing = [x for x in ring.elements() if x.index not in attained]
    if args.emit == "csv":
        sys.stdout.write("ring,n,shape,element,attained\n")
        rows = [(x, 1) for x in image] + [(x, 0) for x in missing]
        for x, hit in sorted(rows, key=lambda pair: pair[0].index):
            sys.stdout.write(
                f"{ring.spec_string()},{args.n},{args.shape},"
                f"{' '.join(map(str, x.coords))},{hit}\n")
    else:
        payload = {
            "kind": "det-image",
            "ring": ring.spec_string(),
            "n": str(args.n),
            "shape": args.shape,
            "cheap": args.cheap,
            "image": [{"digits": list(x.coords), "value": str(x)} for x in image],
            "missing": [{"digits": list(x.coords), "value": str(x)}
                        for x in missing],
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return 0


# -- conjecture -------------------------------------------------------------


def cmd_conjecture(args) -> int:
    if args.ring is not None:
        if args.n is None:
            raise _UsageError("--ring needs --n")
        cells = [(parse_ring_spec(args.ring), args.n)]
    elif args.rings is not None:
        if args.n_max is None:
            raise _UsageError("--rings needs --n-max")
        cells = [(r, n) for r in _chain_rings(args.rings)
                 for n in range(1, args.n_max + 1)]
    else:
        raise _UsageError("give --ring/--n or --rings/--n-max")
    for ring, _ in cells:
        if isinstance(ring, ProductRing):
            raise _UsageError("conjecture scans support chain rings only")
    report = census.scan_conjecture(args.which, cells, cap=args.max_enum)
    _emit(args, report)
    if report.has_counterexample:
        for cell in report.counterexamples():
            print(f"COUNTEREXAMPLE: {cell.ring} n={cell.n}: {cell.detail}",
                  file=sys.stderr)
        return 3
    return 0


# -- table ------------------------------------------------------------------


def cmd_table(args) -> int:
    rings = _chain_rings(args.rings)
    cells = []
    for ring in rings:
        classes = ([DeterminantClass.unit()]
                   + [DeterminantClass.gamma_power(s) for s in range(1, ring.e)]
                   + [DeterminantClass.zero()])
        for n in range(1, args.n_max + 1):
            for shape in _shapes_of(args.shape):
                for cls in classes:
                    query = CountQuery(ring.q, ring.e, n, cls)
                    res = diagonal_count(query) if shape == "diagonal" \
                        else circulant_count(query)
                    cells.append(CellResult(
                        ring=ring.spec_string(), q=ring.q, e=ring.e, n=n,
                        shape=shape, det_class=str(cls), formula=res.value,
                        oracle=None, applicable=res.applicable, match=None,
                    ))
    report = VerificationReport(cells=cells, cap=enumeration_cap(args.max_enum))
    _emit(args, report)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ChainDetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else 1


if __name__ == "__main__":
    sys.exit(main())
