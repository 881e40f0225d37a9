"""Command-line interface.

Subcommands: spectrum, product, wreath2, gk, coclique, db, verify.  Output
is deterministic text (or JSON for verify --json); no timestamps unless
explicitly requested.  Exit codes: 0 success, 1 verification failure,
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import atlasdb, verify
from ._core import backend_name
from .orderset import OrderSet, product_spectrum, wreath2_spectrum
from .primegraph import build_gk


class InputError(Exception):
    pass


def _parse_orderset(text: str) -> OrderSet:
    try:
        return OrderSet.parse(text)
    except (ValueError, OverflowError) as exc:
        raise InputError(str(exc)) from None


def _load_db(path):
    try:
        if path is None:
            return atlasdb.load_embedded()
        return atlasdb.load_path(path)
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot load database: {exc}") from None


def _spectrum_for(args) -> OrderSet:
    if getattr(args, "group", None):
        for record in _load_db(getattr(args, "db", None)):
            if record.name == args.group:
                if record.mu is None:
                    raise InputError(f"record {args.group} stores no spectrum generators")
                return record.mu
        raise InputError(f"no record named {args.group}")
    if getattr(args, "gens", None):
        return _parse_orderset(args.gens)
    raise InputError("provide --gens or --group")


def _print_summary(s: OrderSet):
    pi = s.pi()
    print(f"maximal: {s.serialize()}")
    print(f"members: {s.member_count()}")
    print(f"pi: {','.join(map(str, pi)) if pi else '-'}")
    print(f"sigma: {s.sigma()}")


def _cmd_spectrum(args) -> int:
    _print_summary(_parse_orderset(args.generators))
    return 0


def _cmd_product(args) -> int:
    a = _parse_orderset(args.left)
    b = _parse_orderset(args.right)
    _print_summary(product_spectrum(a, b))
    return 0


def _cmd_wreath2(args) -> int:
    _print_summary(wreath2_spectrum(_parse_orderset(args.generators)))
    return 0


def _cmd_gk(args) -> int:
    g = build_gk(_spectrum_for(args))
    if args.dot:
        sys.stdout.write(g.dot())
        return 0
    print(f"vertices: {','.join(map(str, g.vertices))}")
    edges = " ".join(f"{p}-{q}" for p, q in sorted(g.edges))
    print(f"edges: {edges if edges else '-'}")
    return 0


def _cmd_coclique(args) -> int:
    g = build_gk(_spectrum_for(args))
    cocliques = g.max_cocliques()
    print(f"independence number: {len(cocliques[0]) if cocliques else 0}")
    for c in cocliques:
        print(f"coclique: {','.join(map(str, c))}")
    return 0


def _cmd_db_query(args) -> int:
    db = _load_db(args.db)
    query = atlasdb.LEMMA_QUERIES[args.lemma]
    result = atlasdb.run_filter(db, query)
    for name, hits in result.matches:
        print(f"{name} {','.join(map(str, hits))}")
    for name in result.insufficient:
        print(f"insufficient data: {name}")
    return 0


def _cmd_db_list(args) -> int:
    for record in sorted(_load_db(args.db), key=lambda r: r.name):
        mu = record.mu.serialize() if record.mu is not None else "-"
        print(f"{record.name} pi={','.join(map(str, record.pi))} mu={mu}")
    return 0


def _cmd_db_check(args) -> int:
    try:
        for record in sorted(_load_db(args.db), key=lambda r: r.name):
            report = atlasdb.crosscheck_record(record)
            print(f"{report.name}: {report.status} ({report.detail})")
    except atlasdb.CrosscheckError as exc:
        print(f"crosscheck failed: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_verify(args) -> int:
    report = verify.run_checks(only=args.only, db_path=args.db)
    if not report.results:
        print(f"no checks match {args.only!r}", file=sys.stderr)
        return 2
    if args.json:
        payload = {
            "overall": "pass" if report.ok else "fail",
            "backend": backend_name(),
            "checks": report.to_json_obj(),
        }
        if args.timestamp:
            import datetime

            payload["generated_at"] = datetime.datetime.now(
                datetime.timezone.utc
            ).isoformat()
        print(json.dumps(payload, indent=2))
    else:
        id_width = max(len(r.check_id) for r in report.results)
        cite_width = max(len(r.citation) for r in report.results)
        for r in report.results:
            print(
                f"{r.status.upper():4}  {r.check_id:<{id_width}}  "
                f"{r.citation:<{cite_width}}  {r.detail}"
            )
        passed = sum(1 for r in report.results if r.status == "pass")
        print(f"overall: {'PASS' if report.ok else 'FAIL'} ({passed}/{len(report.results)} checks)")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gkspec",
        description="Exact element-order spectra, prime graphs and verification checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="summarize the divisor closure of generators")
    p.add_argument("generators", help="comma-separated positive integers")
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("product", help="spectrum of a direct product (lcm closure)")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(fn=_cmd_product)

    p = sub.add_parser("wreath2", help="spectrum of the wreath product by a swap")
    p.add_argument("generators")
    p.set_defaults(fn=_cmd_wreath2)

    for name, fn, extra_help in (
        ("gk", _cmd_gk, "prime graph of a spectrum"),
        ("coclique", _cmd_coclique, "maximum cocliques of a prime graph"),
    ):
        p = sub.add_parser(name, help=extra_help)
        p.add_argument("--gens", help="comma-separated spectrum generators")
        p.add_argument("--group", help="named record from the database (needs stored mu)")
        p.add_argument("--db", help="database file overriding the embedded records")
        if name == "gk":
            p.add_argument("--dot", action="store_true", help="emit DOT graph text")
        p.set_defaults(fn=fn)

    p = sub.add_parser("db", help="query the group-record database")
    dbsub = p.add_subparsers(dest="db_command", required=True)
    q = dbsub.add_parser("query", help="run an embedded selection filter")
    q.add_argument("--lemma", choices=sorted(atlasdb.LEMMA_QUERIES), required=True)
    q.add_argument("--db", help="database file overriding the embedded records")
    q.set_defaults(fn=_cmd_db_query)
    lst = dbsub.add_parser("list", help="list records")
    lst.add_argument("--db")
    lst.set_defaults(fn=_cmd_db_list)
    chk = dbsub.add_parser("check", help="crosscheck records against oracles")
    chk.add_argument("--db")
    chk.set_defaults(fn=_cmd_db_check)

    p = sub.add_parser("verify", help="run the full verification report")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--only", help="run only checks whose id contains this text")
    p.add_argument("--db", help="database file overriding the embedded records")
    p.add_argument(
        "--timestamp", action="store_true", help="include a timestamp in the JSON report"
    )
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
