"""Command-line interface: catalog listing, per-group analysis, theorem
suites, and critical-group scans.  Reports are JSON on stdout.

Exit codes: 0 success, 2 load/usage error, 3 cap exceeded, 4 suite failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import catalog, catalog_group, load_group_file
from .criticality import boundary_scan
from .errors import (
    ClosureCapExceeded,
    FormalabError,
    IsoCapExceeded,
    SubgroupCountCapExceeded,
)
from .formations import parse_formation
from .suites import (
    CERTIFIED_BOUNDARY,
    SuiteReport,
    analyze_report,
    certified_boundary_pi,
    suite_baer,
    suite_boundary,
    suite_example_1_2,
    suite_groups,
    suite_pnilp_structure,
    suite_theorem_a,
    suite_theorem_b,
    suite_theorem_c,
    suite_theorem_d,
)

EXIT_OK = 0
EXIT_LOAD = 2
EXIT_CAP = 3
EXIT_SUITE = 4

_CAP_ERRORS = (ClosureCapExceeded, SubgroupCountCapExceeded, IsoCapExceeded)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def _parse_pi(text: str | None):
    if text is None or text == "all":
        return None
    return frozenset(int(v) for v in text.split(","))


def _load_group(ref: str):
    if ref.endswith(".json"):
        return load_group_file(ref)
    return catalog_group(ref)


def _cmd_catalog(args) -> int:
    if args.action == "list":
        _emit([{"name": e.name, **e.tags} for e in catalog()])
        return EXIT_OK
    raise ValueError(f"unknown catalog action {args.action!r}")


def _cmd_analyze(args) -> int:
    G = _load_group(args.group)
    F = parse_formation(args.formation)
    _emit(analyze_report(G, F, _parse_pi(args.pi)))
    return EXIT_OK


def _theorem_a_reports(args) -> list[SuiteReport]:
    from .formations import NA, NIL, p_dec, p_nilp
    configs = [(NIL, None), (p_dec(2), None), (p_dec(3), None),
               (p_nilp(2), frozenset({2})), (p_nilp(3), frozenset({3})),
               (NA, None)]
    return [suite_theorem_a(F, pi, args.max_order, args.soluble_only)
            for F, pi in configs]


def _cmd_verify(args) -> int:
    reports: list[SuiteReport] = []
    name = args.suite
    if name in ("baer", "all"):
        reports.append(suite_baer(args.max_order, args.soluble_only))
    if name in ("theorem_a", "all"):
        if name == "theorem_a" and args.formation:
            reports.append(suite_theorem_a(
                parse_formation(args.formation), _parse_pi(args.pi),
                args.max_order, args.soluble_only))
        else:
            reports.extend(_theorem_a_reports(args))
            reports.append(suite_pnilp_structure(2, args.max_order, args.soluble_only))
            reports.append(suite_pnilp_structure(3, args.max_order, args.soluble_only))
    if name in ("theorem_b", "all"):
        for r in (1, 2, 3):
            reports.append(suite_theorem_b(r, args.max_order))
    if name in ("theorem_c", "all"):
        reports.append(suite_theorem_c(args.max_order, args.soluble_only))
    if name in ("theorem_d", "all"):
        reports.append(suite_theorem_d(args.max_order, args.soluble_only))
    if name in ("example_1_2", "all"):
        reports.append(suite_example_1_2())
    if name in ("boundary", "all"):
        for F in CERTIFIED_BOUNDARY:
            reports.append(suite_boundary(F, certified_boundary_pi(F),
                                          args.max_order, args.soluble_only))
    if not reports:
        raise ValueError(f"unknown suite {args.suite!r}")
    _emit([r.to_json() for r in reports])
    certified_failed = any(not r.passed and r.label == "certified"
                           for r in reports)
    return EXIT_SUITE if certified_failed else EXIT_OK


def _cmd_hunt(args) -> int:
    F = parse_formation(args.formation)
    groups = suite_groups(args.max_order, args.soluble_only)
    witnesses = boundary_scan(F, {args.p}, groups)
    _emit([{"group": w.group, "formation": str(w.formation), "p": w.p,
            "in_f": w.in_f} for w in witnesses])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="formalab",
        description="hypercentre/intersection computations over a catalog "
                    "of small finite groups")
    sub = top.add_subparsers(dest="command", required=True)

    p_cat = sub.add_parser("catalog", help="catalog operations")
    p_cat.add_argument("action", choices=["list"])
    p_cat.set_defaults(fn=_cmd_catalog)

    p_an = sub.add_parser("analyze", help="analyze one group")
    p_an.add_argument("group", help="catalog name or group-spec .json file")
    p_an.add_argument("--formation", default="nil")
    p_an.add_argument("--pi", default="all", help="comma list of primes, or 'all'")
    p_an.set_defaults(fn=_cmd_analyze)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", help="baer | theorem_a | theorem_b | theorem_c"
                                     " | theorem_d | example_1_2 | boundary | all")
    p_ver.add_argument("--formation", default=None)
    p_ver.add_argument("--pi", default="all")
    p_ver.add_argument("--max-order", type=int, default=None)
    p_ver.add_argument("--soluble-only", action="store_true")
    p_ver.set_defaults(fn=_cmd_verify)

    p_hunt = sub.add_parser("hunt-critical", help="scan for critical groups")
    p_hunt.add_argument("--formation", required=True)
    p_hunt.add_argument("--p", type=int, required=True)
    p_hunt.add_argument("--max-order", type=int, default=None)
    p_hunt.add_argument("--soluble-only", action="store_true")
    p_hunt.set_defaults(fn=_cmd_hunt)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _CAP_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (FormalabError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LOAD


if __name__ == "__main__":
    sys.exit(main())
