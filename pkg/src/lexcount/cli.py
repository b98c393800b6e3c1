"""
Command-line front end.

Subcommands: count, list, table, qpoly, bijection, charpoly, verify.
Exit codes: 0 success, 1 usage error, 2 verification failure or
cross-route disagreement.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import formulas, paths, qstats, transfer, verify
from .engine import count_avoiders, count_extensions, avoiders
from .perms import descents, format_perm, parse_perm
from .polys import format_q, format_x, to_json_dict
from .posets import (FAMILIES, GridPoset, build, canonicalize,
                     parse_poset_spec)

ORACLE_GUARD = 25

_RC_2143 = frozenset({(2, 1, 4, 3)})


class CliError(Exception):
    pass


def _routes_for(poset: GridPoset, patterns: list[tuple[int, ...]],
                force: bool, only: Optional[str]) -> dict[str, int]:
    """All affordable counting routes, keyed by route name."""
    routes: dict[str, int] = {}
    want = lambda name: only is None or only == name

    if not poset.tag:
        prob = canonicalize(poset.family, poset.s, poset.t, patterns)
        if want("formula"):
            res = formulas.count_formula(prob)
            if res is not None:
                routes[res.provenance] = res.value
        if want("transfer") and prob.family == "EN":
            key = prob.patterns
            rc = frozenset(tuple(len(p) + 1 - x for x in reversed(p))
                           for p in key)
            if key == _RC_2143 or rc == _RC_2143:
                routes["transfer"] = transfer.count_2143(prob.s, prob.t)
    if want("ideal-dp") and not patterns:
        try:
            routes["ideal-dp"] = count_extensions(poset)
        except ValueError:
            pass
    if want("oracle"):
        if poset.n <= ORACLE_GUARD or force:
            routes["oracle"] = count_avoiders(poset, patterns)
        elif only == "oracle":
            raise CliError(
                f"oracle route refused for {poset.n} elements; pass --force")
    if only is not None and not routes:
        raise CliError(f"route {only!r} is not available for this problem")
    return routes


def _pick_route(routes: dict[str, int]) -> str:
    order = {"transfer": 1, "ideal-dp": 2, "oracle": 3}
    return min(routes, key=lambda r: (order.get(r, 0), r))


def cmd_count(args: argparse.Namespace) -> tuple[int, str]:
    poset = parse_poset_spec(args.poset)
    patterns = [parse_perm(p) for p in args.avoid]
    routes = _routes_for(poset, patterns, args.force, args.route)
    if not routes:
        raise CliError(
            f"no affordable route for {poset.n} elements; pass --force "
            "to run the oracle anyway")
    if len(set(routes.values())) > 1:
        detail = ", ".join(f"{r}={v}" for r, v in sorted(routes.items()))
        return 2, f"route disagreement: {detail}"
    route = _pick_route(routes)
    value = routes[route]
    if args.format == "json":
        return 0, json.dumps({"value": value, "route": route,
                              "poset": poset.spec_string(),
                              "patterns": [format_perm(p) for p in patterns]},
                             sort_keys=True)
    if args.format == "csv":
        return 0, f"value,route\n{value},{route}"
    return 0, f"{value}\nroute: {route}"


def cmd_list(args: argparse.Namespace) -> tuple[int, str]:
    poset = parse_poset_spec(args.poset)
    patterns = [parse_perm(p) for p in args.avoid]
    if poset.n > ORACLE_GUARD and not args.force:
        raise CliError(
            f"listing refused for {poset.n} elements; pass --force")
    exts = [format_perm(pi) for pi in avoiders(poset, patterns)]
    if args.format == "json":
        return 0, json.dumps({"poset": poset.spec_string(),
                              "patterns": [format_perm(p) for p in patterns],
                              "extensions": exts}, sort_keys=True)
    return 0, "\n".join(exts)


def _table_cell(family: str, s: int, t: int,
                patterns: list[tuple[int, ...]], force: bool) -> Optional[int]:
    poset = build(family, s, t)
    routes = _routes_for(poset, patterns, force, None)
    if not routes:
        return None
    if len(set(routes.values())) > 1:
        detail = ", ".join(f"{r}={v}" for r, v in sorted(routes.items()))
        raise CliError(f"route disagreement at ({s},{t}): {detail}")
    return routes[_pick_route(routes)]


def cmd_table(args: argparse.Namespace) -> tuple[int, str]:
    if args.family not in FAMILIES:
        raise CliError(f"unknown family {args.family!r}")
    patterns = [parse_perm(p) for p in args.avoid]
    grid = [[_table_cell(args.family, s, t, patterns, args.force)
             for t in range(1, args.max_t + 1)]
            for s in range(1, args.max_s + 1)]
    txt = [["-" if v is None else str(v) for v in row] for row in grid]
    if args.format == "json":
        return 0, json.dumps({"family": args.family,
                              "patterns": [format_perm(p) for p in patterns],
                              "rows": grid}, sort_keys=True)
    header = ["s/t"] + [str(t) for t in range(1, args.max_t + 1)]
    if args.format == "csv":
        lines = [",".join(header)]
        lines += [",".join([str(s + 1)] + row) for s, row in enumerate(txt)]
        return 0, "\n".join(lines)
    widths = [max(len(header[0]), len(str(args.max_s)))]
    widths += [max(len(header[c]), max(len(row[c - 1]) for row in txt))
               for c in range(1, args.max_t + 1)]
    out = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for s, row in enumerate(txt, start=1):
        cells = [str(s).rjust(widths[0])]
        cells += [v.rjust(w) for v, w in zip(row, widths[1:])]
        out.append("  ".join(cells))
    return 0, "\n".join(out)


def cmd_qpoly(args: argparse.Namespace) -> tuple[int, str]:
    poset = parse_poset_spec(args.poset)
    patterns = [parse_perm(p) for p in args.avoid]
    if poset.n > ORACLE_GUARD and not args.force:
        raise CliError(
            f"q-polynomial refused for {poset.n} elements; pass --force")
    gf = qstats.stat_gf(poset, patterns, args.stat)
    if args.format == "json":
        payload = to_json_dict(gf)
        payload.update({"poset": poset.spec_string(), "stat": args.stat,
                        "patterns": [format_perm(p) for p in patterns]})
        return 0, json.dumps(payload, sort_keys=True)
    if args.format == "csv":
        lines = ["power,coefficient"]
        lines += [f"{k},{c}" for k, c in enumerate(gf) if c]
        return 0, "\n".join(lines)
    return 0, format_q(gf)


def _path_descents(word: str) -> list[int]:
    """Positions (1-based) where an N step is immediately followed by E."""
    return [i + 1 for i in range(len(word) - 1)
            if word[i] == "N" and word[i + 1] == "E"]


def cmd_bijection(args: argparse.Namespace) -> tuple[int, str]:
    poset = parse_poset_spec(args.poset)
    s, t = poset.s, poset.t
    if (args.perm is None) == (args.word is None):
        raise CliError("exactly one of --perm and --word is required")
    payload: dict = {"kind": args.kind, "poset": poset.spec_string()}
    if args.perm is not None:
        pi = parse_perm(args.perm)
        if args.kind == "tableau":
            T = paths.ext_to_tableau(pi, s, t)
            payload["tableau"] = [list(r) for r in T]
        elif args.kind == "fcpath":
            w = paths.ext_to_fcpath(pi, s, t)
            payload["path"] = w
            payload["extension_descents"] = sorted(descents(pi))
            payload["path_descents"] = _path_descents(w)
        elif args.kind == "zipper":
            payload["word"] = paths.format_zipper(paths.ext_to_zipper(pi, s, t))
        else:
            raise CliError(f"unknown bijection kind {args.kind!r}")
        main_key = {"tableau": "tableau", "fcpath": "path", "zipper": "word"}
        plain = payload[main_key[args.kind]]
        if args.kind == "fcpath":
            plain = (f"{w}\nextension descents: "
                     f"{payload['extension_descents']}\n"
                     f"path descents: {payload['path_descents']}")
        elif args.kind == "tableau":
            plain = json.dumps(payload["tableau"])
    else:
        if args.kind == "tableau":
            rows = json.loads(args.word)
            pi = paths.tableau_to_ext(rows)
        elif args.kind == "fcpath":
            pi = paths.fcpath_to_ext(args.word, s, t)
        elif args.kind == "zipper":
            pi = paths.zipper_to_ext(paths.parse_zipper(args.word), s, t)
        else:
            raise CliError(f"unknown bijection kind {args.kind!r}")
        payload["extension"] = format_perm(pi)
        plain = payload["extension"]
    if args.format == "json":
        return 0, json.dumps(payload, sort_keys=True)
    return 0, str(plain)


def cmd_charpoly(args: argparse.Namespace) -> tuple[int, str]:
    cp = transfer.char_poly(args.t)
    if args.format == "json":
        payload = to_json_dict(cp)
        payload["t"] = args.t
        return 0, json.dumps(payload, sort_keys=True)
    return 0, format_x(cp)


def cmd_verify(args: argparse.Namespace) -> tuple[int, str]:
    if args.suite == "theorems":
        results = verify.theorem_checks(fast=args.fast)
    else:
        results = verify.conjecture_checks(fast=args.fast)
    lines = []
    for r in results:
        mark = "ok  " if r.ok else "FAIL"
        lines.append(f"[{mark}] {r.name}: {r.status}"
                     + (f" ({r.detail})" if r.detail else ""))
    if args.suite == "conjectures":
        for row in qstats.f_coeff_export(10):
            lines.append(f"[info] {row['coefficient']} of F "
                         f"(compare {row['reference']}): {row['values']}")
    code = 0 if all(r.ok for r in results) else 2
    if args.format == "json":
        return code, json.dumps(
            {"suite": args.suite,
             "checks": [{"name": r.name, "status": r.status,
                         "detail": r.detail} for r in results]},
            sort_keys=True)
    return code, "\n".join(lines)


def _cache_dir(args: argparse.Namespace) -> Optional[Path]:
    d = args.cache_dir or os.environ.get("LEXCOUNT_CACHE_DIR")
    return Path(d) if d else None


def _cache_key(argv: Sequence[str]) -> str:
    return hashlib.sha256("\0".join(argv).encode()).hexdigest()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexcount",
        description="Exact enumeration of pattern-avoiding linear "
                    "extensions of rectangular posets")
    parser.add_argument("--cache-dir", default=None,
                        help="directory for memoized results "
                             "(or set LEXCOUNT_CACHE_DIR)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, poset: bool = True) -> None:
        if poset:
            p.add_argument("--poset", required=True,
                           help="poset spec, e.g. EN:4x3 or EN:4x3+saw")
        p.add_argument("--format", choices=("plain", "json", "csv"),
                       default="plain")
        p.add_argument("--force", action="store_true",
                       help="lift the size guard on enumeration routes")

    p = sub.add_parser("count", help="count avoiding extensions")
    common(p)
    p.add_argument("--avoid", action="append", default=[],
                   help="pattern to avoid (repeatable)")
    p.add_argument("--route", choices=("formula", "transfer", "ideal-dp",
                                       "oracle"), default=None)
    p.set_defaults(func=cmd_count, cacheable=True)

    p = sub.add_parser("list", help="list avoiding extensions")
    common(p)
    p.add_argument("--avoid", action="append", default=[])
    p.set_defaults(func=cmd_list, cacheable=False)

    p = sub.add_parser("table", help="grid of counts over (s, t)")
    common(p, poset=False)
    p.add_argument("--family", required=True,
                   help=f"one of {', '.join(FAMILIES)}")
    p.add_argument("--avoid", action="append", default=[])
    p.add_argument("--max-s", type=int, required=True)
    p.add_argument("--max-t", type=int, required=True)
    p.set_defaults(func=cmd_table, cacheable=True)

    p = sub.add_parser("qpoly", help="statistic generating function")
    common(p)
    p.add_argument("--avoid", action="append", default=[])
    p.add_argument("--stat", choices=("inv", "maj"), default="inv")
    p.set_defaults(func=cmd_qpoly, cacheable=True)

    p = sub.add_parser("bijection", help="apply a bijection or its inverse")
    common(p)
    p.add_argument("--kind", choices=("tableau", "fcpath", "zipper"),
                   required=True)
    p.add_argument("--perm", default=None, help="extension to encode")
    p.add_argument("--word", default=None,
                   help="encoded object to decode (path string, zipper "
                        "tokens, or tableau JSON)")
    p.set_defaults(func=cmd_bijection, cacheable=False)

    p = sub.add_parser("charpoly", help="characteristic polynomial of the "
                                        "transfer matrix")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--format", choices=("plain", "json", "csv"),
                   default="plain")
    p.set_defaults(func=cmd_charpoly, cacheable=False)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("theorems", "conjectures"),
                   required=True)
    p.add_argument("--fast", action="store_true",
                   help="smaller size limits for a quicker pass")
    p.add_argument("--format", choices=("plain", "json", "csv"),
                   default="plain")
    p.set_defaults(func=cmd_verify, cacheable=False)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 1 if e.code not in (0, None) else 0

    cache = _cache_dir(args) if getattr(args, "cacheable", False) else None
    if cache is not None:
        entry = cache / f"{_cache_key(argv)}.json"
        if entry.exists():
            stored = json.loads(entry.read_text())
            print(stored["output"])
            return stored["code"]

    try:
        code, output = args.func(args)
    except (CliError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    print(output)
    if cache is not None and code == 0:
        cache.mkdir(parents=True, exist_ok=True)
        entry.write_text(json.dumps({"code": code, "output": output}))
    return code


if __name__ == "__main__":
    sys.exit(main())
