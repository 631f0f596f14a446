"""Command-line frontend: ``hlcluster <subcommand> [options]``."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cluster import Root, almost_positive_roots, cluster_variable, exchange_graph, parse_root
from .errors import HLClusterError
from .gamma import closed_formula, gamma_set, p_map
from .height import HeightFunction, enumerate_height_functions, parse_xi
from .iota import image_of_root, root_of_element
from .laurent import format_factored
from .monoid import parse_element
from .quiver import build_hl_quiver, vertex_name
from .report import Report
from .rules import decide_tensor, is_compatible
from .verify import SUITES, run_suite

# suites run by `verify --suite all`, with the largest rank each is swept at by default
DEFAULT_SIZES = {
    "clusterind": 6, "closedform": 6, "gamma-bijections": 6, "lemma-edges": 6, "iota": 6,
    "treduc": 5, "clusterrep": 6, "compat": 5, "positivity": 6, "wtell": 4, "exchange-graph": 5,
}


class UsageError(Exception):
    pass


def _xi(args) -> HeightFunction:
    if args.xi is None:
        raise UsageError("--xi is required")
    xi = parse_xi(args.xi)
    if args.n is not None and args.n != xi.n:
        raise UsageError(f"--n {args.n} disagrees with --xi of length {xi.n}")
    return xi


def _root(args) -> Root:
    if (args.root is None) == (args.neg is None):
        raise UsageError("give exactly one of --root i,j and --neg i")
    root = parse_root(args.root) if args.root is not None else Root.neg(args.neg)
    return root


def _check_root(xi: HeightFunction, r: Root) -> Root:
    if not 1 <= r.i <= r.j <= xi.n:
        raise UsageError(f"root {r} out of range for n={xi.n}")
    return r


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _arrow_text(q) -> str:
    return "\n".join(
        f"{vertex_name(s)} -> {vertex_name(t)}" + (f" x{m}" if m != 1 else "") for s, t, m in q.arrows
    )


def cmd_quiver(args) -> int:
    q = build_hl_quiver(_xi(args))
    if args.format == "dot":
        print(q.to_dot())
    else:
        _emit(args, _arrow_text(q), q.to_json())
    return 0


def cmd_mutate(args) -> int:
    q = build_hl_quiver(_xi(args))
    for tok in args.at.split(","):
        tok = tok.strip()
        v = -int(tok[:-1]) if tok.endswith("'") else int(tok)
        q = q.mutate(v)
    if args.format == "dot":
        print(q.to_dot())
    else:
        _emit(args, _arrow_text(q), q.to_json())
    return 0


def cmd_cluster_var(args) -> int:
    xi = _xi(args)
    r = _check_root(xi, _root(args))
    p = cluster_variable(xi, r)
    _emit(args, format_factored(p), {"root": r.to_json(), "poly": p.to_json()})
    return 0


def cmd_exchange_graph(args) -> int:
    xi = _xi(args)
    g = exchange_graph(xi)
    if args.format == "dot" or args.dot:
        names = {cluster_variable(xi, r): str(r) for r in almost_positive_roots(xi.n)}
        print(g.to_dot(names))
        return 0
    text = f"{len(g.clusters)} clusters, {len(g.edges)} edges, {len(g.variables())} variables"
    data = {"clusters": len(g.clusters), "edges": [list(e) for e in g.edges], "variables": len(g.variables())}
    _emit(args, text, data)
    return 0


def _ij(xi, args) -> tuple[int, int]:
    if not 1 <= args.i <= args.j <= xi.n:
        raise UsageError(f"need 1 <= i <= j <= n, got i={args.i}, j={args.j}")
    return args.i, args.j


def cmd_gamma(args) -> int:
    xi = _xi(args)
    i, j = _ij(xi, args)
    vecs = gamma_set(xi, i, j)
    rows = [(v, p_map(xi, i, j, v)) if args.primed else (v,) for v in vecs]
    text = "\n".join("  ".join(str(t) for t in row) for row in rows)
    data = [{"eps": list(row[0]), **({"primed": list(row[1])} if args.primed else {})} for row in rows]
    _emit(args, text, data)
    return 0


def cmd_closed_form(args) -> int:
    xi = _xi(args)
    i, j = _ij(xi, args)
    p = closed_formula(xi, i, j)
    _emit(args, format_factored(p), {"i": i, "j": j, "poly": p.to_json()})
    return 0


def cmd_iota(args) -> int:
    xi = _xi(args)
    if args.inverse is not None:
        if args.root is not None or args.neg is not None:
            raise UsageError("--inverse excludes --root/--neg")
        r = root_of_element(xi, parse_element(xi.n, args.inverse))
        _emit(args, str(r), r.to_json())
        return 0
    r = _check_root(xi, _root(args))
    p = image_of_root(xi, r)
    _emit(args, f"{p}  ({p.describe(xi)})", {"root": r.to_json(), "element": p.to_json()})
    return 0


def cmd_tensor(args) -> int:
    xi = _xi(args)
    if args.p1 is None or args.p2 is None:
        raise UsageError("--p1 and --p2 are required")
    v = decide_tensor(xi, parse_element(xi.n, args.p1), parse_element(xi.n, args.p2))
    if v.irreducible:
        text = f"irreducible ({v.rule})"
    else:
        sums = " + ".join("[" + "][".join(p.describe(xi) for p in s) + "]" for s in v.summands)
        text = f"reducible ({v.rule}): {sums}"
    _emit(args, text, v.to_json(xi))
    return 0


def cmd_compat(args) -> int:
    xi = _xi(args)
    if args.r1 is None or args.r2 is None:
        raise UsageError("--r1 and --r2 are required")
    r1, r2 = (_check_root(xi, parse_root(t)) for t in (args.r1, args.r2))
    ok = is_compatible(xi, r1, r2)
    _emit(args, "compatible" if ok else "not compatible", {"compatible": ok})
    return 0


def cmd_verify(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    reports: list[Report] = []
    for name in names:
        max_n = args.max_n if args.max_n is not None else DEFAULT_SIZES[name]
        reports.append(run_suite(name, max_n))
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.summary())
            for f in r.failures[:10]:
                print(f"  {f}")
    return 0 if all(r.ok for r in reports) else 1


def cmd_enumerate_xi(args) -> int:
    if args.n is None or args.n < 1:
        raise UsageError("--n >= 1 is required")
    xis = enumerate_height_functions(args.n)
    _emit(args, "\n".join(map(str, xis)), [list(x.values) for x in xis])
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--xi", help="comma separated heights, e.g. 0,1,0")
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")

    parser = argparse.ArgumentParser(prog="hlcluster", description="Type A cluster variables and HL-module labels.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        p.set_defaults(func=fn)
        return p

    add("quiver", cmd_quiver, help="print the quiver Q_xi")
    add("mutate", cmd_mutate, help="mutate Q_xi along a vertex sequence").add_argument(
        "--at", required=True, help="vertices to mutate at, in order, e.g. 1,2,1")
    for name, fn in (("cluster-var", cmd_cluster_var), ("iota", cmd_iota)):
        p = add(name, fn)
        p.add_argument("--root", help="positive root i,j")
        p.add_argument("--neg", type=int, help="negative simple root index")
        if name == "iota":
            p.add_argument("--inverse", help="element such as 1:+,2:-")
    add("exchange-graph", cmd_exchange_graph).add_argument("--dot", action="store_true")
    for name, fn in (("gamma", cmd_gamma), ("closed-form", cmd_closed_form)):
        p = add(name, fn)
        p.add_argument("--i", type=int, required=True)
        p.add_argument("--j", type=int, required=True)
        if name == "gamma":
            p.add_argument("--primed", action="store_true", help="also print the exponent vectors")
    p = add("tensor", cmd_tensor)
    p.add_argument("--p1")
    p.add_argument("--p2")
    p = add("compat", cmd_compat)
    p.add_argument("--r1")
    p.add_argument("--r2")
    p = add("verify", cmd_verify)
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--max-n", type=int)
    add("enumerate-xi", cmd_enumerate_xi)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (UsageError, HLClusterError, ValueError, IndexError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
