"""Command-line front end.

Exit codes: 0 success, 1 usage or configuration error, 2 graph parse error,
3 internal invariant violation.
"""

import argparse
import json
import random
import sys
import time

from . import families, kernels
from .errors import ContractError, GraphParseError, MaxSubError, OracleLimitError
from .framework import is_max
from .graph import InducedSubgraph, PropertyClass, VertexSet, format_graph, parse_graph
from .hered import gen_hered, gen_ordered
from .oracle import brute_force_all, brute_force_with_vertex
from .properties import CATALOG, get_property
from .stats import EngineStats
from .vcs import enumerate_incremental, gen_all_connected, gen_all_rooted, gen_with_vertex

ENGINES = ("auto", "hered", "vcs", "ordered", "incremental", "oracle")


class UsageError(MaxSubError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def load_graph(path):
    try:
        if path == "-":
            return parse_graph(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return parse_graph(fh)
    except OSError as exc:
        raise UsageError(f"cannot read graph: {exc}") from None


def _resolve_engine(P, engine):
    if engine == "auto":
        return "hered" if P.pclass is PropertyClass.HEREDITARY else "vcs"
    if engine == "hered" and P.pclass is not PropertyClass.HEREDITARY:
        raise UsageError(f"engine hered needs a hereditary property; {P.name} is {P.pclass.value}")
    if engine in ("vcs", "ordered") and P.pclass is PropertyClass.HEREDITARY:
        raise UsageError(f"engine {engine} needs a connected- or rooted-hereditary property")
    return engine


def run_engine(P, G, engine, vertex=None, limit=None, stats=None):
    """Yield solutions of ``G`` in the engine's deterministic order."""
    engine = _resolve_engine(P, engine)
    stats = stats if stats is not None else EngineStats()
    if vertex is not None and not 0 <= vertex < G.n:
        raise UsageError(f"vertex {vertex} is not in the graph")
    if engine == "incremental":
        if vertex is not None:
            raise UsageError("--vertex is not used by the incremental engine")
        yield from enumerate_incremental(P, G, k=limit, stats=stats)
        return
    if engine == "hered":
        if vertex is not None:
            raise UsageError("--vertex is not used by the hered engine")
        result = gen_hered(P, G, stats)
    elif engine == "vcs":
        if vertex is not None:
            result = gen_with_vertex(P, G, vertex, stats=stats)
        elif P.pclass is PropertyClass.ROOTED_HEREDITARY:
            result = gen_all_rooted(P, G, stats=stats)
        else:
            result = gen_all_connected(P, G, stats=stats)
    elif engine == "ordered":
        if vertex is None:
            vertex = G.root
        if vertex is None:
            raise UsageError("engine ordered needs --vertex (or a graph root)")
        result = gen_ordered(P, G, vertex, stats)
    else:
        stats.start()
        if vertex is None:
            result = brute_force_all(P, G)
        else:
            result = brute_force_with_vertex(P, G, vertex)
        stats.stop()
        stats.emissions = len(result)
    for i, vs in enumerate(result):
        if limit is not None and i >= limit:
            break
        yield vs


def _format(vs, as_json):
    ids = list(vs)
    return json.dumps(ids) if as_json else " ".join(map(str, ids))


def cmd_enumerate(args, out=sys.stdout, err=sys.stderr):
    P = get_property(args.property)
    G = load_graph(args.graph)
    stats = EngineStats()
    started = time.perf_counter()
    solutions = run_engine(P, G, args.engine, args.vertex, args.limit, stats)
    count = 0
    if args.canonical:
        for vs in sorted(solutions, key=VertexSet.sort_key):
            print(_format(vs, args.json), file=out)
            count += 1
    else:
        for vs in solutions:
            print(_format(vs, args.json), file=out, flush=True)
            count += 1
    if args.stats:
        block = {
            "solutions": count,
            "iterations": stats.outer_iterations,
            "restricted_calls": stats.restricted_calls,
            "max_delay": stats.max_emission_gap,
            "max_arrival_gap": stats.max_arrival_gap,
            "elapsed": round(time.perf_counter() - started, 6),
            "kernels": kernels.get_backend(),
        }
        for key, value in block.items():
            print(f"# {key}: {value}", file=err)
    return 0


def _parse_set(text, n):
    try:
        ids = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad vertex set {text!r}") from None
    for v in ids:
        if not 0 <= v < n:
            raise UsageError(f"vertex {v} is not in the graph")
    return VertexSet(ids)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def explain_failure(P, H):
    """Short reason why ``H`` is not in a catalog property."""
    G = H.parent
    k = G.kernels
    m = H.mask
    verts = list(_bits(m))
    if P.name in ("clique", "rooted-clique"):
        if P.name == "rooted-clique":
            if H.root is None:
                return "no root"
            reach = k.closure(G.out_adj, m, 1 << H.root)
            if reach != m:
                return f"vertex {min(_bits(m & ~reach))} unreachable from root {H.root}"
        for u in verts:
            missing = m & ~G.und_adj[u] & ~(1 << u)
            if missing:
                return f"vertices {u} and {min(_bits(missing))} not adjacent"
    if P.name == "independent-set":
        for u in verts:
            hit = G.und_adj[u] & m
            if hit:
                return f"edge between {u} and {min(_bits(hit))}"
    if P.name in ("connected-bipartite", "star") and m == 0:
        return "empty graph"
    if P.name in ("connected-bipartite", "star") and not k.is_connected(G.und_adj, m):
        return "not connected"
    if P.name in ("bipartite", "connected-bipartite"):
        return "odd cycle"
    if P.name == "star":
        return "no vertex is incident to every edge"
    return "property test failed"


def cmd_check(args, out=sys.stdout, err=sys.stderr):
    P = get_property(args.property)
    G = load_graph(args.graph)
    S = _parse_set(args.set, G.n)
    H = InducedSubgraph(G, S)
    ok = P.sat_fn(H)
    print(f"sat={str(ok).lower()}", file=out)
    if not ok:
        print(f"reason: {explain_failure(P, H)}", file=out)
        return 0
    maximal = is_max(P, H, G)
    print(f"max={str(maximal).lower()}", file=out)
    if not maximal:
        for v in range(G.n):
            if v not in S and P.sat_fn(InducedSubgraph(G, S | VertexSet([v]))):
                print(f"witness={v}", file=out)
                break
    return 0


def _parse_range(text):
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",")]


def _bench_params(items):
    params = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"bench parameter {item!r} is not key=value")
        key, value = item.split("=", 1)
        params[key] = value
    return params


def bench_instances(family, params):
    """Yield ``(label, graph)`` pairs for a benchmark family."""
    try:
        if family == "g2":
            for n in _parse_range(params.get("n", "1..8")):
                yield f"g2-{n}", families.make_G2(n)
        elif family == "triangles":
            for k in _parse_range(params.get("k", "1..5")):
                yield f"triangles-{k}", families.disjoint_triangles(k)
        elif family == "random":
            seed = int(params.get("seed", "0"))
            count = int(params.get("count", "10"))
            p = float(params.get("p", "0.3"))
            rng = random.Random(seed)
            for i, n in enumerate(_parse_range(params.get("n", "8")) * count):
                yield f"random-{seed}-{i}", families.random_digraph(n, p, rng)
        else:
            raise UsageError(f"unknown family {family!r}; choose g2, triangles or random")
    except ValueError as exc:
        raise UsageError(f"bad bench parameter: {exc}") from None


DEFAULT_BENCH_PROPERTY = {"g2": "bipartite", "triangles": "independent-set", "random": "connected-bipartite"}


def cmd_bench(args, out=sys.stdout, err=sys.stderr):
    params = _bench_params(args.params or [])
    P = get_property(args.property or DEFAULT_BENCH_PROPERTY.get(args.family, "clique"))
    columns = ["instance", "n", "K"]
    if not args.no_timing:
        columns += ["elapsed", "elapsed_per_K"]
    columns.append("max_delay")
    print("\t".join(columns), file=out)
    for label, G in bench_instances(args.family, params):
        stats = EngineStats()
        started = time.perf_counter()
        K = sum(1 for _ in run_engine(P, G, args.engine, stats=stats))
        elapsed = time.perf_counter() - started
        row = [label, str(G.n), str(K)]
        if not args.no_timing:
            row += [f"{elapsed:.6f}", f"{elapsed / K if K else 0.0:.8f}"]
        row.append(str(stats.max_emission_gap))
        print("\t".join(row), file=out, flush=True)
    return 0


def cmd_generate(args, out=sys.stdout, err=sys.stderr):
    if args.family == "g1":
        G = families.make_G1()
    elif args.family == "g2":
        G = families.make_G2(args.n)
    elif args.family == "triangles":
        G = families.disjoint_triangles(args.n)
    else:
        G = families.random_digraph(args.n, args.p, random.Random(args.seed))
    out.write(format_graph(G))
    return 0


def _add_run_flags(p):
    p.add_argument("--graph", required=True, help="graph file ('-' for stdin)")
    p.add_argument("--property", required=True, choices=sorted(CATALOG))


def build_parser():
    parser = _Parser(prog="maxsub", description="Enumerate maximal induced P-subgraphs.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    p = sub.add_parser("enumerate", help="list maximal P-subgraphs")
    _add_run_flags(p)
    p.add_argument("--engine", default="auto", choices=ENGINES)
    p.add_argument("--vertex", type=int, help="only solutions through this vertex")
    p.add_argument("--limit", type=int, help="stop after this many solutions")
    p.add_argument("--stats", action="store_true", help="print a stats block to stderr")
    p.add_argument("--json", action="store_true", help="one JSON array per line")
    p.add_argument("--canonical", action="store_true", help="sort the output lines")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="test one vertex set for membership and maximality")
    _add_run_flags(p)
    p.add_argument("--set", required=True, help="vertex ids, space or comma separated")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="run a benchmark family and print a TSV table")
    p.add_argument("--family", required=True, choices=("g2", "triangles", "random"))
    p.add_argument("--params", nargs="*", metavar="KEY=VALUE", help="e.g. n=1..8, k=1..5, seed=0 count=10 p=0.3")
    p.add_argument("--property", choices=sorted(CATALOG))
    p.add_argument("--engine", default="auto", choices=ENGINES)
    p.add_argument("--no-timing", action="store_true", help="omit the timing columns")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("generate", help="write a graph from a built-in family")
    p.add_argument("family", choices=("g1", "g2", "triangles", "random"))
    p.add_argument("--n", type=int, default=1, help="size parameter (pairs, triangles or vertices)")
    p.add_argument("--p", type=float, default=0.3, help="edge probability for random graphs")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None, out=None, err=None):
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out, err)
    except GraphParseError as exc:
        print(f"maxsub: parse error: {exc}", file=err)
        return 2
    except (UsageError, ContractError, OracleLimitError) as exc:
        print(f"maxsub: {exc}", file=err)
        return 1
    except AssertionError as exc:
        print(f"maxsub: internal invariant violated: {exc}", file=err)
        return 3


if __name__ == "__main__":
    sys.exit(main())
