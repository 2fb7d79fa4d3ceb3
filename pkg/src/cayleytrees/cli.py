"""Command-line front end.

Exit status: 0 on success, 1 on bad input (or a failed ``examples`` check),
2 when a size limit refuses the computation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import alg_a, bound, cayley, sorting
from .enumeration import enumerate_trees
from .errors import InvalidTreeError, LimitExceededError
from .experiments import reproduce_named_examples, strictness_table
from .perm import Permutation
from .tree import STRATEGIES, format_tree, read_tree

EXIT_OK, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_diam(args) -> int:
    t = read_tree(args.treefile)
    start = time.perf_counter()
    field = cayley.bfs_from_identity(t, max_n=args.max_n)
    secs = time.perf_counter() - start
    _emit(args, {
        "command": "diam", "n": t.n, "value": field.diameter,
        "histogram": {str(k): v for k, v in field.eccentricity_histogram.items()},
        "seconds": secs,
    }, str(field.diameter))
    return EXIT_OK


def cmd_ft(args) -> int:
    t = read_tree(args.treefile)
    start = time.perf_counter()
    rep = bound.f_of_tree(t, max_n=args.max_n, workers=args.workers)
    secs = time.perf_counter() - start
    _emit(args, {
        "command": "ft", "n": t.n, "value": rep.value, "witness": str(rep.witness),
        "permutations_scanned": rep.permutations_scanned, "seconds": secs,
    }, f"f(T) = {rep.value}; witness {rep.witness}; "
       f"scanned {rep.permutations_scanned} permutations in {secs:.3f}s")
    return EXIT_OK


def _run_dict(r: alg_a.AlgARun) -> dict:
    return {
        "pairs": [list(p) for p in r.pairs],
        "per_step_diameters": list(r.per_step_diameters),
        "leftover": sorted(r.leftover),
        "beta": r.beta,
    }


def cmd_alga(args) -> int:
    t = read_tree(args.treefile)
    start = time.perf_counter()
    r = alg_a.run(t, args.strategy)
    run_secs = time.perf_counter() - start
    payload = {"command": "alga", "n": t.n, "value": r.beta, "seconds": run_secs, **_run_dict(r)}
    pairs = ", ".join("{%d,%d}" % p for p in r.pairs)
    lines = [f"pairs {pairs or '(none)'}; beta = {r.beta} ({run_secs * 1e3:.3f} ms)"]
    if args.all:
        bs = alg_a.enumerate_beta_set(t, max_n=args.max_n)
        payload.update(
            beta_set=sorted(bs.values), beta_max=bs.beta_max, beta_min=bs.beta_min,
            runs={str(v): _run_dict(w) for v, w in sorted(bs.runs.items())},
        )
        values = ", ".join(map(str, sorted(bs.values)))
        lines.append(f"B = {{{values}}}; beta_max = {bs.beta_max}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_sort(args) -> int:
    t = read_tree(args.treefile)
    p = Permutation.parse(args.perm)
    if p.n != t.n:
        raise ValueError(f"permutation has n={p.n}, tree has n={t.n}")
    payload = {"command": "sort", "n": t.n, "method": args.method, "f_T": bound.f_T(t, p)}
    if args.method == "admissible":
        seq = sorting.sort_admissible(t, p)
    elif args.method == "pair":
        seq, r = sorting.sort_by_pair_homing(t, p)
        payload.update(pairs=[list(x) for x in r.pairs], beta=r.beta)
    else:
        seq = sorting.sort_sequential_leaf(t, p)
    ok = sorting.verify(seq)
    payload.update(edges=[list(e) for e in seq.edges], value=seq.length, verified=ok)
    edges = " ".join("(%d,%d)" % e for e in seq.edges)
    _emit(args, payload, f"{seq.length} edges: {edges or '(none)'}\nverified: {ok}")
    return EXIT_OK if ok else EXIT_INPUT


def cmd_strictness(args) -> int:
    rows = strictness_table(args.n_from, args.n_to, cache_path=args.cache, max_n=args.max_n)
    payload = {"command": "strictness", "rows": [
        {"n": r.n, "s_n": r.s_n, "delta_n": r.delta_n, "argmax_tree": r.argmax_tree,
         "seconds": r.seconds} for r in rows]}
    text = ["n\ts(n)\tdelta_n"] + [f"{r.n}\t{r.s_n}\t{r.delta_n}" for r in rows]
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def cmd_enum_trees(args) -> int:
    cat = enumerate_trees(args.n, max_n=args.max_n)
    payload = {"command": "enum-trees", "n": cat.n, "count": cat.count,
               "trees": [[list(e) for e in sorted(t.edges)] for t in cat]}
    _emit(args, payload, "\n".join(format_tree(t) for t in cat).rstrip("\n"))
    return EXIT_OK


def cmd_examples(args) -> int:
    rep = reproduce_named_examples()
    payload = {"command": "examples", "ok": rep.ok, "items": [
        {"name": i.name, "passed": i.passed, "detail": i.detail, "finding": i.finding}
        for i in rep.items]}
    _emit(args, payload, "\n".join(rep.lines()))
    return EXIT_OK if rep.ok else EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cayleytrees", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    p = sub.add_parser("diam", parents=[common], help="exact Cayley-graph diameter by BFS")
    p.add_argument("treefile")
    p.add_argument("--max-n", type=int, default=cayley.DEFAULT_MAX_N)
    p.set_defaults(func=cmd_diam)

    p = sub.add_parser("ft", parents=[common], help="Akers-Krishnamurthy bound f(T)")
    p.add_argument("treefile")
    p.add_argument("--max-n", type=int, default=bound.DEFAULT_MAX_N)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_ft)

    p = sub.add_parser("alga", parents=[common], help="diametral-pair removal estimate")
    p.add_argument("treefile")
    p.add_argument("--all", action="store_true", help="enumerate every achievable value")
    p.add_argument("--strategy", choices=STRATEGIES, default="double_sweep")
    p.add_argument("--max-n", type=int, default=alg_a.DEFAULT_ENUM_MAX_N)
    p.set_defaults(func=cmd_alga)

    p = sub.add_parser("sort", parents=[common], help="sort a permutation with tree edges")
    p.add_argument("treefile")
    p.add_argument("--perm", required=True, help="one-line image, e.g. 3,2,1")
    p.add_argument("--method", choices=["admissible", "pair", "sequential"], default="admissible")
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("strictness", parents=[common], help="max f(T) - diam over all n-vertex trees")
    p.add_argument("--from", dest="n_from", type=int, default=5)
    p.add_argument("--to", dest="n_to", type=int, default=9)
    p.add_argument("--cache", help="per-tree results file, reused across runs")
    p.add_argument("--max-n", type=int, default=9)
    p.set_defaults(func=cmd_strictness)

    p = sub.add_parser("enum-trees", parents=[common], help="non-isomorphic trees on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-n", type=int, default=10)
    p.set_defaults(func=cmd_enum_trees)

    p = sub.add_parser("examples", parents=[common], help="check the named-tree numbers")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except LimitExceededError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InvalidTreeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
