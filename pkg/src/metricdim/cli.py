"""Command-line front end: ``metricdim <subcommand> ...``.

Exit codes: 0 for a yes answer (or success), 1 for a no answer (or a failed
verification), 2 for usage and input errors.  Results go to stdout as JSON.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from . import __version__
from .bds import (
    DEFAULT_CAP,
    InstanceError,
    exact_min_dominating_set,
    load_instance,
    normalize,
    save_instance,
)
from .generate import random_bipartite
from .graph import GraphError, load_graph
from .mdim import exact_md_cover, exact_md_naive, greedy_resolving_set
from .rbds import InfeasibleError, exact_min_rbds, md_to_rbds
from .reduction import ReductionError, build_reduction, resolve_y, write_reduction
from .verify import SuiteConfig, run_suite, summary_table, verify_instance

YES, NO, ERROR = 0, 1, 2


def _emit(obj, pretty: bool = False) -> None:
    if pretty:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(json.dumps(obj, sort_keys=True))


def _sorted(members) -> list[int]:
    return sorted(int(v) for v in members)


def cmd_gen(args) -> int:
    if not 0.0 <= args.p <= 1.0:
        raise InstanceError("edge probability must lie in [0, 1]")
    inst = random_bipartite(random.Random(args.seed), args.n1, args.n2, args.p, args.h)
    if args.output:
        save_instance(inst, args.output)
    else:
        json.dump(inst.to_json(), sys.stdout, indent=1)
        sys.stdout.write("\n")
    return YES


def cmd_reduce(args) -> int:
    inst = load_instance(args.input)
    norm = normalize(inst)
    y = resolve_y(norm.n, _parse_y(args.y))
    R = build_reduction(norm, y)
    if args.graph_out or args.labels_out:
        if not (args.graph_out and args.labels_out):
            raise ReductionError("--graph-out and --labels-out go together")
        write_reduction(R, args.graph_out, args.labels_out)
    _emit({
        "n": R.n,
        "y": R.y,
        "k": R.k,
        "vertices": R.gprime.vertex_count,
        "edges": R.gprime.edge_count,
        "normalized": norm is not inst,
    }, args.pretty)
    return YES


def cmd_solve_md(args) -> int:
    g = load_graph(args.input)
    if args.mode == "naive":
        size, witness = exact_md_naive(g, g.vertex_count if args.max_k is None else args.max_k)
    elif args.mode == "cover":
        res = exact_md_cover(g, budget=args.max_k)
        size, witness = res if res is not None else (None, None)
    else:
        witness = greedy_resolving_set(g)
        size = len(witness)
    found = size is not None and (args.max_k is None or size <= args.max_k)
    out = {"mode": args.mode, "max_k": args.max_k, "answer": "yes" if found else "no",
           "size": size if found else None, "witness": _sorted(witness) if found else None}
    if args.mode == "greedy":
        out["exact"] = False
    _emit(out, args.pretty)
    return YES if found else NO


def cmd_solve_ds(args) -> int:
    inst = load_instance(args.input)
    size, witness = exact_min_dominating_set(inst, args.cap)
    h = inst.h if args.h is None else args.h
    yes = size <= h
    _emit({"h": h, "answer": "yes" if yes else "no", "size": size,
           "witness": [inst.name(v) for v in sorted(witness)]}, args.pretty)
    return YES if yes else NO


def cmd_rbds(args) -> int:
    g = load_graph(args.input)
    inst = md_to_rbds(g, g.vertex_count if args.k is None else args.k)
    if args.dump:
        with open(args.dump, "w") as f:
            inst.dump(f)
    size, witness = exact_min_rbds(inst)
    yes = size <= inst.budget
    _emit({"red": len(inst.red), "blue": len(inst.blue), "budget": inst.budget,
           "answer": "yes" if yes else "no", "size": size, "witness": _sorted(witness)}, args.pretty)
    return YES if yes else NO


def cmd_verify(args) -> int:
    y = _parse_y(args.y)
    sink = open(args.jsonl, "w") if args.jsonl else None
    try:
        if args.suite:
            config = SuiteConfig(seed=args.seed, random_count=args.random_count, y=y)
            if args.input:
                raise InstanceError("give either an instance file or --suite")
            reports = run_suite(config, progress=lambda r: _report_line(r, sink))
        else:
            if not args.input:
                raise InstanceError("verify needs an instance file or --suite")
            inst = load_instance(args.input)
            reports = [verify_instance(inst, y, args.input)]
            _report_line(reports[0], sink)
    finally:
        if sink:
            sink.close()
    print(summary_table(reports), file=sys.stderr if not args.jsonl else sys.stdout)
    return YES if all(r.ok for r in reports) else NO


def _report_line(report, sink) -> None:
    line = report.to_json()
    if sink is None:
        print(line)
    else:
        sink.write(line + "\n")


def _parse_y(text):
    if text in (None, "auto", "min"):
        return text
    try:
        return int(text)
    except ValueError:
        raise ReductionError(f"y must be 'auto', 'min' or an even integer, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="metricdim", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--pretty", action="store_true", help="indent JSON output")
    sub = p.add_subparsers(dest="subcommand", required=True)

    g = sub.add_parser("gen", help="seeded random bipartite instance")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n1", type=int, required=True)
    g.add_argument("--n2", type=int, required=True)
    g.add_argument("--p", type=float, default=0.5, help="edge probability")
    g.add_argument("--h", type=int, default=1, help="dominating set budget")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("reduce", help="normalize and build the degree-3 graph")
    r.add_argument("input")
    r.add_argument("--y", default="auto", help="'auto' (10n^2), 'min' (8n+10) or an even integer")
    r.add_argument("--graph-out")
    r.add_argument("--labels-out")
    r.set_defaults(func=cmd_reduce)

    m = sub.add_parser("solve-md", help="metric dimension of an edge-list graph")
    m.add_argument("input")
    m.add_argument("--mode", choices=("naive", "cover", "greedy"), default="cover")
    m.add_argument("--max-k", type=int)
    m.set_defaults(func=cmd_solve_md)

    d = sub.add_parser("solve-ds", help="minimum dominating set of a bipartite instance")
    d.add_argument("input")
    d.add_argument("--h", type=int, help="budget (default: the instance's)")
    d.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest instance accepted")
    d.set_defaults(func=cmd_solve_ds)

    b = sub.add_parser("rbds", help="solve metric dimension through red-blue dominating set")
    b.add_argument("input")
    b.add_argument("--k", type=int, help="budget (default: vertex count)")
    b.add_argument("--dump", help="write the RBDS instance as JSON")
    b.set_defaults(func=cmd_rbds)

    v = sub.add_parser("verify", help="run the reduction checks")
    v.add_argument("input", nargs="?")
    v.add_argument("--suite", action="store_true", help="exhaustive plus seeded random sweep")
    v.add_argument("--y", default="min")
    v.add_argument("--seed", type=int, default=SuiteConfig.seed)
    v.add_argument("--random-count", type=int, default=SuiteConfig.random_count)
    v.add_argument("--jsonl", help="write report lines here instead of stdout")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else YES
    try:
        return args.func(args)
    except (InstanceError, GraphError, ReductionError, InfeasibleError, OSError, json.JSONDecodeError) as exc:
        print(f"metricdim {args.subcommand}: error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
