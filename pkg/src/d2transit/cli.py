"""Command-line interface.

Exit codes: 0 success, 1 negative answer (verification failed, class not
recognised, shift check failed), 2 input error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import kernel
from .classes import (
    BipartiteView,
    chain_ordering,
    chain_square_complement,
    d2_of_chain_components,
    d2_of_complement_bipartite,
    recognize_bipartite,
    recognize_split,
    recognize_star_convex,
)
from .errors import BudgetError, GraphError, PartitionError
from .generators import FAMILIES, generate
from .graph import complement, is_connected, max_degree, square
from .io import format_instance, read_instance
from .partition import D2, TRANSITIVE, OrderedPartition, first_violation
from .reductions import KINDS, build_gadget, check_shift_equivalence
from .report import emit_report
from .solver import DOWNWARD, UPWARD, SolverConfig, degree_bounds, exact_d2_transitivity, exact_transitivity, greedy_d2_lower_bound

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

_MODES = {"tr": TRANSITIVE, "d2": D2}


def _config(args) -> SolverConfig:
    return SolverConfig.from_env(
        vertex_budget=args.vertex_budget,
        node_budget=args.node_budget,
        search_order=getattr(args, "order", None),
        backend=getattr(args, "kernel", None),
    )


def _ms(t0):
    return round((time.perf_counter() - t0) * 1000.0, 3)


def _graph_info(G):
    return {"n": G.n, "m": G.m}


def _emit(args, report):
    sys.stdout.write(emit_report(report, args.format))


def cmd_solve(args):
    t0 = time.perf_counter()
    G = read_instance(args.instance).graph
    cfg = _config(args)
    mode = _MODES[args.mode]
    res = exact_d2_transitivity(G, cfg) if mode == D2 else exact_transitivity(G, cfg)
    bounds = list(degree_bounds(G)) if mode == D2 and is_connected(G) else None
    _emit(args, {
        "command": "solve",
        "mode": mode,
        "n": G.n,
        "m": G.m,
        "value": res.value,
        "bounds": bounds,
        "witness": res.witness.as_lists(),
        "stats": {
            "nodes": res.nodes_explored,
            "probes": [[k, ok] for k, ok in res.probes],
            "search_lower": res.lower,
            "search_upper": res.upper,
            "search_order": cfg.search_order,
            "kernel": cfg.backend or kernel.BACKEND,
        },
        "time_ms": _ms(t0),
    })
    return EXIT_OK


def cmd_bounds(args):
    t0 = time.perf_counter()
    G = read_instance(args.instance).graph
    lower = greedy_d2_lower_bound(G)
    connected = is_connected(G)
    _emit(args, {
        "command": "bounds",
        "n": G.n,
        "m": G.m,
        "connected": connected,
        "max_degree": max_degree(G),
        "bounds": list(degree_bounds(G)) if connected else None,
        "greedy_lower": lower.value,
        "witness": lower.witness.as_lists(),
        "time_ms": _ms(t0),
    })
    return EXIT_OK


def cmd_verify(args):
    t0 = time.perf_counter()
    G = read_instance(args.instance).graph
    with open(args.partition, encoding="utf-8") as fh:
        pi = OrderedPartition.from_text(fh.read(), G.n)
    mode = _MODES[args.mode]
    bad = first_violation(G, pi, mode)
    violation = None if bad is None else {"i": bad[0], "j": bad[1], "vertex": bad[2]}
    _emit(args, {
        "command": "verify",
        "mode": mode,
        "k": pi.k,
        "ok": bad is None,
        "violation": violation,
        "time_ms": _ms(t0),
    })
    return EXIT_OK if bad is None else EXIT_NEGATIVE


def cmd_transform(args):
    inst = read_instance(args.instance)
    H = square(inst.graph) if args.command == "square" else complement(inst.graph)
    sys.stdout.write(format_instance(H, labels=inst.labels, comments=[f"{args.command} of input"]))
    return EXIT_OK


def cmd_reduce(args):
    t0 = time.perf_counter()
    inst = read_instance(args.instance)
    source = inst.view if inst.view is not None else inst.graph
    gadget = build_gadget(args.gadget, source)
    if not args.check and args.format == "instance":
        comments = [f"{args.gadget} gadget, shift {gadget.shift}", "vertex roles:"]
        comments += ["  " + line for line in gadget.role_comments()]
        target = gadget.view if gadget.view is not None else gadget.graph
        sys.stdout.write(format_instance(target, comments=comments))
        return EXIT_OK
    G = inst.graph
    report = {
        "command": "reduce",
        "gadget": args.gadget,
        "source": _graph_info(G),
        "gadget_graph": _graph_info(gadget.graph),
        "shift": gadget.shift,
        "check": None,
        "time_ms": None,
    }
    code = EXIT_OK
    if args.check:
        rep = check_shift_equivalence(source, args.gadget, _config(args))
        report["check"] = {
            "source_measure": rep.source_measure,
            "source_value": rep.source_value,
            "gadget_value": rep.gadget_value,
            "expected": rep.source_value + rep.shift,
            "passed": rep.passed,
            "nodes": rep.nodes,
        }
        code = EXIT_OK if rep.passed else EXIT_NEGATIVE
    report["time_ms"] = _ms(t0)
    _emit(args, report)
    return code


def _view_of(inst):
    return inst.view if inst.view is not None else recognize_bipartite(inst.graph)


def cmd_recognize(args):
    t0 = time.perf_counter()
    inst = read_instance(args.instance)
    G = inst.graph
    cert = None
    if args.cls == "bipartite":
        view = recognize_bipartite(G)
        if view is not None:
            cert = {"X": sorted(view.X), "Y": sorted(view.Y)}
    elif args.cls == "split":
        dec = recognize_split(G)
        if dec is not None:
            cert = {"clique": sorted(dec.clique), "independent": sorted(dec.independent)}
    elif args.cls == "chain":
        view = _view_of(inst)
        order = chain_ordering(view) if view is not None else None
        if order is not None:
            cert = {"X": list(order.sigma_X), "Y": list(order.sigma_Y)}
    else:
        found = recognize_star_convex(G, inst.view)
        if found is not None:
            view, center = found
            cert = {"X": sorted(view.X), "Y": sorted(view.Y), "center": center}
    _emit(args, {
        "command": "recognize",
        "class": args.cls,
        "member": cert is not None,
        "certificate": cert,
        "time_ms": _ms(t0),
    })
    return EXIT_OK if cert is not None else EXIT_NEGATIVE


def cmd_class_solve(args):
    t0 = time.perf_counter()
    inst = read_instance(args.instance)
    report = {"command": "class-solve", "class": args.cls}
    if args.cls == "comp-bipartite":
        # the input is the bipartite graph B; --complement-input takes G itself
        B = inst.view
        if args.complement_input or B is None:
            base = complement(inst.graph) if args.complement_input else inst.graph
            B = recognize_bipartite(base)
            if B is None:
                raise GraphError("input is not the complement of a bipartite graph" if args.complement_input
                                 else "input is not bipartite")
        value, t, Xp, Yp = d2_of_complement_bipartite(B)
        report.update({"value": value, "t": t, "X_full": sorted(Xp), "Y_full": sorted(Yp)})
    else:
        B = _view_of(inst)
        if B is None or chain_ordering(B) is None:
            raise GraphError("input is not a bipartite chain graph")
        value = d2_of_chain_components(B, _config(args))
        h_edges = None
        if is_connected(B.graph):
            h_edges = [list(e) for e in chain_square_complement(B).graph.edge_list()]
        report.update({"value": value, "square_complement_edges": h_edges})
    report["time_ms"] = _ms(t0)
    _emit(args, report)
    return EXIT_OK


def cmd_generate(args):
    obj = generate(args.family, *args.params, seed=args.seed)
    desc = " ".join([args.family, *args.params, f"seed={args.seed}"])
    sys.stdout.write(format_instance(obj, comments=[f"generated: {desc}"]))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="d2transit", description="Transitive and d2-transitive vertex partitions.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt_choices=("json", "text"), solver=False):
        sp.add_argument("instance", nargs="?", default="-", help="instance file (default: stdin)")
        sp.add_argument("--format", choices=fmt_choices, default=fmt_choices[0])
        if solver:
            sp.add_argument("--vertex-budget", type=int, default=None)
            sp.add_argument("--node-budget", type=int, default=None)
            sp.add_argument("--kernel", choices=("python", "cython"), default=None)

    sp = sub.add_parser("solve", help="exact Tr or Tr_d2 with a witness")
    common(sp, solver=True)
    sp.add_argument("--mode", choices=sorted(_MODES), default="d2")
    sp.add_argument("--order", choices=(UPWARD, DOWNWARD), default=None)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("bounds", help="degree bounds and greedy lower bound for Tr_d2")
    common(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("verify", help="check a partition file")
    common(sp)
    sp.add_argument("--partition", required=True)
    sp.add_argument("--mode", choices=sorted(_MODES), default="d2")
    sp.set_defaults(func=cmd_verify)

    for name in ("square", "complement"):
        sp = sub.add_parser(name, help=f"emit the {name} graph")
        sp.add_argument("instance", nargs="?", default="-")
        sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("reduce", help="build a reduction gadget")
    common(sp, fmt_choices=("instance", "json", "text"), solver=True)
    sp.add_argument("--gadget", choices=KINDS, required=True)
    sp.add_argument("--check", action="store_true", help="solve both sides and test the shift")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("recognize", help="test class membership")
    common(sp)
    sp.add_argument("--class", dest="cls", choices=("bipartite", "split", "chain", "starconvex"), required=True)
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("class-solve", help="polynomial routes for special classes")
    common(sp, solver=True)
    sp.add_argument("--class", dest="cls", choices=("comp-bipartite", "chain"), required=True)
    sp.add_argument("--complement-input", action="store_true",
                    help="comp-bipartite: the input is G itself rather than its bipartite complement")
    sp.set_defaults(func=cmd_class_solve)

    sp = sub.add_parser("generate", help="emit a generated instance")
    sp.add_argument("family", choices=FAMILIES)
    sp.add_argument("params", nargs="*")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_generate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, PartitionError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
