"""Command-line interface.

Every command reads JSON (a file argument or stdin) and writes JSON to
stdout, so commands compose in pipelines::

    covergadget cover-ideal g.json | covergadget power --s 2 | covergadget reg

Exit status: 0 success, 1 a mathematical "no" (not vertex decomposable, no
linear quotients order, not componentwise linear, failing suite), 2 usage or
budget errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .betti import BettiBudgetError, betti_table, is_componentwise_linear, regularity
from .gadget import LayeredGraph, build_gadget
from .graph import Graph, GraphError
from .harness import SUITES, run_suite
from .ideal import (IdealError, MonomialIdeal, component, cover_ideal, edge_ideal,
                    linear_quotients_order, polarize, power, symbolic_power_cover)
from .vd import (Certificate, VDBudgetError, guided_vd_tree_gadget, guided_vd_unicyclic,
                 is_vertex_decomposable)

OK, REFUTED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str | None):
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON input: {exc}") from None


def _emit(obj) -> None:
    print(json.dumps(obj))


def _graph_input(data) -> tuple[Graph, LayeredGraph | None]:
    """Plain graph JSON, or gadget JSON (which carries its base graph and tuple)."""
    if "base" in data:
        lg = LayeredGraph.from_dict(data)
        return lg.graph, lg
    return Graph.from_dict(data), None


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


# -- commands --------------------------------------------------------------------------

def cmd_gadget(args) -> int:
    G = Graph.from_dict(_read(args.input))
    if (args.k is None) == (args.uniform is None):
        raise UsageError("give exactly one of --k and --uniform")
    k = _ints(args.k) if args.k is not None else [args.uniform] * len(G.edges)
    _emit(build_gadget(G, k).to_dict())
    return OK


def cmd_vd(args) -> int:
    G, lg = _graph_input(_read(args.input))
    if args.guided:
        if lg is None:
            raise UsageError("--guided needs gadget JSON (base graph plus k)")
        if args.guided == "tree":
            result = guided_vd_tree_gadget(lg.base, lg.ktuple)
        else:
            if len(set(lg.ktuple)) > 1:
                raise UsageError("--guided unicyclic needs a uniform tuple")
            result = guided_vd_unicyclic(lg.base, lg.ktuple[0] if lg.ktuple else 0)
    else:
        result = is_vertex_decomposable(G)
    if isinstance(result, Certificate):
        out = {"vertex_decomposable": True, "certificate": result.to_dict()}
    else:
        out = {"vertex_decomposable": False, "refutation": result.to_dict()}
    if args.certificate:
        with open(args.certificate, "w") as fh:
            json.dump(out, fh)
    _emit(out)
    return OK if out["vertex_decomposable"] else REFUTED


def cmd_cover_ideal(args) -> int:
    G, _ = _graph_input(_read(args.input))
    _emit(cover_ideal(G).to_dict())
    return OK


def cmd_edge_ideal(args) -> int:
    G, _ = _graph_input(_read(args.input))
    _emit(edge_ideal(G).to_dict())
    return OK


def _ideal(args) -> MonomialIdeal:
    return MonomialIdeal.from_dict(_read(args.input))


def cmd_power(args) -> int:
    _emit(power(_ideal(args), args.s).to_dict())
    return OK


def cmd_symbolic(args) -> int:
    G, _ = _graph_input(_read(args.input))
    _emit(symbolic_power_cover(G, args.s).to_dict())
    return OK


def cmd_polarize(args) -> int:
    _emit(polarize(_ideal(args)).to_dict())
    return OK


def cmd_component(args) -> int:
    _emit(component(_ideal(args), args.j).to_dict())
    return OK


def cmd_betti(args) -> int:
    table = betti_table(_ideal(args), args.method)
    print(table.text() if args.text else table.to_json())
    return OK


def cmd_reg(args) -> int:
    I = _ideal(args)
    if I.is_zero:
        raise UsageError("regularity of the zero ideal is undefined")
    print(regularity(I, args.method))
    return OK


def cmd_cwl(args) -> int:
    ok, report = is_componentwise_linear(_ideal(args))
    _emit({"componentwise_linear": ok, "degrees": {str(j): v for j, v in report.items()}})
    return OK if ok else REFUTED


def cmd_lq(args) -> int:
    I = _ideal(args)
    order = linear_quotients_order(I)
    if order is None:
        _emit({"linear_quotients": False, "order": None})
        return REFUTED
    monos = [{v: e for v, e in zip(I.vars, g) if e} for g in order]
    _emit({"linear_quotients": True, "order": monos})
    return OK


def cmd_verify(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    overrides = {"n_max": args.nmax, "k_max": args.kmax, "s_max": args.kmax, "seed": args.seed}
    reports = []
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
        rep = run_suite(name, **overrides)
        reports.append(rep)
        print(rep.summary(), file=sys.stderr)
    payload = [r.to_dict() for r in reports]
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(payload, fh, indent=1)
    _emit([{k: v for k, v in r.items() if k != "instances"} | {"failures": [
        i for i in r["instances"] if not i["passed"]]} for r in payload])
    return OK if all(r.passed for r in reports) else REFUTED


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="covergadget", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("input", nargs="?", default="-", help="JSON file (default: stdin)")
        sp.set_defaults(func=fn)
        return sp

    sp = add("gadget", cmd_gadget, "build the weighted gadget of a graph")
    sp.add_argument("--k", help="comma-separated edge weights in edge order")
    sp.add_argument("--uniform", type=int, help="same weight on every edge")

    sp = add("vd", cmd_vd, "vertex decomposability with certificate or refutation")
    sp.add_argument("--certificate", metavar="OUT", help="also write the result JSON here")
    sp.add_argument("--guided", choices=["tree", "unicyclic"], help="search-free construction for gadgets")

    add("cover-ideal", cmd_cover_ideal, "cover ideal of a graph")
    add("edge-ideal", cmd_edge_ideal, "edge ideal of a graph")
    sp = add("power", cmd_power, "ordinary power of an ideal")
    sp.add_argument("--s", type=int, required=True)
    sp = add("symbolic", cmd_symbolic, "symbolic power of the cover ideal of a graph")
    sp.add_argument("--s", type=int, required=True)
    add("polarize", cmd_polarize, "polarization of an ideal")
    sp = add("component", cmd_component, "ideal generated by the degree-j part")
    sp.add_argument("--j", type=int, required=True)
    for name, fn, help_ in [("betti", cmd_betti, "graded Betti numbers"),
                            ("reg", cmd_reg, "regularity")]:
        sp = add(name, fn, help_)
        sp.add_argument("--method", choices=["koszul", "hochster"], default="koszul")
        if name == "betti":
            sp.add_argument("--text", action="store_true", help="print a Betti table instead of JSON")
    add("cwl", cmd_cwl, "componentwise linearity with a per-degree report")
    add("lq", cmd_lq, "search for a linear quotients order")

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("suite", help=f"one of {', '.join(sorted(SUITES))}, or all")
    sp.add_argument("--nmax", type=int)
    sp.add_argument("--kmax", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--report", metavar="OUT", help="write full per-instance reports here")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, GraphError, IdealError, BettiBudgetError, VDBudgetError,
            KeyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
