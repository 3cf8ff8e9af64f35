"""Command-line interface.

Commands: gen, model, braidgroup, compare, reduced.  Reports are emitted
as JSON on stdout (byte-stable for fixed input and flags); diagnostics go
to stderr.  Exit codes: 0 success, 2 parse error, 3 invalid configuration,
4 internal consistency failure.
"""

import argparse
import json
import sys

from . import graphs as gr
from . import pi1
from .abrams import abrams_complex, check_abrams_conditions, cubical_chain_complex
from .abrams import quotient as abrams_quotient
from .errors import InputError, InternalError
from .homology import chain_complex, connected_components, homology
from .model import model_complex
from .nerve import EmptyComplex, SemiSimplicialSet, dimension, quotient_by_free_action
from .reduced import build_reduced, glued_chain_complex, reduced_symmetric_action

_FAMILIES = {
    "s1_min": (lambda a: gr.minimal_circle(), ()),
    "s1_sd": (lambda a: gr.cycle_graph(a.n), ("n",)),
    "y": (lambda a: gr.y_graph(), ()),
    "w": (lambda a: gr.hub_graph(a.k, a.l), ("k", "l")),
    "xb": (lambda a: gr.double_hub_graph(a.x, a.k, a.l, a.p, a.q), ("x", "k", "l", "p", "q")),
    "path": (lambda a: gr.path_graph(a.n), ("n",)),
    "theta": (lambda a: gr.theta_graph(), ()),
}

_GEN_LIMITS = {"n": 6, "k": 4, "l": 4, "x": 3, "p": 4, "q": 4}
_XB_LIMITS = {"x": 3, "k": 2, "l": 2, "p": 2, "q": 2}


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="graphconf")
    sub = top.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit a graph from the shipped corpus")
    g.add_argument("family", choices=sorted(_FAMILIES))
    g.add_argument("-n", type=int, default=1)
    g.add_argument("-k", type=int, default=0)
    g.add_argument("-l", type=int, default=0)
    g.add_argument("-p", type=int, default=0)
    g.add_argument("-q", type=int, default=0)
    g.add_argument("-x", type=int, default=1)
    g.add_argument("--out")

    for name in ("model", "braidgroup", "compare", "reduced"):
        p = sub.add_parser(name)
        p.add_argument("--graph", required=True)
        p.add_argument("-k", type=int, default=2)
        p.add_argument("--quotient", action="store_true")
        p.add_argument("--remove-leaves", action="store_true")
        p.add_argument("--collapse", action="store_true")
        p.add_argument("--subdivide", type=int, default=None)
        p.add_argument("--out")
    return top


def _report_of_complex(s: SemiSimplicialSet) -> dict:
    cc = chain_complex(s)
    hom = homology(cc)
    try:
        dim = dimension(s)
    except EmptyComplex:
        dim = None
    return {
        "fvector": list(s.fvector()),
        "dimension": dim,
        "euler": cc.euler_characteristic(),
        "betti": hom.betti,
        "torsion": hom.torsion,
        "components": len(connected_components(s)) if s.size(0) else 0,
    }


def _cc_report(cc) -> dict:
    hom = homology(cc)
    return {
        "fvector": list(cc.sizes),
        "euler": cc.euler_characteristic(),
        "betti": hom.betti,
        "torsion": hom.torsion,
    }


def cmd_gen(args) -> dict:
    make, params = _FAMILIES[args.family]
    for p in params:
        value = getattr(args, p)
        limit = _XB_LIMITS[p] if args.family == "xb" else _GEN_LIMITS[p]
        floor = 1 if p in ("n", "x") else 0
        if not floor <= value <= limit:
            raise InputError(f"parameter -{p} must be in [{floor}, {limit}] for {args.family}")
    return gr.graph_to_json(make(args))


def _load(path: str) -> gr.Graph:
    try:
        return gr.load_graph(path)
    except InputError as exc:
        raise ValueError(str(exc)) from exc


def cmd_model(args) -> dict:
    g = _load(args.graph)
    if args.k < 1:
        raise InputError("k must be >= 1")
    if args.subdivide is not None:
        raise InputError("--subdivide is only used by the compare command")
    s = model_complex(
        g,
        args.k,
        drop_leaves=args.remove_leaves,
        quotient=args.quotient,
        collapse=args.collapse,
    )
    return _report_of_complex(s)


def _group_report(s: SemiSimplicialSet) -> dict:
    pres = pi1.presentation(s)
    simplified = pi1.simplify(pres)
    rank, torsion = pi1.abelianization(pres)
    try:
        free = pi1.free_rank(s)
    except InputError:
        free = None
    return {
        "presentation": simplified.to_json(),
        "abelianization": {"rank": rank, "torsion": torsion},
        "free_rank": free,
    }


def cmd_braidgroup(args) -> dict:
    g = _load(args.graph)
    if args.k < 1:
        raise InputError("k must be >= 1")
    if args.subdivide is not None:
        raise InputError("--subdivide is only used by the compare command")
    ordered = model_complex(g, args.k, drop_leaves=args.remove_leaves)
    unordered = model_complex(g, args.k, drop_leaves=args.remove_leaves, quotient=True)
    return {"ordered": _group_report(ordered), "unordered": _group_report(unordered)}


def cmd_compare(args) -> dict:
    g = _load(args.graph)
    if args.k < 1:
        raise InputError("k must be >= 1")
    n = args.subdivide if args.subdivide is not None else 1
    if n < 1:
        raise InputError("subdivision count must be >= 1")
    fine = gr.subdivide(g, n)
    conditions = check_abrams_conditions(fine, args.k)
    away = abrams_complex(fine, args.k)
    abrams_cc = cubical_chain_complex(away)
    model_report = _report_of_complex(model_complex(g, args.k, drop_leaves=args.remove_leaves))
    abrams_report = _cc_report(abrams_cc)
    pad = max(len(model_report["betti"]), len(abrams_report["betti"]))
    model_betti = model_report["betti"] + [0] * (pad - len(model_report["betti"]))
    abrams_betti = abrams_report["betti"] + [0] * (pad - len(abrams_report["betti"]))
    return {
        "model": model_report,
        "abrams": abrams_report,
        "conditions": conditions.to_json(),
        "match": model_betti == abrams_betti,
    }


def cmd_reduced(args) -> dict:
    g = _load(args.graph)
    if args.k != 2:
        raise InputError("the reduced model is defined for k = 2 only")
    if args.subdivide is not None:
        raise InputError("--subdivide is only used by the compare command")
    if args.remove_leaves:
        g = gr.remove_leaves(g)
    gc = build_reduced(g)
    if args.quotient:
        s = quotient_by_free_action(gc.complex, reduced_symmetric_action(gc))
        report = _report_of_complex(s)
    else:
        cc = glued_chain_complex(gc)
        hom = homology(cc)
        report = {
            "fvector": list(gc.fvector()),
            "euler": gc.euler_characteristic(),
            "betti": hom.betti,
            "torsion": hom.torsion,
            "components": len(connected_components(gc.complex)) if gc.vertices else 0,
            "cells": {
                "vertices": gc.vertices,
                "edges": [[eid, src, dst] for eid, src, dst in gc.edges],
                "faces": [[fid, [[e, s] for e, s in word]] for fid, word in gc.faces2],
            },
        }
    return report


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    handlers = {
        "gen": cmd_gen,
        "model": cmd_model,
        "braidgroup": cmd_braidgroup,
        "compare": cmd_compare,
        "reduced": cmd_reduced,
    }
    try:
        report = handlers[args.command](args)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InternalError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4
    text = json.dumps(report, sort_keys=True, separators=(",", ":"))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
