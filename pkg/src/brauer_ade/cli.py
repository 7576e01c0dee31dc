"""Command line entry point: ``brauer-ade <subcommand> ...``.

Output is JSON (keys in a fixed order) or Graphviz DOT with ``--dot``.
Exit status is 1 for unparseable input and 2 when a structural invariant
fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import admissible, braction, diagram, morita
from .admissible import AdmissibilityError, as_rootset, roots_of, simple_rootset
from .coxgroup import weyl_order
from .errors import InvariantViolation
from .laurent import parse_rational
from .rootsys import DiagramSpec, build_root_system


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def dumps(obj: Any, indent: int = 0) -> str:
    """JSON with two-space indentation; lists of scalars stay on one line."""
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k), ensure_ascii=False)}: {dumps(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(json.dumps(v, ensure_ascii=False) for v in obj) + "]"
        return "[\n" + ",\n".join(inner + dumps(v, indent + 1) for v in obj) + "\n" + pad + "]"
    return json.dumps(obj, ensure_ascii=False)


def _rat(x: Fraction) -> str:
    return str(x)


def _poly(p) -> dict:
    return {"text": str(p), "terms": p.to_wire()}


def _spec(text: str) -> DiagramSpec:
    try:
        return DiagramSpec.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _rootset(system, args) -> tuple[int, ...]:
    """``--set 1,2,4`` names simple roots; ``--roots 1,0,0;0,1,1`` gives
    coefficient vectors separated by semicolons."""
    try:
        if args.roots is not None:
            vecs = [tuple(int(c) for c in part.split(",")) for part in args.roots.split(";") if part.strip()]
            for v in vecs:
                if len(v) != system.rank:
                    raise UsageError(f"root {v} needs {system.rank} coefficients")
            return as_rootset(system, vecs)
        if args.set is not None:
            nodes = [int(tok) for tok in args.set.split(",") if tok.strip()]
            return simple_rootset(system, nodes)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return ()


def _vectors(system, B) -> list[list[int]]:
    return [list(r) for r in roots_of(system, B)]


# -- subcommands ----------------------------------------------------------------------


def cmd_roots(args) -> Any:
    system = build_root_system(_spec(args.type))
    return {
        "type": str(system.spec),
        "count": system.size,
        "highest_root": list(system.highest_root),
        "roots": [list(r) for r in system.positive_roots],
    }


def _orbits(args):
    spec = _spec(args.type)
    return spec, admissible.enumerate_all_orbits(spec, opt_in_e8=args.opt_in_e8)


def cmd_orbits(args) -> Any:
    spec, orbits = _orbits(args)
    system = build_root_system(spec)
    return {
        "type": str(spec),
        "count": len(orbits),
        "weyl_order": weyl_order(system),
        "orbits": [
            {
                "id": k,
                "size": o.orbit_size,
                "stabilizer_order": weyl_order(system) // o.orbit_size,
                "representative": _vectors(system, o.representative),
                "maximal": _vectors(system, o.maximal),
            }
            for k, o in enumerate(orbits)
        ],
        "printed_representatives": admissible.printed_crosscheck(spec, orbits),
    }


def cmd_poset(args) -> Any:
    spec, orbits = _orbits(args)
    system = build_root_system(spec)
    if not 0 <= args.orbit < len(orbits):
        raise UsageError(f"orbit index {args.orbit} out of range 0..{len(orbits) - 1}")
    o = orbits[args.orbit]
    edges = o.poset.hasse_edges()
    if args.dot:
        fmt = lambda B: ";".join(",".join(map(str, r)) for r in roots_of(system, B))  # noqa: E731
        lines = [f'digraph "{spec}_orbit{args.orbit}" {{']
        for k, B in enumerate(o.members):
            lines.append(f'  n{k} [label="{fmt(B)}"];')
        for lo, hi in edges:
            lines.append(f"  n{hi} -> n{lo};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    return {
        "type": str(spec),
        "orbit": args.orbit,
        "size": o.orbit_size,
        "members": [_vectors(system, B) for B in o.members],
        "maximal": o.poset.maximal,
        "hasse_edges": [[hi, lo] for lo, hi in edges],
    }


def cmd_closure(args) -> Any:
    system = build_root_system(_spec(args.type))
    X = _rootset(system, args)
    try:
        cl = admissible.closure(system, X)
    except AdmissibilityError as exc:
        raise UsageError(str(exc)) from exc
    return {
        "type": str(system.spec),
        "input": _vectors(system, X),
        "closure": _vectors(system, cl),
        "input_admissible": cl == X,
    }


def cmd_act(args) -> Any:
    system = build_root_system(_spec(args.type))
    B = _rootset(system, args)
    if not admissible.is_admissible(system, B):
        raise UsageError(f"{_vectors(system, B)} is not admissible in {system.spec}")
    try:
        word = braction.parse_word(args.word or "")
        out = braction.act_word(system, word, B)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return {
        "type": str(system.spec),
        "word": " ".join(map(str, word)),
        "input": _vectors(system, B),
        "output": _vectors(system, out),
    }


def cmd_relations(args) -> Any:
    if args.strands is not None:
        res = diagram.check_relations(args.strands)
        return {"model": "diagram", "strands": args.strands, "relations": res, "passed": all(res.values())}
    if args.type is None:
        raise UsageError("relations needs a type or --strands")
    report = braction.check_relations(_spec(args.type))
    return {
        "model": "root-sets",
        "type": str(report.spec),
        "sets_checked": report.sets_checked,
        "relations": report.summary(),
        "passed": report.passed,
    }


def cmd_morita(args) -> Any:
    spec = _spec(args.type)
    algebra = "bmw" if args.bmw else "brauer"
    system = build_root_system(spec)
    bl = morita.blocks(spec, algebra, opt_in_e8=args.opt_in_e8)
    report = morita.rank_check(spec, opt_in_e8=args.opt_in_e8)
    return {
        "type": str(spec),
        "algebra": algebra,
        "blocks": [
            {
                "orbit": b.orbit_id,
                "orbit_size": b.orbit_size,
                "maximal_element": _vectors(system, b.maximal_element),
                "centralizer_nodes": list(b.centralizer_nodes),
                "centralizer_type": [str(t) for t in b.centralizer_types],
                "group_order": b.group_order,
                "algebra": b.algebra_descriptor,
                "contribution": b.contribution,
            }
            for b in bl
        ],
        "total_rank": report.total,
        "oracle": report.oracle_total,
        "oracle_source": report.oracle_source,
        "match": report.match,
    }


def cmd_wedderburn(args) -> Any:
    spec = _spec(args.type)
    out = []
    for wb in morita.wedderburn_sizes(spec, opt_in_e8=args.opt_in_e8):
        b = wb.block
        out.append(
            {
                "orbit": b.orbit_id,
                "orbit_size": b.orbit_size,
                "centralizer_type": [str(t) for t in b.centralizer_types],
                "group_order": b.group_order,
                "available": wb.available,
                "irreps": None
                if wb.irreps is None
                else [{"partition": [list(p) for p in d.partition], "dimension": d.dimension} for d in wb.irreps],
                "sizes": wb.sizes,
                "sum_of_squares": None if wb.sizes is None else sum(s * s for s in wb.sizes),
                "burnside": wb.burnside_ok,
            }
        )
    return {"type": str(spec), "blocks": out}


def _strands(args):
    if args.strands is None:
        raise UsageError("--strands is required")
    return args.strands


def cmd_gram(args) -> Any:
    m = _strands(args)
    t = args.arcs if args.arcs is not None else 1
    try:
        d = diagram.gram_det(m, t)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return {
        "strands": m,
        "arcs": t,
        "half_diagrams": len(diagram.half_diagrams(m, t)),
        "det": _poly(d),
        "rational_roots": [_rat(r) for r in d.rational_roots()],
    }


def _delta(args) -> Fraction:
    if args.delta is None:
        raise UsageError("--delta is required")
    try:
        return parse_rational(args.delta)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_semisimple(args) -> Any:
    m = _strands(args)
    x = _delta(args)
    if not 1 <= m <= diagram.MAX_STRANDS:
        raise UsageError(f"strands must be in 1..{diagram.MAX_STRANDS}")
    v = diagram.semisimple_at(m, x)
    return {
        "strands": m,
        "delta": _rat(x),
        "semisimple": v.semisimple,
        "cells": [
            {"arcs": t, "det": str(v.dets[t]), "value": _rat(v.values[t])} for t in sorted(v.dets)
        ],
        "vanishing": [[mm, t] for mm, t in v.vanishing],
    }


def cmd_dnss(args) -> Any:
    x = _delta(args)
    try:
        r = diagram.d_semisimplicity_report(args.n, x, args.char)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return {
        "n": r.n,
        "delta": _rat(r.x),
        "char": r.char,
        "zset": diagram.z_set(r.n),
        "verdict": r.verdict,
        "reason": r.reason,
    }


def cmd_zset(args) -> Any:
    if args.n < 1:
        raise UsageError("n must be positive")
    return {"n": args.n, "zset": diagram.z_set(args.n)}


def cmd_cellposet_d(args) -> Any:
    try:
        p = morita.cell_poset_D(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.dot:
        return p.to_dot()
    lab = morita.cell_label
    return {
        "n": p.n,
        "untwisted": [lab(c) for c in p.untwisted],
        "twisted": [lab(c) for c in p.twisted],
        "hasse_edges": [[lab(a), lab(b)] for a, b in p.hasse_edges()],
        "drawn_edges": [[lab(a), lab(b)] for a, b in p.drawn_edges()],
        "total_order": p.is_total(),
    }


COMMANDS = {
    "roots": cmd_roots,
    "orbits": cmd_orbits,
    "poset": cmd_poset,
    "closure": cmd_closure,
    "act": cmd_act,
    "relations": cmd_relations,
    "morita": cmd_morita,
    "wedderburn": cmd_wedderburn,
    "gram": cmd_gram,
    "semisimple": cmd_semisimple,
    "dnss": cmd_dnss,
    "zset": cmd_zset,
    "cellposet-d": cmd_cellposet_d,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="brauer-ade", description="Brauer algebras of simply-laced type")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, help_text, *, type_arg="required"):
        p = sub.add_parser(name, help=help_text)
        if type_arg == "required":
            p.add_argument("type", help="diagram type such as A3, D4, E6")
        elif type_arg == "optional":
            p.add_argument("type", nargs="?", help="diagram type such as A3, D4, E6")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="dot", action="store_false", help="JSON output (default)")
        fmt.add_argument("--dot", dest="dot", action="store_true", help="Graphviz output where supported")
        p.set_defaults(dot=False)
        p.add_argument("--opt-in-e8", action="store_true", help="allow E8 orbit enumeration")
        return p

    add("roots", "list positive roots")
    add("orbits", "W-orbits of admissible root sets")
    p = add("poset", "Hasse diagram of one orbit")
    p.add_argument("--orbit", type=int, default=0)
    for name, text in (("closure", "admissible closure of a root set"), ("act", "act by a word")):
        p = add(name, text)
        p.add_argument("--set", help="comma-separated simple-root indices")
        p.add_argument("--roots", help="semicolon-separated coefficient vectors")
        if name == "act":
            p.add_argument("--word", help="tokens R<i> / E<i>, rightmost acts first")
    p = add("relations", "verify the defining relations", type_arg="optional")
    p.add_argument("--strands", type=int, help="check in the diagram algebra instead")
    p = add("morita", "Morita blocks and total rank")
    p.add_argument("--bmw", action="store_true", help="report Hecke-algebra blocks")
    add("wedderburn", "matrix sizes of the generic semisimple algebra")
    for name, text in (("gram", "Gram determinant of a cell layer"), ("semisimple", "semisimplicity at delta")):
        p = add(name, text, type_arg=None)
        p.add_argument("--strands", type=int)
        if name == "gram":
            p.add_argument("--arcs", type=int)
        else:
            p.add_argument("--delta")
    p = add("dnss", "type D non-semisimplicity criteria", type_arg=None)
    p.add_argument("n", type=int)
    p.add_argument("--delta")
    p.add_argument("--char", type=int, default=None)
    p = add("zset", "the integer set Z(n)", type_arg=None)
    p.add_argument("n", type=int)
    p = add("cellposet-d", "cell poset of type D_n", type_arg=None)
    p.add_argument("n", type=int)
    return parser


def run(argv: Sequence[str]) -> tuple[int, str, str]:
    """Execute one request; returns ``(exit code, stdout text, stderr text)``."""
    try:
        args = build_parser().parse_args(list(argv))
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        return 1, "", f"error: {exc}\n"
    except InvariantViolation as exc:
        return 2, "", f"invariant violated: {exc}\n"
    except (ValueError, KeyError) as exc:
        return 1, "", f"error: {exc}\n"
    if isinstance(result, str):
        return 0, result, ""
    return 0, dumps(result) + "\n", ""


def main(argv: Sequence[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
