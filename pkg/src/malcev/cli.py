"""Command-line front end.

Exit codes: 0 when every checked property held, 1 when one was refuted (the
refutations are listed under ``findings``), 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog as cat
from .algebra import Algebra, validate, witness_residual
from .catalog import parse_rational
from .delta import delta_element, delta_operator, delta_span, lie_closure_check
from .errors import DimensionMismatch, MalcevError, ParseError
from .fuzz import TARGETS, FuzzConfig, fuzz, write_findings
from .ideals import (
    coprime_product_check,
    correspondence_check,
    decompose,
    enumerate_i_ideals,
    enumerate_ideals,
    ideal_product,
    is_i_ideal,
    is_ideal,
    j_minimality_check,
    product_counterexample_search,
)
from .linalg import Subspace, rref_span, unit_vector
from .weights import lift_weight_spaces, weight_decomposition


class UsageError(MalcevError):
    pass


def _q(x) -> str:
    return str(Fraction(x))


def _vec(v) -> list:
    return [_q(x) for x in v]


def _space(s: Subspace) -> dict:
    return {"dim": s.dim, "basis": [_vec(b) for b in s.basis]}


def _matrix(m) -> list:
    return [_vec(m.row(i)) for i in range(m.rows)]


def load_algebra(spec: str) -> Algebra:
    """A path to an algebra document, or ``catalog:NAME``."""
    if spec.startswith("catalog:"):
        try:
            return cat.get(spec.split(":", 1)[1])
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    path = Path(spec)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {spec}: {exc.strerror}") from None
    return cat.parse(text)


def parse_coords(text: str, dim: int) -> tuple:
    parts = [p for p in text.split(",")] if text.strip() else []
    coords = tuple(parse_rational(p.strip()) for p in parts)
    if len(coords) != dim:
        raise DimensionMismatch(f"expected {dim} coordinates, got {len(coords)}")
    return coords


def _header(args, a: Algebra) -> dict:
    return {"command": args.argv, "algebra": {"name": a.name, "dim": a.dim}}


def _validation_block(a: Algebra) -> dict:
    r = validate(a)
    return {
        "anticommutative": r.anticommutative,
        "is_lie": r.is_lie,
        "is_malcev": r.is_malcev,
        "witness_count": len(r.witnesses),
        "witnesses": [w.as_dict() for w in r.witnesses],
    }


def cmd_validate(args) -> dict:
    a = load_algebra(args.file)
    report = _header(args, a)
    report["validation"] = _validation_block(a)
    r = validate(a)
    findings = []
    if r.is_lie and not r.is_malcev:
        findings.append("lie_but_not_malcev")
    if any(not any(witness_residual(a, w)) for w in r.witnesses):
        findings.append("unsound_witness")
    report["findings"] = findings
    return report


def cmd_analyze(args) -> dict:
    a = load_algebra(args.file)
    ctx = decompose(a)
    v = validate(a)
    ideals = enumerate_ideals(a, 2)
    minimality = [j_minimality_check(a, p) for p in ideals]
    report = _header(args, a)
    report["validation"] = {"is_lie": v.is_lie, "is_malcev": v.is_malcev}
    report["J"] = dict(_space(ctx.J), is_ideal=is_ideal(a, ctx.J))
    report["N"] = dict(_space(ctx.N), is_ideal=is_ideal(a, ctx.N))
    report["NJ_zero"] = ctx.annihilation
    report["direct"] = ctx.direct
    report["quotient"] = {"dim": ctx.quotient.dim, "is_lie": ctx.quotient_is_lie,
                          "basis": list(ctx.quotient.basis_names)}
    report["projection"] = _matrix(ctx.pi) if ctx.direct else None
    report["minimality"] = {
        "ideals_checked": len(ideals),
        "all_hold": all(minimality),
        "failures": [_space(p.space) for p, m in zip(ideals, minimality) if not m],
    }
    findings = []
    if not report["J"]["is_ideal"]:
        findings.append("J_not_ideal")
    if not report["N"]["is_ideal"]:
        findings.append("N_not_ideal")
    if not ctx.annihilation:
        findings.append("NJ_nonzero")
    if not ctx.quotient_is_lie:
        findings.append("quotient_not_lie")
    if not ctx.direct:
        findings.append("decomposition_not_direct")
    if not report["minimality"]["all_hold"]:
        findings.append("J_not_minimal")
    report["findings"] = findings
    return report


def cmd_ideals(args) -> dict:
    a = load_algebra(args.file)
    ctx = decompose(a)
    k = args.max_seed_size
    ideals = enumerate_ideals(a, k)
    report = _header(args, a)
    report["max_seed_size"] = k
    report["ideals"] = [dict(_space(p.space), contains_J=p.contains_J) for p in ideals]
    findings = []

    prop = []
    for i, p in enumerate(ideals):
        for j in range(i, len(ideals)):
            q = ideals[j]
            if p.contains_J and q.contains_J:
                ok = is_ideal(a, ideal_product(p, q))
                prop.append(ok)
                if not ok:
                    findings.append(f"product_of_J_ideals_not_ideal:{i},{j}")
    report["products_containing_J"] = {"pairs": len(prop), "all_ideals": all(prop)}

    pair = product_counterexample_search(a, k)
    report["product_counterexample"] = None if pair is None else {
        "p": _space(pair[0].space), "q": _space(pair[1].space),
        "product": _space(ideal_product(*pair))}

    if ctx.direct:
        corr = [correspondence_check(ctx, p.space) for p in ideals]
        report["correspondence"] = [{"forward": c.forward, "backward": c.backward} for c in corr]
        for i, c in enumerate(corr):
            if not (c.forward and c.backward):
                findings.append(f"correspondence_fails:{i}")
        i_ideals = enumerate_i_ideals(ctx, k)
        pairs = []
        for i, p in enumerate(i_ideals):
            for j in range(i, len(i_ideals)):
                res = coprime_product_check(ctx, p, i_ideals[j])
                if res.coprime:
                    pairs.append({"p": i, "q": j, "product_is_i_ideal": res.product_is_i_ideal})
                    if res.refuted:
                        findings.append(f"coprime_product_not_i_ideal:{i},{j}")
        report["i_ideals"] = [_space(x) for x in i_ideals]
        report["coprime_pairs"] = pairs
    else:
        report["correspondence"] = None
        report["i_ideals"] = None
        report["coprime_pairs"] = None
    report["findings"] = findings
    return report


def cmd_delta(args) -> dict:
    a = load_algebra(args.file)
    x = parse_coords(args.x, a.dim)
    y = parse_coords(args.y, a.dim)
    sol = delta_element(a, x, y)
    op = delta_operator(a, x, y)
    span = delta_span(a)
    closed = lie_closure_check(span)
    report = _header(args, a)
    report["x"] = _vec(x)
    report["y"] = _vec(y)
    report["element"] = {
        "status": sol.status.value,
        "particular": None if sol.particular is None else _vec(sol.particular.coords),
        "kernel": _space(sol.kernel),
    }
    report["operator"] = _matrix(op)
    report["span"] = {"dim": span.dim, "lie_closed": closed}
    report["findings"] = [] if closed else ["delta_span_not_closed"]
    return report


def cmd_weights(args) -> dict:
    a = load_algebra(args.file)
    labels = [s.strip() for s in args.h.split(",") if s.strip()]
    try:
        idx = [a.index(lab) for lab in labels]
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    h = rref_span([unit_vector(a.dim, i) for i in idx], a.dim)
    ctx = decompose(a)
    w = lift_weight_spaces(ctx, weight_decomposition(ctx, h), h)
    lift = w.lifted
    report = _header(args, a)
    report["h"] = _space(h)
    report["weights"] = [{"weight": _vec(alpha.values), **_space(s)} for alpha, s in w.spaces]
    report["splits"] = w.splits
    report["complete"] = w.complete
    report["char_polys_split"] = [r.splits for r in w.root_reports]
    report["independent"] = w.independent
    report["h_in_N0"] = w.h_in_zero_space
    report["brackets_respect_weights"] = w.brackets_respect_weights
    report["lift"] = {
        "literal_sum_dim": lift.literal_sum_dim,
        "literal_direct": lift.literal_direct,
        "extended_sum_dim": lift.extended_sum_dim,
        "extended_direct": lift.extended_direct,
        "H_in_A0": lift.h_in_zero_space,
        "brackets_literal": lift.brackets_literal,
        "brackets_extended": lift.brackets_extended,
    }
    findings = []
    if not w.independent:
        findings.append("weight_spaces_overlap")
    if not w.h_in_zero_space:
        findings.append("h_not_in_N0")
    if not w.brackets_respect_weights:
        findings.append("weight_brackets_fail")
    if not lift.brackets_literal:
        findings.append("lifted_brackets_fail")
    report["findings"] = findings
    return report


def cmd_catalog(args):
    if args.action == "list":
        return {"command": args.argv,
                "catalog": [{"name": a.name, "dim": a.dim} for a in cat.catalog()],
                "findings": []}
    if not args.name:
        raise UsageError(f"catalog {args.action} needs a NAME")
    try:
        a = cat.get(args.name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if args.action == "export":
        return cat.serialize(a)
    report = _header(args, a)
    report["document"] = cat.to_document(a)
    v = validate(a)
    report["validation"] = {"is_lie": v.is_lie, "is_malcev": v.is_malcev}
    report["findings"] = []
    return report


def cmd_fuzz(args) -> dict:
    config = FuzzConfig(dim=args.dim, trials=args.trials, seed=args.seed, target=args.target,
                        coefficient_bound=args.coefficient_bound)
    findings = fuzz(config)
    paths = write_findings(findings, args.out) if args.out else []
    return {
        "command": args.argv,
        "config": {"dim": config.dim, "trials": config.trials, "seed": config.seed,
                   "target": config.target, "coefficient_bound": config.coefficient_bound},
        "found": len(findings),
        "instances": [f.as_dict() for f in findings],
        "written": [str(p) for p in paths],
        # instances are search results, not refutations of a checked property
        "findings": [],
    }


def render_text(value, indent: int = 0) -> list:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and not _is_flat(item):
                lines.append(f"{pad}-")
                lines.extend(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(item)}")
    else:
        lines.append(f"{pad}{_inline(value)}")
    return lines


def _is_flat(v) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v) or all(
            isinstance(x, list) and all(not isinstance(y, (dict, list)) for y in x) for x in v)
    return False


def _inline(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) if not isinstance(x, list)
                               else "(" + ", ".join(map(str, x)) + ")" for x in v) + "]"
    if isinstance(v, dict):
        return "{}"
    return str(v)


COMMANDS = {
    "validate": cmd_validate,
    "analyze": cmd_analyze,
    "ideals": cmd_ideals,
    "delta": cmd_delta,
    "weights": cmd_weights,
    "catalog": cmd_catalog,
    "fuzz": cmd_fuzz,
}


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="malcev", parents=[fmt],
                                     description="Structure theory checks for Malcev algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[fmt], help="Lie and Malcev identity checks")
    p.add_argument("file")
    p = sub.add_parser("analyze", parents=[fmt], help="J, N, A/J and the N+J decomposition")
    p.add_argument("file")
    p = sub.add_parser("ideals", parents=[fmt], help="ideal enumeration and correspondence")
    p.add_argument("file")
    p.add_argument("--max-seed-size", type=int, default=2)
    p = sub.add_parser("delta", parents=[fmt], help="Delta element and operator span")
    p.add_argument("file")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p = sub.add_parser("weights", parents=[fmt], help="generalised weight spaces")
    p.add_argument("file")
    p.add_argument("--h", required=True)
    p = sub.add_parser("catalog", parents=[fmt], help="built-in algebras")
    p.add_argument("action", choices=("list", "show", "export"))
    p.add_argument("name", nargs="?")
    p = sub.add_parser("fuzz", parents=[fmt], help="random Malcev algebra search")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--target", choices=TARGETS, default="non-lie-malcev")
    p.add_argument("--coefficient-bound", type=int, default=2)
    p.add_argument("--out")
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = argv
    fmt = getattr(args, "format", "text")
    try:
        report = COMMANDS[args.command](args)
    except (MalcevError, ValueError) as exc:
        print(f"malcev: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if isinstance(report, str):  # catalog export emits the document itself
        print(report)
        return 0
    status = 1 if report.get("findings") else 0
    report["exit_status"] = status
    if fmt == "json":
        print(json.dumps(report, indent=2, ensure_ascii=False))
    else:
        print("\n".join(render_text(report)))
    return status


if __name__ == "__main__":
    sys.exit(main())
