"""Command-line front end.

One verb per public operation; ``--json`` switches every verb to
machine-readable output validating against docs/schemas/.  Exit codes:
0 success, 1 parse error, 2 precondition violation, 3 internal invariant
failure (a law broken, which is always a bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import ideals, membership, oracle, orders, rank, text, trees
from .classification import Borel, TreeClass, classify, classify_via_derivative
from .errors import (
    FiniteSchema,
    NotASubset,
    NotLimit,
    ParseError,
    QuotientOverflow,
    UnknownContainment,
)
from .oracle import Budget
from .witnesses import DominatingBranch, EmbeddingWitness, UnboundedFamily

_PRECONDITION_ERRORS = (NotASubset, NotLimit, FiniteSchema, UnknownContainment, QuotientOverflow)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except _PRECONDITION_ERRORS as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 3
    if args.json:
        print(json.dumps(payload["json"], indent=2))
    else:
        print(payload["text"])
    return payload.get("exit", 0)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idealforms",
        description="canonical forms, tree classification and scattered orders",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(required=True, metavar="verb")

    def verb(name, handler, help_, *specs):
        p = sub.add_parser(name, help=help_)
        for spec in specs:
            p.add_argument(*spec[0], **spec[1])
        p.set_defaults(handler=handler)
        return p

    verb("normalize", _cmd_normalize, "canonical form of an ideal expression",
         (["expr"], {}))
    verb("rank", _cmd_rank, "rank of an ideal expression", (["expr"], {}))
    verb("perp", _cmd_perp, "canonical form of the orthogonal", (["expr"], {}))
    verb("iso", _cmd_iso, "isomorphism of two expressions",
         (["expr1"], {}), (["expr2"], {}))
    verb("compile", _cmd_compile, "schema of the standard copy",
         (["expr"], {}),
         (["--emit"], {"choices": ["dot", "json"], "default": None}),
         (["--depth"], {"type": int, "default": 6}),
         (["--width"], {"type": int, "default": 6}),
         (["--count"], {"type": int, "default": 200}))
    verb("classify", _cmd_classify, "classification of a schema's restriction",
         (["tree"], {}),
         (["--via"], {"choices": ["derivative"], "default": None}))
    verb("treerank", _cmd_treerank, "derivative rank of the generated tree",
         (["tree"], {}))
    verb("member", _cmd_member, "membership of a query in a target's copy",
         (["query"], {}), (["in_kw"], {"metavar": "in"}), (["expr"], {}),
         (["--perp"], {"action": "store_true"}))
    verb("frechet", _cmd_frechet, "orthogonal infinite subset of a negative query",
         (["query"], {}), (["in_kw"], {"metavar": "in"}), (["expr"], {}))
    verb("idwitness", _cmd_idwitness, "domination or unboundedness witness",
         (["query"], {}))
    verb("enumerate", _cmd_enumerate, "budgeted enumeration of a schema or query",
         (["query"], {}),
         (["--budget"], {"default": "6,6,200", "metavar": "D,W,C"}))
    verb("selftest", _cmd_selftest, "seeded law suite across all modules",
         (["--seed"], {"type": int, "default": 42}),
         (["--trials"], {"type": int, "default": 50}))

    wo = sub.add_parser("wo", help="well-ordered-subset ideals of linear orders")
    wo_sub = wo.add_subparsers(required=True, metavar="verb")
    p = wo_sub.add_parser("classify", help="classification of a linear order term")
    p.add_argument("order")
    p.set_defaults(handler=_cmd_wo_classify)
    p = wo_sub.add_parser("reverse", help="reversal and its classification")
    p.add_argument("order")
    p.set_defaults(handler=_cmd_wo_reverse)
    p = wo_sub.add_parser("rationalize", help="embed the order into the rationals")
    p.add_argument("order")
    p.add_argument("--count", type=int, default=10)
    p.set_defaults(handler=_cmd_wo_rationalize)
    return parser


def _form_json(c: ideals.CanonicalForm) -> dict:
    return {"kind": c.kind.value, "rank": str(c.rank), "printed": str(c)}


def _cmd_normalize(args) -> dict:
    c = ideals.normalize(text.parse_expr(args.expr))
    return {"text": str(c), "json": _form_json(c)}


def _cmd_rank(args) -> dict:
    r = ideals.b_rank(text.parse_expr(args.expr))
    return {"text": str(r), "json": {"rank": str(r)}}


def _cmd_perp(args) -> dict:
    c = ideals.perp(ideals.normalize(text.parse_expr(args.expr)))
    return {"text": str(c), "json": _form_json(c)}


def _cmd_iso(args) -> dict:
    same = ideals.iso_check(text.parse_expr(args.expr1), text.parse_expr(args.expr2))
    word = "isomorphic" if same else "non-isomorphic"
    return {"text": word, "json": {"isomorphic": same}}


def _cmd_compile(args) -> dict:
    t = trees.compile_ideal(text.parse_expr(args.expr))
    if args.emit is None:
        return {"text": str(t), "json": {"schema": str(t)}}
    budget = Budget(args.depth, args.width, args.count)
    elems = oracle.enumerate_schema(t, budget)
    if args.emit == "json":
        payload = {
            "schema": str(t),
            "budget": {"depth": budget.depth, "width": budget.width, "count": budget.count},
            "elements": [list(u) for u in elems],
            "truncated": True,
        }
        return {"text": json.dumps(payload, indent=2), "json": payload}
    dot = _dot_of(t, elems)
    return {"text": dot, "json": {"schema": str(t), "dot": dot}}


def _dot_of(t: trees.TreeSchema, elems: list[trees.Seq]) -> str:
    nodes: set[trees.Seq] = {()}
    for u in elems:
        for i in range(len(u) + 1):
            nodes.add(u[:i])
    lines = ["digraph schema {"]
    names = {u: f"n{i}" for i, u in enumerate(sorted(nodes, key=trees.shortlex))}
    for u in sorted(nodes, key=trees.shortlex):
        shape = "doublecircle" if trees.member_elem(u, t) else "circle"
        label = trees.format_seq_elem(u)
        lines.append(f'  {names[u]} [label="{label}", shape={shape}];')
    for u in sorted(nodes, key=trees.shortlex):
        if u:
            lines.append(f"  {names[u[:-1]]} -> {names[u]};")
    lines.append("}")
    return "\n".join(lines)


def _class_payload(out: TreeClass) -> dict:
    if isinstance(out, Borel):
        return {
            "text": f"BOREL {out.form}",
            "json": {"verdict": "borel", "form": _form_json(out.form)},
        }
    w = out.witness
    sample = [list(w.map((k,))) for k in range(4)]
    return {
        "text": f"NON-BOREL (embedding witness: {w.label}; "
                f"images of <0>..<3>: {', '.join(trees.format_seq_elem(tuple(u)) for u in sample)})",
        "json": {
            "verdict": "non-borel",
            "witness": _witness_json(w, checked=None),
        },
    }


def _cmd_classify(args) -> dict:
    t = text.parse_tree(args.tree)
    out = classify_via_derivative(t) if args.via else classify(t)
    return _class_payload(out)


def _cmd_treerank(args) -> dict:
    r, core_empty = rank.tree_rank(text.parse_tree(args.tree))
    return {
        "text": f"rank {r}, core {'empty' if core_empty else 'nonempty'}",
        "json": {"rank": str(r), "coreEmpty": core_empty},
    }


def _parse_member_args(args) -> tuple[membership.QueryTerm, ideals.IdealExpr]:
    if args.in_kw != "in":
        raise ParseError(f"expected the keyword 'in', got {args.in_kw!r}")
    return text.parse_query(args.query), text.parse_expr(args.expr)


def _cmd_member(args) -> dict:
    q, e = _parse_member_args(args)
    if args.perp:
        verdict = membership.member_perp(q, e)
        where = f"orthogonal of {ideals.normalize(e)}"
    else:
        verdict = membership.member_of(q, e)
        where = str(ideals.normalize(e))
    word = "member" if verdict else "not a member"
    return {
        "text": f"{word} of {where}",
        "json": {"member": verdict, "perp": args.perp, "target": str(ideals.normalize(e))},
    }


def _cmd_frechet(args) -> dict:
    q, e = _parse_member_args(args)
    w = membership.frechet_witness(q, e)
    checked = oracle.check_witness(w, (q, e), oracle.WITNESS_BUDGET)
    assert checked, "emitted orthogonal subset failed its own check"
    return {
        "text": str(w),
        "json": _witness_json(w, checked=oracle.WITNESS_BUDGET),
    }


def _cmd_idwitness(args) -> dict:
    q = text.parse_query(args.query)
    w = membership.id_witness(q)
    checked = oracle.check_witness(w, q, oracle.WITNESS_BUDGET)
    assert checked, "emitted domination witness failed its own check"
    if isinstance(w, DominatingBranch):
        txt = f"dominating branch {w}"
    else:
        sample = ", ".join(trees.format_seq_elem(u) for u in w.elements(4))
        txt = f"unbounded family: {sample}, ..."
    return {"text": txt, "json": _witness_json(w, checked=oracle.WITNESS_BUDGET)}


def _witness_json(w, checked: Budget | None) -> dict:
    budget = (
        {"depth": checked.depth, "width": checked.width, "count": checked.count}
        if checked
        else None
    )
    if isinstance(w, DominatingBranch):
        return {
            "kind": "dominating-branch",
            "data": {"prefix": list(w.prefix), "period": list(w.period)},
            "checkedAtBudget": budget,
        }
    if isinstance(w, UnboundedFamily):
        return {
            "kind": "unbounded-family",
            "data": {"elements": [list(u) for u in w.elements(12)]},
            "checkedAtBudget": budget,
        }
    if isinstance(w, EmbeddingWitness):
        return {
            "kind": "embedding",
            "data": {
                "label": w.label,
                "provenance": list(w.provenance),
                "generatedTree": w.generated,
                "sampleImages": [list(w.map((k,))) for k in range(4)],
            },
            "checkedAtBudget": budget,
        }
    return {
        "kind": "frechet-subset",
        "data": {"query": str(w)},
        "checkedAtBudget": budget,
    }


def _cmd_enumerate(args) -> dict:
    q = text.parse_query(args.query)
    try:
        d, w, c = (int(x) for x in args.budget.split(","))
    except ValueError as exc:
        raise ParseError(f"budget must be D,W,C: {args.budget!r}") from exc
    elems = oracle.enumerate_schema(q, Budget(d, w, c))
    return {
        "text": "\n".join(trees.format_seq_elem(u) for u in elems) or "(no elements)",
        "json": {
            "budget": {"depth": d, "width": w, "count": c},
            "elements": [list(u) for u in elems],
        },
    }


def _cmd_selftest(args) -> dict:
    report = oracle.law_suite(args.seed, args.trials)
    lines = [
        f"{'ok  ' if law.failures == 0 else 'FAIL'} {law.name}: "
        f"{law.trials - law.failures}/{law.trials}"
        + (f"  first: {law.first_counterexample}" if law.failures else "")
        for law in report.laws
    ]
    lines.append("all laws hold" if report.all_pass else "LAW VIOLATED")
    return {
        "text": "\n".join(lines),
        "json": report.to_json(),
        "exit": 0 if report.all_pass else 3,
    }


def _cmd_wo_classify(args) -> dict:
    out = orders.wo_classify(text.parse_order(args.order))
    return _wo_payload(out)


def _wo_payload(out: orders.WoClass) -> dict:
    if isinstance(out, orders.Scattered):
        return {
            "text": f"scattered, {out.form}",
            "json": {"scattered": True, "form": _form_json(out.form)},
        }
    emb = out.embedding
    sample = [str(emb.map(Fraction(k))) for k in (-1, 0, 1)]
    return {
        "text": f"NON-SCATTERED (dense embedding; images of -1,0,1: {', '.join(sample)})",
        "json": {
            "scattered": False,
            "witness": {
                "kind": "order-embedding",
                "data": {"path": [list(p) if isinstance(p, tuple) else p for p in emb.path],
                          "sampleImages": sample},
                "checkedAtBudget": None,
            },
        },
    }


def _cmd_wo_reverse(args) -> dict:
    rev, out = orders.wo_self_dual(text.parse_order(args.order))
    inner = _wo_payload(out)
    return {
        "text": f"{rev}\n{inner['text']}",
        "json": {"reversal": str(rev), "classification": inner["json"]},
    }


def _cmd_wo_rationalize(args) -> dict:
    values = orders.rationalize(text.parse_order(args.order), args.count)
    return {
        "text": ", ".join(str(v) for v in values),
        "json": {"rationals": [str(v) for v in values]},
    }


if __name__ == "__main__":
    sys.exit(main())
