"""Command line front end.

Expressions combine integers and `*` with `->` for sequential compounds and
`+` for disjunctive sums; parentheses group.  Values print in the uptimal
notation, outcomes as single letters.  Exit codes: 0 ok, 1 expression parse
error, 2 budget or form error, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from time import perf_counter

from .arena import Arena, BudgetExceeded
from .closed_form import PIPELINES, STAR, FormError, eval_seq
from .properties import REGISTRY, UnknownPropertyError, verify
from .solver import Solver
from .values import (
    ParseError,
    Relation,
    format_uptimal,
    uptimal_sign,
    uptimal_to_position,
)


class Expr:
    """Marker base for parsed expression nodes."""


@dataclass(frozen=True)
class IntLit(Expr):
    value: int


@dataclass(frozen=True)
class StarLit(Expr):
    pass


@dataclass(frozen=True)
class SeqExpr(Expr):
    parts: tuple


@dataclass(frozen=True)
class SumExpr(Expr):
    parts: tuple


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch == "*":
            tokens.append(("star", "*", i))
            i += 1
        elif ch == "+":
            tokens.append(("plus", "+", i))
            i += 1
        elif ch == "(":
            tokens.append(("lparen", "(", i))
            i += 1
        elif ch == ")":
            tokens.append(("rparen", ")", i))
            i += 1
        elif ch == "-":
            if text.startswith("->", i):
                tokens.append(("arrow", "->", i))
                i += 2
            elif i + 1 < n and text[i + 1].isdigit():
                j = i + 1
                while j < n and text[j].isdigit():
                    j += 1
                tokens.append(("int", text[i:j], i))
                i = j
            else:
                raise ParseError("expected '>' or digits after '-'", i)
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def atom(self) -> Expr:
        kind, text, offset = self.take()
        if kind == "int":
            return IntLit(int(text))
        if kind == "star":
            return StarLit()
        if kind == "lparen":
            node = self.expr()
            kind2, _, offset2 = self.take()
            if kind2 != "rparen":
                raise ParseError("expected ')'", offset2)
            return node
        raise ParseError("expected an integer, '*', or '('", offset)

    def sumterm(self) -> Expr:
        parts = [self.atom()]
        while self.peek()[0] == "arrow":
            self.take()
            parts.append(self.atom())
        # the compound is associative on ids, so nested chains flatten
        flat: list = []
        for p in parts:
            if isinstance(p, SeqExpr):
                flat.extend(p.parts)
            else:
                flat.append(p)
        return flat[0] if len(flat) == 1 else SeqExpr(tuple(flat))

    def expr(self) -> Expr:
        parts = [self.sumterm()]
        while self.peek()[0] == "plus":
            self.take()
            parts.append(self.sumterm())
        flat: list = []
        for p in parts:
            if isinstance(p, SumExpr):
                flat.extend(p.parts)
            else:
                flat.append(p)
        return flat[0] if len(flat) == 1 else SumExpr(tuple(flat))


def parse_expr(text: str) -> Expr:
    """Parse an expression; sums of compound chains of integers and stars."""
    parser = _Parser(text)
    node = parser.expr()
    kind, _, offset = parser.peek()
    if kind != "end":
        raise ParseError("unexpected trailing input", offset)
    return node


def build_game(arena: Arena, node: Expr) -> int:
    if isinstance(node, IntLit):
        return arena.integer(node.value)
    if isinstance(node, StarLit):
        return arena.star()
    if isinstance(node, SeqExpr):
        return arena.seq_many([build_game(arena, p) for p in node.parts])
    g = arena.zero
    for p in node.parts:
        g = arena.add(g, build_game(arena, p))
    return g


def _position(arena: Arena, node: Expr):
    """Top-level summands as separate components, for the multiset solver."""
    parts = node.parts if isinstance(node, SumExpr) else (node,)
    return tuple(build_game(arena, p) for p in parts)


def _closed_summands(node: Expr):
    """Component lists when every summand mixes only integers and stars."""
    out = []
    for part in node.parts if isinstance(node, SumExpr) else (node,):
        chain = part.parts if isinstance(part, SeqExpr) else (part,)
        comps: list = []
        for atom in chain:
            if isinstance(atom, IntLit):
                comps.append(atom.value)
            elif isinstance(atom, StarLit):
                comps.append(STAR)
            else:
                return None
        out.append(comps)
    return out


_RELATION_OUTCOME = {
    Relation.GT: "L",
    Relation.LT: "R",
    Relation.EQ: "P",
    Relation.CONFUSED: "N",
}


def _emit(args, record: dict, text_lines: list) -> None:
    if getattr(args, "json", False):
        print(json.dumps(record))
    else:
        for line in text_lines:
            print(line)


def _cmd_eval(args) -> int:
    t0 = perf_counter()
    arena = Arena(args.max_nodes) if args.max_nodes else Arena()
    solver = Solver(arena)
    node = parse_expr(args.expr)
    summands = _closed_summands(node)
    value = None
    if summands is not None:
        base = args.pipeline if args.pipeline in PIPELINES else PIPELINES[0]
        value = eval_seq(summands[0], base)
        for comps in summands[1:]:
            value = value + eval_seq(comps, base)
    mismatch = False
    if value is not None:
        outcome = _RELATION_OUTCOME[uptimal_sign(value, solver)]
        if args.oracle or args.pipeline == "solver":
            rel = solver.compare_positions(
                _position(arena, node), uptimal_to_position(arena, value)
            )
            mismatch = rel != Relation.EQ
    else:
        outcome = solver.sum_outcome(_position(arena, node)).value
    elapsed = round((perf_counter() - t0) * 1000, 3)
    record = {
        "expr": args.expr,
        "value": None if value is None else format_uptimal(value),
        "outcome": outcome,
        "pipeline": args.pipeline,
        "nodes_used": arena.node_count,
        "elapsed_ms": elapsed,
    }
    lines = [] if value is None else [f"value: {format_uptimal(value)}"]
    lines.append(f"outcome: {outcome}")
    if mismatch:
        lines.append("MISMATCH: solver disagrees with the closed form")
        _emit(args, dict(record, mismatch=True), lines)
        return 3
    _emit(args, record, lines)
    return 0


def _cmd_outcome(args) -> int:
    t0 = perf_counter()
    arena = Arena(args.max_nodes) if args.max_nodes else Arena()
    solver = Solver(arena)
    node = parse_expr(args.expr)
    outcome = solver.sum_outcome(_position(arena, node)).value
    elapsed = round((perf_counter() - t0) * 1000, 3)
    record = {
        "expr": args.expr,
        "value": None,
        "outcome": outcome,
        "pipeline": None,
        "nodes_used": arena.node_count,
        "elapsed_ms": elapsed,
    }
    _emit(args, record, [outcome])
    return 0


def _cmd_compare(args) -> int:
    t0 = perf_counter()
    arena = Arena(args.max_nodes) if args.max_nodes else Arena()
    solver = Solver(arena)
    left = _position(arena, parse_expr(args.left))
    right = _position(arena, parse_expr(args.right))
    rel = solver.compare_positions(left, right)
    elapsed = round((perf_counter() - t0) * 1000, 3)
    record = {
        "expr": f"({args.left}) vs ({args.right})",
        "value": None,
        "outcome": rel.value,
        "pipeline": None,
        "nodes_used": arena.node_count,
        "elapsed_ms": elapsed,
    }
    _emit(args, record, [rel.value])
    return 0


def _cmd_verify(args) -> int:
    names = list(REGISTRY) if args.property == "all" else [args.property]
    failed = False
    for name in names:
        report = verify(
            name,
            seed=args.seed,
            max_birthday=args.max_birthday,
            max_nodes=args.max_nodes,
        )
        if args.json:
            print(
                json.dumps(
                    {
                        "property": report.name,
                        "ok": report.ok,
                        "instances": report.instances,
                        "failures": [list(f) for f in report.failures],
                        "seed": report.seed,
                        "bounds": report.bounds,
                    }
                )
            )
        else:
            for line in report.lines():
                print(line)
        failed = failed or not report.ok
    return 3 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="partizan",
        description="evaluate, compare, and verify sequential compounds of partizan games",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--max-nodes", type=int, default=None, help="game node budget")

    p_eval = sub.add_parser("eval", help="print the value and outcome of an expression")
    p_eval.add_argument("expr")
    p_eval.add_argument(
        "--pipeline",
        choices=PIPELINES + ("solver",),
        default=PIPELINES[0],
        help="closed-form route, or solver to certify the result by search",
    )
    p_eval.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check any closed-form value against the solver",
    )
    common(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    p_out = sub.add_parser("outcome", help="print the outcome letter of an expression")
    p_out.add_argument("expr")
    common(p_out)
    p_out.set_defaults(func=_cmd_outcome)

    p_cmp = sub.add_parser("compare", help="print <, >, =, or || for two expressions")
    p_cmp.add_argument("left")
    p_cmp.add_argument("right")
    common(p_cmp)
    p_cmp.set_defaults(func=_cmd_compare)

    p_ver = sub.add_parser("verify", help="run a verification suite, or all of them")
    p_ver.add_argument("property", metavar="property_id|all")
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--max-birthday", type=int, default=None)
    common(p_ver)
    p_ver.set_defaults(func=_cmd_verify)
    return top


def run(argv) -> int:
    """Execute one command line; returns the process exit code."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except (BudgetExceeded, FormError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnknownPropertyError as exc:
        known = ", ".join(REGISTRY)
        print(f"unknown property {exc}; known: {known}", file=sys.stderr)
        return 2


def console_entry() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    console_entry()
