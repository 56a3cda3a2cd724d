"""Command line behavior: grammar, output formats, exit codes."""

import json

import pytest

from partizan.cli import IntLit, SeqExpr, StarLit, SumExpr, parse_expr, run
from partizan.closed_form import STAR, eval_seq
from partizan.properties import REGISTRY
from partizan.values import ParseError, parse_uptimal


def test_parse_expr_shapes():
    node = parse_expr("(-3) -> * -> 2")
    assert isinstance(node, SeqExpr)
    assert node.parts == (IntLit(-3), StarLit(), IntLit(2))
    node = parse_expr("* + *")
    assert isinstance(node, SumExpr)
    assert node.parts == (StarLit(), StarLit())
    # parentheses flatten through the associative operators
    assert parse_expr("(1 -> 2) -> 3") == parse_expr("1 -> (2 -> 3)")
    assert parse_expr("1") == IntLit(1)


def test_parse_expr_error_offsets():
    with pytest.raises(ParseError) as info:
        parse_expr("1 -> -> 2")
    assert info.value.position == 5
    with pytest.raises(ParseError):
        parse_expr("")
    with pytest.raises(ParseError):
        parse_expr("1 + ")
    with pytest.raises(ParseError):
        parse_expr("(1 -> 2")
    with pytest.raises(ParseError):
        parse_expr("1 ? 2")


def test_eval_prints_value_and_outcome(capsys):
    assert run(["eval", "(-1) -> (-3) -> (-1)"]) == 0
    out = capsys.readouterr().out
    assert "value: -5" in out and "outcome: R" in out
    assert run(["eval", "* -> * -> *"]) == 0
    out = capsys.readouterr().out
    assert "value: *" in out and "outcome: N" in out


def test_outcome_and_compare(capsys):
    assert run(["outcome", "* + *"]) == 0
    assert capsys.readouterr().out.strip() == "P"
    assert run(["compare", "*", "0"]) == 0
    assert capsys.readouterr().out.strip() == "||"
    assert run(["compare", "1 -> 1 -> *", "(-1) -> 5"]) == 0
    assert capsys.readouterr().out.strip() == "<"


def test_parse_error_exit_code(capsys):
    assert run(["eval", "1 -> -> 2"]) == 1
    err = capsys.readouterr().err
    assert "offset 5" in err


def test_budget_exit_code(capsys):
    assert run(["outcome", "999999"]) == 2
    assert capsys.readouterr().err != ""
    assert run(["outcome", "* + * + * + * + *", "--max-nodes", "2"]) == 2


def test_json_record_round_trips(capsys):
    expr = "1 -> -1 -> * -> 3 -> -1 -> 1 -> * -> * -> * -> * -> -2 -> 1"
    assert run(["eval", expr, "--json"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["expr"] == expr
    assert record["outcome"] == "L"
    assert record["pipeline"] == "prepend"
    assert isinstance(record["nodes_used"], int)
    assert record["elapsed_ms"] >= 0
    want = eval_seq((1, -1, STAR, 3, -1, 1, STAR, STAR, STAR, STAR, -2, 1))
    assert parse_uptimal(record["value"]) == want


def test_pipelines_print_identical_values(capsys):
    expr = "1 -> -1 -> * -> -1"
    lines = []
    for pipeline in ("prepend", "blocks", "solver"):
        assert run(["eval", expr, "--pipeline", pipeline]) == 0
        lines.append(capsys.readouterr().out.splitlines()[0])
    assert lines[0] == lines[1] == lines[2]


def test_oracle_flag_certifies(capsys):
    assert run(["eval", "2 -> * -> -1", "--oracle"]) == 0
    out = capsys.readouterr().out
    assert "MISMATCH" not in out


def test_solver_only_expressions_report_outcome(capsys):
    assert run(["eval", "(1 + *) -> 2"]) == 0
    out = capsys.readouterr().out
    assert "value:" not in out and "outcome: L" in out
    assert run(["eval", "(1 + *) -> 2", "--json"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["value"] is None and record["outcome"] == "L"


def test_verify_subcommand(capsys):
    assert run(["verify", "uptimal_star_order"]) == 0
    out = capsys.readouterr().out
    assert "prop=uptimal_star_order status=ok" in out
    assert run(["verify", "uptimal_star_order", "--json"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["ok"] is True and record["property"] == "uptimal_star_order"
    assert run(["verify", "nonsense"]) == 2
    assert "unknown property" in capsys.readouterr().err


def test_verify_failure_exit_code(capsys, monkeypatch):
    def always_fails(arena, solver, seed, max_birthday):
        return 1, [("{|} demo", "0", "*")], "synthetic"

    monkeypatch.setitem(REGISTRY, "synthetic_failure", always_fails)
    assert run(["verify", "synthetic_failure"]) == 3
    out = capsys.readouterr().out
    assert "status=FAIL" in out and "counterexample" in out


def test_verify_seed_flag_changes_report(capsys):
    assert run(["verify", "pipelines_agree", "--seed", "9"]) == 0
    assert "seed=9" in capsys.readouterr().out
