"""Acceptance criteria, one test and one printed verdict line each.

Each test prints `[criterion NN] PASS/FAIL ...` directly to the terminal
(bypassing capture) and then asserts, so a full run shows ten lines.
Criteria with exhaustive birthday sweeps run them at birthday 2, the largest
level that exists in full (level sizes grow 1, 4, 256, 2**512: birthday 3
can never be enumerated), and add the demanded random samples on top.
"""

import time

import pytest

from partizan.arena import Arena, BudgetExceeded
from partizan.closed_form import PIPELINES, STAR, compound_game, eval_seq
from partizan.properties import enumerate_games, verify
from partizan.solver import OutcomeClass, Solver
from partizan.values import Dyadic, UptimalValue, format_uptimal

SIX_CHAINS = [
    ((-1, -3, -1), "-5"),
    ((-1, -1, 1, -1, 1, 3), "57/16"),
    ((STAR, STAR, STAR), "*"),
    ((1, -1, STAR, 3, -1, 1, STAR, STAR, STAR, STAR, -2, 1), "0.43331 + * + 1/4"),
    ((-1, 1, -1, STAR, -1, 1, STAR, 4, -1), "-0.3321 - 1/16"),
    ((STAR, STAR, STAR, STAR, STAR, STAR, -2, 2), "5/4"),
]


def _verdict(capsys, number, ok, detail):
    status = "PASS" if ok else "FAIL"
    line = f"[criterion {number:02d}] {status} {detail}"
    with capsys.disabled():
        print(line)
    assert ok, line


def _run_suites(names, seed=0):
    reports = [verify(name, seed=seed) for name in names]
    ok = all(r.ok for r in reports)
    instances = sum(r.instances for r in reports)
    bad = [line for r in reports if not r.ok for line in r.lines()]
    return ok, instances, bad


def test_criterion_01_six_example_values(capsys):
    t0 = time.perf_counter()
    results = []
    for comps, expected in SIX_CHAINS:
        results.append(format_uptimal(eval_seq(comps)) == expected)
    elapsed = time.perf_counter() - t0
    ok = all(results) and elapsed < 1.0
    _verdict(
        capsys, 1, ok,
        f"six example chain values exact: {sum(results)}/6 in {elapsed:.3f}s (< 1s)",
    )


def test_criterion_02_aggregate_value_and_verdict(capsys):
    t0 = time.perf_counter()
    total = UptimalValue()
    for comps, _ in SIX_CHAINS:
        total = total + eval_seq(comps)
    digits_ok = (
        total.ups == (1, 0, 1, 2, 1)
        and total.star == 0
        and total.number == Dyadic(0)
    )
    arena = Arena()
    solver = Solver(arena)
    position = tuple(compound_game(arena, comps) for comps, _ in SIX_CHAINS)
    outcome = solver.sum_outcome(position)
    elapsed = time.perf_counter() - t0
    flag = (
        "flag: solver verdict on the aggregate is "
        f"{outcome.value}; the often-quoted verdict N (confused with 0) "
        "contradicts both the search and the positive digit string 0.10121"
    )
    ok = digits_ok and outcome == OutcomeClass.L and elapsed < 120.0
    _verdict(
        capsys, 2, ok,
        f"aggregate digits (1,0,1,2,1)/star 0/dyadic 0: {digits_ok}; "
        f"solver verdict {outcome.value} in {elapsed:.1f}s (< 120s); {flag}",
    )


def test_criterion_03_integer_chain_exhaustive(capsys):
    t0 = time.perf_counter()
    report = verify("int_chain_closed_form")
    elapsed = time.perf_counter() - t0
    ok = report.ok and elapsed < 60.0
    _verdict(
        capsys, 3, ok,
        f"integer chain closed form solver-equal: {report.instances} sign/shift "
        f"instances, {len(report.failures)} failures in {elapsed:.2f}s (< 60s)",
    )


def test_criterion_04_block_closed_form(capsys):
    t0 = time.perf_counter()
    report = verify("block_closed_form")
    elapsed = time.perf_counter() - t0
    ok = report.ok and elapsed < 600.0
    _verdict(
        capsys, 4, ok,
        f"block values solver-equal under both seeds plus one chained context: "
        f"{report.instances} instances, {len(report.failures)} failures in "
        f"{elapsed:.1f}s (< 600s)",
    )


def test_criterion_05_seq_outcome_formula(capsys):
    with pytest.raises(BudgetExceeded):
        enumerate_games(Arena(), 3)  # the full birthday-3 level cannot exist
    report = verify("seq_outcome_formula")
    ok = report.ok and report.instances >= 65536 + 500
    _verdict(
        capsys, 5, ok,
        f"compound outcome formula: {report.instances} pairs "
        f"(all 65536 birthday<=2 pairs; birthday 3 enumeration provably refused; "
        f"500 sampled birthday<=4), {len(report.failures)} failures",
    )


def test_criterion_06_misere_correspondence(capsys):
    report = verify("misere_eq_seq_star")
    ok = report.ok and report.instances >= 256 + 500
    _verdict(
        capsys, 6, ok,
        f"misere outcome equals outcome after a trailing star: {report.instances} "
        f"games (all 256 of birthday<=2, 500 sampled birthday<=5), "
        f"{len(report.failures)} failures",
    )


def test_criterion_07_algebra_suite(capsys):
    names = ["negate_involution", "seq_associative", "seq_identity", "seq_negate", "sum_negate_zero"]
    ok, instances, bad = _run_suites(names)
    _verdict(
        capsys, 7, ok,
        f"algebra laws (involution, associativity, identity, distribution, "
        f"inverse): {instances} instances across 5 suites; " + ("all pass" if ok else "; ".join(bad)),
    )


def test_criterion_08_compound_structure_laws(capsys):
    names = [
        "seq_dicotic_nonzero",
        "order_preserve_seq",
        "number_translation_seq",
        "star_star_identity",
        "star_reduction",
    ]
    ok, instances, bad = _run_suites(names)
    _verdict(
        capsys, 8, ok,
        f"dicotic closure, order preservation, number translation, star laws: "
        f"{instances} instances across 5 suites; " + ("all pass" if ok else "; ".join(bad)),
    )


def test_criterion_09_pipeline_equivalence(capsys):
    names = ["pipelines_agree", "eval_matches_solver"]
    ok, instances, bad = _run_suites(names)
    _verdict(
        capsys, 9, ok,
        f"prepend vs blocks on 1000 random length<=12 sequences and both vs "
        f"solver on every expanded length<=6 sequence: {instances} instances; "
        + ("all pass" if ok else "; ".join(bad)),
    )


def test_criterion_10_uptimal_suites(capsys):
    names = ["uptimal_option_bounds", "uptimal_chain_order", "uptimal_star_order", "uptimal_unique"]
    ok, instances, bad = _run_suites(names)
    _verdict(
        capsys, 10, ok,
        f"option bounds enumeration and comparison/star/uniqueness suites: "
        f"{instances} instances across 4 suites; " + ("all pass" if ok else "; ".join(bad)),
    )
