"""Acceptance gate.

Thirteen criteria, each re-deriving a family of results by independent
routes and requiring exact agreement at the stated bounds.  Every check
is integer arithmetic; there are no tolerances anywhere.  Each test
prints a single summary line on success.
"""

import json

import test_cli

from lahbell.bell import (
    FACTORIALS,
    ONES,
    SequenceSpec,
    complete_bell,
    complete_lah_bell,
    complete_r_lah_bell,
    complete_r_lah_bell_expansion,
    incomplete_bell,
    incomplete_lah_bell,
    incomplete_r_bell,
    incomplete_r_lah_bell,
    lah_bell_polynomial,
)
from lahbell.exact_core import factorial, lah, lah_bell_number, r_lah_bell_number, rlah
from lahbell.partitions import lah_via_pi, rlah_via_lambda
from lahbell.poly import SCALAR_X, Variable, var
from lahbell.series import exp, faa_di_bruno_check, from_sequence, gf_expand

X = SequenceSpec.symbolic("x")
A = SequenceSpec.symbolic("a")
B = SequenceSpec.symbolic("b")
Y = SequenceSpec.symbolic("y")


def _report(line):
    print("PASS: " + line)


def test_criterion_01_row_totals_three_routes():
    n_max = 25
    es = exp(from_sequence(ONES, "ordinary", 1, n_max))
    for n in range(n_max + 1):
        closed = lah_bell_number(n)
        witness = complete_bell(n, FACTORIALS).as_int()
        series = es.egf_coefficient(n).as_int()
        assert closed == witness == series, n
    _report(f"row totals agree across closed form, witness sum, series (n<={n_max})")


def test_criterion_02_triangle_three_routes():
    n_max = 18
    columns = {k: gf_expand("lah", n_max, k=k) for k in range(n_max + 1)}
    for n in range(n_max + 1):
        for k in range(n + 1):
            closed = lah(n, k)
            witness = lah_via_pi(n, k)
            series = columns[k][n].as_int()
            assert closed == witness == series, (n, k)
    _report(f"triangle agrees across closed form, witness sum, series (n<={n_max})")


def test_criterion_03_extended_triangle_three_routes():
    n_max, r_max = 12, 3
    for r in range(r_max + 1):
        columns = {k: gf_expand("r-lah", n_max, k=k, r=r) for k in range(n_max + 1)}
        for n in range(n_max + 1):
            for k in range(n + 1):
                closed = rlah(n, k, r)
                witness = rlah_via_lambda(n, k, r)
                series = columns[k][n].as_int()
                assert closed == witness == series, (n, k, r)
    _report(
        f"extended triangle agrees across closed form, witness sum, series "
        f"(n<={n_max}, r<={r_max})"
    )


def test_criterion_04_extended_row_totals_vs_series():
    n_max, r_max = 15, 3
    for r in range(r_max + 1):
        series = gf_expand("r-lah-bell", n_max, r=r)
        for n in range(n_max + 1):
            closed = r_lah_bell_number(n, r)
            row_sum = sum(rlah(n, k, r) for k in range(n + 1))
            assert closed == row_sum == series[n].as_int(), (n, r)
    _report(f"extended row totals agree with their series (n<={n_max}, r<={r_max})")


def test_criterion_05_weighting_bridge_and_homogeneity():
    n_max = 10
    for n in range(n_max + 1):
        mapping = {
            Variable("x", i): factorial(i) * var(Variable("x", i))
            for i in range(1, n + 2)
        }
        for k in range(n + 1):
            plain = incomplete_bell(n, k, X)
            ordered = incomplete_lah_bell(n, k, X)
            assert ordered == plain.substitute_all(mapping), (n, k)
            for alpha in range(-3, 4):
                scaled = ordered.substitute_all(
                    {
                        Variable("x", i): alpha * var(Variable("x", i))
                        for i in range(1, n + 2)
                    }
                )
                assert scaled == alpha ** k * ordered, (n, k, alpha)
    _report(
        f"ordered-block partials are factorially weighted plain ones and "
        f"degree-k homogeneous (n<={n_max}, alpha in -3..3)"
    )


def test_criterion_06_complete_splits_into_partials():
    n_max = 10
    for n in range(1, n_max + 1):
        total = sum(
            (incomplete_lah_bell(n, k, X) for k in range(1, n + 1)),
            incomplete_lah_bell(n, 0, X),
        )
        assert complete_lah_bell(n, X) == total, n
    _report(f"complete polynomial equals the sum of its partials (1<=n<={n_max})")


def test_criterion_07_equal_arguments_row_polynomial():
    n_max = 12
    x = var(SCALAR_X)
    uniform = SequenceSpec.uniform(x)
    for n in range(n_max + 1):
        assert complete_lah_bell(n, uniform) == lah_bell_polynomial(n, 0, x), n
    _report(f"equal-argument complete polynomial is the row polynomial (n<={n_max})")


def test_criterion_08_extended_weighting_bridge():
    n_max, r_max = 10, 2
    for n in range(n_max + 1):
        mapping = {
            Variable("a", i): factorial(i) * var(Variable("a", i))
            for i in range(1, n + 2)
        }
        mapping.update(
            {
                Variable("b", j): factorial(j - 1) * var(Variable("b", j))
                for j in range(1, n + 3)
            }
        )
        for r in range(r_max + 1):
            for k in range(n + 1):
                ordered = incomplete_r_lah_bell(n, k, r, A, B)
                plain = incomplete_r_bell(n, k, 2 * r, A, B)
                assert ordered == plain.substitute_all(mapping), (n, k, r)
    _report(
        f"extended partials are factorially weighted partition ones "
        f"(n<={n_max}, r<={r_max})"
    )


def test_criterion_09_all_ones_specializations():
    n_max, r_max = 12, 3
    x = var(SCALAR_X)
    for n in range(n_max + 1):
        for r in range(r_max + 1):
            assert complete_r_lah_bell(n, r, x, ONES, ONES) == lah_bell_polynomial(
                n, r, x
            ), (n, r)
            for k in range(n + 1):
                assert incomplete_r_lah_bell(n, k, r, ONES, ONES).as_int() == rlah(
                    n, k, r
                ), (n, k, r)
    _report(
        f"all-ones specializations give the row polynomial and the triangle "
        f"(n<={n_max}, r<={r_max})"
    )


def test_criterion_10_expansion_vs_series():
    n_max, r_max = 8, 2
    for r in range(r_max + 1):
        series = gf_expand("complete-generic", n_max, r=r, x=1, a=X, b=Y)
        for n in range(n_max + 1):
            assert complete_r_lah_bell_expansion(n, r, X, Y) == series[n], (n, r)
    _report(
        f"partition-composition expansion matches the series route "
        f"(n<={n_max}, r<={r_max}, symbolic arguments)"
    )


def test_criterion_11_scalar_partial_sums():
    n_max, r_max = 10, 2
    x = var(SCALAR_X)
    uniform = SequenceSpec.uniform(x)
    for n in range(n_max + 1):
        for r in range(r_max + 1):
            total = sum(
                (incomplete_r_lah_bell(n, k, r, uniform, ONES) for k in range(n + 1)),
                incomplete_r_lah_bell(n, 0, r, uniform, ONES) * 0,
            )
            assert total == lah_bell_polynomial(n, r, x), (n, r)
    _report(
        f"scalar-argument partial sums rebuild the row polynomial "
        f"(n<={n_max}, r<={r_max})"
    )


def test_criterion_12_derivatives_match_partition_values():
    m_max = 10
    for m in range(1, m_max + 1):
        chk = faa_di_bruno_check(m)
        assert chk.passed, (m, chk.series_value, chk.partition_value)
    _report(f"series derivatives at zero match the witness values (m<={m_max})")


def test_criterion_13_cli_contract(capsys):
    code, out = test_cli.run_cli(capsys, ["verify", "--suite", "all"])
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "20 of 20 identities passed"
    assert all(line.startswith("PASS ") for line in lines[:-1])

    code, blob = test_cli.run_cli(
        capsys, ["verify", "--suite", "all", "--format", "json"]
    )
    assert code == 0
    doc = json.loads(blob)
    assert doc["all_passed"] is True
    assert len(doc["results"]) == 20

    for argv, filename in test_cli.GOLDEN_CASES:
        code, got = test_cli.run_cli(capsys, argv)
        assert code == 0
        assert got == (test_cli.GOLDEN / filename).read_text(), argv
    _report(
        "command-line verification passes at default bounds and golden "
        "invocations are byte-exact"
    )
