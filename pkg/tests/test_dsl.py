"""The query language: lexing, parsing, diagnostics, and evaluation."""

import pathlib

import pytest

from hocolim import dsl
from hocolim.documents import Environment


FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def ctx(N=3):
    return dsl.EvalContext(env=Environment(FIXTURES, truncation=N),
                           truncation=N)


def test_parse_pretty_roundtrip():
    for text in (
        "simplex(2)",
        "boundary(3)",
        "horn(2, 1)",
        "product(simplex(1), boundary(2))",
        "coproduct(simplex(0), simplex(0), simplex(1))",
        "hocolim[bk](pushout)",
        "naive_hocolim[srep](point, boundary(2))",
        "homology(nerve(z2))",
        "check_we(s0_over_pt)",
    ):
        e = dsl.parse(text)
        assert dsl.pretty(e) == text
        assert dsl.parse(dsl.pretty(e)) == e


def test_whitespace_insensitive():
    a = dsl.parse("product( simplex(1),\n  boundary(2) )")
    b = dsl.parse("product(simplex(1),boundary(2))")
    assert a == b


def test_lex_error_has_position():
    with pytest.raises(dsl.DslError) as ei:
        dsl.parse("simplex(2) + 1")
    assert ei.value.code == "E-LEX"
    assert (ei.value.line, ei.value.col) == (1, 12)


def test_syntax_errors():
    for text in ("simplex(2", "product(,)", "", "simplex(2))",
                 "hocolim[bk]", "hocolim[2](pushout)"):
        with pytest.raises(dsl.DslError) as ei:
            dsl.parse(text)
        assert ei.value.code == "E-SYN", text


def test_arity_errors():
    for text in ("frobnicate(1)", "simplex(1, 2)", "horn(2)",
                 "simplex[bk](2)", "hocolim[newton](pushout)"):
        with pytest.raises(dsl.DslError) as ei:
            dsl.parse(text)
        assert ei.value.code == "E-ARITY", text


def test_unbound_reference():
    c = ctx()
    with pytest.raises(dsl.DslError) as ei:
        dsl.eval_sset(dsl.parse("no_such_document"), c)
    assert ei.value.code == "E-UNBOUND"
    with pytest.raises(dsl.DslError) as ei:
        dsl.eval_sset(dsl.parse("s0"), dsl.EvalContext(env=None))
    assert ei.value.code == "E-UNBOUND"


def test_eval_basic_ssets():
    c = ctx()
    X = dsl.eval_sset(dsl.parse("boundary(2)"), c)
    assert X.size(0) == 3
    Y = dsl.eval_sset(dsl.parse("s0"), c)
    assert Y.size(0) == 2
    P = dsl.eval_sset(dsl.parse("product(s0, s0)"), c)
    assert P.size(0) == 4
    Q = dsl.eval_sset(dsl.parse("coproduct(point, point)"), c)
    assert Q.size(0) == 2


def test_evaluate_homology_golden():
    rep = dsl.evaluate(dsl.parse("homology(boundary(3))"), ctx())
    degs = rep["report"]["degrees"]
    assert degs[0] == {"betti": 1, "torsion": []}
    assert degs[1] == {"betti": 0, "torsion": []}
    assert degs[2] == {"betti": 1, "torsion": []}


def test_evaluate_nerve_torsion():
    rep = dsl.evaluate(dsl.parse("homology(nerve(z2))"), ctx(N=4))
    assert rep["report"]["degrees"][1] == {"betti": 0, "torsion": [2]}


def test_evaluate_hocolim_methods_agree():
    c = ctx()
    a = dsl.evaluate(dsl.parse("hocolim[srep](pushout)"), c)
    b = dsl.evaluate(dsl.parse("hocolim[bk](pushout)"), c)
    # the pushout of two segments along two points is a circle
    for rep in (a, b):
        assert rep["homology"]["degrees"][0] == {"betti": 1, "torsion": []}
        assert rep["homology"]["degrees"][1] == {"betti": 1, "torsion": []}
    assert dsl.evaluate(dsl.parse("colim(pushout)"), c)["sizes"][0] == 1


def test_evaluate_check_queries_carry_exit_codes():
    c = ctx()
    good = dsl.evaluate(dsl.parse("check_we(id_s0)"), c)
    assert good["iso"] and good["exit_code"] == 0
    bad = dsl.evaluate(dsl.parse("check_we(collapse)"), c)
    assert not bad["iso"] and bad["exit_code"] == 1
    eq = dsl.evaluate(dsl.parse("hocored_check(hocored_equivalence)"), c)
    assert eq["exit_code"] == 0
    neg = dsl.evaluate(dsl.parse("hocored_check(hocored_negative)"), c)
    assert neg["exit_code"] == 1


def test_quotient_by_identical_maps_is_target():
    c = ctx()
    X = dsl.eval_sset(
        dsl.parse("quotient(point, collapse, collapse)"), c)
    assert X.size(0) == 1
