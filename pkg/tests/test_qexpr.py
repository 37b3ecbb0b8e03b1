import random

import pytest
from hypothesis import given, settings, strategies as st

from overpart.qexpr import (
    EvalError,
    Mono,
    ParseError,
    Paren,
    Poch,
    Power,
    Product,
    Quotient,
    evaluate,
    evaluate_x,
    parse,
    unparse,
)
from overpart.series import IllFormedMonomial, NonUnitConstantTerm, QSeries, residue_product


def test_parse_c_generating_function_shape():
    ast = parse("(q^2,q^3,q^5;q^5)_inf * (-q;q)_inf / (q;q)_inf")
    assert isinstance(ast, Quotient)
    assert isinstance(ast.lhs, Product)
    assert isinstance(ast.lhs.lhs, Poch)
    assert len(ast.lhs.lhs.args) == 3
    assert ast.lhs.lhs.length is None


def test_parse_finite_length_pochhammer():
    ast = parse("(q;q)_0")
    assert isinstance(ast, Poch) and ast.length == 0
    assert evaluate(ast, 5) == QSeries.one(5)


def test_parse_rejects_constant_pochhammer_argument():
    with pytest.raises(IllFormedMonomial):
        parse("(1;q)_inf")
    with pytest.raises(IllFormedMonomial):
        parse("(q;1)_inf")


def test_unicode_infinity_alias():
    assert parse("(q;q)_∞") == parse("(q;q)_inf")


def test_round_trip_examples():
    for text in [
        "(q^2,q^3,q^5;q^5)_inf * (-q;q)_inf / (q;q)_inf",
        "(q;q)_inf^-1",
        "1",
        "-xq^3",
        "((q;q)_inf)",
        "(q;q)_3 * (-q^2;q^2)_inf",
        "x^2q^5 / (q;q)_inf",
    ]:
        ast = parse(text)
        assert parse(unparse(ast)) == ast, text


def test_positions_are_one_based_line_column():
    with pytest.raises(ParseError) as err:
        parse("(q;q)_inf *\n )")
    assert err.value.line == 2 and err.value.column == 2
    with pytest.raises(ParseError) as err:
        parse("q^")
    assert str(err.value).startswith("1:3:")


def test_evaluate_overpartition_generating_function():
    assert evaluate("(-q;q)_inf/(q;q)_inf", 4).coeffs == (1, 2, 4, 8, 14)


def test_evaluate_inverse_pair_is_one():
    assert evaluate("(q;q)_inf * (q;q)_inf^-1", 12) == QSeries.one(12)


def test_evaluate_literal_one():
    assert evaluate("1", 3).coeffs == (1, 0, 0, 0)


def test_evaluate_power_tower_and_sign():
    assert evaluate("-q^2", 4).coeffs == (0, 0, -1, 0, 0)
    assert evaluate("(q;q)_2^2", 6) == evaluate("(q;q)_2", 6) * evaluate("(q;q)_2", 6)


def test_evaluate_cgen_matches_residue_product():
    lhs = evaluate("(q^2,q^3,q^5;q^5)_inf * (-q;q)_inf / (q;q)_inf", 28)
    rhs = residue_product(5, {1, 4}, frozenset(range(5)), 28)
    assert lhs == rhs


def test_quotient_needs_unit_denominator():
    with pytest.raises(NonUnitConstantTerm) as err:
        evaluate("q / q", 4)
    assert "1:3" in str(err.value)
    with pytest.raises(NonUnitConstantTerm):
        evaluate("(q;q)_inf / (q*q)", 4)


def test_negative_power_needs_unit_base():
    with pytest.raises(NonUnitConstantTerm):
        evaluate("(q*q)^-1", 4)


def test_x_requires_bivariate_evaluation():
    with pytest.raises(EvalError):
        evaluate("(-xq;q)_inf", 4)
    w = evaluate_x("(-xq;q)_inf", 5)
    assert w.coeff(1, 3) == 1 and w.coeff(0, 0) == 1
    assert evaluate_x("(-xq;q)_inf", 5).at_x_one() == evaluate("(-q;q)_inf", 5)


def test_negative_q_exponent_is_an_eval_error():
    with pytest.raises(EvalError):
        evaluate("q^-1", 4)


_ALPHABET = "xq^*/-(),;_ 0123456789∞" + "inf"


def test_fuzz_totality_seeded():
    rng = random.Random(20814)
    outcomes = {"ok": 0, "err": 0}
    for _ in range(2000):
        text = "".join(rng.choices(_ALPHABET, k=rng.randrange(0, 30)))
        try:
            parse(text)
            outcomes["ok"] += 1
        except (ParseError, IllFormedMonomial):
            outcomes["err"] += 1
    assert sum(outcomes.values()) == 2000
    assert outcomes["err"] > 0


@given(st.text(max_size=40))
@settings(max_examples=300)
def test_fuzz_totality_arbitrary_text(text):
    try:
        ast = parse(text)
    except ParseError as err:
        assert err.line >= 1 and err.column >= 1
    except IllFormedMonomial:
        pass
    else:
        assert parse(unparse(ast)) == ast
