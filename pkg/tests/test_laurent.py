import pytest

from hlcluster.errors import NotDivisible, RankMismatch
from hlcluster.laurent import F, X, LaurentPoly, exact_div, format_factored, format_poly, min_f_exponents, parse_poly

N = 2


def P(text):
    return parse_poly(N, text)


def x(i, e=1):
    return LaurentPoly.variable(N, X, i, e)


def f(i, e=1):
    return LaurentPoly.variable(N, F, i, e)


def test_unit():
    assert x(1) * x(1, -1) == LaurentPoly.one(N)


def test_identity_mul():
    assert (x(2) + f(1)) * 1 == x(2) + f(1)


def test_distributivity():
    assert (x(2) + f(1)) * (x(1) + f(2)) == P("x1*x2 + x2*f2 + x1*f1 + f1*f2")


def test_exact_div_polynomial():
    assert exact_div(P("x1*x2 + x2*f2"), x(2)) == P("x1 + f2")


def test_exact_div_monomial():
    assert (f(1) + x(2)) / x(1) == P("x1^-1*f1 + x1^-1*x2")


def test_not_divisible():
    with pytest.raises(NotDivisible):
        exact_div(x(1) + 1, x(2) + 1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        exact_div(x(1), LaurentPoly.zero(N))


def test_min_f_exponents():
    assert min_f_exponents(P("x1^-1*f1 + x1^-1*x2")) == (0, 0)
    assert min_f_exponents(f(1) * f(2)) == (1, 1)
    assert min_f_exponents(x(1, -1)) == (0, 0)


def test_boundary_variables_are_one():
    assert LaurentPoly.variable(N, X, 0) == LaurentPoly.one(N)
    assert LaurentPoly.variable(N, F, N + 1) == LaurentPoly.one(N)


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        x(1) + LaurentPoly.one(3)


def test_format_roundtrip():
    p = P("3*x1^-2*f2 - x2 + 1")
    assert parse_poly(N, format_poly(p)) == p


def test_json_roundtrip():
    p = P("2*x1^-1*f1 + x2")
    assert LaurentPoly.from_json(N, p.to_json()) == p


def test_factored():
    p = P("x1^-1*x2^-1*f1*f2 + x1^-1*f2 + x2^-1*f1")
    assert format_factored(p) == "(x1*f1 + x2*f2 + f1*f2)*x1^-1*x2^-1"
    assert format_factored(x(1)) == "x1"


def test_hash_consistent():
    assert hash(P("x1 + f2")) == hash(f(2) + x(1))
    assert len({P("x1 + f2"), f(2) + x(1)}) == 1
