import pytest

from hlcluster.errors import DomainError, EmptyElement, NotPrime
from hlcluster.height import enumerate_height_functions, parse_xi
from hlcluster.monoid import (
    MINUS,
    PLUS,
    PElement,
    f_monomial,
    format_element,
    frozen,
    gen_at,
    is_prime,
    normalize,
    omega_interval,
    parse_element,
    pr_set,
    strip,
)


def test_pr_sizes():
    assert len(pr_set(parse_xi("0,1"))) == 5
    assert len(pr_set(parse_xi("0,1,0"))) == 9


def test_interval_weights():
    w = omega_interval(parse_xi("0,1,0"), 1, 3)
    assert (w.wt(), w.ht(), w.min(), w.max()) == ((1, 1, 1), 3, 1, 3)


def test_frozen_weights():
    p = frozen(parse_xi("0,1,0"), 2)
    assert (p.wt(), p.ht(), p.min(), p.max()) == ((0, 2, 0), 2, 2, 2)


def test_identity():
    e = PElement.identity(3)
    assert e.wt() == (0, 0, 0) and e.ht() == 0
    with pytest.raises(EmptyElement):
        e.min()


def test_normalize_examples():
    xi = parse_xi("0,1")
    w = omega_interval(xi, 1, 2)
    assert normalize(f_monomial(2, (1, 0)) * w) == ((1, 0), w)
    p = gen_at(xi, 1, 1) * gen_at(xi, 1, -1) * gen_at(xi, 2, 2)
    assert normalize(p) == ((1, 0), gen_at(xi, 2, 2))
    assert normalize(PElement.identity(2)) == ((0, 0), PElement.identity(2))


def test_parse_and_format():
    p = parse_element(3, "1:+,3:-^2")
    assert p.exponent(1, PLUS) == 1 and p.exponent(3, MINUS) == 2
    assert parse_element(3, format_element(p)) == p
    assert format_element(PElement.identity(3)) == "1"


def test_parse_rejects_garbage():
    with pytest.raises(DomainError):
        parse_element(2, "1:*")


def test_gen_at_rejects_non_generator():
    with pytest.raises(DomainError):
        gen_at(parse_xi("0,1"), 1, 0)


def test_boundary_generators_vanish():
    xi = parse_xi("0,1")
    assert gen_at(xi, 0, 5).is_identity() and gen_at(xi, 3, 5).is_identity()


def test_json_roundtrip():
    p = parse_element(4, "2:+,4:-^3")
    assert PElement.from_json(4, p.to_json()) == p


def test_division():
    a = parse_element(2, "1:+,2:-")
    assert a / parse_element(2, "2:-") == parse_element(2, "1:+")
    with pytest.raises(DomainError):
        parse_element(2, "1:+") / parse_element(2, "2:-")


def test_strip_core_is_prime_or_trivial():
    for n in range(2, 6):
        for xi in enumerate_height_functions(n):
            for p in pr_set(xi):
                for side in ("left", "right"):
                    core = normalize(strip(xi, p, side))[1]
                    assert core.is_identity() or is_prime(xi, core)


def test_strip_rejects_non_prime():
    xi = parse_xi("0,1")
    with pytest.raises(NotPrime):
        strip(xi, frozen(xi, 1), "right")
