from hypothesis import given, settings
from hypothesis import strategies as st

from hlcluster.cluster import Root, almost_positive_roots, cluster_variable
from hlcluster.height import HeightFunction
from hlcluster.laurent import LaurentPoly, exact_div, format_poly, parse_poly
from hlcluster.monoid import PElement, format_element, parse_element
from hlcluster.quiver import build_hl_quiver, mutate
from hlcluster.rules import decide_tensor, is_compatible
from hlcluster.iota import image_of_root

N = 3


@st.composite
def heights(draw, max_n=5):
    steps = draw(st.lists(st.sampled_from((-1, 1)), min_size=0, max_size=max_n - 1))
    vals = [0]
    for s in steps:
        vals.append(vals[-1] + s)
    return HeightFunction(tuple(vals))


monomials = st.tuples(*[st.integers(-3, 3)] * (2 * N))
polys = st.dictionaries(monomials, st.integers(-5, 5), max_size=5).map(lambda d: LaurentPoly(N, d))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a


@given(polys, polys)
def test_exact_division_inverts_product(a, b):
    if b:
        assert exact_div(a * b, b) == a


@given(polys)
def test_text_roundtrip(a):
    assert parse_poly(N, format_poly(a)) == a


@given(st.dictionaries(st.tuples(st.integers(1, N), st.sampled_from((1, -1))), st.integers(1, 3), max_size=4))
def test_element_text_roundtrip(m):
    p = PElement.from_map(N, m)
    assert parse_element(N, format_element(p)) == p


@given(heights(), st.data())
def test_quiver_mutation_involution(xi, data):
    q = build_hl_quiver(xi)
    v = data.draw(st.integers(1, xi.n))
    assert mutate(mutate(q, v), v) == q


@settings(max_examples=40, deadline=None)
@given(heights(max_n=4), st.data())
def test_compatibility_is_symmetric_and_matches_tensor(xi, data):
    roots = almost_positive_roots(xi.n)
    b1 = data.draw(st.sampled_from(roots))
    b2 = data.draw(st.sampled_from(roots))
    c = is_compatible(xi, b1, b2)
    assert c == is_compatible(xi, b2, b1)
    assert c == decide_tensor(xi, image_of_root(xi, b1), image_of_root(xi, b2)).irreducible


@settings(max_examples=40, deadline=None)
@given(heights(max_n=5), st.data())
def test_cluster_variables_positive(xi, data):
    i = data.draw(st.integers(1, xi.n))
    j = data.draw(st.integers(i, xi.n))
    p = cluster_variable(xi, Root.pos(i, j))
    assert all(c > 0 for c in p.coefficients())
    assert min(p.min_f_exponents()) >= 0
