import pytest

from hlcluster.cluster import Root, almost_positive_roots
from hlcluster.errors import NotPrime, NotStandard
from hlcluster.height import enumerate_height_functions, parse_xi
from hlcluster.iota import image_of_root, root_of_element, wt_ell
from hlcluster.monoid import f_monomial, frozen, gen_at, pr_set

XI = parse_xi("0,1")


def test_negative_roots_are_initial_labels():
    assert image_of_root(XI, Root.neg(1)) == gen_at(XI, 1, 1)


def test_bijection_small():
    for n in range(1, 5):
        for xi in enumerate_height_functions(n):
            images = {image_of_root(xi, r) for r in almost_positive_roots(n)}
            assert images == set(pr_set(xi))


def test_inverse():
    for r in almost_positive_roots(2):
        assert root_of_element(XI, image_of_root(XI, r)) == r


def test_frozen_is_not_prime():
    with pytest.raises(NotPrime):
        root_of_element(XI, frozen(XI, 1))


def test_wt_ell_examples():
    assert wt_ell(XI, (1, 0), (0, 0), (0, 0)) == gen_at(XI, 1, 1)
    assert wt_ell(XI, (0, 0), (0, 0), (1, 0)) == f_monomial(2, (1, 0))
    assert wt_ell(XI, (0, 0), (1, 0), (0, 0)) == gen_at(XI, 1, -1)


def test_wt_ell_rejects_non_standard():
    with pytest.raises(NotStandard):
        wt_ell(XI, (1, 0), (1, 0), (0, 0))
