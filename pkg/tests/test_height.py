import pytest

from hlcluster.errors import StepError
from hlcluster.height import (
    HeightFunction,
    derived_indices,
    enumerate_height_functions,
    iter_height_functions,
    new_height_function,
    parse_xi,
    star,
)


def test_boundary_extension():
    xi = new_height_function(2, [0, 1])
    assert xi(0) == 1 and xi(3) == 0


def test_rank_one_boundary():
    xi = parse_xi("0")
    assert xi(0) == xi(2) == 1


def test_zigzag_is_valid():
    assert parse_xi("0,1,0,1").n == 4


def test_step_error():
    with pytest.raises(StepError):
        new_height_function(3, [0, 2, 3])


def test_length_mismatch():
    with pytest.raises(StepError):
        new_height_function(3, [0, 1])


def test_zigzag_indices():
    ix = derived_indices(parse_xi("0,1,0,1"))
    assert ix.d[1:] == (1, 1, 1, 1)
    assert ix.diamond[1:] == (1, 2, 3, 4)
    assert ix.bullet[2:] == (1, 2, 3)


def test_monotone_indices():
    ix = derived_indices(parse_xi("0,1,2,3"))
    assert ix.d[1:] == (0, 0, 1, 1)
    assert ix.diamond[1:] == (3, 3, 3, 4)
    # vertex 1 is not a sink or source here, so nothing lies below 3
    assert ix.bullet[2:] == (0, 0, 3)


def test_bar_rank_two():
    ix = derived_indices(parse_xi("0,1"))
    assert ix.d[1:] == (1, 1)
    assert ix.bar(2) == 2


@pytest.mark.parametrize("src,dst", [("0,1,2", "2,1,0"), ("0,1", "1,0"), ("0,-1,0,1", "1,0,-1,0")])
def test_star(src, dst):
    assert star(parse_xi(src)) == parse_xi(dst)


def test_enumerate():
    assert enumerate_height_functions(1) == [HeightFunction((0,))]
    assert set(enumerate_height_functions(2)) == {parse_xi("0,1"), parse_xi("0,-1")}
    assert len(enumerate_height_functions(4)) == 8
    assert all(x(1) == 0 for x in enumerate_height_functions(5))


def test_iter_counts():
    assert sum(1 for _ in iter_height_functions(4)) == 1 + 2 + 4 + 8


def test_bullet_tracks_flat_steps():
    # d[j-1] = 0 exactly when j-1 and j share the same bullet
    for n in range(2, 7):
        for xi in enumerate_height_functions(n):
            ix = xi.indices
            for j in range(2, n + 1):
                assert (ix.d[j - 1] == 0) == (ix.bullet[j - 1] == ix.bullet[j])
