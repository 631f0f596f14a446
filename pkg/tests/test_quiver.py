import pytest

from hlcluster.errors import FrozenVertex
from hlcluster.height import enumerate_height_functions, parse_xi
from hlcluster.quiver import Quiver, build_hl_quiver, expected_local_edges, mutate, mutation_sequence


def arrows(q):
    return {(s, t) for s, t, _ in q.arrows}


def test_rank_two_quiver():
    q = build_hl_quiver(parse_xi("0,1"))
    assert arrows(q) == {(2, 1), (1, -1), (-2, 2)}


def test_mutation_example():
    q = mutate(build_hl_quiver(parse_xi("0,1")), 1)
    assert arrows(q) == {(1, 2), (-1, 1), (2, -1), (-2, 2)}


def test_frozen_mutation_rejected():
    with pytest.raises(FrozenVertex):
        mutate(build_hl_quiver(parse_xi("0,1")), -1)


def test_involution_everywhere():
    for n in range(1, 6):
        for xi in enumerate_height_functions(n):
            q = build_hl_quiver(xi)
            for v in range(1, n + 1):
                assert mutate(mutate(q, v), v) == q


def test_mutation_sequence_base():
    xi = parse_xi("0,1")
    assert mutation_sequence(xi, 1, 0) == build_hl_quiver(xi)
    assert mutation_sequence(xi, 1, 1) == mutate(build_hl_quiver(xi), 1)


def test_local_edges_example():
    xi = parse_xi("0,1,2")
    assert mutation_sequence(xi, 1, 1).local_arrows(2) == expected_local_edges(xi, 1, 2)


def test_no_arrows_between_frozen():
    for n in range(1, 6):
        for xi in enumerate_height_functions(n):
            assert all(s > 0 or t > 0 for s, t, _ in build_hl_quiver(xi).arrows)


def test_json_roundtrip():
    q = build_hl_quiver(parse_xi("0,1,0,-1"))
    assert Quiver.from_json(q.to_json()) == q


def test_dot_counts():
    dot = build_hl_quiver(parse_xi("0,1")).to_dot()
    assert dot.count("shape=") == 4
    assert dot.count("->") == 3
