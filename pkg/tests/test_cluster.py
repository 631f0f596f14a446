from hlcluster.cluster import (
    Root,
    catalan_cluster_count,
    cluster_variable,
    co_occur,
    exchange_graph,
    initial_seed,
    mutate_seed,
    parse_root,
)
from hlcluster.height import parse_xi
from hlcluster.laurent import parse_poly

XI = parse_xi("0,1")


def test_mutate_at_one():
    s = mutate_seed(initial_seed(XI), 1)
    assert s.attachment(1) == parse_poly(2, "x1^-1*f1 + x1^-1*x2")


def test_mutate_at_two():
    s = mutate_seed(initial_seed(XI), 2)
    assert s.attachment(2) == parse_poly(2, "x2^-1*f2 + x2^-1*x1")


def test_seed_involution():
    s0 = initial_seed(XI)
    for v in (1, 2):
        assert mutate_seed(mutate_seed(s0, v), v).cluster == s0.cluster


def test_top_root():
    want = parse_poly(2, "x1^-1*x2^-1*f1*f2 + x1^-1*f2 + x2^-1*f1")
    assert cluster_variable(XI, Root.pos(1, 2)) == want


def test_exchange_relation():
    a1, a2 = cluster_variable(XI, Root.pos(1, 1)), cluster_variable(XI, Root.pos(2, 2))
    assert a1 * a2 == cluster_variable(XI, Root.pos(1, 2)) + 1


def test_exchange_counts():
    for n, c in [(1, 2), (2, 5), (3, 14), (4, 42)]:
        assert catalan_cluster_count(n) == c
        assert len(exchange_graph(parse_xi(",".join(["0", "1", "0", "1"][:n]))).clusters) == c


def test_co_occur_examples():
    assert co_occur(XI, Root.neg(1), Root.neg(2))
    assert not co_occur(XI, Root.pos(1, 1), Root.pos(2, 2))
    assert co_occur(XI, Root.pos(1, 2), Root.pos(1, 2))


def test_parse_root():
    assert parse_root("-3") == Root.neg(3)
    assert parse_root("1,2") == Root.pos(1, 2)
