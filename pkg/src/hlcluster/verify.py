"""Exhaustive verification suites, one per identity family.

Every suite maps a height function to a :class:`Report`; :func:`run_suite`
sweeps all height functions with xi(1) = 0 up to a given rank.
"""
from __future__ import annotations

from typing import Callable

from .cluster import (
    Root,
    all_cluster_variables,
    almost_positive_roots,
    catalan_cluster_count,
    cluster_variable,
    exchange_graph,
    verify_clusterind,
)
from .gamma import (
    FROM_J_MINUS_1,
    FROM_JBULLET_MINUS_1,
    closed_formula,
    gamma_inject,
    gamma_set,
    gamma_split,
    p_map,
)
from .height import HeightFunction, enumerate_height_functions
from .iota import image_of_root, iter_f_monomials, iter_standard_monomials, wt_ell
from .monoid import pr_set
from .quiver import expected_local_edges, mutation_sequence
from .report import Report
from .rules import (
    compat_cross_check,
    verify_clusterrep,
    verify_four_point,
    verify_tensor_identities,
)


def suite_clusterind(xi: HeightFunction) -> Report:
    rep = Report("clusterind")
    rep.checked = xi.n * (xi.n + 1) // 2
    for bad in verify_clusterind(xi):
        rep.fail((str(xi),) + bad)
    return rep


def suite_closedform(xi: HeightFunction) -> Report:
    rep = Report("closedform")
    for i in range(1, xi.n + 1):
        for j in range(i, xi.n + 1):
            rep.checked += 1
            formula = closed_formula(xi, i, j)
            if formula != cluster_variable(xi, Root.pos(i, j)):
                rep.fail((str(xi), i, j, "differs from mutation"))
            elif len(formula) != len(gamma_set(xi, i, j)):
                rep.fail((str(xi), i, j, "monomials cancel or merge"))
    return rep


def suite_gamma(xi: HeightFunction) -> Report:
    """Counting recursion, the two injections and their p_map compatibility."""
    rep = Report("gamma-bijections")
    ix = xi.indices
    n = xi.n
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            jb = ix.bullet[j]
            full = gamma_set(xi, i, j)
            rep.checked += 1
            if len(full) != len(gamma_set(xi, i, j - 1)) + len(gamma_set(xi, i, jb - 1)):
                rep.fail((str(xi), i, j, "count recursion"))
            for eps in full:
                if any(e not in (-1, 0, 1) for e in p_map(xi, i, j, eps)[:-1]):
                    rep.fail((str(xi), i, j, eps, "primed entry out of range"))
            if j == i:
                continue
            zero, one = gamma_split(xi, i, j)
            src1, src0 = gamma_set(xi, i, j - 1), gamma_set(xi, i, jb - 1)
            img1 = [gamma_inject(xi, i, j, FROM_J_MINUS_1, e) for e in src1]
            img0 = [gamma_inject(xi, i, j, FROM_JBULLET_MINUS_1, e) for e in src0]
            rep.checked += 1
            if sorted(img1) != sorted(one) or sorted(img0) != sorted(zero):
                rep.fail((str(xi), i, j, "injections are not bijections onto the split"))
            for e, img in zip(src1, img1):
                rep.checked += 1
                prev = p_map(xi, i, j - 1, e)
                want = prev[:-1] + (prev[-1] - 1, 1 - ix.d[j])
                if p_map(xi, i, j, img) != want:
                    rep.fail((str(xi), i, j, e, "p_map compatibility (first injection)"))
            for e, img in zip(src0, img0):
                rep.checked += 1
                want = [0] * (j - i + 2)
                if jb - 1 >= i:
                    prev = p_map(xi, i, jb - 1, e)
                    want[: len(prev)] = prev
                want[-2], want[-1] = -1, ix.d[j]
                if p_map(xi, i, j, img) != tuple(want):
                    rep.fail((str(xi), i, j, e, "p_map compatibility (second injection)"))
    return rep


def suite_local_edges(xi: HeightFunction) -> Report:
    rep = Report("lemma-edges")
    for i in range(1, xi.n + 1):
        for j in range(i + 1, xi.n + 1):
            rep.checked += 1
            got = mutation_sequence(xi, i, j - 1).local_arrows(j)
            if got != expected_local_edges(xi, i, j):
                rep.fail((str(xi), i, j))
    return rep


def suite_iota(xi: HeightFunction) -> Report:
    rep = Report("iota")
    n = xi.n
    images = [image_of_root(xi, r) for r in almost_positive_roots(n)]
    pr = pr_set(xi)
    rep.checked = len(images)
    if len(pr) != n + n * (n + 1) // 2:
        rep.fail((str(xi), "pr size", len(pr)))
    if len(set(images)) != len(images) or set(images) != set(pr):
        rep.fail((str(xi), "not a bijection onto pr"))
    return rep


def suite_treduc(xi: HeightFunction) -> Report:
    rep = Report("treduc")
    rep.merge(verify_tensor_identities(xi))
    rep.merge(verify_four_point(xi))
    return rep


def suite_clusterrep(xi: HeightFunction) -> Report:
    return Report("clusterrep").merge(verify_clusterrep(xi))


def suite_compat(xi: HeightFunction) -> Report:
    return Report("compat").merge(compat_cross_check(xi))


def suite_positivity(xi: HeightFunction) -> Report:
    rep = Report("positivity")
    for root, p in all_cluster_variables(xi).items():
        rep.checked += 1
        if any(c <= 0 for c in p.coefficients()):
            rep.fail((str(xi), str(root), "non-positive coefficient"))
        if min(p.min_f_exponents()) < 0:
            rep.fail((str(xi), str(root), "negative frozen exponent"))
    return rep


def suite_wtell(xi: HeightFunction, f_degree: int = 2, degree: int = 4) -> Report:
    rep = Report("wtell")
    seen: dict = {}
    n = xi.n
    for r in iter_f_monomials(n, f_degree):
        for p, m in iter_standard_monomials(n, degree):
            rep.checked += 1
            w = wt_ell(xi, p, m, r)
            if w in seen:
                rep.fail((str(xi), seen[w], (r, p, m)))
            seen[w] = (r, p, m)
    return rep


def suite_exchange(xi: HeightFunction) -> Report:
    """Cluster count and the variable set of the exchange graph."""
    rep = Report("exchange-graph")
    g = exchange_graph(xi)
    rep.checked = len(g.clusters)
    if len(g.clusters) != catalan_cluster_count(xi.n):
        rep.fail((str(xi), "cluster count", len(g.clusters)))
    if g.variables() != set(all_cluster_variables(xi).values()):
        rep.fail((str(xi), "variables differ from the root-indexed family"))
    return rep


SUITES: dict[str, Callable[[HeightFunction], Report]] = {
    "clusterind": suite_clusterind,
    "closedform": suite_closedform,
    "gamma-bijections": suite_gamma,
    "lemma-edges": suite_local_edges,
    "iota": suite_iota,
    "treduc": suite_treduc,
    "clusterrep": suite_clusterrep,
    "compat": suite_compat,
    "positivity": suite_positivity,
    "wtell": suite_wtell,
    "exchange-graph": suite_exchange,
}


def run_suite(name: str, max_n: int, min_n: int = 1) -> Report:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    rep = Report(f"{name} n<={max_n}")
    for n in range(min_n, max_n + 1):
        for xi in enumerate_height_functions(n):
            rep.merge(SUITES[name](xi))
    return rep
