"""The label-level correspondence between almost positive roots and pr_xi."""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .cluster import Root, almost_positive_roots
from .errors import NotPrime, NotStandard
from .height import HeightFunction
from .monoid import PElement, f_monomial, gen_at, omega_interval


def x_label(xi: HeightFunction, i: int) -> PElement:
    """Image of the initial variable x_i: omega_{i, xi(i+1)}."""
    if i in (0, xi.n + 1):
        return PElement.identity(xi.n)
    return gen_at(xi, i, xi(i + 1))


def y_label(xi: HeightFunction, i: int) -> PElement:
    """omega_{i, 2 xi(i) - xi(i+1)}, the other generator at i."""
    if i in (0, xi.n + 1):
        return PElement.identity(xi.n)
    return gen_at(xi, i, 2 * xi(i) - xi(i + 1))


def image_of_root(xi: HeightFunction, root: Root) -> PElement:
    if root.negative:
        return x_label(xi, root.i)
    i, j = root.i, root.j
    ix = xi.indices
    if not ix.d[j]:
        return omega_interval(xi, i, j + 1)
    jb = ix.bullet[j]
    if ix.bullet[i] == jb:
        return y_label(xi, i)
    return omega_interval(xi, i, jb + 1)


@lru_cache(maxsize=None)
def _inverse(xi: HeightFunction) -> dict[PElement, Root]:
    return {image_of_root(xi, r): r for r in almost_positive_roots(xi.n)}


def root_of_element(xi: HeightFunction, p: PElement) -> Root:
    try:
        return _inverse(xi)[p]
    except KeyError:
        raise NotPrime(f"{p} is not in pr_xi") from None


def wt_ell(xi: HeightFunction, p: Sequence[int], m: Sequence[int], r: Sequence[int]) -> PElement:
    """Label of f^r * prod x_i^{p_i} x[alpha_i]^{m_i} for a standard monomial."""
    n = xi.n
    d = xi.indices.d
    if any(a * b for a, b in zip(p, m)):
        raise NotStandard("a standard monomial never contains x_i * x[alpha_i]")
    out = f_monomial(n, r)
    for i in range(1, n + 1):
        out = out * x_label(xi, i) ** p[i - 1]
        piece = y_label(xi, i)
        if not d[i]:
            piece = piece * x_label(xi, i + 1)
        out = out * piece ** m[i - 1]
    return out


def iter_standard_monomials(n: int, max_degree: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (p, m) with p_i m_i = 0 and total degree <= max_degree."""
    for choice in product((0, 1), repeat=n):
        for degs in _compositions(n, max_degree):
            p = tuple(e if not c else 0 for e, c in zip(degs, choice))
            mm = tuple(e if c else 0 for e, c in zip(degs, choice))
            # skip duplicates produced when a zero exponent hides the choice
            if any(e == 0 and c for e, c in zip(degs, choice)):
                continue
            yield p, mm


def _compositions(n: int, max_total: int) -> Iterator[tuple[int, ...]]:
    def rec(k, left):
        if k == 0:
            yield ()
            return
        for e in range(left + 1):
            for rest in rec(k - 1, left - e):
                yield (e,) + rest
    yield from rec(n, max_total)


def iter_f_monomials(n: int, max_degree: int) -> Iterator[tuple[int, ...]]:
    yield from _compositions(n, max_degree)
