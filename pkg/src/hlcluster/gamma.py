"""The 0/1-vector sets Gamma_{i,j} indexing the monomials of x[alpha_{i,j}].

A vector in Gamma_{i,j} is stored as a tuple ``(eps_i, ..., eps_{j+1})``;
for j < i the set is ``{(0,)}``.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

from .errors import DomainError, IncompleteCase
from .height import HeightFunction
from .laurent import F, X, LaurentPoly

GammaVector = tuple[int, ...]


def sigma(eps: GammaVector, i: int, r: int, m: int) -> int:
    """eps_r + ... + eps_m for a vector starting at index i (0 on empty ranges)."""
    if m < r:
        return 0
    return sum(eps[k - i] for k in range(r, m + 1))


def _satisfies(xi: HeightFunction, i: int, j: int, eps: GammaVector) -> bool:
    ix = xi.indices
    d, dia, bul = ix.d, ix.diamond, ix.bullet
    s = sigma(eps, i, max(i, bul[j] + 1), j)
    if eps[-1] != 1 + (d[j] - 1) * s:
        return False
    if s > 1:
        return False
    ii = dia[i]
    if ii <= j and not sigma(eps, i, i, ii) <= 1 <= sigma(eps, i, i, ii + 1):
        return False
    for m in range(ii, bul[j]):
        if d[m]:
            lo, hi = m + 1, dia[m + 1]
            if not sigma(eps, i, lo, hi) <= 1 <= sigma(eps, i, lo, hi + 1):
                return False
    return True


@lru_cache(maxsize=None)
def gamma_set(xi: HeightFunction, i: int, j: int) -> tuple[GammaVector, ...]:
    """All vectors of Gamma_{i,j}, sorted."""
    if j < i:
        return ((0,),)
    if not 1 <= i <= j <= xi.n:
        raise IndexError(f"need 1 <= i <= j <= n, got ({i}, {j})")
    return tuple(
        eps for eps in product((0, 1), repeat=j - i + 2) if _satisfies(xi, i, j, eps)
    )


def split_sigma(xi: HeightFunction, i: int, j: int, eps: GammaVector) -> int:
    return sigma(eps, i, max(i, xi.indices.bullet[j] + 1), j)


def gamma_split(xi: HeightFunction, i: int, j: int) -> tuple[tuple[GammaVector, ...], tuple[GammaVector, ...]]:
    """(Gamma^0, Gamma^1): vectors whose top block sum is 0, resp. 1."""
    zero, one = [], []
    for eps in gamma_set(xi, i, j):
        (one if split_sigma(xi, i, j, eps) else zero).append(eps)
    return tuple(zero), tuple(one)


FROM_J_MINUS_1 = "fromJminus1"
FROM_JBULLET_MINUS_1 = "fromJbulletMinus1"


def gamma_inject(xi: HeightFunction, i: int, j: int, which: str, eps: GammaVector) -> GammaVector:
    """The injections Gamma_{i,j-1} -> Gamma^1_{i,j} and Gamma_{i,j_b - 1} -> Gamma^0_{i,j}."""
    ix = xi.indices
    if which == FROM_J_MINUS_1:
        if eps not in gamma_set(xi, i, j - 1):
            raise DomainError(f"{eps} not in Gamma_{{{i},{j - 1}}}")
        return tuple(eps) + (ix.d[j],)
    if which == FROM_JBULLET_MINUS_1:
        jb = ix.bullet[j]
        if eps not in gamma_set(xi, i, jb - 1):
            raise DomainError(f"{eps} not in Gamma_{{{i},{jb - 1}}}")
        out = [0] * (j - i + 2)
        out[-1] = 1
        if jb >= i:
            for k in range(i, jb + 1):
                out[k - i] = eps[k - i]
            out[0] += int(i == jb)
        return tuple(out)
    raise ValueError(f"unknown injection {which!r}")


def p_map(xi: HeightFunction, i: int, j: int, eps: GammaVector) -> GammaVector:
    """The exponent vector (eps'_i, ..., eps'_{j+1}) of the x-part of a monomial."""
    if eps not in gamma_set(xi, i, j):
        raise DomainError(f"{eps} not in Gamma_{{{i},{j}}}")
    ix = xi.indices
    d, bul = ix.d, ix.bullet

    def s(r, m):
        return sigma(eps, i, r, m)

    out = []
    for m in range(i, j + 1):
        mb = bul[m]
        gate = s(max(i, bul[mb] + 1), mb)
        nxt = eps[m + 1 - i]
        if bul[i] == mb or gate == 1:
            if s(max(i, mb + 1), m) == 0:
                out.append((d[m] - 1) * nxt - d[m])
            else:
                out.append(d[m] - (eps[m - i] + nxt))
        elif mb >= i and gate == 0:
            out.append(d[m] * (1 - nxt))
        else:
            raise IncompleteCase(f"p_map: no branch for m={m}, eps={eps}")
    top = split_sigma(xi, i, j, eps)
    out.append((1 - d[j]) * top + d[j] * (1 - top))
    return tuple(out)


def monomial_of(xi: HeightFunction, i: int, j: int, eps: GammaVector) -> LaurentPoly:
    n = xi.n
    d = xi.indices.d
    primed = p_map(xi, i, j, eps)
    term = LaurentPoly.variable(n, X, i - 1, 1 - eps[0])
    for m in range(i, j + 2):
        term = term * LaurentPoly.variable(n, X, m, primed[m - i])
        if m <= j:
            term = term * LaurentPoly.variable(n, F, m, eps[m - i])
    return term * LaurentPoly.variable(n, F, j + 1, (1 - d[j]) * eps[-1])


def closed_formula(xi: HeightFunction, i: int, j: int) -> LaurentPoly:
    """x[alpha_{i,j}] as a sum over Gamma_{i,j}, without any mutation."""
    total = LaurentPoly.zero(xi.n)
    for eps in gamma_set(xi, i, j):
        total = total + monomial_of(xi, i, j, eps)
    return total
