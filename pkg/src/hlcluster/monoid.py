"""The free abelian monoid P+_xi and its distinguished elements.

Generators are stored structurally as ``(node, sign)`` meaning
omega_{node, xi(node) + sign}, so membership in P+_xi never depends on the
translate of xi.  Generators at nodes 0 and n+1 are the identity.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import DomainError, EmptyElement, NotPrime
from .height import HeightFunction

PLUS, MINUS = 1, -1


@dataclass(frozen=True, order=True)
class PElement:
    n: int
    exps: tuple[tuple[int, int, int], ...] = ()  # sorted (node, sign, exponent > 0)

    @classmethod
    def from_map(cls, n: int, data: dict[tuple[int, int], int] | Iterable) -> "PElement":
        items = data.items() if isinstance(data, dict) else ((k, e) for k, e in data)
        acc: dict[tuple[int, int], int] = {}
        for (node, sign), e in items:
            if sign not in (PLUS, MINUS):
                raise DomainError(f"sign must be +1 or -1, got {sign}")
            if e < 0:
                raise DomainError("negative exponent")
            if node == 0 or node == n + 1 or e == 0:
                continue
            if not 1 <= node <= n:
                raise DomainError(f"node {node} out of range for n={n}")
            acc[(node, sign)] = acc.get((node, sign), 0) + e
        return cls(n, tuple(sorted((k[0], k[1], e) for k, e in acc.items() if e)))

    @classmethod
    def identity(cls, n: int) -> "PElement":
        return cls(n)

    @classmethod
    def generator(cls, n: int, node: int, sign: int, exp: int = 1) -> "PElement":
        return cls.from_map(n, {(node, sign): exp})

    def as_map(self) -> dict[tuple[int, int], int]:
        return {(a, s): e for a, s, e in self.exps}

    def exponent(self, node: int, sign: int) -> int:
        return self.as_map().get((node, sign), 0)

    def is_identity(self) -> bool:
        return not self.exps

    def __mul__(self, other: "PElement") -> "PElement":
        if other.n != self.n:
            raise DomainError("rank mismatch")
        m = self.as_map()
        for k, e in other.as_map().items():
            m[k] = m.get(k, 0) + e
        return PElement.from_map(self.n, m)

    def __pow__(self, k: int) -> "PElement":
        return PElement.from_map(self.n, {key: e * k for key, e in self.as_map().items()})

    def divides(self, other: "PElement") -> bool:
        om = other.as_map()
        return all(om.get(k, 0) >= e for k, e in self.as_map().items())

    def __truediv__(self, other: "PElement") -> "PElement":
        if not other.divides(self):
            raise DomainError("quotient leaves P+")
        m = self.as_map()
        for k, e in other.as_map().items():
            m[k] -= e
        return PElement.from_map(self.n, m)

    # weight data
    def wt(self) -> tuple[int, ...]:
        r = [0] * self.n
        for node, _, e in self.exps:
            r[node - 1] += e
        return tuple(r)

    def ht(self) -> int:
        return sum(e for _, _, e in self.exps)

    def support(self) -> list[int]:
        return sorted({node for node, _, _ in self.exps})

    def min(self) -> int:
        if not self.exps:
            raise EmptyElement("min of the identity")
        return self.exps[0][0]

    def max(self) -> int:
        if not self.exps:
            raise EmptyElement("max of the identity")
        return self.exps[-1][0]

    def signs_at(self, node: int) -> list[int]:
        return [s for a, s, _ in self.exps if a == node]

    # text / json
    def __str__(self):
        return format_element(self)

    def to_json(self) -> list[dict]:
        return [{"node": a, "sign": "+" if s > 0 else "-", "exp": e} for a, s, e in self.exps]

    @classmethod
    def from_json(cls, n: int, data: list[dict]) -> "PElement":
        return cls.from_map(n, {(d["node"], PLUS if d["sign"] == "+" else MINUS): d["exp"] for d in data})

    def describe(self, xi: HeightFunction) -> str:
        """Spectral form, e.g. ``w[1,-1]*w[2,2]``."""
        if not self.exps:
            return "1"
        parts = []
        for a, s, e in self.exps:
            g = f"w[{a},{xi(a) + s}]"
            parts.append(g if e == 1 else f"{g}^{e}")
        return "*".join(parts)


def format_element(p: PElement) -> str:
    if not p.exps:
        return "1"
    return ",".join(f"{a}:{'+' if s > 0 else '-'}" + (f"^{e}" if e != 1 else "") for a, s, e in p.exps)


_GEN = re.compile(r"(\d+):([+-])(?:\^(\d+))?")


def parse_element(n: int, text: str) -> PElement:
    """Parse ``"1:+,3:-^2"``; ``"1"`` or the empty string is the identity."""
    text = text.replace(" ", "")
    if text in ("", "1"):
        return PElement.identity(n)
    acc: dict[tuple[int, int], int] = {}
    for tok in text.split(","):
        m = _GEN.fullmatch(tok)
        if not m:
            raise DomainError(f"bad generator {tok!r}")
        key = (int(m[1]), PLUS if m[2] == "+" else MINUS)
        acc[key] = acc.get(key, 0) + int(m[3] or 1)
    return PElement.from_map(n, acc)


def gen_at(xi: HeightFunction, node: int, param: int) -> PElement:
    """omega_{node, param}; the identity at the boundary nodes 0 and n+1."""
    n = xi.n
    if node == 0 or node == n + 1:
        return PElement.identity(n)
    sign = param - xi(node)
    if sign not in (PLUS, MINUS):
        raise DomainError(f"omega_{{{node},{param}}} is not a generator of P+_xi")
    return PElement.generator(n, node, sign)


def interior_points(xi: HeightFunction, i: int, j: int) -> list[int]:
    return [p for p in range(i + 1, j) if xi(p - 1) == xi(p + 1)]


def omega_interval(xi: HeightFunction, i: int, j: int) -> PElement:
    """omega(i, j) for 1 <= i < j <= n."""
    if not 1 <= i < j <= xi.n:
        raise IndexError(f"omega(i, j) needs 1 <= i < j <= n, got ({i}, {j})")
    gens = {(i, xi(i) - xi(i + 1)): 1}
    for p in interior_points(xi, i, j) + [j]:
        gens[(p, xi(p) - xi(p - 1))] = 1
    return PElement.from_map(xi.n, gens)


def frozen(xi: HeightFunction, i: int) -> PElement:
    return PElement.from_map(xi.n, {(i, PLUS): 1, (i, MINUS): 1})


@lru_cache(maxsize=None)
def pr_set(xi: HeightFunction) -> tuple[PElement, ...]:
    n = xi.n
    gens = [PElement.generator(n, i, s) for i in range(1, n + 1) for s in (PLUS, MINUS)]
    intervals = [omega_interval(xi, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return tuple(gens + intervals)


@lru_cache(maxsize=None)
def _pr_frozen(xi: HeightFunction) -> frozenset:
    return frozenset(pr_set(xi))


def is_prime(xi: HeightFunction, p: PElement) -> bool:
    return p in _pr_frozen(xi)


def strip(xi: HeightFunction, p: PElement, side: str) -> PElement:
    """pi' (side ``right``) or 'pi (side ``left``) for pi in pr_xi."""
    if not is_prime(xi, p):
        raise NotPrime(f"{p} is not in pr_xi")
    if side == "right":
        i = p.max()
        nb = i - 1
    elif side == "left":
        i = p.min()
        nb = i + 1
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    (sign,) = p.signs_at(i)
    rest = p / PElement.generator(xi.n, i, sign)
    return rest * gen_at(xi, nb, xi(i))


def star_element(p: PElement) -> PElement:
    """Relabel node i as n+1-i, keeping spectral parameters (valid over xi*)."""
    n = p.n
    return PElement.from_map(n, {(n + 1 - a, s): e for a, s, e in p.exps})


def normalize(p: PElement) -> tuple[tuple[int, ...], PElement]:
    """Split off the largest f-monomial: p = prod f_i^{r_i} * core."""
    m = p.as_map()
    r = []
    core = {}
    for i in range(1, p.n + 1):
        up, dn = m.get((i, PLUS), 0), m.get((i, MINUS), 0)
        k = min(up, dn)
        r.append(k)
        if up - k:
            core[(i, PLUS)] = up - k
        if dn - k:
            core[(i, MINUS)] = dn - k
    return tuple(r), PElement.from_map(p.n, core)


def f_monomial(n: int, r: Iterable[int]) -> PElement:
    return PElement.from_map(n, {(i + 1, s): e for i, e in enumerate(r) for s in (PLUS, MINUS)})
