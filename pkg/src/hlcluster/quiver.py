"""The ice quiver Q_xi and its mutations.

Mutable vertices are 1..n, frozen vertices are encoded as -1..-n (so -j is
the frozen partner j').  A quiver is an immutable skew-symmetric map
``b[(u, v)]`` = number of arrows u -> v (negative for arrows v -> u).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .errors import EngineBug, FrozenVertex, Unsupported
from .height import HeightFunction


def is_frozen(v: int) -> bool:
    return v < 0


def vertex_name(v: int) -> str:
    return f"{-v}'" if v < 0 else str(v)


@dataclass(frozen=True)
class Quiver:
    n: int
    _arrows: tuple[tuple[int, int, int], ...] = field(default=())

    @classmethod
    def from_arrows(cls, n: int, arrows: Iterable[tuple[int, int, int]]) -> "Quiver":
        """Build from (source, target, multiplicity) triples; opposite arrows cancel."""
        b: Counter = Counter()
        for u, v, m in arrows:
            if u == v:
                raise EngineBug(f"loop at {u}")
            if is_frozen(u) and is_frozen(v):
                raise EngineBug(f"arrow between frozen vertices {u}, {v}")
            b[(u, v)] += m
            b[(v, u)] -= m
        return cls._from_b(n, b)

    @classmethod
    def _from_b(cls, n: int, b) -> "Quiver":
        arrows = tuple(sorted((u, v, m) for (u, v), m in b.items() if m > 0))
        return cls(n, arrows)

    @property
    def vertices(self) -> list[int]:
        return list(range(1, self.n + 1)) + [-j for j in range(1, self.n + 1)]

    @property
    def arrows(self) -> list[tuple[int, int, int]]:
        return list(self._arrows)

    def b(self, u: int, v: int) -> int:
        for s, t, m in self._arrows:
            if (s, t) == (u, v):
                return m
            if (s, t) == (v, u):
                return -m
        return 0

    def matrix(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for s, t, m in self._arrows:
            out[(s, t)] = m
            out[(t, s)] = -m
        return out

    def in_arrows(self, v: int) -> list[tuple[int, int]]:
        return [(s, m) for s, t, m in self._arrows if t == v]

    def out_arrows(self, v: int) -> list[tuple[int, int]]:
        return [(t, m) for s, t, m in self._arrows if s == v]

    def local_arrows(self, v: int) -> set[tuple[int, int, int]]:
        return {a for a in self._arrows if v in a[:2]}

    def opposite(self) -> "Quiver":
        return Quiver._from_b(self.n, {(t, s): m for s, t, m in self._arrows})

    def mutate(self, v: int) -> "Quiver":
        return mutate(self, v)

    # export
    def to_json(self) -> dict:
        return {"n": self.n, "arrows": [{"from": s, "to": t, "mult": m} for s, t, m in self._arrows]}

    @classmethod
    def from_json(cls, data: dict) -> "Quiver":
        return cls.from_arrows(data["n"], ((a["from"], a["to"], a["mult"]) for a in data["arrows"]))

    def to_dot(self, name: str = "Q") -> str:
        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            shape = "box" if is_frozen(v) else "ellipse"
            lines.append(f'  "{vertex_name(v)}" [shape={shape}];')
        for s, t, m in self._arrows:
            label = f' [label="{m}"]' if m != 1 else ""
            lines.append(f'  "{vertex_name(s)}" -> "{vertex_name(t)}"{label};')
        lines.append("}")
        return "\n".join(lines)


def build_hl_quiver(xi: HeightFunction) -> Quiver:
    n = xi.n
    d = xi.indices.d
    b: Counter = Counter()

    def arrow(u, v, m=1):
        if m and 1 <= abs(u) <= n and 1 <= abs(v) <= n:
            b[(u, v)] += m
            b[(v, u)] -= m

    # each rule is written for the "down" step xi(j) = xi(j+1) + 1; reversed otherwise
    for j in range(1, n):
        edges = [(j, j - 1, 1), (-j, j, 1), (j, j + 1, d[j]), (j + 1, j, 1 - d[j]), (j, -(j + 1), 1 - d[j])]
        down = xi(j) == xi(j + 1) + 1
        for u, v, m in edges:
            if u == j - 1 or v == j - 1:
                continue  # the edge to j-1 is fixed by the rule at j-1
            if down:
                arrow(u, v, m)
            else:
                arrow(v, u, m)
    # vertex n: (n-1) -> n -> n' or reversed
    if xi(n - 1) == xi(n) + 1:
        arrow(n, -n)
    else:
        arrow(-n, n)

    q = Quiver._from_b(n, b)
    _check_left_edges(xi, q)
    return q


def _check_left_edges(xi: HeightFunction, q: Quiver) -> None:
    """The rule at j also fixes the edge j - (j-1); it must agree with the rule at j-1."""
    n = xi.n
    for j in range(2, n + 1):
        if j < n:
            want = 1 if xi(j) == xi(j + 1) + 1 else -1
        else:
            want = -1 if xi(n - 1) == xi(n) + 1 else 1
        if q.b(j, j - 1) != want:
            raise EngineBug(f"inconsistent edge between {j - 1} and {j} for xi={xi}")
    for s, t, m in q.arrows:
        if m != 1:
            raise EngineBug(f"unexpected multiplicity {m} on {s}->{t}")


def mutate(q: Quiver, v: int) -> Quiver:
    if is_frozen(v):
        raise FrozenVertex(f"cannot mutate at frozen vertex {vertex_name(v)}")
    if not 1 <= v <= q.n:
        raise IndexError(f"vertex {v} out of range")
    b = q.matrix()
    new: Counter = Counter()
    verts = q.vertices
    for u in verts:
        for w in verts:
            if u == w:
                continue
            buw = b.get((u, w), 0)
            if v in (u, w):
                val = -buw
            else:
                buv, bvw = b.get((u, v), 0), b.get((v, w), 0)
                val = buw + max(buv, 0) * max(bvw, 0) - max(-buv, 0) * max(-bvw, 0)
            if val:
                new[(u, w)] = val
    return Quiver._from_b(q.n, new)


@lru_cache(maxsize=None)
def mutation_sequence(xi: HeightFunction, i: int, j: int) -> Quiver:
    """Q_xi[i, j]: Q_xi mutated at i, i+1, ..., j (Q_xi itself when j < i)."""
    if j < i:
        return build_hl_quiver(xi)
    return mutate(mutation_sequence(xi, i, j - 1), j)


def expected_local_edges(xi: HeightFunction, i: int, j: int) -> set[tuple[int, int, int]]:
    """Predicted arrows at vertex j of Q_xi[i, j-1], as (source, target, mult) triples.

    Stated for Q_xi containing (j-1) -> j; for the opposite orientation every
    arrow is reversed.
    """
    n = xi.n
    if not (1 <= i < j <= n):
        raise Unsupported(f"need 1 <= i < j <= n, got i={i}, j={j}")
    ix = xi.indices
    d, bul = ix.d, ix.bullet
    jb = bul[j]
    a_j = 1 - int(i == jb)
    b_j = min(1, (1 - int(jb == bul[i])) * d[jb - 1] + int(jb == i)) if jb >= 1 else 0
    cand = [
        (j, j - 1, 1),
        (j, -j, d[j - 1]),
        (j, j + 1, 1 - d[j]),
        (j + 1, j, d[j]),
        (-(j + 1), j, 1 - d[j]),
        (max(i - 1, jb - 1), j, a_j),
        (-max(i, jb), j, b_j),
    ]
    base = build_hl_quiver(xi)
    forward = base.b(j - 1, j) > 0
    out: Counter = Counter()
    for s, t, m in cand:
        if m == 0 or s in (0, n + 1, -(n + 1)) or t in (0, n + 1, -(n + 1)):
            continue
        if not forward:
            s, t = t, s
        out[(s, t)] += m
    return {(s, t, m) for (s, t), m in out.items() if m}
