"""Seeds, exchange relations, cluster variables and the exchange graph."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator

from .errors import BoundExceeded, EngineBug, NotDivisible
from .height import HeightFunction
from .laurent import F, X, LaurentPoly
from .quiver import Quiver, build_hl_quiver, is_frozen, mutate


@dataclass(frozen=True, order=True)
class Root:
    """An almost positive root: -alpha_i (``i == j``, ``negative``) or alpha_{i,j}."""

    i: int
    j: int
    negative: bool = False

    @classmethod
    def neg(cls, i: int) -> "Root":
        return cls(i, i, True)

    @classmethod
    def pos(cls, i: int, j: int) -> "Root":
        if i > j:
            raise ValueError(f"alpha_{{{i},{j}}} needs i <= j")
        return cls(i, j, False)

    def __str__(self):
        return f"-a{self.i}" if self.negative else f"a{self.i},{self.j}"

    def to_json(self):
        return {"neg": self.i} if self.negative else {"root": [self.i, self.j]}


def almost_positive_roots(n: int) -> list[Root]:
    return [Root.neg(i) for i in range(1, n + 1)] + [
        Root.pos(i, j) for i in range(1, n + 1) for j in range(i, n + 1)
    ]


def parse_root(text: str) -> Root:
    text = text.strip()
    if text.startswith("-"):
        return Root.neg(int(text[1:]))
    i, j = (int(t) for t in text.split(","))
    return Root.pos(i, j)


@dataclass(frozen=True)
class Seed:
    quiver: Quiver
    cluster: tuple[LaurentPoly, ...]  # attachment at mutable vertex v is cluster[v-1]

    @property
    def n(self) -> int:
        return self.quiver.n

    def attachment(self, v: int) -> LaurentPoly:
        if is_frozen(v):
            return LaurentPoly.variable(self.n, F, -v)
        return self.cluster[v - 1]

    def key(self) -> frozenset:
        return frozenset(self.cluster)


def initial_seed(xi: HeightFunction) -> Seed:
    n = xi.n
    return Seed(build_hl_quiver(xi), tuple(LaurentPoly.variable(n, X, v) for v in range(1, n + 1)))


def exchange_binomial(seed: Seed, v: int) -> LaurentPoly:
    n = seed.n
    into = LaurentPoly.one(n)
    out = LaurentPoly.one(n)
    for u, m in seed.quiver.in_arrows(v):
        into = into * seed.attachment(u) ** m
    for w, m in seed.quiver.out_arrows(v):
        out = out * seed.attachment(w) ** m
    return into + out


def mutate_seed(seed: Seed, v: int) -> Seed:
    num = exchange_binomial(seed, v)
    try:
        new = num / seed.attachment(v)
    except NotDivisible as exc:
        raise EngineBug(f"exchange relation at {v} is not Laurent") from exc
    if min(new.min_f_exponents()) < 0:
        raise EngineBug(f"negative frozen exponent after mutation at {v}")
    cluster = list(seed.cluster)
    cluster[v - 1] = new
    return Seed(mutate(seed.quiver, v), tuple(cluster))


@lru_cache(maxsize=None)
def _path_seed(xi: HeightFunction, i: int, j: int) -> Seed:
    if j < i:
        return initial_seed(xi)
    return mutate_seed(_path_seed(xi, i, j - 1), j)


def cluster_variable(xi: HeightFunction, root: Root) -> LaurentPoly:
    """x[-alpha_i] = x_i; x[alpha_{i,j}] is the variable at j after mutating at i, ..., j."""
    if root.negative:
        return LaurentPoly.variable(xi.n, X, root.i)
    if not 1 <= root.i <= root.j <= xi.n:
        raise IndexError(f"root {root} out of range for n={xi.n}")
    return _path_seed(xi, root.i, root.j).attachment(root.j)


def all_cluster_variables(xi: HeightFunction) -> dict[Root, LaurentPoly]:
    return {r: cluster_variable(xi, r) for r in almost_positive_roots(xi.n)}


def clusterind_sides(xi: HeightFunction, i: int, j: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of the recursion for x_j * x[alpha_{i,j}] (i == j is the base case)."""
    n = xi.n
    ix = xi.indices
    d, bul = ix.d, ix.bullet

    def x(k):
        return LaurentPoly.variable(n, X, k)

    def f(k, e=1):
        return LaurentPoly.variable(n, F, k, e) if e else LaurentPoly.one(n)

    def xa(a, b):
        # alpha_{a,m} = alpha_m for m <= a
        if b <= a:
            return cluster_variable(xi, Root.pos(b, b))
        return cluster_variable(xi, Root.pos(a, b))

    def pw(p, e):
        return p if e else LaurentPoly.one(n)

    if i == j:
        lhs = x(i) * cluster_variable(xi, Root.pos(i, i))
        rhs = f(i) * pw(x(i + 1), 1 - d[i]) + f(i + 1, 1 - d[i]) * x(i - 1) * pw(x(i + 1), d[i])
        return lhs, rhs
    lhs = x(j) * cluster_variable(xi, Root.pos(i, j))
    jb = bul[j]
    same = int(bul[i] == jb)
    at_i = int(i == jb)
    first = f(j, d[j - 1]) * xa(i, j - 1) * pw(x(j + 1), 1 - d[j])
    inner = LaurentPoly.zero(n)
    if same + at_i:
        inner = inner + (same + at_i) * f(i, at_i) * pw(x(i - 1), 1 - at_i)
    if 1 - same - at_i:
        inner = inner + (1 - same - at_i) * f(jb, d[jb - 1]) * xa(i, jb - 1)
    second = f(j + 1, 1 - d[j]) * pw(x(j + 1), d[j]) * inner
    return lhs, first + second


def verify_clusterind(xi: HeightFunction) -> list[tuple[int, int]]:
    """Pairs (i, j) for which the recursion fails; empty when all hold."""
    fails = []
    for i in range(1, xi.n + 1):
        for j in range(i, xi.n + 1):
            lhs, rhs = clusterind_sides(xi, i, j)
            if lhs != rhs:
                fails.append((i, j))
    return fails


def catalan_cluster_count(n: int) -> int:
    return comb(2 * n + 2, n + 1) // (n + 2)


@dataclass
class ExchangeGraph:
    xi: HeightFunction
    clusters: list[frozenset]
    seeds: list[Seed]
    edges: list[tuple[int, int, int]]  # (cluster index, cluster index, mutated vertex)
    membership: dict[LaurentPoly, frozenset[int]]

    def variables(self) -> set[LaurentPoly]:
        return set(self.membership)

    def co_occur(self, p: LaurentPoly, q: LaurentPoly) -> bool:
        if p not in self.membership or q not in self.membership:
            raise KeyError("variable not in the exchange graph")
        return bool(self.membership[p] & self.membership[q])

    def to_dot(self, names: dict[LaurentPoly, str] | None = None) -> str:
        lines = ["graph exchange {"]
        for k, c in enumerate(self.clusters):
            if names:
                label = " ".join(sorted(names.get(p, "?") for p in c))
                lines.append(f'  c{k} [label="{label}"];')
            else:
                lines.append(f"  c{k};")
        for a, b, v in self.edges:
            lines.append(f'  c{a} -- c{b} [label="{v}"];')
        lines.append("}")
        return "\n".join(lines)


@lru_cache(maxsize=64)
def exchange_graph(xi: HeightFunction, max_seeds: int | None = None) -> ExchangeGraph:
    """Breadth-first closure of the initial seed under all mutations."""
    n = xi.n
    bound = max_seeds if max_seeds is not None else 10 * catalan_cluster_count(n)
    start = initial_seed(xi)
    index = {start.key(): 0}
    seeds = [start]
    edges = set()
    queue = deque([0])
    while queue:
        k = queue.popleft()
        for v in range(1, n + 1):
            s2 = mutate_seed(seeds[k], v)
            key = s2.key()
            if key not in index:
                if len(seeds) >= bound:
                    raise BoundExceeded(f"more than {bound} clusters for xi={xi}")
                index[key] = len(seeds)
                seeds.append(s2)
                queue.append(index[key])
            a, b = sorted((k, index[key]))
            edges.add((a, b, v))
    clusters = [s.key() for s in seeds]
    membership: dict[LaurentPoly, set[int]] = {}
    for k, c in enumerate(clusters):
        for p in c:
            membership.setdefault(p, set()).add(k)
    return ExchangeGraph(
        xi, clusters, seeds, sorted(edges), {p: frozenset(s) for p, s in membership.items()}
    )


def co_occur(xi: HeightFunction, b1: Root, b2: Root) -> bool:
    g = exchange_graph(xi)
    return g.co_occur(cluster_variable(xi, b1), cluster_variable(xi, b2))


def iter_attachments(g: ExchangeGraph) -> Iterator[LaurentPoly]:
    for s in g.seeds:
        yield from s.cluster
