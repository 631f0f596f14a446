"""Height functions of type A_n and the index combinatorics derived from them."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

from .errors import StepError


@dataclass(frozen=True)
class HeightFunction:
    """A map xi: [1, n] -> Z whose neighbouring values differ by exactly one.

    Values outside [1, n] are derived on demand: xi(0) = xi(2) and
    xi(n+1) = xi(n-1).  For n = 1 both boundary values are xi(1) + 1.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise StepError("a height function needs n >= 1 values")
        for a, b in zip(vals, vals[1:]):
            if abs(a - b) != 1:
                raise StepError(f"|{a} - {b}| != 1 in {vals}")

    @property
    def n(self) -> int:
        return len(self.values)

    def xi(self, i: int) -> int:
        n = self.n
        if 1 <= i <= n:
            return self.values[i - 1]
        if n == 1 and i in (0, 2):
            return self.values[0] + 1
        if i == 0:
            return self.values[1]
        if i == n + 1:
            return self.values[n - 2]
        raise IndexError(f"xi({i}) undefined for n={n}")

    __call__ = xi

    def star(self) -> "HeightFunction":
        return HeightFunction(self.values[::-1])

    @cached_property
    def indices(self) -> "DerivedIndices":
        return derived_indices(self)

    def __str__(self):
        return ",".join(map(str, self.values))


def new_height_function(n: int, values: Sequence[int]) -> HeightFunction:
    if len(values) != n:
        raise StepError(f"expected {n} values, got {len(values)}")
    return HeightFunction(tuple(values))


def parse_xi(text: str) -> HeightFunction:
    return HeightFunction(tuple(int(t) for t in text.replace(" ", "").split(",") if t))


def star(xi: HeightFunction) -> HeightFunction:
    return xi.star()


def enumerate_height_functions(n: int) -> list[HeightFunction]:
    """All 2^(n-1) height functions of rank n normalised to xi(1) = 0."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for steps in product((1, -1), repeat=n - 1):
        vals = [0]
        for s in steps:
            vals.append(vals[-1] + s)
        out.append(HeightFunction(tuple(vals)))
    return out


def iter_height_functions(max_n: int, min_n: int = 1) -> Iterator[HeightFunction]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_height_functions(n)


@dataclass(frozen=True)
class DerivedIndices:
    """Sink/source data of Q_xi, all maps 1-based.

    ``d[j]`` is 1 iff j is its own diamond index.  ``bullet[j]`` is the
    largest m < j with ``d[m] = 1``, or the sentinel 0 when there is none.
    """

    n: int
    d: tuple[int, ...]        # d[0] unused
    diamond: tuple[int, ...]  # diamond[0] unused
    bullet: tuple[int, ...]   # bullet[0] = bullet[1] = 0

    def bar(self, k: int) -> int:
        dk = self.d[k]
        return (k + 1) * (1 - dk) + (self.bullet[k] + 1) * dk

    def is_sink_or_source(self, j: int) -> bool:
        return j == 1 or self.d[j] == 1


def derived_indices(xi: HeightFunction) -> DerivedIndices:
    n = xi.n
    d = [0] * (n + 1)
    for j in range(1, n + 1):
        if j >= n - 1:
            d[j] = 1
        else:
            d[j] = int(xi(j) == xi(j + 2))
    diamond = [0] * (n + 1)
    nxt = n
    for i in range(n, 0, -1):
        if d[i]:
            nxt = i
        diamond[i] = nxt
    bullet = [0] * (n + 1)
    last = 0
    for j in range(1, n + 1):
        bullet[j] = last
        # vertex 1 only counts when d[1] = 1, so d[j-1] = 0 iff bullet(j-1) = bullet(j)
        if d[j]:
            last = j
    return DerivedIndices(n, tuple(d), tuple(diamond), tuple(bullet))
