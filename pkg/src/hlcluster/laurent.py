"""Exact Laurent polynomials in x_1..x_n and f_1..f_n over the integers.

A monomial is a dense exponent tuple of length 2n: the first n entries are
the exponents of x_1..x_n, the last n those of f_1..f_n.
"""
from __future__ import annotations

import re
from typing import Iterable, Mapping

from .errors import NotDivisible, RankMismatch, ZeroPolynomial

Monomial = tuple[int, ...]

X, F = "x", "f"


class LaurentPoly:
    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, int] | None = None):
        self.n = n
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    if len(mono) != 2 * n:
                        raise RankMismatch(f"monomial {mono} has wrong length for n={n}")
                    clean[tuple(mono)] = int(c)
        self._terms = clean
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, n: int) -> "LaurentPoly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "LaurentPoly":
        return cls.constant(n, 1)

    @classmethod
    def constant(cls, n: int, c: int) -> "LaurentPoly":
        return cls(n, {(0,) * (2 * n): c})

    @classmethod
    def variable(cls, n: int, kind: str, index: int, power: int = 1) -> "LaurentPoly":
        """x_index or f_index; indices 0 and n+1 are the boundary value 1."""
        if index == 0 or index == n + 1:
            return cls.one(n)
        if not 1 <= index <= n:
            raise IndexError(f"{kind}{index} out of range for n={n}")
        exps = [0] * (2 * n)
        exps[index - 1 + (n if kind == F else 0)] = power
        return cls(n, {tuple(exps): 1})

    @classmethod
    def monomial(cls, n: int, x: Iterable[int], f: Iterable[int], coeff: int = 1) -> "LaurentPoly":
        return cls(n, {tuple(x) + tuple(f): coeff})

    # structure
    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.n, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly.constant(self.n, other)
        if other.n != self.n:
            raise RankMismatch(f"rank {self.n} vs {other.n}")
        return other

    # arithmetic
    def __add__(self, other):
        other = self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return LaurentPoly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return LaurentPoly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise NotDivisible("only monomials have Laurent inverses")
            ((m, c),) = self._terms.items()
            if c not in (1, -1):
                raise NotDivisible(f"coefficient {c} is not a unit")
            return LaurentPoly(self.n, {tuple(e * k for e in m): c ** (-k)})
        out = LaurentPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        return exact_div(self, other)

    # inspection
    def min_f_exponents(self) -> tuple[int, ...]:
        return min_f_exponents(self)

    def x_part(self, mono: Monomial) -> Monomial:
        return mono[: self.n]

    def coefficients(self) -> list[int]:
        return [c for _, c in self.items()]

    # serialisation
    def to_json(self) -> list[dict]:
        n = self.n
        return [{"coeff": str(c), "x": list(m[:n]), "f": list(m[n:])} for m, c in self.items()]

    @classmethod
    def from_json(cls, n: int, data: list[dict]) -> "LaurentPoly":
        return cls(n, {tuple(t["x"]) + tuple(t["f"]): int(t["coeff"]) for t in data})

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({self.n}, {self._terms!r})"


def _mono_str(n: int, mono: Monomial) -> str:
    parts = []
    for idx, e in enumerate(mono):
        if not e:
            continue
        name = f"x{idx + 1}" if idx < n else f"f{idx - n + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_poly(p: LaurentPoly) -> str:
    """Human readable form, terms in descending canonical order, e.g. ``3*x1^-2*f2 + 1``."""
    if not p:
        return "0"
    out = []
    for mono, c in reversed(p.items()):
        ms = _mono_str(p.n, mono)
        if not ms:
            body = str(abs(c))
        elif abs(c) == 1:
            body = ms
        else:
            body = f"{abs(c)}*{ms}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


def format_factored(p: LaurentPoly) -> str:
    """Pull the denominator out front: ``(f1*x1 + f2)*x1^-1``."""
    if len(p) < 2:
        return format_poly(p)
    lo, _ = _exp_bounds(p)
    den = tuple(min(e, 0) for e in lo)
    if not any(den):
        return format_poly(p)
    num = LaurentPoly(p.n, {tuple(a - b for a, b in zip(m, den)): c for m, c in p.items()})
    return f"({format_poly(num)})*{_mono_str(p.n, den)}"


_TERM = re.compile(r"([xf])(\d+)(?:\^(-?\d+))?")


def parse_poly(n: int, text: str) -> LaurentPoly:
    """Inverse of :func:`format_poly` (sums of signed products only)."""
    total = LaurentPoly.zero(n)
    text = text.replace(" ", "")
    for chunk in re.split(r"(?<!\^)(?=[+-])", text):
        if not chunk:
            continue
        coeff = -1 if chunk[0] == "-" else 1
        body = chunk.lstrip("+-")
        term = LaurentPoly.constant(n, coeff)
        for factor in body.split("*"):
            m = _TERM.fullmatch(factor)
            if m:
                term = term * LaurentPoly.variable(n, m[1], int(m[2]), int(m[3] or 1))
            else:
                term = term * int(factor)
        total = total + term
    return total


def min_f_exponents(a: LaurentPoly) -> tuple[int, ...]:
    if not a:
        raise ZeroPolynomial("min_f_exponents of the zero polynomial")
    n = a.n
    monos = list(a._terms)
    return tuple(min(m[n + k] for m in monos) for k in range(n))


def _exp_bounds(p: LaurentPoly) -> tuple[list[int], list[int]]:
    monos = list(p._terms)
    width = len(monos[0])
    lo = [min(m[k] for m in monos) for k in range(width)]
    hi = [max(m[k] for m in monos) for k in range(width)]
    return lo, hi


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return q with q*b == a, or raise NotDivisible.

    Lex-order long division.  Any exact quotient has per-variable exponents
    inside [lo(a) - lo(b), hi(a) - hi(b)], which bounds the loop.
    """
    b = a._check(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return LaurentPoly.zero(a.n)
    if b.is_monomial():
        ((mb, cb),) = b._terms.items()
        out = {}
        for m, c in a._terms.items():
            q, r = divmod(c, cb)
            if r:
                raise NotDivisible(f"coefficient {c} not divisible by {cb}")
            out[tuple(x - y for x, y in zip(m, mb))] = q
        return LaurentPoly(a.n, out)

    alo, ahi = _exp_bounds(a)
    blo, bhi = _exp_bounds(b)
    qlo = [x - y for x, y in zip(alo, blo)]
    qhi = [x - y for x, y in zip(ahi, bhi)]
    if any(l > h for l, h in zip(qlo, qhi)):
        raise NotDivisible("exponent ranges are incompatible")

    lead_b = max(b._terms)
    cb = b._terms[lead_b]
    rem = dict(a._terms)
    quot: dict[Monomial, int] = {}
    b_items = list(b._terms.items())
    while rem:
        lead = max(rem)
        c = rem[lead]
        q, r = divmod(c, cb)
        if r:
            raise NotDivisible(f"coefficient {c} not divisible by {cb}")
        t = tuple(x - y for x, y in zip(lead, lead_b))
        if any(e < l or e > h for e, l, h in zip(t, qlo, qhi)):
            raise NotDivisible("quotient term outside admissible exponent box")
        quot[t] = q
        for mb, c2 in b_items:
            m = tuple(x + y for x, y in zip(t, mb))
            v = rem.get(m, 0) - q * c2
            if v:
                rem[m] = v
            else:
                rem.pop(m, None)
    return LaurentPoly(a.n, quot)
