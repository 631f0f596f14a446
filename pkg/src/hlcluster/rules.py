"""Compatibility of roots, tensor-product decisions and their Laurent verification.

A class in the Grothendieck ring is modelled as a formal sum of products of
labels (``GClass``).  Labels are elements of P+_xi whose f-free part is in
pr_xi or trivial; they are evaluated through the inverse of iota, so every
identity below becomes an exact Laurent-polynomial identity.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .cluster import Root, almost_positive_roots, cluster_variable, co_occur
from .errors import NotNormalizable, NotPrime, Unhandled
from .height import HeightFunction
from .iota import image_of_root, root_of_element, x_label, y_label
from .laurent import F, LaurentPoly
from .report import Report
from .monoid import (
    PElement,
    frozen,
    is_prime,
    normalize,
    omega_interval,
    pr_set,
    strip,
)

Product = tuple[PElement, ...]


@dataclass(frozen=True)
class GTerm:
    coeff: int
    factors: Product

    def to_json(self) -> dict:
        return {"coeff": self.coeff, "factors": [str(p) for p in self.factors]}


@dataclass(frozen=True)
class GClass:
    terms: tuple[GTerm, ...]

    @classmethod
    def of(cls, *products: Sequence[PElement]) -> "GClass":
        return cls(tuple(GTerm(1, tuple(p)) for p in products))

    def __add__(self, other: "GClass") -> "GClass":
        return GClass(self.terms + other.terms)

    def __neg__(self) -> "GClass":
        return GClass(tuple(GTerm(-t.coeff, t.factors) for t in self.terms))

    def to_json(self) -> list[dict]:
        return [t.to_json() for t in self.terms]


IRREDUCIBLE, REDUCIBLE = "irreducible", "reducible"


@dataclass(frozen=True)
class TensorVerdict:
    kind: str
    rule: str
    summands: tuple[Product, ...] = field(default=())

    @property
    def irreducible(self) -> bool:
        return self.kind == IRREDUCIBLE

    def as_class(self) -> GClass:
        return GClass.of(*self.summands)

    def to_json(self, xi: HeightFunction | None = None) -> dict:
        out = {"verdict": self.kind, "rule": self.rule}
        if self.summands:
            show = (lambda p: p.describe(xi)) if xi is not None else str
            out["summands"] = [[show(p) for p in s] for s in self.summands]
        return out


# evaluation -------------------------------------------------------------------

def eval_label(xi: HeightFunction, p: PElement) -> LaurentPoly:
    n = xi.n
    r, core = normalize(p)
    out = LaurentPoly.one(n)
    for i, e in enumerate(r):
        if e:
            out = out * LaurentPoly.variable(n, F, i + 1, e)
    if core.is_identity():
        return out
    if not is_prime(xi, core):
        raise NotNormalizable(f"{core} is neither trivial nor in pr_xi")
    return out * cluster_variable(xi, root_of_element(xi, core))


def eval_product(xi: HeightFunction, factors: Sequence[PElement]) -> LaurentPoly:
    out = LaurentPoly.one(xi.n)
    for p in factors:
        out = out * eval_label(xi, p)
    return out


def eval_class(xi: HeightFunction, c: GClass) -> LaurentPoly:
    total = LaurentPoly.zero(xi.n)
    for t in c.terms:
        total = total + t.coeff * eval_product(xi, t.factors)
    return total


# compatibility ------------------------------------------------------------------

def _count_diamonds(xi: HeightFunction, lo: int, hi: int) -> int:
    """#{lo <= m < hi : d_m = 1}."""
    d = xi.indices.d
    return sum(d[m] for m in range(max(lo, 1), min(hi, xi.n + 1)))


def is_compatible(xi: HeightFunction, b1: Root, b2: Root) -> bool:
    """Whether two almost positive roots lie in a common cluster."""
    if b1 == b2:
        return True
    if b1.negative and b2.negative:
        return True
    if b1.negative or b2.negative:
        neg, pos = (b1, b2) if b1.negative else (b2, b1)
        i, k, l = neg.i, pos.i, pos.j
        return k > i or l < i
    (i, j), (k, l) = sorted([(b1.i, b1.j), (b2.i, b2.j)])
    ix = xi.indices
    d, dia, bul = ix.d, ix.diamond, ix.bullet
    if j != dia[i]:
        if k == i or k > j + 1:
            return True
        if d[j] and bul[j] + 1 <= k <= j:
            return True
        if l != dia[k]:
            bj, bl = ix.bar(j), ix.bar(l)
            if bj == bl:
                return True
            if i < k < bj < bl and _count_diamonds(xi, k, bj - 1) % 2 == 1:
                return True
            if i < k < bl < bj and _count_diamonds(xi, k, bl - 1) % 2 == 0:
                return True
        return False
    return bul[k] != k - 1 or bul[k - 1] >= i or (l != dia[k] and i == k)


# tensor products ------------------------------------------------------------------

def _is_frozen_label(p: PElement) -> bool:
    r, core = normalize(p)
    return core.is_identity() and any(r)


def _prime_or_one(xi: HeightFunction, p: PElement) -> bool:
    return p.is_identity() or is_prime(xi, p)


def _end_generator(p: PElement, node: int) -> PElement:
    (sign,) = p.signs_at(node)
    return PElement.generator(p.n, node, sign)


def _shared_strip(xi: HeightFunction, p1: PElement, p2: PElement) -> bool:
    ends = {p1.min(), p1.max()} & {p2.min(), p2.max()}
    for node in ends:
        for g in (_end_generator(p1, node),):
            if g.divides(p2) and _prime_or_one(xi, p1 / g) and _prime_or_one(xi, p2 / g):
                return True
    return False


def _parts(xi: HeightFunction, lo: int, hi: int, node: int) -> tuple[PElement, PElement]:
    """omega(lo, hi) = rest * generator at ``node`` (node is lo or hi)."""
    w = omega_interval(xi, lo, hi)
    g = _end_generator(w, node)
    return w / g, g


def _sign_into(xi: HeightFunction, i: int, left: bool) -> int:
    """Sign at i of omega(m, i) (left) or omega(i, p) (right)."""
    return xi(i) - xi(i - 1) if left else xi(i) - xi(i + 1)


def normalize_product(xi: HeightFunction, labels: Sequence[PElement]) -> Product:
    """Split every label into frozen factors and its core; drop identities."""
    out = []
    for p in labels:
        r, core = normalize(p)
        for i, e in enumerate(r):
            out.extend([frozen(xi, i + 1)] * e)
        if not core.is_identity():
            out.append(core)
    if not out:
        return (PElement.identity(xi.n),)
    return tuple(sorted(out, key=lambda q: (_is_frozen_label(q), q)))


def decide_tensor(xi: HeightFunction, p1: PElement, p2: PElement) -> TensorVerdict:
    """Irreducible, or the two-term decomposition of [p1][p2]."""
    R = lambda name, *s: TensorVerdict(REDUCIBLE, name, tuple(normalize_product(xi, x) for x in s))
    I = lambda name: TensorVerdict(IRREDUCIBLE, name)
    if _is_frozen_label(p1) or _is_frozen_label(p2):
        if not (_is_frozen_label(p1) or is_prime(xi, p1)) or not (_is_frozen_label(p2) or is_prime(xi, p2)):
            raise NotPrime("labels must be prime or frozen")
        return I("frozen")
    for p in (p1, p2):
        if not is_prime(xi, p):
            raise NotPrime(f"{p} is not in pr_xi")
    if p1 == p2:
        return I("self")
    if _shared_strip(xi, p1, p2):
        return I("shared-generator")
    a, b = sorted((p1, p2), key=lambda p: (p.min(), p.max()))
    am, aM, bm, bM = a.min(), a.max(), b.min(), b.max()
    fr = lambda i: frozen(xi, i)
    right = lambda p: strip(xi, p, "right")
    left = lambda p: strip(xi, p, "left")

    if aM < bm:
        prod = a * b
        if is_prime(xi, prod):
            return R("disjoint-merge", [prod], [right(a), left(b)])
        return I("disjoint")

    if aM == bm:
        i = aM
        ga, gb = _end_generator(a, i), _end_generator(b, i)
        w1, w2 = a / ga, b / gb
        # omega_1 omega_2 = omega(m, p) when both sides are nontrivial
        merged = [w1 * w2] if _prime_or_one(xi, w1 * w2) else [w1, w2]
        return R("minmax-kr", [fr(i)] + merged, [right(a), left(b)])

    # now am < bm < aM (same-min and same-max pairs share an end generator)
    if bm == bM:
        return _generator_inside(xi, a, b)
    if bM < aM:
        return _four_point(xi, am, bm, bM, aM, nested=True)
    if bM > aM:
        return _four_point(xi, am, bm, aM, bM, nested=False)
    raise Unhandled(f"no rule for ({p1}, {p2})")


def _generator_inside(xi: HeightFunction, w: PElement, g: PElement) -> TensorVerdict:
    m, p, i = w.min(), w.max(), g.min()
    (c,) = g.signs_at(i)
    w1, _ = _parts(xi, m, i, i)
    w2, _ = _parts(xi, i, p, i)
    wmi, wip = omega_interval(xi, m, i), omega_interval(xi, i, p)
    sa, sb = _sign_into(xi, i, True), _sign_into(xi, i, False)
    right = lambda q: strip(xi, q, "right")
    left = lambda q: strip(xi, q, "left")
    f_i = frozen(xi, i)
    mk = lambda name, s1, s2: TensorVerdict(
        REDUCIBLE, name, (normalize_product(xi, s1), normalize_product(xi, s2))
    )
    if sa != sb:
        if c == sa:
            return mk("inside-star", [wmi, w2], [right(w1), left(wip)])
        return mk("inside-star-star", [w1, wip], [right(wmi), left(w2)])
    if c != sa:
        return mk("inside-dagger", [w1, f_i, w2], [right(wmi), left(wip)])
    return mk("inside-double-dagger", [wmi, wip], [right(w1), f_i, left(w2)])


def four_point_rhs(xi: HeightFunction, i1: int, i2: int, i3: int, i4: int) -> Product:
    """Right-hand side of the crossing/nested exchange identity."""
    w12 = omega_interval(xi, i1, i2)
    w34 = omega_interval(xi, i3, i4)
    w1 = w12 / _end_generator(w12, i2)
    w2 = w34 / _end_generator(w34, i3)
    a, b = _sign_into(xi, i2, True), _sign_into(xi, i2, False)
    c, d = _sign_into(xi, i3, True), _sign_into(xi, i3, False)
    out = [strip(xi, w1, "right") if a == b else strip(xi, w12, "right")]
    out += [frozen(xi, s) for s in range(i2, i3 + 1) if xi(s - 1) == xi(s + 1)]
    out.append(strip(xi, w2, "left") if c == d else strip(xi, w34, "left"))
    return tuple(out)


def _four_point(xi: HeightFunction, i1: int, i2: int, i3: int, i4: int, nested: bool) -> TensorVerdict:
    w = lambda a, b: omega_interval(xi, a, b)
    odd = omega_interval(xi, i2, i3).ht() % 2 == 1
    rhs = four_point_rhs(xi, i1, i2, i3, i4)
    if nested:
        if not odd:
            return TensorVerdict(IRREDUCIBLE, "nested-even")
        return TensorVerdict(REDUCIBLE, "nested-odd", (normalize_product(xi, (w(i1, i3), w(i2, i4))), normalize_product(xi, rhs)))
    if odd:
        return TensorVerdict(IRREDUCIBLE, "crossing-odd")
    return TensorVerdict(REDUCIBLE, "crossing-even", (normalize_product(xi, (w(i1, i4), w(i2, i3))), normalize_product(xi, rhs)))


def four_point_identity(xi: HeightFunction, i1: int, i2: int, i3: int, i4: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of the signed crossing-minus-nested identity."""
    w = lambda a, b: omega_interval(xi, a, b)
    sign = -1 if w(i2, i3).ht() % 2 else 1
    lhs = GClass((GTerm(sign, (w(i1, i3), w(i2, i4))), GTerm(-sign, (w(i1, i4), w(i2, i3)))))
    rhs = GClass.of(four_point_rhs(xi, i1, i2, i3, i4))
    return eval_class(xi, lhs), eval_class(xi, rhs)


# verification reports ----------------------------------------------------------------

def _core_root(xi: HeightFunction, p: PElement) -> Root | None:
    core = normalize(p)[1]
    return None if core.is_identity() else root_of_element(xi, core)


def verify_tensor_identities(xi: HeightFunction) -> Report:
    """Check every verdict on (pr + frozen) x (pr + frozen).

    Reducible verdicts: exact Laurent identity, the pair is never
    co-clustered, and each summand is a product of compatible labels.
    Irreducible pr x pr verdicts: the pair is co-clustered (comparing the
    Laurent values would only multiply the same two variables).
    """
    rep = Report(f"treduc xi={xi}")
    labels = list(pr_set(xi)) + [frozen(xi, i) for i in range(1, xi.n + 1)]
    for p1 in labels:
        for p2 in labels:
            rep.checked += 1
            try:
                v = decide_tensor(xi, p1, p2)
                if v.irreducible:
                    r1, r2 = _core_root(xi, p1), _core_root(xi, p2)
                    if r1 is not None and r2 is not None and not _is_frozen_label(p1) and not _is_frozen_label(p2):
                        if not co_occur(xi, r1, r2):
                            rep.fail((str(p1), str(p2), v.rule, "irreducible but not co-clustered"))
                    elif eval_label(xi, p1) * eval_label(xi, p2) != eval_label(xi, p1 * p2):
                        rep.fail((str(p1), str(p2), v.rule, "frozen product mismatch"))
                    continue
                lhs = eval_label(xi, p1) * eval_label(xi, p2)
                if lhs != eval_class(xi, v.as_class()):
                    rep.fail((str(p1), str(p2), v.rule, "Laurent identity fails"))
                    continue
                if co_occur(xi, root_of_element(xi, p1), root_of_element(xi, p2)):
                    rep.fail((str(p1), str(p2), v.rule, "reducible but co-clustered"))
                for s in v.summands:
                    roots = [r for r in (_core_root(xi, q) for q in s) if r is not None]
                    for x in range(len(roots)):
                        for y in range(x + 1, len(roots)):
                            if not co_occur(xi, roots[x], roots[y]):
                                rep.fail((str(p1), str(p2), v.rule, "summand is not a cluster monomial"))
            except Exception as exc:  # report, do not abort the sweep
                rep.fail((str(p1), str(p2), "error", repr(exc)))
    return rep


def verify_four_point(xi: HeightFunction) -> Report:
    rep = Report(f"four-point xi={xi}")
    n = xi.n
    for i1 in range(1, n + 1):
        for i2 in range(i1 + 1, n + 1):
            for i3 in range(i2 + 1, n + 1):
                for i4 in range(i3 + 1, n + 1):
                    rep.checked += 1
                    lhs, rhs = four_point_identity(xi, i1, i2, i3, i4)
                    if lhs != rhs:
                        rep.fail((i1, i2, i3, i4))
    return rep


def compat_cross_check(xi: HeightFunction) -> Report:
    rep = Report(f"compat xi={xi}")
    roots = almost_positive_roots(xi.n)
    for b1 in roots:
        for b2 in roots:
            rep.checked += 1
            a = is_compatible(xi, b1, b2)
            c = co_occur(xi, b1, b2)
            t = decide_tensor(xi, image_of_root(xi, b1), image_of_root(xi, b2)).irreducible
            if not a == c == t:
                rep.fail((str(b1), str(b2), a, c, t))
    return rep


# cluster-variable representatives --------------------------------------------------

def _pow(p: PElement, e: int) -> list[PElement]:
    return [p] if e else []


def _omega_or_none(xi: HeightFunction, i: int, j: int, e: int) -> list[PElement]:
    return [omega_interval(xi, i, j)] if e else []


def clusterrep_sides(xi: HeightFunction, part: str, i: int, j: int | None = None) -> tuple[GClass, GClass]:
    """Both sides of the representative identities (parts 'i', 'ii', 'iii')."""
    ix = xi.indices
    d, dia, bul = ix.d, ix.diamond, ix.bullet
    X = lambda k: x_label(xi, k)
    Y = lambda k: y_label(xi, k)
    fr = lambda k, e=1: [frozen(xi, k)] if e and 1 <= k <= xi.n else []
    dl = lambda a, b: int(a == b)
    if part == "i":
        lhs = [X(i)] + _omega_or_none(xi, i, i + 1, 1 - d[i]) + _pow(Y(i), d[i])
        r1 = fr(i) + _pow(X(i + 1), 1 - d[i])
        r2 = fr(i + 1, 1 - d[i]) + _pow(X(i + 1), d[i]) + [X(i - 1)]
        return GClass.of(lhs), GClass.of(r1, r2)
    assert j is not None
    jb = bul[j]
    if part == "ii":
        e = dl(j, dia[i])
        lhs = [X(j)] + _omega_or_none(xi, i, ix.bar(j), 1 - e) + _pow(Y(i), e)
        r1 = (
            fr(j, d[j - 1])
            + _omega_or_none(xi, i, j, 1 - d[j - 1])
            + _pow(Y(i), d[j - 1])
            + _pow(X(j + 1), 1 - d[j])
        )
        r2 = fr(j + 1, 1 - d[j]) + fr(i, dl(i, jb)) + _pow(X(j + 1), d[j]) + _pow(X(i - 1), 1 - dl(i, jb))
        return GClass.of(lhs), GClass.of(r1, r2)
    if part == "iii":
        k = bul[jb]
        e1 = dl(bul[j - 1], bul[i])
        e2 = dl(bul[i], bul[k]) * d[jb - 1]
        lhs = [X(j), omega_interval(xi, i, ix.bar(j))]
        r1 = (
            fr(j, d[j - 1])
            + _pow(X(j + 1), 1 - d[j])
            + _omega_or_none(xi, i, ix.bar(j - 1), 1 - e1)
            + _pow(Y(i), e1)
        )
        r2 = (
            fr(j + 1, 1 - d[j])
            + fr(jb, d[jb - 1])
            + _pow(X(j + 1), d[j])
            + _omega_or_none(xi, i, ix.bar(jb - 1), 1 - e2)
            + _pow(Y(i), e2)
        )
        return GClass.of(lhs), GClass.of(r1, r2)
    raise ValueError(f"unknown part {part!r}")


def clusterrep_instances(xi: HeightFunction) -> list[tuple[str, int, int | None]]:
    n = xi.n
    bul = xi.indices.bullet
    out: list[tuple[str, int, int | None]] = [("i", i, None) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append(("ii" if bul[j] <= i else "iii", i, j))
    return out


def verify_clusterrep(xi: HeightFunction) -> Report:
    rep = Report(f"clusterrep xi={xi}")
    for part, i, j in clusterrep_instances(xi):
        rep.checked += 1
        try:
            lhs, rhs = clusterrep_sides(xi, part, i, j)
            if eval_class(xi, lhs) != eval_class(xi, rhs):
                rep.fail((part, i, j))
        except Exception as exc:
            rep.fail((part, i, j, repr(exc)))
    return rep
