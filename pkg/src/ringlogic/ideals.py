"""Ideals of Z_{p1^a1} x ... x Z_{pr^ar}, in two independent representations.

Every ideal of a product of prime-power cyclic rings is a product of ideals
p_i^{e_i} Z_{p_i^{a_i}}, so it is pinned down by an exponent vector
``e`` with ``0 <= e_i <= alpha_i``. That is the :class:`IdealIndex` fast
path. :class:`ExplicitIdeal` keeps the literal member set and the
set-theoretic operations, and serves as the oracle the fast path is
checked against.

Canonical order: ideals are listed by the co-exponent vector
``d = alpha - e`` in ascending mixed radix, last factor fastest. The zero
ideal comes first and the whole ring last; on Z_{p^k} this is the chain
I_0 ⊆ I_1 ⊆ ... ⊆ I_k.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .ring import (
    MAX_EXPLICIT_ORDER,
    MAX_IDEAL_COUNT,
    RingElement,
    RingSpec,
    SizeBoundError,
    SpecMismatchError,
    element_index,
    enumerate_elements,
)

_MIDDLE_LABELS = "RBCDFGHIJKLMNPQSTUVWXYZ"


@dataclass(frozen=True)
class IdealIndex:
    """The ideal prod_i p_i^{e_i} Z_{p_i^{alpha_i}} of ``spec``."""

    spec: RingSpec
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(x) for x in self.exponents)
        if len(exps) != self.spec.rank:
            raise ValueError("exponent vector length does not match the ring")
        for e, a in zip(exps, self.spec.alphas):
            if not 0 <= e <= a:
                raise ValueError(f"exponent {e} outside [0, {a}]")
        object.__setattr__(self, "exponents", exps)

    @property
    def cardinality(self) -> int:
        return math.prod(p ** (a - e) for (p, a), e in zip(self.spec.factors, self.exponents))

    @property
    def co_exponents(self) -> tuple[int, ...]:
        return tuple(a - e for a, e in zip(self.spec.alphas, self.exponents))

    @property
    def is_zero(self) -> bool:
        return self.exponents == self.spec.alphas

    @property
    def is_whole(self) -> bool:
        return not any(self.exponents)

    def issubset(self, other: IdealIndex) -> bool:
        _check_same(self, other)
        return all(e >= f for e, f in zip(self.exponents, other.exponents))

    __le__ = issubset

    def __add__(self, other: IdealIndex) -> IdealIndex:
        return sum_ideals(self, other)

    def __mul__(self, other: IdealIndex) -> IdealIndex:
        return product_ideals(self, other)

    def __and__(self, other: IdealIndex) -> IdealIndex:
        return intersect_ideals(self, other)

    def to_json(self, members: bool = False) -> dict:
        out = {"exponents": list(self.exponents), "cardinality": self.cardinality}
        if members:
            out["members"] = [list(m) for m in materialize(self).sorted_members()]
        return out


def _check_same(*ideals) -> RingSpec:
    spec = ideals[0].spec
    if any(i.spec != spec for i in ideals[1:]):
        raise SpecMismatchError("ideals belong to different rings")
    return spec


def zero_ideal(spec: RingSpec) -> IdealIndex:
    return IdealIndex(spec, spec.alphas)


def whole_ideal(spec: RingSpec) -> IdealIndex:
    return IdealIndex(spec, (0,) * spec.rank)


def sum_ideals(e: IdealIndex, f: IdealIndex) -> IdealIndex:
    spec = _check_same(e, f)
    return IdealIndex(spec, tuple(map(min, e.exponents, f.exponents)))


def product_ideals(e: IdealIndex, f: IdealIndex) -> IdealIndex:
    spec = _check_same(e, f)
    return IdealIndex(
        spec, tuple(min(x + y, a) for x, y, a in zip(e.exponents, f.exponents, spec.alphas))
    )


def intersect_ideals(e: IdealIndex, f: IdealIndex) -> IdealIndex:
    spec = _check_same(e, f)
    return IdealIndex(spec, tuple(map(max, e.exponents, f.exponents)))


def quotient_ideals(e: IdealIndex, f: IdealIndex) -> IdealIndex:
    """The colon ideal (I_e : I_f) = {x : x I_f ⊆ I_e}."""
    spec = _check_same(e, f)
    return IdealIndex(spec, tuple(max(x - y, 0) for x, y in zip(e.exponents, f.exponents)))


def annihilator(e: IdealIndex) -> IdealIndex:
    return IdealIndex(e.spec, e.co_exponents)


def ideal_power(e: IdealIndex, n: int) -> IdealIndex:
    """I^n by iterated product, with I^0 = A."""
    if n < 0:
        raise ValueError("negative ideal power")
    out = whole_ideal(e.spec)
    for _ in range(n):
        out = product_ideals(out, e)
    return out


def is_coprime(e: IdealIndex, f: IdealIndex) -> bool:
    return sum_ideals(e, f).is_whole


def enumerate_ideals(spec: RingSpec) -> list[IdealIndex]:
    """All N_A ideals in canonical order (zero ideal first, A last)."""
    if spec.ideal_count > MAX_IDEAL_COUNT:
        raise SizeBoundError(f"N_A = {spec.ideal_count} exceeds {MAX_IDEAL_COUNT}")
    alphas = spec.alphas
    return [
        IdealIndex(spec, tuple(a - d for a, d in zip(alphas, ds)))
        for ds in itertools.product(*(range(a + 1) for a in alphas))
    ]


def ideal_position(e: IdealIndex) -> int:
    """Index of ``e`` in :func:`enumerate_ideals`."""
    pos = 0
    for d, a in zip(e.co_exponents, e.spec.alphas):
        pos = pos * (a + 1) + d
    return pos


def exponent_array(spec: RingSpec) -> np.ndarray:
    """Exponent vectors of all ideals, canonical order, shape (N_A, r)."""
    return np.array([i.exponents for i in enumerate_ideals(spec)], dtype=np.int64).reshape(
        spec.ideal_count, spec.rank
    )


def position_array(spec: RingSpec, exps: np.ndarray) -> np.ndarray:
    """Vectorized :func:`ideal_position` over the last axis of ``exps``."""
    pos = np.zeros(exps.shape[:-1], dtype=np.int64)
    for i, a in enumerate(spec.alphas):
        pos = pos * (a + 1) + (a - exps[..., i])
    return pos


def ideal_labels(m: int) -> list[str]:
    """Display names: O for the bottom, E for the top, letters in between."""
    if m < 1:
        raise ValueError("need at least one element")
    if m == 1:
        return ["O"]
    middle = [
        _MIDDLE_LABELS[k] if k < len(_MIDDLE_LABELS) else f"I{k + 1}" for k in range(m - 2)
    ]
    return ["O", *middle, "E"]


# ---------------------------------------------------------------------------
# explicit-set oracle


@dataclass(frozen=True)
class ExplicitIdeal:
    """An ideal given by its member residue tuples."""

    spec: RingSpec
    members: frozenset

    @property
    def cardinality(self) -> int:
        return len(self.members)

    def __contains__(self, x) -> bool:
        if isinstance(x, RingElement):
            x = x.residues
        return tuple(x) in self.members

    def sorted_members(self) -> list[tuple[int, ...]]:
        return sorted(self.members)

    def issubset(self, other: ExplicitIdeal) -> bool:
        _check_same(self, other)
        return self.members <= other.members

    def is_ideal(self) -> bool:
        """Check 0 ∈ I, I + I ⊆ I and A·I ⊆ I by brute force."""
        t = _tables(self.spec)
        idx = _indices(self)
        if 0 not in idx:
            return False
        mask = _mask(self.spec, idx)
        return bool(mask[t.add[np.ix_(idx, idx)]].all() and mask[t.mul[:, idx]].all())


@dataclass(frozen=True)
class _ElementTables:
    residues: list
    add: np.ndarray
    mul: np.ndarray


@lru_cache(maxsize=64)
def _tables(spec: RingSpec) -> _ElementTables:
    if spec.order > MAX_EXPLICIT_ORDER:
        raise SizeBoundError(f"|A| = {spec.order} exceeds {MAX_EXPLICIT_ORDER}")
    residues = [x.residues for x in enumerate_elements(spec)]
    n = len(residues)
    add = np.empty((n, n), dtype=np.int64)
    mul = np.empty((n, n), dtype=np.int64)
    moduli = spec.moduli
    for i, x in enumerate(residues):
        for j, y in enumerate(residues):
            add[i, j] = element_index(spec, tuple((a + b) % k for a, b, k in zip(x, y, moduli)))
            mul[i, j] = element_index(spec, tuple((a * b) % k for a, b, k in zip(x, y, moduli)))
    return _ElementTables(residues, add, mul)


def _indices(ideal: ExplicitIdeal) -> np.ndarray:
    return np.array(sorted(element_index(ideal.spec, m) for m in ideal.members), dtype=np.int64)


def _mask(spec: RingSpec, idx) -> np.ndarray:
    mask = np.zeros(spec.order, dtype=bool)
    mask[np.asarray(idx, dtype=np.int64)] = True
    return mask


def _from_mask(spec: RingSpec, mask: np.ndarray) -> ExplicitIdeal:
    res = _tables(spec).residues
    return ExplicitIdeal(spec, frozenset(res[i] for i in np.flatnonzero(mask)))


def _additive_closure(spec: RingSpec, mask: np.ndarray) -> np.ndarray:
    add = _tables(spec).add
    mask = mask.copy()
    mask[0] = True
    while True:
        idx = np.flatnonzero(mask)
        grown = mask.copy()
        grown[add[np.ix_(idx, idx)].ravel()] = True
        if (grown == mask).all():
            return mask
        mask = grown


def principal_ideal(spec: RingSpec, x: RingElement) -> ExplicitIdeal:
    """<x>: close {x} under addition and multiplication by every element."""
    if x.spec != spec:
        raise SpecMismatchError("element belongs to a different ring")
    t = _tables(spec)
    start = element_index(spec, x.residues)
    seen = {0, start}
    frontier = [start]
    while frontier:
        u = frontier.pop()
        new = set(t.mul[:, u].tolist()) | {int(t.add[u, v]) for v in seen}
        new -= seen
        seen |= new
        frontier.extend(new)
    return _from_mask(spec, _mask(spec, sorted(seen)))


def materialize(e: IdealIndex) -> ExplicitIdeal:
    """{x : x_i ≡ 0 mod p_i^{e_i} for every i}."""
    spec = e.spec
    if spec.order > MAX_EXPLICIT_ORDER:
        raise SizeBoundError(f"|A| = {spec.order} exceeds {MAX_EXPLICIT_ORDER}")
    steps = [p**k for (p, _), k in zip(spec.factors, e.exponents)]
    members = frozenset(itertools.product(*(range(0, m, s) for m, s in zip(spec.moduli, steps))))
    return ExplicitIdeal(spec, members)


def explicit_op(kind: str, X: ExplicitIdeal, Y: ExplicitIdeal | None = None) -> ExplicitIdeal:
    """Literal set computation of sum, product, quotient, intersect or ann."""
    spec = X.spec
    if kind == "ann":
        zero = ExplicitIdeal(spec, frozenset({spec.zero.residues}))
        return explicit_op("quotient", zero, X)
    if Y is None:
        raise ValueError(f"{kind} needs two operands")
    _check_same(X, Y)
    t = _tables(spec)
    xi, yi = _indices(X), _indices(Y)
    if kind == "sum":
        return _from_mask(spec, _mask(spec, t.add[np.ix_(xi, yi)].ravel()))
    if kind == "product":
        gens = _mask(spec, t.mul[np.ix_(xi, yi)].ravel())
        return _from_mask(spec, _additive_closure(spec, gens))
    if kind == "quotient":
        xmask = _mask(spec, xi)
        return _from_mask(spec, xmask[t.mul[:, yi]].all(axis=1))
    if kind == "intersect":
        return ExplicitIdeal(spec, X.members & Y.members)
    raise ValueError(f"unknown ideal operation {kind!r}")


def enumerate_ideals_oracle(spec: RingSpec) -> frozenset:
    """Every ideal as an explicit set: all principal ideals closed under sums."""
    found = {principal_ideal(spec, x) for x in enumerate_elements(spec)}
    while True:
        sums = {explicit_op("sum", a, b) for a, b in itertools.combinations(found, 2)}
        if sums <= found:
            return frozenset(found)
        found |= sums


def identify(X: ExplicitIdeal) -> IdealIndex:
    """Recover the exponent vector of an explicit ideal.

    Each component projection of an ideal of a product ring is an ideal of
    Z_{p^a}, i.e. the multiples of some p^e.
    """
    spec = X.spec
    exps = []
    for i, (p, a) in enumerate(spec.factors):
        g = math.gcd(*(m[i] for m in X.members), p**a)
        e = 0
        while g % p == 0 and e < a:
            g //= p
            e += 1
        exps.append(e)
    idx = IdealIndex(spec, tuple(exps))
    if materialize(idx) != X:
        raise ValueError("member set is not an ideal of this ring")
    return idx
