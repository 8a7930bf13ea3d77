"""Finite residuated lattices as Cayley tables, and exhaustive axiom suites.

A :class:`FiniteAlgebraTable` stores ∧, ∨, ⊙, → and ≤ over carrier indices
``0..m-1``. The derived operations are ``x* = x → 0`` and
``x ⊕ y = x* → y``. :func:`from_ideal_lattice` builds the table of
(Id(A), ∩, +, ⊗, →, {0}, A) where ``I → J`` is the colon ideal ``(J:I)``.

Suites evaluate every axiom over all tuples of carrier indices. Failures are
reported as witnesses: the first failing tuple (in lexicographic scan order)
per axiom, at most :data:`MAX_WITNESSES` per suite.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

import numpy as np

from .ideals import (
    enumerate_ideals_oracle,
    explicit_op,
    exponent_array,
    ideal_labels,
    ideal_position,
    identify,
    position_array,
)
from .ring import MAX_IDEAL_COUNT, RingSpec, SizeBoundError

MAX_TABLE_SIZE = MAX_IDEAL_COUNT
MAX_WITNESSES = 10
# Upper bound on the number of tuples evaluated per numpy call.
_CHUNK_CELLS = 1 << 22


def _frozen(a) -> np.ndarray:
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class FiniteAlgebraTable:
    """Cayley tables for (∧, ∨, ⊙, →) with constants and the order relation.

    ``notation`` is ``"ring"`` for ideal lattices (∨ is +, ⊙ is ⊗, * is Ann)
    and ``"lattice"`` otherwise; it only affects how witnesses are printed.
    """

    meet: np.ndarray
    join: np.ndarray
    times: np.ndarray
    imp: np.ndarray
    leq: np.ndarray
    bottom: int
    top: int
    labels: tuple[str, ...] = ()
    exponents: tuple[tuple[int, ...], ...] | None = None
    provenance: str = ""
    notation: str = "lattice"

    def __post_init__(self):
        m = np.asarray(self.imp).shape[0]
        for name in ("meet", "join", "times", "imp"):
            arr = np.asarray(getattr(self, name), dtype=np.int64)
            if arr.shape != (m, m):
                raise ValueError(f"{name} table must be {m}x{m}")
            if arr.size and (arr.min() < 0 or arr.max() >= m):
                raise ValueError(f"{name} table has entries outside the carrier")
            object.__setattr__(self, name, _frozen(arr))
        leq = np.asarray(self.leq, dtype=bool)
        if leq.shape != (m, m):
            raise ValueError(f"leq must be {m}x{m}")
        object.__setattr__(self, "leq", _frozen(leq))
        if not (0 <= self.bottom < m and 0 <= self.top < m):
            raise ValueError("bottom/top outside the carrier")
        labels = tuple(self.labels) or tuple(ideal_labels(m)) if m else ()
        if len(labels) != m:
            raise ValueError("one label per carrier element required")
        object.__setattr__(self, "labels", labels)

    @property
    def size(self) -> int:
        return self.imp.shape[0]

    @cached_property
    def star(self) -> np.ndarray:
        return _frozen(self.imp[:, self.bottom])

    @cached_property
    def oplus(self) -> np.ndarray:
        return _frozen(self.imp[self.star, :])

    def with_imp_entry(self, x: int, y: int, value: int) -> FiniteAlgebraTable:
        """Copy of this table with the single entry imp[x, y] replaced."""
        imp = np.array(self.imp)
        imp[x, y] = value
        return FiniteAlgebraTable(
            self.meet, self.join, self.times, imp, self.leq, self.bottom, self.top,
            self.labels, self.exponents, self.provenance + f" [imp({x},{y}):={value}]",
            self.notation,
        )

    def to_json(self) -> dict:
        out = {
            "carrier": list(self.labels),
            "bottom": self.bottom,
            "top": self.top,
        }
        if self.exponents is not None:
            out["exponents"] = [list(e) for e in self.exponents]
        for name in ("meet", "join", "times", "imp", "oplus"):
            out[name] = getattr(self, name).tolist()
        out["star"] = self.star.tolist()
        out["leq"] = self.leq.astype(int).tolist()
        return out


def from_ideal_lattice(spec: RingSpec) -> FiniteAlgebraTable:
    """(Id(A), ∩, +, ⊗, →, {0}, A) with I → J = (J:I), in canonical ideal order."""
    m = spec.ideal_count
    if m > MAX_TABLE_SIZE:
        raise SizeBoundError(f"N_A = {m} exceeds {MAX_TABLE_SIZE}")
    E = exponent_array(spec)
    alphas = np.array(spec.alphas, dtype=np.int64)
    ei, ej = E[:, None, :], E[None, :, :]
    pos = lambda exps: position_array(spec, exps)  # noqa: E731
    return FiniteAlgebraTable(
        meet=pos(np.maximum(ei, ej)),
        join=pos(np.minimum(ei, ej)),
        times=pos(np.minimum(ei + ej, alphas)),
        imp=pos(np.maximum(ej - ei, 0)),
        leq=(ei >= ej).all(axis=-1),
        bottom=0,
        top=m - 1,
        labels=tuple(ideal_labels(m)),
        exponents=tuple(map(tuple, E.tolist())),
        provenance=f"Id({spec.render()})",
        notation="ring",
    )


def from_explicit_sets(spec: RingSpec) -> FiniteAlgebraTable:
    """The same lattice computed from element sets alone (|A| <= 256).

    Ideals come from the brute-force enumeration and every table entry is a
    literal set operation, so comparing against :func:`from_ideal_lattice`
    cross-checks the exponent-vector closed forms.
    """
    ideals = enumerate_ideals_oracle(spec)
    m = len(ideals)
    ordered: list = [None] * m
    for X in ideals:
        ordered[ideal_position(identify(X))] = X
    where = {X: k for k, X in enumerate(ordered)}
    tables = {name: np.empty((m, m), dtype=np.int64) for name in ("meet", "join", "times", "imp")}
    leq = np.empty((m, m), dtype=bool)
    for i, X in enumerate(ordered):
        for j, Y in enumerate(ordered):
            tables["meet"][i, j] = where[explicit_op("intersect", X, Y)]
            tables["join"][i, j] = where[explicit_op("sum", X, Y)]
            tables["times"][i, j] = where[explicit_op("product", X, Y)]
            tables["imp"][i, j] = where[explicit_op("quotient", Y, X)]
            leq[i, j] = X.members <= Y.members
    smallest = min(range(m), key=lambda k: ordered[k].cardinality)
    largest = max(range(m), key=lambda k: ordered[k].cardinality)
    return FiniteAlgebraTable(
        **tables,
        leq=leq,
        bottom=smallest,
        top=largest,
        labels=tuple(ideal_labels(m)),
        exponents=tuple(identify(X).exponents for X in ordered),
        provenance=f"Id({spec.render()}) from element sets",
        notation="ring",
    )


def table_mismatches(a: FiniteAlgebraTable, b: FiniteAlgebraTable) -> list[str]:
    """Human-readable differences between two tables over the same carrier."""
    if a.size != b.size:
        return [f"carrier sizes differ: {a.size} vs {b.size}"]
    out = []
    for name in ("bottom", "top"):
        if getattr(a, name) != getattr(b, name):
            out.append(f"{name}: {getattr(a, name)} vs {getattr(b, name)}")
    for name in ("meet", "join", "times", "imp", "leq"):
        x, y = getattr(a, name), getattr(b, name)
        for i, j in np.argwhere(x != y):
            out.append(f"{name}[{a.labels[i]},{a.labels[j]}]: {x[i, j]} vs {y[i, j]}")
    return out


# ---------------------------------------------------------------------------
# axioms


@dataclass(frozen=True)
class Axiom:
    id: str
    variables: tuple[str, ...]
    statement: str
    holds: Callable  # (table, *index arrays) -> bool array

    @property
    def arity(self) -> int:
        return len(self.variables)


def _ax(id, variables, statement, holds) -> Axiom:
    return Axiom(id, tuple(variables), statement, holds)


def first_failure(t: FiniteAlgebraTable, axiom: Axiom) -> tuple[int, ...] | None:
    """First tuple (lexicographic) where the axiom fails, or None."""
    m = t.size
    k = axiom.arity
    ar = np.arange(m)
    if k == 0:
        return None if bool(axiom.holds(t)) else ()
    rest = max(1, m ** (k - 1))
    step = max(1, _CHUNK_CELLS // rest)
    for start in range(0, m, step):
        xs = ar[start:start + step]
        grids = [xs.reshape((-1,) + (1,) * (k - 1))]
        for i in range(1, k):
            shape = [1] * k
            shape[i] = m
            grids.append(ar.reshape(shape))
        ok = np.broadcast_to(axiom.holds(t, *grids), (len(xs),) + (m,) * (k - 1))
        bad = np.argwhere(~ok)
        if len(bad):
            first = bad[0]
            return (int(xs[first[0]]),) + tuple(int(v) for v in first[1:])
    return None


_ORDER = [
    _ax("order.reflexive", "x", "x ≤ x", lambda t, x: t.leq[x, x]),
    _ax("order.antisymmetric", "xy", "x ≤ y and y ≤ x ⇒ x = y",
        lambda t, x, y: ~(t.leq[x, y] & t.leq[y, x]) | (x == y)),
    _ax("order.transitive", "xyz", "x ≤ y and y ≤ z ⇒ x ≤ z",
        lambda t, x, y, z: ~(t.leq[x, y] & t.leq[y, z]) | t.leq[x, z]),
    _ax("bounds", "x", "0 ≤ x ≤ 1", lambda t, x: t.leq[t.bottom, x] & t.leq[x, t.top]),
]

_RESIDUATED = _ORDER + [
    _ax("LR1.meet_lower", "xy", "x ∧ y ≤ x and x ∧ y ≤ y",
        lambda t, x, y: t.leq[t.meet[x, y], x] & t.leq[t.meet[x, y], y]),
    _ax("LR1.meet_greatest", "xyz", "z ≤ x and z ≤ y ⇒ z ≤ x ∧ y",
        lambda t, x, y, z: ~(t.leq[z, x] & t.leq[z, y]) | t.leq[z, t.meet[x, y]]),
    _ax("LR1.join_upper", "xy", "x ≤ x ∨ y and y ≤ x ∨ y",
        lambda t, x, y: t.leq[x, t.join[x, y]] & t.leq[y, t.join[x, y]]),
    _ax("LR1.join_least", "xyz", "x ≤ z and y ≤ z ⇒ x ∨ y ≤ z",
        lambda t, x, y, z: ~(t.leq[x, z] & t.leq[y, z]) | t.leq[t.join[x, y], z]),
    _ax("LR2.commutative", "xy", "x ⊙ y = y ⊙ x", lambda t, x, y: t.times[x, y] == t.times[y, x]),
    _ax("LR2.associative", "xyz", "(x ⊙ y) ⊙ z = x ⊙ (y ⊙ z)",
        lambda t, x, y, z: t.times[t.times[x, y], z] == t.times[x, t.times[y, z]]),
    _ax("LR2.identity", "x", "x ⊙ 1 = x", lambda t, x: t.times[x, t.top] == x),
    _ax("LR2.monotone", "xyz", "x ≤ y ⇒ x ⊙ z ≤ y ⊙ z",
        lambda t, x, y, z: ~t.leq[x, y] | t.leq[t.times[x, z], t.times[y, z]]),
    _ax("LR3.adjoint", "xyz", "z ≤ x → y ⇔ x ⊙ z ≤ y",
        lambda t, x, y, z: t.leq[z, t.imp[x, y]] == t.leq[t.times[x, z], y]),
]

_BCK = _ORDER + [
    _ax("BCK1", "xyz", "x → y ≤ (y → z) → (x → z)",
        lambda t, x, y, z: t.leq[t.imp[x, y], t.imp[t.imp[y, z], t.imp[x, z]]]),
    _ax("BCK2", "xy", "x ≤ (x → y) → y", lambda t, x, y: t.leq[x, t.imp[t.imp[x, y], y]]),
    _ax("BCK3", "xy", "x ≤ y ⇔ x → y = 1", lambda t, x, y: t.leq[x, y] == (t.imp[x, y] == t.top)),
]

_CHANG = [
    _ax("C", "xy", "x ∨ y = (x → y) → y", lambda t, x, y: t.join[x, y] == t.imp[t.imp[x, y], y]),
]

_WAJSBERG = [
    _ax("W1", "x", "1 → x = x", lambda t, x: t.imp[t.top, x] == x),
    _ax("W2", "xyz", "(x → y) → ((y → z) → (x → z)) = 1",
        lambda t, x, y, z: t.imp[t.imp[x, y], t.imp[t.imp[y, z], t.imp[x, z]]] == t.top),
    _ax("W3", "xy", "(x → y) → y = (y → x) → x",
        lambda t, x, y: t.imp[t.imp[x, y], y] == t.imp[t.imp[y, x], x]),
    _ax("W4", "xy", "(x* → y*) → (y → x) = 1",
        lambda t, x, y: t.imp[t.imp[t.star[x], t.star[y]], t.imp[y, x]] == t.top),
]

_MV = [
    _ax("monoid.commutative", "xy", "x ⊕ y = y ⊕ x", lambda t, x, y: t.oplus[x, y] == t.oplus[y, x]),
    _ax("monoid.associative", "xyz", "(x ⊕ y) ⊕ z = x ⊕ (y ⊕ z)",
        lambda t, x, y, z: t.oplus[t.oplus[x, y], z] == t.oplus[x, t.oplus[y, z]]),
    _ax("monoid.identity", "x", "x ⊕ 0 = x", lambda t, x: t.oplus[x, t.bottom] == x),
    _ax("MV1", "x", "x** = x", lambda t, x: t.star[t.star[x]] == x),
    _ax("MV2", "x", "x ⊕ 0* = 0*", lambda t, x: t.oplus[x, t.star[t.bottom]] == t.star[t.bottom]),
    _ax("MV3", "xy", "(x* ⊕ y)* ⊕ y = (y* ⊕ x)* ⊕ x",
        lambda t, x, y: t.oplus[t.star[t.oplus[t.star[x], y]], y]
        == t.oplus[t.star[t.oplus[t.star[y], x]], x]),
]

_DIV = _ax("div", "xy", "x ⊙ (x → y) = x ∧ y", lambda t, x, y: t.times[x, t.imp[x, y]] == t.meet[x, y])
_DN = _ax("DN", "x", "x** = x", lambda t, x: t.star[t.star[x]] == x)
_IDEMPOTENT = _ax("idempotent", "x", "x ⊙ x = x", lambda t, x: t.times[x, x] == x)
_EXCLUDED_MIDDLE = _ax("excluded_middle", "x", "x ∨ x* = 1", lambda t, x: t.join[x, t.star[x]] == t.top)
_PRELINEAR = _ax("prelinear", "xy", "(x → y) ∨ (y → x) = 1",
                 lambda t, x, y: t.join[t.imp[x, y], t.imp[y, x]] == t.top)

_PROP35 = {
    "i": [_ax("symmetric_double_imp", "xy", "(x → y) → y = (y → x) → x",
              lambda t, x, y: t.imp[t.imp[x, y], y] == t.imp[t.imp[y, x], x])],
    "ii": [_ax("join_as_double_imp", "xy", "x ∨ y = (x → y) → y",
               lambda t, x, y: t.join[x, y] == t.imp[t.imp[x, y], y])],
    "iii": [_DN, _DIV, _PRELINEAR],
    "iv": [_ax("double_imp_absorption", "xy", "((x → y) → y) → x = y → x",
               lambda t, x, y: t.imp[t.imp[t.imp[x, y], y], x] == t.imp[y, x])],
    "v": [_ax("double_imp_below", "xy", "x ≤ y ⇒ (y → x) → x ≤ y",
              lambda t, x, y: ~t.leq[x, y] | t.leq[t.imp[t.imp[y, x], x], y])],
}

_PROP3181 = {
    "i": [_ax("product_transfer", "xyz", "x ⊙ y ≤ z and x ≤ y ⇒ x ≤ z",
              lambda t, x, y, z: ~(t.leq[t.times[x, y], z] & t.leq[x, y]) | t.leq[x, z])],
    "ii": [
        _ax("filter_top", "z", "1 ∈ D_z", lambda t, z: t.leq[z, t.top]),
        _ax("filter_modus_ponens", "zxy", "x ∈ D_z and x → y ∈ D_z ⇒ y ∈ D_z",
            lambda t, z, x, y: ~(t.leq[z, x] & t.leq[z, t.imp[x, y]]) | t.leq[z, y]),
    ],
    "iii": [_ax("square_bound", "xy", "x ⊙ x ≤ y ⇒ x ≤ y",
                lambda t, x, y: ~t.leq[t.times[x, x], y] | t.leq[x, y])],
    "iv": [_ax("divisible_bound", "xyz", "x ⊙ y ≤ z ⇒ x ⊙ (x → y) ≤ z",
               lambda t, x, y, z: ~t.leq[t.times[x, y], z] | t.leq[t.times[x, t.imp[x, y]], z])],
    "v": [_IDEMPOTENT],
}

_PROP333 = {
    "i": [_IDEMPOTENT, _DN],
    "ii": [_IDEMPOTENT, _ax("dense", "y", "y* = 0 ⇒ y = 1",
                            lambda t, y: (t.star[y] != t.bottom) | (y == t.top))],
    "iii": [_EXCLUDED_MIDDLE],
}


def _power(t: FiniteAlgebraTable, x, n: int):
    out = np.full(np.shape(x), t.top)
    for _ in range(n):
        out = t.times[out, x]
    return out


def _coprime(t, x, y):
    return t.join[x, y] == t.top


# Ring-level identities of the ideal lattice, read through the table:
# I+J = join, I∩J = meet, I⊗J = times, (J:I) = imp[I, J], Ann(I) = star[I].
_RING_IDENTITIES = [
    _ax("product_below_sum", "IJ", "I⊗J ⊆ I+J", lambda t, i, j: t.leq[t.times[i, j], t.join[i, j]]),
    _ax("ann_bounds", "", "Ann(0) = A and Ann(A) = 0",
        lambda t: (t.star[t.bottom] == t.top) & (t.star[t.top] == t.bottom)),
    _ax("ann_of_sum", "IJ", "Ann(I+J) = Ann(I) ∩ Ann(J)",
        lambda t, i, j: t.star[t.join[i, j]] == t.meet[t.star[i], t.star[j]]),
    _ax("colon_units", "I", "(A:I) = A, (I:A) = I, (I:I) = A",
        lambda t, i: (t.imp[i, t.top] == t.top) & (t.imp[t.top, i] == i) & (t.imp[i, i] == t.top)),
    _ax("colon_extensive", "IJ", "I ⊆ (I:J)", lambda t, i, j: t.leq[i, t.imp[j, i]]),
    _ax("colon_product_below", "IJ", "(I:J)⊗J ⊆ I", lambda t, i, j: t.leq[t.times[t.imp[j, i], j], i]),
    _ax("colon_order", "IJ", "I ⊆ J ⇔ (J:I) = A", lambda t, i, j: t.leq[i, j] == (t.imp[i, j] == t.top)),
    _ax("colon_nested", "IJK", "((I:J):K) = (I:(J⊗K)) = ((I:K):J)",
        lambda t, i, j, k: (t.imp[k, t.imp[j, i]] == t.imp[t.times[j, k], i])
        & (t.imp[k, t.imp[j, i]] == t.imp[j, t.imp[k, i]])),
    _ax("colon_of_sum", "IJK", "(K:(I+J)) = (K:I) ∩ (K:J)",
        lambda t, i, j, k: t.imp[t.join[i, j], k] == t.meet[t.imp[i, k], t.imp[j, k]]),
    _ax("LR3", "IJK", "I⊗J ⊆ K ⇔ I ⊆ (K:J)",
        lambda t, i, j, k: t.leq[t.times[i, j], k] == t.leq[i, t.imp[j, k]]),
    _ax("colon_triple", "IJ", "(J:(J:(J:I))) = (J:I)",
        lambda t, i, j: t.imp[t.imp[t.imp[i, j], j], j] == t.imp[i, j]),
    _ax("colon_ann_antitone", "IJ", "(I:J) ⊆ (Ann(J):Ann(I))",
        lambda t, i, j: t.leq[t.imp[j, i], t.imp[t.star[i], t.star[j]]]),
    _ax("ann_kills", "I", "I⊗Ann(I) = 0", lambda t, i: t.times[i, t.star[i]] == t.bottom),
    _ax("product_zero_ann", "IJ", "I⊗J = 0 ⇔ I ⊆ Ann(J)",
        lambda t, i, j: (t.times[i, j] == t.bottom) == t.leq[i, t.star[j]]),
    _ax("ann_of_product", "IJ", "Ann(I⊗J) = (Ann(J):I) = (Ann(I):J)",
        lambda t, i, j: (t.star[t.times[i, j]] == t.imp[i, t.star[j]])
        & (t.star[t.times[i, j]] == t.imp[j, t.star[i]])),
    _ax("coprime_powers", "IJ", "I+J = A ⇒ I^n + J^n = A for n ≤ 4",
        lambda t, i, j: ~_coprime(t, i, j)
        | np.logical_and.reduce([_coprime(t, _power(t, i, n), _power(t, j, n)) for n in range(1, 5)])),
    _ax("chang", "IJ", "I+J = (J:(J:I))", lambda t, i, j: t.join[i, j] == t.imp[t.imp[i, j], j]),
    _ax("chang_symmetric", "IJ", "(I:(I:J)) = (J:(J:I)) = I+J",
        lambda t, i, j: (t.imp[t.imp[j, i], i] == t.imp[t.imp[i, j], j])
        & (t.imp[t.imp[j, i], i] == t.join[i, j])),
    _ax("ann_involution_meet", "IJ", "Ann(Ann(I)) = I, I∩J = (J:I)⊗I = (I:J)⊗J, (I:J)+(J:I) = A",
        lambda t, i, j: (t.star[t.star[i]] == i)
        & (t.meet[i, j] == t.times[t.imp[i, j], i]) & (t.meet[i, j] == t.times[t.imp[j, i], j])
        & (t.join[t.imp[j, i], t.imp[i, j]] == t.top)),
    _ax("colon_chang_absorb", "IJ", "(I:(J:(J:I))) = (I:J)",
        lambda t, i, j: t.imp[t.imp[t.imp[i, j], j], i] == t.imp[j, i]),
    _ax("double_colon_bound", "IJ", "I ⊆ J ⇒ (I:(I:J)) ⊆ J",
        lambda t, i, j: ~t.leq[i, j] | t.leq[t.imp[t.imp[j, i], i], j]),
    _ax("meet_as_product", "IJ", "I∩J = (J:I)⊗I = (I:J)⊗J",
        lambda t, i, j: (t.meet[i, j] == t.times[t.imp[i, j], i]) & (t.meet[i, j] == t.times[t.imp[j, i], j])),
    _ax("ann_involutive", "I", "Ann(Ann(I)) = I", lambda t, i: t.star[t.star[i]] == i),
    _ax("oplus_ann_top", "I", "I ⊕ Ann(I) = A where I ⊕ J = (J:Ann(I))",
        lambda t, i: t.oplus[i, t.star[i]] == t.top),
    _ax("ann_of_meet", "IJ", "Ann(I∩J) = Ann(I)+Ann(J)",
        lambda t, i, j: t.star[t.meet[i, j]] == t.join[t.star[i], t.star[j]]),
    _ax("coprime_ann_iff_idempotent", "I", "I+Ann(I) = A ⇔ I⊗I = I",
        lambda t, i: _coprime(t, i, t.star[i]) == (t.times[i, i] == i)),
]

# Colon and annihilator laws that hold exactly when every alpha is 1.
_BOOLEAN_RING = [
    _ax("colon_ann_fixed", "I", "(I:Ann(I)) = I", lambda t, i: t.imp[t.star[i], i] == i),
    _ax("ann_below_forces_top", "J", "Ann(J) ⊆ J ⇒ J = A", lambda t, j: ~t.leq[t.star[j], j] | (j == t.top)),
    _ax("colon_below_forces_top", "IJ", "(J:I) ⊆ I ⇒ I = A", lambda t, i, j: ~t.leq[t.imp[i, j], i] | (i == t.top)),
]

SUITES: dict[str, list[Axiom]] = {
    "residuated": _RESIDUATED,
    "bck": _BCK,
    "chang": _CHANG,
    "wajsberg": _WAJSBERG,
    "mv": _MV,
    "divisible": [_DIV],
    "double_negation": [_DN],
    "heyting": [_IDEMPOTENT],
    "boolean": [_EXCLUDED_MIDDLE],
    "ring_identities": _RING_IDENTITIES,
    "boolean_ring": _BOOLEAN_RING,
}

BUNDLES: dict[str, dict[str, list[Axiom]]] = {
    "prop35": _PROP35,
    "prop3181": _PROP3181,
    "prop333": _PROP333,
}

SUITE_IDS = tuple(SUITES) + tuple(BUNDLES)
#: Suites making up the structure claims for every finite ring.
STRUCTURE_SUITES = ("residuated", "bck", "chang", "wajsberg", "mv", "divisible", "double_negation")


@dataclass(frozen=True)
class Witness:
    axiom: Axiom
    args: tuple[int, ...]

    def render(self, t: FiniteAlgebraTable) -> str:
        names = {v: t.labels[a] for v, a in zip(self.axiom.variables, self.args)}
        text = self.axiom.statement
        if names:
            text = re.sub(r"\b(" + "|".join(map(re.escape, names)) + r")\b",
                          lambda mt: names[mt.group(1)], text)
        if t.notation == "ring":
            text = _ring_notation(text, t)
        if text.count(" = ") == 1 and not re.search("[⇒⇔,]", text):
            text = text.replace(" = ", " ≠ ")
        else:
            text += " fails"
        if len(names) == 1:
            head = next(iter(names.values()))
        else:
            head = ", ".join(f"{v}={n}" for v, n in names.items())
        return f"{head}: {text}" if head else text


def _ring_notation(text: str, t: FiniteAlgebraTable) -> str:
    """Rewrite lattice symbols as ideal operations: x* becomes Ann(x), 1 becomes A."""
    text = re.sub(r"(?<![\w(.])1(?![\w).])", "A", text)
    text = re.sub(r"(?<![\w(.])0(?![\w).])", t.labels[t.bottom], text)
    while (k := text.find("*")) >= 0:
        # The operand is the word or balanced parenthesis group left of the star.
        j = k - 1
        if text[j] == ")":
            depth = 0
            while True:
                depth += {")": 1, "(": -1}.get(text[j], 0)
                if depth == 0:
                    break
                j -= 1
            if j > 0 and text[j - 1].isalnum():
                # A call such as Ann(x) is itself the operand.
                while j > 0 and text[j - 1].isalnum():
                    j -= 1
                operand = text[j:k]
            else:
                operand = text[j + 1:k - 1]
        else:
            while j > 0 and text[j - 1].isalnum():
                j -= 1
            operand = text[j:k]
        text = f"{text[:j]}Ann({operand}){text[k + 1:]}"
    return text.replace(" ∨ ", "+").replace(" ∧ ", " ∩ ").replace("⊙", "⊗")


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    passed: bool
    witnesses: tuple[Witness, ...] = ()
    conditions: dict[str, bool] | None = field(default=None)

    def render(self, t: FiniteAlgebraTable) -> str:
        lines = [f"{self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        if self.conditions is not None:
            lines.append("  conditions: " + ", ".join(
                f"({k}) {'holds' if v else 'fails'}" for k, v in self.conditions.items()))
        for w in self.witnesses:
            lines.append(f"  [{w.axiom.id}] {w.render(t)}")
        return "\n".join(lines)

    def to_json(self, t: FiniteAlgebraTable) -> dict:
        out = {
            "suite": self.suite,
            "pass": self.passed,
            "witnesses": [
                {"axiom": w.axiom.id, "args": [t.labels[a] for a in w.args], "text": w.render(t)}
                for w in self.witnesses
            ],
        }
        if self.conditions is not None:
            out["conditions"] = dict(self.conditions)
        return out


def _scan(t: FiniteAlgebraTable, axioms: list[Axiom]) -> list[Witness]:
    found = []
    for ax in axioms:
        hit = first_failure(t, ax)
        if hit is not None:
            found.append(Witness(ax, hit))
    return found


def check_suite(t: FiniteAlgebraTable, suite: str) -> SuiteReport:
    """Evaluate one suite exhaustively over ``t``."""
    if suite in SUITES:
        witnesses = _scan(t, SUITES[suite])[:MAX_WITNESSES]
        return SuiteReport(suite, not witnesses, tuple(witnesses))
    if suite in BUNDLES:
        # An equivalence bundle passes when its listed conditions all agree.
        per_condition = {name: _scan(t, axioms) for name, axioms in BUNDLES[suite].items()}
        conditions = {name: not ws for name, ws in per_condition.items()}
        witnesses: list[Witness] = []
        if len(set(conditions.values())) > 1:
            for ws in per_condition.values():
                witnesses.extend(ws)
        return SuiteReport(suite, not witnesses, tuple(witnesses[:MAX_WITNESSES]), conditions)
    raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_IDS)}")


def passes(t: FiniteAlgebraTable, suite: str) -> bool:
    return check_suite(t, suite).passed


class LatticeClass(enum.Enum):
    BOOLEAN = "Boolean"
    MV_NOT_BOOLEAN = "MV_not_Boolean"
    HEYTING_NOT_MV = "Heyting_not_MV"
    OTHER = "other"

    def __str__(self) -> str:
        return self.value


def classify_lattice(t: FiniteAlgebraTable) -> LatticeClass:
    if passes(t, "boolean"):
        return LatticeClass.BOOLEAN
    chang = passes(t, "chang")
    if chang:
        return LatticeClass.MV_NOT_BOOLEAN
    if passes(t, "heyting"):
        return LatticeClass.HEYTING_NOT_MV
    return LatticeClass.OTHER


def derived_op(t: FiniteAlgebraTable, kind: str, x: int, y: int | None = None) -> int:
    """star(x) = x → 0, oplus(x, y) = x* → y, imp(x, y) = x → y."""
    m = t.size
    for v in (x,) if kind == "star" else (x, y):
        if v is None or not 0 <= v < m:
            raise IndexError(f"carrier index {v} out of range 0..{m - 1}")
    if kind == "star":
        return int(t.star[x])
    if kind == "oplus":
        return int(t.oplus[x, y])
    if kind == "imp":
        return int(t.imp[x, y])
    raise ValueError(f"unknown derived operation {kind!r}")


# ---------------------------------------------------------------------------
# rendering

_SYMBOLS = {
    "lattice": {"imp": "→", "oplus": "⊕", "join": "∨", "meet": "∧", "times": "⊙", "star": "*"},
    "ring": {"imp": "→", "oplus": "⊕", "join": "+", "meet": "∩", "times": "⊗", "star": "Ann"},
}
_OP_ALIASES = {"sum": "join", "product": "times", "intersect": "meet", "ann": "star"}


def render_table(t: FiniteAlgebraTable, op: str) -> str:
    """Cayley table in row-operand-first layout, cells as carrier labels."""
    op = _OP_ALIASES.get(op, op)
    if op not in _SYMBOLS["lattice"]:
        raise ValueError(f"unknown table operation {op!r}")
    symbol = _SYMBOLS.get(t.notation, _SYMBOLS["lattice"])[op]
    labels = t.labels
    w = max(len(symbol), *(len(s) for s in labels))
    if op == "star":
        rows = [f"{'x'.ljust(w)} | {symbol}"]
        rows.append("-" * (w + 1) + "+" + "-" * (len(symbol) + 1))
        rows += [f"{labels[i].ljust(w)} | {labels[int(t.star[i])]}" for i in range(t.size)]
        return "\n".join(rows)
    data = getattr(t, op)
    header = f"{symbol.ljust(w)} | " + " ".join(s.ljust(w) for s in labels)
    rule = "-" * (w + 1) + "+" + "-" * (len(header) - w - 2)
    rows = [header.rstrip(), rule]
    for i in range(t.size):
        rows.append((f"{labels[i].ljust(w)} | " + " ".join(labels[int(v)].ljust(w) for v in data[i])).rstrip())
    return "\n".join(rows)


def table_to_json(t: FiniteAlgebraTable) -> str:
    return json.dumps(t.to_json(), sort_keys=True)
