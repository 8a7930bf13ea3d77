"""Finite MV-algebras from ideal lattices.

Every finite MV-algebra is a product of chains, and the chain with m
elements is unique up to isomorphism. A multiplicative partition
n = m_1 * ... * m_s therefore names one MV-algebra with n elements, realized
here as Id(Z_{p^{m_1 - 1}} x ... x Z_{p^{m_s - 1}}).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np

from .ideals import ideal_labels
from .residuated import (
    FiniteAlgebraTable,
    LatticeClass,
    check_suite,
    classify_lattice,
    from_ideal_lattice,
)
from .ring import RingSpec, SizeBoundError, specs_of_order

MAX_ISO_SIZE = 12
MAX_CLASSIFY_N = 12
MAX_PARTITION_N = 10**6
MAX_TABLE2_ORDER = 16


@dataclass(frozen=True)
class MultiplicativePartition:
    """An unordered factorization of ``n`` into factors >= 2, sorted ascending."""

    factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(sorted(int(f) for f in self.factors))
        if not factors or any(f < 2 for f in factors):
            raise ValueError("factors must be integers >= 2")
        object.__setattr__(self, "factors", factors)

    @property
    def n(self) -> int:
        return int(np.prod(self.factors))

    @property
    def is_chain(self) -> bool:
        return len(self.factors) == 1

    def __str__(self) -> str:
        return "·".join(map(str, self.factors))


def _factorizations(n: int, smallest: int):
    if n == 1:
        yield ()
        return
    d = smallest
    while d * d <= n:
        if n % d == 0:
            for rest in _factorizations(n // d, d):
                yield (d,) + rest
        d += 1
    if n >= smallest:
        yield (n,)


def multiplicative_partitions(n: int) -> list[MultiplicativePartition]:
    """All factorizations of n into factors >= 2, the singleton [n] included.

    Ordered by number of factors, then lexicographically.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > MAX_PARTITION_N:
        raise SizeBoundError(f"n = {n} exceeds {MAX_PARTITION_N}")
    parts = sorted(set(_factorizations(n, 2)), key=lambda f: (len(f), f))
    return [MultiplicativePartition(f) for f in parts]


@dataclass(frozen=True, eq=False)
class MvAlgebra:
    table: FiniteAlgebraTable
    provenance: str = ""
    partition: MultiplicativePartition | None = None
    spec: RingSpec | None = None

    def __post_init__(self):
        report = check_suite(self.table, "mv")
        if not report.passed:
            raise ValueError(f"not an MV-algebra: {report.render(self.table)}")
        if self.table.size >= 2 and self.table.bottom == self.table.top:
            raise ValueError("0 and 1 coincide")

    @property
    def size(self) -> int:
        return self.table.size

    @property
    def is_chain(self) -> bool:
        leq = self.table.leq
        return bool((leq | leq.T).all())

    def to_json(self) -> dict:
        t = self.table
        return {
            "provenance": self.provenance,
            "partition": list(self.partition.factors) if self.partition else None,
            "ring": self.spec.render() if self.spec else None,
            "carrier": list(t.labels),
            "oplus": t.oplus.tolist(),
            "star": t.star.tolist(),
            "imp": t.imp.tolist(),
        }


def chain_mv(m: int) -> MvAlgebra:
    """The m-element MV-chain I_0 < ... < I_k (k = m - 1) from closed forms.

    I_i → I_j is the top if i <= j and I_{k-i+j} otherwise; I_i* = I_{k-i};
    I_i ⊕ I_j = I_{min(i+j, k)}.
    """
    if m < 2:
        raise ValueError(f"a chain needs at least 2 elements, got {m}")
    k = m - 1
    i, j = np.ogrid[0:m, 0:m]
    table = FiniteAlgebraTable(
        meet=np.minimum(i, j),
        join=np.maximum(i, j),
        times=np.maximum(i + j - k, 0),
        imp=np.where(i <= j, k, k - i + j),
        leq=np.broadcast_to(i <= j, (m, m)),
        bottom=0,
        top=k,
        labels=tuple(ideal_labels(m)),
        provenance=f"MV-chain with {m} elements",
    )
    return MvAlgebra(table, table.provenance, MultiplicativePartition((m,)))


def ring_for_partition(part: MultiplicativePartition, p: int = 2) -> RingSpec:
    """Z_{p^{m_1-1}} x ... x Z_{p^{m_s-1}}, whose ideal lattice has n elements."""
    return RingSpec(tuple((p, m - 1) for m in part.factors))


def ideal_mv(spec: RingSpec, partition: MultiplicativePartition | None = None) -> MvAlgebra:
    t = from_ideal_lattice(spec)
    return MvAlgebra(t, t.provenance, partition, spec)


# ---------------------------------------------------------------------------
# isomorphism


def _as_table(x) -> FiniteAlgebraTable:
    return x.table if isinstance(x, MvAlgebra) else x


def _fingerprints(t: FiniteAlgebraTable) -> list[tuple]:
    """Per-element isomorphism invariants."""
    out = []
    for x in range(t.size):
        multiples = {x}
        y = x
        while True:
            y = int(t.oplus[y, x])
            if y in multiples:
                break
            multiples.add(y)
        out.append((
            int(t.leq[:, x].sum()),  # size of the principal down-set
            int(t.leq[x, :].sum()),
            bool(t.oplus[x, x] == x),
            bool(t.star[x] == x),
            len(multiples),
        ))
    return out


def find_isomorphism(a, b) -> tuple[int, ...] | None:
    """A bijection phi (phi[x] in b for x in a) preserving ⊕ and *, or None."""
    ta, tb = _as_table(a), _as_table(b)
    m = ta.size
    if max(m, tb.size) > MAX_ISO_SIZE:
        raise SizeBoundError(f"isomorphism search limited to {MAX_ISO_SIZE} elements")
    for t in (ta, tb):
        if not check_suite(t, "mv").passed:
            raise ValueError(f"{t.provenance or 'table'} is not an MV-algebra")
    if m != tb.size:
        return None
    fa, fb = _fingerprints(ta), _fingerprints(tb)
    if sorted(fa) != sorted(fb):
        return None
    candidates = {x: [y for y in range(m) if fb[y] == fa[x]] for x in range(m)}
    phi = {ta.bottom: tb.bottom, ta.top: tb.top}
    if any(phi[x] not in candidates[x] for x in phi):
        return None
    # Smallest candidate blocks first, so failures surface early.
    order = sorted((x for x in range(m) if x not in phi), key=lambda x: (len(candidates[x]), x))

    def consistent(x: int) -> bool:
        y = phi[x]
        sx = int(ta.star[x])
        if sx in phi and phi[sx] != tb.star[y]:
            return False
        for u, v in phi.items():
            for s, t in ((x, u), (u, x)):
                r = int(ta.oplus[s, t])
                if r in phi and phi[r] != tb.oplus[phi[s], phi[t]]:
                    return False
        return True

    used = set(phi.values())

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        for y in candidates[x]:
            if y in used:
                continue
            phi[x] = y
            used.add(y)
            if consistent(x) and extend(k + 1):
                return True
            del phi[x]
            used.discard(y)
        return False

    if not all(consistent(x) for x in list(phi)) or not extend(0):
        return None
    perm = tuple(phi[x] for x in range(m))
    p = np.array(perm)
    if not ((p[ta.oplus] == tb.oplus[np.ix_(p, p)]).all() and (p[ta.star] == tb.star[p]).all()):
        return None
    return perm


def is_isomorphic(a, b) -> bool:
    return find_isomorphism(a, b) is not None


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class Classification:
    n: int
    algebras: tuple[MvAlgebra, ...]
    chains: int
    boolean: int

    @property
    def total(self) -> int:
        return len(self.algebras)

    def summary(self) -> dict:
        return {"n": self.n, "total": self.total, "chains": self.chains, "boolean": self.boolean}

    def to_json(self) -> dict:
        return {**self.summary(), "algebras": [a.to_json() for a in self.algebras]}


def classify_all(n: int) -> Classification:
    """One representative per multiplicative partition, built at p = 2.

    Representatives are checked pairwise non-isomorphic by exhaustive search.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > MAX_CLASSIFY_N:
        raise SizeBoundError(f"classification limited to n <= {MAX_CLASSIFY_N}")
    reps = tuple(ideal_mv(ring_for_partition(part, 2), part) for part in multiplicative_partitions(n))
    for a, b in itertools.combinations(reps, 2):
        if is_isomorphic(a, b):
            raise AssertionError(f"{a.provenance} and {b.provenance} are isomorphic")
    chains = sum(a.is_chain for a in reps)
    boolean = sum(classify_lattice(a.table) is LatticeClass.BOOLEAN for a in reps)
    return Classification(n, reps, chains, boolean)


def _generator_text(part: MultiplicativePartition) -> str:
    return " x ".join("Zp" if m == 2 else f"Zp^{m - 1}" for m in part.factors)


def _variety_tag(alg: MvAlgebra) -> str:
    boolean = classify_lattice(alg.table) is LatticeClass.BOOLEAN
    if alg.is_chain:
        return "Boole chain" if boolean else "MV chain"
    return "Boole" if boolean else "MV"


@dataclass(frozen=True)
class Report:
    kind: str
    columns: tuple[str, ...]
    rows: tuple[tuple, ...] = field(default_factory=tuple)

    def to_json(self) -> str:
        return json.dumps(
            {"kind": self.kind, "rows": [dict(zip(self.columns, r)) for r in self.rows]},
            sort_keys=True,
        )

    def to_text(self) -> str:
        if self.kind == "table1":
            # Transposed like the published table: one column per n.
            head = [""] + [f"n={r[0]}" for r in self.rows]
            mv = ["MV-alg"] + [str(r[1]) for r in self.rows]
            boole = ["Boole alg"] + [str(r[2]) if r[2] else "–" for r in self.rows]
            grid = [head, mv, boole]
        else:
            grid = [list(self.columns)] + [[str(c) for c in r] for r in self.rows]
        widths = [max(len(row[i]) for row in grid) for i in range(len(grid[0]))]
        return "".join(
            "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n" for row in grid
        )

    def to_csv(self) -> str:
        import csv
        import io

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        writer.writerows(self.rows)
        return buf.getvalue()


def _ring_text(spec: RingSpec) -> str:
    primes = spec.primes
    if spec.rank > 1 and len(set(primes)) == len(primes):
        return f"Z{spec.order} ≃ {spec.render()}"
    return spec.render()


def report_tables(kind: str, n_max: int) -> Report:
    """Recompute the summary tables for 2 <= n <= n_max."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    if kind == "table1":
        if n_max > MAX_CLASSIFY_N:
            raise SizeBoundError(f"table1 limited to n <= {MAX_CLASSIFY_N}")
        rows = []
        for n in range(2, n_max + 1):
            c = classify_all(n)
            rows.append((n, c.total, c.boolean))
        return Report(kind, ("n", "mv_algebras", "boolean_algebras"), tuple(rows))
    if kind == "table2":
        if n_max > MAX_TABLE2_ORDER:
            raise SizeBoundError(f"table2 limited to |A| <= {MAX_TABLE2_ORDER}")
        rows = []
        for n in range(2, n_max + 1):
            for spec in specs_of_order(n):
                verdict = classify_lattice(from_ideal_lattice(spec))
                text = {LatticeClass.BOOLEAN: "Boolean algebra",
                        LatticeClass.MV_NOT_BOOLEAN: "MV-algebra"}.get(verdict, str(verdict))
                rows.append((n, _ring_text(spec), text))
        return Report(kind, ("n", "ring", "ideal_lattice"), tuple(rows))
    if kind == "table3":
        if n_max > MAX_CLASSIFY_N:
            raise SizeBoundError(f"table3 limited to n <= {MAX_CLASSIFY_N}")
        rows = []
        for n in range(2, n_max + 1):
            c = classify_all(n)
            gens = " and ".join(f"{_generator_text(a.partition)} ({_variety_tag(a)})" for a in c.algebras)
            rows.append((n, c.total, gens))
        return Report(kind, ("n", "mv_algebras", "generating_rings"), tuple(rows))
    raise ValueError(f"unknown report {kind!r}; choose table1, table2 or table3")
