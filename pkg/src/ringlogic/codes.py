"""Binary block codes attached to ideal lattices.

Two constructions:

* the membership code C_A: one word per ideal, bit i set iff the i-th ring
  element (canonical mixed-radix order) lies in the ideal;
* the reduced code: one word per carrier element w of an algebra table, bit j
  set iff ``w → x_j = 1``, i.e. the cut function of the identity map on the
  carrier.
"""

from __future__ import annotations

import csv
import enum
import io
import itertools
import json
from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Mapping

import numpy as np

from .ideals import enumerate_ideals, ideal_labels, materialize
from .residuated import FiniteAlgebraTable, check_suite
from .ring import MAX_EXPLICIT_ORDER, RingSpec, SizeBoundError, element_index


@dataclass(frozen=True)
class Codeword:
    bits: str
    label: str = ""

    def __post_init__(self):
        if set(self.bits) - {"0", "1"}:
            raise ValueError(f"codeword {self.bits!r} is not binary")

    @property
    def weight(self) -> int:
        return self.bits.count("1")

    def __len__(self) -> int:
        return len(self.bits)


@dataclass(frozen=True)
class BlockCode:
    length: int
    words: tuple[Codeword, ...]
    coordinate_order: str = ""

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(self.words))
        if any(len(w) != self.length for w in self.words):
            raise ValueError("all codewords must have the declared length")
        if len({w.bits for w in self.words}) != len(self.words):
            raise ValueError("codewords must be pairwise distinct")

    def bitset(self) -> set[str]:
        return {w.bits for w in self.words}

    def matrix(self) -> np.ndarray:
        return np.array([[c == "1" for c in w.bits] for w in self.words], dtype=np.uint8).reshape(
            len(self.words), self.length
        )

    def to_text(self) -> str:
        return "".join(w.bits + "\n" for w in self.words)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["label", "bits"])
        for w in self.words:
            writer.writerow([w.label, w.bits])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {
                "length": self.length,
                "words": [{"label": w.label, "bits": w.bits} for w in self.words],
                "coordinate_order": self.coordinate_order,
            },
            sort_keys=True,
        )


def membership_code(spec: RingSpec) -> BlockCode:
    """C_A in canonical ideal order over canonically ordered elements."""
    if spec.order > MAX_EXPLICIT_ORDER:
        raise SizeBoundError(f"|A| = {spec.order} exceeds {MAX_EXPLICIT_ORDER}")
    ideals = enumerate_ideals(spec)
    labels = ideal_labels(len(ideals))
    words = []
    for label, ideal in zip(labels, ideals):
        bits = ["0"] * spec.order
        for m in materialize(ideal).members:
            bits[element_index(spec, m)] = "1"
        words.append(Codeword("".join(bits), label))
    order = f"elements of {spec.render()} in ascending mixed radix, last factor fastest"
    return BlockCode(spec.order, tuple(words), order)


def cut_subset(t: FiniteAlgebraTable, w: int, f: Mapping[Hashable, int]) -> frozenset:
    """S_w = {s in S : w → f(s) = 1} for a map f from S into the carrier."""
    return frozenset(s for s, v in f.items() if t.imp[w, v] == t.top)


def cut_classes(t: FiniteAlgebraTable, f: Mapping[Hashable, int]) -> list[list[int]]:
    """Partition of the carrier by equal cut subsets (the ~ relation)."""
    groups: dict[frozenset, list[int]] = {}
    for w in range(t.size):
        groups.setdefault(cut_subset(t, w, f), []).append(w)
    return list(groups.values())


def reduced_code(t: FiniteAlgebraTable) -> BlockCode:
    """Cut-function words of the identity map on the carrier."""
    report = check_suite(t, "bck")
    if not report.passed:
        raise ValueError(f"table is not a BCK-algebra: {report.render(t)}")
    identity = {j: j for j in range(t.size)}
    words = []
    for w in range(t.size):
        cut = cut_subset(t, w, identity)
        words.append(Codeword("".join("1" if j in cut else "0" for j in range(t.size)), t.labels[w]))
    return BlockCode(t.size, tuple(words), f"carrier of {t.provenance or 'the table'} in table order")


def min_distance(code: BlockCode) -> int:
    if len(code.words) < 2:
        raise ValueError("minimum distance needs at least two codewords")
    M = code.matrix().astype(np.int32)
    d = (M[:, None, :] != M[None, :, :]).sum(axis=-1)
    np.fill_diagonal(d, code.length + 1)
    return int(d.min())


class CodeClass(enum.Enum):
    NONE = "none"
    DETECTING = "detecting"
    CORRECTING = "correcting"

    def __str__(self) -> str:
        return self.value


def classify_code(code: BlockCode) -> CodeClass:
    """d >= 3 corrects single errors, d >= 2 detects them."""
    d = min_distance(code)
    if d >= 3:
        return CodeClass.CORRECTING
    if d >= 2:
        return CodeClass.DETECTING
    return CodeClass.NONE


def coordinate_permutation(a, b) -> tuple[int, ...] | None:
    """A permutation ``perm`` with {w[perm] : w in a} == set(b), or None.

    ``a`` and ``b`` are iterables of equal-length bit strings. Coordinate
    ``k`` of a permuted word is coordinate ``perm[k]`` of the original.
    """
    A = sorted(set(a))
    B = sorted(set(b))
    if len(A) != len(B) or {len(w) for w in A} != {len(w) for w in B}:
        return None
    n = len(A[0]) if A else 0
    # Rows must match by weight; try every weight-preserving row bijection and
    # compare column multisets.
    by_weight_a: dict[int, list[str]] = {}
    by_weight_b: dict[int, list[str]] = {}
    for w in A:
        by_weight_a.setdefault(w.count("1"), []).append(w)
    for w in B:
        by_weight_b.setdefault(w.count("1"), []).append(w)
    if {k: len(v) for k, v in by_weight_a.items()} != {k: len(v) for k, v in by_weight_b.items()}:
        return None
    weights = sorted(by_weight_b)
    rows_b = [w for k in weights for w in by_weight_b[k]]
    cols_b = [tuple(w[j] for w in rows_b) for j in range(n)]
    target = Counter(cols_b)
    for choice in itertools.product(*(itertools.permutations(by_weight_a[k]) for k in weights)):
        rows_a = [w for group in choice for w in group]
        cols_a = [tuple(w[j] for w in rows_a) for j in range(n)]
        if Counter(cols_a) == target:
            free: dict[tuple, list[int]] = {}
            for j, c in enumerate(cols_a):
                free.setdefault(c, []).append(j)
            return tuple(free[c].pop(0) for c in cols_b)
    return None
