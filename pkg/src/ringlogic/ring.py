"""Finite commutative unitary rings Z_{p1^a1} x ... x Z_{pr^ar}.

A ring is described by a :class:`RingSpec`, an ordered tuple of prime-power
factors ``(p, alpha)``. Elements are residue tuples, one residue per factor,
and all arithmetic is componentwise modular.

>>> spec = parse_ring_spec("Z6")
>>> spec.factors
((2, 1), (3, 1))
>>> spec.order, spec.ideal_count
(6, 4)
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from sympy import factorint, isprime

#: Largest ideal count accepted by exponent-vector computations. Their cost
#: grows with N_A, not with |A|, so the ring order itself is unbounded there.
MAX_IDEAL_COUNT = 4096
#: Largest ring order accepted by element-exhaustive computations.
MAX_EXPLICIT_ORDER = 256


class SpecMismatchError(ValueError):
    """Operands belong to different rings."""


class SizeBoundError(ValueError):
    """A computation was requested beyond its supported size."""


@dataclass(frozen=True)
class RingSpec:
    """A finite ring as an ordered list of prime-power factors.

    The constructor canonicalizes: factors are sorted ascending by
    ``(p, alpha)``, so two specs compare equal iff they describe the same
    product decomposition.
    """

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        factors = tuple(sorted((int(p), int(a)) for p, a in self.factors))
        if not factors:
            raise ValueError("a ring spec needs at least one factor")
        for p, a in factors:
            if a < 1:
                raise ValueError(f"exponent must be >= 1, got {p}^{a}")
            if not isprime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "factors", factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def alphas(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.factors)

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(p**a for p, a in self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def order(self) -> int:
        """Cardinality |A|."""
        return math.prod(self.moduli)

    @property
    def ideal_count(self) -> int:
        """N_A, the number of ideals: the product of (alpha_i + 1)."""
        return math.prod(a + 1 for a in self.alphas)

    @property
    def is_reduced(self) -> bool:
        """True when every alpha is 1 (the Von Neumann regular case)."""
        return all(a == 1 for a in self.alphas)

    @cached_property
    def zero(self) -> RingElement:
        return RingElement(self, (0,) * self.rank)

    @cached_property
    def one(self) -> RingElement:
        return RingElement(self, tuple(1 % k for k in self.moduli))

    def element(self, *residues: int) -> RingElement:
        """Build an element, reducing each residue modulo its factor."""
        if len(residues) != self.rank:
            raise ValueError(f"expected {self.rank} residues, got {len(residues)}")
        return RingElement(self, tuple(r % k for r, k in zip(residues, self.moduli)))

    def render(self) -> str:
        return " x ".join(f"Z{k}" for k in self.moduli)

    def render_powers(self) -> str:
        return " x ".join(f"{p}^{a}" for p, a in self.factors)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class RingElement:
    """A residue vector belonging to ``spec``."""

    spec: RingSpec
    residues: tuple[int, ...]

    def __post_init__(self):
        if len(self.residues) != self.spec.rank:
            raise ValueError("residue vector length does not match the ring")
        for r, k in zip(self.residues, self.spec.moduli):
            if not 0 <= r < k:
                raise ValueError(f"residue {r} out of range for Z{k}")

    def __add__(self, other: RingElement) -> RingElement:
        return ring_arith("add", self, other)

    def __mul__(self, other: RingElement) -> RingElement:
        return ring_arith("mul", self, other)

    def __neg__(self) -> RingElement:
        return ring_arith("neg", self)

    def __str__(self) -> str:
        if self.spec.rank == 1:
            return str(self.residues[0])
        return "(" + ",".join(map(str, self.residues)) + ")"


_TOKEN_Z = re.compile(r"^Z_?\{?(\d+)\}?$")
_TOKEN_POW = re.compile(r"^(\d+)\^(\d+)$")


def _factor_modulus(k: int) -> list[tuple[int, int]]:
    if k < 2:
        raise ValueError(f"modulus must be >= 2, got {k}")
    return sorted(factorint(k).items())


def parse_ring_spec(text: str) -> RingSpec:
    """Parse ``Z<k> (x Z<k>)*`` or ``<p>^<a> (x <p>^<a>)*``.

    Composite moduli are split by the Chinese remainder theorem, so ``Z12``
    becomes ``Z4 x Z3``. Both ``x`` and ``×`` separate factors; whitespace is
    ignored.
    """
    if not isinstance(text, str) or not text.strip():
        raise ValueError("empty ring spec")
    cleaned = re.sub(r"\s+", "", text).replace("×", "x")
    tokens = re.split(r"(?<=\d|\})x", cleaned)
    factors: list[tuple[int, int]] = []
    for token in tokens:
        if m := _TOKEN_Z.match(token):
            factors.extend(_factor_modulus(int(m.group(1))))
        elif m := _TOKEN_POW.match(token):
            base, exp = int(m.group(1)), int(m.group(2))
            if base < 2 or exp < 1:
                raise ValueError(f"bad prime power {token!r}")
            factors.extend((p, a * exp) for p, a in _factor_modulus(base))
        else:
            raise ValueError(f"cannot parse ring factor {token!r} in {text!r}")
    return RingSpec(tuple(factors))


def enumerate_elements(spec: RingSpec) -> list[RingElement]:
    """All elements in ascending mixed-radix order, last factor fastest."""
    return [RingElement(spec, r) for r in itertools.product(*map(range, spec.moduli))]


def element_index(spec: RingSpec, residues: tuple[int, ...]) -> int:
    """Position of a residue tuple in :func:`enumerate_elements`."""
    idx = 0
    for r, k in zip(residues, spec.moduli):
        idx = idx * k + r
    return idx


def ring_arith(op: str, x: RingElement, y: RingElement | None = None) -> RingElement:
    """Componentwise ``add``, ``mul`` or ``neg`` (``y`` ignored for ``neg``)."""
    spec = x.spec
    if op == "neg":
        return RingElement(spec, tuple(-a % k for a, k in zip(x.residues, spec.moduli)))
    if y is None or y.spec != spec:
        raise SpecMismatchError("operands belong to different rings")
    if op == "add":
        res = tuple((a + b) % k for a, b, k in zip(x.residues, y.residues, spec.moduli))
    elif op == "mul":
        res = tuple((a * b) % k for a, b, k in zip(x.residues, y.residues, spec.moduli))
    else:
        raise ValueError(f"unknown ring operation {op!r}")
    return RingElement(spec, res)


def iter_specs(
    primes=(2, 3, 5, 7),
    max_alpha: int = 3,
    max_factors: int = 3,
    max_order: int | None = None,
) -> Iterator[RingSpec]:
    """Yield every canonical spec built from the given primes and bounds.

    Each multiset of ``(p, alpha)`` pairs is produced once, in a
    deterministic order.
    """
    pairs = sorted((p, a) for p in primes for a in range(1, max_alpha + 1))
    for r in range(1, max_factors + 1):
        for combo in itertools.combinations_with_replacement(pairs, r):
            if max_order is not None and math.prod(p**a for p, a in combo) > max_order:
                continue
            yield RingSpec(combo)


def _integer_partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _integer_partitions(n - first, first):
            yield (first,) + rest


def specs_of_order(n: int) -> list[RingSpec]:
    """Every ring Z_{k1} x ... x Z_{kr} (k_i prime powers) with exactly n elements.

    These are the finite abelian group types of order n, one per choice of
    integer partition of each prime's exponent.
    """
    per_prime = [
        [[(p, a) for a in part] for part in _integer_partitions(e)]
        for p, e in _factor_modulus(n)
    ]
    specs = [RingSpec(tuple(itertools.chain(*choice))) for choice in itertools.product(*per_prime)]
    return sorted(specs, key=lambda s: (s.rank, s.factors))
