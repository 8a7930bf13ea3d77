"""Spec corpora and label helpers shared by the test modules."""

from functools import lru_cache

from ringlogic import enumerate_ideals, materialize, parse_ring_spec, specs_of_order
from ringlogic.ring import iter_specs


def dominated(alphas, profile=(3, 2, 1)) -> bool:
    a = sorted(alphas, reverse=True)
    return len(a) <= len(profile) and all(x <= y for x, y in zip(a, profile))


@lru_cache(maxsize=None)
def structure_corpus():
    """Specs over p in {2,3,5} whose exponent profile is dominated by (3,2,1)."""
    return tuple(
        s for s in iter_specs((2, 3, 5), max_alpha=3, max_factors=3)
        if dominated(s.alphas) and s.ideal_count <= 36
    )


@lru_cache(maxsize=None)
def small_specs(max_order=64):
    """Every spec Z_{k1} x ... x Z_{kr} with |A| <= max_order."""
    return tuple(s for n in range(2, max_order + 1) for s in specs_of_order(n))


def label_map(ring: str, sets: dict) -> dict:
    """Map each given label to the canonical index of the ideal with that member set."""
    spec = parse_ring_spec(ring)
    where = {frozenset(materialize(e).members): k for k, e in enumerate(enumerate_ideals(spec))}
    return {label: where[frozenset(members)] for label, members in sets.items()}
