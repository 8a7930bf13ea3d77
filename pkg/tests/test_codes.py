import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ringlogic import (
    BlockCode,
    CodeClass,
    Codeword,
    SizeBoundError,
    classify_code,
    coordinate_permutation,
    cut_classes,
    cut_subset,
    enumerate_ideals,
    from_ideal_lattice,
    intersect_ideals,
    membership_code,
    min_distance,
    multiplicative_partitions,
    parse_ring_spec,
    reduced_code,
    ring_for_partition,
)
from ringlogic.ring import iter_specs

import corpus
from reference_data import MEMBERSHIP_CODES, REDUCED_CODES


def spec(ring):
    return parse_ring_spec(ring)


def test_codeword_validation():
    with pytest.raises(ValueError):
        Codeword("0120")
    with pytest.raises(ValueError):
        BlockCode(3, (Codeword("101"), Codeword("10")))
    with pytest.raises(ValueError):
        BlockCode(2, (Codeword("10"), Codeword("10")))
    assert Codeword("1101").weight == 3


def test_z4_membership():
    code = membership_code(spec("Z4"))
    assert [w.bits for w in code.words] == ["1000", "1010", "1111"]
    assert code.words[-1].bits == "1" * 4
    assert coordinate_permutation(code.bitset(), MEMBERSHIP_CODES["Z4"]) is not None


def test_z6_membership():
    code = membership_code(spec("Z6"))
    assert coordinate_permutation(code.bitset(), MEMBERSHIP_CODES["Z6"]) is not None


@pytest.mark.parametrize("ring", sorted(REDUCED_CODES))
def test_reduced_codes(ring):
    assert reduced_code(from_ideal_lattice(spec(ring))).bitset() == REDUCED_CODES[ring]


def test_reduced_requires_bck():
    bad = from_ideal_lattice(spec("Z4")).with_imp_entry(2, 2, 0)
    with pytest.raises(ValueError):
        reduced_code(bad)


def test_cut_subsets_z4():
    t = from_ideal_lattice(spec("Z4"))
    ident = {j: j for j in range(t.size)}
    assert cut_subset(t, t.bottom, ident) == frozenset(range(3))
    assert cut_subset(t, 1, ident) == frozenset({1, 2})
    assert sorted(cut_classes(t, ident)) == [[0], [1], [2]]
    # a constant map collapses everything into one class
    assert cut_classes(t, {s: t.top for s in "abc"}) == [[0, 1, 2]]


def test_distances():
    assert min_distance(membership_code(spec("Z4"))) == 1
    assert min_distance(membership_code(spec("Z9"))) == 2
    assert min_distance(membership_code(spec("Z25"))) == 4
    assert classify_code(membership_code(spec("Z9"))) is CodeClass.DETECTING
    assert classify_code(membership_code(spec("Z25"))) is CodeClass.CORRECTING
    with pytest.raises(ValueError):
        min_distance(membership_code(spec("Z2")).__class__(1, (Codeword("1"),)))


def test_size_bound():
    with pytest.raises(SizeBoundError):
        membership_code(spec("Z512"))


def test_exports():
    code = reduced_code(from_ideal_lattice(spec("Z4")))
    assert code.to_text() == "111\n011\n001\n"
    assert code.to_csv().splitlines() == ["label,bits", "O,111", "R,011", "E,001"]
    doc = json.loads(code.to_json())
    assert doc["length"] == 3 and doc["words"][1] == {"label": "R", "bits": "011"}
    assert "coordinate_order" in doc


def test_permutation_search():
    assert coordinate_permutation({"110", "001"}, {"011", "100"}) is not None
    assert coordinate_permutation({"110"}, {"111"}) is None
    assert coordinate_permutation({"11", "00"}, {"11", "01"}) is None
    perm = coordinate_permutation(membership_code(spec("Z2xZ4")).bitset(), MEMBERSHIP_CODES["Z2xZ4"])
    moved = {"".join(w[i] for i in perm) for w in membership_code(spec("Z2xZ4")).bitset()}
    assert moved == MEMBERSHIP_CODES["Z2xZ4"]


@pytest.mark.parametrize("s", corpus.small_specs(48)[::3], ids=str)
def test_membership_laws(s):
    code = membership_code(s)
    ideals = enumerate_ideals(s)
    M = code.matrix()
    assert len(code.words) == s.ideal_count and code.length == s.order
    assert (M.sum(axis=1) == [e.cardinality for e in ideals]).all()
    assert M[0].sum() == 1 and M[-1].all()
    pos = {e: k for k, e in enumerate(ideals)}
    for i, e in enumerate(ideals):
        for j, f in enumerate(ideals):
            assert ((M[i] & M[j]) == M[pos[intersect_ideals(e, f)]]).all()


@pytest.mark.parametrize("s", corpus.structure_corpus()[::4], ids=str)
def test_reduced_laws(s):
    t = from_ideal_lattice(s)
    code = reduced_code(t)
    M = code.matrix().astype(bool)
    assert (M == t.leq).all()
    assert M[t.bottom].all() and M[t.top].sum() == 1
    assert min_distance(code) == 1 and classify_code(code) is CodeClass.NONE


def test_prop_large_primes():
    for s in iter_specs((3, 5, 7), max_alpha=3, max_factors=3, max_order=256):
        d = min_distance(membership_code(s))
        assert d >= 2
        if min(s.primes) >= 5:
            assert d >= 3


def test_reduced_code_depends_only_on_profile():
    # every N <= 36 is reached, once per multiplicative partition of N
    for n in range(2, 37):
        parts = multiplicative_partitions(n)
        assert parts
        for part in parts:
            a, b = ring_for_partition(part, 2), ring_for_partition(part, 3)
            code = reduced_code(from_ideal_lattice(a))
            assert len(code.words) == n
            assert code.bitset() == reduced_code(from_ideal_lattice(b)).bitset()


@settings(max_examples=50)
@given(st.lists(st.text("01", min_size=6, max_size=6), min_size=2, max_size=6, unique=True), st.permutations(range(6)))
def test_permutation_roundtrip(words, perm):
    moved = {"".join(w[i] for i in perm) for w in words}
    found = coordinate_permutation(words, moved)
    assert found is not None
    assert {"".join(w[i] for i in found) for w in words} == moved


@settings(max_examples=50)
@given(st.lists(st.text("01", min_size=5, max_size=5), min_size=2, max_size=8, unique=True))
def test_min_distance_brute(words):
    code = BlockCode(5, tuple(Codeword(w) for w in words))
    brute = min(sum(a != b for a, b in zip(u, v)) for i, u in enumerate(words) for v in words[i + 1:])
    assert min_distance(code) == brute
