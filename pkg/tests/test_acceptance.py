"""Acceptance criteria, one check per criterion.

Each check prints a single PASS/FAIL line with its tolerance and runtime.
Run directly (``python3 tests/test_acceptance.py``) for just the summary, or
through pytest, where each criterion is its own test.
"""

import io
import itertools
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import corpus  # noqa: E402
from reference_data import (  # noqa: E402
    IDEAL_SETS,
    IMP_TABLES,
    MEMBERSHIP_CODES,
    REDUCED_CODES,
    TABLE1_BOOLE,
    TABLE1_MV,
    TABLE3,
)
from ringlogic import (  # noqa: E402
    CodeClass,
    LatticeClass,
    annihilator,
    chain_mv,
    check_suite,
    classify_all,
    classify_code,
    classify_lattice,
    coordinate_permutation,
    enumerate_ideals,
    enumerate_ideals_oracle,
    explicit_op,
    from_ideal_lattice,
    intersect_ideals,
    is_isomorphic,
    materialize,
    membership_code,
    min_distance,
    parse_ring_spec,
    product_ideals,
    quotient_ideals,
    reduced_code,
    report_tables,
    sum_ideals,
)
from ringlogic import cli  # noqa: E402
from ringlogic.mvclassify import ideal_mv  # noqa: E402
from ringlogic.ring import iter_specs  # noqa: E402

SIX = ("Z4", "Z2xZ2", "Z6", "Z8", "Z2xZ4", "Z2xZ2xZ2")
STRUCTURE = ("chang", "mv", "wajsberg", "bck", "residuated", "divisible", "double_negation")


def _cli_table(ring):
    out = io.StringIO()
    assert cli.run(["table", ring, "--op", "imp"], stdout=out, stderr=io.StringIO()) == 0
    lines = out.getvalue().splitlines()
    cols = lines[0].split("|")[1].split()
    return {row.split("|")[0].strip(): dict(zip(cols, row.split("|")[1].split())) for row in lines[2:]}


def c1_implication_tables():
    bad = []
    for ring in SIX:
        printed = _cli_table(ring)
        ours = list(printed)
        where = corpus.label_map(ring, IDEAL_SETS[ring])
        name = {lab: ours[k] for lab, k in where.items()}
        cols, rows = IMP_TABLES[ring]
        for r, row in rows.items():
            for c, v in zip(cols, row):
                if printed[name[r]][name[c]] != name[v]:
                    bad.append(f"{ring} {r}→{c}")
    return not bad, f"{len(SIX)} tables, mismatches: {bad or 'none'}"


def c2_codes():
    bad = []
    for ring in SIX:
        spec = parse_ring_spec(ring)
        if reduced_code(from_ideal_lattice(spec)).bitset() != REDUCED_CODES[ring]:
            bad.append(f"{ring} reduced")
        words = membership_code(spec).bitset()
        perm = coordinate_permutation(words, MEMBERSHIP_CODES[ring])
        if perm is None or {"".join(w[i] for i in perm) for w in words} != MEMBERSHIP_CODES[ring]:
            bad.append(f"{ring} membership")
    return not bad, f"6 reduced exact, 6 membership up to permutation; failures: {bad or 'none'}"


def c3_chang_universality():
    bad = []
    specs = corpus.structure_corpus()
    for spec in specs:
        t = from_ideal_lattice(spec)
        for suite in STRUCTURE:
            rep = check_suite(t, suite)
            if not rep.passed or rep.witnesses:
                bad.append(f"{spec} {suite}")
    return not bad, f"{len(specs)} specs x {len(STRUCTURE)} suites, failures: {bad[:5] or 'none'}"


def c4_boolean_dichotomy():
    bad = []
    specs = corpus.structure_corpus()
    for spec in specs:
        t = from_ideal_lattice(spec)
        b, h = check_suite(t, "boolean").passed, check_suite(t, "heyting").passed
        reduced = all(a == 1 for a in spec.alphas)
        verdict = classify_lattice(t)
        if not (b == h == reduced) or verdict not in (LatticeClass.BOOLEAN, LatticeClass.MV_NOT_BOOLEAN):
            bad.append(str(spec))
    return not bad, f"{len(specs)} specs, violations: {bad or 'none'}"


FIVE = {
    "sum": sum_ideals,
    "product": product_ideals,
    "quotient": quotient_ideals,
    "intersect": intersect_ideals,
}


def c5_oracle_equivalence():
    bad = []
    specs = corpus.small_specs(64)
    pairs = 0
    for spec in specs:
        ideals = enumerate_ideals(spec)
        oracle = enumerate_ideals_oracle(spec)
        if not (len(ideals) == len(oracle) == spec.ideal_count):
            bad.append(f"{spec} count")
        sets = [materialize(e) for e in ideals]
        if set(sets) != set(oracle):
            bad.append(f"{spec} sets")
        for (e, X), (f, Y) in itertools.product(zip(ideals, sets), repeat=2):
            pairs += 1
            for kind, op in FIVE.items():
                if materialize(op(e, f)) != explicit_op(kind, X, Y):
                    bad.append(f"{spec} {kind}{e.exponents}{f.exponents}")
        for e, X in zip(ideals, sets):
            if materialize(annihilator(e)) != explicit_op("ann", X):
                bad.append(f"{spec} ann{e.exponents}")
    return not bad, f"{len(specs)} specs, {pairs} ideal pairs, mismatches: {bad[:5] or 'none'}"


def c6_identity_suite():
    bad = []
    specs = corpus.small_specs(64)
    for spec in specs:
        t = from_ideal_lattice(spec)
        if not check_suite(t, "ring_identities").passed:
            bad.append(str(spec))
        if check_suite(t, "boolean_ring").passed != spec.is_reduced:
            bad.append(f"{spec} boolean_ring")
    return not bad, f"{len(specs)} specs, failures: {bad or 'none'}"


def c7_distances():
    bad = []
    for ring, d in (("Z4", 1), ("Z9", 2), ("Z25", 4)):
        got = min_distance(membership_code(parse_ring_spec(ring)))
        if got != d:
            bad.append(f"{ring}: {got} != {d}")
    tested = 0
    for spec in iter_specs((3, 5, 7), max_alpha=3, max_factors=3, max_order=256):
        tested += 1
        kind = classify_code(membership_code(spec))
        # correcting codes also detect, so all-p>=3 specs must reach at least detecting
        want = {CodeClass.CORRECTING} if min(spec.primes) >= 5 else {CodeClass.DETECTING, CodeClass.CORRECTING}
        if kind not in want:
            bad.append(f"{spec}: {kind}")
    reduced = 0
    for spec in corpus.small_specs(64):
        code = reduced_code(from_ideal_lattice(spec))
        reduced += 1
        if min_distance(code) != 1 or classify_code(code) is not CodeClass.NONE:
            bad.append(f"{spec} reduced")
    return not bad, f"{tested} p>=3 specs, {reduced} reduced codes, failures: {bad or 'none'}"


def c8_classification():
    bad = []
    for n in range(2, 9):
        c = classify_all(n)  # representatives are checked pairwise non-isomorphic inside
        if c.total != TABLE1_MV[n] or c.boolean != TABLE1_BOOLE[n]:
            bad.append(f"n={n} counts {c.total}/{c.boolean}")
        for a, b in itertools.combinations(c.algebras, 2):
            if is_isomorphic(a, b):
                bad.append(f"n={n} {a.provenance} ≅ {b.provenance}")
    rows = {n: text for n, _, text in report_tables("table3", 8).rows}
    for n, gens in TABLE3.items():
        want = " and ".join(
            " x ".join("Zp" if a == 1 else f"Zp^{a}" for a in exps) + f" ({tag})" for exps, tag in gens
        )
        if rows[n] != want:
            bad.append(f"table3 n={n}")
    for m, p in itertools.product(range(2, 9), (2, 3, 5)):
        if not is_isomorphic(chain_mv(m), ideal_mv(parse_ring_spec(f"{p}^{m - 1}"))):
            bad.append(f"chain {m} p={p}")
    return not bad, f"n=2..8, 21 chain isomorphisms, failures: {bad or 'none'}"


def c9_mutation_sensitivity():
    bad, count = [], 0
    for ring in ("Z4", "Z2xZ2"):
        t = from_ideal_lattice(parse_ring_spec(ring))
        for x, y, v in itertools.product(range(t.size), repeat=3):
            if v == t.imp[x, y]:
                continue
            count += 1
            m = t.with_imp_entry(x, y, v)
            if all(check_suite(m, s).passed for s in ("bck", "chang", "mv")):
                bad.append(f"{ring} imp[{x},{y}]={v}")
    return not bad, f"{count} single-entry mutations, undetected: {bad or 'none'}"


CRITERIA = [
    (1, "implication tables", c1_implication_tables, 1.0),
    (2, "reduced and membership codes", c2_codes, 1.0),
    (3, "chang universality", c3_chang_universality, 30.0),
    (4, "boolean dichotomy", c4_boolean_dichotomy, None),
    (5, "oracle equivalence", c5_oracle_equivalence, 60.0),
    (6, "identity suite", c6_identity_suite, None),
    (7, "distance claims", c7_distances, None),
    (8, "classification counts", c8_classification, 60.0),
    (9, "mutation sensitivity", c9_mutation_sensitivity, None),
]


def evaluate(number):
    _, name, check, limit = CRITERIA[number - 1]
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    in_time = limit is None or elapsed < limit
    tolerance = "exact" + (f", runtime < {limit:g} s" if limit else "")
    verdict = "PASS" if ok and in_time else "FAIL"
    line = f"criterion {number} {verdict}: {name} [{tolerance}; took {elapsed:.2f} s] {detail}"
    return ok and in_time, line


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA])
def test_criterion(number, capsys):
    ok, line = evaluate(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(c[0]) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
