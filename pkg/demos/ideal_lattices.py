"""
Ideals of a finite ring, two ways
=================================

A ring Z_{p1^a1} x ... x Z_{pr^ar} has exactly (a1+1)...(ar+1) ideals, each
one the set of elements whose i-th residue is divisible by p_i^{e_i}. This
script builds them from exponent vectors and again by brute force over
element sets, and shows the two agree.
"""

from ringlogic import (
    annihilator,
    enumerate_ideals,
    enumerate_ideals_oracle,
    explicit_op,
    ideal_labels,
    is_coprime,
    materialize,
    parse_ring_spec,
    product_ideals,
    quotient_ideals,
    sum_ideals,
)

# Z12 splits into Z4 x Z3 by the Chinese remainder theorem.
spec = parse_ring_spec("Z12")
print(spec, "| order", spec.order, "| ideals", spec.ideal_count)

ideals = enumerate_ideals(spec)
for label, e in zip(ideal_labels(len(ideals)), ideals):
    print(f"  {label}: exponents {e.exponents}, {e.cardinality} elements")

# The brute-force route closes every principal ideal under sums.
found = enumerate_ideals_oracle(spec)
print("same ideals by brute force:", found == {materialize(e) for e in ideals})

# %%
# Ideal arithmetic on exponent vectors is componentwise min/max/difference.
z2z4 = parse_ring_spec("Z2xZ4")
I, J = enumerate_ideals(z2z4)[1], enumerate_ideals(z2z4)[3]
print("\nI =", sorted(materialize(I).members), " J =", sorted(materialize(J).members))
print("I + J   ->", sum_ideals(I, J).exponents)
print("I (x) J ->", product_ideals(I, J).exponents)
print("(I : J) ->", quotient_ideals(I, J).exponents)
print("Ann(I)  ->", annihilator(I).exponents)

# Each closed form agrees with the literal set definition.
X, Y = materialize(I), materialize(J)
assert explicit_op("sum", X, Y) == materialize(sum_ideals(I, J))
assert explicit_op("quotient", X, Y) == materialize(quotient_ideals(I, J))

# %%
# An ideal and its annihilator are coprime only when no factor is a proper
# prime power: compare Z4 with Z2 x Z2.
for ring in ("Z4", "Z2xZ2"):
    s = parse_ring_spec(ring)
    verdicts = [is_coprime(e, annihilator(e)) for e in enumerate_ideals(s)]
    print(f"{ring}: every ideal coprime to its annihilator? {all(verdicts)}")
