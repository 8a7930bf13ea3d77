"""
The ideal lattice as a residuated lattice
=========================================

Intersection, sum, product and the colon ideal (J:I) turn the ideals of a
finite ring into a residuated lattice. Every such lattice turns out to be an
MV-algebra; it is Boolean exactly when the ring is a product of fields.
"""

from ringlogic import check_suite, classify_lattice, from_ideal_lattice, parse_ring_spec, render_table
from ringlogic.residuated import STRUCTURE_SUITES

t = from_ideal_lattice(parse_ring_spec("Z2xZ4"))
print(t.provenance, "with", t.size, "ideals")
print(render_table(t, "imp"))
print()
print(render_table(t, "oplus"))

# %%
# Every structure suite passes: residuated, BCK, Chang, Wajsberg, MV,
# divisibility and double negation.
for suite in STRUCTURE_SUITES:
    print(check_suite(t, suite).render(t))

# %%
# The Boolean suite fails, and the report names the ideal responsible.
print(check_suite(t, "boolean").render(t))
print("classification:", classify_lattice(t))

# %%
# Products of fields give Boolean lattices.
for ring in ("Z6", "Z2xZ2xZ2", "Z9", "Z3xZ3"):
    print(f"{ring:>9}: {classify_lattice(from_ideal_lattice(parse_ring_spec(ring)))}")

# %%
# Breaking a single implication entry is caught by the checkers.
broken = t.with_imp_entry(1, 3, 5)
for suite in ("bck", "chang", "mv"):
    print(check_suite(broken, suite).render(broken))
