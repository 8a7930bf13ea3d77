"""
All finite MV-algebras of a given size
======================================

A finite MV-algebra is a product of chains, and the m-element chain is the
ideal lattice of Z_{p^(m-1)}. So the MV-algebras with n elements correspond
to the ways of writing n as a product of factors >= 2.
"""

from ringlogic import (
    chain_mv,
    classify_all,
    find_isomorphism,
    multiplicative_partitions,
    parse_ring_spec,
    render_table,
    report_tables,
)
from ringlogic.mvclassify import ideal_mv

for n in (6, 8, 12):
    print(n, "=", " | ".join(str(p) for p in multiplicative_partitions(n)))

# %%
# The closed-form chain and the ideal lattice of Z_{3^4} are isomorphic.
phi = find_isomorphism(chain_mv(5), ideal_mv(parse_ring_spec("Z81")))
print("\nchain of 5 -> Id(Z81):", phi)

# %%
# Six elements: one chain, one product of a 2-chain and a 3-chain.
result = classify_all(6)
print("\n", result.summary())
for alg in result.algebras:
    print(f"\n[{alg.partition}] {alg.provenance}")
    print(render_table(alg.table, "oplus"))

# %%
# Counts for every n up to 12, regenerated from the classification.
print()
print(report_tables("table1", 12).to_text())
print(report_tables("table3", 8).to_text())
