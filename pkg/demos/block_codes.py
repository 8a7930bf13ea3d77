"""
Binary block codes from ideal lattices
======================================

Two codes come with every ring. The membership code has one word per ideal
marking which ring elements it contains. The reduced code has one word per
ideal I marking the ideals J with I -> J = A, i.e. those containing I.
"""

from ringlogic import (
    classify_code,
    from_ideal_lattice,
    membership_code,
    min_distance,
    parse_ring_spec,
    reduced_code,
)
from ringlogic.ring import iter_specs

spec = parse_ring_spec("Z2xZ4")
code = membership_code(spec)
print("membership code of", spec)
print(code.to_text(), end="")
print("d_H =", min_distance(code), "->", classify_code(code))

reduced = reduced_code(from_ideal_lattice(spec))
print("\nreduced code")
print(reduced.to_csv(), end="")
print("d_H =", min_distance(reduced), "->", classify_code(reduced))

# %%
# Ideals of rings over large primes are far apart: every nonzero ideal
# differs from {0} in at least p - 1 positions.
print()
for ring in ("Z4", "Z9", "Z25", "Z49", "Z3xZ5"):
    c = membership_code(parse_ring_spec(ring))
    print(f"{ring:>6}: d_H = {min_distance(c)}  {classify_code(c)}")

# %%
# Sweep: all rings over p in {3, 5, 7} with at most 256 elements.
specs = list(iter_specs((3, 5, 7), max_alpha=3, max_factors=3, max_order=256))
distances = [min_distance(membership_code(s)) for s in specs]
print(f"\n{len(specs)} rings, smallest distance {min(distances)}")
