"""Ideal lattices of finite commutative rings Z_{p1^a1} x ... x Z_{pr^ar}.

The ideals of such a ring form a residuated lattice under intersection, sum,
product and ideal quotient. This package builds that lattice, checks the
algebraic-logic axioms it satisfies (BCK, MV, Wajsberg, Heyting, Boolean),
derives binary block codes from it, and enumerates the finite MV-algebras of
each size through ring constructions.
"""

from .codes import (
    BlockCode,
    CodeClass,
    Codeword,
    classify_code,
    coordinate_permutation,
    cut_classes,
    cut_subset,
    membership_code,
    min_distance,
    reduced_code,
)
from .ideals import (
    ExplicitIdeal,
    IdealIndex,
    annihilator,
    enumerate_ideals,
    enumerate_ideals_oracle,
    explicit_op,
    ideal_labels,
    ideal_power,
    identify,
    intersect_ideals,
    is_coprime,
    materialize,
    product_ideals,
    quotient_ideals,
    sum_ideals,
)
from .mvclassify import (
    Classification,
    MultiplicativePartition,
    MvAlgebra,
    chain_mv,
    classify_all,
    find_isomorphism,
    is_isomorphic,
    multiplicative_partitions,
    report_tables,
    ring_for_partition,
)
from .residuated import (
    FiniteAlgebraTable,
    LatticeClass,
    SuiteReport,
    check_suite,
    classify_lattice,
    derived_op,
    from_explicit_sets,
    from_ideal_lattice,
    render_table,
    table_mismatches,
)
from .ring import (
    RingElement,
    RingSpec,
    SizeBoundError,
    SpecMismatchError,
    enumerate_elements,
    parse_ring_spec,
    specs_of_order,
)

__version__ = "0.1.0"
