"""Counting Cayley graphs of finite groups up to equivalence and weak equivalence.

Two routes are provided and cross-checked: closed-form Burnside/Möbius counts
(:mod:`cayley_census.formula`, :mod:`cayley_census.circulant`) and explicit
orbit enumeration (:mod:`cayley_census.oracle`).
"""

from .circulant import (
    binomial_special_case,
    circulant_iso_count_prime,
    circulant_prime_weak_count,
    totient,
    zn_tilde_tilde_counts,
    zp_inverted_counts,
)
from .errors import (
    CayleyCensusError,
    DegreeMismatchError,
    GroupSpecError,
    GroupValidationError,
    InconsistencyError,
    InvalidConnectionSetError,
    InvariantSubgroupError,
    MissingTopError,
    ScaleError,
)
from .formula import (
    ClassCount,
    CycleType,
    FixedCountTable,
    abelian_class_count,
    class_count,
    cycle_types,
    fixed_tuple_count,
    inverted_counts,
    tilde_tilde_counts,
)
from .groups import (
    ElementSet,
    FiniteGroup,
    build_group,
    element_order,
    generated_subgroup,
    involution_set,
    load_group_file,
)
from .lattice import SubgroupLattice, all_subgroups, invariant_subgroups, moebius_values, subgroup_lattice
from .morphisms import (
    Automorphism,
    AutomorphismGroup,
    apply_to_set,
    automorphism_group,
    inner_automorphism_group,
    power,
)
from .oracle import (
    CayleyGraph,
    PairClass,
    are_equivalent,
    are_weakly_equivalent,
    build_cayley_graph,
    connection_set,
    enumerate_connection_sets,
    enumerate_fixed_tuples,
    oracle_class_count,
    orbit_count,
)

__version__ = "0.1.0"
