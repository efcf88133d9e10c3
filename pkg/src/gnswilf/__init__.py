"""Generalized numerical semigroups: invariants, thickenings, monomial ideals and Wilf-type checks."""

from .enumeration import brute_force_enumerate, children, enumerate_genus, iter_genus, random_gns, root_node
from .errors import (
    BadParameters,
    DimensionMismatch,
    GnsError,
    HypothesisFailed,
    InvalidNumericalSemigroup,
    InvalidPoint,
    NotClosed,
    NotContained,
    NotMonomialSemigroup,
    NotZeroDimensional,
    OracleTooLarge,
    RepeatedAxis,
    Unreachable,
    ZeroIsHole,
)
from .gns import (
    Classification,
    Gns,
    InvariantRecord,
    axes,
    axes_and_restriction,
    canonical_decompose,
    classify,
    contains,
    frobenius_element,
    fundamental_holes,
    invariants,
    minimal_generators,
    multiplicity,
    pseudo_frobenius_and_special_gaps,
    region_sets,
    semigroup_from_generators,
    validate_hole_set,
)
from .monomial import (
    MonomialIdeal,
    ci_analysis,
    gns_to_ideal,
    ideal_to_gns,
    length,
    reduction_number,
    verify_colon_inequality,
    verify_monomial_wilf,
    verify_prop_ij,
)
from .orders import MonomialOrder, parse_order
from .sweep import SweepSummary, run_sweep
from .thickening import embed, thicken, thicken_iterated
from .wilf import (
    WilfReport,
    extended_wilf,
    generalized_wilf,
    make_family_axis,
    make_family_box,
    make_family_e2d,
    make_ordinary,
    order_frobenius,
)

__version__ = "0.1.0"
