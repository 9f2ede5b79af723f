"""Finite-window toolkit for the shift calculus.

Sequence calculus with the shift relation, family smoothing, order refinement
by enumeration recursion, block arrays with good-pair search, and the carrier
reduction, all truncated to a finite window.
"""

from bqokit._core import (
    AxiomKind,
    BadArrayReport,
    BlockArray,
    BlockStatus,
    BlockVerdict,
    CarrierStarReport,
    FinSeq,
    FreeSeq,
    InsufficientPrefix,
    InvalidRelation,
    OrderAxiomViolation,
    PreconditionError,
    QPair,
    ReducedRelation,
    RelationMatrix,
    SchemaError,
    SeqFamily,
    SigmaCode,
    SigmaTriple,
    SmoothViolation,
    ValueBoundsReport,
    ValueBoundsStatus,
    Window,
    WindowExhaustion,
    avoid_tree_contains,
    bad_array_witness,
    base,
    block_check,
    carrier_star_check,
    code_slice,
    concat,
    contained_in,
    covered,
    dominated_below,
    enumerate_carrier,
    enumeration_compatible,
    extend_into_star,
    family_slice,
    find_good_pair,
    is_prefix,
    length_lex_less,
    minimally_covered,
    order_axiom_violation,
    perfect_check,
    pouzet_order,
    prefix,
    rx,
    shift_rel,
    smooth_check,
    star,
    star_contains,
    star_tree_contains,
    value_bounds_check,
    value_bounds_conclusions,
)

__version__ = "0.1.0"
