"""Exact computation of the colored Jones weight system on chord diagrams.

Three independent algorithms (matrix permanent, acceptable-object state sum,
direct coloring sum) compute the same Z[λ]-valued weight system and are
cross-verified against each other, against the one- and four-term relations,
and against the coefficient identities in the shifted basis d = λ + 2.
"""

from .caps import SizeCapError, SizeCaps
from .diagrams import (
    CDPError,
    ChordDiagram,
    FourTermQuadruple,
    concatenate,
    enumerate_diagrams,
    four_term_quadruples,
    parse_cdp,
    random_diagram,
)
from .permanent import (
    PolyMatrix,
    build_imj,
    imj_block_labels,
    permanent_naive,
    permanent_ryser,
    wj_via_permanent,
    wjj_via_permanent,
)
from .polynomials import IntPoly, from_d_basis, to_d_basis
from .recursion import (
    COLORS,
    chord_weights,
    coloring_trace,
    coloring_weight,
    segment_labels,
    wj_via_recursion,
)
from .statesum import (
    AcceptableObject,
    LabeledIntersectionDigraph,
    ThickenedArc,
    build_lid,
    candidate_arcs,
    census_records,
    deg4_signed_sums,
    enumerate_acceptable,
    is_acceptable,
    j_state_sum,
    wj_via_statesum,
    wjj_n_coefficient,
)
from .verify import (
    METHODS,
    ExhaustiveSummary,
    RelationSummary,
    VerificationReport,
    verify_diagram,
    verify_exhaustive,
    verify_relations,
)

__version__ = "0.1.0"

__all__ = [
    "AcceptableObject",
    "CDPError",
    "COLORS",
    "ChordDiagram",
    "ExhaustiveSummary",
    "FourTermQuadruple",
    "IntPoly",
    "LabeledIntersectionDigraph",
    "METHODS",
    "PolyMatrix",
    "RelationSummary",
    "SizeCapError",
    "SizeCaps",
    "ThickenedArc",
    "VerificationReport",
    "build_imj",
    "build_lid",
    "candidate_arcs",
    "census_records",
    "chord_weights",
    "coloring_trace",
    "coloring_weight",
    "concatenate",
    "deg4_signed_sums",
    "enumerate_acceptable",
    "enumerate_diagrams",
    "four_term_quadruples",
    "from_d_basis",
    "imj_block_labels",
    "is_acceptable",
    "j_state_sum",
    "parse_cdp",
    "permanent_naive",
    "permanent_ryser",
    "random_diagram",
    "segment_labels",
    "to_d_basis",
    "verify_diagram",
    "verify_exhaustive",
    "verify_relations",
    "wj_via_permanent",
    "wj_via_recursion",
    "wj_via_statesum",
    "wjj_n_coefficient",
    "wjj_via_permanent",
]
