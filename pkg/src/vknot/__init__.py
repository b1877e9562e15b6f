"""Virtual knot invariants from Gauss codes.

Diagrams are Gauss codes (closed or long, classical/virtual or flat);
the package computes odd writhe, the bracket/f/Jones polynomials, the
arrow polynomial and its flat specialization, the parity bracket with
canonicalized nodal graphs, and mod-2 Khovanov-style homology with the
dotted-grading refinement, together with a Reidemeister move engine and a
scramble-based invariance harness.
"""

from .arrow import arrow_poly, flat_arrow, reduce_word, w_poly
from .bracket import (
    DEFAULT_MAX_CROSSINGS,
    bracket,
    f_poly,
    jones,
    q_bracket,
)
from .errors import (
    AlreadyClosed,
    CrossingCountError,
    DifferentialSquareError,
    DoubleLongSegment,
    FlatCodeError,
    IncompleteAssignment,
    InvalidSite,
    MalformedToken,
    MixedFlatError,
    NotFlat,
    NotLong,
    ParseError,
    SignMismatchError,
    SizeCapExceeded,
    UnknownCrossing,
    VknotError,
)
from .gauss import CLOSED, FLAT, LONG, OVER, UNDER, GaussCode, Passage, parse, parse_file
from .homology import (
    DEFAULT_MAX_HOMOLOGY_CROSSINGS,
    ChainComplex,
    arrow_complex,
    betti,
    betti_equal_up_to_shift,
    khovanov_complex,
)
from .moves import (
    DEFAULT_SCRAMBLE_CAP,
    Move,
    apply,
    enumerate_moves,
    scramble,
    scramble_walk,
)
from .parity import (
    FREE,
    ORIENTED,
    NodalGraph,
    ParityBracketValue,
    free_knot_invariant,
    normalized_parity_bracket,
    parity_bracket,
)
from .poly import Monomial, MultiPoly, jones_t_form

__all__ = [
    "AlreadyClosed",
    "CLOSED",
    "ChainComplex",
    "CrossingCountError",
    "DEFAULT_MAX_CROSSINGS",
    "DEFAULT_MAX_HOMOLOGY_CROSSINGS",
    "DEFAULT_SCRAMBLE_CAP",
    "DifferentialSquareError",
    "DoubleLongSegment",
    "FLAT",
    "FREE",
    "FlatCodeError",
    "GaussCode",
    "IncompleteAssignment",
    "InvalidSite",
    "LONG",
    "MalformedToken",
    "MixedFlatError",
    "Monomial",
    "Move",
    "MultiPoly",
    "NodalGraph",
    "NotFlat",
    "NotLong",
    "ORIENTED",
    "OVER",
    "ParityBracketValue",
    "ParseError",
    "Passage",
    "SignMismatchError",
    "SizeCapExceeded",
    "UNDER",
    "UnknownCrossing",
    "VknotError",
    "apply",
    "arrow_complex",
    "arrow_poly",
    "betti",
    "betti_equal_up_to_shift",
    "bracket",
    "enumerate_moves",
    "f_poly",
    "flat_arrow",
    "free_knot_invariant",
    "jones",
    "jones_t_form",
    "khovanov_complex",
    "normalized_parity_bracket",
    "parity_bracket",
    "parse",
    "parse_file",
    "q_bracket",
    "reduce_word",
    "scramble",
    "scramble_walk",
    "w_poly",
]

__version__ = "0.1.0"
