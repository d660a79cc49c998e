"""Weighted bidegrees of polynomial automorphisms of the plane.

Exact rational arithmetic throughout: sparse bivariate polynomials,
generator words of affine maps and elementary shears, reduction to the
affine/triangular normal form, membership in the achievable
weighted-bidegree set, explicit realizing constructions, and a
brute-force verification harness.
"""

from .poly import (
    NEG_INF,
    DegreeOverflow,
    Poly,
    X,
    Y,
    ZeroPolynomialError,
    leading_form,
    set_max_total_degree,
    total_deg,
    wdeg,
)
from .grammar import NegativeExponentError, ParseError, format_poly, parse_poly
from .maps import (
    AffineMap,
    ElementaryMap,
    PolyMap,
    compose,
    evaluate_word,
    invert_word,
    map_equal,
    mdeg_map,
    wmdeg_map,
    word_from_json,
    word_to_json,
)
from .decompose import (
    NormalForm,
    NotAutomorphism,
    decompose,
    invert_map,
    length,
    normalize_word,
)
from .bidegree import (
    InvalidBidegree,
    MembershipWitness,
    enumerate_Z,
    in_ge2_set,
    in_le1_set,
    member,
    propagate_wmdeg,
)
from .realize import NotRealizable, realize
from .harness import (
    GeneratorPool,
    VerificationReport,
    desk_pool,
    enumerate_words,
    roundtrip_suite,
    verify_theorem_main,
)

__all__ = [
    "AffineMap",
    "DegreeOverflow",
    "ElementaryMap",
    "GeneratorPool",
    "InvalidBidegree",
    "MembershipWitness",
    "NEG_INF",
    "NegativeExponentError",
    "NormalForm",
    "NotAutomorphism",
    "NotRealizable",
    "ParseError",
    "Poly",
    "PolyMap",
    "VerificationReport",
    "X",
    "Y",
    "ZeroPolynomialError",
    "compose",
    "decompose",
    "desk_pool",
    "enumerate_Z",
    "enumerate_words",
    "evaluate_word",
    "format_poly",
    "in_ge2_set",
    "in_le1_set",
    "invert_map",
    "invert_word",
    "leading_form",
    "length",
    "map_equal",
    "mdeg_map",
    "member",
    "normalize_word",
    "parse_poly",
    "propagate_wmdeg",
    "realize",
    "roundtrip_suite",
    "set_max_total_degree",
    "total_deg",
    "verify_theorem_main",
    "wdeg",
    "wmdeg_map",
    "word_from_json",
    "word_to_json",
]
