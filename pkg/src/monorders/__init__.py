"""Exact classification of monomial orders via integer level matrices."""

from .errors import (
    BudgetExceededError,
    DimensionMismatch,
    MonordersError,
    NotALatticeError,
    NotAnOrderError,
    NotNormalizedError,
    NotPositiveTypeError,
    NotTriangularError,
    ParseError,
    SearchTooLargeError,
)
from .levels import (
    DEFAULT_SEARCH_CAP,
    LevelMatrix,
    PositiveTypeForm,
    WeylElement,
    canonical_form,
    compose,
    conjugate,
    inverse,
    is_order,
    is_upper_triangular,
    normalize_positive,
    order_violation,
)
from .duality import (
    DualLevel,
    dual_level,
    gorenstein_failing_row,
    gorenstein_via_dual,
    gorenstein_witnesses,
    is_gorenstein,
    is_lattice,
    is_projective,
    lattice_violation,
    projective_witness,
)
from .classify import (
    BASS_EICHLER_PERIOD_TWO,
    BASS_HEREDITARY,
    BASS_NOT,
    ClassificationReport,
    EichlerShape,
    classify,
    classify_eichler,
    eichler_shape_of_triangular,
    is_bass,
    is_hereditary,
    triangular_form,
    truncate,
)
from .oracle import DEFAULT_BUDGET, OverorderSet, bass_oracle, overorder_bound, overorders
from .census import (
    FILTERS,
    CensusClass,
    CensusQuery,
    CensusResult,
    census,
    match_family,
)
from .families import Family, load_families
from .levelio import (
    level_to_json_obj,
    level_to_text,
    load_level,
    parse_level,
    parse_level_json,
    parse_level_text,
)

__version__ = "0.1.0"

__all__ = [
    "BASS_EICHLER_PERIOD_TWO",
    "BASS_HEREDITARY",
    "BASS_NOT",
    "BudgetExceededError",
    "CensusClass",
    "CensusQuery",
    "CensusResult",
    "ClassificationReport",
    "DEFAULT_BUDGET",
    "DEFAULT_SEARCH_CAP",
    "DimensionMismatch",
    "DualLevel",
    "EichlerShape",
    "FILTERS",
    "Family",
    "LevelMatrix",
    "MonordersError",
    "NotALatticeError",
    "NotAnOrderError",
    "NotNormalizedError",
    "NotPositiveTypeError",
    "NotTriangularError",
    "OverorderSet",
    "ParseError",
    "PositiveTypeForm",
    "SearchTooLargeError",
    "WeylElement",
    "bass_oracle",
    "canonical_form",
    "census",
    "classify",
    "classify_eichler",
    "compose",
    "conjugate",
    "dual_level",
    "eichler_shape_of_triangular",
    "gorenstein_failing_row",
    "gorenstein_via_dual",
    "gorenstein_witnesses",
    "inverse",
    "is_bass",
    "is_gorenstein",
    "is_hereditary",
    "is_lattice",
    "is_order",
    "is_projective",
    "is_upper_triangular",
    "lattice_violation",
    "level_to_json_obj",
    "level_to_text",
    "load_families",
    "load_level",
    "match_family",
    "normalize_positive",
    "order_violation",
    "overorder_bound",
    "overorders",
    "parse_level",
    "parse_level_json",
    "parse_level_text",
    "projective_witness",
    "triangular_form",
    "truncate",
]
