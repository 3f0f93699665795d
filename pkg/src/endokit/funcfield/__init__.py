"""Function-field arithmetic: curves over F_q, closed points, endoscopy."""

from .curves import (
    ClosedPoint,
    DivisorFF,
    ECGroupData,
    EllipticCurveFq,
    RationalFunctionFF,
    ResourceLimitError,
    enumerate_closed_points,
    infinity_point,
    weierstrass_add,
)
from .endoscopy import (
    DEGENERATE_NOTE,
    AdjointCheck,
    CharacterCheck,
    CoverModelError,
    DeltaReport,
    EndoscopicDatum,
    FrobeniusClass,
    FrobeniusSummary,
    SplitReport,
    base_change_datum,
    character_consistency,
    delta_parity,
    frobenius_summary,
    select_character,
    sigma_frobenius,
    sigma_prime_check,
    split_classify,
)
from .cache import (
    CacheError,
    cached_closed_points,
    clear_cache,
    default_cache_dir,
    list_cache,
    load_census,
    verify_cache,
    write_census,
)

__all__ = [
    "ClosedPoint",
    "DivisorFF",
    "ECGroupData",
    "EllipticCurveFq",
    "RationalFunctionFF",
    "ResourceLimitError",
    "enumerate_closed_points",
    "infinity_point",
    "weierstrass_add",
    "DEGENERATE_NOTE",
    "AdjointCheck",
    "CharacterCheck",
    "CoverModelError",
    "DeltaReport",
    "EndoscopicDatum",
    "FrobeniusClass",
    "FrobeniusSummary",
    "SplitReport",
    "base_change_datum",
    "character_consistency",
    "delta_parity",
    "frobenius_summary",
    "select_character",
    "sigma_frobenius",
    "sigma_prime_check",
    "split_classify",
    "CacheError",
    "cached_closed_points",
    "clear_cache",
    "default_cache_dir",
    "list_cache",
    "load_census",
    "verify_cache",
    "write_census",
]
