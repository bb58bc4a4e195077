"""Projective Reed-Muller PIR codes: construction, shortening, bounds and
private-retrieval simulation over coded servers."""

from ._prmpir import (
    PirCode,
    arbitrary_shorten,
    best_code,
    build_prm,
    build_sprm,
    gf2_rank,
    ghw,
    ghw_upper,
    lb_systematic,
    min_distance,
    privacy_audit,
    prm_params,
    puncture,
    shorten_row,
    simulate,
    table1,
    table2,
)

__all__ = [
    "PirCode",
    "arbitrary_shorten",
    "best_code",
    "build_prm",
    "build_sprm",
    "gf2_rank",
    "ghw",
    "ghw_upper",
    "lb_systematic",
    "min_distance",
    "privacy_audit",
    "prm_params",
    "puncture",
    "shorten_row",
    "simulate",
    "table1",
    "table2",
]

__version__ = "0.1.0"
