"""Nested perfect necklaces, affine necklaces and Levin's low-discrepancy stream."""

from ._core import (
    AffineSpec,
    BorderPath,
    DiscrepancyRow,
    GF2Matrix,
    PerfectionCertificate,
    RotationProfile,
    affine_necklace,
    borders,
    build_pascal,
    column_span_check,
    count_nested,
    discrepancy,
    discrepancy_profile,
    enumerate_affine,
    enumerate_nested,
    enumerate_profiles,
    extensions,
    is_invertible,
    is_nested_perfect,
    is_perfect,
    levin_digits,
    baseline_digits,
    lex_words,
    necklace_to_cycle,
    rotate_columns,
    sigma,
    submatrix,
    tile,
    xor_mask_necklace,
    xor_words,
)

__all__ = [name for name in dir() if not name.startswith("_")]
