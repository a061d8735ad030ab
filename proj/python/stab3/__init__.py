"""Optimal distance-3 stabilizer codes for every length n >= 5."""

from stab3._core import (
    build,
    certificate,
    classify,
    hamming_s,
    named_block,
    paste,
    verify,
    weight3_witness,
    weight_distribution,
)

__all__ = [
    "build",
    "certificate",
    "classify",
    "hamming_s",
    "named_block",
    "paste",
    "verify",
    "weight3_witness",
    "weight_distribution",
]
