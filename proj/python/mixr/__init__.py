"""Admissible edge-colourings of complete graphs built on projective-plane Levi graphs."""

from ._mixr import (
    EdgeColouring,
    InputError,
    PreconditionError,
    WordPair,
    base_case_check,
    brute_force_maxr,
    canonicalize,
    colour_count,
    encode_sat,
    expand_words,
    extract_words,
    fano_colouring,
    is_admissible,
    is_planar_difference_set,
    plane_lines,
    rotational_cycle,
    run_cli,
    search_rotational,
    sigma,
    theorem_bound,
    verify_words,
)

__all__ = [
    "EdgeColouring",
    "InputError",
    "PreconditionError",
    "WordPair",
    "base_case_check",
    "brute_force_maxr",
    "canonicalize",
    "colour_count",
    "encode_sat",
    "expand_words",
    "extract_words",
    "fano_colouring",
    "is_admissible",
    "is_planar_difference_set",
    "plane_lines",
    "rotational_cycle",
    "run_cli",
    "search_rotational",
    "sigma",
    "theorem_bound",
    "verify_words",
]
