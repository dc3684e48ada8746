"""Gabrielov numbers and Coxeter-Dynkin diagrams of cusp singularities.

Thin python layer over the C++ core. All arithmetic is exact; rationals
cross the boundary as fractions.Fraction.
"""

import json as _json

from ._gabdyn import (
    CohomologyDims,
    ConsistencyError,
    CuspTriple,
    GabrielovNumbers,
    GroupElement,
    GroupStats,
    InputError,
    Report,
    Space,
    SymmetryGroup,
    VerificationError,
    analyze_json,
    analyze_text,
    arm_cycle,
    close_generators,
    cohomology_dims,
    compute_stats,
    delta_invariant,
    diagram,
    enumerate_symmetry_groups,
    fundamental_weight,
    gabrielov_numbers,
    lambda_lemma_check,
    lambda_sequence,
    maximal_symmetry_group,
    milnor_delta0,
    milnor_quotient_space,
    milnor_space,
    orbit_space,
    resolution_space,
    selftest,
    verify_case,
    z_model_space,
)

__all__ = [
    "CohomologyDims",
    "ConsistencyError",
    "CuspTriple",
    "GabrielovNumbers",
    "GroupElement",
    "GroupStats",
    "InputError",
    "Report",
    "Space",
    "SymmetryGroup",
    "VerificationError",
    "analyze",
    "analyze_json",
    "analyze_text",
    "arm_cycle",
    "close_generators",
    "cohomology_dims",
    "compute_stats",
    "delta_invariant",
    "diagram",
    "enumerate_symmetry_groups",
    "fundamental_weight",
    "gabrielov_numbers",
    "group",
    "lambda_lemma_check",
    "lambda_sequence",
    "maximal_symmetry_group",
    "milnor_delta0",
    "milnor_quotient_space",
    "milnor_space",
    "orbit_space",
    "resolution_space",
    "selftest",
    "verify_case",
    "z_model_space",
]


def group(triple, generators=()):
    """Close a list of exponent triples into a symmetry group of the triple."""
    gens = [g if isinstance(g, GroupElement) else GroupElement(*g) for g in generators]
    return close_generators(triple, gens)


def analyze(triple, symmetry_group):
    """Full analysis (stats, Gabrielov numbers, dimensions) as a dict."""
    return _json.loads(analyze_json(triple, symmetry_group))
