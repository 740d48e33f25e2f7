"""Weighted numerical radius toolkit.

Computes the numerical radius and its weighted variants with certified
phase searches, builds 2x2 block-operator quantities, and numerically
verifies a registry of operator inequalities on seeded random-matrix
ensembles.
"""

__version__ = "0.1.0"

from .blocks import (
    Block2x2,
    RouteMismatch,
    antidiag_sup,
    assemble,
    split,
    wt_antidiag,
    wt_circulant,
    wt_diag,
    wt_offdiag_sym,
)
from .ensembles import (
    KINDS,
    EnsembleSpec,
    UnknownKind,
    complex_gaussian,
    derive_seed,
    generate,
    haar_unitary,
    splitmix64,
    trial_seed,
)
from .harness import (
    HuntResult,
    VerificationReport,
    build_inputs,
    default_ensembles,
    hunt,
    replay,
    run_sweep,
    tightness_scan,
)
from .io import load_matrix, matrix_from_json, matrix_to_json, save_matrix
from .linalg import (
    NotHermitian,
    NotPSD,
    NotSquare,
    PolarParts,
    SpectralDecomposition,
    abs_op,
    adjoint,
    as_operator,
    hermitian_eigen,
    inner,
    polar,
    psd_power,
    spectral_norm,
    svd,
)
from .radius import (
    DefinitionsGap,
    RadiusResult,
    aluthge,
    numerical_radius,
    weighted_combination,
    weighted_imag_part,
    weighted_norm,
    weighted_numerical_radius,
    weighted_radius_definitions_gap,
    weighted_real_part,
)
from .registry import (
    REGISTRY,
    BoundResult,
    BoundSpec,
    EvalContext,
    UnknownBound,
    get_bound,
    list_bounds,
)
from .search import SearchResult, ToleranceNotReached, certified_max

__all__ = [
    "__version__",
    # linalg
    "NotHermitian", "NotPSD", "NotSquare", "PolarParts", "SpectralDecomposition",
    "abs_op", "adjoint", "as_operator", "hermitian_eigen", "inner", "polar",
    "psd_power", "spectral_norm", "svd",
    # radius
    "DefinitionsGap", "RadiusResult", "aluthge", "numerical_radius",
    "weighted_combination", "weighted_imag_part", "weighted_norm",
    "weighted_numerical_radius", "weighted_radius_definitions_gap",
    "weighted_real_part",
    # search
    "SearchResult", "ToleranceNotReached", "certified_max",
    # blocks
    "Block2x2", "RouteMismatch", "antidiag_sup", "assemble", "split",
    "wt_antidiag", "wt_circulant", "wt_diag", "wt_offdiag_sym",
    # registry
    "REGISTRY", "BoundResult", "BoundSpec", "EvalContext", "UnknownBound",
    "get_bound", "list_bounds",
    # ensembles
    "KINDS", "EnsembleSpec", "UnknownKind", "complex_gaussian", "derive_seed",
    "generate", "haar_unitary", "splitmix64", "trial_seed",
    # harness
    "HuntResult", "VerificationReport", "build_inputs", "default_ensembles",
    "hunt", "replay", "run_sweep", "tightness_scan",
    # io
    "load_matrix", "matrix_from_json", "matrix_to_json", "save_matrix",
]
