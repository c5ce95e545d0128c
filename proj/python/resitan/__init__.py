"""Exact and numeric checks of tangent products over power residues."""

from ._core import (
    BoundExceededError,
    BranchViolationError,
    HypothesisError,
    InvalidInputError,
    NonRealSymbolError,
    NotRepresentableError,
    PoleProximityError,
    ResitanError,
    RingMismatchError,
    VerificationRecord,
    check_lemma31,
    cornacchia,
    cyclotomic_poly,
    format_report,
    is_mth_residue,
    is_prime,
    jacobi,
    load_report,
    pmd_lemma,
    pmd_theorem14,
    primitive_root,
    residue_set,
    residue_sum,
    scan,
    sqrt_mod,
    symbol_sign,
    tan_product,
    tangent_product_value,
    two_residue_criterion,
    verify_cor11,
    verify_cor12,
    verify_gi,
    verify_gi_plus,
    verify_numeric,
    verify_tan_cross,
    write_report,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
