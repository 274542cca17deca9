"""Exact arithmetic for p-ary designs on two-row tabloids and brute-force
verification of the first-cohomology classification mod p."""

from .numtheory import (
    Digits,
    PrimeModulus,
    all_binoms_divisible,
    all_binoms_divisible_by_digits,
    binom_mod_p,
    binom_val_p,
    digits_base_p,
    p_adic_length,
    p_adic_val,
    require_odd_prime,
)
from .linalg import (
    AffineSolution,
    MatFp,
    MatZ,
    kernel_basis_fp,
    rank_fp,
    rank_fp_prefix,
    solve_affine_fp,
    solve_integer,
)
from .tabloid import (
    Element,
    Partition2,
    colex_rank,
    element_from_json,
    element_to_json,
    f_lambda,
    h0_dim,
    inclusion_matrix,
    inclusion_stack,
    james_check,
    mask_from_members,
    members_from_mask,
    psi,
    psi_int,
    specht_dim,
    specht_membership,
    subsets_colex,
)
from .designs import (
    DesignParams,
    IntegerDesign,
    PosetX,
    Spectrum,
    coefficient_transfer,
    constant_space_dim,
    construct_integral_design,
    find_t_design_fp,
    integral_design_exists,
    is_t_design,
    is_universal,
    level_design_exists,
    null_design_generator,
    poset_X,
    similar,
    spectrum,
    wilson_exists,
)
from .h1 import (
    Classification,
    H1Report,
    brute_force_h1,
    check_main_theorem,
    classify,
    predicted_h1,
    survey,
    survey_csv,
)
from .hemmer import (
    HemmerReport,
    SelfCheckError,
    adjoin,
    construct_auto,
    construct_base_case,
    construct_james,
    construct_pointed,
    decompose_pointed,
    find_hemmer_by_solver,
    verify_hemmer,
)

__version__ = "0.1.0"

__all__ = [
    "Digits",
    "PrimeModulus",
    "all_binoms_divisible",
    "all_binoms_divisible_by_digits",
    "binom_mod_p",
    "binom_val_p",
    "digits_base_p",
    "p_adic_length",
    "p_adic_val",
    "require_odd_prime",
    "AffineSolution",
    "MatFp",
    "MatZ",
    "kernel_basis_fp",
    "rank_fp",
    "rank_fp_prefix",
    "solve_affine_fp",
    "solve_integer",
    "Element",
    "Partition2",
    "colex_rank",
    "element_from_json",
    "element_to_json",
    "f_lambda",
    "h0_dim",
    "inclusion_matrix",
    "inclusion_stack",
    "james_check",
    "mask_from_members",
    "members_from_mask",
    "psi",
    "psi_int",
    "specht_dim",
    "specht_membership",
    "subsets_colex",
    "DesignParams",
    "IntegerDesign",
    "PosetX",
    "Spectrum",
    "coefficient_transfer",
    "constant_space_dim",
    "construct_integral_design",
    "find_t_design_fp",
    "integral_design_exists",
    "is_t_design",
    "is_universal",
    "level_design_exists",
    "null_design_generator",
    "poset_X",
    "similar",
    "spectrum",
    "wilson_exists",
    "Classification",
    "H1Report",
    "brute_force_h1",
    "check_main_theorem",
    "classify",
    "predicted_h1",
    "survey",
    "survey_csv",
    "HemmerReport",
    "SelfCheckError",
    "adjoin",
    "construct_auto",
    "construct_base_case",
    "construct_james",
    "construct_pointed",
    "decompose_pointed",
    "find_hemmer_by_solver",
    "verify_hemmer",
]
