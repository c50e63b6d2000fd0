"""
Weighted Bruhat orders on the symmetric group, divided-difference operators
on (padded) Schubert polynomials, and exact Smith normal form checks for the
resulting layer matrices, together with the analogous raising/lowering
calculus on products of finite chains.

Everything is exact integer / rational arithmetic; no floating point.
"""

from .chains import (
    base_change_unimodular_check,
    construct_A,
    construct_B,
    dm_layer_matrix,
    monomials_of_profile_rank,
    normalize_profile,
    predicted_um_snf,
    profile_rank_size,
    profile_rank_sizes,
    um_determinant_check,
    um_determinant_formula,
    um_layer_matrix,
    um_snf_check,
)
from .hasse import (
    ORDERS,
    WEIGHT_SYSTEMS,
    WeightedHasseDiagram,
    build_hasse,
    chevalley_weight,
    code_weight,
    diagram_to_dot,
    diagram_to_json,
    layer_matrix,
    nabla_weight,
    w0_symmetry_check,
    weighted_path_count,
)
from .operators import (
    BASES,
    OPERATORS,
    OperatorSpec,
    commutator_check,
    differential_layer_matrix,
    transpose_duality_check,
    verify_delta_theorem,
    verify_macdonald,
    verify_nabla_theorem,
    verify_path_identities,
)
from .permutations import (
    Permutation,
    identity,
    inverse,
    lehmer_code,
    length,
    longest_element,
    num_inversions_max,
    parse,
    permutations_by_rank,
    permutations_of_rank,
    strong_covers_up,
    to_string,
    w0_times,
    weak_covers_up,
)
from .schubert import (
    IntPolynomial,
    PaddedPolynomial,
    apply_delta,
    apply_nabla,
    basis_matrix,
    basis_matrix_inverse,
    divided_difference,
    expand_in_padded_schubert_basis,
    monomials_of_rank,
    pad,
    padded_schubert,
    principal_specialization,
    schubert,
    schubert_standard,
    staircase,
    unpad,
)
from .snf import (
    determinant,
    mahonian_numbers,
    matmul,
    predicted_snf,
    rank_size,
    snf,
    snf_via_minor_gcd,
    transpose,
    verify_snf_theorem,
)

__version__ = "0.1.0"
