"""Exact construction and verification of minimal faithful
representations of current Heisenberg Lie algebras."""

from .jordan import JordanPair, jordan_chevalley, rep_jordan_parts, verify_nilrep_theorem
from .lie import (
    LieAlgebra,
    Subspace,
    TruncatedSum,
    center,
    current_algebra,
    derived,
    direct_sum,
    heisenberg,
    lower_central_series,
    subalgebra_closure,
    truncated_sum,
)
from .linalg import (
    QMatrix,
    block_assemble,
    is_nilpotent,
    kernel_basis,
    kron,
    minimal_polynomial,
    rank,
)
from .poly import (
    Polynomial,
    QuotientAlgebra,
    companion,
    crt_split,
    eval_at_matrix,
    parse_poly,
    poly_gcd,
    regular_representation,
)
from .reps import (
    ABPair,
    Representation,
    beta_injective,
    ceil_two_sqrt,
    check_homomorphism,
    find_partner,
    is_faithful,
    make_AB,
    min_sum,
    minimal_faithful,
    mu_formula,
    pi0,
    pi_AB,
    tensor_rep,
)
from .schur import (
    NilFamily,
    SchurDecomposition,
    max_rank_vector,
    schur_bound_check,
    schur_decompose,
    verify_schur,
)

__version__ = "0.1.0"
