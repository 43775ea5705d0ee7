"""Exact construction and verification of Butson-Hadamard matrices.

The library grows BH(m, n) inputs into BH(m, n(n-1)) and, for even n and m,
BH(m, n(n/2-1)) outputs, using complete families of Latin squares eligible
for the construction.  All orthogonality checking is exact: a sum of roots
of unity is compared with an integer through cyclotomic polynomial
division, never through floating point.
"""

from .butson import (
    ButsonMatrix,
    CoreMatrix,
    TExtraction,
    VerifyReport,
    core,
    dephase,
    extract_t,
    find_c1_pairs,
    find_c2_cells,
    fourier,
    matrix_digest,
    permute_columns,
    read_matrix,
    verify,
    write_matrix,
)
from .cyclotomic import (
    ExponentCountVector,
    IntPolynomial,
    approx_sum,
    conjugate_exponent,
    cyclotomic_poly,
    dot_counts,
    exponent_counts,
    negate_exponent,
    sum_equals,
)
from .errors import FormatError, PlanError, VerificationError
from .galois import (
    FieldElement,
    GaloisField,
    element_value,
    enumerate_elements,
    field_add,
    field_mul,
    is_prime,
    make_field,
    prime_power,
)
from .latin import (
    LatinSquare,
    LatinTensor,
    are_lsesc,
    are_mols,
    classical_lsesc_set,
    classical_tensor_set,
    conjugate_lsesc_mols,
    encode,
    exhaustive_complete_lsesc,
    inflate,
    is_latin,
    read_latin_set,
    reconstruct,
    write_latin_set,
)
from .scarpis import (
    PhiPlan,
    PsiPlan,
    check_t_properties,
    halving_family,
    count_phi_outputs,
    count_psi_outputs,
    phi,
    psi,
    resolve_psi,
)

__version__ = "0.1.0"
