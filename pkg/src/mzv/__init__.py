"""Exact word-algebra machinery for multiple zeta value relations.

The package works with words over the letters {0, 1, z} (pole positions of
iterated integrals on the interval), sparse rational polynomials on them,
and the operator calculus that turns the z-differential structure of those
integrals into exact Q-linear relations among multiple zeta values: shuffle
and generalized stuffle products, dualities, letter-removal derivations,
shuffle regularization, tensor decompositions, the regularized z -> 1
limit, relation generators (confluence / double shuffle / duality), exact
rational rank computations, and independent high-precision numerical
verification of every identity in play.
"""

__version__ = "0.1.0"

from .algebra import (
    NCPoly,
    aspoly,
    const_proj,
    derivation,
    render_poly,
    shuffle,
    stuffle,
    subspace_check,
    substitute,
    tau_infinity,
    tau_z,
)
from .linalg import (
    EchelonBasis,
    RelVector,
    a0_basis,
    conjectural_dimension,
    expected_relation_rank,
    from_vector,
    in_span,
    rank,
    to_vector,
)
from .numeric import (
    PrecisionConfig,
    check_asymptotic,
    check_derivative,
    eval_hyperlog,
    eval_li,
    eval_mzv,
    eval_poly_hyperlog,
    eval_poly_mzv,
)
from .regularize import TensorSum, decompose_e1, reg_shuffle, reg_z1, reg_zz
from .relations import (
    RelationRecord,
    asymptotic_poly,
    confluence_relation,
    duality_relation,
    generate_confluence,
    generate_duality,
    generate_rds,
    in_standard_ideal,
    lambda_map,
    lambda_prime,
    n_map,
    phi_shuffle,
    phi_stuffle,
    phi_tensor,
    rds_relation,
)
from .serialize import (
    read_records,
    record_from_json,
    record_to_json,
    records_to_csv,
    records_to_tex,
    write_records,
)
from .words import (
    EMPTY,
    ONE,
    SubspaceError,
    Z,
    ZERO,
    parse_word,
    render_word,
    weight,
    word_in_subspace,
)
from .zeta import ZetaTerm, index_to_word, to_zeta_string, word_to_index, zeta_terms
