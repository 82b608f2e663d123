"""Exact arithmetic in the free monoid generated by two shear matrices.

The monoid of L = [[1,0],[u,1]] and R = [[1,v],[0,1]] under product is
free, and its depth-n elements form the rows of a binary tree. This
package computes the exact maximal entry per depth (Lucas-sequence
closed forms with brute-force oracles), the witness words attaining it,
the polynomial dominance machinery behind the proofs, and an SL2(F_p)
bit-string hash whose collision-free length bound drops out of the
maximal-entry sequence.
"""

from .bsvhash import (
    Digest,
    HashParams,
    HashState,
    bits_from_ascii01,
    bits_from_bytes_msb,
    bound_n0,
    digest_hex,
    exhaustive_collision_check,
    hash_string,
    init,
    is_probable_prime,
    parse,
    serialize,
    update_bit,
)
from .errors import (
    IndexOutOfRange,
    InvalidParams,
    LimitExceeded,
    MatMonoidError,
    NotInMonoid,
    WitnessMismatch,
)
from .extremal import (
    AlphaGammaPair,
    ClosedFormParams,
    LucasPair,
    Witness,
    alpha_gamma,
    closed_form_float,
    closed_form_params,
    collision_horizon,
    fseq,
    lucas,
    mu_depth,
    witness,
)
from .matrix import (
    IDENTITY,
    Mat2,
    MonoidParams,
    factor,
    lmat,
    mu,
    mul,
    rmat,
    word_to_matrix,
)
from .polydom import (
    ONE,
    X,
    ZERO,
    BiPolyN,
    PolyN,
    dominates,
    f_poly,
    g_poly,
    h_poly,
    i_poly,
    left_column_polys,
    pascal_merge_check,
)
from .tree import (
    DominanceClass,
    TreeRow,
    antitranspose,
    cell,
    cell_word,
    children,
    classify,
    entry_polys,
    mu_row_bruteforce,
    row,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaGammaPair",
    "BiPolyN",
    "ClosedFormParams",
    "Digest",
    "DominanceClass",
    "HashParams",
    "HashState",
    "IDENTITY",
    "IndexOutOfRange",
    "InvalidParams",
    "LimitExceeded",
    "LucasPair",
    "Mat2",
    "MatMonoidError",
    "MonoidParams",
    "NotInMonoid",
    "ONE",
    "PolyN",
    "TreeRow",
    "Witness",
    "WitnessMismatch",
    "X",
    "ZERO",
    "alpha_gamma",
    "antitranspose",
    "bits_from_ascii01",
    "bits_from_bytes_msb",
    "bound_n0",
    "cell",
    "cell_word",
    "children",
    "classify",
    "closed_form_float",
    "closed_form_params",
    "collision_horizon",
    "digest_hex",
    "dominates",
    "entry_polys",
    "exhaustive_collision_check",
    "f_poly",
    "factor",
    "fseq",
    "g_poly",
    "h_poly",
    "hash_string",
    "i_poly",
    "init",
    "is_probable_prime",
    "left_column_polys",
    "lmat",
    "lucas",
    "mu",
    "mu_depth",
    "mu_row_bruteforce",
    "mul",
    "parse",
    "pascal_merge_check",
    "rmat",
    "row",
    "serialize",
    "update_bit",
    "witness",
    "word_to_matrix",
]
