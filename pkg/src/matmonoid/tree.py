"""Binary tree of shear products: rows, random access, and symmetries.

Every matrix in the monoid sits in an infinite binary tree rooted at the
identity: the left child of M is L_u*M and the right child is R_v*M, so
row n holds the 2^n products of depth n in left-to-right order. This
module enumerates rows, jumps straight to a cell by index, classifies
vertices by which generator was applied last, and exposes the symbolic
entry polynomials behind the (u,v) <-> (v,u) mirror symmetry.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum

from .errors import IndexOutOfRange, LimitExceeded
from .matrix import IDENTITY, Mat2, MonoidParams, validate_word
from .polydom import BiPolyN

__all__ = [
    "DEFAULT_ROW_LIMIT",
    "DominanceClass",
    "TreeRow",
    "antitranspose",
    "cell",
    "cell_word",
    "children",
    "classify",
    "entry_polys",
    "mu_row_bruteforce",
    "row",
]

# Enumerating a full row materializes 2^n matrices; refuse anything past
# this many cells instead of grinding silently. The environment variable
# raises or lowers the ceiling without code changes.
DEFAULT_ROW_LIMIT = 2**20
ENUM_LIMIT_ENV = "MATMONOID_ENUM_LIMIT"


def _enum_limit(limit: int | None, default: int) -> int:
    if limit is not None:
        return limit
    env = os.environ.get(ENUM_LIMIT_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise LimitExceeded(
                f"{ENUM_LIMIT_ENV} must be an integer, got {env!r}"
            ) from None
    return default


class DominanceClass(Enum):
    """Which generator can be peeled off on the left.

    Depth >= 1 monoid elements are always exactly one of the first two;
    the identity is NEITHER (both conditions need a positive entry where
    it has a zero), and BOTH cannot occur at determinant one.
    """

    U_LOWER_DOMINANT = "u-lower-dominant"
    V_UPPER_DOMINANT = "v-upper-dominant"
    BOTH = "both"
    NEITHER = "neither"


@dataclass(frozen=True, slots=True)
class TreeRow:
    """All 2^depth matrices of one tree row, left to right."""

    depth: int
    cells: tuple[Mat2, ...]

    def __post_init__(self) -> None:
        if len(self.cells) != 1 << self.depth:
            raise ValueError(
                f"row at depth {self.depth} must have {1 << self.depth} cells, "
                f"got {len(self.cells)}"
            )

    def cell(self, i: int) -> Mat2:
        """1-indexed access, i in {1, ..., 2^depth}."""
        if not 1 <= i <= len(self.cells):
            raise IndexOutOfRange(
                f"cell index {i} out of range 1..{len(self.cells)}"
            )
        return self.cells[i - 1]

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)


def children(m: Mat2, params: MonoidParams) -> tuple[Mat2, Mat2]:
    """(left child, right child) = (L_u*M, R_v*M)."""
    u, v = params.u, params.v
    left = Mat2(m.a, m.b, u * m.a + m.c, u * m.b + m.d)
    right = Mat2(m.a + v * m.c, m.b + v * m.d, m.c, m.d)
    return left, right


def _expand_rows(root: tuple[int, int, int, int], u: int, v: int, n: int):
    """Yield rows 0..n as lists of (a, b, c, d) tuples, left to right."""
    cur = [root]
    yield cur
    for _ in range(n):
        cur = [
            m
            for a, b, c, d in cur
            for m in ((a, b, u * a + c, u * b + d), (a + v * c, b + v * d, c, d))
        ]
        yield cur


def row(root: Mat2, params: MonoidParams, n: int, limit: int | None = None) -> TreeRow:
    """All 2^n depth-n descendants of root, in left-to-right order."""
    if n < 0:
        raise IndexOutOfRange(f"row depth must be nonnegative, got {n}")
    cap = _enum_limit(limit, DEFAULT_ROW_LIMIT)
    if 1 << n > cap:
        raise LimitExceeded(
            f"row at depth {n} has {1 << n} cells, above the limit of {cap}"
        )
    for cells in _expand_rows((root.a, root.b, root.c, root.d), params.u, params.v, n):
        pass
    return TreeRow(n, tuple(Mat2(a, b, c, d) for a, b, c, d in cells))


def mu_row_bruteforce(params: MonoidParams, n: int, limit: int | None = None) -> int:
    """Exact max entry over all 2^n depth-n matrices, by enumeration.

    This is the trusted-but-slow reference the closed forms are checked
    against.
    """
    if n < 0:
        raise IndexOutOfRange(f"row depth must be nonnegative, got {n}")
    cap = _enum_limit(limit, DEFAULT_ROW_LIMIT)
    if 1 << n > cap:
        raise LimitExceeded(
            f"row at depth {n} has {1 << n} cells, above the limit of {cap}"
        )
    for cells in _expand_rows((1, 0, 0, 1), params.u, params.v, n):
        pass
    return max(map(max, cells))


def _cell_bits(n: int, i: int) -> list[int]:
    if n < 0:
        raise IndexOutOfRange(f"row depth must be nonnegative, got {n}")
    if not 1 <= i <= 1 << n:
        raise IndexOutOfRange(f"cell index {i} out of range 1..{1 << n}")
    return [(i - 1) >> k & 1 for k in range(n - 1, -1, -1)]


def cell(n: int, i: int, params: MonoidParams) -> Mat2:
    """The i-th depth-n vertex (1-indexed, left to right), rooted at I2.

    Walks the bit path of i-1 (high bit first, 0 = left child) in O(n)
    generator applications, without materializing the row.
    """
    u, v = params.u, params.v
    a, b, c, d = 1, 0, 0, 1
    for bit in _cell_bits(n, i):
        if bit:
            a, b = a + v * c, b + v * d
        else:
            c, d = u * a + c, u * b + d
    return Mat2(a, b, c, d)


def cell_word(n: int, i: int) -> str:
    """The generator word of cell (n, i): word_to_matrix(cell_word(n, i)) = cell(n, i).

    The path applies generators on the left from the root outward, so the
    left-to-right word is the path read leaf-to-root.
    """
    return "".join("L" if bit == 0 else "R" for bit in reversed(_cell_bits(n, i)))


def classify(m: Mat2, params: MonoidParams) -> DominanceClass:
    """Classify by the lower/upper dominance conditions."""
    u, v = params.u, params.v
    lower = m.c >= u * m.a and m.d >= u * m.b
    upper = m.a >= v * m.c and m.b >= v * m.d
    if lower and upper:
        return DominanceClass.BOTH
    if lower:
        return DominanceClass.U_LOWER_DOMINANT
    if upper:
        return DominanceClass.V_UPPER_DOMINANT
    return DominanceClass.NEITHER


def antitranspose(m: Mat2) -> Mat2:
    """[[a,b],[c,d]] -> [[d,c],[b,a]] (reflect across the antidiagonal).

    Conjugates the two generator families: cell (n, i) of the (u,v) tree
    is the antitranspose of cell (n, 2^n+1-i) of the (v,u) tree.
    """
    return Mat2(m.d, m.c, m.b, m.a)


_BIPOLY_ONE = BiPolyN({(0, 0): 1})
_BIPOLY_ZERO = BiPolyN()


def entry_polys(word: str) -> tuple[tuple[BiPolyN, BiPolyN], tuple[BiPolyN, BiPolyN]]:
    """Symbolic entries of a word's matrix as polynomials in (X, Y) = (u, v).

    Returns ((f1, f2), (f3, f4)) row-major. Each entry has total degree
    at most the word length; f1 and f4 are sums of balanced monomials
    X^k Y^k, f2 is Y times a balanced part, f3 is X times one.
    """
    validate_word(word)
    f1, f2, f3, f4 = _BIPOLY_ONE, _BIPOLY_ZERO, _BIPOLY_ZERO, _BIPOLY_ONE
    # Prepend generators: the accumulated matrix is left-multiplied as the
    # word is consumed right to left.
    for ch in reversed(word):
        if ch == "L":
            f3 = f1.shift(1, 0) + f3
            f4 = f2.shift(1, 0) + f4
        else:
            f1 = f1 + f3.shift(0, 1)
            f2 = f2 + f4.shift(0, 1)
    return (f1, f2), (f3, f4)
