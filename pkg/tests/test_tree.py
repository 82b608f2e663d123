"""Tree rows, random cell access, vertex classification, and the
antitranspose / entry-polynomial symmetries."""
import itertools

import hypothesis.strategies as st
import pytest
from hypothesis import given

from matmonoid import (
    IDENTITY,
    BiPolyN,
    DominanceClass,
    IndexOutOfRange,
    LimitExceeded,
    Mat2,
    MonoidParams,
    TreeRow,
    antitranspose,
    cell,
    cell_word,
    children,
    classify,
    entry_polys,
    lmat,
    mu,
    mu_row_bruteforce,
    rmat,
    row,
    word_to_matrix,
)
from matmonoid import suites

P23 = MonoidParams(2, 3)

words = st.text(alphabet="LR", max_size=12)
small_params = st.builds(MonoidParams, st.integers(1, 5), st.integers(1, 5))


def all_words(max_len):
    for n in range(max_len + 1):
        for letters in itertools.product("LR", repeat=n):
            yield "".join(letters)


class TestChildren:
    def test_root_children_are_the_generators(self):
        assert children(IDENTITY, P23) == (Mat2(1, 0, 2, 1), Mat2(1, 3, 0, 1))

    def test_deeper_vertex(self):
        left, right = children(Mat2(1, 3, 2, 7), P23)
        assert left == Mat2(1, 3, 4, 13)
        assert right == Mat2(7, 24, 2, 7)

    @given(words, small_params)
    def test_children_left_multiply(self, w, params):
        m = word_to_matrix(w, params)
        left, right = children(m, params)
        assert left == lmat(params) * m
        assert right == rmat(params) * m


class TestTreeRow:
    def test_row_values_to_depth_two(self):
        assert row(IDENTITY, P23, 0).cells == (IDENTITY,)
        assert row(IDENTITY, P23, 1).cells == (Mat2(1, 0, 2, 1), Mat2(1, 3, 0, 1))
        assert row(IDENTITY, P23, 2).cells == (
            Mat2(1, 0, 4, 1),
            Mat2(7, 3, 2, 1),
            Mat2(1, 3, 2, 7),
            Mat2(1, 6, 0, 1),
        )

    def test_rows_chain_by_children(self):
        params = MonoidParams(3, 1)
        for n in range(5):
            parents = row(IDENTITY, params, n)
            kids = row(IDENTITY, params, n + 1)
            for j, m in enumerate(parents, start=1):
                assert (kids.cell(2 * j - 1), kids.cell(2 * j)) == children(m, params)

    def test_non_identity_root(self):
        root = Mat2(1, 3, 0, 1)
        assert row(root, P23, 1).cells == children(root, P23)

    def test_cell_accessor_is_one_indexed(self):
        r = row(IDENTITY, P23, 2)
        assert len(r) == 4
        assert list(r) == list(r.cells)
        assert r.cell(1) == Mat2(1, 0, 4, 1)
        assert r.cell(4) == Mat2(1, 6, 0, 1)
        with pytest.raises(IndexOutOfRange):
            r.cell(0)
        with pytest.raises(IndexOutOfRange):
            r.cell(5)

    def test_cell_count_is_validated(self):
        with pytest.raises(ValueError):
            TreeRow(1, (IDENTITY,))

    def test_negative_depth(self):
        with pytest.raises(IndexOutOfRange):
            row(IDENTITY, P23, -1)


class TestEnumerationLimits:
    def test_default_row_cap(self):
        with pytest.raises(LimitExceeded):
            row(IDENTITY, P23, 21)

    def test_explicit_limit(self):
        with pytest.raises(LimitExceeded):
            row(IDENTITY, P23, 5, limit=16)
        assert len(row(IDENTITY, P23, 4, limit=16)) == 16

    def test_env_var_lowers_the_cap(self, monkeypatch):
        monkeypatch.setenv("MATMONOID_ENUM_LIMIT", "8")
        with pytest.raises(LimitExceeded):
            row(IDENTITY, P23, 4)
        assert len(row(IDENTITY, P23, 3)) == 8

    def test_explicit_limit_overrides_env(self, monkeypatch):
        monkeypatch.setenv("MATMONOID_ENUM_LIMIT", "8")
        assert len(row(IDENTITY, P23, 4, limit=16)) == 16

    def test_bad_env_value(self, monkeypatch):
        monkeypatch.setenv("MATMONOID_ENUM_LIMIT", "lots")
        with pytest.raises(LimitExceeded):
            row(IDENTITY, P23, 2)

    def test_bruteforce_respects_limit(self):
        with pytest.raises(LimitExceeded):
            mu_row_bruteforce(P23, 5, limit=16)


class TestMuRowBruteforce:
    def test_known_values(self):
        assert mu_row_bruteforce(P23, 0) == 1
        assert mu_row_bruteforce(P23, 1) == 3
        assert mu_row_bruteforce(P23, 2) == 7
        assert mu_row_bruteforce(P23, 3) == 24
        assert mu_row_bruteforce(MonoidParams(2, 1), 4) == 14

    @pytest.mark.parametrize("n", range(7))
    def test_matches_row_scan(self, n):
        assert mu_row_bruteforce(P23, n) == max(mu(m) for m in row(IDENTITY, P23, n))


class TestCellAccess:
    def test_root_cell(self):
        assert cell(0, 1, P23) == IDENTITY
        assert cell_word(0, 1) == ""

    def test_depth_two_cells(self):
        assert cell(2, 2, P23) == Mat2(7, 3, 2, 1)
        assert cell(2, 3, P23) == Mat2(1, 3, 2, 7)
        assert cell_word(2, 2) == "RL"
        assert cell_word(2, 3) == "LR"

    @pytest.mark.parametrize("uv", [(2, 3), (3, 1)])
    def test_cell_matches_row(self, uv):
        params = MonoidParams(*uv)
        for n in range(7):
            r = row(IDENTITY, params, n)
            for i in range(1, (1 << n) + 1):
                assert cell(n, i, params) == r.cell(i)

    def test_cell_word_round_trips_through_products(self):
        for n in range(9):
            for i in range(1, (1 << n) + 1, max(1, (1 << n) // 16)):
                assert word_to_matrix(cell_word(n, i), P23) == cell(n, i, P23)

    @pytest.mark.parametrize("n,i", [(2, 0), (2, 5), (-1, 1), (0, 2)])
    def test_index_validation(self, n, i):
        with pytest.raises(IndexOutOfRange):
            cell(n, i, P23)
        with pytest.raises(IndexOutOfRange):
            cell_word(n, i)


class TestClassify:
    def test_identity_is_neither(self):
        assert classify(IDENTITY, P23) is DominanceClass.NEITHER
        assert classify(IDENTITY, MonoidParams(1, 1)) is DominanceClass.NEITHER

    def test_generators(self):
        assert classify(lmat(P23), P23) is DominanceClass.U_LOWER_DOMINANT
        assert classify(rmat(P23), P23) is DominanceClass.V_UPPER_DOMINANT

    @pytest.mark.parametrize("uv", [(2, 3), (1, 1)])
    def test_first_letter_decides_the_class(self, uv):
        # Every depth >= 1 vertex peels exactly one generator, the one
        # named by the first letter of its word; BOTH never occurs.
        params = MonoidParams(*uv)
        for w in all_words(8):
            if not w:
                continue
            got = classify(word_to_matrix(w, params), params)
            want = (
                DominanceClass.U_LOWER_DOMINANT
                if w[0] == "L"
                else DominanceClass.V_UPPER_DOMINANT
            )
            assert got is want, w

    def test_full_range_suite(self):
        r = suites.check_single_peel_class(10)
        assert r.passed, r.failures


class TestAntitranspose:
    def test_known_values(self):
        assert antitranspose(IDENTITY) == IDENTITY
        assert antitranspose(Mat2(1, 3, 2, 7)) == Mat2(7, 2, 3, 1)
        assert antitranspose(lmat(P23)) == rmat(MonoidParams(3, 2))

    @given(st.tuples(*[st.integers(0, 10**12)] * 4))
    def test_involution(self, entries):
        m = Mat2(*entries)
        assert antitranspose(antitranspose(m)) == m

    @given(words, words, small_params)
    def test_multiplicative(self, w1, w2, params):
        # Conjugation by the coordinate flip: a ring automorphism that
        # exchanges the two shear families.
        m = word_to_matrix(w1, params)
        n = word_to_matrix(w2, params)
        assert antitranspose(m * n) == antitranspose(m) * antitranspose(n)


class TestMirrorSymmetry:
    def test_small_range_directly(self):
        # Swapping (u,v) mirrors each row up to antitransposition.
        p32 = MonoidParams(3, 2)
        for n in range(7):
            for i in range(1, (1 << n) + 1):
                mirrored = antitranspose(cell(n, (1 << n) + 1 - i, p32))
                assert cell(n, i, P23) == mirrored

    def test_full_range_suite(self):
        r = suites.check_mirror_symmetry(12)
        assert r.passed, r.failures


class TestLeftHalfDominance:
    def test_left_half_majorizes_when_u_is_at_least_v(self):
        params = MonoidParams(3, 2)
        for n in range(1, 9):
            cells = row(IDENTITY, params, n).cells
            for i in range(1, (1 << (n - 1)) + 1):
                assert mu(cells[(1 << n) - i]) <= mu(cells[i - 1])

    def test_orientation_is_required(self):
        # With u < v the left half does not majorize; pin one violation so
        # the u >= v restriction stays honest.
        params = MonoidParams(1, 2)
        found = False
        for n in range(1, 9):
            cells = row(IDENTITY, params, n).cells
            for i in range(1, (1 << (n - 1)) + 1):
                if mu(cells[(1 << n) - i]) > mu(cells[i - 1]):
                    found = True
                    break
            if found:
                break
        assert found

    def test_full_range_suite(self):
        r = suites.check_left_half_dominance(12)
        assert r.passed, r.failures


class TestColumnMax:
    def test_last_letter_names_the_dominant_column(self):
        for w in all_words(6):
            if not w:
                continue
            m = word_to_matrix(w, P23)
            if w[-1] == "L":
                assert mu(m) == max(m.a, m.c), w
            else:
                assert mu(m) == max(m.b, m.d), w

    def test_full_range_suite(self):
        r = suites.check_column_max(8)
        assert r.passed, r.failures


class TestEntryPolys:
    def test_empty_word(self):
        one, zero = BiPolyN.constant(1), BiPolyN()
        assert entry_polys("") == ((one, zero), (zero, one))

    def test_two_letter_words(self):
        x = BiPolyN({(1, 0): 1})
        y = BiPolyN({(0, 1): 1})
        one = BiPolyN.constant(1)
        one_xy = BiPolyN({(0, 0): 1, (1, 1): 1})
        assert entry_polys("LR") == ((one, y), (x, one_xy))
        assert entry_polys("RL") == ((one_xy, y), (x, one))

    @given(words, st.integers(1, 4), st.integers(1, 4))
    def test_evaluation_recovers_the_product(self, w, u, v):
        (f1, f2), (f3, f4) = entry_polys(w)
        m = word_to_matrix(w, MonoidParams(u, v))
        assert (f1(u, v), f2(u, v), f3(u, v), f4(u, v)) == (m.a, m.b, m.c, m.d)

    def test_monomial_shape_small_range(self):
        # Diagonal entries are balanced in (X, Y); the off-diagonals carry
        # one extra Y (top right) or X (bottom left). Total degree <= depth.
        for w in all_words(6):
            (f1, f2), (f3, f4) = entry_polys(w)
            assert all(i == j for (i, j) in f1.coeffs)
            assert all(i == j for (i, j) in f4.coeffs)
            assert all(j == i + 1 for (i, j) in f2.coeffs)
            assert all(i == j + 1 for (i, j) in f3.coeffs)
            for f in (f1, f2, f3, f4):
                assert f.total_degree <= len(w)

    def test_full_range_suite(self):
        r = suites.check_entry_poly_structure(10)
        assert r.passed, r.failures


class TestEntryPolyFlip:
    def test_mirror_cell_is_the_swapped_antitranspose(self):
        for n in range(1, 7):
            for i in range(1, (1 << n) + 1):
                (e1, e2), (e3, e4) = entry_polys(cell_word(n, i))
                mirror = entry_polys(cell_word(n, (1 << n) + 1 - i))
                expected = (
                    (e4.swap_vars(), e3.swap_vars()),
                    (e2.swap_vars(), e1.swap_vars()),
                )
                assert mirror == expected

    def test_full_range_suite(self):
        r = suites.check_entry_poly_flip(8)
        assert r.passed, r.failures


class TestLeftColumnBound:
    def test_full_range_suite(self):
        # Odd depths up to 15: every left-column entry of a depth-(2n+1)
        # matrix is bounded by the alternating-word column, which attains it.
        r = suites.check_left_column_bound(15)
        assert r.passed, r.failures
