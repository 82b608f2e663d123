"""Shear-product hashing into SL2(F_p): primality gate, streaming state,
digest serialization, and the exhaustive collision search."""
import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from matmonoid import (
    Digest,
    HashParams,
    InvalidParams,
    LimitExceeded,
    MonoidParams,
    bits_from_ascii01,
    bits_from_bytes_msb,
    bound_n0,
    collision_horizon,
    digest_hex,
    exhaustive_collision_check,
    hash_string,
    init,
    is_probable_prime,
    parse,
    serialize,
    update_bit,
    word_to_matrix,
)

HP235 = HashParams(2, 3, 5)
BIG_PRIME = 2**61 - 1

bit_lists = st.lists(st.integers(0, 1), max_size=48)


class TestIsProbablePrime:
    def test_small_values(self):
        primes = {2, 3, 5, 7, 11, 13, 17, 19}
        for n in range(-2, 21):
            assert is_probable_prime(n) == (n in primes)
        for n in (97, 101, 257, 1009):
            assert is_probable_prime(n)

    def test_carmichael_numbers_are_rejected(self):
        for n in (561, 1105, 1729, 41041):
            assert not is_probable_prime(n)

    def test_strong_pseudoprime_base_two(self):
        assert not is_probable_prime(2047)  # 23 * 89

    def test_large_known_values(self):
        assert is_probable_prime(BIG_PRIME)
        assert is_probable_prime(10**9 + 7)
        assert not is_probable_prime(BIG_PRIME * (10**9 + 7))

    @given(st.integers(2, 10**4))
    def test_matches_trial_division(self, n):
        by_trial = n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))
        assert is_probable_prime(n) == by_trial


class TestHashParams:
    def test_valid_params(self):
        assert (HP235.u, HP235.v, HP235.p) == (2, 3, 5)
        assert HP235.monoid_params == MonoidParams(2, 3)

    @pytest.mark.parametrize("u,v,p", [(2, 3, 4), (2, 3, 1), (0, 3, 5), (2, 0, 5)])
    def test_rejects_bad_params(self, u, v, p):
        with pytest.raises(InvalidParams):
            HashParams(u, v, p)

    @pytest.mark.parametrize("p,width", [(2, 1), (5, 1), (251, 1), (257, 2), (65537, 3)])
    def test_byte_width(self, p, width):
        assert HashParams(1, 1, p).byte_width == width


class TestHashState:
    def test_init_is_identity(self):
        state = init(HP235)
        assert state.digest() == Digest(1, 0, 0, 1)
        assert state.bits_consumed == 0

    def test_single_bit_steps(self):
        state = init(HP235)
        update_bit(state, 0)
        assert state.digest() == Digest(1, 0, 2, 1)
        update_bit(state, 1)
        assert state.digest() == Digest(1, 3, 2, 2)
        assert state.bits_consumed == 2

    def test_rejects_non_bits(self):
        with pytest.raises(ValueError):
            init(HP235).update_bit(2)

    def test_copy_is_independent(self):
        state = init(HP235).update([0, 1])
        clone = state.copy()
        state.update_bit(1)
        assert clone.digest() == Digest(1, 3, 2, 2)
        assert clone.bits_consumed == 2
        assert state.bits_consumed == 3

    @given(bit_lists, st.integers(0, 48))
    def test_chunking_is_irrelevant(self, bits, cut):
        cut = min(cut, len(bits))
        chunked = init(HP235).update(bits[:cut]).update(bits[cut:])
        assert chunked.digest() == hash_string(HP235, bits)
        assert chunked.bits_consumed == len(bits)

    @given(bit_lists)
    def test_determinant_stays_one(self, bits):
        d = hash_string(HP235, bits)
        assert (d.a * d.d - d.b * d.c) % HP235.p == 1


class TestHashString:
    def test_worked_example(self):
        assert hash_string(HP235, "01100") == Digest(0, 1, 4, 3)

    def test_empty_string(self):
        assert hash_string(HP235, "") == Digest(1, 0, 0, 1)

    def test_large_modulus_leaves_product_unreduced(self):
        assert hash_string(HashParams(2, 3, 101), "01100") == Digest(25, 6, 54, 13)

    def test_accepts_int_sequences(self):
        assert hash_string(HP235, [0, 1, 1, 0, 0]) == Digest(0, 1, 4, 3)

    def test_rejects_other_characters(self):
        with pytest.raises(ValueError):
            hash_string(HP235, "01x")

    @given(bit_lists)
    @settings(max_examples=60)
    def test_matches_exact_product_below_the_modulus(self, bits):
        # With p far above every entry, hashing is the plain word product.
        hp = HashParams(2, 3, BIG_PRIME)
        word = "".join("L" if b == 0 else "R" for b in bits[:16])
        m = word_to_matrix(word, MonoidParams(2, 3))
        d = hash_string(hp, bits[:16])
        assert (d.a, d.b, d.c, d.d) == (m.a, m.b, m.c, m.d)


class TestBitDecoders:
    def test_ascii01_skips_whitespace(self):
        assert bits_from_ascii01("0 1\n1\t0 ") == [0, 1, 1, 0]
        assert bits_from_ascii01("") == []

    def test_ascii01_rejects_other_characters(self):
        with pytest.raises(ValueError):
            bits_from_ascii01("0120")

    def test_bytes_msb_first(self):
        assert bits_from_bytes_msb(b"\xa5") == [1, 0, 1, 0, 0, 1, 0, 1]
        assert bits_from_bytes_msb(b"\x80\x01") == [1, 0, 0, 0, 0, 0, 0, 0,
                                                    0, 0, 0, 0, 0, 0, 0, 1]
        assert bits_from_bytes_msb(b"") == []


class TestSerialization:
    def test_one_byte_fields(self):
        assert serialize(Digest(0, 1, 4, 3), HP235) == b"\x00\x01\x04\x03"
        assert digest_hex(Digest(0, 1, 4, 3), HP235) == "00010403"

    def test_two_byte_fields(self):
        hp = HashParams(1, 1, 257)
        assert serialize(Digest(1, 0, 0, 1), hp) == bytes.fromhex("0001000000000001")

    def test_worked_example_hex(self):
        hp = HashParams(2, 3, 101)
        assert digest_hex(hash_string(hp, "01100"), hp) == "1906360d"

    def test_parse_validates_length_and_range(self):
        with pytest.raises(ValueError):
            parse(b"\x00\x01\x04", HP235)
        with pytest.raises(ValueError):
            parse(b"\x00\x01\x04\x07", HP235)

    @given(st.lists(st.integers(0, 4), min_size=4, max_size=4))
    def test_round_trip_small_modulus(self, fields):
        d = Digest(*fields)
        assert parse(serialize(d, HP235), HP235) == d

    @given(st.lists(st.integers(0, BIG_PRIME - 1), min_size=4, max_size=4))
    def test_round_trip_large_modulus(self, fields):
        hp = HashParams(2, 3, BIG_PRIME)
        data = serialize(Digest(*fields), hp)
        assert len(data) == 4 * hp.byte_width
        assert parse(data, hp) == Digest(*fields)


class TestBoundN0:
    def test_known_values(self):
        assert bound_n0(HP235) == 1
        assert bound_n0(HashParams(2, 3, 101)) == 4
        assert bound_n0(HashParams(1, 1, 2)) == 1

    def test_agrees_with_collision_horizon(self):
        for u, v, p in [(1, 1, 101), (2, 3, 257), (3, 2, 1009)]:
            assert bound_n0(HashParams(u, v, p)) == \
                collision_horizon(MonoidParams(u, v), p)


class TestExhaustiveCollisionCheck:
    def test_no_collision_inside_the_guarantee(self):
        assert exhaustive_collision_check(HashParams(2, 3, 101), 4) is None
        assert exhaustive_collision_check(HP235, 1) is None

    def test_first_collision_for_tiny_modulus(self):
        # Shortlex-first pair: the repeated-0 word of length 5 returns to
        # the identity mod 5.
        assert exhaustive_collision_check(HP235, 5) == ("", "00000")

    def test_first_collision_mod_two(self):
        assert exhaustive_collision_check(HashParams(1, 1, 2), 2) == ("", "00")

    def test_collision_is_real(self):
        first, second = exhaustive_collision_check(HP235, 5)
        assert first != second
        assert hash_string(HP235, first) == hash_string(HP235, second)

    def test_limit_gate(self):
        with pytest.raises(LimitExceeded):
            exhaustive_collision_check(HP235, 10, limit=16)

    def test_env_var_limit(self, monkeypatch):
        monkeypatch.setenv("MATMONOID_ENUM_LIMIT", "16")
        with pytest.raises(LimitExceeded):
            exhaustive_collision_check(HP235, 10)
        monkeypatch.setenv("MATMONOID_ENUM_LIMIT", "notanumber")
        with pytest.raises(LimitExceeded):
            exhaustive_collision_check(HP235, 1)

    def test_rejects_negative_max_len(self):
        with pytest.raises(InvalidParams):
            exhaustive_collision_check(HP235, -1)
