"""Matrix product hash over SL2(F_p) with a provable collision horizon.

A bit string maps to a matrix product (bit 0 applies the lower shear,
bit 1 the upper shear) reduced mod a prime p. Because the unreduced
products form a free monoid and their entries stay below p up to a
computable depth n0, distinct strings of length <= n0 can never collide;
the horizon comes straight from the exact maximal-entry sequence.
"""
from __future__ import annotations

import os
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidParams, LimitExceeded
from .extremal import collision_horizon
from .matrix import MonoidParams

__all__ = [
    "DEFAULT_COLLISION_LIMIT",
    "Digest",
    "HashParams",
    "HashState",
    "bits_from_ascii01",
    "bits_from_bytes_msb",
    "bound_n0",
    "digest_hex",
    "exhaustive_collision_check",
    "hash_string",
    "init",
    "is_probable_prime",
    "parse",
    "serialize",
    "update_bit",
]

# Exhaustively enumerating all strings of length <= m visits 2^{m+1}-1
# states; refuse past this many rather than running away. Overridable via
# the same environment knob as row enumeration.
DEFAULT_COLLISION_LIMIT = 2**22
ENUM_LIMIT_ENV = "MATMONOID_ENUM_LIMIT"

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

# Miller-Rabin with these fixed bases is a proven deterministic primality
# test for all n below 3317044064679887385961981 (~3.3e24).
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_DETERMINISTIC_LIMIT = 3317044064679887385961981
_PROBABILISTIC_ROUNDS = 64


def _miller_rabin_witness(n: int, d: int, r: int, a: int) -> bool:
    """True if a witnesses that n is composite (n-1 = d * 2^r, d odd)."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Deterministic (fixed base set) below ~3.3e24; above that, 64 rounds
    of bases drawn from a generator seeded with n, so the verdict is
    still reproducible.
    """
    if not isinstance(n, int):
        raise InvalidParams(f"primality test needs an integer, got {n!r}")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    if n < _DETERMINISTIC_LIMIT:
        bases = _DETERMINISTIC_BASES
    else:
        rng = random.Random(n)
        bases = tuple(rng.randrange(2, n - 1) for _ in range(_PROBABILISTIC_ROUNDS))
    return not any(_miller_rabin_witness(n, d, r, a % n) for a in bases)


@dataclass(frozen=True, slots=True)
class HashParams:
    """Shear multipliers u, v and the prime modulus p."""

    u: int
    v: int
    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.u, int) or self.u < 1:
            raise InvalidParams(f"u must be a positive integer, got {self.u!r}")
        if not isinstance(self.v, int) or self.v < 1:
            raise InvalidParams(f"v must be a positive integer, got {self.v!r}")
        if not isinstance(self.p, int) or self.p < 2:
            raise InvalidParams(f"p must be an integer >= 2, got {self.p!r}")
        if not is_probable_prime(self.p):
            raise InvalidParams(f"p must be prime, got {self.p}")

    @property
    def byte_width(self) -> int:
        """Bytes needed per residue: the byte length of p-1."""
        return ((self.p - 1).bit_length() + 7) // 8

    @property
    def monoid_params(self) -> MonoidParams:
        return MonoidParams(self.u, self.v)


@dataclass(frozen=True, slots=True)
class Digest:
    """The hash output: a matrix over F_p, row-major residues."""

    a: int
    b: int
    c: int
    d: int

    def to_json(self) -> list[list[str]]:
        return [[str(self.a), str(self.b)], [str(self.c), str(self.d)]]


class HashState:
    """Running product state; feed bits, then read the digest.

    Single-stream: sequential updates only. Distinct states are fully
    independent.
    """

    __slots__ = ("params", "a", "b", "c", "d", "bits_consumed")

    def __init__(self, params: HashParams) -> None:
        self.params = params
        p = params.p
        self.a, self.b, self.c, self.d = 1 % p, 0, 0, 1 % p
        self.bits_consumed = 0

    def update_bit(self, bit: int) -> "HashState":
        """Right-multiply the accumulator by the bit's shear, mod p."""
        p = self.params.p
        if bit == 0:
            self.a = (self.a + self.params.u * self.b) % p
            self.c = (self.c + self.params.u * self.d) % p
        elif bit == 1:
            self.b = (self.b + self.params.v * self.a) % p
            self.d = (self.d + self.params.v * self.c) % p
        else:
            raise ValueError(f"bit must be 0 or 1, got {bit!r}")
        self.bits_consumed += 1
        return self

    def update(self, bits: Iterable[int]) -> "HashState":
        for bit in bits:
            self.update_bit(bit)
        return self

    def digest(self) -> Digest:
        return Digest(self.a, self.b, self.c, self.d)

    def copy(self) -> "HashState":
        other = HashState.__new__(HashState)
        other.params = self.params
        other.a, other.b, other.c, other.d = self.a, self.b, self.c, self.d
        other.bits_consumed = self.bits_consumed
        return other


def init(params: HashParams) -> HashState:
    """Fresh state: the identity matrix, zero bits consumed."""
    return HashState(params)


def update_bit(state: HashState, bit: int) -> HashState:
    """Functional spelling of HashState.update_bit."""
    return state.update_bit(bit)


def _as_bits(bits: Iterable[int] | str) -> Iterator[int]:
    if isinstance(bits, str):
        for ch in bits:
            if ch == "0":
                yield 0
            elif ch == "1":
                yield 1
            else:
                raise ValueError(f"bit strings may only contain '0'/'1', got {ch!r}")
    else:
        yield from bits


def hash_string(params: HashParams, bits: Iterable[int] | str) -> Digest:
    """One-shot hash of a bit sequence ('0'/'1' string or ints)."""
    return init(params).update(_as_bits(bits)).digest()


def bits_from_ascii01(text: str) -> list[int]:
    """Bits from literal '0'/'1' characters; whitespace is ignored."""
    bits = []
    for ch in text:
        if ch == "0":
            bits.append(0)
        elif ch == "1":
            bits.append(1)
        elif not ch.isspace():
            raise ValueError(
                f"invalid character {ch!r}; expected '0', '1', or whitespace"
            )
    return bits


def bits_from_bytes_msb(data: bytes) -> list[int]:
    """Bits of a byte string, most significant bit of each byte first."""
    return [byte >> k & 1 for byte in data for k in range(7, -1, -1)]


def serialize(d: Digest, params: HashParams) -> bytes:
    """Fixed-width big-endian encoding: 4 residues, byte_width bytes each.

    Injective for a fixed p, so digest comparison can be done on bytes.
    """
    w = params.byte_width
    return b"".join(x.to_bytes(w, "big") for x in (d.a, d.b, d.c, d.d))


def parse(data: bytes, params: HashParams) -> Digest:
    """Inverse of serialize; validates length and residue range."""
    w = params.byte_width
    if len(data) != 4 * w:
        raise ValueError(f"digest must be {4 * w} bytes for p={params.p}, got {len(data)}")
    fields = [int.from_bytes(data[i * w : (i + 1) * w], "big") for i in range(4)]
    for x in fields:
        if x >= params.p:
            raise ValueError(f"residue {x} out of range for p={params.p}")
    return Digest(*fields)


def digest_hex(d: Digest, params: HashParams) -> str:
    """Lowercase hex of the fixed-width serialization."""
    return serialize(d, params).hex()


def bound_n0(params: HashParams) -> int:
    """Largest n0 such that no two distinct strings of length <= n0 collide.

    Equal to the largest n with the exact depth-n maximal entry below p:
    up to there the unreduced integer products are distinct (free monoid)
    and unchanged by the mod-p reduction.
    """
    return collision_horizon(params.monoid_params, params.p)


def _enum_limit(limit: int | None) -> int:
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
    return DEFAULT_COLLISION_LIMIT


def exhaustive_collision_check(
    params: HashParams, max_len: int, limit: int | None = None
) -> tuple[str, str] | None:
    """Search all bit strings of length 0..max_len for a digest collision.

    Strings are visited in shortlex order (by length, then lexicographic);
    the first repeated digest is reported as (earlier string, current
    string), so the result is deterministic. Returns None if every one of
    the 2^{max_len+1}-1 strings hashes distinctly.
    """
    if not isinstance(max_len, int) or max_len < 0:
        raise InvalidParams(f"max_len must be a nonnegative integer, got {max_len!r}")
    cap = _enum_limit(limit)
    if 1 << (max_len + 1) > cap:
        raise LimitExceeded(
            f"max_len {max_len} needs {(1 << (max_len + 1)) - 1} states, "
            f"above the limit of {cap}"
        )
    u, v, p = params.u, params.v, params.p
    root = (1 % p, 0, 0, 1 % p)
    seen = {root: ""}
    level = [("", root)]
    for _ in range(max_len):
        nxt = []
        for s, (a, b, c, d) in level:
            child0 = (s + "0", ((a + u * b) % p, b, (c + u * d) % p, d))
            child1 = (s + "1", (a, (b + v * a) % p, c, (d + v * c) % p))
            for child in (child0, child1):
                word, key = child
                if key in seen:
                    return seen[key], word
                seen[key] = word
                nxt.append(child)
        level = nxt
    return None
