"""Exact maximal entries by depth, witness words, and closed forms.

The maximal entry over all depth-n products of the two shears is an
integer sequence with a three-term linear recurrence behind it. This
module evaluates it exactly through Lucas sequences for x^2 - Px + 1
with P = 2+uv (O(log n) big-integer steps), builds explicit witness
words attaining the maximum, runs the left-column dynamical system, and
cross-checks everything against the radical closed forms in 120-bit
float arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass

import mpmath

from .errors import InvalidParams, WitnessMismatch
from .matrix import Mat2, MonoidParams, mu, word_to_matrix

__all__ = [
    "AlphaGammaPair",
    "ClosedFormParams",
    "LucasPair",
    "Witness",
    "alpha_gamma",
    "closed_form_float",
    "closed_form_params",
    "collision_horizon",
    "fseq",
    "lucas",
    "mu_depth",
    "witness",
]

# Mantissa bits for all float cross-checks; ~36 significant decimal
# digits, comfortably beyond the 1e-9 relative tolerances used in tests.
FLOAT_PRECISION_BITS = 120


@dataclass(frozen=True, slots=True)
class LucasPair:
    """(U_m, V_m) for x^2 - Px + 1: U_0=0, U_1=1, V_0=2, V_1=P.

    Both satisfy x_{m+1} = P*x_m - x_{m-1}; the pair is tied together by
    V_m^2 - (P^2-4)*U_m^2 = 4.
    """

    P: int
    m: int
    U: int
    V: int


def lucas(P: int, m: int) -> LucasPair:
    """Exact (U_m, V_m) in O(log m) steps by doubling.

    Uses U_{2k} = U_k*V_k, V_{2k} = V_k^2 - 2, and the half-sum step-up
    U_{k+1} = (P*U_k + V_k)/2, V_{k+1} = ((P^2-4)*U_k + P*V_k)/2. The
    half-sums are exact: U_k and V_k are congruent mod 2 when P is odd
    and V_k is always even when P is even.
    """
    if not isinstance(P, int) or P < 3:
        raise InvalidParams(f"P must be an integer >= 3, got {P!r}")
    if not isinstance(m, int) or m < 0:
        raise InvalidParams(f"m must be a nonnegative integer, got {m!r}")
    U, V = 0, 2
    D = P * P - 4
    for k in range(m.bit_length() - 1, -1, -1):
        U, V = U * V, V * V - 2
        if m >> k & 1:
            U, V = (P * U + V) // 2, (D * U + P * V) // 2
    return LucasPair(P, m, U, V)


@dataclass(frozen=True, slots=True)
class AlphaGammaPair:
    """State of the left-column dynamical system after n steps.

    gamma >= alpha holds for every n >= 1 (and at n = 0 whenever the
    start column already satisfies it, as every column of the form
    (a, ua+c) does).
    """

    n: int
    alpha: int
    gamma: int


def alpha_gamma(params: MonoidParams, a: int, c: int, n: int) -> AlphaGammaPair:
    """Iterate the map (alpha, gamma) -> (alpha + v*gamma, u*alpha + (1+uv)*gamma).

    The map is left-multiplication of the column (alpha, gamma) by
    L_u*R_v, so the result is the left column of (L_u R_v)^n applied to a
    matrix with left column (a, c). Starting from (1, u) - the left
    column of L_u - gamma_n is the (2,1) entry of (L_u R_v)^n L_u.
    """
    if not isinstance(a, int) or not isinstance(c, int) or a < 0 or c < 0:
        raise InvalidParams(f"start column must be nonnegative integers, got ({a!r}, {c!r})")
    if a == 0 and c == 0:
        raise InvalidParams("start column must not be (0, 0)")
    if not isinstance(n, int) or n < 0:
        raise InvalidParams(f"n must be a nonnegative integer, got {n!r}")
    u, v = params.u, params.v
    alpha, gamma = a, c
    for _ in range(n):
        alpha, gamma = alpha + v * gamma, u * alpha + (1 + u * v) * gamma
    return AlphaGammaPair(n, alpha, gamma)


@dataclass(frozen=True, slots=True)
class ClosedFormParams:
    """Eigen data of the left-column map [[1, v], [u, 1+uv]], at 120 bits.

    q_plus/q_minus = 2+uv +- sqrt(uv(4+uv)) are twice the eigenvalues
    (q_plus*q_minus = 4, lambda1*lambda2 = 1); p_plus/p_minus =
    +-v*sqrt(u) + sqrt(v(4+uv)) encode the eigenvector slopes; c1, c2
    solve the start column (a, c) = c1*vec1 + c2*vec2, giving

        gamma_n = c1*lambda1^n + c2*lambda2^n
        alpha_n = (c1*lambda1^n*p_minus - c2*lambda2^n*p_plus) / (2*sqrt(u))
    """

    p_plus: mpmath.mpf
    p_minus: mpmath.mpf
    q_plus: mpmath.mpf
    q_minus: mpmath.mpf
    lambda1: mpmath.mpf
    lambda2: mpmath.mpf
    c1: mpmath.mpf
    c2: mpmath.mpf
    u: int

    def alpha_float(self, n: int) -> mpmath.mpf:
        with mpmath.workprec(FLOAT_PRECISION_BITS):
            return (
                self.c1 * self.lambda1**n * self.p_minus
                - self.c2 * self.lambda2**n * self.p_plus
            ) / (2 * mpmath.sqrt(self.u))

    def gamma_float(self, n: int) -> mpmath.mpf:
        with mpmath.workprec(FLOAT_PRECISION_BITS):
            return self.c1 * self.lambda1**n + self.c2 * self.lambda2**n


def closed_form_params(params: MonoidParams, a: int, c: int) -> ClosedFormParams:
    """Eigen data for the start column (a, c), same convention as alpha_gamma."""
    if a < 0 or c < 0 or (a == 0 and c == 0):
        raise InvalidParams(f"start column must be nonnegative and nonzero, got ({a!r}, {c!r})")
    u, v = params.u, params.v
    with mpmath.workprec(FLOAT_PRECISION_BITS):
        uv = mpmath.mpf(u * v)
        disc = mpmath.sqrt(uv * (4 + uv))
        q_plus, q_minus = 2 + uv + disc, 2 + uv - disc
        root_u = mpmath.sqrt(u)
        edge = mpmath.sqrt(v * (4 + uv))
        p_plus, p_minus = v * root_u + edge, -v * root_u + edge
        # Solve (a, c) = c1*(p_minus/(2*sqrt(u)), 1) + c2*(-p_plus/(2*sqrt(u)), 1);
        # the denominator p_plus + p_minus equals 2*sqrt(v(4+uv)).
        c1 = (2 * root_u * a + p_plus * c) / (p_plus + p_minus)
        c2 = (p_minus * c - 2 * root_u * a) / (p_plus + p_minus)
        return ClosedFormParams(
            p_plus=p_plus,
            p_minus=p_minus,
            q_plus=q_plus,
            q_minus=q_minus,
            lambda1=q_plus / 2,
            lambda2=q_minus / 2,
            c1=c1,
            c2=c2,
            u=u,
        )


def closed_form_float(params: MonoidParams, n: int, depth_parity: str) -> mpmath.mpf:
    """Radical closed form for the maximal entry, in 120-bit floats.

    depth_parity "odd" evaluates the depth-(2n+1) formula

        sqrt(t) * (q+^{n+1} - q-^{n+1}) / (2^{n+1} * sqrt(s(4+uv)))

    and "even" the depth-(2n+2) formula, which branches on s = min(u,v):

        (p+ q+^{n+1} + p- q-^{n+1}) / (2^{n+2} sqrt(s(4+uv)))    s > 1
        sqrt(t) ((sqrt(t) p- + 2) q+^{n+1}
                 + (sqrt(t) p+ - 2) q-^{n+1}) / (2^{n+2} sqrt(4+uv))    s = 1

    with q+- = 2+uv +- sqrt(uv(4+uv)) and p+- = +-s*sqrt(t) + sqrt(s(4+uv)).
    Float cross-check only; mu_depth is the exact source of truth.
    """
    if not isinstance(n, int) or n < 0:
        raise InvalidParams(f"n must be a nonnegative integer, got {n!r}")
    if depth_parity not in ("odd", "even"):
        raise InvalidParams(f"depth_parity must be 'odd' or 'even', got {depth_parity!r}")
    s, t = params.s, params.t
    with mpmath.workprec(FLOAT_PRECISION_BITS):
        uv = mpmath.mpf(s * t)
        disc = mpmath.sqrt(uv * (4 + uv))
        q_plus, q_minus = 2 + uv + disc, 2 + uv - disc
        root_t = mpmath.sqrt(t)
        if depth_parity == "odd":
            return (
                root_t
                * (q_plus ** (n + 1) - q_minus ** (n + 1))
                / (2 ** (n + 1) * mpmath.sqrt(s * (4 + uv)))
            )
        edge = mpmath.sqrt(s * (4 + uv))
        p_plus, p_minus = s * root_t + edge, -s * root_t + edge
        if s > 1:
            return (
                p_plus * q_plus ** (n + 1) + p_minus * q_minus ** (n + 1)
            ) / (2 ** (n + 2) * edge)
        return (
            root_t
            * (
                (root_t * p_minus + 2) * q_plus ** (n + 1)
                + (root_t * p_plus - 2) * q_minus ** (n + 1)
            )
            / (2 ** (n + 2) * mpmath.sqrt(4 + uv))
        )


def mu_depth(params: MonoidParams, n: int) -> int:
    """Exact maximal entry over all depth-n products, in O(log n) steps.

    With P = 2+uv, s = min(u,v), t = max(u,v):

        n = 0:       1
        n = 2k+1:    t * U_{k+1}
        n = 2k+2:    (uv*U_{k+1} + V_{k+1}) / 2                 s > 1
                     t * ((2-t)*U_{k+1} + V_{k+1}) / 2          s = 1

    Both half-sums are exact (the numerators are even mod-2 for every P)
    and the s=1 numerator is positive because V_m^2 = (t^2+4t)U_m^2 + 4
    exceeds ((t-2)U_m)^2.
    """
    if not isinstance(n, int) or n < 0:
        raise InvalidParams(f"depth must be a nonnegative integer, got {n!r}")
    if n == 0:
        return 1
    s, t = params.s, params.t
    P = 2 + s * t
    if n % 2 == 1:
        return t * lucas(P, (n + 1) // 2).U
    pair = lucas(P, n // 2)
    if s > 1:
        return (s * t * pair.U + pair.V) // 2
    return t * (((2 - t) * pair.U + pair.V) // 2)


@dataclass(frozen=True, slots=True)
class Witness:
    """A depth-n word whose matrix attains the depth-n maximal entry."""

    word: str
    matrix: Mat2
    position: tuple[int, int]
    value: int


def witness(params: MonoidParams, n: int) -> Witness:
    """Construct a maximal word of depth n >= 1 and verify it attains mu_depth.

    Odd n = 2k+1 uses the alternating word ending on the larger shear:
    (LR)^k L at entry (2,1) when u >= v, else (RL)^k R at (1,2). Even
    n = 2k+2 uses (RL)^{k+1} with the max entry located by scanning when
    min(u,v) > 1, and the doubled-head word L(LR)^k L at (2,1) (or its
    mirror R(RL)^k R at (1,2)) when min(u,v) = 1. The constructed value
    is always checked against mu_depth; a mismatch raises rather than
    returning a wrong witness.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidParams(f"witness depth must be a positive integer, got {n!r}")
    u, v = params.u, params.v
    position: tuple[int, int] | None
    if n % 2 == 1:
        k = (n - 1) // 2
        if u >= v:
            word, position = "LR" * k + "L", (2, 1)
        else:
            word, position = "RL" * k + "R", (1, 2)
    else:
        k = (n - 2) // 2
        if params.s > 1:
            word, position = "RL" * (k + 1), None
        elif u >= v:
            word, position = "L" + "LR" * k + "L", (2, 1)
        else:
            word, position = "R" + "RL" * k + "R", (1, 2)
    m = word_to_matrix(word, params)
    expected = mu_depth(params, n)
    if position is None:
        entries = ((m.a, (1, 1)), (m.b, (1, 2)), (m.c, (2, 1)), (m.d, (2, 2)))
        value, position = max(entries, key=lambda e: e[0])
    else:
        value = m.rows()[position[0] - 1][position[1] - 1]
    if value != expected or mu(m) != expected:
        raise WitnessMismatch(
            f"word {word} for u={u}, v={v}, depth {n}: entry {position} is "
            f"{value}, matrix max is {mu(m)}, but the depth maximum is {expected}"
        )
    return Witness(word, m, position, value)


def fseq(params: MonoidParams, n: int) -> int:
    """Two-periodic Fibonacci-like sequence: F_0=0, F_1=1, and
    F_m = u*F_{m-1} + F_{m-2} for odd m, v*F_{m-1} + F_{m-2} for even m.

    With (u, v) = (1, 1) this is the Fibonacci sequence. Oriented as
    (min(u,v), max(u,v)), the value at n+1 equals mu_depth at n whenever
    u, v > 1 or u = v = 1.
    """
    if not isinstance(n, int) or n < 0:
        raise InvalidParams(f"index must be a nonnegative integer, got {n!r}")
    if n == 0:
        return 0
    u, v = params.u, params.v
    prev, cur = 0, 1
    for m in range(2, n + 1):
        prev, cur = cur, (u if m % 2 else v) * cur + prev
    return cur


def collision_horizon(params: MonoidParams, bound: int) -> int:
    """Largest n with mu_depth(params, n) < bound.

    Exists because mu_depth(0) = 1 < bound and the sequence is unbounded;
    found by exponential then binary search on the (strictly, from n=1)
    increasing sequence. O(log^2) big-integer work.
    """
    if not isinstance(bound, int) or bound < 2:
        raise InvalidParams(f"bound must be an integer >= 2, got {bound!r}")
    lo, hi = 0, 1
    while mu_depth(params, hi) < bound:
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mu_depth(params, mid) < bound:
            lo = mid
        else:
            hi = mid
    return lo
