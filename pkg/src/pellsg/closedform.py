"""Closed-form p-invariants for the three Pell generator families.

Each theoremN_* function evaluates one closed-form expression:

    theorem1_frobenius / theorem2_genus / theorem2_sylvester
        even family (P_{2i}, P_{2i+2}, P_{2i+2k+1}),
        guaranteed for p < u (P_{2k+1} + 1) / P_{2i} - 1  (strict rational bound)
    theorem3_frobenius / theorem5_genus
        odd-odd family (k odd, 3 <= k <= 2i-1), guaranteed for p <= (q1 - 1)/u
        where q1 is the largest integer == 1 (mod u) with q1 <= P_{2i+1}/P_k
    theorem4_frobenius / theorem6_genus
        odd-even family (k even, 4 <= k <= 2i), guaranteed for p <= q
        where q = floor(u P_{2i+1} / P_k)

The checked evaluators raise OutOfValidityRange outside the guaranteed level
range; the *_unchecked twins evaluate the same expression anywhere (useful for
demonstrating where a formula breaks down against the engine).  The guaranteed
ranges are conservative: the true first failure can be later.

The odd-family Frobenius formulas pick the larger of two "corner" candidates;
theorem3/4_corner_values expose both candidates for diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IndexConstraintViolation, NonIntegerResult, OutOfValidityRange
from .pellseq import Family, FamilyInstance, pell

# ── index validation ─────────────────────────────────────────────────────────


def _check_even(u: int, i: int, k: int) -> None:
    if u < 2:
        raise IndexConstraintViolation(f"even family needs u >= 2, got u={u}")
    if i < 2 or k < i:
        raise IndexConstraintViolation(f"even family needs 2 <= i <= k, got i={i}, k={k}")


def _check_odd(u: int, i: int, k: int, parity: int) -> None:
    kind = "odd-odd" if parity else "odd-even"
    if u < 2:
        raise IndexConstraintViolation(f"{kind} family needs u >= 2, got u={u}")
    if i < 2:
        raise IndexConstraintViolation(f"{kind} family needs i >= 2, got i={i}")
    if k % 2 != parity:
        raise IndexConstraintViolation(f"{kind} family needs k % 2 == {parity}, got k={k}")
    if k < 3:
        raise IndexConstraintViolation(f"odd families need k >= 3, got k={k}")
    if k >= 2 * i + 1:
        raise IndexConstraintViolation(
            f"k={k} >= 2i+1={2 * i + 1}: degenerate instance, closed forms do not apply"
        )


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise NonIntegerResult(f"{what} evaluated to non-integer {x}")
    return int(x)


# ── even family ──────────────────────────────────────────────────────────────


def even_p_limit(u: int, i: int, k: int) -> Fraction:
    """Strict validity bound for theorems 1-2: valid iff p < this value."""
    _check_even(u, i, k)
    return Fraction(u * (pell(u, 2 * k + 1) + 1), pell(u, 2 * i)) - 1


def _check_even_p(u: int, i: int, k: int, p: int) -> None:
    limit = even_p_limit(u, i, k)
    if p < 0 or Fraction(p) >= limit:
        raise OutOfValidityRange(
            f"even family (u={u}, i={i}, k={k}) guarantees levels 0 <= p < {limit}, got p={p}"
        )


def theorem1_frobenius_unchecked(u: int, i: int, k: int, p: int) -> int:
    _check_even(u, i, k)
    a, b, c = pell(u, 2 * i), pell(u, 2 * i + 2), pell(u, 2 * i + 2 * k + 1)
    return ((p + 1) * a // u - 1) * b + (u - 1) * c - a


def theorem1_frobenius(u: int, i: int, k: int, p: int) -> int:
    """p-Frobenius number of (P_{2i}, P_{2i+2}, P_{2i+2k+1})."""
    _check_even_p(u, i, k, p)
    return theorem1_frobenius_unchecked(u, i, k, p)


def theorem2_genus_unchecked(u: int, i: int, k: int, p: int) -> int:
    _check_even(u, i, k)
    a, b, c = pell(u, 2 * i), pell(u, 2 * i + 2), pell(u, 2 * i + 2 * k + 1)
    val = Fraction((2 * p + 1) * a * b, 2 * u) - Fraction(a + b - (u - 1) * c - 1, 2)
    return _as_int(val, "genus")


def theorem2_genus(u: int, i: int, k: int, p: int) -> int:
    """p-genus of (P_{2i}, P_{2i+2}, P_{2i+2k+1})."""
    _check_even_p(u, i, k, p)
    return theorem2_genus_unchecked(u, i, k, p)


def theorem2_sylvester_unchecked(u: int, i: int, k: int, p: int) -> int:
    _check_even(u, i, k)
    a, b, c = pell(u, 2 * i), pell(u, 2 * i + 2), pell(u, 2 * i + 2 * k + 1)
    ab = a * b
    m = a + b - (u - 1) * c  # recurring combination
    val = (
        Fraction(p * p * ab * ab, 2 * u * u)
        + Fraction(p * ab, 2 * u * u) * (ab - u * m)
        + Fraction(
            ab * (2 * ab - 3 * u * (m - u))
            + u * u * (a * a + b * b - 1 - (u - 1) * c * (3 * a + 3 * b - (2 * u - 1) * c)),
            12 * u * u,
        )
    )
    return _as_int(val, "sylvester sum")


def theorem2_sylvester(u: int, i: int, k: int, p: int) -> int:
    """p-Sylvester sum of (P_{2i}, P_{2i+2}, P_{2i+2k+1})."""
    _check_even_p(u, i, k, p)
    return theorem2_sylvester_unchecked(u, i, k, p)


# ── odd-odd family (k odd) ───────────────────────────────────────────────────


@dataclass(frozen=True)
class OddOddParams:
    """Division data P_{2i+1} = q1 * P_k + u * r1 with q1 == 1 (mod u) maximal."""

    q1: int
    r1: int


def odd_odd_params(u: int, i: int, k: int) -> OddOddParams:
    _check_odd(u, i, k, 1)
    pk, p2i1 = pell(u, k), pell(u, 2 * i + 1)
    f = p2i1 // pk
    q1 = f - (f - 1) % u  # largest value <= floor(P_{2i+1}/P_k) that is == 1 mod u
    rem = p2i1 - q1 * pk
    if rem % u:
        raise NonIntegerResult(f"residual {rem} not divisible by u={u}")
    r1 = rem // u
    return OddOddParams(q1, r1)


def theorem3_p_max(u: int, i: int, k: int) -> int:
    """Inclusive guaranteed level cap (q1 - 1) / u for theorems 3 and 5."""
    return (odd_odd_params(u, i, k).q1 - 1) // u


def _check_odd_odd_p(u: int, i: int, k: int, p: int) -> None:
    cap = theorem3_p_max(u, i, k)
    if p < 0 or p > cap:
        raise OutOfValidityRange(
            f"odd-odd family (u={u}, i={i}, k={k}) guarantees levels 0 <= p <= {cap}, got p={p}"
        )


def theorem3_condition(u: int, i: int, k: int) -> bool:
    """True iff the first (r1-based) corner dominates."""
    par = odd_odd_params(u, i, k)
    lhs = u * par.r1 * pell(u, 2 * i)
    rhs = (pell(u, k - 2) - (u * u + 1) * par.r1) * pell(u, 2 * i + 1)
    return lhs > rhs


def theorem3_corner_values(u: int, i: int, k: int, p: int) -> tuple[int, int]:
    """Both corner candidates (first, second) for the odd-odd p-Frobenius number."""
    par = odd_odd_params(u, i, k)
    b, c = pell(u, 2 * i + 3), pell(u, 2 * i + k + 1)
    a = pell(u, 2 * i + 1)
    first = (par.r1 - 1) * b + (par.q1 + (p + 1) * u - 1) * c - a
    second = (pell(u, k) - 1) * b + (par.q1 + p * u - 1) * c - a
    return first, second


def theorem3_frobenius_unchecked(u: int, i: int, k: int, p: int) -> int:
    first, second = theorem3_corner_values(u, i, k, p)
    return first if theorem3_condition(u, i, k) else second


def theorem3_frobenius(u: int, i: int, k: int, p: int) -> int:
    """p-Frobenius number of (P_{2i+1}, P_{2i+3}, P_{2i+k+1}), k odd."""
    _check_odd_odd_p(u, i, k, p)
    return theorem3_frobenius_unchecked(u, i, k, p)


def theorem5_genus_unchecked(u: int, i: int, k: int, p: int) -> int:
    par = odd_odd_params(u, i, k)
    pk, pk2 = pell(u, k), pell(u, k - 2)
    a, b, c = pell(u, 2 * i + 1), pell(u, 2 * i + 3), pell(u, 2 * i + k + 1)
    val = (
        -Fraction(p * p, 2) * u * pk * pk2
        + Fraction(p, 2) * pk * (2 * b - u * pk2)
        + Fraction(
            (a - u) * (b - u) + u * (u - 1) * (c - 1) - par.q1 * pk2 * (2 * a - (par.q1 + u) * pk),
            2 * u,
        )
    )
    return _as_int(val, "genus")


def theorem5_genus(u: int, i: int, k: int, p: int) -> int:
    """p-genus of (P_{2i+1}, P_{2i+3}, P_{2i+k+1}), k odd."""
    _check_odd_odd_p(u, i, k, p)
    return theorem5_genus_unchecked(u, i, k, p)


# ── odd-even family (k even) ─────────────────────────────────────────────────


@dataclass(frozen=True)
class OddEvenParams:
    """Division data P_{2i+1} = q * (P_k / u) + r with 0 <= r < P_k / u."""

    q: int
    r: int


def odd_even_params(u: int, i: int, k: int) -> OddEvenParams:
    _check_odd(u, i, k, 0)
    pk_u = pell(u, k) // u  # k even, so u | P_k
    q, r = divmod(pell(u, 2 * i + 1), pk_u)
    return OddEvenParams(q, r)


def theorem4_p_max(u: int, i: int, k: int) -> int:
    """Inclusive guaranteed level cap q for theorems 4 and 6."""
    return odd_even_params(u, i, k).q


def _check_odd_even_p(u: int, i: int, k: int, p: int) -> None:
    cap = theorem4_p_max(u, i, k)
    if p < 0 or p > cap:
        raise OutOfValidityRange(
            f"odd-even family (u={u}, i={i}, k={k}) guarantees levels 0 <= p <= {cap}, got p={p}"
        )


def theorem4_condition(u: int, i: int, k: int) -> bool:
    """True iff the first (r-based) corner dominates."""
    par = odd_even_params(u, i, k)
    lhs = u * par.r * pell(u, 2 * i)
    rhs = (pell(u, k - 2) // u - (u * u + 1) * par.r) * pell(u, 2 * i + 1)
    return lhs > rhs


def theorem4_corner_values(u: int, i: int, k: int, p: int) -> tuple[int, int]:
    """Both corner candidates (first, second) for the odd-even p-Frobenius number."""
    par = odd_even_params(u, i, k)
    b, c = pell(u, 2 * i + 3), pell(u, 2 * i + k + 1)
    a = pell(u, 2 * i + 1)
    first = (par.r - 1) * b + (par.q + p) * c - a
    second = (pell(u, k) // u - 1) * b + (par.q + p - 1) * c - a
    return first, second


def theorem4_frobenius_unchecked(u: int, i: int, k: int, p: int) -> int:
    first, second = theorem4_corner_values(u, i, k, p)
    return first if theorem4_condition(u, i, k) else second


def theorem4_frobenius(u: int, i: int, k: int, p: int) -> int:
    """p-Frobenius number of (P_{2i+1}, P_{2i+3}, P_{2i+k+1}), k even."""
    _check_odd_even_p(u, i, k, p)
    return theorem4_frobenius_unchecked(u, i, k, p)


def theorem6_genus_unchecked(u: int, i: int, k: int, p: int) -> int:
    par = odd_even_params(u, i, k)
    pk, pk2 = pell(u, k), pell(u, k - 2)
    a, b = pell(u, 2 * i + 1), pell(u, 2 * i + 3)
    u2 = u * u
    val = (
        -Fraction(p * p * pk * pk2, 2 * u2)
        + Fraction(p * pk, 2 * u2) * (2 * u * b - pk2)
        + Fraction(u2 * (a - 1) * (b - 1) - par.q * pk2 * (2 * u * a - (par.q + 1) * pk), 2 * u2)
    )
    return _as_int(val, "genus")


def theorem6_genus(u: int, i: int, k: int, p: int) -> int:
    """p-genus of (P_{2i+1}, P_{2i+3}, P_{2i+k+1}), k even."""
    _check_odd_even_p(u, i, k, p)
    return theorem6_genus_unchecked(u, i, k, p)


# ── degenerate odd instances ─────────────────────────────────────────────────


def two_generator_reduction(u: int, i: int, k: int) -> int:
    """Frobenius number (p = 0) of a degenerate odd instance (k >= 2i+1).

    The third generator is then representable by the first two, so the
    semigroup is the classical two-generator one:  g = a b - a - b.
    """
    if u < 2 or i < 2:
        raise IndexConstraintViolation(f"need u >= 2 and i >= 2, got u={u}, i={i}")
    if k < 2 * i + 1:
        raise IndexConstraintViolation(
            f"two-generator reduction needs k >= 2i+1={2 * i + 1}, got k={k}"
        )
    a, b = pell(u, 2 * i + 1), pell(u, 2 * i + 3)
    return a * b - a - b


# ── dispatch for family instances ────────────────────────────────────────────

QUANTITIES = ("frobenius", "genus", "sylvester_sum")


def formula_stats(inst: FamilyInstance, p: int, *, force: bool = False) -> dict[str, int]:
    """Evaluate every closed form available for this instance at level p.

    Returns a dict with keys among QUANTITIES: all three for the even family,
    frobenius + genus for regular odd instances, frobenius only (p = 0) for
    degenerate ones.  With force=True, validity caps are skipped and the bare
    expressions are evaluated (degenerate instances still require p = 0).
    """
    u, i, k = inst.u, inst.i, inst.k
    if inst.degenerate:
        if p != 0:
            raise OutOfValidityRange(
                f"degenerate instance (k={k} >= 2i+1): closed form exists only at p=0"
            )
        return {"frobenius": two_generator_reduction(u, i, k)}
    if inst.family is Family.EVEN:
        if force:
            return {
                "frobenius": theorem1_frobenius_unchecked(u, i, k, p),
                "genus": theorem2_genus_unchecked(u, i, k, p),
                "sylvester_sum": theorem2_sylvester_unchecked(u, i, k, p),
            }
        return {
            "frobenius": theorem1_frobenius(u, i, k, p),
            "genus": theorem2_genus(u, i, k, p),
            "sylvester_sum": theorem2_sylvester(u, i, k, p),
        }
    if inst.family is Family.ODD_ODD:
        if force:
            return {
                "frobenius": theorem3_frobenius_unchecked(u, i, k, p),
                "genus": theorem5_genus_unchecked(u, i, k, p),
            }
        return {"frobenius": theorem3_frobenius(u, i, k, p), "genus": theorem5_genus(u, i, k, p)}
    if force:
        return {
            "frobenius": theorem4_frobenius_unchecked(u, i, k, p),
            "genus": theorem6_genus_unchecked(u, i, k, p),
        }
    return {"frobenius": theorem4_frobenius(u, i, k, p), "genus": theorem6_genus(u, i, k, p)}
