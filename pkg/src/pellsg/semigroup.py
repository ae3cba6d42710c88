"""General engine for p-numerical semigroup invariants.

For a coprime generator set A = (a_1 < ... < a_kappa), the level-p semigroup
S_p(A) consists of all n whose denumerant (number of nonnegative
representations n = sum x_t a_t) is at least p + 1.  The level-p Apery set
with respect to a_1 collects, for each residue j mod a_1, the smallest
m_j == j (mod a_1) with m_j in S_p(A) and m_j - a_1 not in S_p(A).

The engine rests on a tail-counting identity: the denumerant of n equals the
number of tail tuples (x_2, ..., x_kappa) whose value sum x_t a_t is <= n and
congruent to n mod a_1 (the a_1 coordinate absorbs the difference).  Hence

    m_j^(p) = (p+1)-th smallest tail value in residue class j,

counted with multiplicity.  The engine enumerates tail values below a growing
bound B and keeps the p+1 smallest per residue class; B doubles until every
class is saturated.  From the Apery set, the p-Frobenius number, p-genus and
p-Sylvester sum follow by exact rational summation formulas.
"""

from __future__ import annotations

import math
from bisect import insort
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BudgetExceeded, NonIntegerResult
from .pellseq import GeneratorSet

DEFAULT_BUDGET = 10**9  # tail tuples visited before the engine gives up

# ── denumerants & membership ─────────────────────────────────────────────────


def denumerant(A: GeneratorSet, n: int) -> int:
    """Number of nonnegative integer solutions of sum x_t a_t = n.

    Cost is O(n / a_kappa) for kappa = 3 (congruence solve per coefficient of
    the largest generator) and one nested level more per extra generator.
    """
    if n < 0:
        return 0
    gens = A.generators
    if len(gens) == 2:
        a1, a2 = gens
        return _count_pairs(a1, a2, n)
    if len(gens) == 3:
        a1, a2, a3 = gens
        return sum(_count_pairs(a1, a2, n - z * a3) for z in range(n // a3 + 1))
    # kappa > 3: peel off the largest generator
    head = GeneratorSet(gens[:-1]) if math.gcd(*gens[:-1]) == 1 else None
    if head is not None:
        return sum(denumerant(head, n - x * gens[-1]) for x in range(n // gens[-1] + 1))
    # head not coprime: fall back to explicit recursion on raw tuples
    return _denumerant_raw(gens, n)


def _count_pairs(a1: int, a2: int, n: int) -> int:
    """Solutions of x*a1 + y*a2 = n with x, y >= 0 (a1, a2 not nec. coprime)."""
    if n < 0:
        return 0
    g = math.gcd(a1, a2)
    if n % g:
        return 0
    m = a1 // g
    # y must satisfy y*a2 == n (mod a1), i.e. y == y0 (mod m)
    y0 = (n // g) * pow(a2 // g, -1, m) % m if m > 1 else 0
    ymax = n // a2
    if y0 > ymax:
        return 0
    return (ymax - y0) // m + 1


def _denumerant_raw(gens: tuple[int, ...], n: int) -> int:
    if len(gens) == 1:
        return 1 if n % gens[0] == 0 else 0
    if n < 0:
        return 0
    g = gens[-1]
    return sum(_denumerant_raw(gens[:-1], n - x * g) for x in range(n // g + 1))


def is_member(A: GeneratorSet, p: int, n: int) -> bool:
    """True iff n belongs to S_p(A), i.e. the denumerant of n is >= p+1."""
    if p < 0:
        raise ValueError(f"level p must be >= 0, got {p}")
    if n < 0:
        return False
    return denumerant(A, n) >= p + 1


# ── Apery sets ───────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class AperySet:
    """Level-p Apery set of A w.r.t. its smallest generator.

    elements[j] is the unique member == j (mod modulus); together they form a
    complete residue system mod modulus.
    """

    level: int
    modulus: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.elements) != self.modulus:
            raise ValueError(
                f"need exactly {self.modulus} elements, got {len(self.elements)}"
            )
        for j, m in enumerate(self.elements):
            if m % self.modulus != j:
                raise ValueError(f"element {m} at slot {j} is not == {j} (mod {self.modulus})")

    @property
    def max_element(self) -> int:
        return max(self.elements)


def apery_set(A: GeneratorSet, p: int, *, budget: int = DEFAULT_BUDGET) -> AperySet:
    """Compute the level-p Apery set of A by bounded tail enumeration."""
    return apery_levels(A, p, budget=budget)[p]


def apery_levels(A: GeneratorSet, pmax: int, *, budget: int = DEFAULT_BUDGET) -> list[AperySet]:
    """Compute Apery sets for every level 0..pmax from a single enumeration."""
    if pmax < 0:
        raise ValueError(f"pmax must be >= 0, got {pmax}")
    cols = _tail_columns(A, pmax + 1, budget)
    return [AperySet(p, A.a1, tuple(cols[p])) for p in range(pmax + 1)]


def _start_bound(A: GeneratorSet, need: int) -> int:
    """Initial enumeration bound: aim for ~need tail values per residue class.

    The number of tail tuples with value <= B is ~ B^(kappa-1) / ((kappa-1)!
    * a_2 ... a_kappa); solving for ~need * a1 such tuples gives the estimate.
    Doubling corrects any underestimate, so this only tunes the cost.
    """
    tail = A.generators[1:]
    if len(tail) == 1:
        return need * A.a1 * tail[0] + tail[0]
    prod = math.factorial(len(tail)) * need * A.a1
    for g in tail:
        prod *= g
    if len(tail) == 2:
        est = math.isqrt(prod)
    else:
        est = round(math.exp(math.log(prod) / len(tail)))  # log handles huge ints
    return max(est, tail[-1]) + tail[0]


def _tail_columns(A: GeneratorSet, need: int, budget: int) -> list[list[int]]:
    """Return cols[p][j] = (p+1)-th smallest tail value in class j, p < need."""
    a1 = A.a1
    gens = A.generators
    bound = _start_bound(A, need)
    visited = 0
    while True:
        if A.kappa == 3 and bound < 2**62:
            table, visited = _enumerate_np3(a1, gens[1], gens[2], bound, need, visited, budget)
        else:
            table, visited = _enumerate_py(a1, gens[1:], bound, need, visited, budget)
        if table is not None:
            return [[table[j][p] for j in range(a1)] for p in range(need)]
        bound *= 2


def _enumerate_np3(
    a1: int, a2: int, a3: int, bound: int, need: int, visited: int, budget: int
):
    """Vectorized kappa = 3 enumeration: per-z stripes, lexsort reduction.

    Returns (table, visited) where table[j] lists the `need` smallest tail
    values in class j, or (None, visited) if `bound` was too small.
    """
    keep_res = np.empty(0, dtype=np.int64)
    keep_val = np.empty(0, dtype=np.int64)
    pending: list[np.ndarray] = []
    pending_n = 0

    def reduce_pending() -> None:
        nonlocal keep_res, keep_val, pending, pending_n
        if not pending:
            return
        vals = np.concatenate([keep_val] + pending)
        res = np.concatenate([keep_res, np.remainder(np.concatenate(pending), a1)])
        order = np.lexsort((vals, res))
        res, vals = res[order], vals[order]
        # rank of each entry within its residue group
        idx = np.arange(len(res))
        starts = np.where(np.r_[True, res[1:] != res[:-1]], idx, 0)
        rank = idx - np.maximum.accumulate(starts)
        sel = rank < need
        keep_res, keep_val = res[sel], vals[sel]
        pending, pending_n = [], 0

    for z in range(bound // a3 + 1):
        base = z * a3
        ymax = (bound - base) // a2
        visited += ymax + 1
        if visited > budget:
            raise BudgetExceeded(visited, budget)
        pending.append(base + a2 * np.arange(ymax + 1, dtype=np.int64))
        pending_n += ymax + 1
        if pending_n >= 4_000_000:
            reduce_pending()
    reduce_pending()

    counts = np.bincount(keep_res, minlength=a1)
    if counts.min() < need:
        return None, visited
    # every class holds exactly `need` values, sorted by (residue, value)
    return keep_val.reshape(a1, need).tolist(), visited


def _enumerate_py(
    a1: int, tail_gens: tuple[int, ...], bound: int, need: int, visited: int, budget: int
):
    """Pure-Python enumeration for kappa != 3 or bounds beyond int64 range."""
    buckets: list[list[int]] = [[] for _ in range(a1)]
    counter = visited

    def visit(v: int) -> None:
        b = buckets[v % a1]
        if len(b) < need:
            insort(b, v)
        elif v < b[-1]:
            insort(b, v)
            b.pop()

    def rec(idx: int, base: int) -> None:
        nonlocal counter
        g = tail_gens[idx]
        if idx == len(tail_gens) - 1:
            n_here = (bound - base) // g + 1
            counter += n_here
            if counter > budget:
                raise BudgetExceeded(counter, budget)
            for v in range(base, bound + 1, g):
                visit(v)
        else:
            v = base
            while v <= bound:
                rec(idx + 1, v)
                v += g
    rec(0, 0)

    if any(len(b) < need for b in buckets):
        return None, counter
    return buckets, counter


# ── invariants from Apery sets ───────────────────────────────────────────────


@dataclass(frozen=True)
class SemigroupStats:
    """p-Frobenius number, p-genus and p-Sylvester sum at one level."""

    frobenius: int
    genus: int
    sylvester_sum: int
    level: int


def stats_from_apery(ap: AperySet) -> SemigroupStats:
    """Evaluate the Apery-sum formulas with exact rational intermediates.

        g_p = max_j m_j - a1
        n_p = (1/a1) sum m_j - (a1-1)/2
        s_p = (1/(2 a1)) sum m_j^2 - (1/2) sum m_j + (a1^2 - 1)/12

    Results must be integers; a failed integrality check raises
    NonIntegerResult (it would mean the input is not a valid Apery set).
    """
    a1 = ap.modulus
    s1 = sum(ap.elements)
    s2 = sum(m * m for m in ap.elements)
    frob = ap.max_element - a1
    genus = Fraction(s1, a1) - Fraction(a1 - 1, 2)
    syl = Fraction(s2, 2 * a1) - Fraction(s1, 2) + Fraction(a1 * a1 - 1, 12)
    if genus.denominator != 1 or syl.denominator != 1:
        raise NonIntegerResult(
            f"Apery sums gave non-integer invariants (genus={genus}, sylvester={syl})"
        )
    return SemigroupStats(frob, int(genus), int(syl), ap.level)


def compute_stats(A: GeneratorSet, p: int, *, budget: int = DEFAULT_BUDGET) -> SemigroupStats:
    """End-to-end engine: Apery set at level p, then the three invariants."""
    return stats_from_apery(apery_set(A, p, budget=budget))


def compute_stats_range(
    A: GeneratorSet, pmax: int, *, budget: int = DEFAULT_BUDGET
) -> list[SemigroupStats]:
    """Stats for every level 0..pmax, sharing one enumeration pass."""
    return [stats_from_apery(ap) for ap in apery_levels(A, pmax, budget=budget)]
