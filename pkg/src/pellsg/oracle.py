"""Slow, independent reference implementations used by tests and `verify`.

Nothing here shares code with the engine: Pell numbers come from a matrix
power instead of the recurrence, denumerants from blind nested loops instead
of congruence bucketing, and semigroup invariants from a coin-change table
scan instead of Apery sets.
"""

from __future__ import annotations

from .errors import CapExceeded
from .pellseq import GeneratorSet

DEFAULT_CAP = 10**7  # largest value a brute-force scan will touch


def pell_matrix(u: int, n: int) -> int:
    """P_n(u) via the matrix power [[u,1],[1,0]]^n (top-right entry)."""
    if u < 1 or n < 0:
        raise ValueError(f"need u >= 1 and n >= 0, got u={u}, n={n}")
    a, b, c, d = 1, 0, 0, 1  # identity
    e, f, g, h = u, 1, 1, 0
    m = n
    while m:
        if m & 1:
            a, b, c, d = a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h
        e, f, g, h = e * e + f * g, e * f + f * h, g * e + h * g, g * f + h * h
        m >>= 1
    return b


def brute_denumerant(A: GeneratorSet, n: int, *, cap: int = DEFAULT_CAP) -> int:
    """Count representations of n by blind nested loops (no congruences).

    Loops over coefficients of every generator except the largest and checks
    divisibility by the largest.  Exponential in kappa; meant for spot checks.
    """
    if n > cap:
        raise CapExceeded(f"n={n} exceeds brute-force cap {cap}")
    if n < 0:
        return 0
    gens = A.generators

    def count(idx: int, rest: int) -> int:
        if idx == len(gens) - 1:
            return 1 if rest % gens[idx] == 0 else 0
        return sum(count(idx + 1, rest - x * gens[idx]) for x in range(rest // gens[idx] + 1))

    return count(0, n)


def denumerant_table(A: GeneratorSet, n_max: int) -> list[int]:
    """Coin-change table: entry n holds the denumerant of n, for 0 <= n <= n_max.

    One pass per generator; entry counts are exact Python ints.
    """
    dp = [0] * (n_max + 1)
    dp[0] = 1
    for a in A.generators:
        for n in range(a, n_max + 1):
            dp[n] += dp[n - a]
    return dp


def brute_stats_range(
    A: GeneratorSet, pmax: int, *, cap: int = DEFAULT_CAP
) -> list[tuple[int, int, int]]:
    """(frobenius, genus, sylvester sum) for every level 0..pmax by table scan.

    Builds the denumerant table out to a bound, doubling until the level-pmax
    membership indicator ends with a1 consecutive members (beyond such a run
    there are no further gaps, since the denumerant of n + a1 is >= that of n).
    """
    if pmax < 0:
        raise ValueError(f"pmax must be >= 0, got {pmax}")
    a1 = A.a1
    n_max = (pmax + 1) * a1 * max(A.generators)
    while True:
        if n_max > cap:
            raise CapExceeded(f"scan bound {n_max} exceeds cap {cap}")
        dp = denumerant_table(A, n_max)
        run = 0
        for n in range(n_max + 1):
            run = run + 1 if dp[n] > pmax else 0
            if run == a1:
                break
        else:
            n_max *= 2
            continue
        out = []
        for p in range(pmax + 1):
            gaps = [n for n in range(n_max + 1) if dp[n] <= p]
            out.append((max(gaps), len(gaps), sum(gaps)))
        return out


def brute_stats(A: GeneratorSet, p: int, *, cap: int = DEFAULT_CAP) -> tuple[int, int, int]:
    """(frobenius, genus, sylvester sum) at a single level p."""
    return brute_stats_range(A, p, cap=cap)[p]
