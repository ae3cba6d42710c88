"""Pell polynomial sequences and the three Pell generator families.

The sequence P_n(u) is defined by

    P_0 = 0,  P_1 = 1,  P_n = u * P_{n-1} + P_{n-2}   (n >= 2),

so u = 1 gives the Fibonacci numbers and u = 2 the classical Pell numbers
0, 1, 2, 5, 12, 29, 70, 169, ...

Three families of coprime generator triples are built from consecutive-ish
Pell numbers:

    even      : (P_{2i}, P_{2i+2}, P_{2i+2k+1})   with u >= 2, 2 <= i <= k
    odd-odd   : (P_{2i+1}, P_{2i+3}, P_{2i+k+1})  with k odd,  3 <= k
    odd-even  : (P_{2i+1}, P_{2i+3}, P_{2i+k+1})  with k even, 4 <= k

For the odd families the triple is "regular" when k <= 2i-1 (k odd) or
k <= 2i (k even); for k >= 2i+1 the third generator is already representable
by the first two and the instance degenerates to a two-generator problem.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import IndexConstraintViolation, NonCoprime

# ── sequences ────────────────────────────────────────────────────────────────


def pell(u: int, n: int) -> int:
    """Return P_n(u).  Exact for arbitrarily large n (Python ints)."""
    if u < 1:
        raise ValueError(f"parameter u must be >= 1, got {u}")
    if n < 0:
        raise ValueError(f"index n must be >= 0, got {n}")
    a, b = 0, 1  # P_0, P_1
    for _ in range(n):
        a, b = b, u * b + a
    return a


def pell_sequence(u: int, count: int) -> list[int]:
    """Return [P_0(u), ..., P_{count-1}(u)]."""
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    out: list[int] = []
    a, b = 0, 1
    for _ in range(count):
        out.append(a)
        a, b = b, u * b + a
    return out


def check_addition_identity(u: int, i: int, k: int) -> bool:
    """Check P_{i+k} == P_{i+1} P_k + P_i P_{k-1} (requires i >= 0, k >= 1)."""
    if i < 0 or k < 1:
        raise ValueError("addition identity needs i >= 0 and k >= 1")
    return pell(u, i + k) == pell(u, i + 1) * pell(u, k) + pell(u, i) * pell(u, k - 1)


def residue_mod_u(u: int, n: int) -> int:
    """Return P_n(u) mod u.  For u >= 2 this is 0 for even n and 1 for odd n."""
    if u < 2:
        raise ValueError(f"residues mod u need u >= 2, got {u}")
    return pell(u, n) % u


# ── generator sets ───────────────────────────────────────────────────────────


@dataclass(frozen=True)
class GeneratorSet:
    """A finite set of coprime generators a_1 < a_2 < ... < a_kappa, each >= 2.

    Input order does not matter; generators are sorted on construction.
    """

    generators: tuple[int, ...]

    def __post_init__(self) -> None:
        gens = tuple(sorted(int(a) for a in self.generators))
        object.__setattr__(self, "generators", gens)
        if len(gens) < 2:
            raise ValueError("need at least two generators")
        if gens[0] < 2:
            raise ValueError(f"generators must be >= 2, got {gens[0]}")
        if any(x == y for x, y in zip(gens, gens[1:])):
            raise ValueError(f"generators must be distinct, got {gens}")
        if math.gcd(*gens) != 1:
            raise NonCoprime(f"gcd{gens} = {math.gcd(*gens)} != 1")

    @property
    def a1(self) -> int:
        """Smallest generator (the Apery modulus)."""
        return self.generators[0]

    @property
    def kappa(self) -> int:
        """Number of generators."""
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.generators) + ")"


# ── families ─────────────────────────────────────────────────────────────────


class Family(enum.Enum):
    """The three Pell generator families (values double as CLI names)."""

    EVEN = "even"
    ODD_ODD = "odd-odd"
    ODD_EVEN = "odd-even"


@dataclass(frozen=True)
class FamilyInstance:
    """One concrete triple of a family, with its guaranteed level range.

    p_bound is an inclusive integer cap for the odd families and a strict
    rational bound for the even family (p is valid iff p < p_bound there).
    Degenerate odd instances (k >= 2i+1) carry p_bound = 0: only the classical
    two-generator Frobenius number is available in closed form.
    """

    family: Family
    u: int
    i: int
    k: int
    triple: GeneratorSet
    p_bound: int | Fraction
    degenerate: bool = False

    @property
    def max_p(self) -> int:
        """Largest level with a closed-form guarantee."""
        if isinstance(self.p_bound, Fraction):
            return math.ceil(self.p_bound) - 1  # largest integer strictly below
        return self.p_bound

    def valid_p(self, p: int) -> bool:
        """True iff level p is inside the guaranteed range [0, max_p]."""
        return 0 <= p <= self.max_p


def build_family(family: Family | str, u: int, i: int, k: int) -> FamilyInstance:
    """Construct the (u, i, k) instance of a family, validating index ranges.

    even     : u >= 2, 2 <= i <= k         -> (P_{2i}, P_{2i+2}, P_{2i+2k+1})
    odd-odd  : u >= 2, i >= 2, k odd >= 3  -> (P_{2i+1}, P_{2i+3}, P_{2i+k+1})
    odd-even : u >= 2, i >= 2, k even >= 4 -> same triple shape

    Odd instances with k >= 2i+1 are tagged degenerate rather than rejected.
    """
    from . import closedform  # local import: closedform needs pell() from here

    family = Family(family)
    if u < 2:
        raise IndexConstraintViolation(f"families need u >= 2, got u={u}")
    if i < 2:
        raise IndexConstraintViolation(f"families need i >= 2, got i={i}")

    if family is Family.EVEN:
        if k < i:
            raise IndexConstraintViolation(f"even family needs i <= k, got i={i}, k={k}")
        triple = GeneratorSet((pell(u, 2 * i), pell(u, 2 * i + 2), pell(u, 2 * i + 2 * k + 1)))
        return FamilyInstance(family, u, i, k, triple, closedform.even_p_limit(u, i, k))

    if family is Family.ODD_ODD and k % 2 == 0:
        raise IndexConstraintViolation(f"odd-odd family needs odd k, got k={k}")
    if family is Family.ODD_EVEN and k % 2 == 1:
        raise IndexConstraintViolation(f"odd-even family needs even k, got k={k}")
    if k < 3:
        raise IndexConstraintViolation(f"odd families need k >= 3, got k={k}")

    triple = GeneratorSet((pell(u, 2 * i + 1), pell(u, 2 * i + 3), pell(u, 2 * i + k + 1)))
    if k >= 2 * i + 1:
        return FamilyInstance(family, u, i, k, triple, 0, degenerate=True)
    if family is Family.ODD_ODD:
        bound = closedform.theorem3_p_max(u, i, k)
    else:
        bound = closedform.theorem4_p_max(u, i, k)
    return FamilyInstance(family, u, i, k, triple, bound)
