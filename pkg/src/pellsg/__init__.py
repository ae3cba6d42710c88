"""p-numerical semigroup invariants for Pell generator triples.

Library layout:

    pellseq     Pell polynomial sequences, generator sets, the three families
    semigroup   general enumeration engine (Apery sets -> g_p, n_p, s_p)
    closedform  closed-form formulas with guaranteed level ranges
    oracle      slow independent reference implementations (tests, verify)
    cli         pellsg command-line tool (compute / verify / table)
"""

from .closedform import (
    OddEvenParams,
    OddOddParams,
    even_p_limit,
    formula_stats,
    odd_even_params,
    odd_odd_params,
    theorem1_frobenius,
    theorem2_genus,
    theorem2_sylvester,
    theorem3_frobenius,
    theorem4_frobenius,
    theorem5_genus,
    theorem6_genus,
    two_generator_reduction,
)
from .errors import (
    BudgetExceeded,
    CapExceeded,
    IndexConstraintViolation,
    NonCoprime,
    NonIntegerResult,
    OutOfValidityRange,
    PellsgError,
)
from .pellseq import (
    Family,
    FamilyInstance,
    GeneratorSet,
    build_family,
    check_addition_identity,
    pell,
    pell_sequence,
    residue_mod_u,
)
from .semigroup import (
    DEFAULT_BUDGET,
    AperySet,
    SemigroupStats,
    apery_levels,
    apery_set,
    compute_stats,
    compute_stats_range,
    denumerant,
    is_member,
    stats_from_apery,
)

__version__ = "0.1.0"

__all__ = [
    "AperySet",
    "BudgetExceeded",
    "CapExceeded",
    "DEFAULT_BUDGET",
    "Family",
    "FamilyInstance",
    "GeneratorSet",
    "IndexConstraintViolation",
    "NonCoprime",
    "NonIntegerResult",
    "OddEvenParams",
    "OddOddParams",
    "OutOfValidityRange",
    "PellsgError",
    "SemigroupStats",
    "apery_levels",
    "apery_set",
    "build_family",
    "check_addition_identity",
    "compute_stats",
    "compute_stats_range",
    "denumerant",
    "even_p_limit",
    "formula_stats",
    "is_member",
    "odd_even_params",
    "odd_odd_params",
    "pell",
    "pell_sequence",
    "residue_mod_u",
    "stats_from_apery",
    "theorem1_frobenius",
    "theorem2_genus",
    "theorem2_sylvester",
    "theorem3_frobenius",
    "theorem4_frobenius",
    "theorem5_genus",
    "theorem6_genus",
    "two_generator_reduction",
    "__version__",
]
