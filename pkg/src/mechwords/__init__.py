"""Balanced circular two-letter arrangements.

Construct circular arrangements of k letters A among n spots whose windows are
as evenly loaded as possible, decide exactly when every window of s
consecutive spots can be guaranteed at least t letters A (iff n*t <= k*s), and
verify the constructions against exhaustive brute force at small scale.

The package splits into:

- ``words``: two-letter words, periodic reads, the mechanical-word generator,
  and balance checking.
- ``admissibility``: circular window profiles, the n*t <= k*s criterion, the
  complement restatement, and window discrepancy.
- ``constructions``: the Euclidean quotient-ladder build, the
  continued-fraction word recursion, rotation canonicalization, and the exact
  bridges between all three routes.
- ``oracle``: brute-force enumeration used as ground truth.
- ``cli``: the ``mechwords`` command (plan, generate, check, verify,
  discrepancy).
"""

from .admissibility import (
    AdmissibilityQuery,
    AdmissibilityVerdict,
    WindowReport,
    complement_check,
    construct_admissible,
    criterion,
    discrepancy,
    is_admissible,
    min_weight_window,
    window_weight_profile,
)
from .constructions import (
    EuclidStep,
    EuclidTrace,
    arrange,
    canonical_rotation,
    cf_expansion,
    euclid_trace,
    recurrence_reconstruct,
    rotation_equivalent,
    smith_ladder,
    smith_to_mechanical,
    smith_word,
    symbol_stages,
)
from .oracle import OracleResult, brute_force_exists, pigeonhole_witness
from .words import (
    A,
    B,
    BalanceCheck,
    check_balance,
    concat,
    factor,
    mechanical_word,
    parse_word,
    power,
    to_bits,
    weight,
)

__version__ = "0.1.0"

__all__ = [
    "A",
    "B",
    "AdmissibilityQuery",
    "AdmissibilityVerdict",
    "BalanceCheck",
    "EuclidStep",
    "EuclidTrace",
    "OracleResult",
    "WindowReport",
    "arrange",
    "brute_force_exists",
    "canonical_rotation",
    "cf_expansion",
    "check_balance",
    "complement_check",
    "concat",
    "construct_admissible",
    "criterion",
    "discrepancy",
    "euclid_trace",
    "factor",
    "is_admissible",
    "mechanical_word",
    "min_weight_window",
    "parse_word",
    "pigeonhole_witness",
    "power",
    "recurrence_reconstruct",
    "rotation_equivalent",
    "smith_ladder",
    "smith_to_mechanical",
    "smith_word",
    "symbol_stages",
    "to_bits",
    "weight",
    "window_weight_profile",
]
