"""Circular window analysis: the nt <= ks criterion and discrepancy.

A circular arrangement of n spots, k of them marked A, is t-admissible for
window length s when every run of s consecutive spots holds at least t letters
A. Such an arrangement exists exactly when n*t <= k*s, and the mechanical word
of slope k/n always works.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .words import A, mechanical_word, parse_word, weight


class WindowReport(NamedTuple):
    """A circular window: `weight` letters A among `length` spots from `start`."""
    start: int
    length: int
    weight: int


class AdmissibilityVerdict(NamedTuple):
    """Verdict plus the minimum-weight window backing it.

    The witness is always the minimum-weight window with the smallest start;
    when the verdict is negative it is a violating window.
    """
    admissible: bool
    witness: WindowReport

    def __bool__(self) -> bool:
        return self.admissible


@dataclass(frozen=True)
class AdmissibilityQuery:
    """A planning instance: n spots, k marked A, windows of s spots, quota t.

    Requires 1 <= k < n and 1 <= s < n. Any t >= 0 is accepted: t = 0 is
    trivially admissible and t beyond min(k, s) simply resolves to "not
    admissible" through the criterion.
    """
    n: int
    k: int
    s: int
    t: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 1 <= self.k < self.n:
            raise ValueError(f"k must satisfy 1 <= k < n, got k={self.k}, n={self.n}")
        if not 1 <= self.s < self.n:
            raise ValueError(f"s must satisfy 1 <= s < n, got s={self.s}, n={self.n}")
        if self.t < 0:
            raise ValueError("t must be non-negative")


def window_weight_profile(word: str, m: int) -> list[int]:
    """Weights of all n circular windows of length m; entry i starts at spot i.

    Computed by sliding the window once around the circle, linear in n.
    """
    parse_word(word)
    n = len(word)
    if not 1 <= m <= n:
        raise ValueError(f"window length must be in 1..{n}, got {m}")
    w = word[:m].count(A)
    profile = [w]
    for start in range(1, n):
        w += (word[(start + m - 1) % n] == A) - (word[start - 1] == A)
        profile.append(w)
    return profile


def min_weight_window(word: str, m: int) -> WindowReport:
    """The minimum-weight circular window of length m (smallest start on ties)."""
    profile = window_weight_profile(word, m)
    w = min(profile)
    return WindowReport(profile.index(w), m, w)


def is_admissible(word: str, s: int, t: int) -> AdmissibilityVerdict:
    """Does every circular window of s consecutive spots hold >= t letters A?"""
    if t < 0:
        raise ValueError("t must be non-negative")
    witness = min_weight_window(word, s)
    return AdmissibilityVerdict(witness.weight >= t, witness)


def criterion(query: AdmissibilityQuery) -> bool:
    """Exact existence test: a t-admissible arrangement exists iff n*t <= k*s."""
    return query.n * query.t <= query.k * query.s


def construct_admissible(query: AdmissibilityQuery) -> str | None:
    """A t-admissible arrangement, or None when none exists.

    When the criterion holds, the mechanical word of slope k/n works: each of
    its s-windows holds at least floor(k*s/n) >= t letters A.
    """
    if not criterion(query):
        return None
    return mechanical_word(query.n, query.k)


def complement_check(word: str, s: int, t: int) -> bool:
    """Restated admissibility: every (n-s)-window holds at most k-t letters A.

    Equivalent to is_admissible(word, s, t) for every word; exposed separately
    so the equivalence stays testable.
    """
    n = len(word)
    if not 1 <= s < n:
        raise ValueError(f"s must be in 1..{n - 1}, got {s}")
    return max(window_weight_profile(word, n - s)) <= weight(word) - t


def discrepancy(word: str, m: int) -> int:
    """Max over length-m windows of |#A - #B| (coloring A -> +1, B -> -1)."""
    return max(abs(2 * w - m) for w in window_weight_profile(word, m))
