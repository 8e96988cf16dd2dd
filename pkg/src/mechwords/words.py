"""Two-letter words, periodic reads, and the mechanical-word generator.

Words are plain Python strings over the alphabet {A, B}. A non-empty word
doubles as the period of the infinite repetition word*word*word*..., which is
how circular arrangements are read. Everything here is exact integer
arithmetic; no floats appear anywhere in the library.
"""

from typing import NamedTuple

A = "A"
B = "B"
ALPHABET = frozenset((A, B))

# fixed rendering bijection: A <-> 1, B <-> 0
_BITS = str.maketrans(A + B, "10")


def _ceil_div(a: int, b: int) -> int:
    # exact ceiling of a/b for a >= 0, b >= 1
    return (a + b - 1) // b


def parse_word(text: str) -> str:
    """Validate a word over {A, B}; every other character is rejected."""
    bad = set(text) - ALPHABET
    if bad:
        raise ValueError(
            f"invalid letter(s) {sorted(bad)}: words use only 'A' and 'B'")
    return text


def to_bits(word: str) -> str:
    """Render a word as 0/1 digits (A -> 1, B -> 0)."""
    return parse_word(word).translate(_BITS)


def concat(x: str, y: str) -> str:
    """Concatenation; the empty word is the two-sided identity."""
    return parse_word(x) + parse_word(y)


def power(x: str, e: int) -> str:
    """x repeated e times; power(x, 0) is the empty word."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    return parse_word(x) * e


def weight(u: str) -> int:
    """Number of letters A in u."""
    return parse_word(u).count(A)


def factor(period: str, start: int, length: int) -> str:
    """Read `length` letters of the periodic word period*period*... from `start`.

    `length` may exceed the period length; the read wraps around as often as
    needed.
    """
    parse_word(period)
    if not period:
        raise ValueError("period must be non-empty")
    if start < 0 or length < 0:
        raise ValueError("start and length must be non-negative")
    n = len(period)
    s = start % n
    return (period * _ceil_div(s + length, n))[s:s + length]


def mechanical_word(n: int, k: int) -> str:
    """One period of the mechanical word of slope k/n, with 0 < k <= n.

    Letter i is ceil(k*(i+1)/n) - ceil(k*i/n) rendered through 1 -> A, 0 -> B,
    so every prefix of length m holds exactly ceil(k*m/n) letters A and the
    full period has weight k. The pair is taken as given, not reduced:
    mechanical_word(4, 2) is "ABAB", two repeats of the slope-1/2 period.
    """
    if n < 1 or k < 1 or k > n:
        raise ValueError(f"slope k/n needs 0 < k <= n, got k={k}, n={n}")
    letters = []
    prev = 0
    for i in range(1, n + 1):
        cur = _ceil_div(k * i, n)
        letters.append(A if cur > prev else B)
        prev = cur
    return "".join(letters)


class BalanceCheck(NamedTuple):
    """Outcome of a balance scan; start/weight locate the first violation."""
    ok: bool
    start: int | None
    weight: int | None
    low: int
    high: int

    def __bool__(self) -> bool:
        return self.ok


def check_balance(period: str, m: int) -> BalanceCheck:
    """Check every length-m factor of the periodic word against balance bounds.

    With alpha = weight/len of the period, each factor of length m must hold
    between floor(m*alpha) and ceil(m*alpha) letters A; the bounds are computed
    with integer arithmetic. Scanning the len(period) start positions covers
    all factors, by periodicity. On failure the first violating start index
    and its weight are reported.
    """
    parse_word(period)
    if not period:
        raise ValueError("period must be non-empty")
    if m < 1:
        raise ValueError("factor length must be positive")
    n, k = len(period), period.count(A)
    low, high = (m * k) // n, _ceil_div(m * k, n)
    w = factor(period, 0, m).count(A)
    for start in range(n):
        if not low <= w <= high:
            return BalanceCheck(False, start, w, low, high)
        # slide one spot: drop the leaving letter, add the entering one
        w += (period[(start + m) % n] == A) - (period[start] == A)
    return BalanceCheck(True, None, None, low, high)
