"""Rigorous two-sided bounds on reciprocal sums of Sidon sequences.

From a finite prefix a_1 < ... < a_k the full reciprocal sum is bracketed
by the exact partial sum below and, above, by the partial sum plus a tail
that continues linearly (a_k + n - k) until the generic Sidon growth
floor n(n-1)/2 overtakes it, after which the tail telescopes in closed
form.  All float arithmetic carries an explicit worst-case rounding
budget, folded outward into the reported interval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_FLOOR, Decimal
from typing import NamedTuple, Sequence

__all__ = [
    "ReciprocalSumInterval",
    "TailSplit",
    "partial_sum",
    "switch_index",
    "tail_split",
    "tail_upper",
    "bound_interval",
    "quad_tail",
    "levine_bound",
    "format_lower",
    "format_upper",
    "LEWIS_SG_INTERVAL",
    "ZHANG_1991_LOWER",
]

_EPS = 2.0 ** -53

# Historical values kept for report output only (not recomputed here):
# Lewis's bracket for the Mian-Chowla reciprocal sum, and Zhang's 1991
# lower bound for his sequence.
LEWIS_SG_INTERVAL = (2.158435, 2.158677)
ZHANG_1991_LOWER = 2.1597


def _down(x: float) -> float:
    return math.nextafter(x, -math.inf)


def _up(x: float) -> float:
    return math.nextafter(x, math.inf)


@dataclass(frozen=True)
class ReciprocalSumInterval:
    """Outward-rounded bracket [lower, upper] for a reciprocal sum."""

    lower: float
    upper: float
    k: int  # exact terms used

    def __post_init__(self):
        if not self.lower < self.upper:
            raise ValueError(f"degenerate interval [{self.lower}, {self.upper}]")

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def contains(self, other: "ReciprocalSumInterval") -> bool:
        return self.lower <= other.lower and other.upper <= self.upper

    def contains_point(self, x: float) -> bool:
        return self.lower <= x <= self.upper

    def formatted(self, digits: int = 8) -> tuple[str, str]:
        return format_lower(self.lower, digits), format_upper(self.upper, digits)


class TailSplit(NamedTuple):
    """Where the quadratic floor overtakes the linear continuation."""

    k: int
    a_k: int
    n_switch: int


def _validate_terms(terms: Sequence[int]) -> None:
    if not len(terms):
        raise ValueError("terms must be nonempty")
    prev = 0
    for pos, t in enumerate(terms, start=1):
        if t <= prev:
            raise ValueError(
                f"terms must be positive and strictly increasing "
                f"(position {pos}: {t} after {prev})")
        prev = t


def partial_sum(terms: Sequence[int]) -> ReciprocalSumInterval:
    """Interval around sum(1/a_n) for the given exact terms.

    The reciprocals are summed exactly (fsum); the budget covers one
    rounding per division plus the final fsum rounding, so the interval
    width stays far below 1e-12.  Its lower endpoint is a valid lower
    bound for the full reciprocal sum of any extension.
    """
    _validate_terms(terms)
    vals = [1.0 / t for t in terms]
    s = math.fsum(vals)
    # Exact per-division error via integer arithmetic: v = num/den, so
    # |v - 1/t| = |num*t - den| / (den*t).  Zero for power-of-two terms.
    err = 0.0
    exact = True
    for t, v in zip(terms, vals):
        t = int(t)  # numpy ints would overflow the exact products
        num, den = float(v).as_integer_ratio()
        delta = num * t - den
        if delta:
            exact = False
            err += abs(delta) / (den * t)
    if exact and len(vals) <= 4096:
        from fractions import Fraction

        if sum(Fraction(v) for v in vals) == Fraction(s):
            # fully exact: the sum itself is the lower endpoint
            return ReciprocalSumInterval(s, _up(s), len(terms))
    err = err * (1.0 + 2.0 ** -40) + _EPS * abs(s)
    return ReciprocalSumInterval(_down(s - err), _up(s + err), len(terms))


def switch_index(k: int, a_k: int) -> int:
    """Smallest n > k with n(n-1)/2 > a_k + n - k (strict inequality).

    Found from the quadratic root, then fixed up in exact integer
    arithmetic so no float enters the final comparison.
    """
    if a_k <= k * (k - 1) // 2:
        raise ValueError(f"a_k={a_k} violates the Sidon floor for k={k}")
    # n^2 - 3n - 2(a_k - k) > 0  =>  n > (3 + sqrt(9 + 8(a_k - k))) / 2
    n = (3 + math.isqrt(9 + 8 * (a_k - k))) // 2
    n = max(n, k + 1)
    while n * (n - 1) // 2 > a_k + n - k and n - 1 > k:
        n -= 1
    while not n * (n - 1) // 2 > a_k + n - k:
        n += 1
    return n


def tail_split(k: int, a_k: int) -> TailSplit:
    return TailSplit(k, a_k, switch_index(k, a_k))


def quad_tail(n_start: int) -> float:
    """Closed form of sum_{n>=n_start} 2/(n(n-1)), which telescopes."""
    if n_start < 2:
        raise ValueError("quadratic tail needs n_start >= 2")
    return 2.0 / (n_start - 1)


def tail_upper(k: int, a_k: int) -> float:
    """Rigorous upper bound on the tail sum_{n>k} 1/a_n.

    Direct summation of the linear stretch 1/(a_k + n - k) for
    k < n < n_switch, plus the telescoped quadratic tail from n_switch,
    rounded outward.
    """
    ns = switch_index(k, a_k)
    middle = math.fsum(1.0 / (a_k + n - k) for n in range(k + 1, ns))
    total = middle + quad_tail(ns)
    return _up(total + 4.0 * _EPS * total)


def bound_interval(terms: Sequence[int]) -> ReciprocalSumInterval:
    """Bracket the full reciprocal sum of any Sidon sequence extending terms."""
    p = partial_sum(terms)
    t = tail_upper(len(terms), terms[-1])
    return ReciprocalSumInterval(p.lower, _up(p.upper + t), p.k)


class LevineBound(NamedTuple):
    closed_form: float
    series_value: float
    series_lower: float
    series_upper: float


def levine_bound(n_terms: int = 10 ** 6) -> LevineBound:
    """Levine's upper bound for the distinct distance constant.

    Closed form (2*pi/sqrt(7)) * tanh(sqrt(7)*pi/2) versus the series
    sum 1/(1 + n(n+1)/2), truncated after ``n_terms`` terms with a
    two-sided telescoping bracket for the remainder:
    2/((n+1)(n+2)) < 1/(1 + n(n+1)/2) < 2/(n(n+1)).
    """
    closed = (2.0 * math.pi / math.sqrt(7.0)) * math.tanh(math.sqrt(7.0) * math.pi / 2.0)
    s = math.fsum(1.0 / (1 + n * (n + 1) // 2) for n in range(n_terms))
    tail_hi = 2.0 / n_terms          # sum_{n>=N} 2/(n(n+1)) = 2/N
    tail_lo = 2.0 / (n_terms + 1)    # sum_{n>=N} 2/((n+1)(n+2)) = 2/(N+1)
    slack = 4.0 * _EPS * s
    lower = _down(s + tail_lo - slack)
    upper = _up(s + tail_hi + slack)
    return LevineBound(closed, (lower + upper) / 2.0, lower, upper)


def format_lower(value: float, digits: int = 8) -> str:
    """Decimal string rounded toward -inf (valid printed lower bound)."""
    q = Decimal(1).scaleb(-digits)
    return str(Decimal(value).quantize(q, rounding=ROUND_FLOOR))


def format_upper(value: float, digits: int = 8) -> str:
    """Decimal string rounded toward +inf (valid printed upper bound)."""
    q = Decimal(1).scaleb(-digits)
    return str(Decimal(value).quantize(q, rounding=ROUND_CEILING))
