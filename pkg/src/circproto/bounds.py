"""
Closed-form and series-expansion prototype counts.

Per-circle functions take the index ``t`` of the circle whose count is
wanted. Circle 0 (the origin) always needs exactly one prototype.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from circproto.errors import ContractViolation

# Integerization slack: floor(x)+1 must see 2.9999999999999996 as 3.
_INT_EPS = 1e-9


@dataclass(frozen=True)
class BoundsRow:
    t: int
    upper: float
    lower: float
    equal_exact: float
    first_order: int
    second_order: int


def strict_count(x: float) -> int:
    """Smallest integer strictly greater than the real bound ``x``."""
    return math.floor(x + _INT_EPS) + 1


def _check_t(t: int, minimum: int = 0) -> None:
    if int(t) != t or t < minimum:
        raise ContractViolation(f"circle index must be an integer >= {minimum}, got {t!r}")


def upper_bound_count(t: int) -> float:
    """Worst-rotation requirement for circle ``t``: pi / arccos((2t^2 - 1) / (2t^2))."""
    _check_t(t)
    if t == 0:
        return 1.0
    return math.pi / math.acos((2 * t * t - 1) / (2 * t * t))


def lower_bound_count(inner: int) -> float:
    """Best-rotation requirement for circle ``inner + 1``.

    Evaluates pi / arccos((2*inner + 1) / (2*(inner + 1))), i.e. the bound is
    indexed by the inner circle of the adjacent pair.
    """
    _check_t(inner)
    return math.pi / math.acos((2 * inner + 1) / (2 * (inner + 1)))


def lower_bound_for_circle(t: int) -> float:
    """:func:`lower_bound_count` re-indexed by the circle it constrains."""
    _check_t(t)
    if t == 0:
        return 1.0
    return lower_bound_count(t - 1)


def equal_count_per_circle(N: int) -> int:
    """Common per-circle count when circles ``1..N`` all share one count.

    The outermost pair (N-1, N) is binding; with ``theta = pi/n`` that count
    is always feasible.
    """
    _check_t(N, 1)
    return strict_count(lower_bound_count(N - 1))


def equal_count_exact(N: int) -> int:
    """Total prototypes for ``N`` equally populated circles (about N**1.5 * pi)."""
    return N * equal_count_per_circle(N)


def first_order_count(t: int) -> int:
    _check_t(t)
    return 1 if t == 0 else math.ceil(t * math.pi)


def theory_sequence(N: int) -> list[int]:
    """``[1, ceil(pi), ceil(2 pi), ...]`` for circles ``0..N-1``."""
    _check_t(N, 1)
    return [first_order_count(t) for t in range(N)]


def theory_closed_form(N: int) -> float:
    """Approximate cumulative count for circles 1..N: (N + N(N+1)pi) / 2."""
    return (N + N * (N + 1) * math.pi) / 2


def _second_order_margin(inner: int, n: float) -> float:
    # first inequality with cos(q/2) and cos(pi/n) truncated after their q^4, n^-4 terms,
    # and gcd(m,n)^2 / m^2 replaced by 1/(n-1)^2
    q = 2.0 * math.pi / (n * (n - 1.0))
    cos_half_q = 1.0 - q**2 / 8.0 + q**4 / 384.0
    x = math.pi / n
    cos_pi_n = 1.0 - x**2 / 2.0 + x**4 / 24.0
    return -(2 * inner + 1) / (2 * (inner + 1)) - (inner * cos_half_q - (inner + 1) * cos_pi_n)


def second_order_real(t: int, tol: float = 1e-10) -> float:
    """Real-valued threshold on n for circle ``t`` from the second-order expansion."""
    _check_t(t, 1)
    inner = t - 1
    # circle t >= 1 holds at least two prototypes; below that the truncated
    # series in q = 2*pi/(n(n-1)) is meaningless
    lo = 2.0
    if _second_order_margin(inner, lo) > 0:
        raise ArithmeticError(f"second-order margin already positive at n={lo} for t={t}")
    hi = 4.0
    while _second_order_margin(inner, hi) <= 0:
        lo, hi = hi, 2.0 * hi
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _second_order_margin(inner, mid) > 0:
            hi = mid
        else:
            lo = mid
    return hi


def second_order_count(t: int) -> int:
    _check_t(t)
    if t == 0:
        return 1
    return strict_count(second_order_real(t))


def bounds_row(t: int) -> BoundsRow:
    return BoundsRow(
        t=t,
        upper=upper_bound_count(t),
        lower=lower_bound_for_circle(t),
        equal_exact=lower_bound_for_circle(t),
        first_order=first_order_count(t),
        second_order=second_order_count(t),
    )
