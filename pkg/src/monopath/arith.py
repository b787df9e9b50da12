"""Exact comparisons against sqrt/fourth-root thresholds.

Every guard in the pipeline compares an integer count with an expression in
sqrt(n) and n**(1/4).  Floating point is not trusted anywhere near these
boundaries; each predicate below is an algebraic rewrite of its inequality
into integer/rational comparisons (squaring only ever applied to sides known
to be non-negative, so each rewrite is an equivalence, not a relaxation).
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational


def _frac(x) -> Fraction:
    # Fraction(float) is exact on the binary value, so float-configured
    # constants stay deterministic.
    if isinstance(x, (Rational, float)):
        return Fraction(x)
    raise TypeError(f"expected a rational or float coefficient, got {type(x).__name__}")


def ge_coeff_sqrt(count: int, coeff, n: int) -> bool:
    """count >= coeff * sqrt(n), for coeff >= 0."""
    c = _frac(coeff)
    if c < 0:
        raise ValueError("coefficient must be non-negative")
    if count < 0:
        return False
    return Fraction(count) ** 2 >= c * c * n


def le_coeff_sqrt(count: int, coeff, n: int) -> bool:
    """count <= coeff * sqrt(n), for count, coeff >= 0."""
    c = _frac(coeff)
    if c < 0:
        raise ValueError("coefficient must be non-negative")
    if count <= 0:
        return True
    return Fraction(count) ** 2 <= c * c * n


def le_sqrt_plus_quartic(count: int, n: int, coeff) -> bool:
    """count <= sqrt(n) + coeff * n**(1/4), for coeff >= 0.

    With a = count and m = sqrt(n): a <= m + K*sqrt(m).  If a**2 <= n the
    bound is immediate; otherwise both a - m and K*sqrt(m) are non-negative
    and two squarings give (a**2 + n)**2 <= (2a + K**2)**2 * n.
    """
    k = _frac(coeff)
    if k < 0:
        raise ValueError("coefficient must be non-negative")
    a = count
    if a <= 0 or a * a <= n:
        return True
    return Fraction(a * a + n) ** 2 <= (2 * a + k * k) ** 2 * n


def le_sqrt_minus_quartic(count: int, n: int, coeff) -> bool:
    """count <= sqrt(n) - coeff * n**(1/4), for count >= 0, coeff >= 0.

    Substituting m = sqrt(n): a + K*sqrt(m) <= m.  Requires m >= a, then
    K**2 * m <= (m - a)**2, i.e. n + a**2 >= (2a + K**2) * sqrt(n), and one
    more squaring clears the radical.
    """
    k = _frac(coeff)
    if k < 0:
        raise ValueError("coefficient must be non-negative")
    a = count
    if a < 0:
        raise ValueError("count must be non-negative")
    if a == 0 and k == 0:
        return True
    if a * a > n:
        return False
    return Fraction(n + a * a) ** 2 >= (2 * a + k * k) ** 2 * n


def reduce_guard(n: int, s: int, c1, c2, k: int) -> bool:
    """sqrt(n - s) + c1 + k <= sqrt(n) + c2, for 0 <= s <= n.

    With d = c1 + k - c2: sqrt(n - s) <= sqrt(n) - d.  Non-positive d always
    passes (s >= 0); otherwise needs d**2 <= n and, after squaring,
    2*d*sqrt(n) <= s + d**2, cleared to 4*d**2*n <= (s + d**2)**2.
    """
    if not 0 <= s <= n:
        raise ValueError(f"need 0 <= s <= n, got s={s}, n={n}")
    d = _frac(c1) + k - _frac(c2)
    if d <= 0:
        return True
    if d * d > n:
        return False
    return 4 * d * d * n <= (s + d * d) ** 2


def lt_sqrt_plus_const(size: int, n: int, c) -> bool:
    """size < sqrt(n) + c."""
    t = size - _frac(c)
    if t <= 0:
        return n >= 1
    return t * t < n


def ceil_of_coeff_sqrt(coeff, n: int) -> int:
    """ceil(coeff * sqrt(n)) for coeff >= 0: least k >= 0 with k**2 >= coeff**2 * n."""
    c = _frac(coeff)
    if c < 0:
        raise ValueError("coefficient must be non-negative")
    target = c * c * n
    k = isqrt(target.numerator // target.denominator)
    while k * k < target:
        k += 1
    while k >= 1 and (k - 1) * (k - 1) >= target:
        k -= 1
    return k


def floor_of_coeff_sqrt(coeff, n: int) -> int:
    """floor(coeff * sqrt(n)) for coeff >= 0: greatest k >= 0 with k**2 <= coeff**2 * n."""
    c = _frac(coeff)
    if c < 0:
        raise ValueError("coefficient must be non-negative")
    target = c * c * n
    k = isqrt(target.numerator // target.denominator)
    while (k + 1) * (k + 1) <= target:
        k += 1
    while k >= 1 and k * k > target:
        k -= 1
    return k


def ceil_div(a: int, b: int) -> int:
    if b <= 0:
        raise ValueError("positive divisor required")
    return -(-a // b)
