"""Exact integer kernel: factorial, binomial, and the termirial operator.

The order-p termirial of n is the p-fold iterated sum 1 + 2 + ... carried
up to n: order 1 is the triangular number n*(n+1)/2, order 2 the
tetrahedral number, and so on (the (p+1)-simplicial polytopic numbers).
Order 0 is n itself and order -1 is the constant 1.  Everything here is
plain Python int arithmetic, so results are exact at any size, and every
function is pure.
"""

from __future__ import annotations

from dataclasses import dataclass

MIN_ORDER = -1


def _check_count(name: str, value: int) -> None:
    if value < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {value}")


def _check_order(p: int) -> None:
    if p < MIN_ORDER:
        raise ValueError(f"order must be >= {MIN_ORDER}, got {p}")


def factorial(n: int) -> int:
    """Product 1*2*...*n, with factorial(0) == 1."""
    _check_count("n", n)
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def binomial(n: int, k: int) -> int:
    """C(n, k) for k <= n, 0 for k > n.

    Uses the running product C(n, k) = prod (n-k+i)/i, which stays an
    exact integer at every step; the two-factorial quotient is never
    formed.
    """
    _check_count("n", n)
    _check_count("k", k)
    if k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (n - k + i) // i
    return out


def termirial(n: int) -> int:
    """Triangular number n*(n+1)/2, the order-1 termirial."""
    _check_count("n", n)
    return n * (n + 1) // 2


def termirial_p(n: int, p: int) -> int:
    """Order-p termirial of n.

    Computed incrementally: at step i the value is multiplied by (n + i)
    and divided by (i + 1).  The partial value after step i is the
    binomial coefficient C(n+i, i+1), so every division is exact and no
    (p+1)! intermediate is ever built.  termirial_p(n, 0) == n,
    termirial_p(n, -1) == 1, and the n = 0 boundary yields 0 for p >= 0.
    """
    _check_count("n", n)
    _check_order(p)
    if p == MIN_ORDER:
        return 1
    out = 1
    for i in range(p + 1):
        out = out * (n + i) // (i + 1)
    return out


def termirial_p_binomial(n: int, p: int) -> int:
    """Order-p termirial of n via C(n+p, p+1).

    Kept as a separate code path from termirial_p so the two can be
    cross-checked; defined for n >= 1 (and n = 0 with p >= 0).
    """
    _check_order(p)
    return binomial(n + p, p + 1)


@dataclass(frozen=True)
class TermirialExpr:
    """A termirial value together with its binomial reading C(n+p, p+1)."""

    n: int
    p: int
    value: int
    binomial_form: tuple[int, int]


def termirial_expr(n: int, p: int) -> TermirialExpr:
    """Evaluate termirial_p(n, p) and record its binomial form (n+p, p+1)."""
    return TermirialExpr(n=n, p=p, value=termirial_p(n, p), binomial_form=(n + p, p + 1))


def pascal_check(n: int, p: int) -> tuple[int, int]:
    """Both sides of the termirial Pascal rule, for callers to compare.

    lhs = termirial_p(n+1, p) + termirial_p(n, p+1)
    rhs = termirial_p(n+1, p+1)

    Returned as a pair rather than a bool so failures stay diagnosable.
    """
    lhs = termirial_p(n + 1, p) + termirial_p(n, p + 1)
    rhs = termirial_p(n + 1, p + 1)
    return lhs, rhs


def convolution_terms(n: int, m: int, p: int) -> list[int]:
    """The p+2 products termirial_p(n, i) * termirial_p(m, p-i-1), i = -1..p.

    The order is split across the two arguments the way the binomial
    theorem splits an exponent; the terms sum to termirial_p(n+m, p).
    At p = 1 the terms read [termirial(m), n*m, termirial(n)] and at
    p = 2 they are the four-way split of the tetrahedral number.
    """
    _check_order(p)
    return [termirial_p(n, i) * termirial_p(m, p - i - 1) for i in range(-1, p + 1)]
