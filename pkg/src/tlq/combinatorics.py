"""Dimension combinatorics: w(t, k), its closed binomial form, Catalan
numbers, convolution recursions and truncated generating-function identities.

All arithmetic is arbitrary-precision integer.  The one intentional
convention override lives in :func:`w_recursive`: w(0, 0) = 1, so that the
constant terms of the generating functions come out right.
"""

from __future__ import annotations

import math
from functools import lru_cache


@lru_cache(maxsize=None)
def w_recursive(t: int, k: int) -> int:
    """Number of monic diagrams t -> t+2k via the lattice recursion
    w(t, k+1) = w(t-1, k+1) + w(t+1, k), with w(t, 0) = 1.

    Note w(0, 0) = 1: the empty diagram counts as one morphism.
    """
    if t < 0 or k < 0:
        return 0
    if k == 0:
        return 1
    return w_recursive(t - 1, k) + w_recursive(t + 1, k - 1)


def w_dim(t: int, n: int) -> int:
    """dim W_t(n): zero unless 0 <= t <= n and t = n (mod 2)."""
    if t < 0 or t > n or (n - t) % 2:
        return 0
    return w_recursive(t, (n - t) // 2)


def F_closed(t: int, k: int) -> int:
    """Binomial closed form C(t+2k, k) - C(t+2k, k-1); zero off-quadrant.

    Both published forms are evaluated and must agree.
    """
    if t < 0 or k < 0:
        return 0
    a = math.comb(t + 2 * k, k) - (math.comb(t + 2 * k, k - 1) if k else 0)
    num = (t + 1) * math.comb(t + 2 * k, k)
    b, rem = divmod(num, t + k + 1)
    if rem:
        raise ArithmeticError("binomial form is not integral")
    if a != b:
        raise ArithmeticError("the two closed forms disagree")
    return a


def catalan(n: int) -> int:
    """c(n) = C(2n, n)/(n+1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return math.comb(2 * n, n) // (n + 1)


def catalan_by_convolution(n: int) -> int:
    """c(n) by the diagram recursion c(n) = sum c(k-1) c(n-k), c(0) = 1."""
    table = [1]
    for m in range(1, n + 1):
        table.append(sum(table[k - 1] * table[m - k] for k in range(1, m + 1)))
    return table[n]


# ---------------------------------------------------------------------------
# Truncated power series over Z
# ---------------------------------------------------------------------------


class SeriesZ:
    """A power series over Z truncated at a fixed order (inclusive)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: list[int] | tuple[int, ...] = ()):
        self.order = order
        c = list(coeffs)[: order + 1]
        c += [0] * (order + 1 - len(c))
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, order: int) -> SeriesZ:
        return cls(order)

    @classmethod
    def one(cls, order: int) -> SeriesZ:
        return cls(order, (1,))

    @classmethod
    def x(cls, order: int) -> SeriesZ:
        return cls(order, (0, 1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesZ):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other: SeriesZ) -> SeriesZ:
        return SeriesZ(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: SeriesZ) -> SeriesZ:
        return SeriesZ(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "SeriesZ | int") -> SeriesZ:
        if isinstance(other, int):
            return SeriesZ(self.order, [other * a for a in self.coeffs])
        out = [0] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs[: self.order + 1 - i]):
                    if b:
                        out[i + j] += a * b
        return SeriesZ(self.order, out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self) -> str:
        return f"SeriesZ({self.order}, {list(self.coeffs)})"


def catalan_series(order: int) -> SeriesZ:
    return SeriesZ(order, [catalan(n) for n in range(order + 1)])


def w_row_series(t: int, order: int) -> SeriesZ:
    """The row generating function sum_k w(t, k) x^k from the table."""
    return SeriesZ(order, [w_recursive(t, k) for k in range(order + 1)])


def series_identities(order: int) -> dict[str, bool]:
    """Verify the generating-function identities modulo x^(order+1) (and
    y-degree <= order for the bivariate one).  Returns pass/fail per name."""
    if order < 1:
        raise ValueError("order must be at least 1")
    c = catalan_series(order)
    x = SeriesZ.x(order)
    one = SeriesZ.one(order)
    report: dict[str, bool] = {}

    # x c(x)^2 - c(x) + 1 = 0
    report["catalan_functional_equation"] = (x * c * c - c + one).is_zero()

    # W_t(x) = c(x)^(t+1), coefficients straight from the table.
    ok = True
    power = c
    for t in range(order + 1):
        ok = ok and (w_row_series(t, order) == power)
        power = power * c
    report["row_series_are_catalan_powers"] = ok

    # Bivariate: (1 - y c(x)) * sum_t y^t W_t(x) = c(x), i.e. each y-degree
    # coefficient of the product telescopes; rows come from the table.
    rows = [w_row_series(t, order) for t in range(order + 1)]
    ok = rows[0] == c
    for t in range(1, order + 1):
        ok = ok and (rows[t] - c * rows[t - 1]).is_zero()
    report["bivariate_geometric_identity"] = ok

    # Convolution w(t, k) = sum_l w(t-1, l) c(k-l).
    ok = True
    for t in range(1, order + 1):
        for k in range(order + 1):
            s = sum(w_recursive(t - 1, l) * catalan(k - l) for l in range(k + 1))
            ok = ok and s == w_recursive(t, k)
    report["row_convolution"] = ok
    return report


def two_step_recursion_check(max_t: int, max_n: int) -> bool:
    """w_t(n+2) = w_{t-2}(n) + 2 w_t(n) + w_{t+2}(n) for t >= 1, and
    w_0(n+2) = w_0(n) + w_2(n); checked against the table."""
    for n in range(max_n + 1):
        if w_dim(0, n + 2) != w_dim(0, n) + w_dim(2, n):
            return False
        for t in range(1, max_t + 1):
            lhs = w_dim(t, n + 2)
            rhs = w_dim(t - 2, n) + 2 * w_dim(t, n) + w_dim(t + 2, n)
            if lhs != rhs:
                return False
    return True


def fibonacci(k: int) -> int:
    """F_1 = F_2 = 1."""
    if k < 1:
        raise ValueError("Fibonacci indices start at 1")
    a, b = 1, 1
    for _ in range(k - 1):
        a, b = b, a + b
    return a
