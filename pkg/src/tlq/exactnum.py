"""Exact arithmetic: integer Laurent polynomials, the cyclotomic fields
Q(zeta_{2l}), quantum integers and exact dense linear algebra.

Every scalar used by the algebra layers is a ``CycNum``: a residue modulo the
2l-th cyclotomic polynomial with rational coefficients, stored as an integer
coefficient vector over a common denominator.  There is no floating point
anywhere in this module; approximations exist only for display purposes.

All values are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence


# ---------------------------------------------------------------------------
# Integer Laurent polynomials
# ---------------------------------------------------------------------------


class LaurentPolyZ:
    """A Laurent polynomial with integer coefficients, keyed by exponent.

    Zero coefficients are never stored, which makes equality structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.coeffs: dict[int, int] = {
            e: c for e, c in (coeffs or {}).items() if c
        }

    @classmethod
    def zero(cls) -> LaurentPolyZ:
        return cls()

    @classmethod
    def one(cls) -> LaurentPolyZ:
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPolyZ:
        return cls({exponent: coefficient})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPolyZ({0: other})
        if not isinstance(other, LaurentPolyZ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: LaurentPolyZ) -> LaurentPolyZ:
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolyZ(out)

    def __neg__(self) -> LaurentPolyZ:
        return LaurentPolyZ({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: LaurentPolyZ) -> LaurentPolyZ:
        return self + (-other)

    def __mul__(self, other: LaurentPolyZ | int) -> LaurentPolyZ:
        if isinstance(other, int):
            return LaurentPolyZ({e: c * other for e, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolyZ(out)

    __rmul__ = __mul__

    def min_exponent(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self.coeffs)

    def max_exponent(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self.coeffs)

    def divexact(self, other: LaurentPolyZ) -> LaurentPolyZ:
        """Exact division; raises ``ArithmeticError`` if the quotient is not a
        Laurent polynomial with integer coefficients."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPolyZ()
        # Shift both to ordinary polynomials and long-divide.
        sa, sb = self.min_exponent(), other.min_exponent()
        da, db = self.max_exponent() - sa, other.max_exponent() - sb
        if da < db:
            raise ArithmeticError("non-exact Laurent division")
        num = [self.coeffs.get(sa + k, 0) for k in range(da + 1)]
        den = [other.coeffs.get(sb + k, 0) for k in range(db + 1)]
        lead = den[db]
        quot = [0] * (da - db + 1)
        for k in range(da - db, -1, -1):
            top = num[k + db]
            if top % lead:
                raise ArithmeticError("non-exact Laurent division")
            q = top // lead
            quot[k] = q
            if q:
                for j in range(db + 1):
                    num[k + j] -= q * den[j]
        if any(num):
            raise ArithmeticError("non-exact Laurent division")
        shift = sa - sb
        return LaurentPolyZ({shift + k: c for k, c in enumerate(quot) if c})

    def evaluate(self, x: "CycNum") -> "CycNum":
        """Evaluate at a field element (a ring homomorphism)."""
        field = x.field
        total = field.zero
        for e, c in self.coeffs.items():
            total = total + (x ** e) * c
        return total

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                parts.append(f"{c:+d}")
            elif e == 1:
                parts.append(f"{c:+d}*x")
            else:
                parts.append(f"{c:+d}*x^{e}")
        s = " ".join(parts)
        return s[1:] if s.startswith("+") else s


def quantum_int(m: int, at: "CycNum | None" = None) -> "LaurentPolyZ | CycNum":
    """The quantum integer [m]_x = x^{m-1} + x^{m-3} + ... + x^{-(m-1)}.

    Symbolic when ``at`` is None, otherwise evaluated at the field element.
    [0] = 0.
    """
    if m < 0:
        raise ValueError("quantum integers are defined for m >= 0")
    sym = LaurentPolyZ({m - 1 - 2 * j: 1 for j in range(m)})
    if at is None:
        return sym
    return sym.evaluate(at)


def quantum_factorial(m: int) -> LaurentPolyZ:
    """[m]_x! = [m]_x [m-1]_x ... [1]_x, with [0]! = 1."""
    if m < 0:
        raise ValueError("quantum factorials are defined for m >= 0")
    out = LaurentPolyZ.one()
    for j in range(1, m + 1):
        out = out * quantum_int(j)
    return out


# ---------------------------------------------------------------------------
# Cyclotomic fields
# ---------------------------------------------------------------------------


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials (den monic up to sign at top).
    num = list(num)
    dn, dd = len(num) - 1, len(den) - 1
    lead = den[dd]
    quot = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        q, r = divmod(num[k + dd], lead)
        if r:
            raise ArithmeticError("non-exact polynomial division")
        quot[k] = q
        for j in range(dd + 1):
            num[k + j] -= q * den[j]
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    # x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class CyclotomicField:
    """The field Q(zeta_{2l}) for a fixed level l >= 3.

    The designated elements are q = zeta^{l+1} (so q = -exp(i*pi/l), q^2 has
    multiplicative order l) and the loop scalar delta = -(q + 1/q) =
    2 cos(pi/l) > 0.

    Use :func:`cyclotomic_field` to obtain the shared instance for a level.
    """

    def __init__(self, level: int):
        if level < 3:
            raise ValueError("level must be at least 3")
        self.level = level
        self.modulus = cyclotomic_polynomial(2 * level)
        self.degree = len(self.modulus) - 1
        d = self.degree
        # x^(d+k) mod Phi as integer rows, for k = 0 .. d-2.
        red: list[tuple[int, ...]] = []
        base = tuple(-c for c in self.modulus[:d])
        red.append(base)
        for _ in range(1, d - 1):
            prev = red[-1]
            row = [0] + list(prev[: d - 1])
            top = prev[d - 1]
            if top:
                row = [row[j] + top * base[j] for j in range(d)]
            red.append(tuple(row))
        self._red = tuple(red)
        self.zero = CycNum(self, 1, (0,) * d)
        self.one = CycNum(self, 1, (1,) + (0,) * (d - 1))
        self.zeta = self.from_zeta_power(1)
        self.q = self.from_zeta_power(level + 1)
        self.q_inv = self.from_zeta_power(level - 1)
        self.delta = -(self.q + self.q_inv)
        self._delta_minpoly: tuple[int, ...] | None = None

    # -- constructors -------------------------------------------------

    def from_int(self, value: int) -> CycNum:
        return CycNum(self, 1, (value,) + (0,) * (self.degree - 1))

    def from_fraction(self, value: Fraction | int) -> CycNum:
        value = Fraction(value)
        num = (value.numerator,) + (0,) * (self.degree - 1)
        return CycNum._make(self, value.denominator, list(num))

    def from_coeffs(self, den: int, num: Sequence[int]) -> CycNum:
        if len(num) != self.degree:
            raise ValueError("coefficient vector has the wrong length")
        return CycNum._make(self, den, list(num))

    def from_zeta_power(self, k: int) -> CycNum:
        k %= 2 * self.level
        vec = [0] * self.degree
        if k < self.degree:
            vec[k] = 1
            return CycNum(self, 1, tuple(vec))
        # zeta^k with k >= degree: reduce x^k by repeated squaring on CycNums.
        base = [0] * self.degree
        base[1] = 1
        out = self.one
        z = CycNum(self, 1, tuple(base))
        e = k
        while e:
            if e & 1:
                out = out * z
            z = z * z
            e >>= 1
        return out

    # -- delta as an algebraic integer --------------------------------

    def delta_minpoly(self) -> tuple[int, ...]:
        """Monic integer minimal polynomial of delta (low to high)."""
        if self._delta_minpoly is None:
            powers = [self.one]
            while True:
                powers.append(powers[-1] * self.delta)
                rel = _rational_dependency([p.as_fractions() for p in powers])
                if rel is not None:
                    lead = rel[-1]
                    coeffs = [c / lead for c in rel]
                    assert all(c.denominator == 1 for c in coeffs)
                    self._delta_minpoly = tuple(int(c) for c in coeffs)
                    break
        return self._delta_minpoly

    def __repr__(self) -> str:
        return f"CyclotomicField(level={self.level})"


def _rational_dependency(
    vectors: list[tuple[Fraction, ...]],
) -> tuple[Fraction, ...] | None:
    """If the last vector depends on the previous ones, return combination
    coefficients (c_0, ..., c_{k-1}, 1-like lead) with sum c_i v_i = 0."""
    k = len(vectors)
    d = len(vectors[0])
    # Solve sum_{i<k-1} a_i v_i = -v_{k-1} by elimination on the transpose.
    cols = k - 1
    aug = [[vectors[i][j] for i in range(cols)] + [-vectors[k - 1][j]] for j in range(d)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, d) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(d):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    # Inconsistent system -> independent.
    for i in range(r, d):
        if aug[i][cols] != 0:
            return None
    sol = [Fraction(0)] * cols
    for row, c in enumerate(pivots):
        sol[c] = aug[row][cols]
    return tuple(sol) + (Fraction(1),)


@lru_cache(maxsize=None)
def cyclotomic_field(level: int) -> CyclotomicField:
    """Shared field instance for a level (CycNums compare within a level)."""
    return CyclotomicField(level)


class CycNum:
    """An element of Q(zeta_{2l}): integer coefficient vector over a common
    positive denominator, reduced modulo Phi_{2l} and normalized so that
    gcd(den, coefficients) = 1.  Zero has denominator 1."""

    __slots__ = ("field", "den", "num")

    def __init__(self, field: CyclotomicField, den: int, num: tuple[int, ...]):
        self.field = field
        self.den = den
        self.num = num

    @staticmethod
    def _make(field: CyclotomicField, den: int, num: list[int]) -> CycNum:
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            num = [-v for v in num]
        g = den
        for v in num:
            if v:
                g = math.gcd(g, v)
        if g > 1:
            den //= g
            num = [v // g for v in num]
        if not any(num):
            return CycNum(field, 1, (0,) * len(num))
        return CycNum(field, den, tuple(num))

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return any(self.num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field.from_fraction(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return (
            self.field.level == other.field.level
            and self.den == other.den
            and self.num == other.num
        )

    def __hash__(self) -> int:
        return hash((self.field.level, self.den, self.num))

    # -- ring operations ------------------------------------------------

    def _coerce(self, other) -> "CycNum | None":
        if isinstance(other, CycNum):
            if other.field.level != self.field.level:
                raise ValueError("mixed cyclotomic levels")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, Fraction):
            return self.field.from_fraction(other)
        return None

    def __add__(self, other) -> CycNum:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        da, db = self.den, other.den
        if da == db:
            return CycNum._make(
                self.field, da, [a + b for a, b in zip(self.num, other.num)]
            )
        g = math.gcd(da, db)
        fa, fb = db // g, da // g
        return CycNum._make(
            self.field,
            da // g * db,
            [a * fa + b * fb for a, b in zip(self.num, other.num)],
        )

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        return CycNum(self.field, self.den, tuple(-v for v in self.num))

    def __sub__(self, other) -> CycNum:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> CycNum:
        return (-self) + other

    def __mul__(self, other) -> CycNum:
        if isinstance(other, int):
            return CycNum._make(self.field, self.den, [v * other for v in self.num])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = self.field.degree
        na, nb = self.num, other.num
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(na):
            if ai:
                for j, bj in enumerate(nb):
                    if bj:
                        prod[i + j] += ai * bj
        out = prod[:d]
        red = self.field._red
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                row = red[k - d]
                for j in range(d):
                    if row[j]:
                        out[j] += c * row[j]
        return CycNum._make(self.field, self.den * other.den, out)

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        """Multiplicative inverse via the extended Euclidean algorithm in
        Q[x] modulo the cyclotomic polynomial."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        d = self.field.degree
        den = Fraction(self.den)
        a = [Fraction(v) / den for v in self.num]
        m = [Fraction(c) for c in self.field.modulus]
        # Extended gcd of a and m over Q[x]; m is irreducible so gcd is 1.
        r0, r1 = list(m), list(a)
        t0: list[Fraction] = [Fraction(0)]
        t1: list[Fraction] = [Fraction(1)]
        while True:
            r1 = _poly_trim(r1)
            if len(r1) == 1 and r1[0] == 0:
                raise ZeroDivisionError("element is not invertible")
            if len(r1) == 1:
                const = r1[0]
                inv = [c / const for c in t1]
                break
            q, r = _poly_divmod_q(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, _poly_sub_q(t0, _poly_mul_q(q, t1))
        inv = inv + [Fraction(0)] * (d - len(inv))
        common = math.lcm(*(c.denominator for c in inv)) if inv else 1
        vec = [int(c * common) for c in inv[:d]]
        return CycNum._make(self.field, common, vec)

    def __truediv__(self, other) -> CycNum:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> CycNum:
        return self.inverse() * other

    def __pow__(self, exponent: int) -> CycNum:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out = self.field.one
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- conversions ----------------------------------------------------

    def as_fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.den) for v in self.num)

    def approx(self) -> complex:
        """Floating approximation, for display only."""
        z = cmath.exp(1j * cmath.pi / self.field.level)
        total = 0j
        for k, v in enumerate(self.num):
            if v:
                total += v * z**k
        return total / self.den

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, v in enumerate(self.num):
            if not v:
                continue
            if k == 0:
                parts.append(f"{v:+d}")
            elif k == 1:
                parts.append(f"{v:+d}z")
            else:
                parts.append(f"{v:+d}z^{k}")
        s = " ".join(parts)
        s = s[1:] if s.startswith("+") else s
        if self.den != 1:
            s = f"({s})/{self.den}"
        return s


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_divmod_q(
    a: list[Fraction], b: list[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    b = _poly_trim(list(b))
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv
        q[k] = c
        if c:
            for j in range(len(b)):
                a[k + j] -= c * b[j]
    return q, _poly_trim(a)


def _poly_mul_q(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_sub_q(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


# ---------------------------------------------------------------------------
# Exact dense matrices and rank
# ---------------------------------------------------------------------------


class ExactMatrix:
    """A dense matrix over a cyclotomic field with exact rank computations."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: CyclotomicField, rows: Sequence[Sequence[CycNum]]):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def zeros(cls, field: CyclotomicField, nrows: int, ncols: int) -> ExactMatrix:
        return cls(field, [[field.zero] * ncols for _ in range(nrows)])

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(
            self.field, [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        )

    def rank(self) -> int:
        """Exact rank by Gaussian elimination, first-nonzero pivoting."""
        return _eliminate_rank([list(r) for r in self.rows], self.ncols)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.nrows}x{self.ncols}, level={self.field.level})"


def _eliminate_rank(rows: list[list[CycNum]], ncols: int) -> int:
    rank = 0
    nrows = len(rows)
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivrow = rows[rank]
        inv = pivrow[col].inverse()
        for i in range(rank + 1, nrows):
            entry = rows[i][col]
            if entry:
                factor = entry * inv
                row = rows[i]
                for j in range(col, ncols):
                    if pivrow[j]:
                        row[j] = row[j] - factor * pivrow[j]
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_by_columns(matrix: ExactMatrix) -> int:
    """A second, independently coded exact rank: column-major elimination on
    the transpose with last-nonzero pivot choice.  Used as a cross-check."""
    cols = [
        [matrix.rows[i][j] for i in range(matrix.nrows)] for j in range(matrix.ncols)
    ]
    rank = 0
    ncols = len(cols)
    nrows = matrix.nrows
    for pos in range(nrows - 1, -1, -1):
        piv = None
        for k in range(len(cols) - 1, rank - 1, -1):
            if cols[k][pos]:
                piv = k
                break
        if piv is None:
            continue
        cols[rank], cols[piv] = cols[piv], cols[rank]
        pivcol = cols[rank]
        inv = pivcol[pos].inverse()
        for k in range(rank + 1, ncols):
            entry = cols[k][pos]
            if entry:
                factor = entry * inv
                colk = cols[k]
                for i in range(pos + 1):
                    if pivcol[i]:
                        colk[i] = colk[i] - factor * pivcol[i]
        rank += 1
        if rank == ncols:
            break
    return rank
