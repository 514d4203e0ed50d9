"""The even Clifford algebra on n generators with gamma_i^2 = 1/2, blade
arithmetic over the level-4 cyclotomic field (which contains both i and
sqrt(2) = delta), and the homomorphism from TL_n(q) at level 4.

Blades are subsets of {1..n} encoded as bitmasks; the reordering sign is the
parity of the transpositions needed to sort a concatenation, and each
repeated generator contracts to a factor 1/2.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping

import numpy as np

from . import _intlinalg
from .diagram import compose_pairings, generator_pairing, identity_pairing, tl_pairings
from .exactnum import CycNum, CyclotomicField, ExactMatrix, cyclotomic_field
from .tlalg import TLElement, _cyc_mod_p, _field_mod_p

_LEVEL = 4


def _field() -> CyclotomicField:
    return cyclotomic_field(_LEVEL)


def _mul_basis(j: int, k: int) -> tuple[int, int, int]:
    """(result mask, sign, contractions) for gamma_J gamma_K."""
    swaps = 0
    rest = k
    while rest:
        low = rest & (-rest)
        pos = low.bit_length()  # bits strictly above this position in j
        swaps += (j >> pos).bit_count()
        rest ^= low
    return j ^ k, (-1 if swaps & 1 else 1), (j & k).bit_count()


@lru_cache(maxsize=None)
def _half_powers(upto: int) -> tuple[CycNum, ...]:
    half = _field().from_fraction(Fraction(1, 2))
    out = [_field().one]
    for _ in range(upto):
        out.append(out[-1] * half)
    return tuple(out)


class BladeElement:
    """A linear combination of blades gamma_J over Q(zeta_8)."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[int, CycNum] | None = None):
        self.n = n
        self.terms: dict[int, CycNum] = {}
        if terms:
            for mask, c in terms.items():
                if mask >> n:
                    raise ValueError("blade uses a generator beyond n")
                if c:
                    self.terms[mask] = c

    @classmethod
    def zero(cls, n: int) -> BladeElement:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> BladeElement:
        return cls(n, {0: _field().one})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BladeElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __add__(self, other: BladeElement) -> BladeElement:
        out = dict(self.terms)
        for mask, c in other.terms.items():
            s = out.get(mask)
            out[mask] = c if s is None else s + c
        return BladeElement(self.n, out)

    def __neg__(self) -> BladeElement:
        return BladeElement(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: BladeElement) -> BladeElement:
        return self + (-other)

    def scale(self, scalar) -> BladeElement:
        if isinstance(scalar, (int, Fraction)):
            scalar = _field().from_fraction(Fraction(scalar))
        return BladeElement(self.n, {m: c * scalar for m, c in self.terms.items()})

    def __rmul__(self, scalar) -> BladeElement:
        if isinstance(scalar, (int, Fraction, CycNum)):
            return self.scale(scalar)
        return NotImplemented

    def __mul__(self, other) -> BladeElement:
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        if not isinstance(other, BladeElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("generator count mismatch")
        halves = _half_powers(self.n)
        out: dict[int, CycNum] = {}
        for j, cj in self.terms.items():
            for k, ck in other.terms.items():
                mask, sign, contractions = _mul_basis(j, k)
                c = cj * ck
                if contractions:
                    c = c * halves[contractions]
                if sign < 0:
                    c = -c
                s = out.get(mask)
                out[mask] = c if s is None else s + c
        return BladeElement(self.n, out)

    def constant_term(self) -> CycNum:
        return self.terms.get(0, _field().zero)

    def is_even(self) -> bool:
        return all(m.bit_count() % 2 == 0 for m in self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = []
        for m in sorted(self.terms):
            gens = "".join(f"g{i+1}" for i in range(self.n) if m >> i & 1) or "1"
            names.append(f"({self.terms[m]!r})*{gens}")
        return " + ".join(names)


def blade_multiply(a: BladeElement, b: BladeElement) -> BladeElement:
    return a * b


def gamma(n: int, i: int) -> BladeElement:
    """The generator gamma_i (1-based)."""
    if not 1 <= i <= n:
        raise IndexError("generator index out of range")
    return BladeElement(n, {1 << (i - 1): _field().one})


def omega(n: int, i: int, j: int) -> BladeElement:
    """omega_ij = (gamma_i gamma_j - gamma_j gamma_i) / 2."""
    gi, gj = gamma(n, i), gamma(n, j)
    return (gi * gj - gj * gi).scale(Fraction(1, 2))


def constant_term_trace(a: BladeElement) -> CycNum:
    """The canonical trace of the even Clifford algebra: the coefficient of
    the empty blade."""
    return a.constant_term()


def phi_generator(n: int, j: int) -> BladeElement:
    """The image of f_j: (1 + 2 i gamma_j gamma_{j+1}) / sqrt(2), with
    i = q^2 and sqrt(2) = delta inside the level-4 field."""
    field = _field()
    dinv = field.delta.inverse()
    mask = (1 << (j - 1)) | (1 << j)
    return BladeElement(n, {0: dinv, mask: dinv * field.q * field.q * 2})


@lru_cache(maxsize=None)
def _phi_table(n: int) -> dict[tuple[int, ...], BladeElement]:
    """phi on every diagram of TL_n, built by loop-free left multiplication
    from the identity (prefixes of reduced words stay loop-free)."""
    gens = [generator_pairing(n, i) for i in range(1, n)]
    gen_images = [phi_generator(n, i) for i in range(1, n)]
    table: dict[tuple[int, ...], BladeElement] = {
        identity_pairing(n): BladeElement.one(n)
    }
    frontier = [identity_pairing(n)]
    while frontier:
        nxt = []
        for pairing in frontier:
            blade = table[pairing]
            for gp, gimg in zip(gens, gen_images):
                product, loops = compose_pairings(n, n, n, pairing, gp)
                if loops == 0 and product not in table:
                    table[product] = gimg * blade
                    nxt.append(product)
        frontier = nxt
    if len(table) != len(tl_pairings(n)):
        raise ArithmeticError("left-multiplication walk missed diagrams")
    return table


def phi(x: TLElement) -> BladeElement:
    """The algebra homomorphism TL_n at level 4 to the even Clifford
    algebra, determined by the generator images."""
    if x.field.level != _LEVEL:
        raise ValueError("phi is defined at level 4")
    table = _phi_table(x.n)
    out = BladeElement.zero(x.n)
    for d, c in x.terms.items():
        out = out + table[d.pairing].scale(c)
    return out


def even_masks(n: int) -> tuple[int, ...]:
    return tuple(m for m in range(1 << n) if m.bit_count() % 2 == 0)


def image_dimension(n: int, method: str = "auto") -> int:
    """Rank of span{phi(D) : D diagram basis} inside the even subalgebra.

    A full mod-p rank of 2^(n-1) is already exact (it meets the dimension of
    the ambient space); otherwise fall back to exact elimination.
    """
    table = _phi_table(n)
    masks = even_masks(n)
    col = {m: k for k, m in enumerate(masks)}
    field = _field()
    if method not in ("auto", "exact"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        p = next(_intlinalg.working_primes(order=2 * _LEVEL))
        _, zpows = _field_mod_p(_LEVEL, p)
        rows = np.zeros((len(table), len(masks)))
        for r, blade in enumerate(table.values()):
            for m, c in blade.terms.items():
                rows[r, col[m]] = _cyc_mod_p(c, p, zpows)
        ech = _intlinalg.ModpEchelon(len(masks), p)
        ech.add_rows(rows)
        if ech.rank == len(masks):
            return ech.rank
    zero = field.zero
    rows_exact = []
    for blade in table.values():
        row = [zero] * len(masks)
        for m, c in blade.terms.items():
            row[col[m]] = c
        rows_exact.append(row)
    return ExactMatrix(field, rows_exact).rank()


def so_commutator_report(n: int) -> dict[str, bool]:
    """Check [w_ij, w_kl] = d_jk w_il - d_jl w_ik - d_ik w_jl + d_il w_jk
    over all index quadruples, plus w_ij = gamma_i gamma_j off the diagonal.
    """
    pair_ok = True
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j and omega(n, i, j) != gamma(n, i) * gamma(n, j):
                pair_ok = False
    comm_ok = True
    om = {(i, j): omega(n, i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            for k in range(1, n + 1):
                for l in range(1, n + 1):
                    if k == l:
                        continue
                    lhs = om[i, j] * om[k, l] - om[k, l] * om[i, j]
                    rhs = BladeElement.zero(n)
                    if j == k:
                        rhs = rhs + om[i, l]
                    if j == l:
                        rhs = rhs - om[i, k]
                    if i == k:
                        rhs = rhs - om[j, l]
                    if i == l:
                        rhs = rhs + om[j, k]
                    if lhs != rhs:
                        comm_ok = False
    return {"omega_is_gamma_pair": pair_ok, "commutator_relations": comm_ok}
