"""The algebra TL_n(q) at a root of unity: diagram linear combinations, the
Jones trace, the Jones-Wenzl idempotent from the hook formula, and the ideal
it generates.

Multiplication convention: ``x * y`` acts as the composite "apply y, then x",
so that ``(x * y) . v = x . (y . v)`` for the cell action defined in
:mod:`tlq.cellrep`.  One closed loop removed during stacking contributes one
factor of delta = -(q + 1/q).

Large-scale ranks (the trace-form Gram matrix and the dimension of the ideal
generated by the Jones-Wenzl idempotent) are certified exactly by a sandwich:
ranks modulo a prime are exact lower bounds, and the exactly verified
inclusion of the ideal in the radical of the trace (tr(E y) = 0 for every
basis diagram y) turns the pair of lower bounds into a two-sided pin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

import numpy as np

from . import _intlinalg
from .combinatorics import catalan
from .diagram import (
    Diagram,
    closure_loops,
    compose_pairings,
    embed_pairing,
    generator_diagram,
    hook_poly,
    identity,
    nesting_forest,
    rotate_to_flat,
    star,
    tl_basis,
    tl_pairings,
)
from .exactnum import CycNum, CyclotomicField, ExactMatrix, cyclotomic_field, quantum_int

# Above this basis size, exact Gaussian elimination on the trace Gram matrix
# is replaced by the certified modular sandwich.
_EXACT_GRAM_LIMIT = 150
# Above this basis size, the ideal dimension switches from the fully exact
# product-span elimination to the sandwich.
_EXACT_IDEAL_LIMIT = 45


class TLElement:
    """A finite linear combination of (n, n)-diagrams over Q(zeta_{2l})."""

    __slots__ = ("n", "field", "terms")

    def __init__(
        self,
        n: int,
        field: CyclotomicField,
        terms: Mapping[Diagram, CycNum] | None = None,
    ):
        self.n = n
        self.field = field
        self.terms: dict[Diagram, CycNum] = {}
        if terms:
            for d, c in terms.items():
                if d.src != n or d.dst != n:
                    raise ValueError("diagram does not live in TL_n")
                if c:
                    self.terms[d] = c

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, n: int, level: int) -> TLElement:
        return cls(n, cyclotomic_field(level))

    @classmethod
    def one(cls, n: int, level: int) -> TLElement:
        field = cyclotomic_field(level)
        return cls(n, field, {identity(n): field.one})

    @classmethod
    def from_diagram(cls, d: Diagram, level: int) -> TLElement:
        field = cyclotomic_field(level)
        return cls(d.src, field, {d: field.one})

    # -- structure ------------------------------------------------------

    def coefficient(self, d: Diagram) -> CycNum:
        return self.terms.get(d, self.field.zero)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TLElement):
            return NotImplemented
        return (
            self.n == other.n
            and self.field.level == other.field.level
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, self.field.level, frozenset(self.terms.items())))

    def _check_compatible(self, other: TLElement):
        if self.n != other.n or self.field.level != other.field.level:
            raise ValueError("strand count or level mismatch")

    # -- linear operations ------------------------------------------------

    def __add__(self, other: TLElement) -> TLElement:
        self._check_compatible(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            s = out.get(d)
            out[d] = c if s is None else s + c
        return TLElement(self.n, self.field, out)

    def __neg__(self) -> TLElement:
        return TLElement(self.n, self.field, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: TLElement) -> TLElement:
        return self + (-other)

    def scale(self, scalar) -> TLElement:
        if isinstance(scalar, (int, Fraction)):
            scalar = self.field.from_fraction(Fraction(scalar))
        return TLElement(
            self.n, self.field, {d: c * scalar for d, c in self.terms.items()}
        )

    def __rmul__(self, scalar) -> TLElement:
        if isinstance(scalar, (int, Fraction, CycNum)):
            return self.scale(scalar)
        return NotImplemented

    # -- multiplication ----------------------------------------------------

    def __mul__(self, other) -> TLElement:
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        if not isinstance(other, TLElement):
            return NotImplemented
        self._check_compatible(other)
        n = self.n
        delta_pow = _delta_powers(self.field, n)
        out: dict[Diagram, CycNum] = {}
        for dy, cy in other.terms.items():
            for dx, cx in self.terms.items():
                # "apply y, then x": stack x on top of y.
                pairing, loops = compose_pairings(n, n, n, dy.pairing, dx.pairing)
                c = cx * cy
                if loops:
                    c = c * delta_pow[loops]
                d = Diagram(n, n, pairing)
                s = out.get(d)
                out[d] = c if s is None else s + c
        return TLElement(n, self.field, out)

    def __pow__(self, k: int) -> TLElement:
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = TLElement.one(self.n, self.field.level)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def star(self) -> TLElement:
        """The * anti-automorphism: reflect every diagram, keep coefficients."""
        return TLElement(
            self.n, self.field, {star(d): c for d, c in self.terms.items()}
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"({c!r})*{d.pairing}" for d, c in sorted(self.terms.items(), key=lambda t: t[0].pairing)]
        return " + ".join(parts)


@lru_cache(maxsize=None)
def _delta_powers(field: CyclotomicField, upto: int) -> tuple[CycNum, ...]:
    out = [field.one]
    for _ in range(upto):
        out.append(out[-1] * field.delta)
    return tuple(out)


def generator(n: int, i: int, level: int) -> TLElement:
    """The cup-cap generator f_i of TL_n with coefficient one."""
    return TLElement.from_diagram(generator_diagram(n, i), level)


def multiply(a: TLElement, b: TLElement) -> TLElement:
    return a * b


def embed(x: TLElement, n: int) -> TLElement:
    """x (x) id^(n-m): juxtapose identity strands on the right."""
    if x.n > n:
        raise ValueError("cannot embed into fewer strands")
    if x.n == n:
        return x
    return TLElement(
        n,
        x.field,
        {
            Diagram(n, n, embed_pairing(x.n, n, d.pairing)): c
            for d, c in x.terms.items()
        },
    )


def jones_trace(x: TLElement) -> CycNum:
    """The Markov trace: each diagram D contributes delta^(c(D) - n) where
    c(D) counts the closed loops of the right-hand closure of D."""
    n = x.n
    field = x.field
    total = field.zero
    if not x.terms:
        return total
    dinv_n = _delta_powers(field, n)[n].inverse()
    pw = _delta_powers(field, 2 * n)
    for d, c in x.terms.items():
        total = total + c * pw[closure_loops(n, d.pairing)]
    return total * dinv_n


# ---------------------------------------------------------------------------
# The Jones-Wenzl idempotent
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class JWIdempotent:
    """The unique idempotent of TL_{l-1} killed by every generator."""

    level: int
    element: TLElement


@lru_cache(maxsize=None)
def jones_wenzl(level: int) -> JWIdempotent:
    """E_{l-1} by the closed hook formula: the coefficient of a diagram D is
    the hook quotient of the arc-nesting forest of its flat rotation,
    evaluated at q."""
    field = cyclotomic_field(level)
    n = level - 1
    for m in range(1, level):
        if quantum_int(m, field.q).is_zero():
            raise ArithmeticError("[m]_q vanished below the level; wrong field setup")
    terms: dict[Diagram, CycNum] = {}
    for d in tl_basis(n):
        coeff = hook_poly(nesting_forest(rotate_to_flat(d))).evaluate(field.q)
        if coeff:
            terms[d] = coeff
    return JWIdempotent(level, TLElement(n, field, terms))


@lru_cache(maxsize=None)
def embedded_jones_wenzl(level: int, n: int) -> TLElement:
    """E_{l-1} (x) id^(n-l+1) as an element of TL_n."""
    if n < level - 1:
        raise ValueError("TL_n does not contain E_{l-1} for n < l-1")
    return embed(jones_wenzl(level).element, n)


def jones_wenzl_by_recursion(level: int) -> TLElement:
    """E_{l-1} by the classical one-strand recursion
    E_{k+1} = E_k + ([k]_q / [k+1]_q) E_k f_k E_k.

    Independent of the closed hook formula; used as a cross-check oracle.
    """
    field = cyclotomic_field(level)
    e = TLElement.one(1, level)
    for k in range(1, level - 1):
        ratio = quantum_int(k, field.q) * quantum_int(k + 1, field.q).inverse()
        ek = embed(e, k + 1)
        fk = generator(k + 1, k, level)
        e = ek + ratio * (ek * fk * ek)
    return e


# ---------------------------------------------------------------------------
# Trace Gram matrix and the ideal dimension
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _closure_exponents(n: int) -> np.ndarray:
    """c(i, j) with tr(D_i D_j) = delta^(c(i,j) - n) over the diagram basis;
    symmetric, cached per strand count, level independent."""
    basis = tl_pairings(n)
    size = len(basis)
    out = np.zeros((size, size), dtype=np.int16)
    for i in range(size):
        pi = basis[i]
        for j in range(i, size):
            pairing, loops = compose_pairings(n, n, n, basis[j], pi)
            c = loops + closure_loops(n, pairing)
            out[i, j] = c
            out[j, i] = c
    out.setflags(write=False)
    return out


def trace_gram_matrix(level: int, n: int) -> ExactMatrix:
    """Gram matrix G[D, D'] = tr(D D') of the Jones trace over the diagram
    basis of TL_n.  Exact; intended for moderate n."""
    field = cyclotomic_field(level)
    expo = _closure_exponents(n)
    size = expo.shape[0]
    pw = _delta_powers(field, 2 * n)
    dinv_n = pw[n].inverse()
    cache = {c: pw[c] * dinv_n for c in np.unique(expo)}
    rows = [[cache[int(expo[i, j])] for j in range(size)] for i in range(size)]
    return ExactMatrix(field, rows)


def _cyc_mod_p(c: CycNum, p: int, zeta_pows: list[int]) -> int:
    total = 0
    for k, v in enumerate(c.num):
        if v:
            total += v * zeta_pows[k]
    if c.den % p == 0:
        raise ArithmeticError("denominator vanishes mod p")
    return total % p * pow(c.den, p - 2, p) % p


def _field_mod_p(level: int, p: int) -> tuple[int, list[int]]:
    """(delta mod p, powers of zeta mod p) for a prime p = 1 mod 2*level."""
    z = _intlinalg.root_of_unity(p, 2 * level)
    field = cyclotomic_field(level)
    zpows = [pow(z, k, p) for k in range(field.degree)]
    dmod = _cyc_mod_p(field.delta, p, zpows)
    if dmod == 0:
        raise ArithmeticError("delta vanishes mod p; retry another prime")
    return dmod, zpows


def _gram_rank_modp(level: int, n: int, p: int, dmod: int) -> int:
    expo = _closure_exponents(n)
    table = np.empty(int(expo.max()) + 1, dtype=np.int64)
    acc = 1
    for c in range(table.size):
        table[c] = acc
        acc = acc * dmod % p
    g = table[expo].astype(np.float64)
    ech = _intlinalg.ModpEchelon(g.shape[1], p)
    ech.add_rows(g)
    return ech.rank


def _assert_trace_kills_ideal(level: int, n: int):
    """Exact check that tr(E y) = 0 for every diagram y of TL_n; by trace
    cyclicity this puts the whole ideal <E> inside the radical of tr."""
    field = cyclotomic_field(level)
    ej = embedded_jones_wenzl(level, n)
    eterms = [(d.pairing, c) for d, c in ej.terms.items()]
    pw = _delta_powers(field, 3 * n)
    dinv_n = pw[n].inverse()
    for y in tl_pairings(n):
        total = field.zero
        for pe, ce in eterms:
            pairing, loops = compose_pairings(n, n, n, y, pe)
            total = total + ce * pw[loops + closure_loops(n, pairing)]
        if total * dinv_n != field.zero:
            raise ArithmeticError(
                f"tr(E y) != 0 at level={level}, n={n}: radical theorem violated"
            )


@lru_cache(maxsize=None)
def _generator_action_maps(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Left and right multiplication by each generator as weighted functional
    graphs on the diagram basis: pairs (target index, loop count) per source.
    """
    basis = tl_pairings(n)
    size = len(basis)
    index = {pairing: i for i, pairing in enumerate(basis)}
    maps = []
    for i in range(1, n):
        gp = generator_diagram(n, i).pairing
        for side in ("left", "right"):
            tgt = np.empty(size, dtype=np.intp)
            loops = np.empty(size, dtype=np.int64)
            for k, pairing in enumerate(basis):
                if side == "left":  # f_i * D
                    res, l = compose_pairings(n, n, n, pairing, gp)
                else:  # D * f_i
                    res, l = compose_pairings(n, n, n, gp, pairing)
                tgt[k] = index[res]
                loops[k] = l
            tgt.setflags(write=False)
            loops.setflags(write=False)
            maps.append((tgt, loops))
    return tuple(maps)


def _ideal_span_rank_modp(
    level: int, n: int, p: int, zpows: list[int], target: int
) -> int:
    """Mod-p rank of the two-sided ideal <E>.

    The ideal is the smallest subspace containing E that is invariant under
    left and right multiplication by the generators, so a breadth-first
    closure of the echelon under those (linear) maps spans exactly the mod-p
    image of <E>.  Deterministic and complete; the result is always an exact
    lower bound for dim <E>, and generically equals it.
    """
    basis = tl_pairings(n)
    size = len(basis)
    index = {pairing: i for i, pairing in enumerate(basis)}
    ej = embedded_jones_wenzl(level, n)
    dmod = _cyc_mod_p(cyclotomic_field(level).delta, p, zpows)
    maps = [
        (tgt, np.array([pow(dmod, int(l), p) for l in loops], dtype=np.float64))
        for tgt, loops in _generator_action_maps(n)
    ]
    seed = np.zeros((1, size))
    for d, c in ej.terms.items():
        seed[0, index[d.pairing]] = _cyc_mod_p(c, p, zpows)
    ech = _intlinalg.ModpEchelon(size, p)
    frontier = ech.add_rows(seed)
    while frontier.size and ech.rank < target:
        candidates = []
        for tgt, w in maps:
            contrib = frontier * w
            out = np.zeros_like(frontier)
            np.add.at(out.T, tgt, contrib.T)
            candidates.append(out % p)
        frontier = ech.add_rows(np.vstack(candidates))
    return ech.rank


@dataclass(frozen=True)
class RadicalSplit:
    """Certified pair: rank of the trace Gram matrix on TL_n and the
    dimension of the ideal generated by the Jones-Wenzl idempotent."""

    level: int
    n: int
    gram_rank: int
    ideal_dim: int


@lru_cache(maxsize=None)
def radical_split(level: int, n: int) -> RadicalSplit:
    """Compute (rank tr-Gram, dim <E>) for TL_n, certified exactly.

    Logic: dim<E> >= s for any mod-p span rank s; rank(G) >= g for the mod-p
    (or exact) Gram rank g; and tr(E y) = 0 for all y (verified exactly)
    forces rank(G) + dim<E> <= dim TL_n.  When g + s = dim TL_n all three
    inequalities are tight, so both numbers are exact.  Primes are retried;
    an unlucky prime can only fail to pin, never mis-certify.
    """
    if n < level - 1:
        raise ValueError("the ideal needs n >= level - 1")
    size = catalan(n)
    _assert_trace_kills_ideal(level, n)
    exact_rank: int | None = None
    if size <= _EXACT_GRAM_LIMIT:
        exact_rank = trace_gram_matrix(level, n).rank()
    last = None
    for skip in range(3):
        p = next(_intlinalg.working_primes(order=2 * level, skip=skip))
        try:
            dmod, zpows = _field_mod_p(level, p)
        except ArithmeticError:
            continue
        rho_g = exact_rank if exact_rank is not None else _gram_rank_modp(level, n, p, dmod)
        target = size - rho_g
        rho_j = _ideal_span_rank_modp(level, n, p, zpows, target)
        if rho_j == target:
            return RadicalSplit(level, n, rho_g, target)
        last = (rho_g, rho_j)
    raise ArithmeticError(
        f"radical split failed to pin at level={level}, n={n}: {last}"
    )


def ideal_dimension(level: int, n: int, method: str = "auto") -> int:
    """dim of the two-sided ideal <E_{l-1}> in TL_n.

    "exact" builds every product a E b over the diagram basis and row-reduces
    the exact coefficient matrix; "pinned" uses the certified sandwich; the
    default picks by size.
    """
    if n < level - 1:
        raise ValueError("the ideal needs n >= level - 1")
    size = catalan(n)
    if method not in ("auto", "exact", "pinned"):
        raise ValueError(f"unknown method {method!r}")
    if method == "exact" or (method == "auto" and size <= _EXACT_IDEAL_LIMIT):
        return _ideal_dimension_exact(level, n)
    return radical_split(level, n).ideal_dim


def _ideal_dimension_exact(level: int, n: int) -> int:
    field = cyclotomic_field(level)
    basis = tl_pairings(n)
    size = len(basis)
    index = {pairing: i for i, pairing in enumerate(basis)}
    ej = embedded_jones_wenzl(level, n)
    eterms = [(d.pairing, c) for d, c in ej.terms.items()]
    pw = _delta_powers(field, 3 * n)
    rows: dict[tuple, list[CycNum]] = {}
    for pa in basis:
        for pb in basis:
            vec = [field.zero] * size
            for pe, ce in eterms:
                mid, l1 = compose_pairings(n, n, n, pb, pe)
                res, l2 = compose_pairings(n, n, n, mid, pa)
                k = index[res]
                vec[k] = vec[k] + ce * pw[l1 + l2]
            key = tuple(
                (k, c.den, c.num) for k, c in enumerate(vec) if not c.is_zero()
            )
            if key and key not in rows:
                rows[key] = vec
    if not rows:
        return 0
    return ExactMatrix(field, list(rows.values())).rank()


def trace_gram_rank(level: int, n: int, method: str = "auto") -> int:
    """Rank of the Jones trace form on TL_n (exactly)."""
    size = catalan(n)
    if method not in ("auto", "exact", "pinned"):
        raise ValueError(f"unknown method {method!r}")
    if method == "exact" or (method == "auto" and size <= _EXACT_GRAM_LIMIT):
        return trace_gram_matrix(level, n).rank()
    if n < level - 1:
        # No idempotent to pin against; the form is nondegenerate here, but
        # compute honestly at full size.
        return trace_gram_matrix(level, n).rank()
    return radical_split(level, n).gram_rank
