"""Certified exact rank computations for integer matrices.

The exact logic is one-sided bounds that must meet:

* rank mod p is always an exact *lower* bound for the rank over Q (a nonzero
  r x r minor mod p is the image of a nonzero integer minor under the ring
  homomorphism Z -> GF(p));
* the matching *upper* bound is a column-span certificate: an exact rational
  solution X of M[:, pivot] @ X = M[:, rest], produced by p-adic (Dixon)
  lifting and then verified exactly by multi-modular congruences whose
  combined modulus exceeds a rigorous magnitude bound.

If the two bounds do not meet (an unlucky prime), the computation retries
with the next prime; it never returns an unverified answer.  numpy float64
is used purely as an exact integer carrier: every intermediate value is kept
below 2**53 by construction, with runtime asserts.
"""

from __future__ import annotations

import math
from typing import Iterator, Sequence

import numpy as np

# Dot products in cascaded reductions are capped at this length so that
# length * (p-1)^2 < 2**53 holds for all working primes.
_CHUNK = 512
_PRIME_LO = 1_500_000
_PRIME_HI = 2_100_000
_F64_SAFE = 1 << 53

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3 * 10**24."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes(start: int, residue: int = 0, modulus: int = 1) -> Iterator[int]:
    """Primes >= start congruent to residue mod modulus, ascending."""
    n = start
    if modulus > 1:
        n += (residue - n) % modulus
        step = modulus
    else:
        step = 1
    while True:
        if is_probable_prime(n):
            yield n
        n += step


def working_primes(order: int = 1, skip: int = 0) -> Iterator[int]:
    """Deterministic sequence of f64-safe primes; when ``order`` > 1 they are
    congruent to 1 mod order so GF(p) contains the needed roots of unity."""
    gen = primes(_PRIME_LO, 1 % max(order, 1), max(order, 1))
    for _ in range(skip):
        next(gen)
    for p in gen:
        if p > _PRIME_HI:
            raise ArithmeticError("exhausted the working prime range")
        yield p


def root_of_unity(p: int, order: int) -> int:
    """An element of GF(p) of exact multiplicative order ``order``."""
    if (p - 1) % order:
        raise ValueError("no such root exists")
    factors = _prime_factors(order)
    for a in range(2, p):
        r = pow(a, (p - 1) // order, p)
        if all(pow(r, order // f, p) != 1 for f in factors):
            return r
    raise ArithmeticError("unreachable: no primitive root found")


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Incremental row echelon over GF(p)
# ---------------------------------------------------------------------------


class ModpEchelon:
    """Incremental row-echelon basis over GF(p).

    Rows are stored in insertion blocks.  Every stored row is fully reduced
    against all pivot columns that existed when it was inserted, and rows of
    one block are mutually reduced; cascading block-wise matmuls therefore
    reduce a new batch completely.  All arithmetic stays below 2**53.
    """

    def __init__(self, ncols: int, p: int):
        if _CHUNK * (p - 1) ** 2 >= _F64_SAFE:
            raise ValueError("prime too large for exact f64 carriers")
        self.ncols = ncols
        self.p = p
        self.blocks: list[tuple[np.ndarray, np.ndarray]] = []
        self.pivot_cols: list[int] = []
        self.pivot_origins: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)

    def reduce(self, batch: np.ndarray) -> np.ndarray:
        """Return the batch reduced against the current basis (a copy)."""
        p = self.p
        b = np.asarray(batch, dtype=np.float64) % p
        for rows, cols in self.blocks:
            coeff = b[:, cols]
            if coeff.any():
                b = (b - coeff @ rows) % p
        return b

    def add_rows(
        self, batch: np.ndarray, origins: Sequence[int] | None = None
    ) -> np.ndarray:
        """Insert a batch of rows; returns the newly added (reduced) rows."""
        p = self.p
        nb = len(batch)
        if nb == 0:
            return np.zeros((0, self.ncols))
        if nb > _CHUNK:
            added = []
            for k in range(0, nb, _CHUNK):
                sub = None if origins is None else origins[k : k + _CHUNK]
                added.append(self.add_rows(batch[k : k + _CHUNK], sub))
            return np.vstack(added)
        b = self.reduce(batch)
        new_rows: list[np.ndarray] = []
        new_cols: list[int] = []
        for k in range(nb):
            row = b[k]
            nz = np.nonzero(row)[0]
            if nz.size == 0:
                continue
            c = int(nz[0])
            inv = pow(int(row[c]), p - 2, p)
            row = (row * inv) % p
            b[k] = row
            rest = b[k + 1 :]
            if rest.size:
                f = rest[:, c].copy()
                if f.any():
                    rest -= np.outer(f, row)
                    rest %= p
            # Back-reduce earlier new rows so the block is mutually reduced.
            for j, prow in enumerate(new_rows):
                v = prow[c]
                if v:
                    new_rows[j] = (prow - v * row) % p
            new_rows.append(row.copy())
            new_cols.append(c)
            self.pivot_cols.append(c)
            self.pivot_origins.append(-1 if origins is None else int(origins[k]))
        if not new_rows:
            return np.zeros((0, self.ncols))
        block = np.array(new_rows)
        self.blocks.append((block, np.array(new_cols, dtype=np.intp)))
        return block


def modp_rank_with_pivots(
    m: np.ndarray, p: int
) -> tuple[int, list[int], list[int]]:
    """Rank of an integer matrix mod p plus pivot row/column indices.

    The returned r x r minor M[pivot_rows][:, pivot_cols] is nonsingular
    mod p, hence nonsingular over Q.
    """
    ech = ModpEchelon(m.shape[1], p)
    for k in range(0, m.shape[0], _CHUNK):
        batch = np.asarray(m[k : k + _CHUNK], dtype=np.float64)
        ech.add_rows(batch, range(k, min(k + _CHUNK, m.shape[0])))
    return ech.rank, list(ech.pivot_origins), list(ech.pivot_cols)


def _modp_inverse(s: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a nonsingular matrix over GF(p), as float64 residues."""
    r = s.shape[0]
    aug = np.zeros((r, 2 * r))
    aug[:, :r] = np.asarray(s, dtype=np.float64) % p
    aug[np.arange(r), np.arange(r) + r] = 1.0
    for c in range(r):
        nz = np.nonzero(aug[c:, c])[0]
        if nz.size == 0:
            raise ArithmeticError("matrix is singular mod p")
        i = c + int(nz[0])
        if i != c:
            aug[[c, i]] = aug[[i, c]]
        inv = pow(int(aug[c, c]), p - 2, p)
        aug[c] = (aug[c] * inv) % p
        col = aug[:, c].copy()
        col[c] = 0.0
        mask = np.nonzero(col)[0]
        if mask.size:
            aug[mask] = (aug[mask] - np.outer(col[mask], aug[c])) % p
    return aug[:, r:]


# ---------------------------------------------------------------------------
# Dixon lifting and certified rank
# ---------------------------------------------------------------------------


def _hadamard_bits(s: np.ndarray, rhs: np.ndarray) -> int:
    """Upper bound on log2 of any minor of [S | rhs] (Cramer magnitudes)."""
    r = s.shape[0]
    bits = 0
    half_log_r = 0.5 * math.log2(r + 1) + 1
    for i in range(r):
        m = max(int(np.max(np.abs(s[i]))), int(np.max(np.abs(rhs[i]))) if rhs.size else 0, 1)
        bits += m.bit_length() + half_log_r
    return int(bits) + 2


def dixon_solve(
    s: np.ndarray, rhs: np.ndarray, p: int
) -> tuple[list[list[int]], list[int]]:
    """Solve S X = RHS exactly over Q by p-adic lifting.

    S must be nonsingular mod p.  Returns (numerators, denominators) with one
    common denominator per column: X[:, j] = num[:, j] / den[j].  The result
    is *not* self-certifying; callers must verify the product identity.
    """
    r, mcols = rhs.shape
    max_s = int(np.max(np.abs(s))) if s.size else 0
    assert r * max_s * (p - 1) < _F64_SAFE, "entries too large for lifting"
    sinv = _modp_inverse(s, p)
    sf = np.asarray(s, dtype=np.float64)
    bits = 2 * _hadamard_bits(s, rhs) + 8
    steps = max(2, int(bits / math.log2(p)) + 2)
    carry = np.asarray(rhs, dtype=np.int64).copy()
    digits: list[np.ndarray] = []
    for _ in range(steps):
        x = _chunked_matmul_mod(sinv, (carry % p).astype(np.float64), p)
        digits.append(x.astype(np.int64))
        t = sf @ x
        assert t.size == 0 or np.max(np.abs(t)) < _F64_SAFE
        carry -= t.astype(np.int64)
        q, rem = np.divmod(carry, p)
        assert not rem.any(), "lifting residue must divide exactly"
        carry = q
    mod = p**steps
    bound = math.isqrt(mod // 2)
    nums: list[list[int]] = []
    dens: list[int] = []
    # Horner combination per entry, then rational reconstruction per column.
    for j in range(mcols):
        col_nums: list[tuple[int, int]] = []
        for i in range(r):
            acc = 0
            for d in reversed(digits):
                acc = acc * p + int(d[i, j])
            frac = _rational_reconstruct(acc, mod, bound)
            if frac is None:
                raise ArithmeticError("rational reconstruction failed")
            col_nums.append(frac)
        den = 1
        for _, d in col_nums:
            den = den * d // math.gcd(den, d)
        nums.append([n * (den // d) for n, d in col_nums])
        dens.append(den)
    return nums, dens


def _rational_reconstruct(a: int, m: int, bound: int) -> tuple[int, int] | None:
    """Wang's rational reconstruction: n/d = a (mod m), |n|, d <= bound."""
    r0, r1 = m, a % m
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0:
        return None
    if t1 < 0:
        t1, r1 = -t1, -r1
    if t1 > bound or math.gcd(r1, t1) != 1:
        return None
    return r1, t1


def verify_product_identity(
    a: np.ndarray,
    x_num: list[list[int]],
    x_den: list[int],
    b: np.ndarray,
) -> bool:
    """Exactly verify A @ (X_num / X_den) == B using multi-modular checks.

    The verification is rigorous: the congruences are checked modulo a set of
    primes whose product exceeds twice a magnitude bound on both sides.
    """
    w, r = a.shape
    mcols = b.shape[1]
    if r == 0:
        return not np.asarray(b).any()
    max_a = int(np.max(np.abs(a))) if a.size else 0
    max_b = int(np.max(np.abs(b))) if b.size else 0
    max_x = max((abs(v) for col in x_num for v in col), default=0)
    max_d = max(x_den, default=1)
    lhs_bits = (r * max_a * max_x).bit_length() if max_x else 1
    rhs_bits = (max_b * max_d).bit_length() if max_b else 1
    need = max(lhs_bits, rhs_bits) + 2
    have = 0
    xt = [[x_num[j][i] for j in range(mcols)] for i in range(r)]
    small = max_x < (1 << 62)
    if small:
        x_arr = np.array(xt, dtype=np.int64)
    den_arr = [int(d) for d in x_den]
    for q in primes(_PRIME_LO):
        if small:
            xq = (x_arr % q).astype(np.float64)
        else:
            xq = np.array([[v % q for v in row] for row in xt], dtype=np.float64)
        aq = (np.asarray(a, dtype=np.int64) % q).astype(np.float64)
        bq = (np.asarray(b, dtype=np.int64) % q).astype(np.float64)
        dq = np.array([d % q for d in den_arr], dtype=np.float64)
        lhs = _chunked_matmul_mod(aq, xq, q)
        rhs = (bq * dq[None, :]) % q
        if not np.array_equal(lhs, rhs):
            return False
        have += q.bit_length() - 1
        if have > need:
            return True
    raise ArithmeticError("unreachable: prime supply is infinite")


def _chunked_matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """(a @ b) % p with dot products split so partial sums stay below 2**53."""
    r = a.shape[1]
    out = np.zeros((a.shape[0], b.shape[1]))
    for k in range(0, r, _CHUNK):
        out = (out + a[:, k : k + _CHUNK] @ b[k : k + _CHUNK]) % p
    return out


def certified_rank(matrix: np.ndarray, attempts: int = 3) -> int:
    """Exact rank of an integer matrix, certified in both directions.

    Las Vegas: an unlucky prime can only trigger a retry, never a wrong
    answer.  Raises ``ArithmeticError`` if certification fails repeatedly.
    """
    m = np.asarray(matrix, dtype=np.int64)
    if m.size == 0:
        return 0
    assert int(np.max(np.abs(m))) < (1 << 40), "entries too large"
    for skip in range(attempts):
        p = next(working_primes(skip=skip))
        r, pr, pc = modp_rank_with_pivots(m % p, p)
        if r == min(m.shape):
            return r
        if r == 0:
            if not m.any():
                return 0
            continue
        npc = sorted(set(range(m.shape[1])) - set(pc))
        s = m[np.ix_(pr, pc)]
        rhs = m[np.ix_(pr, npc)]
        try:
            nums, dens = dixon_solve(s, rhs, p)
        except ArithmeticError:
            continue
        if verify_product_identity(m[:, pc], nums, dens, m[:, npc]):
            return r
    raise ArithmeticError("rank certification failed; matrix may be pathological")
