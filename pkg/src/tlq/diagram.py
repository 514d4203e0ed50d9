"""Planar Temperley-Lieb (t, n)-diagrams and their combinatorics.

Boundary encoding: a diagram from t to n is a fixed-point-free involution on
the index line 0 .. t+n-1.  Index b < t is the *bottom* point at position
t-1-b (bottom read right to left); index t+j is the *top* point at position j
(left to right).  With the bottom reversed this way, rotating the bottom line
clockwise onto the left of the top line is a pure re-indexing, so planarity
of the diagram is exactly non-crossingness of the involution on the index
line, and the flat (0, t+n)-form of a diagram *is* its pairing tuple.

All functions here are pure and all values immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .exactnum import LaurentPolyZ, quantum_factorial, quantum_int


def _is_noncrossing_involution(pairing: tuple[int, ...]) -> bool:
    size = len(pairing)
    for i, j in enumerate(pairing):
        if not 0 <= j < size or j == i or pairing[j] != i:
            return False
    stack: list[int] = []
    for i, j in enumerate(pairing):
        if j > i:
            stack.append(j)
        elif stack.pop() != i:
            return False
    return True


@dataclass(frozen=True)
class Diagram:
    """A planar diagram from ``src`` bottom points to ``dst`` top points."""

    src: int
    dst: int
    pairing: tuple[int, ...]

    def __post_init__(self):
        if self.src < 0 or self.dst < 0 or (self.src + self.dst) % 2:
            raise ValueError("boundary sizes must be nonnegative of equal parity")
        if len(self.pairing) != self.src + self.dst:
            raise ValueError("pairing length must equal src + dst")
        if not _is_noncrossing_involution(self.pairing):
            raise ValueError("pairing is not a planar perfect matching")

    def __lt__(self, other: "Diagram") -> bool:
        return (self.src, self.dst, self.pairing) < (other.src, other.dst, other.pairing)


def identity(n: int) -> Diagram:
    return Diagram(n, n, identity_pairing(n))


def identity_pairing(n: int) -> tuple[int, ...]:
    p = [0] * (2 * n)
    for i in range(n):
        p[n - 1 - i] = n + i
        p[n + i] = n - 1 - i
    return tuple(p)


def generator_pairing(n: int, i: int) -> tuple[int, ...]:
    """Pairing of the cup-cap diagram f_i in TL_n (1 <= i <= n-1)."""
    if not 1 <= i <= n - 1:
        raise IndexError(f"generator index {i} out of range for {n} strands")
    p = list(identity_pairing(n))
    b0, b1 = n - i, n - 1 - i  # indexes of bottom positions i-1 and i
    t0, t1 = n + i - 1, n + i
    p[b0], p[b1] = b1, b0
    p[t0], p[t1] = t1, t0
    return tuple(p)


def generator_diagram(n: int, i: int) -> Diagram:
    return Diagram(n, n, generator_pairing(n, i))


def through_strands(d: Diagram) -> int:
    """Number of bottom points paired with top points."""
    return sum(1 for b in range(d.src) if d.pairing[b] >= d.src)


def is_monic(d: Diagram) -> bool:
    return through_strands(d) == d.src


@lru_cache(maxsize=None)
def monic_pairings(t: int, n: int) -> tuple[tuple[int, ...], ...]:
    """All pairings of monic diagrams t -> n, in lexicographic order."""
    if t > n or (t + n) % 2 or t < 0:
        return ()
    return tuple(sorted(tuple(p) for p in _gather_monic(t, n)))


def _gather_monic(t: int, n: int) -> Iterator[tuple[int, ...]]:
    size = t + n
    pairing = [-1] * size
    stack: list[int] = []

    def walk(i: int):
        if i == size:
            if not stack:
                yield tuple(pairing)
            return
        if stack:
            j = stack[-1]
            if not (j < t and i < t):
                stack.pop()
                pairing[i], pairing[j] = j, i
                yield from walk(i + 1)
                pairing[i] = pairing[j] = -1
                stack.append(j)
        if len(stack) < size - i:
            stack.append(i)
            yield from walk(i + 1)
            stack.pop()

    yield from walk(0)


def enumerate_monic(t: int, n: int) -> tuple[Diagram, ...]:
    """All monic diagrams t -> n in canonical (lexicographic) order.

    Empty when the parity fails or t > n.
    """
    return tuple(Diagram(t, n, p) for p in monic_pairings(t, n))


def tl_pairings(n: int) -> tuple[tuple[int, ...], ...]:
    """The diagram basis of TL_n as pairings, lexicographically ordered."""
    return monic_pairings(0, 2 * n)


def tl_basis(n: int) -> tuple[Diagram, ...]:
    return tuple(Diagram(n, n, p) for p in tl_pairings(n))


# ---------------------------------------------------------------------------
# Composition
# ---------------------------------------------------------------------------


def compose_pairings(
    t: int, m: int, n: int, pa: tuple[int, ...], pb: tuple[int, ...]
) -> tuple[tuple[int, ...], int]:
    """Glue A: t -> m below B: m -> n; returns (pairing of t -> n, loops).

    A's top position j (A-index t+j) meets B's bottom position j (B-index
    m-1-j).  Paths are followed endpoint to endpoint; closed loops live
    entirely in the glued middle row and are counted afterwards.
    """
    size = t + n
    res = [-1] * size
    seen = [False] * m  # middle row, indexed by position j
    for start in range(size):
        if res[start] >= 0:
            continue
        if start < t:
            in_a, cur = True, start
        else:
            in_a, cur = False, m + (start - t)
        while True:
            if in_a:
                nxt = pa[cur]
                if nxt < t:
                    end = nxt
                    break
                j = nxt - t
                seen[j] = True
                in_a, cur = False, m - 1 - j
            else:
                nxt = pb[cur]
                if nxt >= m:
                    end = t + (nxt - m)
                    break
                j = m - 1 - nxt
                seen[j] = True
                in_a, cur = True, t + j
        res[start] = end
        res[end] = start
    loops = 0
    for j0 in range(m):
        if seen[j0]:
            continue
        loops += 1
        j = j0
        while not seen[j]:
            seen[j] = True
            k = pa[t + j] - t  # arc in A within the middle row
            seen[k] = True
            j = m - 1 - pb[m - 1 - k]  # arc in B back to the middle row
    return tuple(res), loops


def compose(a: Diagram, b: Diagram) -> tuple[Diagram, int]:
    """The stacked diagram of a: t -> m followed by b: m -> n, plus the
    number of closed loops removed."""
    if a.dst != b.src:
        raise ValueError(f"cannot glue {a.src}->{a.dst} onto {b.src}->{b.dst}")
    pairing, loops = compose_pairings(a.src, a.dst, b.dst, a.pairing, b.pairing)
    return Diagram(a.src, b.dst, pairing), loops


def star_pairing(size: int, pairing: tuple[int, ...]) -> tuple[int, ...]:
    # Reflection in a horizontal line reverses the index line.
    return tuple(size - 1 - pairing[size - 1 - i] for i in range(size))


def star(d: Diagram) -> Diagram:
    """Reflection in a horizontal line: an involution Diagram(t,n) -> (n,t)."""
    return Diagram(d.dst, d.src, star_pairing(d.src + d.dst, d.pairing))


def rotate_to_flat(d: Diagram) -> Diagram:
    """The (0, t+n)-diagram obtained by rotating the bottom line clockwise.

    With the bottom-reversed boundary encoding this is a pure re-indexing:
    the pairing tuple is unchanged.
    """
    return Diagram(0, d.src + d.dst, d.pairing)


def embed_pairing(m: int, n: int, pairing: tuple[int, ...]) -> tuple[int, ...]:
    """Pairing of x (x) id^(n-m): identity strands appended on the right.

    With the bottom-reversed encoding the old index line lands as the
    contiguous block [n-m, n+m), so the embedding is a uniform shift.
    """
    if m > n:
        raise ValueError("cannot embed into fewer strands")
    shift = n - m
    out = [-1] * (2 * n)
    for b in range(2 * m):
        out[b + shift] = pairing[b] + shift
    for j in range(m, n):
        out[n - 1 - j] = n + j
        out[n + j] = n - 1 - j
    return tuple(out)


def closure_loops(n: int, pairing: tuple[int, ...]) -> int:
    """Loops in the Markov closure of an (n, n)-diagram (top point k joined
    to bottom point k around the right)."""
    size = 2 * n
    seen = [False] * size
    loops = 0
    for start in range(size):
        if seen[start]:
            continue
        loops += 1
        i = start
        while not seen[i]:
            seen[i] = True
            j = pairing[i]
            seen[j] = True
            i = size - 1 - j  # closure arcs also reverse the index line
    return loops


# ---------------------------------------------------------------------------
# Arc-nesting forests and hook coefficients
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Forest:
    """The poset of arcs of a flat diagram, ordered by nesting.

    ``parents[k]`` is the index of the innermost arc strictly enclosing arc
    k, or -1 for a root; ``sizes[k]`` is the size of the down-set of arc k
    (the arc and everything nested inside it).
    """

    arcs: tuple[tuple[int, int], ...]
    parents: tuple[int, ...]
    sizes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.arcs)


def nesting_forest(d: Diagram) -> Forest:
    """Forest of arcs of a (0, m)-diagram under nesting order."""
    if d.src != 0:
        raise ValueError("nesting forests are defined for flat diagrams")
    arcs = sorted((i, j) for i, j in enumerate(d.pairing) if i < j)
    parents = [-1] * len(arcs)
    sizes = [1] * len(arcs)
    stack: list[int] = []  # arc indices whose interval is still open
    for k, (i, j) in enumerate(arcs):
        while stack and arcs[stack[-1]][1] < i:
            stack.pop()
        if stack:
            parents[k] = stack[-1]
        stack.append(k)
    for k in range(len(arcs) - 1, -1, -1):
        if parents[k] >= 0:
            sizes[parents[k]] += sizes[k]
    return Forest(tuple(arcs), tuple(parents), tuple(sizes))


def hook_poly(forest: Forest) -> LaurentPolyZ:
    """The hook quotient [|F|]! / prod_a [|F_<=a|], an exact Laurent
    polynomial (non-exact division signals an invariant violation)."""
    num = quantum_factorial(len(forest))
    den = LaurentPolyZ.one()
    for s in forest.sizes:
        den = den * quantum_int(s)
    return num.divexact(den)
