"""Independent reference implementations used only as test oracles.

These are deliberately written with different algorithms (and different
data layouts) from the package code they cross-check.
"""

from __future__ import annotations

from fractions import Fraction

from tlq.exactnum import CycNum, cyclotomic_field


def slow_blade_product(
    j_gens: list[int], k_gens: list[int]
) -> tuple[int, int, tuple[int, ...]]:
    """Multiply ordered products of generators by literal bubble reordering.

    Returns (sign, number of gamma^2 contractions, sorted surviving
    generators).  Generators anticommute; equal neighbours contract.
    """
    word = list(j_gens) + list(k_gens)
    sign = 1
    contractions = 0
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            if word[i] == word[i + 1]:
                del word[i : i + 2]
                contractions += 1
                changed = True
                break
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
                changed = True
                break
    return sign, contractions, tuple(word)


def fraction_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by plain Fraction elimination."""
    m = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def quantum_int_by_ratio(m: int, level: int) -> CycNum:
    """[m]_q as the literal ratio (q^m - q^-m) / (q - q^-1)."""
    field = cyclotomic_field(level)
    q = field.q
    return (q**m - q**-m) * (q - q**-1).inverse()
