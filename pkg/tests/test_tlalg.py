"""TL_n(q) at roots of unity: relations, trace, Jones-Wenzl, the ideal."""

from __future__ import annotations

import random

import pytest

from tlq.combinatorics import catalan
from tlq.diagram import identity, tl_basis
from tlq.exactnum import cyclotomic_field
from tlq.tlalg import (
    TLElement,
    embed,
    embedded_jones_wenzl,
    generator,
    ideal_dimension,
    jones_trace,
    jones_wenzl,
    jones_wenzl_by_recursion,
    radical_split,
    trace_gram_matrix,
    trace_gram_rank,
)

LEVELS = (3, 4, 5, 6, 7, 8)


def random_element(n: int, level: int, rng: random.Random) -> TLElement:
    x = TLElement.zero(n, level)
    for d in tl_basis(n):
        if rng.random() < 0.5:
            x = x + TLElement.from_diagram(d, level).scale(rng.randint(-3, 3))
    return x


@pytest.mark.parametrize("level", LEVELS)
def test_defining_relations(level):
    field = cyclotomic_field(level)
    for n in range(2, 9):
        fs = [generator(n, i, level) for i in range(1, n)]
        one = TLElement.one(n, level)
        for i, f in enumerate(fs, start=1):
            assert f * f == field.delta * f
            assert one * f == f == f * one
            if i < n - 1:
                g = fs[i]
                assert f * g * f == f
                assert g * f * g == g
            for j in range(i + 2, n):
                assert f * fs[j - 1] == fs[j - 1] * f


def test_generator_index_errors():
    with pytest.raises(IndexError):
        generator(3, 3, 4)
    with pytest.raises(IndexError):
        generator(3, 0, 4)


def test_multiplication_strand_mismatch():
    with pytest.raises(ValueError):
        generator(3, 1, 4) * generator(4, 1, 4)
    with pytest.raises(ValueError):
        generator(3, 1, 4) * generator(3, 1, 5)


def test_trace_normalization_and_markov():
    for level in (3, 4, 5, 6):
        field = cyclotomic_field(level)
        dinv = field.delta.inverse()
        for n in (2, 3, 4):
            assert jones_trace(TLElement.one(n, level)) == field.one
        assert jones_trace(generator(2, 1, level)) == dinv
        rng = random.Random(100 + level)
        for n in (2, 3, 4):
            for _ in range(10):
                x = random_element(n, level, rng)
                xe = embed(x, n + 1)
                fn = generator(n + 1, n, level)
                assert jones_trace(xe * fn) == dinv * jones_trace(x)


def test_trace_symmetry():
    for level in (3, 4, 5, 6, 7, 8):
        for n in (2, 3, 4, 5, 6):
            rng = random.Random(level * 31 + n)
            for _ in range(200):
                a = random_element(n, level, rng)
                b = random_element(n, level, rng)
                assert jones_trace(a * b) == jones_trace(b * a)


def test_jw_level3_verbatim():
    e2 = jones_wenzl(3).element
    assert e2 == TLElement.one(2, 3) - generator(2, 1, 3)


def test_jw_level4_verbatim():
    field = cyclotomic_field(4)
    f1, f2 = generator(3, 1, 4), generator(3, 2, 4)
    expected = TLElement.one(3, 4) + f1 * f2 + f2 * f1 - field.delta * (f1 + f2)
    assert jones_wenzl(4).element == expected


@pytest.mark.parametrize("level", (3, 4, 5, 6))
def test_jw_defining_properties(level):
    e = jones_wenzl(level).element
    n = level - 1
    field = cyclotomic_field(level)
    assert e * e == e
    assert e.coefficient(identity(n)) == field.one
    for i in range(1, n):
        f = generator(n, i, level)
        assert (f * e).is_zero()
        assert (e * f).is_zero()
    assert jones_trace(e).is_zero()
    assert len(e.terms) == catalan(n)  # every hook coefficient is nonzero


@pytest.mark.parametrize("level", (3, 4, 5, 6))
def test_jw_matches_recursion_oracle(level):
    assert jones_wenzl(level).element == jones_wenzl_by_recursion(level)


def test_embed():
    for level in (4, 5):
        assert embed(TLElement.one(3, level), 6) == TLElement.one(6, level)
        assert embed(generator(3, 2, level), 6) == generator(6, 2, level)
        x = generator(3, 1, level) * generator(3, 2, level)
        y = generator(3, 2, level) * generator(3, 1, level)
        # Embedding is an algebra homomorphism.
        assert embed(x, 5) * embed(y, 5) == embed(x * y, 5)
    with pytest.raises(ValueError):
        embed(TLElement.one(4, 4), 3)


def test_star_antiautomorphism():
    rng = random.Random(7)
    for level in (4, 5):
        for _ in range(25):
            a = random_element(3, level, rng)
            b = random_element(3, level, rng)
            assert (a * b).star() == b.star() * a.star()


def test_ideal_dimension_small_values():
    # At n = level-1 = 3 the idempotent spans the one-dimensional top cell
    # block of semisimple TL_3; frozen as a regression anchor.
    assert ideal_dimension(4, 3, method="exact") == 1
    assert ideal_dimension(4, 4, method="exact") == catalan(4) - 8
    assert ideal_dimension(5, 4, method="exact") == 14 - 13
    with pytest.raises(ValueError):
        ideal_dimension(4, 2)


def test_ideal_dimension_methods_agree():
    for level, n in ((3, 3), (3, 4), (4, 4), (4, 5), (5, 5)):
        assert ideal_dimension(level, n, "exact") == radical_split(level, n).ideal_dim


def test_trace_gram_rank_pattern():
    # Nondegenerate exactly when n <= level-2 (and rank drops from level-1).
    for level in (4, 5, 6):
        for n in range(2, 7):
            rank = trace_gram_rank(level, n)
            if n <= level - 2:
                assert rank == catalan(n), (level, n)
            else:
                assert rank < catalan(n), (level, n)
                assert rank == catalan(n) - ideal_dimension(level, n)


def test_radical_split_certificate_consistency():
    for level, n in ((4, 6), (5, 6), (6, 6)):
        split = radical_split(level, n)
        assert split.gram_rank + split.ideal_dim == catalan(n)
        assert split.gram_rank == trace_gram_matrix(level, n).rank()


def test_trace_of_idempotent_times_basis_vanishes():
    # The exact inclusion <E> within the radical of the trace, spot checked
    # (the acceptance machinery relies on the same computation).
    for level, n in ((4, 4), (5, 5), (3, 4)):
        e = embedded_jones_wenzl(level, n)
        for d in tl_basis(n):
            assert jones_trace(e * TLElement.from_diagram(d, level)).is_zero()
