"""Exact arithmetic layer: cyclotomic fields, quantum integers, ranks."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import fraction_rank, quantum_int_by_ratio
from tlq.exactnum import (
    CycNum,
    ExactMatrix,
    LaurentPolyZ,
    cyclotomic_field,
    cyclotomic_polynomial,
    quantum_factorial,
    quantum_int,
    rank_by_columns,
)

LEVELS = (3, 4, 5, 6, 7, 8)


def cyc_numbers(level: int):
    field = cyclotomic_field(level)
    return st.builds(
        lambda den, num: field.from_coeffs(den, num),
        st.integers(min_value=1, max_value=9),
        st.lists(
            st.integers(min_value=-9, max_value=9),
            min_size=field.degree,
            max_size=field.degree,
        ),
    )


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # Product over divisors rebuilds x^n - 1 (degree check).
    for n in (6, 10, 16, 12):
        total = sum(len(cyclotomic_polynomial(d)) - 1 for d in range(1, n + 1) if n % d == 0)
        assert total == n


@pytest.mark.parametrize("level", LEVELS)
def test_root_of_unity_structure(level):
    field = cyclotomic_field(level)
    q = field.q
    assert (q * q) ** level == field.one
    for k in range(1, level):
        assert (q * q) ** k != field.one
    # delta = 2 cos(pi/level) is real and positive.
    approx = field.delta.approx()
    assert abs(approx.imag) < 1e-12
    assert abs(approx.real - 2 * math.cos(math.pi / level)) < 1e-12
    assert field.delta * field.delta.inverse() == field.one


@pytest.mark.parametrize("level", LEVELS)
def test_quantum_int_vanishing_pattern(level):
    field = cyclotomic_field(level)
    assert quantum_int(level, field.q).is_zero()
    for m in range(1, level):
        assert not quantum_int(m, field.q).is_zero()


@pytest.mark.parametrize("level", LEVELS)
def test_quantum_int_matches_ratio(level):
    field = cyclotomic_field(level)
    for m in range(0, 2 * level + 1):
        assert quantum_int(m, field.q) == quantum_int_by_ratio(m, level)


def test_quantum_int_symbolic():
    assert quantum_int(0) == LaurentPolyZ.zero()
    assert quantum_int(1) == LaurentPolyZ.one()
    assert quantum_int(2) == LaurentPolyZ({1: 1, -1: 1})
    # Evaluation commutes with symbolic construction.
    field = cyclotomic_field(5)
    for m in range(7):
        assert quantum_int(m).evaluate(field.q) == quantum_int(m, field.q)


def test_quantum_int_level4_values():
    field = cyclotomic_field(4)
    assert quantum_int(2, field.q) == -field.delta
    assert quantum_int(2, field.q) * field.delta == field.from_int(-2)
    assert quantum_int(3, field.q) == field.one


def test_quantum_factorial():
    assert quantum_factorial(0) == LaurentPolyZ.one()
    assert quantum_factorial(2) == LaurentPolyZ({1: 1, -1: 1})
    field = cyclotomic_field(4)
    value = quantum_factorial(3).evaluate(field.q)
    assert not value.is_zero()
    assert value == -field.delta  # [1][2][3] at level 4 is 1 * (-sqrt 2) * 1


def test_laurent_divexact_roundtrip():
    a = quantum_factorial(5)
    b = quantum_int(3) * quantum_int(4)
    assert (a * b).divexact(b) == a
    with pytest.raises(ArithmeticError):
        (quantum_int(2) + LaurentPolyZ.one()).divexact(quantum_int(3))


@given(st.data())
@settings(max_examples=100, derandomize=True, deadline=None)
def test_laurent_evaluation_is_ring_homomorphism(data):
    level = data.draw(st.sampled_from((4, 5, 6)))
    field = cyclotomic_field(level)

    def poly(draw):
        return LaurentPolyZ(
            {draw(st.integers(-4, 4)): draw(st.integers(-5, 5)) for _ in range(3)}
        )

    a, b = poly(data.draw), poly(data.draw)
    x = field.q
    assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)
    assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)


@given(st.data())
@settings(max_examples=200, derandomize=True, deadline=None)
def test_field_axioms(data):
    level = data.draw(st.sampled_from(LEVELS))
    a = data.draw(cyc_numbers(level))
    b = data.draw(cyc_numbers(level))
    c = data.draw(cyc_numbers(level))
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if not a.is_zero():
        assert a * a.inverse() == cyclotomic_field(level).one


@given(st.data())
@settings(max_examples=100, derandomize=True, deadline=None)
def test_powers_and_fractions(data):
    level = data.draw(st.sampled_from((3, 4, 5, 6)))
    a = data.draw(cyc_numbers(level))
    k = data.draw(st.integers(min_value=0, max_value=6))
    prod = cyclotomic_field(level).one
    for _ in range(k):
        prod = prod * a
    assert a**k == prod
    if not a.is_zero():
        assert a**-k == prod.inverse()
    r = Fraction(data.draw(st.integers(-20, 20)), data.draw(st.integers(1, 20)))
    f = cyclotomic_field(level).from_fraction(r)
    assert f + f == cyclotomic_field(level).from_fraction(2 * r)


def test_rank_trivial_cases():
    field = cyclotomic_field(4)
    zero = ExactMatrix.zeros(field, 3, 3)
    assert zero.rank() == 0
    eye = ExactMatrix(
        field,
        [[field.one if i == j else field.zero for j in range(5)] for i in range(5)],
    )
    assert eye.rank() == 5


@given(st.data())
@settings(max_examples=80, derandomize=True, deadline=None)
def test_rank_pivot_order_and_transpose_invariance(data):
    level = data.draw(st.sampled_from((3, 4, 5)))
    field = cyclotomic_field(level)
    nrows = data.draw(st.integers(1, 5))
    ncols = data.draw(st.integers(1, 5))
    rows = [
        [data.draw(cyc_numbers(level)) if data.draw(st.booleans()) else field.zero for _ in range(ncols)]
        for _ in range(nrows)
    ]
    m = ExactMatrix(field, rows)
    r = m.rank()
    assert r == rank_by_columns(m)
    assert r == m.transpose().rank()


def test_certified_int_rank_against_fractions():
    import numpy as np

    from tlq._intlinalg import certified_rank

    rng = np.random.default_rng(11)
    for _ in range(40):
        n, m = int(rng.integers(1, 10)), int(rng.integers(1, 10))
        inner = int(rng.integers(0, 6))
        a = rng.integers(-5, 6, size=(n, inner)) @ rng.integers(-5, 6, size=(inner, m))
        assert certified_rank(a) == fraction_rank(a.tolist())


def test_trace_gram_rank_example():
    # The full trace Gram matrix on four strands at level 4 has rank 2^(4-1).
    from tlq.tlalg import trace_gram_matrix

    assert trace_gram_matrix(4, 4).rank() == 8
