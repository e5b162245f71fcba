from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from preleibniz.exactla import (DimensionError, RatMatrix, as_rational, format_rational, mat_kernel_basis,
                                mat_mul, mat_rank, parse_rational, rref, solve_linear)

F = Fraction


def M(rows):
    return RatMatrix.from_array(np.array(rows, dtype=object))


def test_parse_and_format_rationals():
    assert parse_rational("3/6") == F(1, 2)
    assert parse_rational("-4") == -4
    assert parse_rational(" 7 / 2 ") == F(7, 2)
    assert format_rational(F(-6, 4)) == "-3/2"
    assert format_rational(F(8, 4)) == "2"
    assert format_rational(0) == "0"


@pytest.mark.parametrize("text", ["1/0", "0.5", "", "a/b", "1//2", "1e3"])
def test_parse_rejects_non_rationals(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_as_rational_rejects_floats_and_bools():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)
    assert as_rational(np.int64(3)) == 3
    assert as_rational("2/3") == F(2, 3)


def test_rank_examples():
    assert mat_rank(RatMatrix.identity(2)) == 2
    assert mat_rank(RatMatrix.zeros(2, 2)) == 0
    assert mat_rank(M([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert mat_kernel_basis(RatMatrix.identity(2)) == []
    assert len(mat_kernel_basis(RatMatrix.zeros(2, 2))) == 2
    (v,) = mat_kernel_basis(M([[1, 2], [2, 4]]))
    assert v[0] * -1 == v[1] * 2 and v != [0, 0]


def test_solve_examples():
    assert solve_linear(RatMatrix.identity(2), [1, 2]) == [1, 2]
    x = solve_linear(RatMatrix.zeros(2, 2), [0, 0])
    assert x is not None and RatMatrix.zeros(2, 2).apply(x) == [0, 0]
    assert solve_linear(M([[1, 2], [2, 4]]), [1, 3]) is None


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionError):
        solve_linear(RatMatrix.identity(2), [1, 2, 3])


def test_mul_dimension_mismatch():
    with pytest.raises(DimensionError):
        mat_mul(RatMatrix.zeros(2, 3), RatMatrix.zeros(2, 3))


def test_rref_is_reduced():
    rows, pivots = rref(M([[0, 2, 4], [1, 1, 1], [1, 3, 5]]))
    assert pivots == [0, 1]
    assert rows[0] == [1, 0, -1] and rows[1] == [0, 1, 2]


def test_large_entries_stay_exact():
    big = 10**30
    m = M([[big, 1], [1, F(1, big)]])
    assert mat_rank(m) == 1
    assert mat_mul(m, RatMatrix.identity(2)) == m


def test_scaled_int_constructor():
    m = RatMatrix.from_scaled_int(np.array([[1, 2], [3, 4]]), 6)
    assert m.row(0) == [F(1, 6), F(1, 3)]


small = st.integers(-3, 3)


@st.composite
def matrices(draw, max_dim=4):
    r, c = draw(st.integers(1, max_dim)), draw(st.integers(1, max_dim))
    vals = draw(st.lists(small, min_size=r * c, max_size=r * c))
    return RatMatrix(r, c, vals)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    kernel = mat_kernel_basis(m)
    assert mat_rank(m) + len(kernel) == m.cols
    for v in kernel:
        assert all(x == 0 for x in m.apply(v))


@settings(max_examples=80, deadline=None)
@given(matrices(), st.data())
def test_solve_finds_solutions_of_consistent_systems(m, data):
    x0 = data.draw(st.lists(small, min_size=m.cols, max_size=m.cols))
    b = m.apply(x0)
    x = solve_linear(m, b)
    assert x is not None and m.apply(x) == b


@settings(max_examples=50, deadline=None)
@given(matrices(3), matrices(3))
def test_product_matches_numpy_on_integers(a, b):
    if a.cols != b.rows:
        return
    expect = np.array(a.to_array(), dtype=object).dot(np.array(b.to_array(), dtype=object))
    assert (a @ b).entries == [F(v) for v in expect.reshape(-1)]
