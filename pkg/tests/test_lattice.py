from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surfsing.lattice import (
    IntersectionMatrix,
    LatticeError,
    SingularMatrixError,
    as_rational,
    format_rational,
    is_negative_definite,
    pairing,
    solve,
    solve_integral,
)
from surfsing.graph import make_An
from surfsing.cycles import discrepancy, fundamental_cycle

from .oracles import cramer, negative_definite_all_minors

F = Fraction


def M(rows):
    return IntersectionMatrix(rows)


# -- pairing -------------------------------------------------------------------

def test_pairing_single_curve():
    assert pairing([1], [1], M([[-2]])) == -2


def test_pairing_zero_vector():
    m = M([[-3, 1, 0], [1, -2, 1], [0, 1, -5]])
    assert pairing([0, 0, 0], [F(7, 3), -1, 4], m) == 0


@pytest.mark.parametrize("weights", [[2, 2], [3, 3], [2, 5, 3], [4, 2, 2, 7], [6] * 5])
def test_delta_minus_z_meets_end_curve_once(weights):
    g = make_An(weights)
    v = [d - z for d, z in zip(discrepancy(g), fundamental_cycle(g))]
    e1 = [1] + [0] * (len(weights) - 1)
    assert pairing(v, e1, g.matrix) == 1


def test_pairing_dimension_mismatch():
    with pytest.raises(LatticeError):
        pairing([1, 2], [1], M([[-2, 1], [1, -2]]))


rat = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def sym_matrix_and_vectors(draw):
    n = draw(st.integers(1, 5))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = draw(st.integers(-6, 2))
        for j in range(i):
            rows[i][j] = rows[j][i] = draw(st.integers(0, 3))
    vec = st.lists(rat, min_size=n, max_size=n)
    return rows, draw(vec), draw(vec), draw(vec), draw(rat)


@given(sym_matrix_and_vectors())
@settings(max_examples=200, deadline=None)
def test_pairing_bilinear_symmetric(data):
    rows, u, v, w, t = data
    m = M(rows)
    assert pairing(u, v, m) == pairing(v, u, m)
    uw = [a + t * b for a, b in zip(u, w)]
    assert pairing(uw, v, m) == pairing(u, v, m) + t * pairing(w, v, m)


# -- matrix validation ---------------------------------------------------------

def test_matrix_rejects_asymmetric():
    with pytest.raises(LatticeError):
        M([[-2, 1], [0, -2]])


def test_matrix_rejects_negative_off_diagonal():
    with pytest.raises(LatticeError):
        M([[-2, -1], [-1, -2]])


def test_matrix_rejects_ragged():
    with pytest.raises(LatticeError):
        M([[-2, 1], [1]])


def test_rationals_are_exact():
    assert as_rational("-3/6") == F(-1, 2)
    for bad in (0.5, True, "0.5", "1e3", ""):
        with pytest.raises((TypeError, ValueError)):
            as_rational(bad)
    assert format_rational(F(6, 3)) == "2"
    assert format_rational(F(-4, 6)) == "-2/3"


# -- negative definiteness -----------------------------------------------------

def test_nd_examples():
    assert is_negative_definite(M([[-2]]))
    assert is_negative_definite(M([[-2, 1], [1, -2]]))
    assert not is_negative_definite(M([[-2, 2], [2, -2]]))


def test_nd_fractional_entries():
    assert is_negative_definite(M([["-1/3", "1/2"], ["1/2", "-1"]]))
    assert not is_negative_definite(M([["-1/4", "1/2"], ["1/2", "-1"]]))


@st.composite
def small_sym(draw):
    n = draw(st.integers(1, 6))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = draw(st.integers(-5, 1))
        for j in range(i):
            rows[i][j] = rows[j][i] = draw(st.integers(0, 2))
    return rows


@given(small_sym())
@settings(max_examples=300, deadline=None)
def test_nd_agrees_with_all_principal_minors(rows):
    assert is_negative_definite(M(rows)) == negative_definite_all_minors(rows)


# -- solve ---------------------------------------------------------------------

def test_solve_examples():
    assert solve(M([[-2]]), [0]) == [0]
    assert solve(M([[-3, 1], [1, -3]]), [-1, -1]) == [F(1, 2), F(1, 2)]
    for w in range(2, 12):
        assert solve(M([[-w]]), [2 - w]) == [F(w - 2, w)]


def test_solve_singular():
    with pytest.raises(SingularMatrixError):
        solve(M([[-2, 2], [2, -2]]), [1, 1])
    with pytest.raises(SingularMatrixError):
        solve_integral([[-2, 2], [2, -2]], [1, 1])


def test_solve_needs_pivoting():
    # zero in the top-left corner forces a row exchange
    m = M([[0, 1], [1, -1]])
    assert solve(m, [2, 3]) == [5, 2]
    assert solve_integral(m.integer_rows(), [2, 3]) == [5, 2]


@st.composite
def solvable(draw):
    n = draw(st.integers(1, 5))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = draw(st.integers(-9, 3))
        for j in range(i):
            rows[i][j] = rows[j][i] = draw(st.integers(0, 4))
    b = draw(st.lists(st.integers(-10, 10), min_size=n, max_size=n))
    return rows, b


@given(solvable())
@settings(max_examples=300, deadline=None)
def test_solve_zero_residual_and_routes_agree(data):
    rows, b = data
    ref = cramer(rows, b)
    if ref is None:
        with pytest.raises(SingularMatrixError):
            solve(M(rows), b)
        return
    x = solve(M(rows), b)
    assert M(rows).apply(x) == [F(v) for v in b]
    assert x == ref
    assert solve_integral(rows, b) == ref
