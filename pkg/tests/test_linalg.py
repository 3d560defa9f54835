import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from leonard_ekr.linalg import (InconsistentSystem, Matrix, Subspace, intersect, kernel, rref,
                                solve_linear, to_fraction, unit_vector)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=7)


def small_matrices(rows, cols):
    return st.lists(st.lists(fractions, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def test_rref_identity():
    m, piv = rref(Matrix.identity(3))
    assert m == Matrix.identity(3) and piv == [0, 1, 2]


def test_rref_rank_one():
    m, piv = rref(Matrix([[2, 4], [1, 2]]))
    assert m == Matrix([[1, 2], [0, 0]]) and piv == [0]


def test_random_invertible_reduces_to_identity():
    rng = random.Random(5)
    while True:
        m = Matrix([[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(5)]
                    for _ in range(5)])
        if sympy.Matrix(m.rows).det() != 0:
            break
    assert rref(m)[0] == Matrix.identity(5)
    assert m @ m.inverse() == Matrix.identity(5)


def test_kernel_cases():
    assert kernel(Matrix.identity(3)).dim == 0
    assert kernel(Matrix.zeros(2, 3)).dim == 3
    m = Matrix([[1, 1, 0]])
    k = kernel(m)
    assert k.dim == 2
    assert all((m @ b) == (0,) for b in k.basis)


def test_intersect_cases():
    e = [unit_vector(3, i) for i in range(3)]
    a, b = Subspace.span([e[0], e[1]], 3), Subspace.span([e[1], e[2]], 3)
    assert intersect(a, b) == Subspace.span([e[1]], 3)
    assert intersect(a, a) == a
    with pytest.raises(ValueError):
        intersect(a, Subspace.full(4))


def test_random_subspaces_of_dim5_meet_in_a_line():
    rng = random.Random(11)

    def rand_space():
        return Subspace.span([[rng.randint(-5, 5) for _ in range(5)] for _ in range(3)], 5)

    a, b = rand_space(), rand_space()
    assert a.dim == b.dim == 3
    c = a & b
    assert c.dim == 1
    assert c.basis[0] in a and c.basis[0] in b


def test_solve_linear():
    v = (Fraction(1, 2), Fraction(-3), Fraction(7, 5))
    assert solve_linear(Matrix.identity(3), v) == v
    with pytest.raises(InconsistentSystem):
        solve_linear(Matrix([[1, 1], [2, 2]]), (1, 3))


def test_floats_rejected():
    with pytest.raises(TypeError):
        to_fraction(0.5)


@settings(max_examples=60, database=None, deadline=None)
@given(small_matrices(3, 4))
def test_rref_and_rank_match_sympy(rows):
    m = Matrix(rows)
    ours, piv = rref(m)
    theirs, spiv = sympy.Matrix(rows).rref()
    assert [list(r) for r in ours.rows] == theirs.tolist()
    assert tuple(piv) == spiv
    assert m.rank() == len(spiv)


@settings(max_examples=60, database=None, deadline=None)
@given(small_matrices(3, 5))
def test_kernel_annihilated_and_complete(rows):
    m = Matrix(rows)
    k = kernel(m)
    assert k.dim == 5 - m.rank()
    for b in k.basis:
        assert all(x == 0 for x in m @ b)


@settings(max_examples=60, database=None, deadline=None)
@given(small_matrices(4, 4), st.lists(fractions, min_size=4, max_size=4))
def test_solve_linear_residual_zero(rows, rhs):
    m = Matrix(rows)
    try:
        x = solve_linear(m, rhs)
    except InconsistentSystem:
        aug = sympy.Matrix([list(r) + [b] for r, b in zip(rows, rhs)])
        assert aug.rank() > sympy.Matrix(rows).rank()
    else:
        assert m @ x == tuple(rhs)
