import random
from fractions import Fraction

import pytest

from cubicdescent.errors import NonSquareMatrixError, SingularMatrixError
from cubicdescent.linalg import (Matrix, charpoly, det, inverse, nullspace,
                                 rank, solve_linear)
from cubicdescent.unipoly import UniPoly

from conftest import PAPER_Q0_COEFFS


def _minors_det(m: Matrix) -> Fraction:
    # independent oracle: recursive expansion by the first row
    n = m.rows
    if n == 1:
        return m[0, 0]
    total = Fraction(0)
    for j in range(n):
        if m[0, j] == 0:
            continue
        sub = Matrix.from_rows([[m[i, k] for k in range(n) if k != j]
                                for i in range(1, n)])
        total += (-1) ** j * m[0, j] * _minors_det(sub)
    return total


def test_det_identity():
    assert det(Matrix.identity(5)) == 1


def test_det_diagonal():
    assert det(Matrix.diagonal([-1, 1, 2, 3, 4])) == -24


def test_det_paper_gram_regression():
    from cubicdescent.forms import QuadForm

    g = QuadForm.from_poly_coeffs(5, PAPER_Q0_COEFFS).gram
    d = det(g)
    assert d == -537930072          # frozen; matches the minors oracle
    assert d == _minors_det(g)
    assert d != 0


def test_det_non_square():
    with pytest.raises(NonSquareMatrixError):
        det(Matrix.zero(2, 3))


def test_det_multiplicative():
    rng = random.Random(11)
    for _ in range(25):
        a = Matrix(4, 4, [rng.randint(-5, 5) for _ in range(16)])
        b = Matrix(4, 4, [Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                          for _ in range(16)])
        assert det(a @ b) == det(a) * det(b)


def test_rank_zero_and_diag():
    assert rank(Matrix.zero(3, 3)) == 0
    assert rank(Matrix.diagonal([1, 1, 0])) == 2


def test_rank_restricted_pencil_member():
    # diagonal pencil a = (1,...,1), b = (0,1,2,3,4); member at (0 : 1)
    # is diag(b), of rank 4
    member = Matrix.diagonal([0, 1, 2, 3, 4])
    assert rank(member) == 4


def test_charpoly_identity2():
    assert charpoly(Matrix.identity(2)) == UniPoly([1, -2, 1])


def test_charpoly_companion():
    p = UniPoly([-900, 1134, -288, -51, 10, 1])
    n = p.degree
    comp = Matrix.from_rows(
        [[Fraction(0)] * (n - 1) + [-p[0]] if i == 0 else
         [Fraction(int(j == i - 1)) for j in range(n - 1)] + [-p[i]]
         for i in range(n)])
    assert charpoly(comp) == p


def test_charpoly_diag():
    assert charpoly(Matrix.diagonal([2, 3])) == UniPoly([6, -5, 1])


def test_solve_consistent_and_not():
    m = Matrix.from_rows([[1, 2], [2, 4]])
    assert solve_linear(m, [3, 6]) == [3, 0]      # free variable set to 0
    assert solve_linear(m, [3, 7]) is None


def test_solve_underdetermined_deterministic():
    m = Matrix.from_rows([[1, 1, 1]])
    assert solve_linear(m, [5]) == [5, 0, 0]


def test_solve_random_roundtrip():
    rng = random.Random(5)
    for _ in range(20):
        m = Matrix(3, 3, [rng.randint(-4, 4) for _ in range(9)])
        x = [rng.randint(-3, 3) for _ in range(3)]
        rhs = m.mul_vec(x)
        sol = solve_linear(m, rhs)
        assert sol is not None
        assert list(m.mul_vec(sol)) == list(rhs)


def test_nullspace_and_inverse():
    m = Matrix.from_rows([[1, 2], [2, 4]])
    (v,) = nullspace(m)
    assert m.mul_vec(v) == (0, 0)
    with pytest.raises(SingularMatrixError):
        inverse(m)
    a = Matrix.from_rows([[1, 2], [3, 4]])
    assert a @ inverse(a) == Matrix.identity(2)
