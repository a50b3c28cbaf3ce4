import random

import pytest

from cubicdescent.descent import DP4Surface, run_strategy
from cubicdescent.errors import (DegenerateSurfaceError, LineNotOnSurfaceError,
                                 PointNotOnSurfaceError)
from cubicdescent.forms import (CubicForm4, LinForm, ProjPoint,
                                QuadForm, contains_line, restrict_to_hyperplane,
                                signature)
from cubicdescent.geometry import (CubicSurface, cubic_to_dp4, dp4_to_cubic,
                                   greedy_reduce, roundtrip_check,
                                   tritangent_analysis,
                                   tritangent_square_product)
from cubicdescent.linalg import Matrix, inverse, rank

from conftest import (PAPER_POINT, random_cubic_with_line,
                      random_dp4_with_point)


def test_cubic_to_dp4_trivial_decomposition():
    F = CubicForm4({(1, 2, 0, 0): 1, (0, 1, 2, 0): 1})   # x0*x1^2 + x1*x2^2
    v, q0, q1 = cubic_to_dp4(CubicSurface(F), LinForm([1, 0, 0, 0]),
                             LinForm([0, 1, 0, 0]))
    assert q0 == QuadForm.from_poly_coeffs(4, {(1, 1): 1})
    assert q1 == QuadForm.from_poly_coeffs(4, {(2, 2): 1})


def test_cubic_to_dp4_line_not_on_surface(fermat):
    with pytest.raises(LineNotOnSurfaceError):
        cubic_to_dp4(fermat, LinForm([1, 0, 0, 0]), LinForm([0, 1, 0, 0]))


def test_cubic_to_dp4_paper(paper_cubic):
    l0, l1 = paper_cubic.known_line.forms
    v, _, _ = cubic_to_dp4(paper_cubic, l0, l1)
    # the produced pencil must contain a rational point: the blow-down of
    # the line direction is visible at x4-weight; just check the pencil is
    # a genuine DP4 pencil with nonzero determinant
    assert not v.pencil_quintic().is_zero()


def test_dp4_to_cubic_simple():
    q0 = QuadForm.from_poly_coeffs(5, {(0, 4): 1, (1, 1): -1})
    q1 = QuadForm.from_poly_coeffs(5, {(2, 4): 1, (3, 3): -1})
    v = DP4Surface(q0, q1)
    s = dp4_to_cubic(v, ProjPoint([0, 0, 0, 0, 1]))
    # q0 = -x1^2, l0 = x0; q1 = -x3^2, l1 = x2: S = q0*l1 - q1*l0
    assert s.F == CubicForm4({(0, 2, 1, 0): -1, (1, 0, 0, 2): 1})
    assert contains_line(s.F, s.known_line)


def test_dp4_to_cubic_point_not_on_surface():
    v = DP4Surface(QuadForm.diagonal([1, 1, 1, 1, -1]),
                   QuadForm.diagonal([1, 2, 3, 4, -5]))
    with pytest.raises(PointNotOnSurfaceError):
        dp4_to_cubic(v, ProjPoint([1, 0, 0, 0, 0]))


def test_dp4_to_cubic_paper(paper_dp4):
    s = dp4_to_cubic(paper_dp4, ProjPoint(PAPER_POINT))
    assert s.known_line is not None
    assert contains_line(s.F, s.known_line)


def test_roundtrip_paper(paper_dp4):
    assert roundtrip_check(paper_dp4, ProjPoint(PAPER_POINT))


def test_roundtrip_random():
    rng = random.Random(41)
    done = 0
    while done < 8:
        v, p = random_dp4_with_point(rng)
        try:
            assert roundtrip_check(v, p)
        except DegenerateSurfaceError:
            continue
        done += 1


def test_roundtrip_error_path():
    v = DP4Surface(QuadForm.diagonal([1, 1, 1, 1, -1]),
                   QuadForm.diagonal([1, 2, 3, 4, -5]))
    with pytest.raises(PointNotOnSurfaceError):
        roundtrip_check(v, ProjPoint([1, 1, 1, 1, 1]))


def test_fact_and_corollary_restated():
    # Q0 = q0 + l1*x4 restricts along l1; Q1 = q1 - l0*x4 along l0: the
    # 5-variable form gains inertia (1, 1, 0) over the 3-variable
    # restriction of its quadratic part to the plane cut by its own
    # x4-coefficient form
    rng = random.Random(19)
    done = 0
    while done < 15:
        F, l0, l1 = random_cubic_with_line(rng)
        try:
            v, q0, q1 = cubic_to_dp4(CubicSurface(F), l0, l1)
        except Exception:
            continue
        for big, small, cut in ((v.Q0, q0, l1), (v.Q1, q1, l0)):
            r3, _ = restrict_to_hyperplane(small, cut)
            p, n, z = signature(r3)
            assert signature(big) == (p + 1, n + 1, z)
            assert rank(big.gram) == rank(r3.gram) + 2
            assert (rank(big.gram) < 5) == (rank(r3.gram) < 3)
        done += 1


def test_tritangent_diagonal():
    v = DP4Surface(QuadForm.diagonal([1, 1, 1, 1, 1]),
                   QuadForm.diagonal([0, 1, 2, 3, 4]))
    entries = tritangent_analysis(v)
    got = {e.pencil_root: e.split_disc for e in entries}
    assert got == {(0, 1): 6, (-1, 1): -6, (-2, 1): 1, (-3, 1): -6, (-4, 1): 6}
    assert all(e.rank_at_root == 4 for e in entries)
    assert tritangent_square_product(entries) == 1


def test_tritangent_paper_strategy(paper_p):
    v, _ = run_strategy(paper_p)
    entries = tritangent_analysis(v)
    degs = sorted(e.pencil_root.degree if not isinstance(e.pencil_root, tuple)
                  else 1 for e in entries)
    assert degs == [1, 2, 2]          # matches the factorization of p
    rational = [e for e in entries if isinstance(e.pencil_root, tuple)]
    assert rational[0].pencil_root == (2, 1)
    assert rational[0].rank_at_root == 4
    assert rational[0].split_disc == 2
    norm_classes = sorted(e.norm_class for e in entries
                          if not isinstance(e.pencil_root, tuple))
    assert norm_classes == [3, 6]     # the published norm conditions
    assert tritangent_square_product(entries) == 1


def test_tritangent_planes_in_cubic_coordinates(paper_cubic):
    l0, l1 = paper_cubic.known_line.forms
    v, _, _ = cubic_to_dp4(paper_cubic, l0, l1)
    entries = tritangent_analysis(v)
    for e in entries:
        if not isinstance(e.pencil_root, tuple):
            continue
        assert e.plane is not None
        # the plane contains the line
        for pt in paper_cubic.known_line.points:
            assert e.plane.evaluate(pt.coords) == 0
        # rank 4 members of a smooth pencil
        assert e.rank_at_root == 4
    assert tritangent_square_product(entries) == 1


def test_greedy_reduce_fermat_fixed(fermat):
    s = greedy_reduce(CubicSurface(fermat))
    assert s.F == fermat


def test_greedy_reduce_recovers_small_model(fermat):
    rng = random.Random(3)
    change = Matrix.from_rows([[1, 1, 0, 0], [0, 1, 0, 0],
                               [0, 1, 1, 0], [1, 0, 0, 1]])
    scrambled = fermat.substitute(change)
    assert scrambled.max_abs_coeff() > fermat.max_abs_coeff()
    s = greedy_reduce(CubicSurface(scrambled))
    assert s.F.max_abs_coeff() <= scrambled.max_abs_coeff()
    # change matrix reproduces the input exactly
    back = s.F.substitute(inverse(s.provenance["change"]))
    _, bi = back.primitive_coeffs()
    _, si = scrambled.primitive_coeffs()
    assert bi == si


def test_greedy_reduce_paper_blowup(paper_dp4):
    raw = dp4_to_cubic(paper_dp4, ProjPoint(PAPER_POINT))
    reduced = greedy_reduce(raw)
    assert reduced.F.max_abs_coeff() <= raw.F.max_abs_coeff()
    assert reduced.known_line is not None
    assert contains_line(reduced.F, reduced.known_line)
