import random

import pytest

from cubicdescent.errors import PreconditionError
from cubicdescent.forms import CubicForm4, QuadForm
from cubicdescent.descent import DP4Surface
from cubicdescent.gfpoly import ExtField
from cubicdescent.ideals import (MPoly, buchberger,
                                 is_unit_ideal, reduce_poly, s_polynomial,
                                 smooth_cubic, smooth_dp4)


def _vars2():
    return MPoly.variable(2, 0), MPoly.variable(2, 1)


def test_trivial_bases():
    x, y = _vars2()
    gb = buchberger([x, y])
    assert sorted(g.lm() for g in gb) == [(0, 1), (1, 0)]
    gb2 = buchberger([x, x + MPoly.constant(2, 1)])
    assert gb2.is_unit()
    assert is_unit_ideal([x, x + MPoly.constant(2, 1)])
    with pytest.raises(PreconditionError):
        buchberger([])


def test_membership_x4_minus_x():
    x, y = _vars2()
    gb = buchberger([x * x - y, y * y - x])
    assert gb.contains(x * x * x * x - x)
    assert not gb.contains(x)


def test_buchberger_certificate():
    # every S-polynomial of the returned basis reduces to zero, and every
    # input generator lies in the ideal of the basis
    rng = random.Random(13)
    for _ in range(10):
        gens = []
        for _ in range(3):
            terms = {}
            for _ in range(4):
                e = tuple(rng.randint(0, 2) for _ in range(3))
                terms[e] = rng.randint(-3, 3)
            g = MPoly(3, terms)
            if g:
                gens.append(g)
        if not gens:
            continue
        gb = buchberger(gens)
        basis = gb.generators
        for i, a in enumerate(basis):
            for b in basis[i + 1:]:
                assert reduce_poly(s_polynomial(a, b), basis).is_zero()
        for g in gens:
            assert gb.contains(g)
        for g in basis:
            assert g.lc() == 1
            for h in basis:
                if g is not h:
                    assert not all(a <= b for a, b in zip(h.lm(), g.lm()))


def test_smooth_cubic_examples(fermat, paper_cubic):
    assert smooth_cubic(fermat)
    cone = CubicForm4({(3, 0, 0, 0): 1, (0, 3, 0, 0): 1, (0, 0, 3, 0): 1})
    assert not smooth_cubic(cone)
    assert smooth_cubic(paper_cubic)


def test_smooth_cubic_mod_p_oracle():
    # one-directional: an F_p- or F_{p^2}-rational singular point on a
    # surface certified smooth over Q can only come from bad reduction;
    # for these tiny singular examples the scan and the certificate agree
    from cubicdescent.frobenius import singular_points_mod_p

    cone = CubicForm4({(3, 0, 0, 0): 1, (0, 3, 0, 0): 1, (0, 0, 3, 0): 1})
    assert not smooth_cubic(cone)
    assert singular_points_mod_p(cone, ExtField(5, 1)) > 0
    fermat = CubicForm4({(3, 0, 0, 0): 1, (0, 3, 0, 0): 1,
                         (0, 0, 3, 0): 1, (0, 0, 0, 3): 1})
    assert smooth_cubic(fermat)
    assert singular_points_mod_p(fermat, ExtField(5, 1)) == 0
    assert singular_points_mod_p(fermat, ExtField(5, 2)) == 0
    node = CubicForm4({(1, 0, 2, 0): 1, (0, 1, 0, 2): 1,
                       (1, 1, 1, 0): 1})  # singular at (0:0:0:1)
    assert not smooth_cubic(node)
    assert singular_points_mod_p(node, ExtField(7, 1)) > 0


def test_smooth_dp4_examples(paper_dp4):
    assert smooth_dp4(DP4Surface(QuadForm.diagonal([1, 1, 1, 1, 1]),
                                 QuadForm.diagonal([0, 1, 2, 3, 4])))
    # shared 2-dimensional kernel: a singular pencil
    assert not smooth_dp4(DP4Surface(QuadForm.diagonal([1, 2, 3, 0, 0]),
                                     QuadForm.diagonal([1, 1, 1, 0, 0])))
    assert smooth_dp4(paper_dp4)


def test_smooth_dp4_matches_quintic_criterion():
    # a smooth quadric intersection has squarefree pencil determinant of
    # full projective degree; check agreement on random small pencils
    import random as _r

    from cubicdescent.forms import pencil_determinant
    from conftest import random_quadform

    rng = _r.Random(29)
    checked = 0
    while checked < 6:
        try:
            v = DP4Surface(random_quadform(rng, 5, 2), random_quadform(rng, 5, 2))
        except Exception:
            continue
        bq = pencil_determinant(v.Q0, v.Q1)
        if bq.is_zero():
            continue
        dehom = bq.dehomogenized()
        crit = dehom.degree == 5 and dehom.is_squarefree()
        assert smooth_dp4(v) == crit
        checked += 1
