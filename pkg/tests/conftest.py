"""Shared fixtures: the worked example surfaces and random generators."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from cubicdescent.descent import DP4Surface
from cubicdescent.forms import CubicForm4, ProjLine, ProjPoint, QuadForm
from cubicdescent.geometry import CubicSurface
from cubicdescent.linalg import Matrix
from cubicdescent.unipoly import UniPoly

# (T - 2)((T - 3)^2 - 3)((T + 9)^2 - 6), expanded
PAPER_P = UniPoly([-900, 1134, -288, -51, 10, 1])

PAPER_Q0_COEFFS = {
    (0, 0): 4, (0, 1): 10, (0, 2): 20, (0, 3): -112, (0, 4): -134,
    (1, 1): 7, (1, 2): -26, (1, 3): -134, (1, 4): -148,
    (2, 2): -2, (2, 3): 140, (2, 4): -2,
    (3, 3): 10, (3, 4): -38, (4, 4): -323,
}
PAPER_Q1_COEFFS = {
    (0, 0): 47, (0, 1): -18, (0, 2): 10, (0, 3): -188, (0, 4): -178,
    (1, 1): 63, (1, 2): -22, (1, 3): 376, (1, 4): -86,
    (2, 2): 71, (2, 3): -580, (2, 4): 146,
    (3, 3): -364, (3, 4): -296, (4, 4): -21,
}

# the final cubic, variables (x, y, z, w) -> (x0, x1, x2, x3)
PAPER_CUBIC_COEFFS = {
    (2, 1, 0, 0): 2, (2, 0, 1, 0): 6, (1, 2, 0, 0): -4, (1, 1, 1, 0): 6,
    (1, 1, 0, 1): 4, (1, 0, 2, 0): -10, (1, 0, 1, 1): -4, (1, 0, 0, 2): -7,
    (0, 3, 0, 0): 2, (0, 2, 1, 0): -9, (0, 2, 0, 1): -4, (0, 1, 2, 0): 4,
    (0, 1, 1, 1): -26, (0, 1, 0, 2): 6, (0, 0, 3, 0): 1, (0, 0, 2, 1): 10,
    (0, 0, 1, 2): -7, (0, 0, 0, 3): -5,
}

PAPER_POINT = (8, -13, 4, 2, -3)
PAPER_LINE_POINTS = ((5, 0, 0, -7), (0, 5, 10, 2))


@pytest.fixture(scope="session")
def paper_p() -> UniPoly:
    return PAPER_P


@pytest.fixture(scope="session")
def paper_dp4() -> DP4Surface:
    return DP4Surface(QuadForm.from_poly_coeffs(5, PAPER_Q0_COEFFS),
                      QuadForm.from_poly_coeffs(5, PAPER_Q1_COEFFS))


@pytest.fixture(scope="session")
def paper_cubic() -> CubicSurface:
    line = ProjLine.from_points(ProjPoint(PAPER_LINE_POINTS[0]),
                                ProjPoint(PAPER_LINE_POINTS[1]))
    return CubicSurface(CubicForm4(PAPER_CUBIC_COEFFS), known_line=line)


@pytest.fixture(scope="session")
def paper_strategy(paper_p):
    from cubicdescent.descent import run_strategy

    return run_strategy(paper_p)


@pytest.fixture(scope="session")
def fermat() -> CubicForm4:
    return CubicForm4({(3, 0, 0, 0): 1, (0, 3, 0, 0): 1,
                       (0, 0, 3, 0): 1, (0, 0, 0, 3): 1})


def random_quadform(rng: random.Random, n: int = 5, bound: int = 4) -> QuadForm:
    return QuadForm.from_poly_coeffs(
        n, {(i, j): rng.randint(-bound, bound)
            for i in range(n) for j in range(i, n)})


def random_dp4_with_point(rng: random.Random, coord_bound: int = 3,
                          coeff_bound: int = 4):
    """A quadric pair through a random rational point (adjusting one
    diagonal Gram entry per form), retried until the pencil is genuine."""
    while True:
        coords = [rng.randint(-coord_bound, coord_bound) for _ in range(5)]
        if all(c == 0 for c in coords):
            continue
        point = ProjPoint(coords)
        i0 = next(i for i in range(5) if point[i] != 0)
        quads = []
        for _ in range(2):
            q = random_quadform(rng, 5, coeff_bound)
            val = q.evaluate(point.coords)
            g = [[q.gram[a, b] for b in range(5)] for a in range(5)]
            g[i0][i0] -= val / Fraction(point[i0]) ** 2
            quads.append(QuadForm(Matrix.from_rows(g)))
        try:
            return DP4Surface(quads[0], quads[1]), point
        except Exception:
            continue


def random_squarefree_quintic(rng: random.Random, bound: int = 9,
                              avoid_root_zero: bool = False) -> UniPoly:
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(5)] + [1]
        p = UniPoly(coeffs)
        if avoid_root_zero and p[0] == 0:
            continue
        if p.is_squarefree():
            return p


def random_cubic_with_line(rng: random.Random, bound: int = 3):
    """(CubicSurface-form F, l0, l1) with the line l0 = l1 = 0 on F = l0*q0 + l1*q1."""
    from cubicdescent.forms import LinForm
    from cubicdescent.linalg import rank

    while True:
        l0 = LinForm([rng.randint(-2, 2) for _ in range(4)])
        l1 = LinForm([rng.randint(-2, 2) for _ in range(4)])
        if rank(Matrix.from_rows([l0.coeffs, l1.coeffs])) != 2:
            continue
        terms: dict = {}
        for lf, _ in ((l0, 0), (l1, 1)):
            q = {(i, j): rng.randint(-bound, bound)
                 for i in range(4) for j in range(i, 4)}
            for (i, j), c in q.items():
                if c == 0:
                    continue
                for k in range(4):
                    if lf.coeffs[k] == 0:
                        continue
                    e = [0, 0, 0, 0]
                    e[i] += 1
                    e[j] += 1
                    e[k] += 1
                    e = tuple(e)
                    terms[e] = terms.get(e, Fraction(0)) + c * lf.coeffs[k]
        F = CubicForm4(terms)
        if not F.is_zero():
            return F, l0, l1
