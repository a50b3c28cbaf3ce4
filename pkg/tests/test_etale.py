import random
from fractions import Fraction

import pytest

from cubicdescent.errors import (NonGeneratorError, NotEtaleError,
                                 ZeroDivisorError)
from cubicdescent.etale import (EtaleAlgebra, from_split_values,
                                split_idempotents)
from cubicdescent.unipoly import UniPoly


def test_constructor_validation():
    with pytest.raises(NotEtaleError):
        EtaleAlgebra(UniPoly([1, 1]))                   # degree 1
    with pytest.raises(NotEtaleError):
        EtaleAlgebra(UniPoly([0, 0, 0, 0, 0, 2]))       # not monic
    with pytest.raises(NotEtaleError):
        EtaleAlgebra(UniPoly.from_roots([1, 1, 2, 3, 4]))  # repeated root


def test_charpoly_of_r_is_p(paper_p):
    A = EtaleAlgebra(paper_p)
    assert A.r.charpoly_of() == paper_p
    assert A.r.conjugate_data() == paper_p


def test_paper_trace_and_norm(paper_p):
    A = EtaleAlgebra(paper_p)
    # trace = -(degree-4 coefficient), norm = 2 * 6 * 75 = 900 = 30^2
    assert A.r.trace() == -10
    assert A.r.norm() == 900


def test_inverse_and_zero_divisor(paper_p):
    A = EtaleAlgebra(paper_p)
    r = A.r
    assert paper_p.evaluate(0) == -900      # r is a unit
    assert r * r.inverse() == A.one()
    with pytest.raises(ZeroDivisorError):
        (r - 2).inverse()                   # (T - 2) divides p


def test_different_of_r_is_pprime(paper_p):
    A = EtaleAlgebra(paper_p)
    r = A.r
    assert r.different() == r.evaluate_poly(paper_p.derivative())


def test_split_different_conjugates():
    roots = [0, 1, 2, 3, 4]
    A = EtaleAlgebra.from_roots(roots)
    d = A.r.different()
    chi = d.charpoly_of()
    # conjugates are prod_{j != i}(r_i - r_j); at i = 0: (-1)(-2)(-3)(-4) = 24
    expected = []
    for i, ri in enumerate(roots):
        prod = 1
        for j, rj in enumerate(roots):
            if j != i:
                prod *= ri - rj
        expected.append(prod)
    for v in expected:
        assert chi.evaluate(v) == 0
    assert chi == UniPoly.from_roots(expected)


def test_non_generator_error():
    roots = [-2, -1, 0, 1, 2]
    A = EtaleAlgebra.from_roots(roots)
    # r^2 has charpoly with repeated roots (values 4, 1, 0, 1, 4)
    x = A.r * A.r
    assert not x.is_generator()
    with pytest.raises(NonGeneratorError):
        x.different()
    one = A.one()
    with pytest.raises(NonGeneratorError):
        one.different()


def test_trace_norm_symbolic_relations(paper_p):
    A = EtaleAlgebra(paper_p)
    rng = random.Random(8)
    for _ in range(15):
        e = A.element([rng.randint(-4, 4) for _ in range(5)])
        chi = e.charpoly_of()
        assert e.trace() == -chi[4]
        assert e.norm() == -chi[0]          # (-1)^5 * constant term
    e1 = A.element([rng.randint(-3, 3) for _ in range(5)])
    e2 = A.element([rng.randint(-3, 3) for _ in range(5)])
    assert (e1 * e2).norm() == e1.norm() * e2.norm()
    assert (e1 + e2).trace() == e1.trace() + e2.trace()
    assert (e1 * 3).trace() == 3 * e1.trace()


def test_split_algebra_coordinatewise_oracle():
    roots = [1, 2, 3, 4, 6]
    A = EtaleAlgebra.from_roots(roots)
    rng = random.Random(12)
    for _ in range(10):
        u = [Fraction(rng.randint(-5, 5)) for _ in range(5)]
        v = [Fraction(rng.randint(-5, 5)) for _ in range(5)]
        eu = from_split_values(A, roots, u)
        ev = from_split_values(A, roots, v)
        assert eu * ev == from_split_values(A, roots, [a * b for a, b in zip(u, v)])
        assert eu + ev == from_split_values(A, roots, [a + b for a, b in zip(u, v)])
        prod = Fraction(1)
        for a in u:
            prod *= a
        assert eu.norm() == prod
        assert eu.trace() == sum(u)


def test_idempotents():
    roots = [1, 2, 3, 4, 6]
    A = EtaleAlgebra.from_roots(roots)
    idem = split_idempotents(A, roots)
    total = A.zero()
    for i, e in enumerate(idem):
        assert e * e == e
        total = total + e
        for j, f in enumerate(idem):
            if i != j:
                assert (e * f).is_zero()
    assert total == A.one()
