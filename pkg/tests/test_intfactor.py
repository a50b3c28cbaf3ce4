import random
from fractions import Fraction

import pytest

from cubicdescent.intfactor import (factorize, is_perfect_square,
                                    is_probable_prime, primes_up_to,
                                    squarefree_class, squarefree_part)


def test_squarefree_900():
    # N(r) of the worked quintic: the product of root factors 2 * 6 * 75
    assert 2 * 6 * 75 == 900
    res = squarefree_part(900)
    assert res.value == 1 and res.complete


def test_squarefree_basicexamples():
    assert squarefree_part(6).value == 6
    assert squarefree_part(75).value == 3      # 75 = 3 * 5^2
    assert squarefree_part(-6).value == -6
    assert squarefree_part(-4).value == -1
    with pytest.raises(ValueError):
        squarefree_part(0)


def test_squarefree_reconstruction():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randint(2, 10 ** 9) * rng.choice([1, -1])
        res = squarefree_part(n)
        assert res.complete
        q, r = divmod(n, res.value)
        assert r == 0 and is_perfect_square(q)
        # certificate really is squarefree
        for p, e in factorize(abs(res.value))[0].items():
            assert e == 1


def test_flagged_partial_result():
    # two large primes beyond the tiny trial bound and with rho disabled
    n = 1000003 * 1000033
    res = squarefree_part(n, trial_bound=10)
    # rho still factors this; force the flag by calling factorize directly
    factors, cofactor = factorize(n, trial_bound=10, rho_rounds=0)
    assert cofactor == n and factors == {}
    assert res.complete  # the default configuration does factor it


def test_is_perfect_square():
    assert is_perfect_square(Fraction(4, 9))
    assert not is_perfect_square(2)
    assert is_perfect_square(82944)            # 288^2, the radicand product
    assert not is_perfect_square(-4)
    assert is_perfect_square(0)


def test_squarefree_class_rational():
    assert squarefree_class(Fraction(8, 9)) == 2
    assert squarefree_class(Fraction(-1, 2)) == -2
    assert squarefree_class(0) == 0


def test_primality_and_sieve():
    ps = primes_up_to(100)
    assert len(ps) == 25 and ps[0] == 2 and ps[-1] == 97
    assert is_probable_prime(2 ** 61 - 1)
    assert not is_probable_prime(2 ** 61 + 1)
