"""Integer squarefree parts and the factoring machinery behind them.

Trial division up to a configurable bound, then Brent-cycle Pollard rho
with Miller-Rabin primality testing.  A cofactor that resists factoring
is returned flagged, never silently treated as prime or squarefree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Deterministic Miller-Rabin witness set, valid for n < 3.3e24; for larger
# inputs the same bases make the test probabilistic with negligible error.
_MR_BASES = _SMALL_PRIMES


def is_square_int(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def is_perfect_square(q) -> bool:
    """True iff the rational q is the square of a rational."""
    q = Fraction(q)
    if q < 0:
        return False
    return is_square_int(q.numerator) and is_square_int(q.denominator)


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of composite odd n, or n itself on failure.

    Brent's variant with a deterministic sequence of offsets.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        y, m = 2, 128
        g = r = q = 1
        x = ys = 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    return n


def factorize(n: int, trial_bound: int = 100000, rho_rounds: int = 64):
    """Factor |n| into primes.

    Returns (factors, cofactor): factors maps prime -> exponent and
    cofactor is 1 on success, else a composite that resisted factoring
    (factors * cofactor * sign == n).
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    m = abs(n)
    factors: dict[int, int] = {}
    for p in range(2, trial_bound + 1):
        if p * p > m:
            break
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
    stack = [m] if m > 1 else []
    budget = rho_rounds
    cofactor = 1
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        if budget <= 0:
            cofactor *= m
            continue
        budget -= 1
        d = _pollard_brent(m)
        if d in (1, m):
            cofactor *= m
            continue
        stack.append(d)
        stack.append(m // d)
    return factors, cofactor


@dataclass(frozen=True)
class SquarefreeResult:
    """Result of a squarefree-part computation.

    value satisfies n = value * square when complete; when complete is
    False an unfactored composite cofactor was assumed squarefree and
    value is only a candidate.
    """

    value: int
    factors: dict = field(default_factory=dict)
    cofactor: int = 1
    complete: bool = True

    def __int__(self):
        return self.value


def squarefree_part(n: int, trial_bound: int = 100000) -> SquarefreeResult:
    """Squarefree s with n / s a perfect square, plus the certificate."""
    if n == 0:
        raise ValueError("squarefree part of 0 is undefined")
    sign = -1 if n < 0 else 1
    factors, cofactor = factorize(n, trial_bound=trial_bound)
    s = sign
    for p, e in factors.items():
        if e % 2:
            s *= p
    if cofactor != 1:
        # The cofactor may hide a square; flag rather than guess.
        if is_square_int(cofactor):
            return SquarefreeResult(s, factors, 1, True)
        return SquarefreeResult(s * cofactor, factors, cofactor, False)
    return SquarefreeResult(s, factors, 1, True)


def squarefree_class(q) -> int:
    """Squarefree integer representing the class of rational q in Q*/(Q*)^2.

    Returns 0 for q = 0.
    """
    q = Fraction(q)
    if q == 0:
        return 0
    res = squarefree_part(q.numerator * q.denominator)
    if not res.complete:
        raise ValueError(f"could not certify squarefree part of {q}")
    return res.value


def primes_up_to(n: int) -> list:
    """Primes <= n by sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(sieve[p * p::p]))
    return [i for i in range(2, n + 1) if sieve[i]]


def iter_primes():
    """Unbounded prime iterator (incremental trial division)."""
    yield 2
    found = [2]
    n = 3
    while True:
        isp = True
        for p in found:
            if p * p > n:
                break
            if n % p == 0:
                isp = False
                break
        if isp:
            found.append(n)
            yield n
        n += 2
