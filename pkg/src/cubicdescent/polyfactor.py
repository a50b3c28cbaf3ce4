"""Factorization of univariate polynomials over Q, up to degree 8.

Pipeline: rational-root stripping, Yun squarefree decomposition, then per
squarefree part a Zassenhaus round: factor mod a good odd prime, Hensel
lift past the Mignotte bound, and recombine factors by subset search.
Degrees are capped at 8, so subset recombination never exceeds 2^8 trials.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt

from .errors import PreconditionError, ZeroPolynomialError
from .gfpoly import gp_factor_squarefree, gp_from_int_poly, gp_is_squarefree
from .intfactor import factorize, iter_primes
from .unipoly import UniPoly

MAX_DEGREE = 8


def factor_unipoly(f: UniPoly):
    """Factor f into monic irreducibles over Q.

    Returns (constant, [(factor, multiplicity), ...]) with constant a
    Fraction and each factor monic irreducible, such that constant times
    the product of factor^multiplicity equals f.  Factors are sorted by
    (degree, coefficients).
    """
    if f.is_zero():
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    if f.degree > MAX_DEGREE:
        raise PreconditionError(f"factorization beyond degree {MAX_DEGREE} unsupported")
    if f.degree == 0:
        return f.lc(), []

    constant = f.lc()
    work = f.monic()

    factors: list[tuple[UniPoly, int]] = []

    # Rational roots first: strip linear factors with multiplicity.
    for root in _rational_roots(work):
        lin = UniPoly([-root, 1])
        mult = 0
        while True:
            q, r = divmod(work, lin)
            if not r.is_zero():
                break
            work = q
            mult += 1
        if mult:
            factors.append((lin, mult))

    if work.degree >= 1:
        for sqf, mult in _yun_squarefree(work):
            for irr in _factor_squarefree(sqf):
                factors.append((irr, mult))

    factors.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return constant, factors


def rational_roots(f: UniPoly) -> list:
    """All rational roots of f (without multiplicity), sorted."""
    if f.is_zero():
        raise ZeroPolynomialError("roots of the zero polynomial")
    if f.degree == 0:
        return []
    return _rational_roots(f.monic())


def is_irreducible(f: UniPoly) -> bool:
    if f.degree < 1:
        return False
    _, factors = factor_unipoly(f)
    return len(factors) == 1 and factors[0][1] == 1


def _rational_roots(f: UniPoly) -> list:
    """Rational roots of monic f by the rational root theorem.

    May miss roots only when both endpoint coefficients resist factoring,
    in which case the Zassenhaus stage still finds the linear factors.
    """
    if f.degree < 1:
        return []
    _, prim = f.primitive()
    c = prim.int_coeffs()
    k = 0
    while c[k] == 0:
        k += 1
    roots = [Fraction(0)] if k else []
    a0, an = abs(c[k]), abs(c[-1])
    nf, nco = factorize(a0)
    df, dco = factorize(an)
    if nco != 1 or dco != 1:
        return sorted(set(roots))
    for num in _divisors(nf):
        for den in _divisors(df):
            if gcd(num, den) != 1:
                continue
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if f.evaluate(cand) == 0:
                    roots.append(cand)
    return sorted(set(roots))


def _divisors(factored: dict) -> list:
    divs = [1]
    for p, e in factored.items():
        divs = [d * p ** i for d in divs for i in range(e + 1)]
    return sorted(divs)


def _yun_squarefree(f: UniPoly) -> list:
    """Yun's algorithm: [(g_i, i)] with f = prod g_i^i, each g_i squarefree."""
    f = f.monic()
    df = f.derivative()
    g = f.gcd(df)
    if g.degree == 0:
        return [(f, 1)]
    out = []
    b = f // g
    c = df // g
    d = c - b.derivative()
    i = 1
    while b.degree >= 1:
        a = b.gcd(d)
        if a.degree >= 1:
            out.append((a, i))
            b = b // a
            c = d // a
        else:
            c = d
        d = c - b.derivative()
        i += 1
    return out


def _factor_squarefree(f: UniPoly) -> list:
    """Monic irreducible factors of monic squarefree f (degree >= 1)."""
    if f.degree == 1:
        return [f]
    _, prim = f.primitive()
    parts = _zassenhaus(prim.int_coeffs())
    out = []
    for c in parts:
        out.append(UniPoly(c).monic())
    return out


def _choose_prime(c: list) -> int:
    for p in iter_primes():
        if p == 2:
            continue
        if c[-1] % p == 0:
            continue
        fp = gp_from_int_poly(c, p)
        if len(fp) - 1 == len(c) - 1 and gp_is_squarefree(fp, p):
            return p
    raise AssertionError("unreachable")


def _mignotte_bound(c: list) -> int:
    """Coefficient bound for any factor of the integer polynomial c."""
    n = len(c) - 1
    norm = isqrt(sum(v * v for v in c)) + 1
    return (1 << n) * norm * abs(c[-1])


def _sym_rem(v: int, m: int) -> int:
    v %= m
    if v > m // 2:
        v -= m
    return v


def _trunc(c: list, m: int) -> list:
    out = [_sym_rem(v, m) for v in c]
    while out and out[-1] == 0:
        out.pop()
    return out


def _int_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _int_divmod(a: list, b: list):
    """Division in Z[x]; returns (quo, rem) or None when lc(b) does not
    divide exactly along the way."""
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    quo = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        if a[db + k] % b[-1] != 0:
            return None
        c = a[db + k] // b[-1]
        quo[k] = c
        if c:
            for j, y in enumerate(b):
                a[j + k] -= c * y
    while a and a[-1] == 0:
        a.pop()
    return quo, a


def _hensel_step(m, f, g, h, s, t):
    """Lift f = g*h (mod m), s*g + t*h = 1 (mod m) to modulus m^2.

    Requires lc(h) = 1 and deg f = deg g + deg h.  Classic quadratic
    Hensel step in Z[x].
    """
    mm = m * m

    def mul(a, b):
        return _trunc(_int_mul(a, b), mm)

    def add(a, b):
        n = max(len(a), len(b))
        out = [0] * n
        for i, x in enumerate(a):
            out[i] += x
        for i, x in enumerate(b):
            out[i] += x
        return _trunc(out, mm)

    def sub(a, b):
        return add(a, [-x for x in b])

    def divmod_monic(a, b):
        a = list(a)
        db = len(b) - 1
        if len(a) - 1 < db:
            return [], _trunc(a, mm)
        quo = [0] * (len(a) - db)
        for k in range(len(a) - 1 - db, -1, -1):
            c = a[db + k] % mm
            quo[k] = c
            if c:
                for j, y in enumerate(b):
                    a[j + k] = (a[j + k] - c * y) % mm
        return _trunc(quo, mm), _trunc(a, mm)

    e = sub(f, _int_mul(g, h))
    q, r = divmod_monic(mul(s, e), h)
    gg = add(g, add(mul(t, e), mul(q, g)))
    hh = add(h, r)

    b = sub(add(mul(s, gg), mul(t, hh)), [1])
    c, d = divmod_monic(mul(s, b), hh)
    ss = sub(s, d)
    tt = sub(t, add(mul(t, b), mul(c, gg)))
    return gg, hh, ss, tt


def _hensel_lift_sub(p, f, fk, m):
    """Recurse with an explicit modulus m = p^L already reached."""
    r = len(fk)
    if r == 1:
        inv = pow(f[-1] % m, -1, m)
        return [_trunc([v * inv for v in f], m)]
    k = r // 2
    g = [f[-1] % p]
    for q in fk[:k]:
        g = _trunc(_int_mul(g, q), p)
    h = [1]
    for q in fk[k:]:
        h = _trunc(_int_mul(h, q), p)
    s, t = _gp_xgcd_int(g, h, p)
    mm = p
    while mm < m:
        g, h, s, t = _hensel_step(mm, f, g, h, s, t)
        mm = mm * mm
    return _hensel_lift_sub(p, g, fk[:k], m) + _hensel_lift_sub(p, h, fk[k:], m)


def _gp_xgcd_int(g, h, p):
    """s, t with s*g + t*h = 1 mod p, deg s < deg h, deg t < deg g."""
    from .gfpoly import gp_divmod, gp_mul, gp_rem, gp_scale, gp_sub

    r0, r1 = gp_from_int_poly(g, p), gp_from_int_poly(h, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = gp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, gp_sub(s0, gp_mul(q, s1, p), p)
        t0, t1 = t1, gp_sub(t0, gp_mul(q, t1, p), p)
    assert len(r0) == 1, "factors not coprime mod p"
    inv = pow(r0[0], p - 2, p)
    s = gp_scale(s0, inv, p)
    t = gp_scale(t0, inv, p)
    # enforce degree constraints
    hq = gp_from_int_poly(h, p)
    gq = gp_from_int_poly(g, p)
    s = gp_rem(s, hq, p)
    t = gp_rem(t, gq, p)
    return [int(v) for v in s], [int(v) for v in t]


def _zassenhaus(c: list) -> list:
    """Irreducible factors (integer coefficient lists) of a primitive
    squarefree integer polynomial of degree >= 2."""
    n = len(c) - 1
    if n == 1:
        return [c]
    p = _choose_prime(c)
    modular = gp_factor_squarefree(gp_from_int_poly(c, p), p)
    if len(modular) == 1:
        return [c]

    bound = _mignotte_bound(c)
    l = 1
    while p ** l < 2 * bound + 1:
        l += 1
    m = p ** l
    lifted = _hensel_lift_entry(p, c, [list(q) for q in modular], l)

    # Subset recombination (Zassenhaus).
    result = []
    remaining = list(range(len(lifted)))
    current = list(c)
    size = 1
    while 2 * size <= len(remaining):
        found = True
        while found:
            found = False
            for subset in combinations(remaining, size):
                trial = [current[-1] % m]
                for i in subset:
                    trial = _trunc(_int_mul(trial, lifted[i]), m)
                trial = _primitive_int(trial)
                dv = _int_divmod(current, trial)
                if dv is not None and not dv[1]:
                    result.append(trial)
                    current = dv[0]
                    remaining = [i for i in remaining if i not in subset]
                    found = True
                    break
        size += 1
    if len(current) - 1 > 0:
        result.append(current)
    result.sort(key=lambda f: (len(f), tuple(f)))
    return result


def _hensel_lift_entry(p, f, fk, l):
    m = p ** l
    return _hensel_lift_sub(p, f, fk, m)


def _primitive_int(c: list) -> list:
    g = 0
    for v in c:
        g = gcd(g, v)
    if g == 0:
        return list(c)
    if c[-1] < 0:
        g = -g
    return [v // g for v in c]
