"""Small Buchberger engine over Q for exact smoothness certificates.

Sparse multivariate polynomials in up to 5 variables, grevlex order with
x0 < x1 < ... Content is stripped to primitive integer form after every
reduction to keep coefficients small.  Pair selection is by (lcm degree,
lcm, indices), with the coprime-leading-term and chain criteria.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, lcm as int_lcm

from .errors import PreconditionError, ZeroPolynomialError


def grevlex_key(e: tuple):
    """Sort key for grevlex with x0 < x1 < ...: compare total degree, then
    negated exponents from the smallest variable."""
    return (sum(e), tuple(-x for x in e))


class MPoly:
    """Sparse multivariate polynomial with Fraction coefficients."""

    __slots__ = ("nvars", "terms", "_lm")

    def __init__(self, nvars: int, terms: dict):
        if nvars < 1 or nvars > 5:
            raise PreconditionError("supported variable counts: 1..5")
        clean = {}
        for e, c in terms.items():
            e = tuple(int(v) for v in e)
            if len(e) != nvars or any(v < 0 for v in e):
                raise PreconditionError(f"bad exponent {e}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
        self.nvars = nvars
        self.terms = {e: c for e, c in clean.items() if c}
        self._lm = None

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def lm(self) -> tuple:
        if self._lm is None:
            if not self.terms:
                raise ZeroPolynomialError("leading monomial of zero")
            self._lm = max(self.terms, key=grevlex_key)
        return self._lm

    def lc(self) -> Fraction:
        return self.terms[self.lm()]

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MPoly(self.nvars, out)

    def __sub__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) - c
        return MPoly(self.nvars, out)

    def __neg__(self):
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def term_mul(self, coeff, mono):
        return MPoly(self.nvars,
                     {tuple(a + b for a, b in zip(e, mono)): c * coeff
                      for e, c in self.terms.items()})

    def primitive(self) -> "MPoly":
        """Primitive integer form with positive leading coefficient."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = int_lcm(den, c.denominator)
        ints = {e: int(c * den) for e, c in self.terms.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        if ints[self.lm()] < 0:
            g = -g
        return MPoly(self.nvars, {e: Fraction(v, g) for e, v in ints.items()})

    def monic(self) -> "MPoly":
        c = self.lc()
        return MPoly(self.nvars, {e: v / c for e, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, MPoly) and self.nvars == other.nvars \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        if not self.terms:
            return "MPoly(0)"
        parts = []
        for e in sorted(self.terms, key=grevlex_key, reverse=True):
            parts.append(f"{self.terms[e]}*x^{e}")
        return "MPoly(" + " + ".join(parts) + ")"


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def reduce_poly(f: MPoly, basis: list) -> MPoly:
    """Full normal form of f modulo basis, content-normalized."""
    rem: dict = {}
    work = MPoly(f.nvars, dict(f.terms))
    while work:
        m = work.lm()
        c = work.terms[m]
        for g in basis:
            gm = g.lm()
            if _divides(gm, m):
                q = tuple(a - b for a, b in zip(m, gm))
                work = work - g.term_mul(c / g.lc(), q)
                break
        else:
            rem[m] = c
            work = MPoly(work.nvars, {e: v for e, v in work.terms.items() if e != m})
    out = MPoly(f.nvars, rem)
    return out.primitive() if out else out


def s_polynomial(f: MPoly, g: MPoly) -> MPoly:
    l = _mono_lcm(f.lm(), g.lm())
    qf = tuple(a - b for a, b in zip(l, f.lm()))
    qg = tuple(a - b for a, b in zip(l, g.lm()))
    return f.term_mul(1 / f.lc(), qf) - g.term_mul(1 / g.lc(), qg)


class GroebnerBasis:
    """Reduced Groebner basis w.r.t. grevlex: monic, inter-reduced."""

    def __init__(self, generators: list):
        self.generators = generators

    def reduce(self, f: MPoly) -> MPoly:
        return reduce_poly(f, self.generators)

    def contains(self, f: MPoly) -> bool:
        return self.reduce(f).is_zero()

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].degree() == 0

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"GroebnerBasis({self.generators})"


def buchberger(gens: list) -> GroebnerBasis:
    """Buchberger with the coprime and chain criteria, normal selection."""
    basis = [g.primitive() for g in gens if g]
    if not basis:
        raise PreconditionError("empty generator list")
    nvars = basis[0].nvars

    pairs = []
    counter = 0

    def push(i, j):
        nonlocal counter
        l = _mono_lcm(basis[i].lm(), basis[j].lm())
        heapq.heappush(pairs, (sum(l), grevlex_key(l), counter, i, j, l))
        counter += 1

    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            push(i, j)

    dropped = set()
    while pairs:
        _, _, _, i, j, l = heapq.heappop(pairs)
        if (i, j) in dropped:
            continue
        fi, fj = basis[i], basis[j]
        # coprime criterion
        if _mono_lcm(fi.lm(), fj.lm()) == tuple(a + b for a, b in zip(fi.lm(), fj.lm())):
            continue
        # chain criterion: some k with lm(k) | lcm and both pairs handled
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(basis[k].lm(), l):
                p1 = (min(i, k), max(i, k))
                p2 = (min(j, k), max(j, k))
                if p1 in dropped and p2 in dropped:
                    skip = True
                    break
        if skip:
            dropped.add((i, j))
            continue
        dropped.add((i, j))
        s = s_polynomial(fi, fj)
        r = reduce_poly(s, basis)
        if r:
            basis.append(r)
            new = len(basis) - 1
            for k in range(new):
                push(k, new)
            if r.degree() == 0:
                break

    return GroebnerBasis(_interreduce(basis, nvars))


def _interreduce(basis: list, nvars: int) -> list:
    # drop generators whose leading term is divisible by another's
    basis = [g for g in basis if g]
    if any(g.degree() == 0 for g in basis):
        return [MPoly.constant(nvars, 1)]
    keep = []
    lms = [g.lm() for g in basis]
    for i, g in enumerate(basis):
        if any(j != i and _divides(lms[j], lms[i])
               and (not _divides(lms[i], lms[j]) or j < i)
               for j in range(len(basis))):
            continue
        keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = reduce_poly(g, others) if others else g.primitive()
        if r:
            out.append(r.monic())
    out.sort(key=lambda g: grevlex_key(g.lm()))
    return out


def is_unit_ideal(gens: list) -> bool:
    return buchberger(gens).is_unit()


def _dehomogenize_cubic(F, chart: int) -> MPoly:
    """Cubic form in 4 variables with x_chart = 1, as an MPoly in 3 vars."""
    terms = {}
    for e, c in F.coeffs.items():
        rest = tuple(v for k, v in enumerate(e) if k != chart)
        terms[rest] = terms.get(rest, Fraction(0)) + c
    return MPoly(3, terms)


def smooth_cubic(S) -> bool:
    """Exact smoothness of a cubic surface by chart-wise unit-ideal tests
    on the Jacobian ideal (F, dF/dx0, ..., dF/dx3)."""
    from .forms import CubicForm4

    F = S.F if hasattr(S, "F") else S
    if not isinstance(F, CubicForm4) or F.is_zero():
        raise ZeroPolynomialError("smoothness of a zero form")
    partials = []
    for i in range(4):
        terms = {}
        for e, c in F.coeffs.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            terms[tuple(e2)] = terms.get(tuple(e2), Fraction(0)) + c * e[i]
        partials.append(terms)
    for chart in range(4):
        gens = [_dehomogenize_cubic(F, chart)]
        for terms in partials:
            rest = {}
            for e, c in terms.items():
                key = tuple(v for k, v in enumerate(e) if k != chart)
                rest[key] = rest.get(key, Fraction(0)) + c
            g = MPoly(3, rest)
            if g:
                gens.append(g)
        if not is_unit_ideal(gens):
            return False
    return True


def _quad_mpoly(q, chart: int) -> MPoly:
    """5-variable quadric dehomogenized at x_chart = 1 (4 variables)."""
    terms = {}
    n = q.n
    for i in range(n):
        for j in range(i, n):
            c = q.gram[i, j] if i == j else 2 * q.gram[i, j]
            if not c:
                continue
            e = [0] * n
            e[i] += 1
            e[j] += 1
            key = tuple(v for k, v in enumerate(e) if k != chart)
            terms[key] = terms.get(key, Fraction(0)) + c
    return MPoly(n - 1, terms)


def smooth_dp4(V) -> bool:
    """Exact smoothness of an intersection of two quadrics in P^4:
    chart-wise unit-ideal test on (Q0, Q1, 2x2 Jacobian minors)."""
    q0, q1 = V.Q0, V.Q1
    grad0 = [[2 * q0.gram[i, j] for j in range(5)] for i in range(5)]
    grad1 = [[2 * q1.gram[i, j] for j in range(5)] for i in range(5)]
    for chart in range(5):
        gens = [_quad_mpoly(q0, chart), _quad_mpoly(q1, chart)]
        for i in range(5):
            for j in range(i + 1, 5):
                # minor: d0/dxi * d1/dxj - d0/dxj * d1/dxi (linear * linear)
                terms = {}
                for a in range(5):
                    for b in range(5):
                        c = grad0[i][a] * grad1[j][b] - grad0[j][a] * grad1[i][b]
                        if not c:
                            continue
                        e = [0] * 5
                        e[a] += 1
                        e[b] += 1
                        key = tuple(v for k, v in enumerate(e) if k != chart)
                        terms[key] = terms.get(key, Fraction(0)) + c
                m = MPoly(4, terms)
                if m:
                    gens.append(m)
        gens = [g for g in gens if g]
        if not gens:
            return False
        if not is_unit_ideal(gens):
            return False
    return True
