"""Exhaustive bounded-height rational point search on quadric intersections.

Height convention: max absolute coordinate of the primitive integer
representative.  The kernel fixes the first three coordinates (outer
O(H^3) iteration space, sign-normalized), eliminates the x4^2 terms by a
constant pencil combination (the degree-1 subresultant of the two conics
in x4), and reads x4 = v/u off that linear relation; specializations with
u = v = 0 fall back to solving one conic exactly.  The inner (x2, x3)
plane is evaluated as int64 numpy grids after an exact overflow audit,
with object-dtype grids as the big-coefficient fallback; every candidate
is re-verified in exact integer arithmetic before being reported.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm

import numpy as np

from .descent import DP4Surface
from .forms import ProjPoint, QuadForm

INT64_GUARD = 1 << 62


@dataclass
class SearchResult:
    points: list
    height_bound: int
    convention: str = "max-abs-coordinate of primitive representative"
    elapsed_ms: float = 0.0

    @property
    def count(self) -> int:
        return len(self.points)


def verify_point(V: DP4Surface, P) -> bool:
    """Exact membership test on both quadrics."""
    coords = P.coords if isinstance(P, ProjPoint) else tuple(P)
    return V.Q0.evaluate(coords) == 0 and V.Q1.evaluate(coords) == 0


def _int_quadrics(V: DP4Surface):
    """Integer polynomial coefficient dicts {(i,j): int} of both quadrics,
    scaled independently."""
    out = []
    for q in (V.Q0, V.Q1):
        cs = {}
        den = 1
        for i in range(5):
            for j in range(i, 5):
                c = q.gram[i, j] if i == j else 2 * q.gram[i, j]
                den = lcm(den, Fraction(c).denominator)
        g = 0
        for i in range(5):
            for j in range(i, 5):
                c = q.gram[i, j] if i == j else 2 * q.gram[i, j]
                v = int(Fraction(c) * den)
                cs[(i, j)] = v
                g = gcd(g, v)
        if g:
            cs = {k: v // g for k, v in cs.items()}
        out.append(cs)
    return out


def _eval_int(cs: dict, x) -> int:
    total = 0
    for (i, j), c in cs.items():
        total += c * x[i] * x[j]
    return total


def brute_force_search(V: DP4Surface, H: int) -> SearchResult:
    """Naive five-fold loop over all primitive sign-normalized tuples.

    Oracle for completeness tests; do not use beyond tiny H.
    """
    t0 = time.monotonic()
    c0, c1 = _int_quadrics(V)
    found = set()
    rng = range(-H, H + 1)
    for x0 in range(0, H + 1):
        r1 = rng if x0 else range(0, H + 1)
        for x1 in r1:
            r2 = rng if (x0 or x1) else range(0, H + 1)
            for x2 in r2:
                r3 = rng if (x0 or x1 or x2) else range(0, H + 1)
                for x3 in r3:
                    r4 = rng if (x0 or x1 or x2 or x3) else range(1, H + 1)
                    for x4 in r4:
                        x = (x0, x1, x2, x3, x4)
                        if gcd(*x) != 1:
                            continue
                        if _eval_int(c0, x) == 0 and _eval_int(c1, x) == 0:
                            found.add(ProjPoint(x))
    pts = sorted(found)
    return SearchResult(pts, H, elapsed_ms=(time.monotonic() - t0) * 1000)


def _quadric_parts(cs: dict):
    """Split {(i,j): c} into the x3/x4 structure: constants A (x3^2),
    B (x3x4), C (x4^2), linear maps D (x3), E (x4), quadratic F."""
    A = cs.get((3, 3), 0)
    B = cs.get((3, 4), 0)
    C = cs.get((4, 4), 0)
    D = [cs.get((j, 3), 0) for j in range(3)]
    E = [cs.get((j, 4), 0) for j in range(3)]
    F = {(i, j): cs.get((i, j), 0) for i in range(3) for j in range(i, 3)}
    return A, B, C, D, E, F


def _solve_conic_in_x4(A, B, C, D, E, F0, x3, H):
    """Integer roots x4 of A*x3^2 + B*x3*x4 + C*x4^2 + D*x3 + E*x4 + F0,
    with the triple already substituted into D, E, F0 (ints)."""
    a = C
    b = B * x3 + E
    c = A * x3 * x3 + D * x3 + F0
    out = []
    if a == 0:
        if b == 0:
            if c == 0:
                out.extend(range(-H, H + 1))
            return out
        if c % b == 0:
            x4 = -c // b
            if abs(x4) <= H:
                out.append(x4)
        return out
    disc = b * b - 4 * a * c
    if disc < 0:
        return out
    r = isqrt(disc)
    if r * r != disc:
        return out
    for s in (r, -r):
        num = -b + s
        if num % (2 * a) == 0:
            x4 = num // (2 * a)
            if abs(x4) <= H:
                out.append(x4)
    return sorted(set(out))


def search(V: DP4Surface, H: int, x0_range=None) -> SearchResult:
    """All points of V with primitive-representative height <= H.

    x0_range optionally restricts the outer x0 loop to [lo, hi] (used for
    partitioned runs; the x0 = 0 strata belong to the partition
    containing 0).
    """
    if H < 1:
        raise ValueError("height bound must be >= 1")
    t0 = time.monotonic()
    c0, c1 = _int_quadrics(V)
    m = max(max(abs(v) for v in c0.values()), max(abs(v) for v in c1.values()))
    # worst-case |v| bound: see module docstring; stay clear of int64
    dtype = np.int64 if 32 * m * m * (H + 1) ** 2 < INT64_GUARD else object
    found: set = set()

    lo, hi = (0, H) if x0_range is None else x0_range
    lo = max(lo, 0)
    for x0 in range(lo, hi + 1):
        x1lo = -H if x0 > 0 else 0
        for x1 in range(x1lo, H + 1):
            _search_plane(c0, c1, x0, x1, H, dtype, found)

    if x0_range is None or lo == 0:
        # x0 = x1 = x2 = 0 strata: points (0:0:0:x3:x4)
        for x3 in range(0, H + 1):
            for x4 in (range(-H, H + 1) if x3 else range(1, H + 1)):
                if gcd(x3, x4) != 1:
                    continue
                x = (0, 0, 0, x3, x4)
                if _eval_int(c0, x) == 0 and _eval_int(c1, x) == 0:
                    found.add(ProjPoint(x))

    pts = sorted(found)
    return SearchResult(pts, H, elapsed_ms=(time.monotonic() - t0) * 1000)


def _search_plane(c0, c1, x0, x1, H, dtype, found):
    """Scan the (x2, x3, x4) block for fixed (x0, x1)."""
    A0, B0, C0, D0, E0, F0 = _quadric_parts(c0)
    A1, B1, C1, D1, E1, F1 = _quadric_parts(c1)

    x2lo = -H if (x0 or x1) else 1
    x2 = np.arange(x2lo, H + 1, dtype=dtype)
    ones = np.ones_like(x2)

    def lin(coeffs):
        return coeffs[0] * x0 * ones + coeffs[1] * x1 * ones + coeffs[2] * x2

    def quad(F):
        base = (F[(0, 0)] * x0 * x0 + F[(0, 1)] * x0 * x1
                + F[(1, 1)] * x1 * x1)
        return (base * ones + (F[(0, 2)] * x0 + F[(1, 2)] * x1) * x2
                + F[(2, 2)] * x2 * x2)

    d0, e0, f0 = lin(D0), lin(E0), quad(F0)
    d1, e1, f1 = lin(D1), lin(E1), quad(F1)

    if C0 == 0 and C1 == 0:
        # both conics linear in x4 already; use Q0 as the linear relation
        alpha, beta = A0, B0
        delta, eps, phi = d0, e0, f0
        vA, vB, vC = A1, B1, C1
        vd, ve, vf = d1, e1, f1
    else:
        # pencil member without x4^2: C1*Q0 - C0*Q1
        alpha = C1 * A0 - C0 * A1
        beta = C1 * B0 - C0 * B1
        delta = C1 * d0 - C0 * d1
        eps = C1 * e0 - C0 * e1
        phi = C1 * f0 - C0 * f1
        vA, vB, vC = A0, B0, C0
        vd, ve, vf = d0, e0, f0

    x3row = np.arange(-H, H + 1, dtype=dtype)[None, :]
    x2col = np.arange(x2lo, H + 1, dtype=dtype)[:, None]

    u = beta * x3row + eps[:, None]
    v = -(alpha * x3row * x3row + delta[:, None] * x3row + phi[:, None])

    safe_u = np.where(u == 0, 1, u)
    divisible = (v % safe_u == 0) & (u != 0)
    x4 = np.where(divisible, v // safe_u, H + 1)
    in_range = divisible & (np.abs(x4) <= H)
    x4 = np.where(in_range, x4, 0)  # keep the verification grid overflow-free

    # exact vectorized residual of the verification quadric
    q = (vA * x3row * x3row + vB * x3row * x4 + vC * x4 * x4
         + vd[:, None] * x3row + ve[:, None] * x4 + vf[:, None])
    hits = in_range & (q == 0)

    for i2, i3 in zip(*np.nonzero(hits)):
        x = (x0, x1, int(x2[i2]), int(x3row[0, i3]), int(x4[i2, i3]))
        if _eval_int(c0, x) == 0 and _eval_int(c1, x) == 0:
            found.add(ProjPoint(x))

    # u = v = 0: the linear relation is void; solve the conic directly
    void = (u == 0) & (v == 0)
    for i2, i3 in zip(*np.nonzero(void)):
        t2, t3 = int(x2[i2]), int(x3row[0, i3])
        for x4v in _solve_conic_in_x4(vA, vB, vC, int(vd[i2]), int(ve[i2]),
                                      int(vf[i2]), t3, H):
            x = (x0, x1, t2, t3, x4v)
            if any(x) and _eval_int(c0, x) == 0 and _eval_int(c1, x) == 0:
                found.add(ProjPoint(x))


def search_parallel(V: DP4Surface, H: int, workers: int = 1) -> SearchResult:
    """Partition the x0 range across processes and merge.

    Falls back to the serial kernel for workers <= 1.
    """
    if workers <= 1:
        return search(V, H)
    t0 = time.monotonic()
    from concurrent.futures import ProcessPoolExecutor

    bounds = []
    step = (H + 1 + workers - 1) // workers
    a = 0
    while a <= H:
        bounds.append((a, min(a + step - 1, H)))
        a += step
    merged: set = set()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_search_worker, V.Q0.upper_coeffs(),
                               V.Q1.upper_coeffs(), H, lohi)
                   for lohi in bounds]
        for fut in futures:
            merged.update(ProjPoint(c) for c in fut.result())
    pts = sorted(merged)
    return SearchResult(pts, H, elapsed_ms=(time.monotonic() - t0) * 1000)


def _search_worker(upper0, upper1, H, lohi):
    V = DP4Surface(QuadForm.from_upper(5, upper0), QuadForm.from_upper(5, upper1))
    res = search(V, H, x0_range=lohi)
    return [p.coords for p in res.points]
