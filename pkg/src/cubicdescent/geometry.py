"""Blow-up and blow-down between cubic surfaces with a line and quadric
pencils with a point, tritangent analysis, and a coefficient reducer.

Conventions.  cubic_to_dp4 decomposes F = l0*q0 + l1*q1 by a canonical
linear solve (free variables zero under deterministic elimination) and
returns the pencil q0 + l1*x4, q1 - l0*x4.  dp4_to_cubic moves the marked
point to (0:0:0:0:1) by a unimodular integer change, splits each quadric
as q_i + l_i*x4, and returns q0*l1 - q1*l0 with the line l0 = l1 = 0.
The provenance records the effective 5x5 coordinate change (point move
composed with an x4 shear and sign flip fixing the decomposition gauge),
under which the two constructions are exactly inverse on pencil spans.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .descent import DP4Surface
from .errors import (DegeneratePencilError, DegenerateSurfaceError,
                     LineNotOnSurfaceError, PointNotOnSurfaceError,
                     PreconditionError)
from .forms import (CubicForm4, LinForm, ProjLine, ProjPoint, QuadForm,
                    congruence_diagonal, contains_line, monomials_deg3,
                    pencil_determinant)
from .intfactor import squarefree_class
from .linalg import Matrix, det, inverse, nullspace, rank, solve_linear
from .polyfactor import factor_unipoly
from .unipoly import UniPoly

QUAD_INDEX = [(i, j) for i in range(4) for j in range(i, 4)]


@dataclass
class BlowupProvenance:
    """Recorded by dp4_to_cubic: the effective coordinate change and the
    decomposition the cubic was assembled from."""

    change: Matrix            # 5x5, original pencil composed with it matches the gauge
    point: ProjPoint
    l0: LinForm
    l1: LinForm
    q0: QuadForm
    q1: QuadForm


@dataclass
class CubicOrigin:
    """Recorded by cubic_to_dp4: the cut forms of the line on the cubic."""

    l0: LinForm
    l1: LinForm


@dataclass
class CubicSurface:
    F: CubicForm4
    known_line: ProjLine | None = None
    provenance: object | None = None

    def __post_init__(self):
        if self.F.is_zero():
            raise DegenerateSurfaceError("cubic form is identically zero")
        if self.known_line is not None and not contains_line(self.F, self.known_line):
            raise LineNotOnSurfaceError("known_line does not lie on the surface")


@dataclass(frozen=True)
class TritangentEntry:
    """One degenerate member of the pencil.

    For a rational pencil root: rank, kernel, square class of the
    determinant of the form on a complement of the kernel (split_disc),
    and, when the surface came from a cubic, the tritangent plane in the
    cubic's coordinates.  For an irreducible factor of degree >= 2 the
    entry carries the factor and the square class of the norm of the
    complement determinant across its conjugate roots.
    """

    pencil_root: object       # (lambda, mu) tuple or UniPoly factor
    multiplicity: int = 1
    rank_at_root: int | None = None
    kernel: tuple | None = None
    plane: LinForm | None = None
    split_disc: int | None = None
    norm_class: int | None = None


def _quad_poly_coeffs(q: QuadForm) -> dict:
    out = {}
    for (i, j) in QUAD_INDEX:
        c = q.gram[i, j] if i == j else 2 * q.gram[i, j]
        out[(i, j)] = c
    return out


def _decompose(F: CubicForm4, l0: LinForm, l1: LinForm):
    """Canonical (A, B) with F = l0*A + l1*B, free variables zero.

    Returns None when the system is inconsistent (line not on surface).
    """
    monos = monomials_deg3()
    mono_index = {m: k for k, m in enumerate(monos)}
    rows = [[Fraction(0)] * 20 for _ in range(20)]
    for col, (i, j) in enumerate(QUAD_INDEX):
        base = [0, 0, 0, 0]
        base[i] += 1
        base[j] += 1
        for k in range(4):
            e = list(base)
            e[k] += 1
            e = tuple(e)
            if l0.coeffs[k]:
                rows[mono_index[e]][col] += l0.coeffs[k]
            if l1.coeffs[k]:
                rows[mono_index[e]][col + 10] += l1.coeffs[k]
    rhs = [F.coeffs.get(m, Fraction(0)) for m in monos]
    sol = solve_linear(Matrix.from_rows(rows), rhs)
    if sol is None:
        return None
    qa = QuadForm.from_poly_coeffs(4, {ij: sol[c] for c, ij in enumerate(QUAD_INDEX)})
    qb = QuadForm.from_poly_coeffs(4, {ij: sol[c + 10] for c, ij in enumerate(QUAD_INDEX)})
    return qa, qb


def _assemble_quadric5(q: QuadForm, l: LinForm, sign: int) -> QuadForm:
    """q(x0..x3) + sign * l(x0..x3) * x4 as a 5-variable form."""
    g = [[Fraction(0)] * 5 for _ in range(5)]
    for i in range(4):
        for j in range(4):
            g[i][j] = q.gram[i, j]
    for j in range(4):
        g[j][4] = sign * l.coeffs[j] / 2
        g[4][j] = sign * l.coeffs[j] / 2
    return QuadForm(Matrix.from_rows(g))


def _split_quadric5(Q: QuadForm):
    """Inverse of _assemble_quadric5 for a form with no x4^2 term."""
    if Q.gram[4, 4] != 0:
        raise PreconditionError("quadric has an x4^2 term")
    g = [[Q.gram[i, j] for j in range(4)] for i in range(4)]
    q = QuadForm(Matrix.from_rows(g))
    l = LinForm([2 * Q.gram[j, 4] for j in range(4)])
    return q, l


def cubic_to_dp4(S: CubicSurface | CubicForm4, l0: LinForm, l1: LinForm):
    """Write F = l0*q0 + l1*q1 and return the quadric pencil
    (q0 + l1*x4, q1 - l0*x4) together with (q0, q1)."""
    F = S.F if isinstance(S, CubicSurface) else S
    if rank(Matrix.from_rows([l0.coeffs, l1.coeffs])) != 2:
        raise PreconditionError("cut forms must be independent")
    dec = _decompose(F, l0, l1)
    if dec is None:
        raise LineNotOnSurfaceError("F is not in the ideal (l0, l1)")
    q0, q1 = dec
    Q0 = _assemble_quadric5(q0, l1, +1)
    Q1 = _assemble_quadric5(q1, l0, -1)
    surface = DP4Surface(Q0, Q1, provenance=CubicOrigin(l0, l1))
    return surface, q0, q1


def _unimodular_point_move(p: ProjPoint) -> Matrix:
    """Unimodular integer U with U * p = (0, 0, 0, 0, 1).

    Euclidean reduction: shear every entry by nearest-integer multiples of
    the smallest nonzero entry until one entry survives; primitivity makes
    it +-1, and a final swap parks it last.  Fully deterministic.
    """
    v = list(p.coords)
    n = len(v)
    u = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap(i, j):
        v[i], v[j] = v[j], v[i]
        u[i], u[j] = u[j], u[i]

    def shear(i, j, q):
        # row_i <- row_i - q * row_j
        v[i] -= q * v[j]
        u[i] = [a - q * b for a, b in zip(u[i], u[j])]

    def nearest(a, b):
        q, r = divmod(a, b)
        if 2 * abs(r) > abs(b):
            q += 1
        return q

    while sum(1 for x in v if x != 0) > 1:
        piv = min((i for i in range(n) if v[i] != 0), key=lambda i: (abs(v[i]), i))
        for i in range(n):
            if i != piv and v[i] != 0:
                shear(i, piv, nearest(v[i], v[piv]))
    hot = next(i for i in range(n) if v[i] != 0)
    if hot != n - 1:
        swap(hot, n - 1)
    if v[n - 1] < 0:
        v[n - 1] = -v[n - 1]
        u[n - 1] = [-a for a in u[n - 1]]
    assert v == [0] * (n - 1) + [1], "point was not primitive"
    return Matrix.from_rows(u)


def _divide_quad_by_linear(q: QuadForm, l: LinForm) -> LinForm | None:
    """h with q = l * h, or None when l does not divide q."""
    rows = []
    rhs = []
    for (i, j) in QUAD_INDEX:
        row = [Fraction(0)] * 4
        # coefficient of x_i x_j in l * h
        row[j] += l.coeffs[i]
        if i != j:
            row[i] += l.coeffs[j]
        rows.append(row)
        rhs.append(q.gram[i, j] if i == j else 2 * q.gram[i, j])
    sol = solve_linear(Matrix.from_rows(rows), rhs)
    if sol is None:
        return None
    return LinForm(sol)


def dp4_to_cubic(V: DP4Surface, P: ProjPoint) -> CubicSurface:
    """Blow up the rational point P on V: move P to (0:0:0:0:1), split
    Q_i = q_i + l_i*x4 and return the cubic q0*l1 - q1*l0 with the line
    l0 = l1 = 0."""
    if not isinstance(P, ProjPoint):
        P = ProjPoint(P)
    if V.Q0.evaluate(P.coords) != 0 or V.Q1.evaluate(P.coords) != 0:
        raise PointNotOnSurfaceError(f"{P} does not lie on both quadrics")
    u = _unimodular_point_move(P)
    c = inverse(u)
    Q0m = V.Q0.substitute(c)
    Q1m = V.Q1.substitute(c)
    q0, l0 = _split_quadric5(Q0m)
    q1, l1 = _split_quadric5(Q1m)
    if rank(Matrix.from_rows([l0.coeffs, l1.coeffs])) != 2:
        raise DegenerateSurfaceError(
            "blow-up produces dependent cut forms (bad point)")

    f_terms: dict = {}
    for (qq, ll, sign) in ((q0, l1, +1), (q1, l0, -1)):
        pc = _quad_poly_coeffs(qq)
        for (i, j), cc in pc.items():
            if cc == 0:
                continue
            for k in range(4):
                if ll.coeffs[k] == 0:
                    continue
                e = [0, 0, 0, 0]
                e[i] += 1
                e[j] += 1
                e[k] += 1
                e = tuple(e)
                f_terms[e] = f_terms.get(e, Fraction(0)) + sign * cc * ll.coeffs[k]
    F = CubicForm4(f_terms)
    if F.is_zero():
        raise DegenerateSurfaceError("blow-up produces the zero cubic")

    # Gauge fixing: the canonical re-decomposition of F along (l0, l1)
    # differs from (−q1, q0) by an x4 shear; fold the shear and an x4 sign
    # flip into the recorded change so the roundtrip is exactly inverse.
    dec = _decompose(F, l0, l1)
    assert dec is not None
    a_star, _ = dec
    # a_star = -q1 + l1 * h  =>  l1 * h = a_star + q1
    h = _divide_quad_by_linear(
        QuadForm(a_star.gram + q1.gram), l1)
    assert h is not None, "decomposition gauge is always an x4 shear"
    w = [[Fraction(int(i == j)) for j in range(5)] for i in range(5)]
    for j in range(4):
        w[4][j] = -h.coeffs[j]
    w[4][4] = Fraction(-1)
    change = c @ Matrix.from_rows(w)

    line = ProjLine.from_forms(l0, l1)
    prov = BlowupProvenance(change=change, point=P, l0=l0, l1=l1, q0=q0, q1=q1)
    return CubicSurface(F, known_line=line, provenance=prov)


def roundtrip_check(V: DP4Surface, P: ProjPoint) -> bool:
    """Blow up at P, decompose the cubic along the produced line, and
    check that the recovered pencil spans exactly the coordinate-moved
    original pencil."""
    S = dp4_to_cubic(V, P)
    prov: BlowupProvenance = S.provenance
    V2, _, _ = cubic_to_dp4(S, prov.l0, prov.l1)
    m0 = V.Q0.substitute(prov.change)
    m1 = V.Q1.substitute(prov.change)
    return _same_span((m0, m1), (V2.Q0, V2.Q1))


def _same_span(pair_a, pair_b) -> bool:
    def vec(q):
        return [x for x in q.gram._e]

    rows_a = [vec(q) for q in pair_a]
    rows_b = [vec(q) for q in pair_b]
    if rank(Matrix.from_rows(rows_a)) != 2 or rank(Matrix.from_rows(rows_b)) != 2:
        return False
    return rank(Matrix.from_rows(rows_a + rows_b)) == 2


def _minor_poly(gram0: Matrix, gram1: Matrix, k: int) -> UniPoly:
    """det of (t*gram0 + gram1) with row/col k deleted, as a polynomial in t."""
    idx = [i for i in range(5) if i != k]
    ts = [0, 1, -1, 2, 3]
    vals = []
    for t in ts:
        m = Matrix.from_rows([
            [t * gram0[i, j] + gram1[i, j] for j in idx] for i in idx])
        vals.append(det(m))
    vmat = Matrix.from_rows([[Fraction(t) ** j for j in range(5)] for t in ts])
    return UniPoly(solve_linear(vmat, vals))


def tritangent_analysis(V: DP4Surface) -> list:
    """Factor the pencil determinant and describe each degenerate member.

    Rational roots get rank, kernel, split_disc (square class of the
    degenerate form's determinant on a complement of its kernel) and the
    tritangent plane in cubic coordinates when the surface was produced
    by cubic_to_dp4.  Irreducible factors of degree >= 2 get the square
    class of the conjugate-product of complement determinants.
    """
    bq = pencil_determinant(V.Q0, V.Q1)
    if bq.is_zero():
        raise DegeneratePencilError("pencil determinant vanishes identically")
    dehom = bq.dehomogenized()
    entries = []
    origin = V.provenance if isinstance(V.provenance, CubicOrigin) else None

    def make_rational_entry(lam, mu, mult):
        m = V.Q0.gram.scale(lam) + V.Q1.gram.scale(mu)
        q = QuadForm(m)
        rk = rank(m)
        ker = nullspace(m)
        kernel = ker[0] if len(ker) == 1 else None
        diag = [d for d in congruence_diagonal(q) if d != 0]
        prod = Fraction(1)
        for d in diag:
            prod *= d
        disc = squarefree_class(prod) if rk == 4 else None
        plane = None
        if origin is not None:
            coeffs = [lam * origin.l1.coeffs[j] - mu * origin.l0.coeffs[j]
                      for j in range(4)]
            plane = LinForm(coeffs).primitive()
        return TritangentEntry(pencil_root=(lam, mu), multiplicity=mult,
                               rank_at_root=rk, kernel=kernel, plane=plane,
                               split_disc=disc)

    if dehom.degree >= 1:
        _, factors = factor_unipoly(dehom)
        for f, mult in factors:
            if f.degree == 1:
                t = -f[0]
                from .forms import p1_normalize
                lam, mu = p1_normalize(t, 1)
                entries.append(make_rational_entry(lam, mu, mult))
            else:
                entries.append(TritangentEntry(
                    pencil_root=f, multiplicity=mult,
                    norm_class=_conjugate_norm_class(V, f)))
    inf_mult = bq.infinity_multiplicity()
    if inf_mult:
        entries.append(make_rational_entry(1, 0, inf_mult))
    return entries


def _conjugate_norm_class(V: DP4Surface, f: UniPoly) -> int | None:
    """Square class of the product, over the roots of f, of the complement
    determinant of the degenerate member t*A0 + A1."""
    for k in range(5):
        g = _minor_poly(V.Q0.gram, V.Q1.gram, k)
        if g.is_zero():
            continue
        if f.gcd(g).degree == 0:
            res = f.resultant(g)
            if res != 0:
                return squarefree_class(res)
    return None


def tritangent_square_product(entries) -> int | None:
    """Square class of the product of all five splitting discriminants;
    1 for every smooth surface.  None when a root is degenerate."""
    acc = Fraction(1)
    for e in entries:
        if e.multiplicity != 1:
            return None
        if isinstance(e.pencil_root, tuple):
            if e.split_disc is None:
                return None
            acc *= e.split_disc
        else:
            if e.norm_class is None:
                return None
            acc *= e.norm_class
    return squarefree_class(acc)


# Generators for the reducer: permutations and sign flips leave the
# objective invariant but keep the generator set faithful to its design;
# shears do the actual work.
def _reduce_generators():
    gens = []
    for i in range(4):
        for j in range(i + 1, 4):
            rows = [[int(a == b) for b in range(4)] for a in range(4)]
            rows[i][i] = rows[j][j] = 0
            rows[i][j] = rows[j][i] = 1
            gens.append(Matrix.from_rows(rows))
    for i in range(4):
        rows = [[int(a == b) for b in range(4)] for a in range(4)]
        rows[i][i] = -1
        gens.append(Matrix.from_rows(rows))
    for i in range(4):
        for j in range(4):
            if i == j:
                continue
            for s in (1, -1):
                rows = [[int(a == b) for b in range(4)] for a in range(4)]
                rows[i][j] = s
                gens.append(Matrix.from_rows(rows))
    return gens


_REDUCE_GENS = None


def _objective(F: CubicForm4):
    _, ints = F.primitive_coeffs()
    mx = max(abs(v) for v in ints.values())
    ss = sum(v * v for v in ints.values())
    return (mx, ss)


def greedy_reduce(S: CubicSurface) -> CubicSurface:
    """Hill-climb over integral changes of variables, accepting a move iff
    it strictly lowers (max |coefficient|, sum of squares); deterministic
    first-improvement scan; stops at a local minimum.

    The cumulative change matrix is recorded in the provenance so the
    input can be reproduced exactly."""
    global _REDUCE_GENS
    if _REDUCE_GENS is None:
        _REDUCE_GENS = _reduce_generators()
    _, ints = S.F.primitive_coeffs()
    current = CubicForm4(ints)
    total = Matrix.identity(4)
    best = _objective(current)
    improved = True
    while improved:
        improved = False
        for g in _REDUCE_GENS:
            cand = current.substitute(g)
            val = _objective(cand)
            if val < best:
                _, ci = cand.primitive_coeffs()
                current = CubicForm4(ci)
                total = total @ g
                best = val
                improved = True
                break
    line = None
    if S.known_line is not None:
        uinv = inverse(total)
        p, q = S.known_line.points
        line = ProjLine.from_points(ProjPoint(uinv.mul_vec(p.coords)),
                                    ProjPoint(uinv.mul_vec(q.coords)))
    return CubicSurface(current, known_line=line,
                        provenance={"reduced_from": S, "change": total})
