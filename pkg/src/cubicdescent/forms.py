"""Quadratic and cubic forms, projective points and lines, quadric pencils.

Quadratic forms are symmetric Gram matrices over Q (half-integer entries
appear when polynomial cross coefficients are odd); cubic forms in four
variables are sparse exponent-tuple maps.  Projective points are primitive
integer vectors with the first nonzero coordinate positive.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import PreconditionError, ZeroPolynomialError
from .linalg import Matrix, det, nullspace, rank, solve_linear
from .unipoly import UniPoly


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def monomials_deg3() -> list:
    """Exponent tuples of the 20 degree-3 monomials in 4 variables, in a
    fixed (descending lexicographic) order."""
    out = [tuple_ for tuple_ in _exps(4, 3)]
    out.sort(reverse=True)
    return out


def _exps(nvars: int, deg: int):
    if nvars == 1:
        yield (deg,)
        return
    for k in range(deg, -1, -1):
        for rest in _exps(nvars - 1, deg - k):
            yield (k,) + rest


class QuadForm:
    """Quadratic form in n variables as a symmetric Gram matrix.

    Value at x is x^T * gram * x; the polynomial coefficient of x_i*x_j
    (i < j) is twice the Gram entry.
    """

    __slots__ = ("n", "gram")

    def __init__(self, gram: Matrix):
        if gram.rows != gram.cols:
            raise PreconditionError("Gram matrix must be square")
        if gram.rows not in (3, 4, 5):
            raise PreconditionError("supported variable counts: 3, 4, 5")
        if not gram.is_symmetric():
            raise PreconditionError("Gram matrix must be symmetric")
        self.n = gram.rows
        self.gram = gram

    @classmethod
    def from_poly_coeffs(cls, n: int, coeffs: dict) -> "QuadForm":
        """Build from {(i, j): c} polynomial coefficients of x_i x_j, i <= j."""
        g = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), c in coeffs.items():
            c = _frac(c)
            if i == j:
                g[i][i] += c
            else:
                i, j = min(i, j), max(i, j)
                g[i][j] += c / 2
                g[j][i] += c / 2
        return cls(Matrix.from_rows(g))

    @classmethod
    def from_upper(cls, n: int, upper) -> "QuadForm":
        """Build from the row-major upper-triangular polynomial coefficient
        list [c00, c01, ..., c0(n-1), c11, ...]."""
        upper = list(upper)
        if len(upper) != n * (n + 1) // 2:
            raise PreconditionError("wrong number of coefficients")
        coeffs = {}
        k = 0
        for i in range(n):
            for j in range(i, n):
                coeffs[(i, j)] = upper[k]
                k += 1
        return cls.from_poly_coeffs(n, coeffs)

    @classmethod
    def diagonal(cls, values) -> "QuadForm":
        return cls(Matrix.diagonal([_frac(v) for v in values]))

    def upper_coeffs(self) -> list:
        """Row-major upper-triangular polynomial coefficients."""
        out = []
        for i in range(self.n):
            for j in range(i, self.n):
                out.append(self.gram[i, j] if i == j else 2 * self.gram[i, j])
        return out

    def evaluate(self, point) -> Fraction:
        v = [_frac(x) for x in point]
        gv = self.gram.mul_vec(v)
        return sum(a * b for a, b in zip(v, gv))

    def gradient(self, point) -> tuple:
        v = [_frac(x) for x in point]
        return tuple(2 * x for x in self.gram.mul_vec(v))

    def substitute(self, change: Matrix) -> "QuadForm":
        """Form composed with x -> change * x (congruence of the Gram matrix)."""
        if change.rows != self.n:
            raise PreconditionError("change of variables has wrong shape")
        return QuadForm(change.transpose() @ self.gram @ change)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.gram._e)

    def __eq__(self, other):
        return isinstance(other, QuadForm) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return f"QuadForm({self.n}, {self.upper_coeffs()})"


class LinForm:
    """Linear form in n variables."""

    __slots__ = ("n", "coeffs")

    def __init__(self, coeffs):
        self.coeffs = tuple(_frac(x) for x in coeffs)
        self.n = len(self.coeffs)

    def evaluate(self, point) -> Fraction:
        return sum(c * _frac(x) for c, x in zip(self.coeffs, point))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def primitive(self) -> "LinForm":
        """Integer model with content 1 and positive leading coefficient."""
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g == 0:
            return LinForm(ints)
        for v in ints:
            if v:
                if v < 0:
                    g = -g
                break
        return LinForm([v // g for v in ints])

    def __eq__(self, other):
        return isinstance(other, LinForm) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"LinForm({list(self.coeffs)})"


class CubicForm4:
    """Cubic form in 4 variables: map from exponent 4-tuples (sum 3) to
    nonzero rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict):
        clean = {}
        for e, c in coeffs.items():
            e = tuple(int(v) for v in e)
            if len(e) != 4 or any(v < 0 for v in e) or sum(e) != 3:
                raise PreconditionError(f"bad exponent tuple {e}")
            c = _frac(c)
            if c != 0:
                clean[e] = clean.get(e, Fraction(0)) + c
        self.coeffs = {e: c for e, c in clean.items() if c != 0}

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, point) -> Fraction:
        v = [_frac(x) for x in point]
        total = Fraction(0)
        for e, c in self.coeffs.items():
            t = c
            for x, k in zip(v, e):
                for _ in range(k):
                    t *= x
            total += t
        return total

    def gradient(self, point) -> tuple:
        v = [_frac(x) for x in point]
        out = [Fraction(0)] * 4
        for e, c in self.coeffs.items():
            for i in range(4):
                if e[i] == 0:
                    continue
                t = c * e[i]
                for j in range(4):
                    k = e[j] - (1 if j == i else 0)
                    for _ in range(k):
                        t *= v[j]
                out[i] += t
        return tuple(out)

    def substitute(self, change: Matrix) -> "CubicForm4":
        """Form composed with x -> change * x."""
        if change.rows != 4 or change.cols != 4:
            raise PreconditionError("change of variables must be 4x4")
        rows = [change.row(i) for i in range(4)]
        out: dict = {}
        for e, c in self.coeffs.items():
            lin_factors = []
            for i in range(4):
                lin_factors.extend([rows[i]] * e[i])
            acc = {(0, 0, 0, 0): c}
            for lin in lin_factors:
                nxt: dict = {}
                for mono, cc in acc.items():
                    for j in range(4):
                        if lin[j] == 0:
                            continue
                        m2 = list(mono)
                        m2[j] += 1
                        m2 = tuple(m2)
                        nxt[m2] = nxt.get(m2, Fraction(0)) + cc * lin[j]
                acc = nxt
            for mono, cc in acc.items():
                out[mono] = out.get(mono, Fraction(0)) + cc
        return CubicForm4(out)

    def primitive_coeffs(self):
        """(content, integer coefficient map) with content * ints == self."""
        if not self.coeffs:
            return Fraction(0), {}
        den = lcm(*(c.denominator for c in self.coeffs.values()))
        ints = {e: int(c * den) for e, c in self.coeffs.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        lead = ints[max(ints)]
        if lead < 0:
            g = -g
        return Fraction(g, den), {e: v // g for e, v in ints.items()}

    def max_abs_coeff(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return max(abs(c) for c in self.coeffs.values())

    def __eq__(self, other):
        return isinstance(other, CubicForm4) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __repr__(self):
        terms = []
        for e in sorted(self.coeffs, reverse=True):
            terms.append(f"{self.coeffs[e]}*x^{e}")
        return "CubicForm4(" + " + ".join(terms) + ")"


class ProjPoint:
    """Point of projective space: primitive integer coordinates, first
    nonzero coordinate positive."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        v = [_frac(x) for x in coords]
        if all(x == 0 for x in v):
            raise PreconditionError("projective point needs a nonzero coordinate")
        den = lcm(*(x.denominator for x in v))
        ints = [int(x * den) for x in v]
        g = 0
        for x in ints:
            g = gcd(g, x)
        ints = [x // g for x in ints]
        for x in ints:
            if x:
                if x < 0:
                    ints = [-y for y in ints]
                break
        self.coords = tuple(ints)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def height(self) -> int:
        return max(abs(x) for x in self.coords)

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __lt__(self, other):
        return self.coords < other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "(" + " : ".join(str(x) for x in self.coords) + ")"


class ProjLine:
    """Line in P^3, stored as a point span and/or a cut by two forms.

    Either representation is converted to the other on demand; both are
    kept once computed.
    """

    __slots__ = ("_points", "_forms")

    def __init__(self, points=None, forms=None):
        if points is None and forms is None:
            raise PreconditionError("line needs points or forms")
        if points is not None:
            p, q = points
            if not isinstance(p, ProjPoint):
                p = ProjPoint(p)
            if not isinstance(q, ProjPoint):
                q = ProjPoint(q)
            if len(p) != 4 or len(q) != 4:
                raise PreconditionError("line points live in P^3")
            if p == q:
                raise PreconditionError("line needs two distinct points")
            points = (p, q)
        if forms is not None:
            f0, f1 = forms
            if not isinstance(f0, LinForm):
                f0 = LinForm(f0)
            if not isinstance(f1, LinForm):
                f1 = LinForm(f1)
            if f0.n != 4 or f1.n != 4:
                raise PreconditionError("cut forms live in 4 variables")
            if rank(Matrix.from_rows([f0.coeffs, f1.coeffs])) != 2:
                raise PreconditionError("cut forms must be independent")
            forms = (f0, f1)
        self._points = points
        self._forms = forms

    @classmethod
    def from_points(cls, p, q) -> "ProjLine":
        return cls(points=(p, q))

    @classmethod
    def from_forms(cls, f0, f1) -> "ProjLine":
        return cls(forms=(f0, f1))

    @property
    def points(self) -> tuple:
        if self._points is None:
            m = Matrix.from_rows([f.coeffs for f in self._forms])
            basis = nullspace(m)
            if len(basis) != 2:
                raise PreconditionError("cut forms do not define a line")
            self._points = (ProjPoint(basis[0]), ProjPoint(basis[1]))
        return self._points

    @property
    def forms(self) -> tuple:
        if self._forms is None:
            m = Matrix.from_rows([p.coords for p in self._points])
            basis = nullspace(m)
            if len(basis) != 2:
                raise PreconditionError("points do not define a line")
            self._forms = (LinForm(basis[0]), LinForm(basis[1]))
        return self._forms

    def canonical_key(self) -> tuple:
        """Canonical invariant of the line: RREF of the span matrix,
        primitive integer rows."""
        p, q = self.points
        rows = [list(map(Fraction, p.coords)), list(map(Fraction, q.coords))]
        # reduced row echelon over Q
        pivots = []
        r = 0
        for c in range(4):
            piv = None
            for i in range(r, 2):
                if rows[i][c] != 0:
                    piv = i
                    break
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            pv = rows[r][c]
            rows[r] = [x / pv for x in rows[r]]
            for i in range(2):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == 2:
                break
        out = []
        for row in rows:
            den = lcm(*(x.denominator for x in row))
            out.append(tuple(int(x * den) for x in row))
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, ProjLine) and self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        p, q = self.points
        return f"ProjLine({p}, {q})"


class BinaryQuintic:
    """det(lambda*A0 + mu*A1) as a homogeneous binary quintic.

    coeffs[k] is the coefficient of lambda^k * mu^(5-k).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [_frac(c) for c in coeffs]
        if len(coeffs) != 6:
            raise PreconditionError("binary quintic needs 6 coefficients")
        self.coeffs = tuple(coeffs)

    def evaluate(self, lam, mu) -> Fraction:
        lam, mu = _frac(lam), _frac(mu)
        return sum(c * lam ** k * mu ** (5 - k) for k, c in enumerate(self.coeffs))

    def dehomogenized(self) -> UniPoly:
        """p(t) = D(t, 1); the root at infinity is the degree drop."""
        return UniPoly(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def infinity_multiplicity(self) -> int:
        if self.is_zero():
            raise ZeroPolynomialError("identically zero binary form")
        return 5 - self.dehomogenized().degree

    def rational_roots(self) -> list:
        """Rational roots as normalized (lambda, mu) integer pairs with
        multiplicity, mu > 0 except for the infinity root (1, 0).

        Multiplicity is exact; non-rational factors are ignored here.
        """
        from .polyfactor import factor_unipoly

        if self.is_zero():
            raise ZeroPolynomialError("identically zero binary form")
        roots = []
        p = self.dehomogenized()
        if p.degree >= 1:
            _, factors = factor_unipoly(p)
            for f, mult in factors:
                if f.degree == 1:
                    t = -f[0]
                    roots.append((p1_normalize(t.numerator, t.denominator), mult))
        inf = self.infinity_multiplicity()
        if inf:
            roots.append(((1, 0), inf))
        return roots

    def __eq__(self, other):
        return isinstance(other, BinaryQuintic) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"BinaryQuintic({list(self.coeffs)})"


def p1_normalize(lam, mu) -> tuple:
    """Canonical integer representative of (lam : mu) in P^1: primitive,
    mu > 0, or (1, 0) for the point at infinity."""
    lam, mu = _frac(lam), _frac(mu)
    if lam == 0 and mu == 0:
        raise PreconditionError("(0 : 0) is not a point of P^1")
    den = lcm(lam.denominator, mu.denominator)
    a, b = int(lam * den), int(mu * den)
    g = gcd(a, b)
    a, b = a // g, b // g
    if b < 0 or (b == 0 and a < 0):
        a, b = -a, -b
    return (a, b)


def evaluate(form, point) -> Fraction:
    """Exact value of a quadratic, cubic, or linear form at a point."""
    return form.evaluate(point)


def gradient(form, point) -> tuple:
    return form.gradient(point)


def substitute(form, change: Matrix):
    return form.substitute(change)


def contains_point(form, point) -> bool:
    return form.evaluate(point) == 0


def restrict_to_hyperplane(q: QuadForm, l: LinForm):
    """Restriction of a 4-variable quadratic form to the hyperplane l = 0.

    Pivots on the largest-|coefficient| variable of l (ties: lowest index),
    substitutes it out, and returns (QuadForm(3), basis) where basis is the
    4x3 matrix whose columns span the hyperplane: restricted Gram equals
    basis^T * gram * basis.
    """
    if q.n != 4 or l.n != 4:
        raise PreconditionError("restriction expects 4-variable forms")
    if l.is_zero():
        raise PreconditionError("cannot restrict to the zero form")
    piv = 0
    best = abs(l.coeffs[0])
    for i in range(1, 4):
        if abs(l.coeffs[i]) > best:
            piv, best = i, abs(l.coeffs[i])
    rest = [i for i in range(4) if i != piv]
    cols = []
    for j in rest:
        col = [Fraction(0)] * 4
        col[j] = Fraction(1)
        col[piv] = -l.coeffs[j] / l.coeffs[piv]
        cols.append(col)
    basis = Matrix(4, 3, [cols[j][i] for i in range(4) for j in range(3)])
    return QuadForm(basis.transpose() @ q.gram @ basis), basis


def pencil_determinant(q0: QuadForm, q1: QuadForm) -> BinaryQuintic:
    """det(lambda*A0 + mu*A1) for 5-variable forms, exact.

    Interpolated from six evaluations of 5x5 Bareiss determinants.
    """
    if q0.n != 5 or q1.n != 5:
        raise PreconditionError("pencil determinant expects 5-variable forms")
    ts = [0, 1, -1, 2, -2, 3]
    vals = []
    for t in ts:
        m = q0.gram.scale(t) + q1.gram
        vals.append(det(m))
    vmat = Matrix.from_rows([[Fraction(t) ** k for k in range(6)] for t in ts])
    coeffs = solve_linear(vmat, vals)
    return BinaryQuintic(coeffs)


def line_section_cubic(s: CubicForm4, line: ProjLine) -> list:
    """Coefficients [c0..c3] of S(u*P + v*Q) as a binary cubic in (u, v):
    c_k multiplies u^k * v^(3-k)."""
    p, q = line.points
    out = [Fraction(0)] * 4
    for e, c in s.coeffs.items():
        factors = []
        for i in range(4):
            factors.extend([(Fraction(p[i]), Fraction(q[i]))] * e[i])
        acc = [c, Fraction(0), Fraction(0), Fraction(0)]
        deg = 0
        for (a, b) in factors:
            nxt = [Fraction(0)] * 4
            for k in range(deg + 1):
                if acc[k]:
                    nxt[k + 1] += acc[k] * a
                    nxt[k] += acc[k] * b
            acc = nxt
            deg += 1
        for k in range(4):
            out[k] += acc[k]
    return out


def contains_line(s: CubicForm4, line: ProjLine) -> bool:
    """True iff the parametrized line section of the cubic is identically
    zero."""
    return all(c == 0 for c in line_section_cubic(s, line))


def signature(q: QuadForm):
    """Sylvester inertia (positives, negatives, zeros) by exact symmetric
    congruence diagonalization."""
    diag = congruence_diagonal(q)
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return (pos, neg, q.n - pos - neg)


def congruence_diagonal(q: QuadForm) -> list:
    """Diagonal entries of a congruent diagonal form (deterministic)."""
    n = q.n
    a = [[q.gram[i, j] for j in range(n)] for i in range(n)]
    diag = []
    for k in range(n):
        # ensure a nonzero diagonal entry at position k
        if a[k][k] == 0:
            swap = None
            for j in range(k + 1, n):
                if a[j][j] != 0:
                    swap = j
                    break
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for row in a:
                    row[k], row[swap] = row[swap], row[k]
            else:
                off = None
                for i in range(k, n):
                    for j in range(i + 1, n):
                        if a[i][j] != 0:
                            off = (i, j)
                            break
                    if off:
                        break
                if off is None:
                    diag.extend([Fraction(0)] * (n - k))
                    break
                i, j = off
                # e_i <- e_i + e_j creates a diagonal entry at (i, i)
                for col in range(n):
                    a[i][col] += a[j][col]
                for row in a:
                    row[i] += row[j]
                if i != k:
                    a[k], a[i] = a[i], a[k]
                    for row in a:
                        row[k], row[i] = row[i], row[k]
        d = a[k][k]
        diag.append(d)
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = a[i][k] / d
                for col in range(n):
                    a[i][col] -= f * a[k][col]
                for row in a:
                    row[i] -= f * row[k]
    return diag
