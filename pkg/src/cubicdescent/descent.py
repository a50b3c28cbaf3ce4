"""Descent construction: quadric pencils over Q from quintic algebra data.

From (A, a, b, l) with l a linear form in five variables with coefficients
c_0..c_4 in A, the two Gram matrices trace(a*c_j*c_k) and trace(b*c_j*c_k)
are rational and define a degree-4 Del Pezzo surface whose base change
diagonalizes to sum iota_i(a) x_i^2 = sum iota_i(b) x_i^2 = 0.

The radicand report records, for each rational root t of the
characteristic polynomial of m = -b/a, the tritangent pencil point (t : 1)
and the rational radicand norm(a) * iota(a^3 * different(m)) resolved at
that root, together with its square class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (DegeneratePencilError, DependentFormsError,
                     NonGeneratorError, ZeroDivisorError)
from .etale import DEGREE, AlgElement, EtaleAlgebra
from .forms import BinaryQuintic, QuadForm, p1_normalize
from .intfactor import is_perfect_square, squarefree_class
from .linalg import Matrix, det, rank, solve_linear
from .polyfactor import rational_roots
from .unipoly import UniPoly


@dataclass(frozen=True)
class DescentInput:
    """Algebra data (A, a, b, l) for the quadric-pair construction."""

    algebra: EtaleAlgebra
    a: AlgElement
    b: AlgElement
    l: tuple  # five AlgElement coefficients of the linear form

    def __post_init__(self):
        if len(self.l) != DEGREE:
            raise DependentFormsError("l needs exactly five coefficients")
        if det(trace_gram(self.algebra.one(), self.l)) == 0:
            raise DependentFormsError(
                "conjugate linear forms are dependent (trace form degenerate)")


@dataclass
class DP4Surface:
    """Intersection of two 5-variable quadrics spanning a genuine pencil."""

    Q0: QuadForm
    Q1: QuadForm
    provenance: DescentInput | None = None

    def __post_init__(self):
        if self.Q0.n != 5 or self.Q1.n != 5:
            raise DegeneratePencilError("quadrics must have 5 variables")
        stacked = Matrix.from_rows([
            [x for x in self.Q0.gram._e],
            [x for x in self.Q1.gram._e],
        ])
        if rank(stacked) != 2:
            raise DegeneratePencilError("quadrics do not span a 2-dimensional pencil")

    def pencil_quintic(self) -> BinaryQuintic:
        from .forms import pencil_determinant

        return pencil_determinant(self.Q0, self.Q1)

    def evaluate(self, point):
        return self.Q0.evaluate(point), self.Q1.evaluate(point)


@dataclass(frozen=True)
class RadicandEntry:
    point: tuple          # (lambda, mu) pencil parameter, normalized
    radicand: Fraction
    sq_class: int


@dataclass
class RadicandReport:
    """rho = N(a) * a^3 * different(-b/a) and its rational specializations.

    splitting_element carries the discriminant-adjusted class
    disc(charpoly(m)) * rho whose conjugates generate the actual
    line-splitting fields; its norm is a perfect square for every valid
    input, which is the exact global form of the evenness of the sign
    group acting on the lines.
    """

    rho: AlgElement
    conj_poly: UniPoly
    tritangent_poly: UniPoly
    entries: list
    norm_rho: Fraction
    disc_tritangent: Fraction
    splitting_element: AlgElement

    @property
    def norm_is_square(self) -> bool:
        return is_perfect_square(self.norm_rho)

    @property
    def splitting_norm(self) -> Fraction:
        return self.splitting_element.norm()


def trace_gram(weight: AlgElement, l) -> Matrix:
    """Matrix of trace(weight * c_j * c_k)."""
    n = len(l)
    prods = [[None] * n for _ in range(n)]
    entries = []
    for j in range(n):
        for k in range(n):
            if k < j:
                entries.append(entries[k * n + j])
                continue
            entries.append((weight * l[j] * l[k]).trace())
    return Matrix(n, n, entries)


def power_basis_form(algebra: EtaleAlgebra) -> tuple:
    """The default linear form: c_j = r^j."""
    return algebra.power_basis()


def build_quadrics(inp: DescentInput) -> DP4Surface:
    """The two rational Gram matrices trace(a c_j c_k), trace(b c_j c_k)."""
    g0 = trace_gram(inp.a, inp.l)
    g1 = trace_gram(inp.b, inp.l)
    try:
        return DP4Surface(QuadForm(g0), QuadForm(g1), provenance=inp)
    except DegeneratePencilError:
        raise DegeneratePencilError(
            "a and b produce proportional forms (degenerate pencil)")


def strategy_ab(algebra: EtaleAlgebra, x: AlgElement):
    """d = different(x); a = d*r, b = -x*a."""
    x = algebra.element(x)
    d = x.different()        # raises NonGeneratorError for non-generators
    a = d * algebra.r
    b = -(x * a)
    return a, b


def radicand_report(inp: DescentInput) -> RadicandReport:
    """Radicands at the rational tritangent pencil points.

    Requires a to be a unit and m = -b/a to generate the algebra.
    """
    a, b = inp.a, inp.b
    if not a.is_unit():
        raise ZeroDivisorError("a must be a unit to form -b/a")
    m = -(b * a.inverse())
    chi_m = m.charpoly_of()
    if not chi_m.is_squarefree():
        raise NonGeneratorError("-b/a does not generate the algebra")
    rho = a ** 3 * m.different() * a.norm()
    conj_poly = rho.charpoly_of()

    # Express rho as a polynomial psi in m, then evaluate psi at each
    # rational root t of chi_m: that value is the radicand at (t : 1).
    powers = [inp.algebra.one()]
    for _ in range(DEGREE - 1):
        powers.append(powers[-1] * m)
    mat = Matrix(DEGREE, DEGREE,
                 [powers[j].coords()[i] for i in range(DEGREE) for j in range(DEGREE)])
    psi_coeffs = solve_linear(mat, rho.coords())
    assert psi_coeffs is not None, "m generates, so the power matrix is invertible"
    psi = UniPoly(psi_coeffs)

    entries = []
    for t in rational_roots(chi_m):
        rad = psi.evaluate(t)
        entries.append(RadicandEntry(
            point=p1_normalize(t, 1),
            radicand=rad,
            sq_class=squarefree_class(rad)))

    disc_m = chi_m.discriminant()
    return RadicandReport(
        rho=rho,
        conj_poly=conj_poly,
        tritangent_poly=chi_m,
        entries=entries,
        norm_rho=rho.norm(),
        disc_tritangent=disc_m,
        splitting_element=rho * disc_m,
    )


def run_strategy(p: UniPoly, x=None, l=None):
    """Compose strategy_ab, build_quadrics and radicand_report.

    p must be a monic squarefree quintic; x defaults to r and l to the
    power basis.  Returns (DP4Surface, RadicandReport).
    """
    algebra = EtaleAlgebra(p)
    x = algebra.r if x is None else algebra.element(x)
    l = power_basis_form(algebra) if l is None else tuple(algebra.element(c) for c in l)
    a, b = strategy_ab(algebra, x)
    inp = DescentInput(algebra, a, b, l)
    surface = build_quadrics(inp)
    report = radicand_report(inp)
    return surface, report


def norm_form(algebra: EtaleAlgebra, a: AlgElement, b: AlgElement) -> BinaryQuintic:
    """resultant_T(p, lambda*a(T) + mu*b(T)) as a binary quintic.

    Equals the product over embeddings of (lambda iota(a) + mu iota(b));
    computed by interpolating six rational resultants, independently of
    the multiplication-matrix norm.
    """
    ts = [0, 1, -1, 2, -2, 3]
    vals = []
    for t in ts:
        g = a.poly * t + b.poly
        vals.append(algebra.p.resultant(g) if not g.is_zero() else Fraction(0))
    vmat = Matrix.from_rows([[Fraction(t) ** k for k in range(6)] for t in ts])
    coeffs = solve_linear(vmat, vals)
    return BinaryQuintic(coeffs)
