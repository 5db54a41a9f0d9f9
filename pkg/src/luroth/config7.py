"""Seven-point configurations: Q invariant, cubic net, Morley form, pfaffian,
Morley invariant (two routes), cubic of the seventh point, sixth points and
the jacobian sextic of the net.

Bihomogeneous forms in (xi, X) use six variables: xi0, xi1, xi2 are
variables 0..2 and X0, X1, X2 are variables 3..5.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from luroth import _backend
from luroth.algebra import (
    Form,
    HomPoint,
    bracket,
    cramer_vector,
    det3,
    format_rational,
    kernel,
    monomials,
    pfaffian,
    rank,
    rat,
    solve,
)
from luroth.apolarity import (
    PointConic,
    conic_through,
    cubic_through_apolar,
    parametrize_conic,
    polar,
)
from luroth.errors import DegenerateError

BI_NAMES = ("xi0", "xi1", "xi2", "X0", "X1", "X2")
QUAD_MONOMIALS = monomials(3, 2)  # X0², X0X1, X0X2, X1², X1X2, X2²
CUBIC_MONOMIALS = monomials(3, 3)
QUARTIC_MONOMIALS = monomials(3, 4)

# Ratio morley_invariant_fano / morley_invariant, measured once on a generic
# configuration and asserted constant by the regression suite.
FANO_TO_QUOTIENT_RATIO = Fraction(6)


def _pts(points) -> tuple[HomPoint, ...]:
    return tuple(p if isinstance(p, HomPoint) else HomPoint.of(p) for p in points)


def _veronese_row(p, monos=QUAD_MONOMIALS):
    out = []
    for e in monos:
        v = Fraction(1)
        for x, k in zip(p, e):
            if k:
                v *= x**k
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# Q invariant


def q_invariant(*points) -> Fraction:
    """|134||156||235||246| - |135||146||234||256| for six points."""
    if len(points) == 1:
        points = tuple(points[0])
    if len(points) != 6:
        raise ValueError("Q takes six points")
    p = [tuple(x.coords) if isinstance(x, HomPoint) else tuple(rat(c) for c in x) for x in points]

    def b(i, j, k):
        return bracket(p[i - 1], p[j - 1], p[k - 1])

    return b(1, 3, 4) * b(1, 5, 6) * b(2, 3, 5) * b(2, 4, 6) - b(1, 3, 5) * b(1, 4, 6) * b(2, 3, 4) * b(2, 5, 6)


def veronese_det(*points) -> Fraction:
    """Determinant of the 6x6 matrix of conic monomials at six points."""
    from luroth.algebra import det

    if len(points) == 1:
        points = tuple(points[0])
    return det([_veronese_row(x) for x in points])


def on_a_conic(points: Sequence) -> bool:
    """True when the points impose fewer than min(n, 6) conditions on conics."""
    pts = list(points)
    return rank([_veronese_row(p) for p in pts]) < min(len(pts), 6)


# ---------------------------------------------------------------------------
# configurations


class Config7:
    """Seven labeled points of the plane with cached degeneracy flags."""

    def __init__(self, points):
        pts = _pts(points)
        if len(pts) != 7:
            raise ValueError(f"a configuration has seven points, got {len(pts)}")
        for p in pts:
            if len(p) != 3:
                raise ValueError("points of the plane have three coordinates")
        self.points = pts

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __len__(self):
        return 7

    def __repr__(self):
        return "Config7(" + ", ".join(str(p.primitive()) for p in self.points) + ")"

    @cached_property
    def pairwise_distinct(self) -> bool:
        return len(set(self.points)) == 7

    @cached_property
    def six_on_conic(self) -> tuple[int, ...]:
        """Indices i such that the six points other than P_i lie on a conic."""
        return tuple(i for i in range(7) if on_a_conic(self.points[:i] + self.points[i + 1 :]))

    @cached_property
    def all_on_conic(self) -> bool:
        return on_a_conic(self.points)

    @cached_property
    def collinear_triples(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(t for t in combinations(range(7), 3) if bracket(*(self.points[i] for i in t)) == 0)

    def permuted(self, perm: Sequence[int]) -> "Config7":
        return Config7([self.points[i] for i in perm])

    def with_point(self, i: int, p) -> "Config7":
        pts = list(self.points)
        pts[i] = p if isinstance(p, HomPoint) else HomPoint.of(p)
        return Config7(pts)

    def require_morley_hypotheses(self):
        if not self.pairwise_distinct:
            raise DegenerateError("points are not pairwise distinct")
        if self.all_on_conic:
            raise DegenerateError("the seven points lie on a conic")

    def to_json(self) -> dict:
        return {"points": [p.to_json() for p in self.points]}

    @classmethod
    def from_json(cls, data) -> "Config7":
        if not isinstance(data, dict) or "points" not in data:
            raise ValueError('expected an object with a "points" array')
        return cls([HomPoint.from_json(p) for p in data["points"]])


def q_values(z: Config7) -> tuple[Fraction, ...]:
    """Q of the six points left after removing P_i, for i = 1..7."""
    return tuple(q_invariant(z.points[:i] + z.points[i + 1 :]) for i in range(7))


# ---------------------------------------------------------------------------
# cubic net and Hilbert-Burch matrix


@dataclass(frozen=True)
class CubicNet:
    basis: tuple[Form, Form, Form]


def cubics_through(points, expected: int | None = None) -> list[Form]:
    rows = [_veronese_row(p, CUBIC_MONOMIALS) for p in points]
    ker = kernel(rows)
    if expected is not None and len(ker) != expected:
        raise DegenerateError(f"space of cubics through the points has dimension {len(ker)}, expected {expected}")
    return [Form.from_coefficients(CUBIC_MONOMIALS, v) for v in ker]


def cubic_net(z: Config7) -> CubicNet:
    """Deterministic basis of the cubics through the seven points."""
    z.require_morley_hypotheses()
    return CubicNet(tuple(cubics_through(z.points, expected=3)))


def _span_rank(forms: Sequence[Form], monos) -> int:
    return rank([f.coefficients(monos) for f in forms])


def same_span(a: Sequence[Form], b: Sequence[Form]) -> bool:
    monos = sorted({e for f in list(a) + list(b) for e in f.terms})
    ra = _span_rank(a, monos)
    return ra == _span_rank(b, monos) == _span_rank(list(a) + list(b), monos)


@dataclass(frozen=True)
class HilbertBurchMatrix:
    """Rows (L0, L1, L2) of linear forms and (theta0, theta1, theta2) of quadrics."""

    linear: tuple[Form, Form, Form]
    quadric: tuple[Form, Form, Form]

    @property
    def minors(self) -> tuple[Form, Form, Form]:
        l, t = self.linear, self.quadric
        return (
            l[1] * t[2] - l[2] * t[1],
            l[2] * t[0] - l[0] * t[2],
            l[0] * t[1] - l[1] * t[0],
        )

    @property
    def linear_rank(self) -> int:
        return _span_rank(self.linear, monomials(3, 1))


def hilbert_burch(z: Config7) -> HilbertBurchMatrix:
    """A 2x3 matrix of linear and quadratic forms whose minors span the net."""
    net = cubic_net(z).basis
    lin = monomials(3, 1)
    # linear syzygy sum L_j C_j = 0: 9 unknowns, 15 equations
    products = [[Form(3, {m: 1}) * c for m in lin] for c in net]
    rows = []
    for q in QUARTIC_MONOMIALS:
        rows.append([products[j][k].coefficient(q) for j in range(3) for k in range(3)])
    syz = kernel(rows)
    if not syz:
        raise DegenerateError("no linear syzygy among the cubics of the net")
    v = syz[0]
    L = tuple(Form.from_coefficients(lin, v[3 * j : 3 * j + 3]) for j in range(3))
    # quadrics theta with every minor of [L; theta] vanishing on Z
    unknown = [(j, m) for j in range(3) for m in QUAD_MONOMIALS]
    cols = []
    for j, m in unknown:
        t = [Form.zero(3)] * 3
        t = list(t)
        t[j] = Form(3, {m: 1})
        minors = HilbertBurchMatrix(L, tuple(t)).minors
        cols.append([mi(p.coords) for mi in minors for p in z.points])
    eqs = [list(r) for r in zip(*cols)]
    ker = kernel(eqs)
    # single kernel vectors first, then fixed combinations with growing weights
    candidates = list(ker) + [
        [sum(Fraction(base**t) * v[c] for t, v in enumerate(ker)) for c in range(18)] for base in (2, 3, 7, 11)
    ]
    for w in candidates:
        theta = tuple(Form.from_coefficients(QUAD_MONOMIALS, w[6 * j : 6 * j + 6]) for j in range(3))
        hb = HilbertBurchMatrix(L, theta)
        if _span_rank(hb.minors, CUBIC_MONOMIALS) == 3:
            return hb
    raise DegenerateError("no quadratic row completes the linear syzygy")


# ---------------------------------------------------------------------------
# Morley form


def morley_condition_matrix(z: Config7) -> list[list[Fraction]]:
    """The 29 x 30 condition matrix whose signed minors are the coefficients of S.

    Columns: xi_j D_j(X) coefficients, j = 0..2, cubic monomials in
    descending lex order. Rows: 15 diagonal conditions (quartic monomials of
    sum_j X_j D_j(X)), then for each point in label order a cubic row and a
    quadratic row. With k the first nonzero coordinate of P_i the rows are
    D_{k+1}(P_i) and D_{k+2}(P_i) / x_{ik} (indices mod 3); the cyclic order
    makes the result independent of k.
    """
    ncol = 30
    col = {(j, m): 10 * j + t for j in range(3) for t, m in enumerate(CUBIC_MONOMIALS)}
    rows = []
    for q in QUARTIC_MONOMIALS:
        r = [Fraction(0)] * ncol
        for j in range(3):
            if q[j]:
                c = list(q)
                c[j] -= 1
                r[col[(j, tuple(c))]] = Fraction(1)
        rows.append(r)
    for p in z.points:
        x = p.coords
        k = next(i for i in range(3) if x[i])
        vals = _veronese_row(x, CUBIC_MONOMIALS)
        for a, scale in (((k + 1) % 3, 1), ((k + 2) % 3, 1 / x[k])):
            r = [Fraction(0)] * ncol
            for t in range(10):
                r[10 * a + t] = vals[t] * scale
            rows.append(r)
    return rows


def full_condition_matrix(z: Config7) -> list[list[Fraction]]:
    """All 15 + 3*7 = 36 conditions (every D_j vanishing at every point)."""
    rows = morley_condition_matrix(z)[:15]
    for p in z.points:
        vals = _veronese_row(p.coords, CUBIC_MONOMIALS)
        for a in range(3):
            r = [Fraction(0)] * 30
            r[10 * a : 10 * a + 10] = vals
            rows.append(r)
    return rows


def canonical_s_coefficients(z: Config7) -> tuple[Fraction, ...]:
    """The 30 signed 29x29 minors; all zero when the conditions have rank < 29."""
    return cramer_vector(morley_condition_matrix(z))


def s_from_coefficients(coeffs: Sequence) -> Form:
    terms = {}
    for j in range(3):
        for t, m in enumerate(CUBIC_MONOMIALS):
            c = coeffs[10 * j + t]
            if c:
                e = [0] * 6
                e[j] = 1
                e[3:] = m
                terms[tuple(e)] = c
    return Form(6, terms)


def morley_S(z: Config7) -> Form:
    """Canonically scaled S(xi, X), bidegree (1, 3)."""
    if not z.pairwise_distinct:
        raise DegenerateError("points are not pairwise distinct")
    c = canonical_s_coefficients(z)
    if not any(c):
        raise DegenerateError("the Morley conditions have a kernel of dimension > 1")
    return s_from_coefficients(c)


XI = tuple(Form.var(i, 6) for i in range(3))


def morley_form(s: Form) -> Form:
    """M(xi, X) = Delta_xi S(xi, X), polarizing in the X variables."""
    return polar(XI, s, offset=3)


def skew_matrix(m: Form) -> list[list[Fraction]]:
    """6x6 coefficient matrix N with M = sum N[h][k] xi^{m_h} X^{m_k}."""
    idx = {m: i for i, m in enumerate(QUAD_MONOMIALS)}
    n = [[Fraction(0)] * 6 for _ in range(6)]
    for e, c in m.terms.items():
        n[idx[e[:3]]][idx[e[3:]]] = c
    return n


def morley_matrix(z: Config7) -> list[list[Fraction]]:
    """SkewMatrix6 of the Morley form; asserts skew-symmetry."""
    n = skew_matrix(morley_form(morley_S(z)))
    for h in range(6):
        for k in range(6):
            if n[h][k] != -n[k][h]:
                raise AssertionError("Morley matrix is not skew-symmetric")
    return n


def morley_pfaffian(z: Config7) -> Fraction:
    """F = Pf(N) under the canonical scaling (0 when S degenerates to zero)."""
    if not z.pairwise_distinct:
        raise DegenerateError("points are not pairwise distinct")
    c = canonical_s_coefficients(z)
    if not any(c):
        return Fraction(0)
    return pfaffian(skew_matrix(morley_form(s_from_coefficients(c))))


def morley_invariant(z: Config7) -> Fraction:
    """Psi = F / prod_i Q(Z - P_i); needs no six points on a conic."""
    qs = q_values(z)
    prod = Fraction(1)
    for q in qs:
        prod *= q
    if prod == 0:
        raise DegenerateError("six of the points lie on a conic; use morley_invariant_fano")
    return morley_pfaffian(z) / prod


# ---------------------------------------------------------------------------
# Fano route

_LATTICE3 = [(i, j, 3 - i - j) for i in range(3, -1, -1) for j in range(3 - i, -1, -1)]


def _fano_numeric(points) -> Fraction:
    ints = []
    scale = Fraction(1)
    for p in points:
        q = p.primitive()
        # p = c * q with c = p_k / q_k at any nonzero coordinate k
        k = next(i for i in range(3) if q[i])
        scale *= (p.coords[k] / q[k]) ** 3
        ints.append(q)
    table = [0] * 343
    for i in range(7):
        for j in range(7):
            for k in range(7):
                if i != j and j != k and i != k:
                    table[49 * i + 7 * j + k] = int(bracket(ints[i], ints[j], ints[k]))
    return Fraction(_backend.fano_sum(table), 168) * scale


def morley_invariant_fano(*points, symbolic: int | None = None):
    """Skew-symmetrized Fano bracket monomial, divided by 168.

    With ``symbolic=i`` the i-th argument is ignored (pass None) and the
    result is the cubic Form X -> Psi(..., X, ...), obtained by exact
    interpolation on the ten points of the degree-3 simplex lattice.
    """
    if len(points) == 1 and not isinstance(points[0], HomPoint):
        points = tuple(points[0])
    if len(points) != 7:
        raise ValueError("the Fano expression takes seven points")
    if symbolic is None:
        return _fano_numeric(_pts(points))
    fixed = list(points)
    rows, values = [], []
    for lat in _LATTICE3:
        fixed[symbolic] = HomPoint(lat)
        rows.append(_veronese_row(lat, CUBIC_MONOMIALS))
        values.append(_fano_numeric(_pts(fixed)))
    return Form.from_coefficients(CUBIC_MONOMIALS, solve(rows, values), nvars=3)


def seventh_cubic(*points) -> Form:
    """E(X) = Psi(P1, ..., P6, X) via the Fano route."""
    if len(points) == 1:
        points = tuple(points[0])
    pts = _pts(points)
    if len(pts) != 6:
        raise ValueError("six points are required")
    if len(set(pts)) != 6:
        raise DegenerateError("points are not pairwise distinct")
    for t in combinations(range(6), 3):
        if bracket(*(pts[i] for i in t)) == 0:
            raise DegenerateError(f"points {tuple(i + 1 for i in t)} are collinear")
    e = morley_invariant_fano(list(pts) + [None], symbolic=6)
    if e.is_zero():
        raise DegenerateError("the cubic of the seventh point vanishes identically")
    return e


@dataclass(frozen=True)
class SixthPoint:
    """Data attached to index i: conic through the other five, apolar cubic, sixth point."""

    index: int
    conic: PointConic
    cubic: Form
    point: HomPoint
    restriction: Form  # binary sextic D_i(q(s,t))


def sixth_points(*points) -> list[SixthPoint]:
    """For each i, the sixth intersection of D_i with the conic through the other five."""
    if len(points) == 1:
        points = tuple(points[0])
    pts = _pts(points)
    if len(pts) != 6:
        raise ValueError("six points are required")
    if on_a_conic(pts):
        raise DegenerateError("the six points lie on a conic")
    out = []
    for i in range(6):
        others = pts[:i] + pts[i + 1 :]
        try:
            theta = conic_through(others)
        except DegenerateError as exc:
            raise DegenerateError(f"index {i + 1}: {exc}") from None
        if not theta.nonsingular:
            raise DegenerateError(f"index {i + 1}: conic through the other five points is singular")
        try:
            d = cubic_through_apolar(theta, pts)
        except DegenerateError as exc:
            raise DegenerateError(f"index {i + 1}: {exc}") from None
        par = parametrize_conic(theta, others[0])
        sextic = d.substitute(list(par.q))
        if sextic.is_zero():
            raise DegenerateError(f"index {i + 1}: the apolar cubic contains the conic")
        rest = sextic
        s, t = Form.var(0, 2), Form.var(1, 2)
        for p in others:
            cu, cv = par.parameter(p)
            rest = rest.exact_div(s * cv - t * cu)
        if rest.degree != 1:
            raise DegenerateError(f"index {i + 1}: residual factor has degree {rest.degree}")
        alpha, beta = rest.coefficient((1, 0)), rest.coefficient((0, 1))
        q = par.point(beta, -alpha)
        out.append(SixthPoint(i, theta, d, q, sextic))
    return out


# ---------------------------------------------------------------------------
# jacobian


def jacobian_sextic(net: CubicNet) -> Form:
    """det(dC_j/dX_h), the locus of singular points of members of the net."""
    grid = [[c.diff(h) for h in range(3)] for c in net.basis]
    return det3(grid)


# ---------------------------------------------------------------------------
# bundled results


@dataclass
class MorleyData:
    S: Form
    N: list
    F: Fraction
    Q_values: tuple
    psi: Fraction | None
    psi_fano: Fraction | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        fr = format_rational
        return {
            "S": self.S.to_json(),
            "N": [[fr(x) for x in row] for row in self.N],
            "F": fr(self.F),
            "Q_values": [fr(q) for q in self.Q_values],
            "psi": None if self.psi is None else fr(self.psi),
            "psi_fano": None if self.psi_fano is None else fr(self.psi_fano),
        }


def morley_data(z: Config7, fano: bool = True) -> MorleyData:
    if not z.pairwise_distinct:
        raise DegenerateError("points are not pairwise distinct")
    c = canonical_s_coefficients(z)
    s = s_from_coefficients(c)
    n = skew_matrix(morley_form(s))
    f = pfaffian(n) if any(c) else Fraction(0)
    qs = q_values(z)
    prod = Fraction(1)
    for q in qs:
        prod *= q
    psi = f / prod if prod else None
    pf = morley_invariant_fano(z.points) if fano else None
    return MorleyData(s, n, f, qs, psi, pf)
