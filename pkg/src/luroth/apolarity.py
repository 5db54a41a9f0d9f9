"""Apolarity pairing, polars, dual conics and apolar cubics in the plane.

Plane forms live in 3 variables X0, X1, X2. Differential operators
(line curves) are Forms in 3 variables too, read as polynomials in the
dual indeterminates d0, d1, d2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from luroth.algebra import (
    Form,
    HomPoint,
    adjugate3,
    det,
    kernel,
    monomials,
    rat,
    solve,
)
from luroth.errors import DegenerateError

DUAL_NAMES = ("d0", "d1", "d2")
X_NAMES = ("X0", "X1", "X2")


def _sym_matrix(form: Form) -> list[list[Fraction]]:
    if form.nvars != 3 or not form.is_homogeneous() or (form and form.degree != 2):
        raise ValueError("expected a ternary quadratic form")
    a = [[Fraction(0)] * 3 for _ in range(3)]
    for e, c in form.terms.items():
        idx = [i for i in range(3) for _ in range(e[i])]
        i, j = idx
        if i == j:
            a[i][i] = c
        else:
            a[i][j] = a[j][i] = c / 2
    return a


def _form_from_matrix(a) -> Form:
    terms = {}
    for i in range(3):
        for j in range(i, 3):
            e = [0, 0, 0]
            e[i] += 1
            e[j] += 1
            c = rat(a[i][j]) if i == j else 2 * rat(a[i][j])
            terms[tuple(e)] = terms.get(tuple(e), 0) + c
    return Form(3, terms)


class _Conic:
    __slots__ = ("form", "matrix")

    def __init__(self, form: Form):
        self.form = form
        self.matrix = _sym_matrix(form)

    @classmethod
    def from_matrix(cls, a):
        if any(rat(a[i][j]) != rat(a[j][i]) for i in range(3) for j in range(3)):
            raise ValueError("conic matrix must be symmetric")
        return cls(_form_from_matrix(a))

    @property
    def determinant(self) -> Fraction:
        return det(self.matrix)

    @property
    def nonsingular(self) -> bool:
        return self.determinant != 0

    def __call__(self, *point):
        return self.form(*point)

    def __eq__(self, other):
        return type(other) is type(self) and other.form == self.form

    def __hash__(self):
        return hash((type(self).__name__, self.form))


class PointConic(_Conic):
    """Point conic theta = sum A_ij X_i X_j."""

    def __repr__(self):
        return f"PointConic({self.form.to_str(X_NAMES)})"


class LineConic(_Conic):
    """Line conic sum a_ij d_i d_j (a second-order differential operator)."""

    def __repr__(self):
        return f"LineConic({self.form.to_str(DUAL_NAMES)})"


def as_form(obj) -> Form:
    return obj.form if isinstance(obj, _Conic) else obj


def apolarity_pair(phi, f, offset: int = 0) -> Form:
    """Apply the operator ``phi`` (in d0,d1,d2) to ``f``.

    ``f`` may carry extra variables; the operator differentiates with respect
    to variables ``offset``, ``offset+1``, ``offset+2`` of ``f``.
    """
    phi, f = as_form(phi), as_form(f)
    if phi.nvars != 3:
        raise ValueError("operator must be a form in three dual variables")
    if phi and f and phi.degree > f.degree_in(range(offset, offset + 3)):
        raise ValueError("operator degree exceeds the degree of the form")
    result = Form.zero(f.nvars)
    for e, c in phi.terms.items():
        g = f
        for i, k in enumerate(e):
            for _ in range(k):
                g = g.diff(offset + i)
        result = result + g * c
    return result


def polar(xi, f, offset: int = 0) -> Form:
    """First polar sum_i xi_i dF/dX_i; ``xi`` is a point or three Forms."""
    f = as_form(f)
    result = Form.zero(f.nvars)
    for i in range(3):
        c = xi[i]
        d = f.diff(offset + i)
        if isinstance(c, Form):
            result = result + c * d
        elif rat(c):
            result = result + d * c
    return result


def dual_conic(theta: PointConic) -> LineConic:
    """Dual line conic via the adjugate (proportional to the inverse)."""
    if not theta.nonsingular:
        raise DegenerateError("dual of a singular conic")
    return LineConic.from_matrix(adjugate3(theta.matrix))


def is_conjugate(c, theta: PointConic) -> bool:
    """True when the point conic ``c`` is apolar to the dual of ``theta``."""
    c = as_form(c)
    if c and (c.nvars != 3 or c.degree != 2 or not c.is_homogeneous()):
        raise ValueError("expected a point conic")
    return apolarity_pair(dual_conic(theta), c).is_zero()


def is_apolar_cubic(d: Form, theta: PointConic) -> bool:
    return apolarity_pair(dual_conic(theta), d).is_zero()


CUBIC_MONOMIALS = monomials(3, 3)


def apolar_cubic(theta: PointConic, pts: Sequence[HomPoint]) -> Form:
    """The cubic through six points of ``theta`` that is apolar to ``theta``.

    Solves 6 incidence + 3 apolarity conditions on the 10 coefficients and
    requires a one-dimensional solution space.
    """
    if not theta.nonsingular:
        raise DegenerateError("theta is singular")
    if len(pts) != 6:
        raise ValueError("six points are required")
    for p in pts:
        if theta(p.coords) != 0:
            raise ValueError(f"{p} is not on theta")
    return cubic_through_apolar(theta, pts)


def cubic_through_apolar(theta: PointConic, pts: Sequence[HomPoint]) -> Form:
    """Cubic through ``pts`` and apolar to ``theta``, unique or DegenerateError.

    Unlike :func:`apolar_cubic` the points need not lie on ``theta``.
    """
    rows = []
    for p in pts:
        rows.append([Form(3, {m: 1})(p.coords) for m in CUBIC_MONOMIALS])
    op = dual_conic(theta)
    images = [apolarity_pair(op, Form(3, {m: 1})) for m in CUBIC_MONOMIALS]
    for i in range(3):
        e = tuple(int(i == j) for j in range(3))
        rows.append([img.coefficient(e) for img in images])
    ker = kernel(rows)
    if len(ker) != 1:
        raise DegenerateError(f"apolar cubic is not unique (solution space of dimension {len(ker)})")
    return Form.from_coefficients(CUBIC_MONOMIALS, ker[0])


def conic_through(pts: Sequence[HomPoint]) -> PointConic:
    """The unique conic through five points, DegenerateError otherwise."""
    monos = monomials(3, 2)
    rows = [[Form(3, {m: 1})(p.coords) for m in monos] for p in pts]
    ker = kernel(rows)
    if len(ker) != 1:
        raise DegenerateError(f"points lie on a {len(ker)}-dimensional space of conics")
    return PointConic(Form.from_coefficients(monos, ker[0]))


def bilinear(theta: PointConic, u, v) -> Fraction:
    a = theta.matrix
    return sum((a[i][j] * rat(u[i]) * rat(v[j]) for i in range(3) for j in range(3)), Fraction(0))


@dataclass(frozen=True)
class ConicParametrization:
    """Rational parametrization (s:t) -> q(s,t) of a nonsingular conic.

    ``q`` holds three binary quadratics in (s, t); (s:t) = (0:1), the
    parameter "t = infinity", maps to the base point ``p``. A point X of the
    conic other than p has parameter (c_u : c_v) where X = c_p p + c_u u + c_v v.
    """

    theta: PointConic
    p: HomPoint
    u: tuple
    v: tuple
    q: tuple

    def point(self, s, t) -> HomPoint:
        s, t = rat(s), rat(t)
        return HomPoint(tuple(qi(s, t) for qi in self.q))

    def parameter(self, x: HomPoint) -> tuple[Fraction, Fraction]:
        if x == self.p:
            return (Fraction(0), Fraction(1))
        basis = [list(self.p.coords), list(self.u), list(self.v)]
        cols = [[basis[k][i] for k in range(3)] for i in range(3)]
        c = solve(cols, x.coords)
        return (c[1], c[2])


def parametrize_conic(theta: PointConic, p: HomPoint) -> ConicParametrization:
    if not theta.nonsingular:
        raise DegenerateError("cannot parametrize a singular conic")
    if theta(p.coords) != 0:
        raise ValueError(f"{p} is not on theta")
    pol = [bilinear(theta, p.coords, e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    # v: on the tangent at p, not proportional to p
    v = None
    for w in kernel([pol]):
        if HomPoint(w) != p:
            v = tuple(w)
            break
    u = next(e for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)) if bilinear(theta, p.coords, e) != 0)
    u = tuple(Fraction(x) for x in u)
    s, t = Form.var(0, 2), Form.var(1, 2)
    w = [s * u[i] + t * v[i] for i in range(3)]
    bpu = bilinear(theta, p.coords, u)
    theta_w = theta.form.substitute(w)
    q = tuple(s * w[i] * (2 * bpu) - theta_w * p.coords[i] for i in range(3))
    return ConicParametrization(theta, p, u, v, q)
