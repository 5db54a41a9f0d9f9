"""Bateman configurations, Morley's differential identity, Roberts
decompositions, the branch quartic of the Geiser involution for Bateman data
and the closed-form Lüroth quartic with its pentalateral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from luroth.algebra import (
    Form,
    HomPoint,
    adjugate3,
    binary_quadratic_roots,
    bracket,
    cross,
    det3,
    format_rational,
    kernel,
    monomials,
    parse_rational,
    rat,
    solve,
)
from luroth.apolarity import LineConic, PointConic, apolarity_pair, dual_conic, polar
from luroth.config7 import Config7
from luroth.errors import DegenerateError, NotRationallySolvable
from luroth import roots

QUAD = monomials(3, 2)
CUBIC = monomials(3, 3)


# ---------------------------------------------------------------------------
# inputs


@dataclass(frozen=True)
class BatemanInput:
    """A nonsingular conic theta and a cubic D.

    ``d_cubic`` may carry extra parameter variables after X0, X1, X2; they are
    treated as symbolic coefficients and kept at the end of every output.
    """

    theta: PointConic
    d_cubic: Form

    def __post_init__(self):
        if not isinstance(self.theta, PointConic):
            object.__setattr__(self, "theta", PointConic(self.theta))
        if not self.theta.nonsingular:
            raise DegenerateError("theta is singular")
        d = self.d_cubic
        if d.is_zero():
            raise DegenerateError("D is the zero cubic")
        if d.nvars < 3 or d.degree_in(range(3)) != 3 or not d.is_homogeneous(range(3)):
            raise ValueError("D must be homogeneous of degree 3 in X0, X1, X2")

    @property
    def nparams(self) -> int:
        return self.d_cubic.nvars - 3

    def minors(self) -> tuple[Form, Form, Form]:
        """Maximal minors of the 2x3 matrix of partials (d theta; d D)."""
        if self.nparams:
            raise ValueError("minors need a numeric cubic")
        return tuple(cross(self.theta.form.gradient(), self.d_cubic.gradient()))

    def to_json(self) -> dict:
        return {"theta": self.theta.form.to_json(), "d_cubic": self.d_cubic.to_json()}

    @classmethod
    def from_json(cls, data) -> "BatemanInput":
        return cls(PointConic(Form.from_json(data["theta"], 3)), Form.from_json(data["d_cubic"], 3))


def _lift(f: Form, slot: int, total: int, nparams: int) -> Form:
    """Move X0..X2 of ``f`` to variables slot..slot+2 and parameters to the tail."""
    vals = [Form.var(slot + i, total) for i in range(3)]
    vals += [Form.var(total - nparams + k, total) for k in range(f.nvars - 3)]
    return f.substitute(vals)


def bateman_S(inp: BatemanInput) -> Form:
    """S(xi, X) = det[d theta(xi); d theta(X); d D(X)] in variables (xi, X, params)."""
    k = inp.nparams
    total = 6 + k
    g_theta = [_lift(g, 0, total, 0) for g in inp.theta.form.gradient()]
    g_theta_x = [_lift(g, 3, total, 0) for g in inp.theta.form.gradient()]
    g_d = [_lift(g, 3, total, k) for g in inp.d_cubic.gradient(range(3))]
    s = det3([g_theta, g_theta_x, g_d])
    if s.is_zero():
        raise DegenerateError("the determinant S vanishes identically")
    return s


def morley_form_of(s: Form) -> Form:
    xi = [Form.var(i, s.nvars) for i in range(3)]
    return polar(xi, s, offset=3)


def differential_identity(inp: BatemanInput, m: Form | None = None) -> Form:
    """Residual of theta* applied to M(xi, X) in the X variables; zero when the identity holds.

    ``m`` overrides the Morley form (used to check that a corrupted M is caught).
    """
    if m is None:
        m = morley_form_of(bateman_S(inp))
    return apolarity_pair(dual_conic(inp.theta), m, offset=3)


# ---------------------------------------------------------------------------
# points of a Bateman configuration

# columns (a, b, c) for the coordinate change X = g Y, g = [[1,0,a],[0,1,b],[0,0,c]]
_CHARTS = ((2, 3, 7), (3, -5, 2), (-4, 7, 3), (5, 2, -11), (1, 1, 1), (0, 0, 1))


def _chart_change(a, b, c):
    y = [Form.var(i, 3) for i in range(3)]
    return [y[0] + y[2] * a, y[1] + y[2] * b, y[2] * c]


def common_rational_zeros(forms: Sequence[Form]) -> list[HomPoint]:
    """Rational common zeros of ternary forms with finitely many common zeros.

    Eliminates X2 from the first two nonzero forms by a resultant in a fixed
    generic chart, takes the rational roots of the binary result and
    back-substitutes into every form.
    """
    forms = [f for f in forms if not f.is_zero()]
    if len(forms) < 2:
        raise DegenerateError("fewer than two nonzero forms")
    for chart in _CHARTS:
        g = _chart_change(*chart)
        cy = [f.substitute(g) for f in forms]
        lead = [f.coefficient((0, 0, f.degree)) for f in cy[:2]]
        if not all(lead):
            continue
        res = roots.resultant(cy[0], cy[1], 2)
        if res.is_zero():
            raise DegenerateError("the forms share a common component")
        found = set()
        for s, t in roots.binary_rational_roots(res.restrict_vars([0, 1])):
            common = None
            for f in cy:
                u = f.substitute([s, t, Form.var(2, 3)])
                common = u if common is None else roots.gcd(common, u)
            if common.is_zero():
                raise DegenerateError("the forms share a line")
            for z in roots.univariate_rational_roots(common, 2):
                y = (s, t, z)
                found.add(HomPoint(tuple(gi(y) for gi in g)))
        pts = sorted(found, key=lambda p: p.canonical())
        for p in pts:
            if any(f(p.coords) for f in forms):
                raise AssertionError(f"{p} is not a common zero")
        return pts
    raise DegenerateError("no admissible chart for the elimination")


def bateman_points(inp: BatemanInput) -> Config7:
    """The seven common zeros of the minors, when they are all rational."""
    c = inp.minors()
    if any(m.is_zero() for m in c):
        raise DegenerateError("a maximal minor vanishes identically")
    pts = common_rational_zeros(c)
    if len(pts) != 7:
        raise NotRationallySolvable(f"found {len(pts)} rational common zeros, expected 7", partial=pts)
    return Config7(pts)


# ---------------------------------------------------------------------------
# Roberts decompositions


@dataclass(frozen=True)
class RobertsData:
    """theta = sum a_k l_k^2 and D = sum b_k l_k^3 with l_1 + ... + l_4 = 0."""

    lines: tuple[Form, Form, Form, Form]
    a: tuple
    b: tuple

    def __post_init__(self):
        if len(self.lines) != 4 or len(self.a) != 4 or len(self.b) != 4:
            raise ValueError("Roberts data has four lines and four coefficients of each kind")
        object.__setattr__(self, "a", tuple(rat(x) for x in self.a))
        object.__setattr__(self, "b", tuple(rat(x) for x in self.b))
        total = self.lines[0] + self.lines[1] + self.lines[2] + self.lines[3]
        if not total.is_zero():
            raise ValueError("the four lines must sum to zero")
        vecs = [line_vector(l) for l in self.lines]
        for t in combinations(range(4), 3):
            if bracket(*(vecs[i] for i in t)) == 0:
                raise DegenerateError(f"lines {tuple(i + 1 for i in t)} are concurrent")

    @classmethod
    def from_vectors(cls, vecs, a, b) -> "RobertsData":
        return cls(tuple(Form.linear(v, 3) for v in vecs), tuple(a), tuple(b))

    @classmethod
    def normalized(cls, vecs, a, b) -> "RobertsData":
        """Rescale four line vectors by their linear relation so that they sum to zero.

        a and b refer to the given vectors and are adjusted accordingly.
        """
        vecs = [[rat(x) for x in v] for v in vecs]
        rel = kernel([[v[i] for v in vecs] for i in range(3)])
        if len(rel) != 1 or not all(rel[0]):
            raise DegenerateError("the four lines are not three-by-three independent")
        lam = rel[0]
        new = [[lam[k] * x for x in vecs[k]] for k in range(4)]
        a2 = [rat(a[k]) / lam[k] ** 2 for k in range(4)]
        b2 = [rat(b[k]) / lam[k] ** 3 for k in range(4)]
        return cls.from_vectors(new, a2, b2)

    def to_json(self) -> dict:
        return {
            "lines": [[format_rational(x) for x in line_vector(l)] for l in self.lines],
            "a": [format_rational(x) for x in self.a],
            "b": [format_rational(x) for x in self.b],
        }

    @classmethod
    def from_json(cls, data) -> "RobertsData":
        vecs = [[parse_rational(x) for x in v] for v in data["lines"]]
        return cls.from_vectors(vecs, [parse_rational(x) for x in data["a"]], [parse_rational(x) for x in data["b"]])


def line_vector(l: Form) -> tuple:
    if l.nvars != 3 or (l and (l.degree != 1 or not l.is_homogeneous())):
        raise ValueError("expected a linear form in three variables")
    return tuple(l.coefficient(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def reverse_roberts(r: RobertsData) -> BatemanInput:
    theta = sum((l * l * a for l, a in zip(r.lines, r.a)), Form.zero(3))
    d = sum((l * l * l * b for l, b in zip(r.lines, r.b)), Form.zero(3))
    return BatemanInput(PointConic(theta), d)


def _operator_rows(inp: BatemanInput) -> list[list[Fraction]]:
    images = [
        (apolarity_pair(Form(3, {m: 1}), inp.theta.form), apolarity_pair(Form(3, {m: 1}), inp.d_cubic))
        for m in QUAD
    ]
    rows = [[t.coefficient((0, 0, 0)) for t, _ in images]]
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        rows.append([d.coefficient(e) for _, d in images])
    return rows


def roberts_pencil(inp: BatemanInput) -> tuple[LineConic, LineConic]:
    """Basis of the line conics apolar to both theta and D."""
    if inp.nparams:
        raise ValueError("the pencil needs a numeric cubic")
    ker = kernel(_operator_rows(inp))
    if len(ker) != 2:
        raise DegenerateError(f"apolar line conics form a space of dimension {len(ker)}, expected 2")
    return tuple(LineConic(Form.from_coefficients(QUAD, v)) for v in ker)


def _split_degenerate(sigma: LineConic):
    """Two dual lines whose product is a rank-2 line conic, as (vertex, point) pairs."""
    a = sigma.matrix
    vk = kernel(a)
    if len(vk) != 1:
        raise DegenerateError("degenerate pencil member has rank below 2")
    w = vk[0]
    comp = kernel([list(w)])  # two vectors spanning a complement of w (up to w itself)
    e, f = comp
    s, t = Form.var(0, 2), Form.var(1, 2)
    q = sigma.form.substitute([s * e[i] + t * f[i] for i in range(3)])
    rts = binary_quadratic_roots(q.coefficient((2, 0)), q.coefficient((1, 1)), q.coefficient((0, 2)))
    if rts is None:
        return None
    return w, [tuple(si * e[i] + ti * f[i] for i in range(3)) for si, ti in rts]


def roberts_lines(inp: BatemanInput) -> RobertsData:
    """Recover the four Roberts lines and the coefficients a, b."""
    s1, s2 = roberts_pencil(inp)
    s, t = Form.var(0, 2), Form.var(1, 2)
    grid = [[s * s1.matrix[i][j] + t * s2.matrix[i][j] for j in range(3)] for i in range(3)]
    cubic = det3(grid)
    if cubic.is_zero():
        raise DegenerateError("every member of the pencil is singular")
    partial = {"pencil": (s1, s2), "discriminant": cubic}
    split = None
    degenerate = None
    for rs, rt in roots.binary_rational_roots(cubic):
        member = LineConic(s1.form * rs + s2.form * rt)
        split = _split_degenerate(member)
        if split is not None:
            degenerate = member
            break
    if split is None:
        raise NotRationallySolvable("no degenerate member of the pencil splits over the rationals", partial=partial)
    # a nonsingular member different from the degenerate one
    general = None
    for cs, ct in ((1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1)):
        cand = LineConic(s1.form * cs + s2.form * ct)
        if cand.nonsingular and not _proportional(cand.form, degenerate.form):
            general = cand
            break
    if general is None:
        raise DegenerateError("no nonsingular member in the pencil")
    w, pts = split
    vecs = []
    for p in pts:
        # restrict the general member to the dual line spanned by w and p
        q = general.form.substitute([s * w[i] + t * p[i] for i in range(3)])
        rts = binary_quadratic_roots(q.coefficient((2, 0)), q.coefficient((1, 1)), q.coefficient((0, 2)))
        if rts is None:
            raise NotRationallySolvable("base points of the pencil are irrational", partial=partial)
        for a_, b_ in rts:
            vecs.append(tuple(a_ * w[i] + b_ * p[i] for i in range(3)))
    if len({HomPoint(v) for v in vecs}) != 4:
        raise DegenerateError("the pencil does not have four distinct base points")
    vecs.sort(key=lambda v: HomPoint(v).canonical())
    base = RobertsData.normalized(vecs, [1] * 4, [1] * 4)
    lines = base.lines
    sq = [l * l for l in lines]
    cu = [l * l * l for l in lines]
    a = solve([[f.coefficient(m) for f in sq] for m in QUAD], inp.theta.form.coefficients(QUAD))
    b = solve([[f.coefficient(m) for f in cu] for m in CUBIC], inp.d_cubic.coefficients(CUBIC))
    return RobertsData(lines, a, b)


def _proportional(f: Form, g: Form) -> bool:
    from luroth.algebra import proportionality

    return proportionality(f, g) is not None


# ---------------------------------------------------------------------------
# Lüroth quartics


def luroth_closed_form(r: RobertsData) -> tuple[Form, Form]:
    """Quartic B and fifth line L of the Lüroth quartic attached to Roberts data."""
    if any(b == 0 for b in r.b):
        raise DegenerateError("some b_k vanishes")
    s = sum((a / b for a, b in zip(r.a, r.b)), Fraction(0))
    if s == 0:
        raise DegenerateError("sum of a_k / b_k vanishes")
    lin = sum((l * (a * a / b) for l, a, b in zip(r.lines, r.a, r.b)), Form.zero(3))
    big_l = lin * (-1 / (s * s))
    if big_l.is_zero():
        raise DegenerateError("the fifth line vanishes identically")
    y = [l * b for l, b in zip(r.lines, r.b)]
    prod = y[0] * y[1] * y[2] * y[3]
    partial_sum = Form.zero(3)
    for k in range(4):
        p = Form.const(1, 3)
        for j in range(4):
            if j != k:
                p = p * y[j]
        partial_sum = partial_sum + p
    return big_l * partial_sum + prod, big_l


def branch_quartic(inp: BatemanInput) -> Form:
    """Points Q whose polar line w.r.t. theta is tangent to the polar conic of Q w.r.t. D."""
    if inp.nparams:
        raise ValueError("the branch quartic needs a numeric cubic")
    line = inp.theta.form.gradient()
    d = inp.d_cubic
    conic = [[d.diff(i).diff(j) * Fraction(1, 2) for j in range(3)] for i in range(3)]
    adj = adjugate3(conic)
    b = Form.zero(3)
    for i in range(3):
        for j in range(3):
            b = b + line[i] * adj[i][j] * line[j]
    if b.is_zero():
        raise DegenerateError("the branch quartic vanishes identically")
    return b


def geiser_image(inp: BatemanInput, p) -> HomPoint:
    """Image of p under the Geiser involution: the common point of its two polar lines."""
    p = p if isinstance(p, HomPoint) else HomPoint.of(p)
    img = [m(p.coords) for m in inp.minors()]
    if not any(img):
        raise DegenerateError(f"{p} is a base point of the involution")
    l1 = [g(p.coords) for g in inp.theta.form.gradient()]
    l2 = [g(p.coords) for g in inp.d_cubic.gradient()]
    assert sum(x * y for x, y in zip(l1, img)) == 0 and sum(x * y for x, y in zip(l2, img)) == 0
    return HomPoint(tuple(img))


def geiser_partner(inp: BatemanInput, p) -> HomPoint:
    """The other point of the fiber of the Geiser involution through p.

    The cubics of the net vanishing at p have a ninth base point besides Z and
    p; it is rational because the other eight are. Returns p itself when p
    lies on the ramification curve.
    """
    p = p if isinstance(p, HomPoint) else HomPoint.of(p)
    q = geiser_image(inp, p).coords
    c = inp.minors()
    pencil = [c[j] * q[i] - c[i] * q[j] for i, j in ((0, 1), (0, 2), (1, 2))]
    z = set(bateman_points(inp).points)
    rest = [x for x in common_rational_zeros(pencil) if x not in z and x != p]
    if not rest:
        return p
    if len(rest) != 1:
        raise AssertionError("the fiber has more than two points")
    return rest[0]


# ---------------------------------------------------------------------------
# pentalaterals


@dataclass(frozen=True)
class Pentalateral:
    lines: tuple
    vertices: tuple

    def to_json(self) -> dict:
        return {
            "lines": [[format_rational(x) for x in line_vector(l)] for l in self.lines],
            "vertices": [v.to_json() for v in self.vertices],
        }


def pentalateral_ops(lines: Sequence[Form]) -> tuple[Pentalateral, list[Form]]:
    """Vertices of five lines and the five products of four of them."""
    lines = tuple(lines)
    if len(lines) != 5:
        raise ValueError("a pentalateral has five lines")
    vecs = [line_vector(l) for l in lines]
    for t in combinations(range(5), 3):
        if bracket(*(vecs[i] for i in t)) == 0:
            raise DegenerateError(f"lines {tuple(i + 1 for i in t)} are concurrent or dependent")
    vertices = tuple(HomPoint(cross(vecs[i], vecs[j])) for i, j in combinations(range(5), 2))
    if len(set(vertices)) != 10:
        raise DegenerateError("fewer than ten distinct vertices")
    quartics = []
    for k in range(5):
        p = Form.const(1, 3)
        for j in range(5):
            if j != k:
                p = p * lines[j]
        quartics.append(p)
    return Pentalateral(lines, vertices), quartics


def _line_chart(l: Form):
    e, f = kernel([list(line_vector(l))])
    return e, f


def fifth_line(b: Form, lines: Sequence[Form]) -> Form:
    """The fifth line of a pentalateral inscribed in B, given the other four.

    On each line l_k the quartic has the three vertices l_k & l_j as roots; the
    fourth root is l_k & L. L is the line through those four points and must
    be unique.
    """
    lines = list(lines)
    if len(lines) != 4:
        raise ValueError("four lines are required")
    vecs = [line_vector(l) for l in lines]
    s, t = Form.var(0, 2), Form.var(1, 2)
    points = []
    for k in range(4):
        e, f = _line_chart(lines[k])
        restricted = b.substitute([s * e[i] + t * f[i] for i in range(3)])
        if restricted.is_zero():
            raise DegenerateError(f"line {k + 1} is a component of the quartic")
        rest = restricted
        for j in range(4):
            if j == k:
                continue
            v = cross(vecs[k], vecs[j])
            cs, ct = solve([[e[i], f[i]] for i in range(3)], v)
            rest = rest.exact_div(s * ct - t * cs)
        alpha, beta = rest.coefficient((1, 0)), rest.coefficient((0, 1))
        points.append(tuple(beta * e[i] - alpha * f[i] for i in range(3)))
    ker = kernel(points)
    if len(ker) != 1:
        raise DegenerateError(f"the four residual points do not determine a unique line ({len(ker)} solutions)")
    return Form.linear(ker[0], 3)
