"""Cubic surfaces in P^3: trilinear polarization, the quartic branch cone of
the projection from a surface point, and the surface attached to six plane
points through the linear system of cubics.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from typing import Sequence

from luroth.algebra import Form, HomPoint, bracket, kernel, monomials, rank, rat
from luroth.config7 import cubics_through, on_a_conic
from luroth.errors import DegenerateError

SURFACE_CUBICS = monomials(4, 3)


@dataclass(frozen=True)
class CubicSurface:
    form: Form

    def __post_init__(self):
        f = self.form
        if f.nvars != 4 or f.is_zero() or f.degree != 3 or not f.is_homogeneous():
            raise ValueError("a cubic surface is a nonzero cubic form in four variables")

    @cached_property
    def third_derivatives(self) -> dict:
        """Constant third partials d_i d_j d_k F, keyed by sorted index triples."""
        out = {}
        for i, j, k in product(range(4), repeat=3):
            key = tuple(sorted((i, j, k)))
            if key not in out:
                out[key] = self.form.diff(i).diff(j).diff(k).coefficient((0, 0, 0, 0))
        return out

    def __call__(self, x) -> Fraction:
        return self.form(x)


def trilinear_eval(s: CubicSurface, x, y, z) -> Fraction:
    """f(x, y, z) with f(x, x, x) = F(x)."""
    x, y, z = ([rat(c) for c in v] for v in (x, y, z))
    d = s.third_derivatives
    total = Fraction(0)
    for i, j, k in product(range(4), repeat=3):
        c = d[tuple(sorted((i, j, k)))]
        if c:
            total += c * x[i] * y[j] * z[k]
    return total / 6


def _polars(s: CubicSurface, z):
    """f(z, X, X) and f(z, z, X) as Forms in X."""
    f = s.form
    grads = f.gradient()
    fz = sum((g * rat(c) for g, c in zip(grads, z)), Form.zero(4))
    fzz = sum((fz.diff(i) * rat(c) for i, c in enumerate(z)), Form.zero(4))
    return fz * Fraction(1, 3), fzz * Fraction(1, 6)


def branch_cone(s: CubicSurface, z) -> Form:
    """3 f(z,X,X)^2 - 4 f(z,z,X) F(X): the quartic cone over the branch curve, vertex z."""
    z = z.coords if isinstance(z, HomPoint) else tuple(rat(c) for c in z)
    if len(z) != 4:
        raise ValueError("z must be a point of P^3")
    if s.form(z) != 0:
        raise ValueError("z is not on the surface")
    fzxx, fzzx = _polars(s, z)
    return fzxx * fzxx * 3 - fzzx * s.form * 4


def branch_cone_symbolic(s: CubicSurface) -> Form:
    """The same expression with z as variables 0..3 and X as variables 4..7."""
    zv = [Form.var(i, 8) for i in range(4)]
    big = s.form.embed(8, 4)
    fz = sum((big.diff(4 + i) * zv[i] for i in range(4)), Form.zero(8))
    fzxx = fz * Fraction(1, 3)
    fzzx = sum((fz.diff(4 + i) * zv[i] for i in range(4)), Form.zero(8)) * Fraction(1, 6)
    return fzxx * fzxx * 3 - fzzx * big * 4


def restrict_to_plane(b: Form, plane: Sequence[Sequence]) -> Form:
    """Substitute X = plane . Y with ``plane`` a 4 x 3 matrix of rank 3."""
    m = [[rat(c) for c in row] for row in plane]
    if len(m) != b.nvars or any(len(r) != 3 for r in m):
        raise ValueError(f"plane must be a {b.nvars} x 3 matrix")
    if rank(m) != 3:
        raise DegenerateError("plane parametrization is not injective")
    y = [Form.var(i, 3) for i in range(3)]
    return b.substitute([sum((y[j] * row[j] for j in range(3)), Form.zero(3)) for row in m])


@dataclass(frozen=True)
class CubicMap:
    """P^2 --> P^3 given by four cubics through six base points."""

    basis: tuple

    def __call__(self, p) -> HomPoint:
        p = p.coords if isinstance(p, HomPoint) else tuple(p)
        img = tuple(c(p) for c in self.basis)
        if not any(img):
            raise DegenerateError(f"{p} is a base point of the linear system")
        return HomPoint(img)


def _random_plane_point(rng: random.Random):
    return tuple(Fraction(rng.randint(-30, 30), rng.randint(1, 5)) for _ in range(3))


def surface_from_6points(points, seed: int = 0, samples: int = 25) -> tuple[CubicSurface, CubicMap]:
    """The cubic surface image of the plane under the cubics through six points."""
    pts = tuple(p if isinstance(p, HomPoint) else HomPoint.of(p) for p in points)
    if len(pts) != 6:
        raise ValueError("six points are required")
    for t in combinations(range(6), 3):
        if bracket(*(pts[i] for i in t)) == 0:
            raise DegenerateError(f"points {tuple(i + 1 for i in t)} are collinear")
    if on_a_conic(pts):
        raise DegenerateError("the six points lie on a conic")
    mu = CubicMap(tuple(cubics_through(pts, expected=4)))
    rng = random.Random(seed)
    for _attempt in range(2):
        rows = []
        while len(rows) < samples:
            try:
                img = mu(_random_plane_point(rng))
            except DegenerateError:
                continue
            rows.append([Form(4, {m: 1})(img.coords) for m in SURFACE_CUBICS])
        ker = kernel(rows)
        if len(ker) == 1:
            return CubicSurface(Form.from_coefficients(SURFACE_CUBICS, ker[0])), mu
    raise DegenerateError(f"interpolation kernel has dimension {len(ker)}")


def fermat_surface() -> CubicSurface:
    return CubicSurface(sum((Form.var(i, 4) ** 3 for i in range(4)), Form.zero(4)))
