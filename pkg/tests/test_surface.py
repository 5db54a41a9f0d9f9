import random
from fractions import Fraction
from itertools import permutations

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from luroth.algebra import Form, HomPoint
from luroth.errors import DegenerateError
from luroth.generators import random_form
from luroth.roots import to_sympy
from luroth.suites import fermat_points
from luroth.surface import (
    CubicSurface,
    branch_cone,
    branch_cone_symbolic,
    fermat_surface,
    restrict_to_plane,
    surface_from_6points,
    trilinear_eval,
)

X = [Form.var(i, 4) for i in range(4)]
SIX = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), (2, -1, 5)]

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=3)
vectors = st.lists(rationals, min_size=4, max_size=4)
seeds = st.integers(0, 10**6)


def random_surface(seed):
    while True:
        f = random_form(random.Random(seed), 3, nvars=4)
        if not f.is_zero():
            return CubicSurface(f)
        seed += 1


def add(*vs):
    return [sum(c) for c in zip(*vs)]


# trilinear form


def test_fermat_trilinear():
    s = fermat_surface()
    x, y, z = (1, 2, 0, 0), (3, 1, 0, 1), (1, 1, 1, 1)
    assert trilinear_eval(s, x, y, z) == sum(a * b * c for a, b, c in zip(x, y, z))


@given(seeds, vectors, vectors, vectors)
def test_trilinear_polarization_oracle(seed, x, y, z):
    s = random_surface(seed)
    f = s.form
    expected = (
        f(add(x, y, z)) - f(add(x, y)) - f(add(x, z)) - f(add(y, z)) + f(x) + f(y) + f(z)
    ) / 6
    assert trilinear_eval(s, x, y, z) == expected
    assert trilinear_eval(s, x, x, x) == f(x)


@given(seeds, vectors, vectors, vectors)
def test_trilinear_symmetric(seed, x, y, z):
    s = random_surface(seed)
    vals = {trilinear_eval(s, *p) for p in permutations((x, y, z))}
    assert len(vals) == 1


@given(seeds, vectors, vectors)
def test_directional_derivative(seed, z, x):
    # d/dt F(z + tX) at t = 0 equals 3 f(z, z, X)
    s = random_surface(seed)
    t = sympy.Symbol("t")
    expr = to_sympy(s.form, [sympy.Rational(a.numerator, a.denominator) + t * b for a, b in zip(z, x)])
    deriv = sympy.diff(expr, t).subs(t, 0)
    assert deriv == 3 * trilinear_eval(s, z, z, x)


# branch cone


def test_fermat_cone_example():
    b = branch_cone(fermat_surface(), (1, -1, 0, 0))
    cubic = X[0] ** 3 + X[1] ** 3 + X[2] ** 3 + X[3] ** 3
    q = X[0] * X[0] - X[1] * X[1]
    assert b == q * q * 3 - (X[0] + X[1]) * cubic * 4


def test_cone_needs_surface_point():
    with pytest.raises(ValueError):
        branch_cone(fermat_surface(), (1, 0, 0, 0))


@pytest.mark.parametrize("seed", range(5))
def test_cone_law_and_vertex(seed):
    s = fermat_surface()
    z = fermat_points(random.Random(seed), 1)[0]
    b = branch_cone(s, z)
    assert b.degree == 4 and b.is_homogeneous()
    assert b(z) == 0
    lam = Fraction(7, 3)
    for x in [(1, 2, 3, 4), (-2, 0, 5, 1)]:
        assert b([lam * a + c for a, c in zip(z, x)]) == b(x)


@given(st.integers(0, 10**6), vectors)
def test_cone_is_discriminant_of_secant_quadratic(seed, x):
    # F(z + tX) = t (a + b t + c t^2); B is a third of b^2 - 4ac
    s = fermat_surface()
    z = fermat_points(random.Random(seed), 1)[0]
    t = sympy.Symbol("t")
    line = [sympy.Rational(a) + t * sympy.Rational(c.numerator, c.denominator) for a, c in zip(z, x)]
    poly = sympy.Poly(to_sympy(s.form, line), t)
    c1, c2, c3 = (poly.coeff_monomial(t**k) for k in (1, 2, 3))
    assert poly.coeff_monomial(1) == 0
    assert 3 * branch_cone(s, z)(x) == c2 * c2 - 4 * c1 * c3


def test_symbolic_cone_bidegree():
    s = fermat_surface()
    sym = branch_cone_symbolic(s)
    blocks = sym.split([0, 1, 2, 3])
    assert {sum(k) for k in blocks} == {2}
    assert all(v.is_homogeneous() and v.degree == 4 for v in blocks.values())
    z = (2, -2, 1, -1)
    specialized = sym.substitute([Fraction(c) for c in z] + [None] * 4)
    assert specialized.restrict_vars([4, 5, 6, 7]) == branch_cone(s, z)


def test_restrict_to_plane():
    b = branch_cone(fermat_surface(), (1, -1, 0, 0))
    plane = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]]
    y = [Form.var(i, 3) for i in range(3)]
    expected = (y[0] * y[0] - y[1] * y[1]) ** 2 * 3 - (y[0] + y[1]) * (y[0] ** 3 + y[1] ** 3 + y[2] ** 3) * 4
    assert restrict_to_plane(b, plane) == expected
    with pytest.raises(DegenerateError):
        restrict_to_plane(b, [[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 0]])


# surface from six points


@pytest.fixture(scope="module")
def six_point_surface():
    return surface_from_6points(SIX)


def test_surface_from_six_points_contains_images(six_point_surface):
    s, mu = six_point_surface
    rng = random.Random(4)
    for _ in range(10):
        p = tuple(Fraction(rng.randint(-40, 40), rng.randint(1, 7)) for _ in range(3))
        assert s(mu(p).coords) == 0


def test_base_points_are_blown_up(six_point_surface):
    _, mu = six_point_surface
    for p in SIX:
        with pytest.raises(DegenerateError):
            mu(p)


def test_seed_does_not_change_surface(six_point_surface):
    s, _ = six_point_surface
    s2, _ = surface_from_6points(SIX, seed=99)
    assert s.form.primitive() == s2.form.primitive()


def test_six_point_degenerate_inputs():
    with pytest.raises(DegenerateError):
        surface_from_6points([(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (1, 2, 3), (2, -1, 5)])
    conic = [(t * t, t, 1) for t in range(6)]
    with pytest.raises(DegenerateError):
        surface_from_6points(conic)


def test_cone_on_six_point_surface(six_point_surface):
    s, mu = six_point_surface
    z = mu((3, -2, 7)).coords
    b = branch_cone(s, z)
    assert b(z) == 0
    assert HomPoint(z) == mu((6, -4, 14))


def test_fixture_six_points_give_a_surface():
    pts = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (2, 3, 5), (11, 13, 29)]
    s, mu = surface_from_6points(pts)
    assert s(mu((4, -3, 2)).coords) == 0
    with pytest.raises(DegenerateError):
        mu((22, 26, 58))
