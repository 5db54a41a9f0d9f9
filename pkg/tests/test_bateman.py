import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from luroth.algebra import Form, HomPoint, binary_square_test, kernel, monomials, proportionality
from luroth.apolarity import LineConic, apolarity_pair
from luroth.bateman import (
    BatemanInput,
    RobertsData,
    bateman_points,
    bateman_S,
    branch_quartic,
    differential_identity,
    fifth_line,
    geiser_image,
    geiser_partner,
    line_vector,
    luroth_closed_form,
    morley_form_of,
    pentalateral_ops,
    reverse_roberts,
    roberts_lines,
    roberts_pencil,
)
from luroth.config7 import Config7, morley_invariant, morley_pfaffian, morley_S, q_values
from luroth.errors import DegenerateError, NotRationallySolvable
from luroth.generators import DIAGONAL_FAMILY, diagonal_bateman_input, random_bateman_input, random_roberts
from luroth.suites import roberts_match

X = [Form.var(i, 3) for i in range(3)]
SPHERE = X[0] * X[0] + X[1] * X[1] + X[2] * X[2]
XYZ = X[0] * X[1] * X[2]
Z_B = Config7([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, -1, 1), (1, 1, -1), (-1, 1, 1)])

seeds = st.integers(0, 10**6)


def symbolic_cubic():
    """The general ternary cubic with its ten coefficients as variables 3..12."""
    d = Form.zero(13)
    for k, m in enumerate(monomials(3, 3)):
        d = d + Form(13, {tuple(m) + tuple(int(j == k) for j in range(10)): 1})
    return d


# the determinant S and its polar M


def test_bateman_S_small_case():
    inp = BatemanInput(SPHERE, XYZ)
    s = bateman_S(inp)
    assert s.nvars == 6
    # S(X, X) vanishes because two rows coincide
    xx = s.substitute([Form.var(i % 3, 3) for i in range(6)])
    assert xx.is_zero()


def test_S_restricted_to_Z_is_morley_S():
    s = bateman_S(BatemanInput(SPHERE, XYZ))
    assert proportionality(s, morley_S(Z_B)) is not None


def test_symbolic_cubic_identity():
    inp = BatemanInput(X[0] * X[0] + X[1] * X[2] * 2, symbolic_cubic())
    m = morley_form_of(bateman_S(inp))
    assert m.nvars == 16
    assert differential_identity(inp, m).is_zero()
    # theta* pairs the X0^2 block against the X1X2 block; they must cancel
    blocks = m.split([3, 4, 5])
    assert not blocks[(2, 0, 0)].is_zero()
    assert (blocks[(2, 0, 0)] + blocks[(0, 1, 1)]).is_zero()


@given(seeds)
def test_identity_for_random_pairs(seed):
    inp = random_bateman_input(random.Random(seed))
    assert differential_identity(inp).is_zero()


def test_corrupted_morley_form_is_caught():
    inp = random_bateman_input(random.Random(7))
    m = morley_form_of(bateman_S(inp))
    bad = m + Form.var(0, 6) * Form.var(3, 6) * Form.var(3, 6)
    assert not differential_identity(inp, bad).is_zero()


def test_singular_theta_rejected():
    with pytest.raises(DegenerateError):
        BatemanInput(X[0] * X[0], XYZ)


# points of the configuration


def test_bateman_points_sphere():
    assert set(bateman_points(BatemanInput(SPHERE, XYZ)).points) == set(Z_B.points)


def test_bateman_points_diagonal_example():
    z = bateman_points(diagonal_bateman_input(2, 3))
    expected = {HomPoint.of(*p) for p in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]}
    expected |= {HomPoint.of(6, s * 3, t * 2) for s in (1, -1) for t in (1, -1)}
    assert set(z.points) == expected


@pytest.mark.parametrize("m,n", DIAGONAL_FAMILY)
def test_diagonal_family_is_bateman(m, n):
    z = bateman_points(diagonal_bateman_input(m, n))
    assert len(set(z.points)) == 7
    assert all(q != 0 for q in q_values(z))
    assert morley_pfaffian(z) == 0
    assert morley_invariant(z) == 0


def test_irrational_points_reported():
    inp = BatemanInput(SPHERE, X[0] ** 3 + X[1] ** 3 * 2 + X[2] ** 3 * 5 + XYZ)
    with pytest.raises(NotRationallySolvable) as info:
        bateman_points(inp)
    assert len(info.value.partial) < 7


# Geiser involution


def test_geiser_image_sphere():
    inp = BatemanInput(SPHERE, XYZ)
    assert geiser_image(inp, (1, 1, 0)) == HomPoint.of(1, -1, 0)
    with pytest.raises(DegenerateError):
        geiser_image(inp, (1, -1, 1))


@pytest.mark.parametrize("p", [(1, 2, 3), (5, -1, 2), (2, 7, -3)])
def test_geiser_partner_shares_image(p):
    inp = diagonal_bateman_input(2, 3)
    q = geiser_partner(inp, p)
    assert q != HomPoint.of(*p)
    assert geiser_image(inp, q) == geiser_image(inp, p)
    assert geiser_partner(inp, q) == HomPoint.of(*p)


# Roberts decompositions

E = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]


def test_reverse_roberts_example():
    r = RobertsData.from_vectors(E, [1] * 4, [1] * 4)
    inp = reverse_roberts(r)
    s = X[0] + X[1] + X[2]
    assert inp.theta.form == SPHERE + s * s
    assert inp.d_cubic == X[0] ** 3 + X[1] ** 3 + X[2] ** 3 - s**3


def test_roberts_data_validation():
    with pytest.raises(ValueError):
        RobertsData.from_vectors([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], [1] * 4, [1] * 4)
    with pytest.raises(DegenerateError):
        RobertsData.from_vectors([(1, 0, 0), (0, 1, 0), (1, 1, 0), (-2, -2, 0)], [1] * 4, [1] * 4)


@given(seeds)
def test_pencil_contains_conics_through_the_lines(seed):
    r = random_roberts(random.Random(seed))
    inp = reverse_roberts(r)
    s1, s2 = roberts_pencil(inp)
    for sigma in (s1, s2):
        assert apolarity_pair(sigma, inp.theta.form).is_zero()
        assert apolarity_pair(sigma, inp.d_cubic).is_zero()
    # line conics vanishing on the four points l_k of the dual plane
    rows = [[_mono(line_vector(l), m) for m in monomials(3, 2)] for l in r.lines]
    ker = kernel(rows)
    assert len(ker) == 2
    span = [s1.form.coefficients(monomials(3, 2)), s2.form.coefficients(monomials(3, 2))]
    for v in ker:
        assert len(kernel([list(col) for col in zip(*span, v)])) == 1


def _mono(v, m):
    out = Fraction(1)
    for x, e in zip(v, m):
        out *= Fraction(x) ** e
    return out


def test_roberts_round_trip_fixture_example():
    r = RobertsData.from_vectors(
        [(-2, 2, 3), (-2, -1, -1), (2, -1, 2), (2, 0, -4)], [-2, -5, 4, 3], [Fraction(3, 2), -7, Fraction(1, 3), 4]
    )
    assert roberts_match(r, roberts_lines(reverse_roberts(r)))


@given(seeds)
def test_roberts_round_trip(seed):
    r = random_roberts(random.Random(seed))
    assert roberts_match(r, roberts_lines(reverse_roberts(r)))


def test_roberts_match_rejects_other_data():
    r = random_roberts(random.Random(1))
    other = RobertsData(r.lines, r.a, (r.b[0] * 2,) + r.b[1:])
    assert not roberts_match(r, other)


def test_irrational_roberts_reports_pencil():
    inp = BatemanInput(SPHERE, X[0] ** 3 + X[1] ** 3 * 2 + X[2] ** 3 * 5 + XYZ)
    with pytest.raises(NotRationallySolvable) as info:
        roberts_lines(inp)
    partial = info.value.partial
    assert set(partial) == {"pencil", "discriminant"}
    assert all(isinstance(c, LineConic) for c in partial["pencil"])


# Lüroth quartics


def test_luroth_degenerate_inputs():
    with pytest.raises(DegenerateError):
        luroth_closed_form(RobertsData.from_vectors(E, [1] * 4, [1] * 4))
    with pytest.raises(DegenerateError):
        luroth_closed_form(RobertsData.from_vectors(E, [1] * 4, [1, 2, 0, 3]))


@given(seeds)
def test_closed_form_matches_branch_quartic(seed):
    r = random_roberts(random.Random(seed))
    b, big_l = luroth_closed_form(r)
    assert proportionality(branch_quartic(reverse_roberts(r)), b) is not None
    pent, _ = pentalateral_ops(list(r.lines) + [big_l])
    assert all(b(v.coords) == 0 for v in pent.vertices)


@given(seeds, st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool))
def test_branch_quartic_degree_four_in_scale(seed, lam):
    inp = random_bateman_input(random.Random(seed))
    b = branch_quartic(inp)
    p = (Fraction(2), Fraction(-1), Fraction(3))
    assert b([lam * c for c in p]) == lam**4 * b(p)


def test_quartic_meets_each_line_in_its_four_vertices():
    r = random_roberts(random.Random(3))
    b, big_l = luroth_closed_form(r)
    lines = list(r.lines) + [big_l]
    s, t = Form.var(0, 2), Form.var(1, 2)
    for l in lines:
        e, f = kernel([list(line_vector(l))])
        restricted = b.substitute([s * e[i] + t * f[i] for i in range(3)])
        assert restricted.degree == 4
        # four distinct vertices, so the restriction is not a square
        assert binary_square_test(restricted) is None


def test_pentalateral_structure():
    r = random_roberts(random.Random(5))
    _, big_l = luroth_closed_form(r)
    lines = list(r.lines) + [big_l]
    pent, quartics = pentalateral_ops(lines)
    assert len(set(pent.vertices)) == 10
    assert len(quartics) == 5
    for k, q in enumerate(quartics):
        assert q.degree == 4 and q.exact_div(lines[(k + 1) % 5]) is not None
    with pytest.raises(DegenerateError):
        pentalateral_ops([X[0], X[1], X[0] + X[1], X[2], X[0] - X[2]])


def test_cleared_reciprocal_sum_in_span():
    r = random_roberts(random.Random(11))
    b, big_l = luroth_closed_form(r)
    _, quartics = pentalateral_ops(list(r.lines) + [big_l])
    mons = monomials(3, 4)
    cols = [q.coefficients(mons) for q in quartics] + [b.coefficients(mons)]
    assert len(kernel([list(row) for row in zip(*cols)])) == 1


@given(seeds)
def test_fifth_line_recovered(seed):
    r = random_roberts(random.Random(seed))
    b, big_l = luroth_closed_form(r)
    assert proportionality(fifth_line(b, r.lines), big_l) is not None
