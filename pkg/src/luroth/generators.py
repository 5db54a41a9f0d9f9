"""Seeded random inputs for the verification suites and the tests."""

from __future__ import annotations

import random
from fractions import Fraction

from luroth.algebra import Form, monomials
from luroth.apolarity import PointConic
from luroth.bateman import BatemanInput, RobertsData, luroth_closed_form, pentalateral_ops, reverse_roberts, roberts_pencil
from luroth.config7 import Config7
from luroth.errors import DegenerateError


def small_rational(rng: random.Random, size: int = 9, den: int = 4, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-size, size), rng.randint(1, den))
        if x or not nonzero:
            return x


def random_point(rng: random.Random, size: int = 9) -> tuple[Fraction, ...]:
    while True:
        p = tuple(small_rational(rng, size) for _ in range(3))
        if any(p):
            return p


def random_config7(rng: random.Random, size: int = 9) -> Config7:
    """Seven points with no six on a conic (so both Psi routes apply)."""
    while True:
        z = Config7([random_point(rng, size) for _ in range(7)])
        if z.pairwise_distinct and not z.six_on_conic and not z.all_on_conic:
            return z


def six_on_conic_config(rng: random.Random) -> tuple[Config7, int]:
    """Six points (1, t, t^2) on X0 X2 = X1^2 and a seventh point off it, at a random label."""
    ts = set()
    while len(ts) < 6:
        ts.add(small_rational(rng, 7, 3))
    pts = [(1, t, t * t) for t in sorted(ts)]
    while True:
        p = random_point(rng)
        if p[0] * p[2] != p[1] ** 2:
            break
    slot = rng.randrange(7)
    pts.insert(slot, p)
    return Config7(pts), slot


def random_form(rng: random.Random, degree: int, nvars: int = 3) -> Form:
    monos = monomials(nvars, degree)
    return Form.from_coefficients(monos, [small_rational(rng) for _ in monos])


def random_bateman_input(rng: random.Random) -> BatemanInput:
    while True:
        theta = PointConic(random_form(rng, 2))
        d = random_form(rng, 3)
        if theta.nonsingular and not d.is_zero():
            return BatemanInput(theta, d)


def diagonal_bateman_input(m, n) -> BatemanInput:
    x = [Form.var(i, 3) for i in range(3)]
    m, n = Fraction(m), Fraction(n)
    theta = PointConic(x[0] * x[0] + x[1] * x[1] * (m * m) + x[2] * x[2] * (n * n))
    return BatemanInput(theta, x[0] * x[1] * x[2])


DIAGONAL_FAMILY = ((1, 1), (1, 2), (2, 3), (3, 5), (2, 7), (Fraction(1, 2), 3), (4, 5), (3, 7), (5, 6), (Fraction(2, 3), Fraction(5, 4)))


def random_roberts(rng: random.Random) -> RobertsData:
    """Roberts data whose pipeline is nondegenerate end to end."""
    while True:
        vecs = [[rng.randint(-5, 5) for _ in range(3)] for _ in range(3)]
        vecs.append([-(vecs[0][i] + vecs[1][i] + vecs[2][i]) for i in range(3)])
        a = [small_rational(rng, 7, 3, nonzero=True) for _ in range(4)]
        b = [small_rational(rng, 7, 3, nonzero=True) for _ in range(4)]
        try:
            r = RobertsData.from_vectors(vecs, a, b)
            inp = reverse_roberts(r)
            roberts_pencil(inp)
            _, big_l = luroth_closed_form(r)
            pentalateral_ops(list(r.lines) + [big_l])
        except DegenerateError:
            continue
        return r
