"""The twelve acceptance criteria, each checked exactly (no tolerances).

Each test is named ``test_criterion_NN_title``; conftest prints one
PASS/FAIL line per criterion at the end of the run.
"""

import json
import random
import time
from fractions import Fraction
from pathlib import Path

from luroth.algebra import Form, HomPoint, det, kernel, matvec, pfaffian, proportionality
from luroth.apolarity import PointConic, apolar_cubic
from luroth.bateman import (
    bateman_points,
    branch_quartic,
    differential_identity,
    luroth_closed_form,
    pentalateral_ops,
    reverse_roberts,
    roberts_lines,
    roberts_pencil,
)
from luroth.config7 import (
    FANO_TO_QUOTIENT_RATIO,
    canonical_s_coefficients,
    morley_invariant,
    morley_invariant_fano,
    morley_pfaffian,
    q_invariant,
    q_values,
    seventh_cubic,
    sixth_points,
)
from luroth.generators import (
    DIAGONAL_FAMILY,
    diagonal_bateman_input,
    random_bateman_input,
    random_config7,
    random_roberts,
    six_on_conic_config,
    small_rational,
)
from luroth.suites import fermat_points, random_skew, roberts_match
from luroth.surface import branch_cone, fermat_surface

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
REGRESSION = json.loads((FIXTURES / "regression.json").read_text())


def rng(name, i):
    return random.Random(f"acceptance:{name}:{i}")


def test_criterion_01_bateman_vanishing():
    slowest = 0.0
    for i in range(50):
        inp = random_bateman_input(rng("bateman", i))
        start = time.perf_counter()
        residual = differential_identity(inp)
        slowest = max(slowest, time.perf_counter() - start)
        assert residual.is_zero(), residual.to_str()
    assert slowest < 1.0


def test_criterion_02_point_level_bateman_vanishing():
    assert len(DIAGONAL_FAMILY) == 10
    for m, n in DIAGONAL_FAMILY:
        z = bateman_points(diagonal_bateman_input(m, n))
        assert len(set(z.points)) == 7
        assert morley_pfaffian(z) == 0
        assert morley_invariant(z) == 0


def test_criterion_03_generic_nonvanishing():
    slowest = 0.0
    for i in range(50):
        z = random_config7(rng("generic", i))
        start = time.perf_counter()
        psi = morley_invariant(z)
        slowest = max(slowest, time.perf_counter() - start)
        assert psi != 0
    assert slowest < 5.0


def test_criterion_04_six_on_a_conic():
    for i in range(20):
        z, slot = six_on_conic_config(rng("conic", i))
        on_conic = [p for p in z.points if p.coords[0] * p.coords[2] == p.coords[1] ** 2]
        assert len(on_conic) == 6
        assert morley_pfaffian(z) == 0
        assert q_values(z)[slot] == 0


def test_criterion_05_multihomogeneity():
    for i in range(10):
        r = rng("scale", i)
        z = random_config7(r)
        k = r.randrange(7)
        lam = small_rational(r, 9, 5, nonzero=True)
        z2 = z.with_point(k, [lam * c for c in z[k].coords])
        others = [j for j in range(7) if j != k][:5]
        assert q_invariant([z2[k]] + [z2[j] for j in others]) == lam**2 * q_invariant([z[k]] + [z[j] for j in others])
        s1, s2 = canonical_s_coefficients(z), canonical_s_coefficients(z2)
        assert all(b == lam**5 * a for a, b in zip(s1, s2))
        assert morley_pfaffian(z2) == lam**15 * morley_pfaffian(z)
        assert morley_invariant(z2) == lam**3 * morley_invariant(z)


def test_criterion_06_symmetry_laws():
    for i in range(10):
        r = rng("symmetry", i)
        z = random_config7(r)
        f, psi = morley_pfaffian(z), morley_invariant(z)
        for _ in range(10):
            a, b = r.sample(range(7), 2)
            perm = list(range(7))
            perm[a], perm[b] = b, a
            zs = z.permuted(perm)
            assert morley_pfaffian(zs) == f
            assert morley_invariant(zs) == -psi


def test_criterion_07_two_route_consistency():
    assert Fraction(REGRESSION["fano_to_quotient_ratio"]) == FANO_TO_QUOTIENT_RATIO != 0
    ratios = set()
    for i in range(20):
        z = random_config7(rng("routes", i))
        ratios.add(morley_invariant_fano(z.points) / morley_invariant(z))
    assert ratios == {FANO_TO_QUOTIENT_RATIO}


def test_criterion_08_seventh_point_cubic():
    six = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (2, 3, 5), (11, 13, 29)]
    e = seventh_cubic(six)
    assert all(e(p) == 0 for p in six)
    sp = sixth_points(six)
    assert len(sp) == 6
    assert all(e(s.point.coords) == 0 for s in sp)
    theta = PointConic(Form.var(0, 3) * Form.var(2, 3) - Form.var(1, 3) ** 2)
    on_conic = [HomPoint.of(1, t, t * t) for t in (0, 1, 2, 3, -1, Fraction(1, 2))]
    assert proportionality(seventh_cubic(on_conic), apolar_cubic(theta, on_conic)) is not None


def test_criterion_09_luroth_construction():
    for i in range(25):
        r = random_roberts(rng("luroth", i))
        b, big_l = luroth_closed_form(r)
        assert proportionality(branch_quartic(reverse_roberts(r)), b) is not None
        pent, _ = pentalateral_ops(list(r.lines) + [big_l])
        assert len(set(pent.vertices)) == 10
        assert all(b(v.coords) == 0 for v in pent.vertices)


def test_criterion_10_roberts_round_trip():
    for i in range(25):
        r = random_roberts(rng("roberts", i))
        inp = reverse_roberts(r)
        assert len(roberts_pencil(inp)) == 2
        assert roberts_match(r, roberts_lines(inp))


def test_criterion_11_cone_law():
    s = fermat_surface()
    lam = Form.var(0, 5)
    x = [Form.var(j + 1, 5) for j in range(4)]
    points = fermat_points(rng("cone", 0), 5)
    assert len(set(HomPoint(p) for p in points)) == 5
    for z in points:
        b = branch_cone(s, z)
        assert b.substitute([lam * z[j] + x[j] for j in range(4)]) == b.embed(5, 1)
        assert b(z) == 0


def test_criterion_12_infrastructure():
    for i in range(100):
        r = rng("pfaffian", i)
        m = random_skew(r, r.choice((2, 4, 6, 8)))
        p = pfaffian(m)
        assert p * p == det(m)
    for i in range(20):
        r = rng("kernel", i)
        rows, cols = r.randint(1, 6), r.randint(2, 8)
        m = [[small_rational(r) for _ in range(cols)] for _ in range(rows)]
        if r.random() < 0.5 and rows > 1:
            m[-1] = [a + b for a, b in zip(m[0], m[1 % rows])]
        for v in kernel(m):
            assert all(c == 0 for c in matvec(m, v))
    # the ten-minute bound on the whole run is enforced in conftest


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
