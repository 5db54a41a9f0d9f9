"""Named property suites run by ``luroth verify`` and reused by the tests.

Each suite maps (rng, case index) to a list of checks. A check is
``(name, status, residual)`` with status one of pass / fail / degenerate and
a residual string only on failure.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from luroth.algebra import Form, HomPoint, det, format_rational, pfaffian, proportionality
from luroth.bateman import (
    bateman_points,
    branch_quartic,
    differential_identity,
    line_vector,
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
)
from luroth.errors import DegenerateError
from luroth.generators import (
    DIAGONAL_FAMILY,
    diagonal_bateman_input,
    random_bateman_input,
    random_config7,
    random_roberts,
    six_on_conic_config,
    small_rational,
)
from luroth.surface import branch_cone, fermat_surface

Check = tuple  # (name, status, residual or None)


def check(name: str, ok: bool, residual=None) -> Check:
    if ok:
        return (name, "pass", None)
    return (name, "fail", str(residual) if residual is not None else "mismatch")


def _fr(x) -> str:
    return format_rational(x) if isinstance(x, (int, Fraction)) else str(x)


def _scale(rng):
    return small_rational(rng, 9, 5, nonzero=True)


def suite_differential_identity(rng, i):
    inp = random_bateman_input(rng)
    res = differential_identity(inp)
    return [check("residual-zero", res.is_zero(), res.to_str() if res else None)]


def suite_homogeneity(rng, i):
    z = random_config7(rng)
    k = rng.randrange(7)
    lam = _scale(rng)
    z2 = z.with_point(k, [lam * c for c in z[k].coords])
    rest = [j for j in range(7) if j != k][:5]
    six = [z[k]] + [z[j] for j in rest]
    six2 = [z2[k]] + [z2[j] for j in rest]
    out = [check("Q-degree-2", q_invariant(six2) == lam**2 * q_invariant(six))]
    s1, s2 = canonical_s_coefficients(z), canonical_s_coefficients(z2)
    out.append(check("S-degree-5", all(b == lam**5 * a for a, b in zip(s1, s2))))
    f1, f2 = morley_pfaffian(z), morley_pfaffian(z2)
    out.append(check("F-degree-15", f2 == lam**15 * f1, _fr(f2 - lam**15 * f1)))
    p1, p2 = morley_invariant(z), morley_invariant(z2)
    out.append(check("psi-degree-3", p2 == lam**3 * p1, _fr(p2 - lam**3 * p1)))
    return out


def suite_symmetry(rng, i):
    z = random_config7(rng)
    f, psi = morley_pfaffian(z), morley_invariant(z)
    out = []
    for t in range(10):
        a, b = rng.sample(range(7), 2)
        perm = list(range(7))
        perm[a], perm[b] = b, a
        zs = z.permuted(perm)
        out.append(check(f"F-invariant-{a + 1}{b + 1}", morley_pfaffian(zs) == f))
        out.append(check(f"psi-skew-{a + 1}{b + 1}", morley_invariant(zs) == -psi))
    return out


def suite_nonvanishing(rng, i):
    z = random_config7(rng)
    return [check("psi-nonzero", morley_invariant(z) != 0)]


def suite_two_route(rng, i):
    z = random_config7(rng)
    q, f = morley_invariant(z), morley_invariant_fano(z.points)
    return [check("fano-over-quotient", f == FANO_TO_QUOTIENT_RATIO * q, _fr(f - FANO_TO_QUOTIENT_RATIO * q))]


def suite_six_on_conic(rng, i):
    z, slot = six_on_conic_config(rng)
    return [
        check("F-zero", morley_pfaffian(z) == 0),
        check("Q-factor-zero", q_values(z)[slot] == 0),
    ]


def suite_bateman_family(rng, i):
    m, n = DIAGONAL_FAMILY[i % len(DIAGONAL_FAMILY)]
    z = bateman_points(diagonal_bateman_input(m, n))
    return [
        check("seven-points", len(set(z.points)) == 7),
        check("F-zero", morley_pfaffian(z) == 0),
        check("psi-zero", morley_invariant(z) == 0),
    ]


def suite_luroth(rng, i):
    r = random_roberts(rng)
    b, big_l = luroth_closed_form(r)
    bq = branch_quartic(reverse_roberts(r))
    pent, _ = pentalateral_ops(list(r.lines) + [big_l])
    return [
        check("branch-proportional", proportionality(bq, b) is not None),
        check("vertices-on-quartic", all(b(v.coords) == 0 for v in pent.vertices)),
    ]


def roberts_match(r, r2) -> bool:
    """True when r2 equals r up to a permutation of indices and one global scale."""
    by_line = {HomPoint(line_vector(l)): (l, a, b) for l, a, b in zip(r.lines, r.a, r.b)}
    scales = set()
    for l2, a2, b2 in zip(r2.lines, r2.a, r2.b):
        key = HomPoint(line_vector(l2))
        if key not in by_line:
            return False
        l, a, b = by_line.pop(key)
        c = proportionality(l2, l)
        if c is None or a2 * c**2 != a or b2 * c**3 != b:
            return False
        scales.add(c)
    return not by_line and len(scales) == 1


def suite_roberts_roundtrip(rng, i):
    r = random_roberts(rng)
    inp = reverse_roberts(r)
    return [
        check("pencil-dimension-2", len(roberts_pencil(inp)) == 2),
        check("round-trip", roberts_match(r, roberts_lines(inp))),
    ]


def fermat_points(rng, count: int):
    """Rational points of the Fermat cubic surface of the shape (a, -a, b, -b) up to order."""
    out = []
    pairings = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))
    while len(out) < count:
        (i, j), (k, l) = rng.choice(pairings)
        a, b = small_rational(rng, nonzero=True), small_rational(rng)
        p = [Fraction(0)] * 4
        p[i], p[j], p[k], p[l] = a, -a, b, -b
        out.append(tuple(p))
    return out


def suite_cone(rng, i):
    s = fermat_surface()
    z = fermat_points(rng, 1)[0]
    b = branch_cone(s, z)
    lam = Form.var(0, 5)
    x = [Form.var(j + 1, 5) for j in range(4)]
    shifted = b.substitute([lam * z[j] + x[j] for j in range(4)])
    return [
        check("cone-law", shifted == b.embed(5, 1)),
        check("vertex-on-cone", b(z) == 0),
    ]


def random_skew(rng, n):
    m = [[Fraction(0)] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            m[a][b] = small_rational(rng)
            m[b][a] = -m[a][b]
    return m


def suite_pfaffian(rng, i):
    n = rng.choice((2, 4, 6, 8))
    m = random_skew(rng, n)
    p = pfaffian(m)
    return [check(f"pf-squared-{n}", p * p == det(m), _fr(p * p - det(m)))]


SUITES: dict[str, Callable] = {
    "differential-identity": suite_differential_identity,
    "homogeneity": suite_homogeneity,
    "symmetry": suite_symmetry,
    "nonvanishing": suite_nonvanishing,
    "two-route": suite_two_route,
    "six-on-conic": suite_six_on_conic,
    "bateman-family": suite_bateman_family,
    "luroth": suite_luroth,
    "roberts-roundtrip": suite_roberts_roundtrip,
    "cone": suite_cone,
    "pfaffian": suite_pfaffian,
}


def run_suite(name: str, seed: int, count: int) -> list[dict]:
    """Run ``count`` cases; case i draws from its own generator seeded by (seed, i)."""
    fn = SUITES[name]
    cases = []
    for i in range(count):
        rng = random.Random(f"{name}:{seed}:{i}")
        try:
            checks = fn(rng, i)
        except DegenerateError as exc:
            cases.append({"index": i, "checks": _as_dicts([("case", "degenerate", None)]), "note": str(exc)})
            continue
        cases.append({"index": i, "checks": _as_dicts(checks)})
    return cases


def _as_dicts(checks):
    out = []
    for name, status, residual in checks:
        d = {"name": name, "status": status}
        if status == "fail":
            d["residual"] = residual
        out.append(d)
    return out
