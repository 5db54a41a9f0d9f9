"""Rational roots and resultants through sympy.

Only the factorization over Q and the Sylvester resultant are delegated;
everything else in the package stays on :class:`luroth.algebra.Form`.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from luroth.algebra import Form


def _syms(n):
    return sympy.symbols(f"x0:{n}")


def to_sympy(f: Form, syms=None):
    syms = syms or _syms(f.nvars)
    expr = sympy.Integer(0)
    for e, c in f.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(syms, e):
            if k:
                term *= s**k
        expr += term
    return expr


def from_sympy(expr, syms) -> Form:
    poly = sympy.Poly(sympy.expand(expr), *syms, domain="QQ")
    terms = {}
    for e, c in poly.terms():
        terms[tuple(e)] = Fraction(int(c.p), int(c.q))
    return Form(len(syms), terms)


def binary_rational_roots(f: Form) -> list[tuple[Fraction, Fraction]]:
    """Distinct rational roots (s:t) of a nonzero binary form, with multiplicity order kept stable."""
    if f.nvars != 2 or not f.is_homogeneous():
        raise ValueError("expected a homogeneous binary form")
    if f.is_zero():
        raise ValueError("the zero binary form has no isolated roots")
    deg = f.degree
    roots = []
    if f.coefficient((deg, 0)) == 0:
        roots.append((Fraction(1), Fraction(0)))
    z = sympy.Symbol("z")
    # dehomogenize at t = 1
    expr = sum(
        (sympy.Rational(c.numerator, c.denominator) * z ** e[0] for e, c in f.terms.items()),
        sympy.Integer(0),
    )
    if expr.free_symbols:
        _, factors = sympy.factor_list(sympy.Poly(expr, z, domain="QQ"))
        lin = []
        for fac, _mult in factors:
            if fac.degree() == 1:
                a, b = fac.all_coeffs()
                lin.append(Fraction(int((-b / a).p), int((-b / a).q)))
        roots.extend((r, Fraction(1)) for r in sorted(lin))
    return roots


def univariate_rational_roots(f: Form, var: int) -> list[Fraction]:
    """Distinct rational roots of a Form that only involves variable ``var``."""
    for e in f.terms:
        if any(k for i, k in enumerate(e) if i != var):
            raise ValueError("form involves other variables")
    z = sympy.Symbol("z")
    expr = sum(
        (sympy.Rational(c.numerator, c.denominator) * z ** e[var] for e, c in f.terms.items()),
        sympy.Integer(0),
    )
    if not expr.free_symbols:
        return []
    _, factors = sympy.factor_list(sympy.Poly(expr, z, domain="QQ"))
    out = []
    for fac, _mult in factors:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            r = -b / a
            out.append(Fraction(int(r.p), int(r.q)))
    return sorted(out)


def resultant(f: Form, g: Form, var: int) -> Form:
    """Sylvester resultant of two Forms with respect to variable ``var``."""
    syms = _syms(f.nvars)
    r = sympy.resultant(to_sympy(f, syms), to_sympy(g, syms), syms[var])
    return from_sympy(r, syms)


def gcd(f: Form, g: Form) -> Form:
    syms = _syms(f.nvars)
    return from_sympy(sympy.gcd(to_sympy(f, syms), to_sympy(g, syms)), syms)
