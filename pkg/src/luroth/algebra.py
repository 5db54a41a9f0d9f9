"""Exact scalars, sparse forms and rational linear algebra.

Scalars are :class:`fractions.Fraction`. Matrices are plain sequences of
rows; every routine clears denominators row by row and hands the integer
matrix to the fraction-free kernels in :mod:`luroth._backend`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from luroth import _backend
from luroth.errors import DegenerateError

Rational = Fraction
Number = "int | Fraction"

# ---------------------------------------------------------------------------
# scalars


def rat(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to Fraction (floats refused)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def format_rational(x) -> str:
    x = rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, float):
        raise TypeError("floating point input is not accepted")
    return rat(s)


def _lcm_den(values) -> int:
    m = 1
    for v in values:
        d = v.denominator
        if d != 1:
            m = m * d // math.gcd(m, d)
    return m


# ---------------------------------------------------------------------------
# monomials


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total ``degree`` in descending lex order.

    For 3 variables and degree 2 this is X0², X0X1, X0X2, X1², X1X2, X2².
    """
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def _monomial_str(exp, names) -> str:
    parts = []
    for e, n in zip(exp, names):
        if e == 1:
            parts.append(n)
        elif e > 1:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


def default_names(nvars: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(nvars))


# ---------------------------------------------------------------------------
# forms


class Form:
    """Sparse polynomial with Fraction coefficients in ``nvars`` variables.

    Immutable; zero coefficients are never stored. Arithmetic is exact.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], object] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                c = rat(c)
                if c:
                    e = tuple(e)
                    if len(e) != nvars:
                        raise ValueError(f"exponent {e} does not have {nvars} entries")
                    clean[e] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        f = cls.__new__(cls)
        f.nvars = nvars
        f._terms = terms
        f._hash = None
        return f

    # constructors -----------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "Form":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, c, nvars: int) -> "Form":
        c = rat(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, i: int, nvars: int) -> "Form":
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def linear(cls, coeffs: Sequence, nvars: int | None = None, offset: int = 0) -> "Form":
        """Linear form sum c_i x_{offset+i}."""
        n = len(coeffs) if nvars is None else nvars
        terms = {}
        for i, c in enumerate(coeffs):
            c = rat(c)
            if c:
                e = [0] * n
                e[offset + i] = 1
                terms[tuple(e)] = c
        return cls._raw(n, terms)

    @classmethod
    def from_coefficients(cls, monos: Sequence[tuple[int, ...]], coeffs: Sequence, nvars: int | None = None) -> "Form":
        n = len(monos[0]) if nvars is None else nvars
        return cls(n, dict(zip(monos, coeffs)))

    # inspection --------------------------------------------------------
    @property
    def terms(self) -> Mapping[tuple[int, ...], Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def coefficient(self, exp) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def coefficients(self, monos: Iterable[tuple[int, ...]]) -> list[Fraction]:
        return [self._terms.get(m, Fraction(0)) for m in monos]

    @property
    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def degree_in(self, indices: Iterable[int]) -> int:
        idx = list(indices)
        if not self._terms:
            return -1
        return max(sum(e[i] for i in idx) for e in self._terms)

    def is_homogeneous(self, indices: Iterable[int] | None = None) -> bool:
        idx = list(range(self.nvars)) if indices is None else list(indices)
        degs = {sum(e[i] for i in idx) for e in self._terms}
        return len(degs) <= 1

    def leading_term(self):
        """Largest exponent in lex order with its coefficient."""
        e = max(self._terms)
        return e, self._terms[e]

    # arithmetic --------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Form):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return Form.const(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self._terms)
        for e, c in other._terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return Form._raw(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return Form._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Form):
            c = rat(other)
            if not c:
                return Form.zero(self.nvars)
            return Form._raw(self.nvars, {e: v * c for e, v in self._terms.items()})
        other = self._coerce(other)
        t: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return Form._raw(self.nvars, {e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Form):
            return self.exact_div(other)
        c = rat(other)
        return self * (1 / c)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not forms")
        result = Form.const(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Form):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Form.const(other, self.nvars)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def exact_div(self, other: "Form") -> "Form":
        """Quotient of an exact division; raises ArithmeticError otherwise."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero form")
        le, lc = other.leading_term()
        rem = self
        q: dict = {}
        while rem._terms:
            e, c = rem.leading_term()
            d = tuple(a - b for a, b in zip(e, le))
            if min(d) < 0:
                raise ArithmeticError("division is not exact")
            k = c / lc
            q[d] = q.get(d, 0) + k
            rem = rem - Form._raw(self.nvars, {d: k}) * other
        return Form(self.nvars, q)

    # calculus and substitution ---------------------------------------------
    def diff(self, i: int) -> "Form":
        t = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                ne = list(e)
                ne[i] = k - 1
                t[tuple(ne)] = c * k
        return Form._raw(self.nvars, t)

    def gradient(self, indices: Iterable[int] | None = None) -> list["Form"]:
        idx = range(self.nvars) if indices is None else indices
        return [self.diff(i) for i in idx]

    def __call__(self, *point) -> Fraction:
        if len(point) == 1 and not isinstance(point[0], (int, Fraction, str)):
            point = tuple(point[0])
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(point)}")
        vals = [rat(v) for v in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term *= v**k
                    if not term:
                        break
            total += term
        return total

    def substitute(self, values: Sequence, nvars: int | None = None) -> "Form":
        """Replace variable i by ``values[i]`` (a Form, a scalar, or None to keep it).

        The result lives in ``nvars`` variables (default: the Forms' count, or
        this form's own count when only scalars are given).
        """
        if len(values) != self.nvars:
            raise ValueError("one value per variable is required")
        target = nvars
        for v in values:
            if isinstance(v, Form):
                target = v.nvars if target is None else target
        if target is None:
            target = self.nvars
        subs = []
        for i, v in enumerate(values):
            if v is None:
                if target != self.nvars:
                    raise ValueError("kept variables require an unchanged variable count")
                subs.append(Form.var(i, target))
            elif isinstance(v, Form):
                subs.append(v)
            else:
                subs.append(Form.const(v, target))
        cache: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = subs[i] if k == 1 else power(i, k - 1) * subs[i]
            return cache[key]

        result = Form.zero(target)
        for e, c in self._terms.items():
            term = Form.const(c, target)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def embed(self, nvars: int, offset: int = 0) -> "Form":
        """Same polynomial with its variables moved to offset..offset+n-1 of ``nvars``."""
        t = {}
        pad_after = nvars - offset - self.nvars
        if pad_after < 0:
            raise ValueError("target ring too small")
        for e, c in self._terms.items():
            t[(0,) * offset + e + (0,) * pad_after] = c
        return Form._raw(nvars, t)

    def restrict_vars(self, indices: Sequence[int]) -> "Form":
        """Drop all variables outside ``indices`` (they must not occur)."""
        t = {}
        keep = set(indices)
        for e, c in self._terms.items():
            if any(k and i not in keep for i, k in enumerate(e)):
                raise ValueError("form involves a dropped variable")
            t[tuple(e[i] for i in indices)] = c
        return Form._raw(len(indices), t)

    def split(self, indices: Sequence[int]) -> dict[tuple[int, ...], "Form"]:
        """Group terms by their exponents in ``indices``.

        Returns a map from the exponent sub-vector to the coefficient form in
        the remaining variables (variables kept in place, indices zeroed).
        """
        groups: dict = {}
        for e, c in self._terms.items():
            key = tuple(e[i] for i in indices)
            rest = list(e)
            for i in indices:
                rest[i] = 0
            groups.setdefault(key, {})[tuple(rest)] = c
        return {k: Form._raw(self.nvars, v) for k, v in groups.items()}

    def primitive(self) -> "Form":
        """Scale to coprime integer coefficients with positive leading coefficient."""
        if not self._terms:
            return self
        vals = list(self._terms.values())
        den = _lcm_den(vals)
        nums = [int(v * den) for v in vals]
        g = 0
        for n in nums:
            g = math.gcd(g, n)
        _, lc = self.leading_term()
        s = Fraction(den, g) * (1 if lc > 0 else -1)
        return self * s

    # io ------------------------------------------------------------------
    def to_json(self) -> list[dict]:
        return [
            {"exp": list(e), "coeff": format_rational(c)}
            for e, c in sorted(self._terms.items(), reverse=True)
        ]

    @classmethod
    def from_json(cls, data, nvars: int | None = None) -> "Form":
        if not isinstance(data, list):
            raise ValueError("a form is serialized as a JSON array of terms")
        terms = {}
        n = nvars
        for item in data:
            e = tuple(int(k) for k in item["exp"])
            if n is None:
                n = len(e)
            terms[e] = terms.get(e, 0) + parse_rational(item["coeff"])
        if n is None:
            raise ValueError("cannot infer the variable count of an empty form")
        return cls(n, terms)

    def to_str(self, names: Sequence[str] | None = None) -> str:
        names = default_names(self.nvars) if names is None else names
        if not self._terms:
            return "0"
        out = []
        for e, c in sorted(self._terms.items(), reverse=True):
            m = _monomial_str(e, names)
            cs = format_rational(abs(c))
            if m:
                body = m if abs(c) == 1 else f"{cs}*{m}"
            else:
                body = cs
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"Form({self.to_str()})"


def proportionality(f: Form, g: Form) -> Fraction | None:
    """Return c with f = c*g, or None when the forms are not proportional.

    Two zero forms are proportional with c = 1; a single zero form is not.
    """
    if f.is_zero() and g.is_zero():
        return Fraction(1)
    if f.is_zero() or g.is_zero() or f.nvars != g.nvars:
        return None
    if f._terms.keys() != g._terms.keys():
        return None
    e = next(iter(f._terms))
    c = f._terms[e] / g._terms[e]
    for e, v in f._terms.items():
        if v != c * g._terms[e]:
            return None
    return c


def xvars(n: int = 3, nvars: int | None = None, offset: int = 0) -> list[Form]:
    total = n if nvars is None else nvars
    return [Form.var(offset + i, total) for i in range(n)]


# ---------------------------------------------------------------------------
# projective points


@dataclass(frozen=True, eq=False)
class HomPoint:
    """Projective point given by exact homogeneous coordinates (not all zero).

    Equality and hashing are projective; ``coords`` keeps the representative
    that was supplied.
    """

    coords: tuple

    def __post_init__(self):
        c = tuple(rat(x) for x in self.coords)
        if not any(c):
            raise ValueError("a projective point needs a nonzero coordinate")
        object.__setattr__(self, "coords", c)

    @classmethod
    def of(cls, *coords) -> "HomPoint":
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction, str)):
            coords = tuple(coords[0])
        return cls(tuple(coords))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def canonical(self) -> tuple:
        """Representative whose first nonzero coordinate is 1."""
        k = next(x for x in self.coords if x)
        return tuple(x / k for x in self.coords)

    def primitive(self) -> tuple[int, ...]:
        """Coprime integer representative with first nonzero entry positive."""
        den = _lcm_den(self.coords)
        ints = [int(x * den) for x in self.coords]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        k = next(v for v in ints if v)
        s = g if k > 0 else -g
        return tuple(v // s for v in ints)

    def scaled(self, lam) -> "HomPoint":
        lam = rat(lam)
        if not lam:
            raise ValueError("scale factor must be nonzero")
        return HomPoint(tuple(lam * x for x in self.coords))

    def __eq__(self, other):
        if not isinstance(other, HomPoint) or len(other) != len(self):
            return NotImplemented
        a, b = self.coords, other.coords
        n = len(a)
        return all(a[i] * b[j] == a[j] * b[i] for i in range(n) for j in range(i + 1, n))

    def __hash__(self):
        return hash(self.canonical())

    def to_json(self) -> list[str]:
        return [format_rational(x) for x in self.coords]

    @classmethod
    def from_json(cls, data) -> "HomPoint":
        return cls(tuple(parse_rational(x) for x in data))

    def __repr__(self):
        return "HomPoint(" + ", ".join(format_rational(x) for x in self.coords) + ")"


def bracket(p, q, r) -> Fraction:
    """|pqr|, the determinant of three coordinate rows."""
    return (
        p[0] * (q[1] * r[2] - q[2] * r[1])
        - p[1] * (q[0] * r[2] - q[2] * r[0])
        + p[2] * (q[0] * r[1] - q[1] * r[0])
    )


def cross(u, v) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


# ---------------------------------------------------------------------------
# linear algebra

QMatrix = Sequence[Sequence]


def _integer_rows(m):
    """Scale each row to integers; returns (int rows, product of scale factors)."""
    rows = []
    scale = 1
    for r in m:
        r = [rat(x) for x in r]
        s = _lcm_den(r)
        rows.append([int(x * s) for x in r])
        scale *= s
    return rows, scale


def _shape(m):
    rows = len(m)
    cols = len(m[0]) if rows else 0
    for r in m:
        if len(r) != cols:
            raise ValueError("ragged matrix")
    return rows, cols


def det(m: QMatrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n, c = _shape(m)
    if n != c:
        raise ValueError(f"determinant of a non-square {n}x{c} matrix")
    rows, scale = _integer_rows(m)
    return Fraction(_backend.bareiss_det(rows), scale)


det_fraction_free = det


def det_cofactor(m: QMatrix) -> Fraction:
    """Laplace expansion along the first row. Exponential; small matrices only."""
    n, c = _shape(m)
    if n != c:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rat(m[0][0])
    total = Fraction(0)
    for j in range(n):
        a = rat(m[0][j])
        if a:
            minor = [row[:j] + row[j + 1 :] for row in (list(r) for r in m[1:])]
            total += (-a if j % 2 else a) * det_cofactor(minor)
    return total


def _reduce(m):
    n, c = _shape(m)
    rows, _ = _integer_rows(m)
    return _backend.ff_gauss_jordan(rows, c), n, c


def rank(m: QMatrix) -> int:
    if not m:
        return 0
    (_, pivots, _, _), _, _ = _reduce(m)
    return len(pivots)


def _primitive_vector(v):
    g = 0
    for x in v:
        g = math.gcd(g, x)
    if g == 0:
        return [Fraction(0)] * len(v)
    return [Fraction(x // g) for x in v]


def kernel(m: QMatrix, ncols: int | None = None) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space.

    One vector per free column (left to right); each is the primitive integer
    vector that is positive at its free column. Deterministic.
    """
    if not m:
        if ncols is None:
            raise ValueError("ncols is required for an empty matrix")
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    (a, pivots, d, _), _, c = _reduce(m)
    if d < 0:
        a = [[-x for x in row] for row in a]
        d = -d
    pivset = set(pivots)
    basis = []
    for f in range(c):
        if f in pivset:
            continue
        v = [0] * c
        v[f] = d
        for t, pc in enumerate(pivots):
            v[pc] = -a[t][f]
        basis.append(tuple(_primitive_vector(v)))
    return basis


def cramer_vector(m: QMatrix) -> tuple[Fraction, ...]:
    """Signed maximal minors of an (n-1) x n matrix.

    Entry j is (-1)^j times the determinant with column j deleted; this is a
    kernel vector, identically zero when the rank is below n-1.
    """
    r, c = _shape(m)
    if c != r + 1:
        raise ValueError("cramer_vector needs an (n-1) x n matrix")
    rows, scale = _integer_rows(m)
    a, pivots, d, sign = _backend.ff_gauss_jordan(rows, c)
    if len(pivots) < r:
        return tuple(Fraction(0) for _ in range(c))
    pivset = set(pivots)
    f = next(j for j in range(c) if j not in pivset)
    v = [0] * c
    v[f] = d
    for t, pc in enumerate(pivots):
        v[pc] = -a[t][f]
    # the deleted-column-f minor equals sign * d
    k = sign * (-1 if f % 2 else 1)
    return tuple(Fraction(k * x, scale) for x in v)


def solve(a: QMatrix, b: Sequence) -> tuple[Fraction, ...]:
    """Unique solution x of a x = b; raises DegenerateError otherwise."""
    n, c = _shape(a)
    if len(b) != n:
        raise ValueError("right-hand side has the wrong length")
    aug = [list(row) + [-rat(bi)] for row, bi in zip(a, b)]
    ker = kernel(aug)
    if len(ker) != 1 or ker[0][-1] == 0:
        if any(v[-1] for v in ker):
            raise DegenerateError("linear system has infinitely many solutions")
        raise DegenerateError("linear system is inconsistent")
    v = ker[0]
    return tuple(x / v[-1] for x in v[:-1])


def matmul(a: QMatrix, b: QMatrix) -> list[list[Fraction]]:
    bt = list(zip(*b))
    return [[sum((rat(x) * rat(y) for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: QMatrix, v: Sequence) -> list[Fraction]:
    return [sum((rat(x) * rat(y) for x, y in zip(row, v)), Fraction(0)) for row in a]


def transpose(a: QMatrix) -> list[list]:
    return [list(col) for col in zip(*a)]


def adjugate3(a: QMatrix) -> list[list]:
    """Adjugate of a 3x3 matrix; entries may be scalars or Forms."""
    def c(i, j):
        r = [k for k in range(3) if k != i]
        s = [k for k in range(3) if k != j]
        return a[r[0]][s[0]] * a[r[1]][s[1]] - a[r[0]][s[1]] * a[r[1]][s[0]]

    return [[c(j, i) * (1 if (i + j) % 2 == 0 else -1) for j in range(3)] for i in range(3)]


def det3(a) -> object:
    """3x3 determinant for scalar or Form entries."""
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )


# ---------------------------------------------------------------------------
# pfaffians


def is_skew(m: QMatrix) -> bool:
    n = len(m)
    if any(len(r) != n for r in m):
        return False
    return all(rat(m[i][j]) == -rat(m[j][i]) for i in range(n) for j in range(i, n))


def _check_skew(m):
    n = len(m)
    if not is_skew(m):
        raise ValueError("matrix is not skew-symmetric")
    if n % 2:
        raise ValueError("pfaffian of an odd-dimensional matrix")


def pfaffian(m: QMatrix) -> Fraction:
    """Pfaffian of an even skew matrix, normalized by Pf([[0,1],[-1,0]]) = 1.

    Skew Gaussian elimination over the rationals: pivot the first nonzero
    entry of row 0 into position (0, 1) and take the Schur complement.
    """
    _check_skew(m)
    a = [[rat(x) for x in row] for row in m]
    result = Fraction(1)
    while a:
        n = len(a)
        k = next((j for j in range(1, n) if a[0][j]), None)
        if k is None:
            return Fraction(0)
        if k != 1:
            a[1], a[k] = a[k], a[1]
            for row in a:
                row[1], row[k] = row[k], row[1]
            result = -result
        p = a[0][1]
        result *= p
        u = a[0][2:]
        v = a[1][2:]
        rest = [row[2:] for row in a[2:]]
        for i in range(n - 2):
            ui, vi = u[i], v[i]
            if not (ui or vi):
                continue
            row = rest[i]
            for j in range(n - 2):
                row[j] -= (ui * v[j] - vi * u[j]) / p
        a = rest
    return result


def pfaffian_expand(m: QMatrix) -> Fraction:
    """Pfaffian by expansion along the first row; (n-1)!! terms."""
    _check_skew(m)
    a = [[rat(x) for x in row] for row in m]

    def rec(idx):
        if not idx:
            return Fraction(1)
        i0 = idx[0]
        total = Fraction(0)
        for t in range(1, len(idx)):
            x = a[i0][idx[t]]
            if x:
                rest = idx[1:t] + idx[t + 1 :]
                term = x * rec(rest)
                total += term if t % 2 == 1 else -term
        return total

    return rec(list(range(len(a))))


# ---------------------------------------------------------------------------
# binary forms


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


rational_sqrt = _rational_sqrt


def binary_square_test(b: Form) -> Form | None:
    """q with q*q == b when b is the square of a rational binary form, else None."""
    if b.nvars != 2 or not b.is_homogeneous():
        raise ValueError("expected a homogeneous binary form")
    if b.is_zero():
        return Form.zero(2)
    if b.degree % 2:
        return None
    e0, c0 = b.leading_term()
    if e0[0] % 2 or e0[1] % 2:
        return None
    r0 = _rational_sqrt(c0)
    if r0 is None:
        return None
    lead = (e0[0] // 2, e0[1] // 2)
    q = Form(2, {lead: r0})
    two_lead = 2 * r0
    for _ in range(b.degree // 2 + 1):
        rem = b - q * q
        if rem.is_zero():
            return q
        e, c = rem.leading_term()
        d = (e[0] - lead[0], e[1] - lead[1])
        if min(d) < 0 or d >= lead:
            return None
        q = q + Form(2, {d: c / two_lead})
    return q if q * q == b else None


def binary_quadratic_roots(a, b, c) -> list[tuple[Fraction, Fraction]] | None:
    """Rational roots (s:t) of a s^2 + b s t + c t^2, or None if irrational.

    A double root is returned twice. The zero form is rejected.
    """
    a, b, c = rat(a), rat(b), rat(c)
    if not (a or b or c):
        raise ValueError("the zero binary form has no isolated roots")
    if a == 0:
        # t * (b s + c t)
        roots = [(Fraction(1), Fraction(0))]
        if b == 0:
            return roots * 2
        return roots + [(-c, b)]
    disc = b * b - 4 * a * c
    r = _rational_sqrt(disc)
    if r is None:
        return None
    # s/t = (-b ± r) / 2a
    return [(-b + r, 2 * a), (-b - r, 2 * a)]


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
