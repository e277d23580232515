"""Fraction-free (Bareiss) elimination: rank, determinant, nullspace, solve.

Three entry domains are handled by the same elimination loop: Python
integers, Gaussian rationals and ScalarPoly.  Rational and fraction inputs
are cleared row by row into one of these first.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .scalars import DEFAULT, GaussianRational, ScalarFraction, ScalarPoly

__all__ = ["rref_den", "rank", "det", "nullspace", "int_nullspace", "int_rank", "solve_rational"]


def _int_exquo(a, b):
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"inexact integer division {a}/{b}")
    return q


def _gauss_exquo(a, b):
    return a / b


def _poly_exquo(a, b):
    return a.exact_div(b)


def rref_den(rows, exquo, one=1):
    """Fraction-free Gauss-Jordan elimination, in place.

    Returns ``(rows, den, pivots)``: every pivot entry of the result equals
    ``den`` and the reduced row echelon form over the fraction field is
    ``rows / den``.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    den = one
    r = 0
    for j in range(ncols):
        if r >= nrows:
            break
        for i in range(r, nrows):
            if rows[i][j]:
                break
        else:
            continue
        if i != r:
            rows[i], rows[r] = rows[r], rows[i]
        prow = rows[r]
        p = prow[j]
        nz = [l for l in range(ncols) if prow[l]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            a = row[j]
            if a:
                new = [p * x for x in row]
                for l in nz:
                    new[l] = new[l] - a * prow[l]
            else:
                new = [p * x if x else x for x in row]
            rows[i] = [exquo(x, den) if x else x for x in new]
        den = p
        pivots.append(j)
        r += 1
    return rows, den, pivots


def _to_int_rows(m):
    """Scale each row of a real rational matrix to integers (rank preserving)."""
    out = []
    for row in m:
        fr = [Fraction(x) for x in row]
        L = reduce(lcm, (x.denominator for x in fr), 1)
        out.append([int(x * L) for x in fr])
    return out


def int_rank(m):
    if not m or not m[0]:
        return 0
    _, _, piv = rref_den([list(r) for r in _to_int_rows(m)], _int_exquo)
    return len(piv)


def _primitive_int(v):
    g = reduce(gcd, v, 0)
    if g > 1:
        v = [x // g for x in v]
    for x in v:
        if x:
            if x < 0:
                v = [-y for y in v]
            break
    return v


def int_nullspace(m, ncols=None):
    """Integer basis of the right nullspace of a rational matrix.

    One vector per free column in increasing column order, content removed
    and first nonzero entry positive.
    """
    if ncols is None:
        ncols = len(m[0]) if m else 0
    if not m:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    rows, den, piv = rref_den(_to_int_rows(m), _int_exquo)
    pset = set(piv)
    basis = []
    for f in range(ncols):
        if f in pset:
            continue
        v = [0] * ncols
        v[f] = den
        for r, pc in enumerate(piv):
            v[pc] = -rows[r][f]
        basis.append(_primitive_int(v))
    return basis


def solve_rational(m, b, ncols=None):
    """One solution of m x = b over the rationals (free variables zero), or None."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    aug = [list(row) + [bi] for row, bi in zip(m, b)]
    if not aug:
        return [Fraction(0)] * ncols
    rows, den, piv = rref_den(_to_int_rows(aug), _int_exquo)
    if piv and piv[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(piv):
        x[pc] = Fraction(rows[r][ncols], den)
    return x


# generic entry point ------------------------------------------------------

def _classify(m):
    """Return ('int', rows) | ('gauss', rows) | ('poly', rows, ctx)."""
    ctx = None
    has_poly = False
    has_complex = False
    for row in m:
        for x in row:
            if isinstance(x, ScalarFraction):
                ctx = x.ctx
                if not (x.num.is_constant() and x.den.is_constant()):
                    has_poly = True
                elif not x.num.constant_term().is_real:
                    has_complex = True
            elif isinstance(x, ScalarPoly):
                ctx = x.ctx
                if not x.is_constant():
                    has_poly = True
                elif not x.constant_term().is_real:
                    has_complex = True
            elif isinstance(x, GaussianRational) and not x.is_real:
                has_complex = True
    ctx = ctx or DEFAULT
    if has_poly:
        rows = []
        for row in m:
            fr = [x if isinstance(x, ScalarFraction) else ScalarFraction(_as_poly(x, ctx)) for x in row]
            den = ScalarPoly.const(1, ctx)
            for x in fr:
                if x.den != den:
                    den = den * x.den
            rows.append([(x.num * den).exact_div(x.den) for x in fr])
        return "poly", rows, ctx
    vals = [[_as_gauss(x) for x in row] for row in m]
    if has_complex:
        return "gauss", vals, ctx
    return "int", _to_int_rows([[v.re for v in row] for row in vals]), ctx


def _as_poly(x, ctx):
    return x if isinstance(x, ScalarPoly) else ScalarPoly.const(x, ctx)


def _as_gauss(x):
    if isinstance(x, ScalarFraction):
        return x.num.constant_term() / x.den.constant_term()
    if isinstance(x, ScalarPoly):
        return x.constant_term()
    return GaussianRational.coerce(x)


def _eliminate(kind, rows):
    if kind == "int":
        return rref_den(rows, _int_exquo, 1)
    if kind == "gauss":
        return rref_den(rows, _gauss_exquo, GaussianRational(1))
    ctx = rows[0][0].ctx
    return rref_den(rows, _poly_exquo, ScalarPoly.const(1, ctx))


def rank(m):
    if not m or not m[0]:
        return 0
    kind, rows, _ = _classify(m)
    return len(_eliminate(kind, rows)[2])


def det(m):
    """Determinant of a square matrix by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    kind, rows, ctx = _classify(m)
    if kind == "poly":
        # row clearing scaled each row; undo with the product of denominators
        scale = ScalarPoly.const(1, ctx)
        for row in m:
            for x in row:
                if isinstance(x, ScalarFraction) and x.den != 1:
                    scale = scale * x.den
        work = [list(r) for r in rows]
        sign = 1
        prev = ScalarPoly.const(1, ctx)
        for k in range(n - 1):
            if not work[k][k]:
                for i in range(k + 1, n):
                    if work[i][k]:
                        work[k], work[i] = work[i], work[k]
                        sign = -sign
                        break
                else:
                    return ScalarFraction(ScalarPoly.const(0, ctx))
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]).exact_div(prev)
            prev = work[k][k]
        return ScalarFraction(work[n - 1][n - 1] * sign, scale)
    vals = [[_as_gauss(x) for x in row] for row in m]
    if kind == "int":
        fr = [[v.re for v in row] for row in vals]
        scale = 1
        for row in fr:
            scale *= reduce(lcm, (x.denominator for x in row), 1)
        work = _to_int_rows(fr)
        exquo, one, zero = _int_exquo, 1, 0
    else:
        scale = 1
        work = [list(r) for r in vals]
        exquo, one, zero = _gauss_exquo, GaussianRational(1), GaussianRational(0)
    sign = 1
    prev = one
    for k in range(n - 1):
        if not work[k][k]:
            for i in range(k + 1, n):
                if work[i][k]:
                    work[k], work[i] = work[i], work[k]
                    sign = -sign
                    break
            else:
                return zero if kind != "int" else Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = exquo(work[i][j] * work[k][k] - work[i][k] * work[k][j], prev)
        prev = work[k][k]
    d = work[n - 1][n - 1] * sign
    if kind == "int":
        return Fraction(d, scale)
    return d


def _poly_content_free(v, ctx):
    """Divide out the common monomial factor and the numeric content."""
    nz = [p for p in v if p]
    if not nz:
        return v
    common = None
    for p in nz:
        for e in p.terms:
            common = list(e) if common is None else [min(a, b) for a, b in zip(common, e)]
    if any(common):
        mono = ScalarPoly.monomial(common, 1, ctx)
        v = [p.exact_div(mono) if p else p for p in v]
    coeffs = [c for p in v for c in p.terms.values()]
    if all(c.is_real for c in coeffs):
        dens = reduce(lcm, (c.re.denominator for c in coeffs), 1)
        nums = reduce(gcd, (int(c.re * dens) for c in coeffs), 0)
        if nums:
            v = [p * Fraction(dens, nums) for p in v]
    lead = next(p for p in v if p)
    _, lc = lead._leading()
    if lc.is_real and lc.re < 0:
        v = [-p for p in v]
    elif not lc.is_real:
        inv = GaussianRational(1) / lc
        v = [p * inv for p in v]
    return v


def nullspace(m, ncols=None):
    """Basis of the right nullspace over the fraction field.

    Vectors have ScalarPoly entries, content removed, one per free column in
    increasing column order (reduced echelon order).
    """
    if ncols is None:
        ncols = len(m[0]) if m else 0
    if not m:
        return [
            [ScalarPoly.const(int(i == j)) for i in range(ncols)] for j in range(ncols)
        ]
    kind, rows, ctx = _classify(m)
    if kind == "int":
        return [[ScalarPoly.const(x, ctx) for x in v] for v in int_nullspace(rows, ncols)]
    rows, den, piv = _eliminate(kind, rows)
    pset = set(piv)
    basis = []
    for f in range(ncols):
        if f in pset:
            continue
        if kind == "gauss":
            v = [GaussianRational(0)] * ncols
            v[f] = den
            for r, pc in enumerate(piv):
                v[pc] = -rows[r][f]
            v = [ScalarPoly.const(x, ctx) for x in v]
        else:
            v = [ScalarPoly.const(0, ctx)] * ncols
            v[f] = den
            for r, pc in enumerate(piv):
                v[pc] = -rows[r][f]
        basis.append(_poly_content_free(v, ctx))
    return basis
