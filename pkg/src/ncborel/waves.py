"""Plane-wave series, kernels of the wave operator, and magnetic potentials.

Plane waves are truncated power series in formal k1, k2, k3.  The ordering
of the noncommuting exponent is not canonical, so three conventions are
provided:

* ``plain``    sum_n (i k.x)^n / n!
* ``x1-left``  exp(i k1 x1) exp(i k2 x2) exp(i k3 x3)
* ``x1-right`` exp(i k2 x2) exp(i k3 x3) exp(i k1 x1)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .algebra import NcPoly
from .calculus import Form, as_form, d
from .hodge import box
from .homology import graded_basis
from .linalg import int_nullspace
from .scalars import DEFAULT, GaussianRational, ScalarPoly

__all__ = [
    "CONVENTIONS",
    "WaveSpec",
    "WaveCheck",
    "formal_k",
    "plane_wave_series",
    "scalar_exp",
    "wave_derivative_check",
    "wave_eigenvalue_check",
    "kernel_find",
    "kernel_block",
    "magnetic_potential",
]

CONVENTIONS = ("plain", "x1-left", "x1-right")
I_UNIT = GaussianRational(0, 1)


def formal_k(ctx=DEFAULT):
    return tuple(ScalarPoly.var(f"k{a}", ctx) for a in (1, 2, 3))


@dataclass
class WaveSpec:
    order: int
    convention: str = "plain"
    k: tuple = None
    ctx: object = DEFAULT

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("series order must be non-negative")
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}; expected one of {CONVENTIONS}")
        if self.k is None:
            self.k = formal_k(self.ctx)


def _exp_gen(a, kval, order, ctx):
    """Truncated exp(i k x_a) as an NcPoly (a single generator commutes with itself)."""
    out = NcPoly.zero(ctx)
    ik = kval * I_UNIT
    term = ScalarPoly.const(1, ctx)
    mono = [0, 0, 0]
    for n in range(order + 1):
        out = out + NcPoly.monomial(tuple(mono), term * Fraction(1, factorial(n)), ctx)
        term = term * ik
        mono[a - 1] += 1
    return out


def _truncate(f, order, ctx):
    """Drop terms of series degree > order (tracked by k-degree for formal k)."""
    return f.map_coeffs(lambda c: c.truncate_k(order))


def plane_wave_series(w):
    ctx = w.ctx
    k = w.k
    if w.convention == "plain":
        kx = NcPoly.zero(ctx)
        for a in (1, 2, 3):
            kx = kx + NcPoly.gen(a, ctx).scale(k[a - 1] * I_UNIT)
        out = NcPoly.one(ctx)
        power = NcPoly.one(ctx)
        for n in range(1, w.order + 1):
            power = power * kx
            out = out + power.scale(Fraction(1, factorial(n)))
        return out
    e1, e2, e3 = (_exp_gen(a, k[a - 1], w.order, ctx) for a in (1, 2, 3))
    if w.convention == "x1-left":
        prod = _truncate_series(_truncate_series(e1 * e2, w) * e3, w)
    else:
        prod = _truncate_series(_truncate_series(e2 * e3, w) * e1, w)
    return prod


def _truncate_series(f, w):
    if all(_is_formal(kv, a) for a, kv in enumerate(w.k, 1)):
        return _truncate(f, w.order, w.ctx)
    return f


def _is_formal(kv, a):
    return kv == ScalarPoly.var(f"k{a}", kv.ctx)


def scalar_exp(s, order, ctx=DEFAULT):
    """Truncated exp(s) for a scalar s of k-degree >= 1."""
    out = ScalarPoly.const(1, ctx)
    term = ScalarPoly.const(1, ctx)
    for n in range(1, order + 1):
        term = term * s
        out = out + term * Fraction(1, factorial(n))
    return out.truncate_k(order)


def _split_by_k(w, order):
    """{k-degree: Form} for k-degree <= order."""
    parts = {}
    for I, f in w.comps.items():
        for m, s in f.terms.items():
            for n, piece in s.k_degree_parts().items():
                if n <= order:
                    parts.setdefault(n, {}).setdefault(I, {})[m] = piece
    return {
        n: Form(w.degree, {I: NcPoly(t, w.ctx) for I, t in comps.items()}, w.ctx)
        for n, comps in sorted(parts.items())
    }


@dataclass
class WaveCheck:
    spec: WaveSpec
    variant: str
    lhs: Form
    rhs: Form
    residuals: dict = field(default_factory=dict)  # k-order -> Form

    @property
    def passed(self):
        return not any(self.residuals.values())

    @property
    def first_failure(self):
        for n in sorted(self.residuals):
            if self.residuals[n]:
                return n
        return None

    def classical_residual(self):
        """Residual at lam = 0, all orders."""
        out = Form.zero(self.lhs.degree, self.lhs.ctx)
        for r in self.residuals.values():
            out = out + r.substitute({"lam": 0})
        return out


def _require_formal(w):
    if not all(_is_formal(kv, a) for a, kv in enumerate(w.k, 1)):
        raise ValueError("order-by-order checks need formal k1, k2, k3")


def wave_derivative_check(w, variant="consistent"):
    """Compare d(series) with sum_a dx_a (i k_a) exp(-i lam k1) series."""
    _require_formal(w)
    ctx = w.ctx
    series = plane_wave_series(w)
    lhs = as_form(d(series, variant))
    lam = ScalarPoly.lam(1, ctx)
    phase = scalar_exp(-(lam * w.k[0]) * I_UNIT, w.order, ctx)
    rhs = Form.zero(1, ctx)
    for a in (1, 2, 3):
        coef = w.k[a - 1] * I_UNIT * phase
        rhs = rhs + Form.basis((a,), _truncate(series.scale(coef), w.order, ctx), ctx)
    res = _truncate_form(lhs - rhs, w.order)
    residuals = {n: Form.zero(1, ctx) for n in range(w.order + 1)}
    residuals.update(_split_by_k(res, w.order))
    return WaveCheck(w, variant, lhs, rhs, residuals)


def _truncate_form(f, order):
    return f.map_coeffs(lambda g: g.map_coeffs(lambda c: c.truncate_k(order)))


def wave_eigenvalue_check(w, variant="consistent"):
    """Compare box(series) with -|k|^2 exp(-2 i lam k1) series."""
    _require_formal(w)
    ctx = w.ctx
    series = plane_wave_series(w)
    lhs = as_form(box(series, variant))
    lam = ScalarPoly.lam(1, ctx)
    k1, k2, k3 = w.k
    phase = scalar_exp(-(lam * k1) * I_UNIT * 2, w.order, ctx)
    coef = -(k1 * k1 + k2 * k2 + k3 * k3) * phase
    rhs = as_form(_truncate(series.scale(coef), w.order, ctx))
    res = _truncate_form(lhs - rhs, w.order)
    residuals = {n: Form.zero(0, ctx) for n in range(w.order + 1)}
    residuals.update(_split_by_k(res, w.order))
    return WaveCheck(w, variant, lhs, rhs, residuals)


# -- kernels of box --------------------------------------------------------------

def _block_spaces(operator, n):
    """(source basis, target basis) for total grade n; box lowers the grade by 2."""
    if operator == "box0":
        return graded_basis(0, n), graded_basis(0, n - 2) if n >= 2 else None
    if operator == "box1":
        return graded_basis(1, n), graded_basis(1, n - 2) if n >= 3 else None
    raise ValueError(f"unknown operator {operator!r}; expected box0 or box1")


def kernel_block(operator, n, variant="consistent"):
    """Kernel of box restricted to total grade n, as a list of forms."""
    src, tgt = _block_spaces(operator, n)
    elems = [src.element(i) for i in range(len(src))]
    if tgt is None:
        vecs = [[int(i == j) for i in range(len(src))] for j in range(len(src))]
    else:
        index = tgt.index()
        cols = []
        for I, mono, m in src.elements:
            img = as_form(box(Form.basis(I, NcPoly.monomial(mono)), variant))
            col = [0] * len(index)
            for J, f in img.comps.items():
                for mono2, s in f.terms.items():
                    for e, c in s.terms.items():
                        col[index[(J, mono2, e[0] + m)]] += c.re
            cols.append(col)
        rows = [[cols[j][i] for j in range(len(cols))] for i in range(len(index))]
        vecs = int_nullspace(rows, len(src)) if rows else [
            [int(i == j) for i in range(len(src))] for j in range(len(src))
        ]
    out = []
    for v in vecs:
        acc = Form.zero(elems[0].degree if elems else 0)
        for c, e in zip(v, elems):
            if c:
                acc = acc + e.scale(c)
        out.append(acc)
    return out


def kernel_find(operator, grade_bound, variant="consistent"):
    """Basis of ker box on total grades 0..grade_bound, grade by grade."""
    if grade_bound < 0:
        raise ValueError("grade bound must be non-negative")
    out = []
    for n in range(grade_bound + 1):
        block = kernel_block(operator, n, variant)
        if operator == "box0":
            block = [b.to_poly() for b in block]
        out.extend(block)
    return out


# -- magnetic potential ----------------------------------------------------------

def magnetic_potential(k, interpret_c="casimir-x1sq", ctx=DEFAULT):
    """A = 1/4 { (k.dx)(C + x1x2 + x2x3 + x1x3) + sum_a k_a dx_a x_a^2 }."""
    x1, x2, x3 = (NcPoly.gen(a, ctx) for a in (1, 2, 3))
    if interpret_c == "casimir-x1sq":
        C = x1 * x1
    elif interpret_c == "free-constant":
        C = NcPoly.const(ScalarPoly.var("c", ctx), ctx)
    else:
        raise ValueError(f"unknown reading of C {interpret_c!r}")
    quad = C + x1 * x2 + x2 * x3 + x1 * x3
    A = Form.zero(1, ctx)
    for a, xa in zip((1, 2, 3), (x1, x2, x3)):
        A = A + Form.basis((a,), (quad + xa * xa).scale(k[a - 1]), ctx)
    return A.scale(Fraction(1, 4))
