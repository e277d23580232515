"""Three-dimensional bicovariant calculus on R^3_lam and its exterior algebra.

Forms are written with coefficients on the right, omega = sum_I dx_I f_I,
with the wedge basis dx_I in increasing index order.  Moving an algebra
element from the left of dx_J to the right uses

    f dx_J = sum rho_k(f_(1)) dx_J . f_(2)

where rho_k is the representation rho of the three-dimensional calculus,
carried to the dx basis (e1 = dx2, e2 = dx3, e3 = -dx1) and extended to
Lambda^k as a derivation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial

from .algebra import NcPoly, _acc, coproduct_terms, normal_mul, antipode, GEN_MONOS
from .errors import DegreeError
from .scalars import DEFAULT, GaussianRational, ScalarPoly

__all__ = [
    "Form",
    "RhoRep",
    "RHO",
    "dx",
    "as_form",
    "canon",
    "move_coeff_left_to_right",
    "wedge",
    "d",
    "d_inner",
    "d_leibniz",
    "d_shuffle",
    "d_paper_variant",
    "partials",
    "invariant_form",
    "VARIANTS",
]

VARIANTS = ("consistent", "paper")

BASIS = {
    0: [()],
    1: [(1,), (2,), (3,)],
    2: [(1, 2), (1, 3), (2, 3)],
    3: [(1, 2, 3)],
}


def canon(indices):
    """(sign, sorted tuple) for a wedge of basis 1-forms; (0, None) if repeated."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, None
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return sign, tuple(idx)


class Form:
    """Element of Omega^k: mapping basis tuple I -> right coefficient NcPoly."""

    __slots__ = ("degree", "comps", "ctx")

    def __init__(self, degree, comps=None, ctx=DEFAULT):
        self.degree = degree
        self.ctx = ctx
        self.comps = {}
        for I, f in (comps or {}).items():
            I = tuple(I)
            if len(I) != degree:
                raise DegreeError(f"basis {I} does not have degree {degree}")
            if not isinstance(f, NcPoly):
                f = NcPoly.const(f, ctx)
            if f:
                s, K = canon(I)
                if not s:
                    continue
                if s < 0:
                    f = -f
                if K in self.comps:
                    f = self.comps[K] + f
                    if not f:
                        del self.comps[K]
                        continue
                self.comps[K] = f

    @classmethod
    def _raw(cls, degree, comps, ctx):
        w = cls.__new__(cls)
        w.degree = degree
        w.comps = comps
        w.ctx = ctx
        return w

    @classmethod
    def zero(cls, degree, ctx=DEFAULT):
        return cls._raw(degree, {}, ctx)

    @classmethod
    def basis(cls, I, coeff=None, ctx=DEFAULT):
        """dx_I . coeff (coeff defaults to 1)."""
        if coeff is None:
            coeff = NcPoly.one(ctx)
        elif not isinstance(coeff, NcPoly):
            coeff = NcPoly.const(coeff, ctx)
        return cls(len(I), {tuple(I): coeff}, coeff.ctx)

    @classmethod
    def from_poly(cls, f):
        return cls._raw(0, {(): f} if f else {}, f.ctx)

    def to_poly(self):
        if self.degree != 0:
            raise DegreeError(f"a {self.degree}-form is not a function")
        return self.comps.get((), NcPoly.zero(self.ctx))

    def coeff(self, I):
        return self.comps.get(tuple(I), NcPoly.zero(self.ctx))

    def _check(self, other):
        if self.degree != other.degree and self.comps and other.comps:
            raise DegreeError(f"cannot add a {self.degree}-form and a {other.degree}-form")

    def __add__(self, other):
        other = as_form(other, self.ctx)
        self._check(other)
        if not other.comps:
            return self
        if not self.comps:
            return other
        out = dict(self.comps)
        for I, f in other.comps.items():
            _acc(out, I, f)
        return Form._raw(self.degree, out, self.ctx)

    __radd__ = __add__

    def __neg__(self):
        return Form._raw(self.degree, {I: -f for I, f in self.comps.items()}, self.ctx)

    def __sub__(self, other):
        return self + (-as_form(other, self.ctx))

    def __rsub__(self, other):
        return as_form(other, self.ctx) - self

    def scale(self, s):
        out = {}
        for I, f in self.comps.items():
            v = f.scale(s)
            if v:
                out[I] = v
        return Form._raw(self.degree, out, self.ctx)

    def rmul(self, g):
        """(dx_I f) . g = dx_I (f g)."""
        out = {}
        for I, f in self.comps.items():
            v = normal_mul(f, g)
            if v:
                out[I] = v
        return Form._raw(self.degree, out, self.ctx)

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            return self.rmul(other)
        if isinstance(other, (int, Fraction, GaussianRational, ScalarPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, NcPoly):
            return move_coeff_left_to_right(other, self)
        if isinstance(other, (int, Fraction, GaussianRational, ScalarPoly)):
            return self.scale(other)
        return NotImplemented

    def __xor__(self, other):
        return wedge(self, other)

    def map_coeffs(self, fn):
        out = {}
        for I, f in self.comps.items():
            v = fn(f)
            if v:
                out[I] = v
        return Form._raw(self.degree, out, self.ctx)

    def substitute(self, bindings):
        return self.map_coeffs(lambda f: f.substitute(bindings))

    def lam_div(self, power=1):
        return self.map_coeffs(lambda f: f.lam_div(power))

    def __bool__(self):
        return bool(self.comps)

    def is_zero(self):
        return not self.comps

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            other = Form.from_poly(other)
        if not isinstance(other, Form):
            return NotImplemented
        if not self.comps and not other.comps:
            return True
        return self.degree == other.degree and self.comps == other.comps

    def __hash__(self):
        return hash((self.degree, frozenset(self.comps.items())))

    def __repr__(self):
        from .cli.formatting import form_text

        return f"Form({form_text(self)})"


def as_form(w, ctx=DEFAULT):
    if isinstance(w, Form):
        return w
    if isinstance(w, NcPoly):
        return Form.from_poly(w)
    return Form.from_poly(NcPoly.const(w, ctx))


def dx(a, ctx=DEFAULT):
    return Form.basis((a,), None, ctx)


# -- the representation rho and the induced bimodule --------------------------

RHO_E = {
    1: ((1, 0, 0), (0, 1, 0), (0, 0, -1)),
    2: ((0, 0, 1), (0, 0, 0), (0, 0, 0)),
    3: ((0, 0, 0), (0, 0, 1), (0, 0, 0)),
}
# e-basis vector -> (sign, dx index)
E_TO_DX = {0: (1, 2), 1: (1, 3), 2: (-1, 1)}
DX_TO_E = {2: (1, 0), 3: (1, 1), 1: (-1, 2)}


@dataclass(frozen=True)
class RhoRep:
    """rho(x_a) = lam * int_matrices[a] on C^3 with ray Lambda = e3."""

    int_matrices: dict = field(default_factory=lambda: dict(RHO_E))
    ray: int = 2

    def matrix(self, a, ctx=DEFAULT):
        lam = ScalarPoly.lam(1, ctx)
        return [[lam * v for v in row] for row in self.int_matrices[a]]

    def apply(self, a, vec):
        """Integer part of rho(x_a) applied to an integer vector."""
        M = self.int_matrices[a]
        return tuple(sum(M[i][j] * vec[j] for j in range(3)) for i in range(3))

    def dx_action(self, a):
        """Integer map R_a with x_a dx_b = dx_b x_a + lam R_a(dx_b)."""
        out = {}
        for b in (1, 2, 3):
            s, e = DX_TO_E[b]
            vec = [0, 0, 0]
            vec[e] = s
            img = self.apply(a, vec)
            col = {}
            for i, v in enumerate(img):
                if v:
                    s2, c = E_TO_DX[i]
                    col[c] = col.get(c, 0) + s2 * v
            out[b] = col
        return out


RHO = RhoRep()
R_DX = {a: RHO.dx_action(a) for a in (1, 2, 3)}


def _deriv_ext(R, vec):
    """Apply the derivation extension of R to a Lambda^k vector {J: int}."""
    out = {}
    for J, n in vec.items():
        for pos, b in enumerate(J):
            for c, m in R[b].items():
                s, K = canon(J[:pos] + (c,) + J[pos + 1:])
                if s:
                    v = out.get(K, 0) + s * n * m
                    if v:
                        out[K] = v
                    else:
                        out.pop(K, None)
    return out


@lru_cache(maxsize=None)
def rho_k(mono, J):
    """Integer part of rho(x1^i x2^j x3^k) on dx_J, as ((K, int), ...).

    The full operator carries lam^(i+j+k).
    """
    i, j, k = mono
    vec = {J: 1}
    for a, p in ((3, k), (2, j), (1, i)):
        for _ in range(p):
            vec = _deriv_ext(R_DX[a], vec)
            if not vec:
                return ()
    return tuple(sorted(vec.items()))


def move_coeff_left_to_right(f, w):
    """Rewrite f . w in the right-coefficient convention."""
    w = as_form(w, f.ctx)
    out = {}
    for m, s in f.terms.items():
        for l, r, n in coproduct_terms(m):
            lam_pow = sum(l)
            rmono = NcPoly.monomial(r, 1, f.ctx)
            for J, g in w.comps.items():
                img = rho_k(l, J)
                if not img:
                    continue
                rg = normal_mul(rmono, g)
                if not rg:
                    continue
                base = s.lam_shift(lam_pow) * n if lam_pow or n != 1 else s
                for K, c in img:
                    _acc(out, K, rg.scale(base * c))
    return Form._raw(w.degree, out, w.ctx)


def wedge(w, v):
    """Graded product; coefficients of w are moved past the basis of v."""
    w = as_form(w)
    v = as_form(v, w.ctx)
    deg = w.degree + v.degree
    if deg > 3:
        return Form.zero(deg, w.ctx)
    out = {}
    for I, f in w.comps.items():
        moved = move_coeff_left_to_right(f, v) if not _is_one(f) else v
        for K, h in moved.comps.items():
            s, L = canon(I + K)
            if s:
                _acc(out, L, h if s > 0 else -h)
    return Form._raw(deg, out, w.ctx)


def _is_one(f):
    return len(f.terms) == 1 and (0, 0, 0) in f.terms and f.terms[(0, 0, 0)] == 1


def _basis_wedge(I, w):
    """dx_I ^ w (no coefficient to move)."""
    out = {}
    for K, h in w.comps.items():
        s, L = canon(I + K)
        if s:
            _acc(out, L, h if s > 0 else -h)
    return Form._raw(len(I) + w.degree, out, w.ctx)


# -- exterior derivative: three independent constructions ---------------------

def d_inner(w):
    """d w = w ^ theta - (-1)^deg theta ^ w with theta = -dx1 / lam."""
    w = as_form(w)
    k = w.degree
    if k >= 3:
        return Form.zero(k + 1, w.ctx)
    t = dx(1, w.ctx)
    X = wedge(w, t) - wedge(t, w).scale(-1 if k % 2 else 1)
    return -X.lam_div(1)


@lru_cache(maxsize=None)
def _d_leibniz_mono(mono, ctx):
    a, b, c = mono
    if a + b + c == 0:
        return Form.zero(1, ctx)
    if a:
        first, rest = 1, (a - 1, b, c)
    elif b:
        first, rest = 2, (0, b - 1, c)
    else:
        first, rest = 3, (0, 0, c - 1)
    restp = NcPoly.monomial(rest, 1, ctx)
    term1 = Form.basis((first,), restp, ctx)
    term2 = move_coeff_left_to_right(NcPoly.gen(first, ctx), _d_leibniz_mono(rest, ctx))
    return term1 + term2


def d_leibniz(w):
    """d from d(x_a) = dx_a, the Leibniz rule, and the right-handed rule
    d(w ^ v) = w ^ dv + (-1)^deg(v) dw ^ v with d(dx_a) = 0."""
    w = as_form(w)
    if w.degree >= 3:
        return Form.zero(w.degree + 1, w.ctx)
    out = Form.zero(w.degree + 1, w.ctx)
    for I, f in w.comps.items():
        df = Form.zero(1, w.ctx)
        for m, s in f.terms.items():
            df = df + _d_leibniz_mono(m, w.ctx).scale(s)
        # d(dx_I ^ f) = dx_I ^ df + d(dx_I) ^ f, and d(dx_I) = 0
        out = out + _basis_wedge(I, df)
    return out


@lru_cache(maxsize=None)
def _d_shuffle_mono(mono, ctx):
    a, b, c = mono
    word = (1,) * a + (2,) * b + (3,) * c
    n = len(word)
    acc = {}
    for k in range(1, n + 1):
        for S in combinations(range(n), k):
            # rho_Lambda(xi_S) = rho(xi_S) e3 = lam^k * (integer vector)
            vec = [0, 0, 0]
            vec[RHO.ray] = 1
            for pos in reversed(S):
                vec = RHO.apply(word[pos], vec)
            if not any(vec):
                continue
            rest = [0, 0, 0]
            chosen = set(S)
            for pos in range(n):
                if pos not in chosen:
                    rest[word[pos] - 1] += 1
            rest = tuple(rest)
            for i, v in enumerate(vec):
                if v:
                    sign, idx = E_TO_DX[i]
                    key = (idx, rest, k - 1)
                    acc[key] = acc.get(key, 0) + sign * v
    comps = {}
    for (idx, rest, lp), n_ in acc.items():
        if n_:
            term = NcPoly.monomial(rest, ScalarPoly.lam(lp, ctx) * n_, ctx)
            comps[(idx,)] = comps[(idx,)] + term if (idx,) in comps else term
    return Form(1, comps, ctx)


def d_shuffle(f):
    """d(xi_1...xi_n) = lam^-1 sum_k sum_(k, n-k)-shuffles rho_Lambda(xi_S) xi_rest."""
    if isinstance(f, Form):
        f = f.to_poly()
    out = Form.zero(1, f.ctx)
    for m, s in f.terms.items():
        out = out + _d_shuffle_mono(m, f.ctx).scale(s)
    return out


def arrangements(n, k):
    return factorial(n) // factorial(n - k)


@lru_cache(maxsize=None)
def _d_paper_mono(mono, ctx):
    a, b, c = mono
    lam = lambda p: ScalarPoly.lam(p, ctx)
    comps = {}
    if a:
        t = NcPoly.zero(ctx)
        for k in range(1, a + 1):
            coef = -arrangements(a, k) * (-1) ** k
            t = t + NcPoly.monomial((a - k, b, c), lam(k - 1) * coef, ctx)
        comps[(1,)] = t
    if b:
        t = NcPoly.zero(ctx)
        for k in range(0, a + 1):
            t = t + NcPoly.monomial((a - k, b - 1, c), lam(k) * (arrangements(a, k) * b), ctx)
        comps[(2,)] = t
    if c:
        t = NcPoly.zero(ctx)
        for k in range(0, a + 1):
            t = t + NcPoly.monomial((a - k, b, c - 1), lam(k) * (arrangements(a, k) * c), ctx)
        comps[(3,)] = t
    return Form(1, comps, ctx)


def d_paper_variant(f):
    """The printed monomial formula with arrangement numbers A^k_a = a!/(a-k)!."""
    if isinstance(f, Form):
        f = f.to_poly()
    out = Form.zero(1, f.ctx)
    for m, s in f.terms.items():
        out = out + _d_paper_mono(m, f.ctx).scale(s)
    return out


@lru_cache(maxsize=None)
def _d_consistent_mono(mono, ctx):
    return d_inner(NcPoly.monomial(mono, 1, ctx))


def d(w, variant="consistent"):
    """Exterior derivative; higher degrees via d(dx_I f) = dx_I ^ df."""
    if variant == "consistent":
        mono_d = _d_consistent_mono
    elif variant == "paper":
        mono_d = _d_paper_mono
    else:
        raise ValueError(f"unknown calculus variant {variant!r}")
    w = as_form(w)
    if w.degree >= 3:
        return Form.zero(w.degree + 1, w.ctx)
    out = Form.zero(w.degree + 1, w.ctx)
    for I, f in w.comps.items():
        df = {}
        for m, s in f.terms.items():
            for K, h in mono_d(m, w.ctx).comps.items():
                _acc(df, K, h.scale(s))
        out = out + _basis_wedge(I, Form._raw(1, df, w.ctx))
    return out


def partials(f, variant="consistent"):
    """Right coefficients (d1 f, d2 f, d3 f) of df = dx_a d^a f."""
    if isinstance(f, Form):
        f = f.to_poly()
    df = d(f, variant)
    return tuple(df.coeff((a,)) for a in (1, 2, 3))


def invariant_form(f, variant="consistent"):
    """omega(f) = sum d(f_(1)) S(f_(2))."""
    if isinstance(f, Form):
        f = f.to_poly()
    out = Form.zero(1, f.ctx)
    for m, s in f.terms.items():
        for l, r, n in coproduct_terms(m):
            if not any(l):
                continue
            dl = d(NcPoly.monomial(l, 1, f.ctx), variant)
            out = out + dl.rmul(antipode(NcPoly.monomial(r, 1, f.ctx))).scale(s * n)
    return out
