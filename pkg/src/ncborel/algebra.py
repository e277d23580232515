"""The algebra R^3_lam: [x1, x2] = 2 lam x2, [x1, x3] = 2 lam x3, [x2, x3] = 0.

Elements are stored normal ordered as sums of x1^a x2^b x3^c with
ScalarPoly coefficients.  Moving x1 to the left of a block x2^b x3^c
uses the closed form

    x2^b x3^c x1^a = (x1 - 2 (b + c) lam)^a x2^b x3^c .
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .scalars import DEFAULT, GaussianRational, ScalarPoly

__all__ = [
    "NcPoly",
    "TensorSquare",
    "x",
    "normal_mul",
    "commutator",
    "coproduct",
    "coproduct_terms",
    "antipode",
    "grade",
    "is_central",
]

ONE_MONO = (0, 0, 0)
GEN_MONOS = {1: (1, 0, 0), 2: (0, 1, 0), 3: (0, 0, 1)}


@lru_cache(maxsize=None)
def mono_mul(m1, m2):
    """Normal-ordered product of two monomials as ((mono, int coeff, lam power), ...)."""
    a1, b1, c1 = m1
    a2, b2, c2 = m2
    s = b1 + c1
    if a2 == 0 or s == 0:
        return (((a1 + a2, b1 + b2, c1 + c2), 1, 0),)
    out = []
    shift = -2 * s
    for j in range(a2 + 1):
        out.append(((a1 + a2 - j, b1 + b2, c1 + c2), comb(a2, j) * shift ** j, j))
    return tuple(out)


def _acc(out, key, val):
    s = out.get(key)
    if s is None:
        out[key] = val
    else:
        s = s + val
        if s:
            out[key] = s
        else:
            del out[key]


class NcPoly:
    """Normal-ordered element of R^3_lam."""

    __slots__ = ("terms", "ctx")

    def __init__(self, terms=None, ctx=DEFAULT):
        self.ctx = ctx
        self.terms = {}
        if terms:
            for m, c in terms.items():
                if not isinstance(c, ScalarPoly):
                    c = ScalarPoly.const(c, ctx)
                if c:
                    self.terms[tuple(m)] = c

    @classmethod
    def _raw(cls, terms, ctx):
        p = cls.__new__(cls)
        p.terms = terms
        p.ctx = ctx
        return p

    @classmethod
    def const(cls, c, ctx=DEFAULT):
        if not isinstance(c, ScalarPoly):
            c = ScalarPoly.const(c, ctx)
        return cls._raw({ONE_MONO: c} if c else {}, c.ctx)

    @classmethod
    def zero(cls, ctx=DEFAULT):
        return cls._raw({}, ctx)

    @classmethod
    def one(cls, ctx=DEFAULT):
        return cls.const(1, ctx)

    @classmethod
    def monomial(cls, mono, coeff=1, ctx=DEFAULT):
        if not isinstance(coeff, ScalarPoly):
            coeff = ScalarPoly.const(coeff, ctx)
        return cls._raw({tuple(mono): coeff} if coeff else {}, coeff.ctx)

    @classmethod
    def gen(cls, a, ctx=DEFAULT):
        return cls.monomial(GEN_MONOS[a], 1, ctx)

    def _coerce(self, other):
        if isinstance(other, NcPoly):
            return other
        return NcPoly.const(other, self.ctx)

    def __add__(self, other):
        other = self._coerce(other)
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return NcPoly._raw(out, self.ctx if self.terms else other.ctx)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly._raw({m: -c for m, c in self.terms.items()}, self.ctx)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, s):
        """Multiply by a scalar (ScalarPoly, GaussianRational, int or Fraction)."""
        if isinstance(s, (int, Fraction, GaussianRational)) and not s:
            return NcPoly._raw({}, self.ctx)
        out = {}
        for m, c in self.terms.items():
            v = c * s
            if v:
                out[m] = v
        return NcPoly._raw(out, self.ctx)

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            return normal_mul(self, other)
        if isinstance(other, (int, Fraction, GaussianRational, ScalarPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, ScalarPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = NcPoly.one(self.ctx)
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussianRational, ScalarPoly)):
            return self == NcPoly.const(other, self.ctx)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_coeffs(self, fn):
        out = {}
        for m, c in self.terms.items():
            v = fn(c)
            if v:
                out[m] = v
        return NcPoly._raw(out, self.ctx)

    def substitute(self, bindings):
        return self.map_coeffs(lambda c: c.substitute(bindings))

    def lam_div(self, power=1):
        return self.map_coeffs(lambda c: c.lam_shift(-power))

    def degree(self):
        """Polynomial degree in the x's (ignores parameters); -1 for zero."""
        return max((sum(m) for m in self.terms), default=-1)

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), ScalarPoly.const(0, self.ctx))

    def counit(self):
        return self.coefficient(ONE_MONO)

    def __repr__(self):
        from .cli.formatting import poly_text

        return f"NcPoly({poly_text(self)})"


def x(a, ctx=DEFAULT):
    """Generator x_a, a in {1, 2, 3}."""
    return NcPoly.gen(a, ctx)


def normal_mul(f, g):
    """Normal-ordered product f*g."""
    out = {}
    ctx = f.ctx
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            c12 = c1 * c2
            for m, n, j in mono_mul(m1, m2):
                v = c12.lam_shift(j) * n if (j or n != 1) else c12
                _acc(out, m, v)
    return NcPoly._raw(out, ctx)


def commutator(f, g):
    return normal_mul(f, g) - normal_mul(g, f)


class TensorSquare:
    """Element of R^3_lam (x) R^3_lam with independently normal-ordered factors."""

    __slots__ = ("terms", "ctx")

    def __init__(self, terms=None, ctx=DEFAULT):
        self.ctx = ctx
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return TensorSquare(out, self.ctx)

    def __sub__(self, other):
        return self + TensorSquare({k: -c for k, c in other.terms.items()}, other.ctx)

    def __mul__(self, other):
        out = {}
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                c12 = c1 * c2
                for ml, nl, jl in mono_mul(l1, l2):
                    for mr, nr, jr in mono_mul(r1, r2):
                        _acc(out, (ml, mr), c12.lam_shift(jl + jr) * (nl * nr))
        return TensorSquare(out, self.ctx)

    def __eq__(self, other):
        return isinstance(other, TensorSquare) and self.terms == other.terms

    def __repr__(self):
        return f"TensorSquare({self.terms})"

    @classmethod
    def from_pair(cls, f, g):
        out = {}
        for m1, c1 in f.terms.items():
            for m2, c2 in g.terms.items():
                _acc(out, (m1, m2), c1 * c2)
        return cls(out, f.ctx)


@lru_cache(maxsize=None)
def coproduct_terms(mono):
    """Delta(x1^a x2^b x3^c) as ((left mono, right mono, int coeff), ...).

    x_a (x) 1 and 1 (x) x_a commute for equal a, so each generator power
    expands binomially and the factors come out already normal ordered.
    """
    a, b, c = mono
    out = []
    for i in range(a + 1):
        for j in range(b + 1):
            for k in range(c + 1):
                out.append(((i, j, k), (a - i, b - j, c - k), comb(a, i) * comb(b, j) * comb(c, k)))
    return tuple(out)


def coproduct(f):
    """Algebra-map extension of Delta(x_a) = x_a (x) 1 + 1 (x) x_a."""
    out = {}
    for m, c in f.terms.items():
        for l, r, n in coproduct_terms(m):
            _acc(out, (l, r), c * n)
    return TensorSquare(out, f.ctx)


def antipode(f):
    """Anti-homomorphic extension of S(x_a) = -x_a."""
    out = NcPoly.zero(f.ctx)
    for (a, b, c), coeff in f.terms.items():
        sign = -1 if (a + b + c) % 2 else 1
        rev = normal_mul(
            NcPoly.monomial((0, b, c), 1, f.ctx), NcPoly.monomial((a, 0, 0), 1, f.ctx)
        )
        out = out + rev.scale(coeff * sign)
    return out


def grade(f):
    """Split f into parts homogeneous in (x-degree + lam-power)."""
    out = {}
    for m, c in f.terms.items():
        d = sum(m)
        for e, v in c.terms.items():
            n = d + e[0]
            part = out.setdefault(n, {})
            part.setdefault(m, {})[e] = v
    return {
        n: NcPoly._raw({m: ScalarPoly._raw(t, f.ctx) for m, t in part.items()}, f.ctx)
        for n, part in sorted(out.items())
    }


def is_central(f):
    """(True, None) if f commutes with x1, x2, x3, else (False, (a, [f, x_a]))."""
    for a in (1, 2, 3):
        w = commutator(f, NcPoly.gen(a, f.ctx))
        if w:
            return False, (a, w)
    return True, None
