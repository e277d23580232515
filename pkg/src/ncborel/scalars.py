"""Exact coefficient arithmetic.

Coefficients live in polynomial rings over the Gaussian rationals, in a
fixed tuple of formal parameters (``lam`` first, then ``k1, k2, k3``, then
any user symbols in lexicographic order).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import ContextError

__all__ = [
    "Context",
    "DEFAULT",
    "GaussianRational",
    "ScalarPoly",
    "ScalarFraction",
    "ring_ops",
    "substitute",
]

_BASE_PARAMS = ("lam", "k1", "k2", "k3")


@dataclass(frozen=True)
class Context:
    """Ordered tuple of formal parameter names shared by a computation."""

    names: tuple = _BASE_PARAMS

    @classmethod
    def with_symbols(cls, *symbols):
        extra = sorted(set(symbols) - set(_BASE_PARAMS))
        return cls(_BASE_PARAMS + tuple(extra))

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise ContextError(f"parameter {name!r} not in context {self.names}") from None

    @property
    def nvars(self):
        return len(self.names)


DEFAULT = Context()


class GaussianRational:
    """re + i*im with both parts exact rationals."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating point complex values are not exact")
        if isinstance(x, float):
            raise TypeError("floating point values are not exact")
        return cls(x, 0)

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re * other, self.im * other)
            other = GaussianRational.coerce(other)
        if not self.im and not other.im:
            return GaussianRational(self.re * other.re, 0)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero Gaussian rational")
        if not other.im:
            return GaussianRational(self.re / other.re, self.im / other.re)
        n = other.re * other.re + other.im * other.im
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return GaussianRational(1) / self ** (-n)
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    @property
    def is_real(self):
        return not self.im

    def __repr__(self):
        if not self.im:
            return f"GaussianRational({self.re})"
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        return f"({self.re} + {self.im}*i)"


_ONE = GaussianRational(1)


class ScalarPoly:
    """Sparse polynomial in the parameters of ``ctx``.

    ``terms`` maps exponent tuples (one entry per context parameter) to
    nonzero Gaussian rationals.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, terms=None, ctx=DEFAULT):
        self.ctx = ctx
        self.terms = {}
        if terms:
            for e, c in terms.items():
                c = GaussianRational.coerce(c)
                if c:
                    self.terms[tuple(e)] = c

    @classmethod
    def _raw(cls, terms, ctx):
        p = cls.__new__(cls)
        p.ctx = ctx
        p.terms = terms
        return p

    @classmethod
    def const(cls, c, ctx=DEFAULT):
        c = GaussianRational.coerce(c)
        if not c:
            return cls._raw({}, ctx)
        return cls._raw({(0,) * ctx.nvars: c}, ctx)

    @classmethod
    def var(cls, name, ctx=DEFAULT, power=1):
        e = [0] * ctx.nvars
        e[ctx.index(name)] = power
        return cls._raw({tuple(e): _ONE}, ctx)

    @classmethod
    def lam(cls, power=1, ctx=DEFAULT):
        return cls.var("lam", ctx, power)

    @classmethod
    def monomial(cls, exps, coeff=1, ctx=DEFAULT):
        return cls({tuple(exps): coeff}, ctx)

    def _coerce(self, other):
        if isinstance(other, ScalarPoly):
            if other.ctx != self.ctx:
                raise ContextError(
                    f"mismatched parameter contexts {self.ctx.names} and {other.ctx.names}"
                )
            return other
        return ScalarPoly.const(other, self.ctx)

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return ScalarPoly._raw(out, self.ctx)

    __radd__ = __add__

    def __neg__(self):
        return ScalarPoly._raw({e: -c for e, c in self.terms.items()}, self.ctx)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            if not other:
                return ScalarPoly._raw({}, self.ctx)
            return ScalarPoly._raw({e: c * other for e, c in self.terms.items()}, self.ctx)
        other = self._coerce(other)
        if len(other.terms) == 1 and len(self.terms) > 1:
            return other * self
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                if s is None:
                    out[e] = c
                else:
                    s = s + c
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return ScalarPoly._raw(out, self.ctx)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not polynomial")
        out = ScalarPoly.const(1, self.ctx)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        """Division by a nonzero constant, or exact division by a polynomial."""
        if isinstance(other, ScalarPoly):
            return self.exact_div(other)
        c = GaussianRational.coerce(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        inv = GaussianRational(1) / c
        return self * inv

    def shift(self, name, power=1):
        """Multiply by ``name**power`` (power may be negative if divisible)."""
        i = self.ctx.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] + power < 0:
                raise ArithmeticError(f"{self} is not divisible by {name}^{-power}")
            e = list(e)
            e[i] += power
            out[tuple(e)] = c
        return ScalarPoly._raw(out, self.ctx)

    def lam_shift(self, power):
        if power == 0:
            return self
        out = {}
        for e, c in self.terms.items():
            if e[0] + power < 0:
                raise ArithmeticError(f"{self} is not divisible by lam^{-power}")
            out[(e[0] + power,) + e[1:]] = c
        return ScalarPoly._raw(out, self.ctx)

    def _leading(self):
        e = max(self.terms)
        return e, self.terms[e]

    def exact_div(self, other):
        """Quotient of an exact division; raises ArithmeticError otherwise."""
        other = self._coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if len(other.terms) == 1:
            (eo, co), = other.terms.items()
            inv = GaussianRational(1) / co
            out = {}
            for e, c in self.terms.items():
                q = tuple(a - b for a, b in zip(e, eo))
                if min(q) < 0:
                    raise ArithmeticError(f"{other} does not divide {self}")
                out[q] = c * inv
            return ScalarPoly._raw(out, self.ctx)
        eo, co = other._leading()
        inv = GaussianRational(1) / co
        rem = self
        quot = ScalarPoly._raw({}, self.ctx)
        while rem.terms:
            e, c = rem._leading()
            q = tuple(a - b for a, b in zip(e, eo))
            if min(q) < 0:
                raise ArithmeticError(f"{other} does not divide {self}")
            t = ScalarPoly._raw({q: c * inv}, self.ctx)
            quot = quot + t
            rem = rem - t * other
        return quot

    # inspection

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_term(self):
        return self.terms.get((0,) * self.ctx.nvars, GaussianRational(0))

    def __eq__(self, other):
        if isinstance(other, ScalarPoly):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.terms == ScalarPoly.const(other, self.ctx).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def degree(self, name=None):
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        i = self.ctx.index(name)
        return max(e[i] for e in self.terms)

    def split_lam(self):
        """Map lam-power -> polynomial in the remaining parameters (lam^0)."""
        out = {}
        for e, c in self.terms.items():
            out.setdefault(e[0], {})[(0,) + e[1:]] = c
        return {m: ScalarPoly._raw(t, self.ctx) for m, t in out.items()}

    def k_degree_parts(self):
        """Split by total degree in k1, k2, k3."""
        out = {}
        for e, c in self.terms.items():
            out.setdefault(e[1] + e[2] + e[3], {})[e] = c
        return {n: ScalarPoly._raw(t, self.ctx) for n, t in out.items()}

    def truncate_k(self, order):
        return ScalarPoly._raw(
            {e: c for e, c in self.terms.items() if e[1] + e[2] + e[3] <= order}, self.ctx
        )

    def substitute(self, bindings):
        return substitute(self, bindings)

    def conjugate_coeffs(self):
        return ScalarPoly._raw({e: c.conjugate() for e, c in self.terms.items()}, self.ctx)

    def __repr__(self):
        return f"ScalarPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            c = self.terms[e]
            mono = "*".join(
                n if p == 1 else f"{n}^{p}" for n, p in zip(self.ctx.names, e) if p
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def ring_ops(a, b, op):
    """Apply ``op`` in {"add", "sub", "mul", "neg"} to ScalarPolys."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown ring operation {op!r}")


def substitute(p, bindings):
    """Evaluate the parameters named in ``bindings``; others stay formal."""
    idx = {p.ctx.index(name): GaussianRational.coerce(v) for name, v in bindings.items()}
    out = ScalarPoly._raw({}, p.ctx)
    acc = {}
    for e, c in p.terms.items():
        e = list(e)
        for i, v in idx.items():
            if e[i]:
                c = c * v ** e[i]
                e[i] = 0
                if not c:
                    break
        if not c:
            continue
        e = tuple(e)
        s = acc.get(e)
        acc[e] = c if s is None else s + c
    out.terms = {e: c for e, c in acc.items() if c}
    return out


class ScalarFraction:
    """num/den over ScalarPoly, den normalised to a monic leading term.

    Only exact cancellations (den divides num) are simplified.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, ScalarPoly):
            num = ScalarPoly.const(num, den.ctx if isinstance(den, ScalarPoly) else DEFAULT)
        if den is None:
            den = ScalarPoly.const(1, num.ctx)
        elif not isinstance(den, ScalarPoly):
            den = ScalarPoly.const(den, num.ctx)
        if not den.terms:
            raise ZeroDivisionError("zero denominator")
        if num.ctx != den.ctx:
            raise ContextError("mismatched parameter contexts in fraction")
        _, lc = den._leading()
        if lc != 1:
            inv = GaussianRational(1) / lc
            num, den = num * inv, den * inv
        if not den.is_constant():
            try:
                num, den = num.exact_div(den), ScalarPoly.const(1, num.ctx)
            except ArithmeticError:
                pass
        self.num = num
        self.den = den

    @property
    def ctx(self):
        return self.num.ctx

    def _coerce(self, other):
        if isinstance(other, ScalarFraction):
            return other
        if isinstance(other, ScalarPoly):
            return ScalarFraction(other)
        return ScalarFraction(ScalarPoly.const(other, self.ctx))

    def __add__(self, other):
        other = self._coerce(other)
        if self.den == other.den:
            return ScalarFraction(self.num + other.num, self.den)
        return ScalarFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return ScalarFraction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        return ScalarFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if not other.num:
            raise ZeroDivisionError("division by zero fraction")
        return ScalarFraction(self.num * other.den, self.den * other.num)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = self._coerce(other)
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash(self.num) if self.den.is_constant() else hash((self.num, self.den))

    def __repr__(self):
        if self.den == 1:
            return f"ScalarFraction({self.num})"
        return f"ScalarFraction(({self.num})/({self.den}))"
