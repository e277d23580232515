from fractions import Fraction

import pytest
from hypothesis import given

from ncborel.errors import ContextError
from ncborel.scalars import DEFAULT, Context, GaussianRational, ScalarFraction, ScalarPoly, ring_ops, substitute

from strategies import gaussian, scalars


def test_gaussian_arithmetic():
    i = GaussianRational(0, 1)
    assert i * i == -1
    assert (GaussianRational(1, 1) / GaussianRational(1, -1)) == i
    assert GaussianRational(Fraction(1, 2)) + Fraction(1, 2) == 1
    assert GaussianRational(3, 4).conjugate() == GaussianRational(3, -4)
    assert GaussianRational(0, -1) == -i
    assert not GaussianRational(0) and GaussianRational(0, 1)


def test_gaussian_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GaussianRational(1) / GaussianRational(0)


@given(gaussian(), gaussian(), gaussian())
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a


@given(scalars(), scalars(), scalars())
def test_scalar_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0
    assert a + ScalarPoly.const(0) == a


@given(scalars(), scalars())
def test_exact_division_inverts_multiplication(a, b):
    if not b:
        return
    assert (a * b).exact_div(b) == a


def test_lam_helpers():
    p = ScalarPoly.lam(2) * 3 + ScalarPoly.var("k1")
    assert p.degree("lam") == 2
    assert p.lam_shift(1) == ScalarPoly.lam(3) * 3 + ScalarPoly.var("k1") * ScalarPoly.lam(1)
    assert substitute(p, {"lam": 0}) == ScalarPoly.var("k1")
    assert p.truncate_k(0) == ScalarPoly.lam(2) * 3


def test_ring_ops_dispatch():
    a, b = ScalarPoly.lam(1), ScalarPoly.var("k2")
    assert ring_ops(a, b, "add") == a + b
    assert ring_ops(a, b, "mul") == a * b
    assert ring_ops(a, b, "sub") == a - b
    assert ring_ops(a, b, "neg") == -a
    with pytest.raises(ValueError):
        ring_ops(a, b, "pow")


def test_context_mismatch_raises():
    other = Context.with_symbols("c")
    with pytest.raises(ContextError):
        ScalarPoly.lam(1) + ScalarPoly.lam(1, other)


def test_context_with_symbols_keeps_defaults_first():
    ctx = Context.with_symbols("zeta", "c")
    assert ctx.names[: len(DEFAULT.names)] == DEFAULT.names
    assert ctx.names[len(DEFAULT.names):] == ("c", "zeta")


def test_scalar_fraction_cancels_exact_quotients():
    lam = ScalarPoly.lam(1)
    f = ScalarFraction(lam * lam + lam, lam + 1)
    assert f.den == 1 and f.num == lam
    g = ScalarFraction(ScalarPoly.const(1), lam + 1)
    assert (g * (lam + 1)) == 1
    with pytest.raises(ZeroDivisionError):
        ScalarFraction(1, 0)


@given(scalars(max_terms=2, with_k=False), scalars(max_terms=2, with_k=False))
def test_scalar_fraction_field_ops(a, b):
    if not b:
        return
    q = ScalarFraction(a, b)
    assert q * b == a
    assert q + q == ScalarFraction(a * 2, b)
