"""Hypothesis strategies and small constructors shared by the tests."""

from fractions import Fraction

import hypothesis.strategies as st

from ncborel.algebra import NcPoly
from ncborel.calculus import BASIS, Form
from ncborel.scalars import DEFAULT, GaussianRational, ScalarPoly

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def gaussian(draw, real_only=False):
    re = draw(small_fractions)
    im = Fraction(0) if real_only else draw(st.sampled_from([Fraction(0), Fraction(0), Fraction(1), Fraction(-1, 2)]))
    return GaussianRational(re, im)


@st.composite
def scalars(draw, max_terms=3, max_lam=2, with_k=True):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        e = [draw(st.integers(0, max_lam))]
        for _ in range(3):
            e.append(draw(st.integers(0, 1)) if with_k else 0)
        terms[tuple(e)] = draw(gaussian())
    return ScalarPoly(terms, DEFAULT)


monos = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))


@st.composite
def ncpolys(draw, max_terms=3, max_deg=3, with_k=False, max_lam=1):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        m = draw(st.tuples(*[st.integers(0, max_deg)] * 3).filter(lambda t: sum(t) <= max_deg))
        terms[m] = draw(scalars(max_terms=2, max_lam=max_lam, with_k=with_k))
    return NcPoly(terms, DEFAULT)


@st.composite
def forms(draw, degree=None, max_deg=2):
    k = draw(st.integers(0, 3)) if degree is None else degree
    comps = {}
    for I in BASIS[k]:
        if draw(st.booleans()):
            comps[I] = draw(ncpolys(max_terms=2, max_deg=max_deg))
    return Form(k, comps, DEFAULT)


def X(a):
    return NcPoly.gen(a)


def lam(p=1):
    return ScalarPoly.lam(p)


def mono(a, b, c, coeff=1):
    return NcPoly.monomial((a, b, c), coeff)


def all_monomials(max_deg):
    return [(a, b, n - a - b) for n in range(max_deg + 1) for a in range(n + 1) for b in range(n + 1 - a)]
