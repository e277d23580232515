import pytest
from hypothesis import given

from ncborel.algebra import NcPoly
from ncborel.calculus import BASIS, Form, d, dx, partials, wedge
from ncborel.errors import UnsupportedDegreeError
from ncborel.hodge import HODGE_TABLE, box, codifferential, field_strength, hodge_table_from_metric, levi_civita, star

from strategies import X, all_monomials, forms, mono, ncpolys

EXPECTED_TABLE = {
    (): (1, (1, 2, 3)),
    (1,): (1, (2, 3)),
    (2,): (-1, (1, 3)),
    (3,): (1, (1, 2)),
    (1, 2): (1, (3,)),
    (1, 3): (-1, (2,)),
    (2, 3): (1, (1,)),
    (1, 2, 3): (1, ()),
}


def test_table_matches_metric_formula():
    assert HODGE_TABLE == EXPECTED_TABLE
    assert hodge_table_from_metric() == EXPECTED_TABLE


@pytest.mark.parametrize("I", sorted(EXPECTED_TABLE))
def test_star_on_basis(I):
    s, K = EXPECTED_TABLE[I]
    assert star(Form.basis(I)) == Form.basis(K).scale(s)
    assert star(star(Form.basis(I))) == Form.basis(I)


@given(forms())
def test_star_involution(w):
    assert star(star(w)) == w


@given(forms(), ncpolys(max_deg=2))
def test_star_keeps_right_coefficients(w, g):
    assert star(w * g) == star(w) * g


def test_levi_civita():
    assert levi_civita(1, 2, 3) == 1
    assert levi_civita(2, 1, 3) == -1
    assert levi_civita(1, 1, 3) == 0


def test_box_examples():
    assert box(X(2) ** 2) == NcPoly.const(2)
    assert not box(X(1) * X(2))
    for a, b in ((1, 2), (1, 3), (2, 3)):
        assert not box(X(a) ** 2 - X(b) ** 2)


def test_box_on_two_forms_rejected():
    with pytest.raises(UnsupportedDegreeError):
        box(wedge(dx(1), dx(2)))


def test_box_equals_sum_of_second_partials():
    for v in ("consistent", "paper"):
        for m in all_monomials(4):
            f = mono(*m)
            lap = NcPoly.zero()
            for a in range(3):
                lap = lap + partials(partials(f, v)[a], v)[a]
            assert box(f, v) == lap, (v, m)


def test_box_classical_limit_is_laplacian():
    for m in all_monomials(5):
        f = mono(*m)
        lap = NcPoly.zero()
        for a in range(3):
            k = m[a]
            if k >= 2:
                mm = list(m)
                mm[a] -= 2
                lap = lap + mono(*mm, k * (k - 1))
        assert box(f).substitute({"lam": 0}) == lap, m


def test_codifferential_is_star_d_star():
    w = dx(1) * X(2) * X(3)
    assert codifferential(w) == star(d(star(w)))


def test_field_strength_of_zero_mode():
    F, B = field_strength(dx(1) * X(2))
    assert F == wedge(dx(1), dx(2))
    assert B == (NcPoly.zero(), NcPoly.zero(), -NcPoly.one())


@given(ncpolys(max_deg=2))
def test_field_strength_of_gradient_vanishes(f):
    F, B = field_strength(d(f))
    assert not F
