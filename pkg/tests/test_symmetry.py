from itertools import product

import hypothesis.strategies as st
import pytest
from hypothesis import given

from ncborel.algebra import NcPoly
from ncborel.scalars import GaussianRational, ScalarPoly
from ncborel.symmetry import (
    GENERATORS,
    TIndex,
    adjoint_action,
    coregular_action,
    cross_relation_check,
    pairing_J_t,
    pairing_t_poly,
)

from strategies import X, all_monomials, lam, mono, ncpolys

T_INDICES = [TIndex(i, j) for i, j in product((1, 2), repeat=2)]
t_indices = st.sampled_from(T_INDICES)


def test_tindex_validation():
    with pytest.raises(ValueError):
        TIndex(3, 1)


def test_generator_matrices_satisfy_borel_relations():
    def mm(A, B):
        return tuple(tuple(sum((A[r][k] * B[k][c] for k in range(2)), GaussianRational(0)) for c in range(2)) for r in range(2))

    def br(A, B):
        P, Q = mm(A, B), mm(B, A)
        return tuple(tuple(P[r][c] - Q[r][c] for c in range(2)) for r in range(2))

    def sc(s, A):
        return tuple(tuple(s * v for v in row) for row in A)

    J1, J2, J3 = GENERATORS[1], GENERATORS[2], GENERATORS[3]
    assert br(J1, J2) == sc(2, J2)
    assert br(J1, J3) == sc(2, J3)
    assert br(J2, J3) == sc(0, J2)


def test_adjoint_action_on_generators():
    assert adjoint_action(1, X(2)) == X(2).scale(2)
    assert adjoint_action(2, X(1)) == X(2).scale(-2)
    assert not adjoint_action(1, X(1))
    assert not adjoint_action(2, X(3))


def test_pairing_on_generators():
    for a in (1, 2, 3):
        for idx in T_INDICES:
            assert pairing_t_poly(idx, X(a)) == lam() * pairing_J_t(a, idx)
    for idx in T_INDICES:
        assert pairing_t_poly(idx, NcPoly.one()) == (1 if idx.i == idx.j else 0)


@given(ncpolys(max_deg=3), ncpolys(max_deg=3), t_indices)
def test_pairing_multiplicative(f, g, idx):
    lhs = pairing_t_poly(idx, f * g)
    rhs = ScalarPoly.const(0)
    for k in (1, 2):
        rhs = rhs + pairing_t_poly(TIndex(idx.i, k), f) * pairing_t_poly(TIndex(k, idx.j), g)
    assert lhs == rhs


@given(ncpolys(max_deg=3), ncpolys(max_deg=3), st.sampled_from((1, 2, 3)))
def test_adjoint_action_is_derivation(f, g, a):
    assert adjoint_action(a, f * g) == adjoint_action(a, f) * g + f * adjoint_action(a, g)


@given(ncpolys(max_deg=3), ncpolys(max_deg=3), t_indices)
def test_coregular_action_covariance(f, g, idx):
    rhs = NcPoly.zero()
    for k in (1, 2):
        rhs = rhs + coregular_action(TIndex(idx.i, k), f) * coregular_action(TIndex(k, idx.j), g)
    assert coregular_action(idx, f * g) == rhs


def test_coregular_action_on_unit():
    for idx in T_INDICES:
        assert coregular_action(idx, NcPoly.one()) == (NcPoly.one() if idx.i == idx.j else NcPoly.zero())


@pytest.mark.parametrize("a,idx", [(a, idx) for a in (1, 2, 3) for idx in T_INDICES])
def test_cross_relations(a, idx):
    tests = [mono(*m) for m in all_monomials(3)]
    verdict = cross_relation_check(a, idx, tests)
    assert verdict.passed, verdict.counterexample


@given(ncpolys(max_deg=3), st.sampled_from((1, 2, 3)))
def test_adjoint_action_preserves_degree(f, a):
    g = adjoint_action(a, f)
    assert g.degree() <= max(f.degree(), 0)
