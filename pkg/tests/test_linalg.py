from fractions import Fraction
from itertools import combinations

import hypothesis.strategies as st
from hypothesis import given

from ncborel.linalg import det, int_nullspace, int_rank, nullspace, rank, rref_den, solve_rational
from ncborel.scalars import GaussianRational, ScalarPoly

int_matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def _mat_vec(m, v):
    return [sum((a * b for a, b in zip(row, v)), 0 * v[0]) for row in m]


def _minor_rank(m):
    """Largest k with a nonzero k x k minor, by brute force."""
    rows, cols = len(m), len(m[0])
    for k in range(min(rows, cols), 0, -1):
        for R in combinations(range(rows), k):
            for C in combinations(range(cols), k):
                if det([[m[i][j] for j in C] for i in R]):
                    return k
    return 0


@given(int_matrices)
def test_int_nullspace_annihilated(m):
    ns = int_nullspace(m, len(m[0]))
    for v in ns:
        assert all(x == 0 for x in _mat_vec(m, v))
    assert len(ns) + int_rank(m) == len(m[0])


@given(int_matrices)
def test_rank_matches_minor_rank(m):
    assert int_rank(m) == _minor_rank(m) == rank(m)


@given(int_matrices)
def test_rref_pivots_equal_denominator(m):
    rows, den, piv = rref_den([list(r) for r in m], lambda a, b: a // b, 1)
    for r, c in enumerate(piv):
        assert rows[r][c] == den


@given(int_matrices, st.data())
def test_solve_rational_consistent_system(m, data):
    x0 = data.draw(st.lists(st.integers(-2, 2), min_size=len(m[0]), max_size=len(m[0])))
    b = _mat_vec(m, x0)
    x = solve_rational(m, b, len(m[0]))
    assert x is not None
    assert _mat_vec(m, x) == [Fraction(v) for v in b]


def test_solve_rational_inconsistent():
    assert solve_rational([[1, 1], [2, 2]], [1, 3], 2) is None


def test_det_bareiss_known_values():
    assert det([[2, 0], [0, 3]]) == 6
    assert det([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3
    i = GaussianRational(0, 1)
    assert det([[i, 1], [1, i]]) == -2


def test_poly_nullspace_over_fraction_field():
    lam = ScalarPoly.lam(1)
    one = ScalarPoly.const(1)
    m = [[lam, one], [lam * lam, lam]]
    ns = nullspace(m)
    assert len(ns) == 1
    v = ns[0]
    for row in m:
        assert sum((a * b for a, b in zip(row, v)), ScalarPoly.const(0)) == 0


def test_gaussian_nullspace():
    i = GaussianRational(0, 1)
    m = [[GaussianRational(1), i], [i, GaussianRational(-1)]]
    ns = nullspace(m)
    assert len(ns) == 1
    for row in m:
        assert sum((ScalarPoly.const(a) * b for a, b in zip(row, ns[0])), ScalarPoly.const(0)) == 0
