"""Schroedinger action of the quantum double on R^3_lam.

J_a acts by lam^-1 [x_a, -], the coordinate functions t^i_j of the dual
group by the coregular action.  The dual Hopf algebra itself is never
built; t^i_j only enter through their pairing with R^3_lam.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import NcPoly, commutator, coproduct_terms
from .scalars import GaussianRational, ScalarPoly

__all__ = [
    "GENERATORS",
    "TIndex",
    "pairing_J_t",
    "pairing_t_poly",
    "adjoint_action",
    "coregular_action",
    "cross_relation_check",
    "CrossVerdict",
]

_I = GaussianRational(0, 1)
_Z = GaussianRational(0)
_O = GaussianRational(1)

GENERATORS = {
    1: ((_O, _Z), (_Z, -_O)),
    2: ((_Z, _O), (_Z, _Z)),
    3: ((_Z, _I), (_Z, _Z)),
}


@dataclass(frozen=True)
class TIndex:
    i: int
    j: int

    def __post_init__(self):
        if self.i not in (1, 2) or self.j not in (1, 2):
            raise ValueError(f"t index ({self.i}, {self.j}) out of range")


def _matmul(A, B):
    return tuple(
        tuple(sum((A[r][k] * B[k][c] for k in range(2)), _Z) for c in range(2)) for r in range(2)
    )


_ID = ((_O, _Z), (_Z, _O))


@lru_cache(maxsize=None)
def _word_matrix(mono):
    a, b, c = mono
    M = _ID
    for gen, p in ((1, a), (2, b), (3, c)):
        for _ in range(p):
            M = _matmul(M, GENERATORS[gen])
    return M


def pairing_J_t(a, idx):
    """<J_a, t^i_j> = (J_a)^i_j."""
    return GENERATORS[a][idx.i - 1][idx.j - 1]


def pairing_t_poly(idx, f):
    """<t^i_j, x1^a x2^b x3^c> = lam^(a+b+c) (J1^a J2^b J3^c)^i_j, extended linearly."""
    out = ScalarPoly.const(0, f.ctx)
    for m, s in f.terms.items():
        v = _word_matrix(m)[idx.i - 1][idx.j - 1]
        if v:
            out = out + s.lam_shift(sum(m)) * v
    return out


def adjoint_action(a, f):
    """J_a |> f = lam^-1 [x_a, f]."""
    return commutator(NcPoly.gen(a, f.ctx), f).lam_div(1)


def coregular_action(idx, f):
    """t^i_j |> f = sum <t^i_j, f_(1)> f_(2)."""
    result = NcPoly.zero(f.ctx)
    for m, s in f.terms.items():
        for l, r, n in coproduct_terms(m):
            v = _word_matrix(l)[idx.i - 1][idx.j - 1]
            if v:
                result = result + NcPoly.monomial(r, s.lam_shift(sum(l)) * (v * n), f.ctx)
    return result


@dataclass
class CrossVerdict:
    passed: bool
    counterexample: object = None  # (f, lhs, rhs)


def cross_relation_check(a, idx, test_set):
    """Check [J_a, t^i_j] = t^i_k (J_a)^k_j - (J_a)^i_k t^k_j as operators.

    The left side is J_a |> (t |> f) - t |> (J_a |> f).
    """
    J = GENERATORS[a]
    i, j = idx.i, idx.j
    for f in test_set:
        lhs = adjoint_action(a, coregular_action(idx, f)) - coregular_action(idx, adjoint_action(a, f))
        rhs = NcPoly.zero(f.ctx)
        for k in (1, 2):
            c1 = J[k - 1][j - 1]
            if c1:
                rhs = rhs + coregular_action(TIndex(i, k), f).scale(c1)
            c2 = J[i - 1][k - 1]
            if c2:
                rhs = rhs - coregular_action(TIndex(k, j), f).scale(c2)
        if lhs != rhs:
            return CrossVerdict(False, (f, lhs, rhs))
    return CrossVerdict(True)
