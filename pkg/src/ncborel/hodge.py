"""Euclidean metric, Hodge star, codifferential and the wave operator."""

from __future__ import annotations

from itertools import permutations
from math import factorial

from .algebra import NcPoly
from .calculus import BASIS, Form, as_form, canon, d, partials
from .errors import UnsupportedDegreeError

__all__ = ["METRIC", "HODGE_TABLE", "hodge_table_from_metric", "star", "codifferential", "box", "field_strength", "levi_civita"]

N = 3
# inverse metric eta^{ab}: the identity
METRIC = {(a, b): int(a == b) for a in (1, 2, 3) for b in (1, 2, 3)}


def levi_civita(*idx):
    s, _ = canon(idx)
    return s if len(idx) == N else 0


def hodge_table_from_metric(metric=METRIC):
    """*(dx_I) = 1/(n-k)! eps_{I j...} eta^{j l}... dx_l..., summed over orderings."""
    table = {}
    for k in range(N + 1):
        for I in BASIS[k]:
            acc = {}
            for J in permutations((1, 2, 3), N - k):
                eps = levi_civita(*(I + J))
                if not eps:
                    continue
                for L in permutations((1, 2, 3), N - k):
                    g = 1
                    for j, l in zip(J, L):
                        g *= metric[(j, l)]
                    if not g:
                        continue
                    s, K = canon(L)
                    if s:
                        acc[K] = acc.get(K, 0) + eps * g * s
            entry = {K: v for K, v in acc.items() if v}
            (K, v), = entry.items()
            assert v % factorial(N - k) == 0
            table[I] = (v // factorial(N - k), K)
    return table


HODGE_TABLE = hodge_table_from_metric()


def star(w):
    """Basis-wise star with inert right coefficients: *(dx_I f) = (*dx_I) f."""
    w = as_form(w)
    out = {}
    for I, f in w.comps.items():
        s, K = HODGE_TABLE[I]
        out[K] = f if s > 0 else -f
    return Form._raw(N - w.degree, out, w.ctx)


def codifferential(w, variant="consistent"):
    return star(d(star(w), variant))


def box(w, variant="consistent"):
    """Wave operator *d*d on 0- and 1-forms."""
    was_poly = isinstance(w, NcPoly)
    w = as_form(w)
    if w.degree > 1:
        raise UnsupportedDegreeError(f"box is defined on 0- and 1-forms, got degree {w.degree}")
    out = star(d(star(d(w, variant)), variant))
    return out.to_poly() if was_poly else out


def field_strength(A, variant="consistent"):
    """F = dA and the magnetic components B_a = eps_abc d^b A^c."""
    A = as_form(A)
    if A.degree != 1:
        raise UnsupportedDegreeError(f"a gauge potential is a 1-form, got degree {A.degree}")
    F = d(A, variant)
    P = {c: partials(A.coeff((c,)), variant) for c in (1, 2, 3)}
    B = []
    for a in (1, 2, 3):
        acc = NcPoly.zero(A.ctx)
        for b in (1, 2, 3):
            for c in (1, 2, 3):
                e = levi_civita(a, b, c)
                if e:
                    acc = acc + P[c][b - 1].scale(e)
        B.append(acc)
    return F, tuple(B)
