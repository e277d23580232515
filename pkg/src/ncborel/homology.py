"""Graded blocks of the de Rham complex, exactness checks and primitives.

The grade of dx_I x1^a x2^b x3^c lam^m is |I| + a + b + c + m.  The
consistent d preserves it, so every block (k, n) is finite dimensional and
d acts on it by an integer matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .algebra import NcPoly
from .calculus import BASIS, Form, as_form, d
from .errors import NotClosedError, UnsupportedDegreeError
from .linalg import int_nullspace, int_rank, solve_rational
from .scalars import DEFAULT, GaussianRational, ScalarPoly

__all__ = [
    "GradedBasis",
    "GradedMatrix",
    "graded_basis",
    "d_matrix",
    "cohomology_dims",
    "CohomologyEntry",
    "find_primitive",
    "form_grade_parts",
]


def _weights(total, parts):
    """All tuples of ``parts`` non-negative ints summing to ``total``, lexicographic."""
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        for rest in _weights(total - first, parts - 1):
            out.append((first,) + rest)
    return out


@dataclass(frozen=True)
class GradedBasis:
    k: int
    n: int
    elements: tuple  # ((I, (a, b, c), m), ...)

    def index(self):
        return {e: i for i, e in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def element(self, i, ctx=DEFAULT):
        I, mono, m = self.elements[i]
        return Form.basis(I, NcPoly.monomial(mono, ScalarPoly.lam(m, ctx), ctx), ctx)


@lru_cache(maxsize=None)
def graded_basis(k, n):
    elems = []
    if n >= k:
        for I in BASIS[k]:
            for a, b, c, m in _weights(n - k, 4):
                elems.append((I, (a, b, c), m))
    return GradedBasis(k, n, tuple(sorted(elems)))


@dataclass(frozen=True)
class GradedMatrix:
    """Integer matrix of d: rows index ``target``, columns index ``source``."""

    source: GradedBasis
    target: GradedBasis
    entries: tuple

    @property
    def shape(self):
        return len(self.target), len(self.source)

    def rank(self):
        return int_rank(self.entries) if self.entries and self.source.elements else 0

    def apply(self, vec):
        return [sum(r * v for r, v in zip(row, vec)) for row in self.entries]


def _lam_coords(w, k, n, index, ctx_check=True):
    """Coordinates of a lam-only form in graded_basis(k, n); None if outside."""
    vec = [0] * len(index)
    for I, f in w.comps.items():
        for mono, s in f.terms.items():
            for e, c in s.terms.items():
                if any(e[1:]):
                    raise ValueError("coefficient depends on parameters other than lam")
                key = (I, mono, e[0])
                if key not in index:
                    raise ValueError(f"{key} is not in block ({k}, {n})")
                if not c.is_real:
                    raise ValueError("d has real structure constants")
                vec[index[key]] += c.re
    return vec


@lru_cache(maxsize=None)
def _d_basis_form(I, mono, variant):
    return d(Form.basis(I, NcPoly.monomial(mono)), variant)


@lru_cache(maxsize=None)
def d_matrix(k, n, variant="consistent"):
    """Matrix of d restricted to the grade-n block of k-forms."""
    if not 0 <= k <= 3:
        raise UnsupportedDegreeError(f"form degree {k} out of range")
    src = graded_basis(k, n)
    tgt = graded_basis(k + 1, n) if k < 3 else GradedBasis(4, n, ())
    index = tgt.index()
    cols = []
    for I, mono, m in src.elements:
        if k == 3:
            cols.append([])
            continue
        img = _d_basis_form(I, mono, variant)
        col = _lam_coords(img.map_coeffs(lambda f: f.map_coeffs(lambda c: c.lam_shift(m))), k + 1, n, index)
        cols.append(col)
    rows = tuple(tuple(int(cols[j][i]) if cols[j][i].denominator == 1 else cols[j][i] for j in range(len(cols))) for i in range(len(tgt)))
    return GradedMatrix(src, tgt, rows)


@dataclass(frozen=True)
class CohomologyEntry:
    """dim: new generators over C[lam] (dim H_n / lam H_(n-1)); raw: dim H_n."""

    k: int
    n: int
    dim: int
    raw: int
    kernel: int
    image: int


def _rank(k, n):
    if k < 0 or k > 2 or n < k:
        return 0
    return d_matrix(k, n).rank()


def _kernel_basis(k, n):
    if k == 3:
        B = graded_basis(3, n)
        return [[int(i == j) for i in range(len(B))] for j in range(len(B))]
    M = d_matrix(k, n)
    return int_nullspace([list(r) for r in M.entries], len(M.source))


def cohomology_dims(max_grade):
    """Cohomology of every block (k, n) with n <= max_grade."""
    table = {}
    for n in range(max_grade + 1):
        for k in range(4):
            size = len(graded_basis(k, n))
            if size == 0:
                table[(k, n)] = CohomologyEntry(k, n, 0, 0, 0, 0)
                continue
            ker = size - _rank(k, n)
            img = _rank(k - 1, n)
            raw = ker - img
            gens = raw
            if raw and n > 0:
                gens = _generators(k, n, ker)
            table[(k, n)] = CohomologyEntry(k, n, gens, raw, ker, img)
    return table


def _generators(k, n, ker_dim):
    """dim ker_n - rank(im d + lam * ker_(n-1)) inside block (k, n)."""
    B = graded_basis(k, n)
    index = B.index()
    vecs = []
    if k > 0:
        M = d_matrix(k - 1, n)
        for j in range(len(M.source)):
            vecs.append([M.entries[i][j] for i in range(len(M.target))])
    Bprev = graded_basis(k, n - 1)
    for v in _kernel_basis(k, n - 1):
        w = [0] * len(B)
        for i, c in enumerate(v):
            if c:
                I, mono, m = Bprev.elements[i]
                w[index[(I, mono, m + 1)]] = c
        vecs.append(w)
    if not vecs:
        return ker_dim
    return ker_dim - int_rank(vecs)


def form_grade_parts(w):
    """Split a form into {(grade, parameter exponents sans lam): GaussianRational coords}.

    Coordinates are keyed by graded-basis element (I, mono, m).
    """
    w = as_form(w)
    parts = {}
    for I, f in w.comps.items():
        for mono, s in f.terms.items():
            for e, c in s.terms.items():
                n = len(I) + sum(mono) + e[0]
                rest = (0,) + e[1:]
                parts.setdefault((n, rest), {})[(I, mono, e[0])] = c
    return parts


def find_primitive(w, grade_bound, variant="consistent"):
    """A form eta with d eta = w, solved block by block, or None.

    Raises NotClosedError (witness d w) if w is not closed.
    """
    w = as_form(w)
    if w.degree == 0:
        raise UnsupportedDegreeError("0-forms have no primitive")
    dw = d(w, variant)
    if dw:
        raise NotClosedError("form is not closed", witness=dw)
    k = w.degree
    ctx = w.ctx
    out = Form.zero(k - 1, ctx)
    for (n, rest), coords in sorted(form_grade_parts(w).items()):
        if n > grade_bound:
            return None
        M = d_matrix(k - 1, n, variant)
        index = M.target.index()
        sol = [GaussianRational(0)] * len(M.source)
        for part in ("re", "im"):
            b = [Fraction(0)] * len(index)
            for key, c in coords.items():
                b[index[key]] = getattr(c, part)
            if not any(b):
                continue
            x = solve_rational([list(r) for r in M.entries], b, len(M.source))
            if x is None:
                return None
            unit = GaussianRational(1) if part == "re" else GaussianRational(0, 1)
            sol = [s + unit * xi for s, xi in zip(sol, x)]
        for i, c in enumerate(sol):
            if c:
                I, mono, m = M.source.elements[i]
                e = (m,) + rest[1:]
                coeff = ScalarPoly.monomial(e, c, ctx)
                out = out + Form.basis(I, NcPoly.monomial(mono, coeff, ctx), ctx)
    return out
