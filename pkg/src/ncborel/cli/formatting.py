"""Canonical text, LaTeX and JSON renderings.

Text output is valid parser input: ``parse(poly_text(f))`` elaborates
back to ``f``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from ..algebra import NcPoly
from ..calculus import BASIS, Form
from ..scalars import DEFAULT, Context, GaussianRational, ScalarPoly

SCHEMA = "ncborel/1"

_LATEX_PARAM = {"lam": r"\lambda", "k1": "k_{1}", "k2": "k_{2}", "k3": "k_{3}"}


def _atoms(f):
    """(mono, param exps, coefficient) triples in canonical order."""
    out = []
    for m, s in f.terms.items():
        for e, c in s.terms.items():
            out.append((m, e, c))
    out.sort(key=lambda t: ((-sum(t[0]), -t[0][0], -t[0][1], -t[0][2]), (-sum(t[1]), tuple(-v for v in t[1]))))
    return out


def _mono_factors(m):
    return [f"x{i}" if p == 1 else f"x{i}^{p}" for i, p in zip((1, 2, 3), m) if p]


def _param_factors(e, ctx):
    return [n if p == 1 else f"{n}^{p}" for n, p in zip(ctx.names, e) if p]


def _coef_text(c, has_factors):
    """(negative?, magnitude string or '') for a Gaussian rational coefficient."""
    if c.is_real:
        neg = c.re < 0
        mag = abs(c.re)
        if mag == 1 and has_factors:
            return neg, ""
        return neg, str(mag)
    if not c.re:
        neg = c.im < 0
        mag = abs(c.im)
        return neg, "i" if mag == 1 else f"{mag}*i"
    im = c.im
    inner = f"{c.re} - {abs(im)}*i" if im < 0 else f"{c.re} + {im}*i"
    if abs(im) == 1:
        inner = inner.replace("1*i", "i") if abs(im) == 1 else inner
    return False, f"({inner})"


def _join(terms):
    """terms: list of (negative, body)."""
    if not terms:
        return "0"
    out = []
    for k, (neg, body) in enumerate(terms):
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def _atom_terms(f, ctx):
    terms = []
    for m, e, c in _atoms(f):
        factors = _param_factors(e, ctx) + _mono_factors(m)
        neg, mag = _coef_text(c, bool(factors))
        body = "*".join(([mag] if mag else []) + factors)
        terms.append((neg, body))
    return terms


def scalar_text(s):
    return poly_text(NcPoly.const(s, s.ctx))


def poly_text(f):
    return _join(_atom_terms(f, f.ctx))


def _basis_text(I):
    return "/\\".join(f"dx{i}" for i in I)


def form_text(w):
    if isinstance(w, NcPoly):
        return poly_text(w)
    if w.degree == 0:
        return poly_text(w.to_poly())
    terms = []
    for I in BASIS.get(w.degree, []):
        f = w.comps.get(I)
        if not f:
            continue
        atoms = _atoms(f)
        bt = _basis_text(I)
        if len(atoms) == 1:
            m, e, c = atoms[0]
            pre = _param_factors(e, w.ctx)
            neg, mag = _coef_text(c, True)
            body = "*".join(([mag] if mag else []) + pre + [bt] + _mono_factors(m))
            terms.append((neg, body))
        else:
            terms.append((False, f"{bt}*({poly_text(f)})"))
    return _join(terms)


def text(value):
    if isinstance(value, NcPoly):
        return poly_text(value)
    if isinstance(value, Form):
        return form_text(value)
    if isinstance(value, ScalarPoly):
        return scalar_text(value)
    if isinstance(value, GaussianRational):
        return scalar_text(ScalarPoly.const(value))
    return str(value)


# -- LaTeX -------------------------------------------------------------------

def _latex_num(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return rf"\frac{{{q.numerator}}}{{{q.denominator}}}"


def _latex_atom_terms(f, ctx):
    terms = []
    for m, e, c in _atoms(f):
        factors = []
        for n, p in zip(ctx.names, e):
            if p:
                sym = _LATEX_PARAM.get(n, n)
                factors.append(sym if p == 1 else f"{sym}^{{{p}}}")
        for i, p in zip((1, 2, 3), m):
            if p:
                factors.append(f"x_{{{i}}}" if p == 1 else f"x_{{{i}}}^{{{p}}}")
        if c.is_real:
            neg, mag = c.re < 0, abs(c.re)
            magt = "" if (mag == 1 and factors) else _latex_num(mag)
        elif not c.re:
            neg, mag = c.im < 0, abs(c.im)
            magt = "i" if mag == 1 else _latex_num(mag) + " i"
        else:
            neg = False
            sign = "-" if c.im < 0 else "+"
            magt = rf"\left({_latex_num(c.re)} {sign} {_latex_num(abs(c.im))} i\right)"
        terms.append((neg, " ".join(([magt] if magt else []) + factors)))
    return terms


def latex(value):
    if isinstance(value, ScalarPoly):
        value = NcPoly.const(value, value.ctx)
    if isinstance(value, Form) and value.degree == 0:
        value = value.to_poly()
    if isinstance(value, NcPoly):
        return _join(_latex_atom_terms(value, value.ctx))
    if isinstance(value, Form):
        terms = []
        for I in BASIS.get(value.degree, []):
            f = value.comps.get(I)
            if not f:
                continue
            bt = r" \wedge ".join(rf"\mathrm{{d}}x_{{{i}}}" for i in I)
            terms.append((False, rf"{bt} \left({_join(_latex_atom_terms(f, value.ctx))}\right)"))
        return _join(terms)
    return str(value)


# -- JSON ----------------------------------------------------------------------

def _poly_json(f):
    return [
        {"x": list(m), "params": {n: p for n, p in zip(f.ctx.names, e) if p}, "re": str(c.re), "im": str(c.im)}
        for m, e, c in _atoms(f)
    ]


def to_json(value):
    """JSON-ready dict for NcPoly / Form values."""
    if isinstance(value, ScalarPoly):
        value = NcPoly.const(value, value.ctx)
    if isinstance(value, NcPoly):
        return {"kind": "ncpoly", "text": poly_text(value), "terms": _poly_json(value)}
    if isinstance(value, Form):
        return {
            "kind": "form",
            "degree": value.degree,
            "text": form_text(value),
            "components": [
                {"basis": list(I), "coeff": _poly_json(value.comps[I])}
                for I in BASIS.get(value.degree, [])
                if I in value.comps
            ],
        }
    raise TypeError(f"no JSON rendering for {type(value).__name__}")


def _poly_from_json(terms, ctx):
    out = {}
    for t in terms:
        e = [0] * ctx.nvars
        for n, p in t["params"].items():
            e[ctx.index(n)] = p
        c = GaussianRational(Fraction(t["re"]), Fraction(t["im"]))
        m = tuple(t["x"])
        s = out.get(m, ScalarPoly.const(0, ctx))
        out[m] = s + ScalarPoly.monomial(e, c, ctx)
    return NcPoly(out, ctx)


def from_json(doc, ctx=DEFAULT):
    """Inverse of to_json for ncpoly and form payloads."""
    if doc["kind"] == "ncpoly":
        return _poly_from_json(doc["terms"], ctx)
    if doc["kind"] == "form":
        comps = {tuple(c["basis"]): _poly_from_json(c["coeff"], ctx) for c in doc["components"]}
        return Form(doc["degree"], comps, ctx)
    raise ValueError(f"cannot decode payload of kind {doc['kind']!r}")


def dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False) + "\n"
