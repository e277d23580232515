"""Command-line interface: ``ncborel <command> [options]``.

Exit status is 0 on success, 1 when a computation is undefined for its input
(unclosed form, unsupported degree, ...), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import io
import sys
from dataclasses import dataclass

from ..algebra import NcPoly
from ..calculus import VARIANTS, as_form, d, partials
from ..claims import claims_report
from ..errors import NcBorelError, NotClosedError
from ..hodge import box, star
from ..homology import cohomology_dims, find_primitive
from ..symmetry import TIndex, adjoint_action, coregular_action
from ..waves import CONVENTIONS, WaveSpec, kernel_block, plane_wave_series, wave_derivative_check, wave_eigenvalue_check
from .formatting import SCHEMA, dumps, latex, text, to_json
from .parser import ExprError, parse_value

FORMATS = ("text", "json", "latex")
GENERATORS = ("J1", "J2", "J3", "t11", "t12", "t21", "t22")


@dataclass
class Output:
    """One rendered result: text, LaTeX and the JSON payload."""

    text: str
    latex: str
    json: dict

    def render(self, fmt, command):
        if fmt == "json":
            return dumps({"schema": SCHEMA, "command": command, "result": self.json})
        body = self.latex if fmt == "latex" else self.text
        return body if body.endswith("\n") else body + "\n"


@dataclass
class RunResult:
    code: int
    stdout: str
    stderr: str


class _UsageError(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _nat(s):
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {s!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {s!r}")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS, help="output format")
    common.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS, help="write output to FILE")
    p = _ArgParser(prog="ncborel", description="Exact computations on R^3_lam.", parents=[common])
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_ArgParser)
    sub.required = True

    def add(name, help_, expr=True, variant=False):
        sp = sub.add_parser(name, help=help_, parents=[common])
        if expr:
            sp.add_argument("expr", metavar="EXPR", help="expression, or '-' to read stdin")
        if variant:
            sp.add_argument("--variant", choices=VARIANTS, default="consistent")
        return sp

    add("mul", "normal-order an expression")
    add("d", "exterior derivative", variant=True)
    add("star", "Hodge star")
    add("box", "wave operator *d*d on 0- and 1-forms", variant=True)
    add("partials", "partial derivatives of a 0-form", variant=True)
    sp = add("kernel", "kernel of the wave operator by grade", expr=False, variant=True)
    sp.add_argument("--operator", choices=("box0", "box1"), required=True)
    sp.add_argument("--grade", type=_nat, required=True, help="largest coefficient grade")
    sp = add("cohomology", "de Rham cohomology by grade", expr=False)
    sp.add_argument("--max-grade", type=_nat, required=True)
    sp = add("primitive", "solve d(eta) = omega", variant=True)
    sp.add_argument("--grade-bound", type=_nat, required=True)
    sp = add("wave", "plane-wave series and checks", expr=False, variant=True)
    sp.add_argument("--order", type=_nat, required=True)
    sp.add_argument("--convention", choices=CONVENTIONS, default="plain")
    sp.add_argument("--check", choices=("d", "box"), default=None)
    sp = add("action", "action of J_a or t^i_j")
    sp.add_argument("--gen", choices=GENERATORS, required=True)
    add("report", "adjudication of the stated identities", expr=False)
    return p


def _value(args, stdin):
    src = args.expr
    if src == "-":
        src = (stdin if stdin is not None else sys.stdin).read()
    return parse_value(src)


def _single(v):
    return Output(text(v), latex(v), to_json(v))


def _cmd_mul(args, stdin):
    return _single(_value(args, stdin))


def _cmd_d(args, stdin):
    return _single(d(_value(args, stdin), args.variant))


def _cmd_star(args, stdin):
    return _single(star(as_form(_value(args, stdin))))


def _cmd_box(args, stdin):
    return _single(box(_value(args, stdin), args.variant))


def _cmd_partials(args, stdin):
    v = _value(args, stdin)
    if not isinstance(v, NcPoly):
        v = as_form(v)
        if v.degree != 0:
            raise NcBorelError("partials: input must be a 0-form")
        v = v.to_poly()
    P = partials(v, args.variant)
    txt = "\n".join(f"d{a}: {text(p)}" for a, p in zip((1, 2, 3), P))
    tex = " \\\\\n".join(rf"\partial_{{{a}}} = {latex(p)}" for a, p in zip((1, 2, 3), P))
    return Output(txt, tex, {"kind": "partials", "variant": args.variant, "components": [to_json(p) for p in P]})


def _cmd_kernel(args, stdin):
    blocks = []
    lines = []
    tex = []
    for n in range(args.grade + 1):
        basis = kernel_block(args.operator, n, args.variant)
        if args.operator == "box0":
            basis = [b.to_poly() for b in basis]
        blocks.append({"grade": n, "dimension": len(basis), "basis": [to_json(b) for b in basis]})
        lines.append(f"grade {n} (dimension {len(basis)}):")
        lines.extend(f"  {text(b)}" for b in basis)
        tex.append(rf"\text{{grade {n}}}: & " + ", ".join(latex(b) for b in basis) + r" \\")
    doc = {"kind": "kernel", "operator": args.operator, "grade_bound": args.grade,
           "variant": args.variant, "blocks": blocks}
    return Output("\n".join(lines), "\\begin{array}{ll}\n" + "\n".join(tex) + "\n\\end{array}", doc)


def _cmd_cohomology(args, stdin):
    N = args.max_grade
    tab = cohomology_dims(N)
    lines = ["grade  H0  H1  H2  H3"]
    tex = [r"\begin{array}{c|cccc}", r"n & H^0 & H^1 & H^2 & H^3 \\ \hline"]
    entries = []
    for n in range(N + 1):
        row = [tab[(k, n)].dim for k in range(4)]
        lines.append(f"{n:<5}" + "".join(f"  {v:<2}" for v in row).rstrip())
        tex.append(f"{n} & " + " & ".join(str(v) for v in row) + r" \\")
        for k in range(4):
            e = tab[(k, n)]
            entries.append({"degree": k, "grade": n, "dim": e.dim, "raw": e.raw,
                            "kernel": e.kernel, "image": e.image})
    lines.append("")
    lines.append("entries count new generators over C[lam]; raw H^0 is 1 at every grade (lam^n)")
    tex.append(r"\end{array}")
    return Output("\n".join(lines), "\n".join(tex), {"kind": "cohomology", "max_grade": N, "entries": entries})


def _cmd_primitive(args, stdin):
    w = as_form(_value(args, stdin))
    eta = find_primitive(w, args.grade_bound, args.variant)
    doc = {"kind": "primitive", "found": eta is not None, "grade_bound": args.grade_bound,
           "primitive": to_json(eta) if eta is not None else None}
    if eta is None:
        return Output("none", r"\text{none}", doc)
    return Output(text(eta), latex(eta), doc)


def _cmd_wave(args, stdin):
    w = WaveSpec(args.order, args.convention)
    if args.check is None:
        s = plane_wave_series(w)
        return Output(text(s), latex(s), {"kind": "wave", "order": args.order,
                                          "convention": args.convention, "series": to_json(s)})
    check = wave_derivative_check if args.check == "d" else wave_eigenvalue_check
    r = check(w, args.variant)
    lines = [f"k-order {n}: {text(res)}" for n, res in sorted(r.residuals.items())]
    verdict = "PASS" if r.passed else f"FAIL (first nonzero residual at k-order {r.first_failure})"
    lines.append(f"verdict: {verdict}")
    tex = [rf"\text{{order {n}}}: & {latex(res) or '0'} \\" for n, res in sorted(r.residuals.items())]
    doc = {"kind": "wave_check", "check": args.check, "order": args.order, "convention": args.convention,
           "variant": args.variant, "passed": r.passed, "first_failure": r.first_failure,
           "residuals": [{"order": n, "value": to_json(res)} for n, res in sorted(r.residuals.items())]}
    return Output("\n".join(lines), "\\begin{array}{ll}\n" + "\n".join(tex) + "\n\\end{array}", doc)


def _cmd_action(args, stdin):
    v = _value(args, stdin)
    if not isinstance(v, NcPoly):
        v = as_form(v)
        if v.degree != 0:
            raise NcBorelError("action: input must be a 0-form")
        v = v.to_poly()
    g = args.gen
    if g.startswith("J"):
        out = adjoint_action(int(g[1]), v)
    else:
        out = coregular_action(TIndex(int(g[1]), int(g[2])), v)
    return _single(out)


def _cmd_report(args, stdin):
    r = claims_report()
    lines = []
    for e in r.entries:
        conv = f" [{e.convention}]" if e.convention else ""
        lines.append(f"{e.status:<9} {e.id} ({e.variant}){conv}")
        lines.append(f"    claimed:  {e.claimed}")
        lines.append(f"    computed: {e.computed}")
    c = r.counts()
    lines.append(f"total {len(r.entries)}: {c['PASS']} PASS, {c['FAIL']} FAIL, {c['AMBIGUOUS']} AMBIGUOUS")
    tex = [r"\begin{tabular}{lll}", r"id & variant & status \\ \hline"]
    tex.extend(f"{e.id} & {e.variant} & {e.status} \\\\" for e in r.entries)
    tex.append(r"\end{tabular}")
    doc = {"kind": "claims_report", "counts": c, "entries": [e.to_json() for e in r.entries]}
    return Output("\n".join(lines), "\n".join(tex), doc)


_COMMANDS = {
    "mul": _cmd_mul,
    "d": _cmd_d,
    "star": _cmd_star,
    "box": _cmd_box,
    "partials": _cmd_partials,
    "kernel": _cmd_kernel,
    "cohomology": _cmd_cohomology,
    "primitive": _cmd_primitive,
    "wave": _cmd_wave,
    "action": _cmd_action,
    "report": _cmd_report,
}


def _error_doc(command, kind, message, offset=None, witness=None):
    err = {"kind": kind, "message": message}
    if offset is not None:
        err["offset"] = offset
    if witness is not None:
        err["witness"] = to_json(witness)
    return dumps({"schema": SCHEMA, "command": command or "", "error": err})


def run(argv, stdin=None):
    """Execute one invocation; returns RunResult without touching sys.stdout."""
    parser = build_parser()
    err = io.StringIO()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        return RunResult(2, "", str(e) + "\n")
    except SystemExit as e:  # --help
        return RunResult(int(e.code or 0), "", "")
    fmt = getattr(args, "format", "text")
    out_path = getattr(args, "out", None)
    json_errors = fmt == "json"
    try:
        result = _COMMANDS[args.command](args, stdin)
        body = result.render(fmt, args.command)
        code = 0
    except ExprError as e:
        code = 2
        body = _error_doc(args.command, e.kind, e.message, e.offset) if json_errors else ""
        err.write(f"ncborel {args.command}: {e}\n")
    except NotClosedError as e:
        code = 1
        body = _error_doc(args.command, "not_closed", str(e), witness=e.witness) if json_errors else ""
        err.write(f"ncborel {args.command}: {e}; d(omega) = {text(e.witness)}\n")
    except (NcBorelError, ValueError) as e:
        code = 1
        body = _error_doc(args.command, "domain", str(e)) if json_errors else ""
        err.write(f"ncborel {args.command}: {e}\n")
    if out_path is not None and body:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(body)
        body = ""
    return RunResult(code, body, err.getvalue())


def main(argv=None):
    r = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(r.stdout)
    sys.stderr.write(r.stderr)
    return r.code


if __name__ == "__main__":
    sys.exit(main())
