import io
import json
import random
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest
from hypothesis import given

from ncborel.algebra import NcPoly
from ncborel.calculus import d, dx, wedge
from ncborel.cli.formatting import from_json, latex, text, to_json
from ncborel.cli.main import run
from ncborel.cli.parser import (
    BinOp,
    ExprDegreeError,
    ExprSyntaxError,
    LexicalError,
    parse,
    parse_value,
)
from ncborel.cli.schema import DOCUMENT_SCHEMA

from strategies import X, forms, lam, ncpolys

GOLDEN = Path(__file__).parent / "golden"
ATOMS = ["x1", "x2", "x3", "lam", "i", "2", "1/2", "-3", "k1", "(x1 - x2)", "(lam*x3 + 1)"]
FORM_ATOMS = ["dx1", "dx2", "dx3", "(dx1*x2 + dx3)"]


def validate(doc):
    jsonschema.validate(doc, DOCUMENT_SCHEMA)


def random_expr(rng, depth=0):
    r = rng.random()
    if depth > 2 or r < 0.3:
        return rng.choice(ATOMS + FORM_ATOMS)
    op = rng.choice(["+", "-", "*", "*", "/\\", "^"])
    if op == "^":
        return f"({random_expr(rng, depth + 1)})^{rng.randint(0, 3)}"
    return f"({random_expr(rng, depth + 1)} {op} {random_expr(rng, depth + 1)})"


def corpus(n=150, seed=7):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        src = random_expr(rng)
        try:
            out.append((src, parse_value(src)))
        except ExprDegreeError:
            continue
    return out


# -- parser ----------------------------------------------------------------------

def test_spec_examples_parse():
    assert parse_value("x2*x1") == X(1) * X(2) - X(2).scale(lam() * 2)
    node = parse("dx1 /\\ dx3")
    assert isinstance(node, BinOp) and node.op == "/\\"
    assert parse_value("dx1 /\\ dx3") == wedge(dx(1), dx(3))
    assert parse_value("x1^2 + lam*x1") == X(1) ** 2 + X(1).scale(lam())
    assert text(parse_value("x2*x1")) == "x1*x2 - 2*lam*x2"


def test_precedence_and_associativity():
    assert parse_value("x1 - x2 - x3") == X(1) - X(2) - X(3)
    assert parse_value("2*x1^2") == (X(1) ** 2).scale(2)
    assert parse_value("-x1^2") == -(X(1) ** 2)
    assert parse_value("x1^0") == NcPoly.one()


def test_round_trip_corpus():
    cases = corpus()
    assert len(cases) >= 100
    kinds = {type(v).__name__ for _, v in cases}
    assert kinds == {"NcPoly", "Form"}
    for src, v in cases:
        assert parse_value(text(v)) == v, src


@given(ncpolys(max_deg=3, with_k=True))
def test_round_trip_polys(f):
    assert parse_value(text(f)) == f
    assert from_json(to_json(f)) == f


@given(forms())
def test_round_trip_forms(w):
    v = parse_value(text(w))
    if w.degree == 0:
        assert v == w.to_poly() or v == w
    else:
        assert v == w
    assert from_json(to_json(w)) == w


def test_zero_prints_and_parses():
    assert text(NcPoly.zero()) == "0"
    assert parse_value("0") == NcPoly.zero()


@pytest.mark.parametrize("src,cls,offset", [
    ("x1 $ x2", LexicalError, 3),
    ("1/0", LexicalError, 0),
    ("x1 + ", ExprSyntaxError, 5),
    ("(x1", ExprSyntaxError, 3),
    ("y7", ExprSyntaxError, 0),
    ("x1 /\\ dx1", ExprDegreeError, None),
    ("dx1 * dx2", ExprDegreeError, None),
    ("dx1 + x1", ExprDegreeError, None),
    ("dx1^2", ExprDegreeError, None),
])
def test_error_kinds(src, cls, offset):
    with pytest.raises(cls) as exc:
        parse_value(src)
    if offset is not None:
        assert exc.value.offset == offset
    assert exc.value.to_json()["kind"] in ("lexical", "syntax", "degree")


def test_offsets_are_bytes():
    with pytest.raises(LexicalError) as exc:
        parse_value("x1 + é")
    assert exc.value.offset == 5
    with pytest.raises(LexicalError) as exc:
        parse_value("é + $")
    assert exc.value.offset == 0


# -- subcommands -------------------------------------------------------------------

def ok(argv, stdin=None):
    r = run(argv, stdin)
    assert r.code == 0, r.stderr
    return r.stdout


def test_spec_cli_examples():
    assert ok(["box", "x2^2"]) == "2\n"
    out = ok(["d", "--variant", "paper", "x1^2"])
    assert parse_value(out) == dx(1) * (X(1) - NcPoly.const(lam())).scale(2)
    table = ok(["cohomology", "--max-grade", "4"]).splitlines()
    assert table[0].split() == ["grade", "H0", "H1", "H2", "H3"]
    assert table[1].split() == ["0", "1", "0", "0", "0"]
    for n, row in enumerate(table[2:6], start=1):
        assert row.split() == [str(n), "0", "0", "0", "0"]


ALL_COMMANDS = [
    ["mul", "x2*x1"],
    ["d", "x1*x2"],
    ["d", "--variant", "paper", "x1^2"],
    ["star", "dx1*x2"],
    ["box", "x2^2"],
    ["box", "dx1*x2^2"],
    ["partials", "x1^2*x2"],
    ["partials", "--variant", "paper", "x1^2"],
    ["kernel", "--operator", "box0", "--grade", "2"],
    ["kernel", "--operator", "box1", "--grade", "2"],
    ["cohomology", "--max-grade", "2"],
    ["primitive", "dx1*x2 + dx2*x1", "--grade-bound", "3"],
    ["primitive", "dx3*x3^3", "--grade-bound", "1"],
    ["wave", "--order", "2", "--convention", "plain"],
    ["wave", "--order", "3", "--convention", "x1-right", "--check", "d", "--variant", "paper"],
    ["wave", "--order", "3", "--convention", "x1-left", "--check", "box"],
    ["action", "--gen", "J1", "x2"],
    ["action", "--gen", "t12", "x1*x2"],
]


@pytest.mark.parametrize("argv", ALL_COMMANDS, ids=lambda a: " ".join(a))
@pytest.mark.parametrize("fmt", ["text", "json", "latex"])
def test_every_subcommand(argv, fmt):
    out = ok(argv + ["--format", fmt])
    assert out.strip()
    assert out == ok(argv + ["--format", fmt])
    if fmt == "json":
        doc = json.loads(out)
        validate(doc)
        assert doc["schema"] == "ncborel/1" and doc["command"] == argv[0]


def test_report_formats():
    for fmt in ("text", "latex"):
        out = ok(["report", "--format", fmt])
        assert "C-CAS" in out
    doc = json.loads(ok(["report", "--format", "json"]))
    validate(doc)
    assert doc["result"]["counts"]["PASS"] > 0


def test_global_format_flag():
    assert ok(["--format", "json", "box", "x2^2"]) == ok(["box", "x2^2", "--format", "json"])


def test_primitive_none_and_found():
    assert ok(["primitive", "dx3*x3^3", "--grade-bound", "1"]) == "none\n"
    found = parse_value(ok(["primitive", "dx1*x2 + dx2*x1", "--grade-bound", "3"]))
    assert d(found) == parse_value("dx1*x2 + dx2*x1")


def test_value_outputs_round_trip_through_json():
    doc = json.loads(ok(["d", "x1*x2*x3", "--format", "json"]))
    assert from_json(doc["result"]) == parse_value(ok(["d", "x1*x2*x3"]))


def test_stdin_and_out(tmp_path):
    assert run(["box", "-"], io.StringIO("x2^2")).stdout == "2\n"
    target = tmp_path / "o.json"
    r = run(["report", "--format", "json", "--out", str(target)])
    assert r.code == 0 and r.stdout == ""
    assert target.read_text(encoding="utf-8") == ok(["report", "--format", "json"])


def test_latex_output():
    assert ok(["mul", "x2*x1", "--format", "latex"]).strip() == latex(parse_value("x2*x1"))


# -- errors and exit codes -----------------------------------------------------------

@pytest.mark.parametrize("argv,kind", [
    (["mul", "x1 $"], "lexical"),
    (["mul", "x1 +"], "syntax"),
    (["d", "x1 /\\ x2"], "degree"),
])
def test_parse_errors_exit_two(argv, kind):
    r = run(argv)
    assert r.code == 2 and r.stdout == "" and r.stderr
    r = run(argv + ["--format", "json"])
    assert r.code == 2
    doc = json.loads(r.stdout)
    validate(doc)
    assert doc["error"]["kind"] == kind


def test_not_closed_exits_one_with_witness():
    r = run(["primitive", "dx1*x2", "--grade-bound", "3"])
    assert r.code == 1 and "dx1/\\dx2" in r.stderr.replace(" ", "")
    doc = json.loads(run(["primitive", "dx1*x2", "--grade-bound", "3", "--format", "json"]).stdout)
    validate(doc)
    assert doc["error"]["kind"] == "not_closed"
    assert from_json(doc["error"]["witness"]) == wedge(dx(1), dx(2))


@pytest.mark.parametrize("argv", [
    ["box", "dx1/\\dx2"],
    ["primitive", "x1", "--grade-bound", "2"],
    ["partials", "dx1"],
    ["action", "--gen", "J1", "dx1"],
])
def test_domain_errors_exit_one(argv):
    r = run(argv)
    assert r.code == 1 and r.stderr


@pytest.mark.parametrize("argv,flag", [
    (["kernel", "--operator", "box2", "--grade", "2"], "--operator"),
    (["kernel", "--operator", "box0", "--grade", "-1"], "--grade"),
    (["wave", "--order", "2", "--convention", "sideways"], "--convention"),
    (["action", "--gen", "J4", "x1"], "--gen"),
    (["cohomology"], "--max-grade"),
    (["frobnicate"], "frobnicate"),
])
def test_usage_errors_name_the_flag(argv, flag):
    r = run(argv)
    assert r.code == 2 and flag in r.stderr


# -- golden files and the console script ----------------------------------------------

@pytest.mark.parametrize("name,argv", [
    ("cohomology_4.txt", ["cohomology", "--max-grade", "4"]),
    ("report.json", ["report", "--format", "json"]),
])
def test_golden(name, argv):
    assert ok(argv) == (GOLDEN / name).read_text(encoding="utf-8")


def test_console_entry_point():
    p = subprocess.run([sys.executable, "-m", "ncborel", "box", "x2^2"], capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout == "2\n"
    p = subprocess.run([sys.executable, "-m", "ncborel", "mul", "x1 +"], capture_output=True, text=True)
    assert p.returncode == 2
