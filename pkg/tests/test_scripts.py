import runpy
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize("name,args,needle", [
    ("run_claims_report.py", ["--only", "AMBIGUOUS"], "C-MU"),
    ("cohomology_table.py", ["2"], "kernel  image"),
    ("kernel_catalog.py", ["2", "--show"], "dimension 9"),
])
def test_script_runs(name, args, needle, capsys, monkeypatch):
    monkeypatch.setattr(sys, "argv", [name] + args)
    with pytest.raises(SystemExit) as exc:
        runpy.run_path(str(SCRIPTS / name), run_name="__main__")
    assert exc.value.code == 0
    assert needle in capsys.readouterr().out
