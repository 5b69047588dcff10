import importlib.util
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def load(name):
    spec = importlib.util.spec_from_file_location(name, SCRIPTS / f"{name}.py")
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def test_reproduce_tables(tmp_path, capsys):
    assert load("reproduce_tables").main(["--out-dir", str(tmp_path)]) == 0
    assert (tmp_path / "class2.md").exists()
    assert "implementation-bug=0" in capsys.readouterr().out


def test_target_mode_sensitivity(tmp_path, capsys):
    out = tmp_path / "s.csv"
    assert load("target_mode_sensitivity").main(["--csv", str(out)]) == 0
    assert out.read_text().splitlines()[0] == "variant,hedged,plain,best"
    assert "top under best" in capsys.readouterr().out


def test_cri_fmt_orientation(capsys):
    assert load("cri_fmt_orientation").main() == 0
    text = capsys.readouterr().out
    assert text.count("transposed 61.81") == 4


@pytest.mark.parametrize("name", ["reproduce_tables", "target_mode_sensitivity", "cri_fmt_orientation"])
def test_scripts_have_docstrings(name):
    assert load(name).__doc__
