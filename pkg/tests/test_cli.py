import io
import json
import subprocess
import sys

import pytest

from composihedra import golden
from composihedra.cli import main
from composihedra.formats import parse_json, parse_polymake


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_count():
    code, text = run("count", "--n", "10")
    assert code == 0
    assert "a_10: 51822" in text
    assert "FAIL" not in text


def test_count_json():
    code, text = run("count", "--n", "9", "--json")
    d = json.loads(text)
    assert code == 0 and d["counts"]["a_9"] == 12235
    assert all(c["passed"] for c in d["checks"])


def test_enumerate():
    code, text = run("enumerate", "--n", "4")
    assert code == 0
    assert len(text.splitlines()) == 21
    code, text = run("enumerate", "--n", "4", "--classes")
    assert len(text.splitlines()) == 15
    assert "shape=" in text


def test_realize_polymake():
    code, text = run("realize", "--family", "ck", "--n", "4", "--format", "polymake")
    assert code == 0
    assert set(parse_polymake(text)) == set(parse_polymake(golden.CK4_POLYMAKE))


def test_realize_families():
    code, text = run("realize", "--family", "j", "--n", "3", "--q", "1/2")
    assert code == 0 and len(text.splitlines()) == 6
    code, text = run("realize", "--family", "k", "--n", "5", "--format", "json")
    assert code == 0 and len(parse_json(text)) == 14


@pytest.mark.parametrize("argv", [
    ("realize", "--family", "ck", "--n", "3", "--q", "1/2"),
    ("realize", "--family", "j", "--n", "3"),
    ("realize", "--family", "k", "--n", "3", "--q", "1/2"),
    ("realize", "--n", "3", "--weights", "1,2"),
    ("verify", "--n", "3", "--weights", "1,1"),
    ("export", "--format", "polymake", "--out", "/dev/null", "--n", "3", "--object", "hrep"),
])
def test_bad_input_exits_nonzero(argv, capsys):
    code, _ = run(*argv)
    assert code != 0
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [("count", "--n", "0"), ("verify", "--n", "3", "--weights", "1,x"),
                                  ("realize", "--n", "3", "--q", "1/0"), ("frobnicate",)])
def test_argparse_rejects(argv):
    with pytest.raises(SystemExit) as e:
        main(list(argv))
    assert e.value.code != 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_verify(n):
    code, text = run("verify", "--n", str(n))
    assert code == 0
    assert "FAIL" not in text


def test_verify_weighted_json():
    code, text = run("verify", "--n", "4", "--weights", "2,1,3,1", "--json")
    d = json.loads(text)
    assert code == 0 and d["counts"]["vertices"] == 15


@pytest.mark.parametrize("obj", ["vrep", "hrep", "poset", "lattice"])
def test_export_json(tmp_path, obj):
    path = tmp_path / f"{obj}.json"
    code, _ = run("export", "--format", "json", "--out", str(path), "--n", "3", "--object", obj)
    assert code == 0
    assert parse_json(path.read_text()) is not None


def test_export_polymake(tmp_path):
    path = tmp_path / "ck4.poly"
    code, _ = run("export", "--format", "polymake", "--out", str(path), "--n", "4")
    assert code == 0
    assert len(parse_polymake(path.read_text())) == 15


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "composihedra", "count", "--n", "5"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert "a_5: 51" in r.stdout
