from __future__ import annotations

import io as stdio
import json
import subprocess
import sys

import pytest

from leibniz_ext import catalog_get, tables_equal
from leibniz_ext.cli import cli_main
from leibniz_ext.io import algebra_from_dict, dumps_algebra, matrix_to_dict
from leibniz_ext.regressions import heisenberg_change


@pytest.fixture
def run(capsys, monkeypatch):
    def _run(*argv, stdin=None):
        if stdin is not None:
            monkeypatch.setattr(sys, "stdin", stdio.StringIO(stdin))
        code = cli_main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err
    return _run


@pytest.fixture
def files(tmp_path):
    def _write(name, obj):
        path = tmp_path / name
        path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(path)
    return _write


def table_text(name, **params):
    return dumps_algebra(catalog_get(name, params).table)


def test_catalog_get_pipes_into_check(run):
    code, out, _ = run("catalog", "get", "NF", "--param", "n=5")
    assert code == 0
    code, out, _ = run("check", "-", stdin=out)
    assert code == 0 and out.startswith("Leibniz: yes (not Lie)")


def test_check_reports_violations(run, files):
    bad = {"dim": 2, "products": [{"left": "e1", "right": "e1", "result": [["1", "e2"]]},
                                  {"left": "e1", "right": "e2", "result": [["1", "e2"]]}]}
    code, out, _ = run("check", files("bad.json", bad))
    assert code == 1 and "violating basis triple" in out
    code, out, _ = run("check", "--json", files("bad.json", bad))
    assert code == 1 and json.loads(out)["leibniz"] is False


def test_extend_then_complete(run, files, tmp_path):
    code, pres, _ = run("catalog", "get", "NF", "--presentation")
    assert code == 0
    out_path = str(tmp_path / "R.json")
    code, out, _ = run("extend", files("p.json", pres), "-o", out_path)
    assert code == 0 and "wrote 5-dim extension" in out
    code, out, _ = run("complete", "--json", out_path)
    assert code == 0 and json.loads(out)["complete_def22"] is True


def test_extend_json_and_flag_warnings(run, files):
    _, pres, _ = run("catalog", "get", "F2", "--presentation")
    code, out, err = run("extend", "--json", files("p.json", pres), "--flags", "e1=1,e2=0")
    assert code == 0
    payload = json.loads(out)
    assert payload["extension"]["b_flags"] == {"e1": 0, "e2": 0}
    assert algebra_from_dict(payload["table"]).dim == 7
    assert "warning: flag 1 on e1 ignored" in err
    code, _, err = run("extend", files("p.json", pres), "--flags", "e2=3")
    assert code == 2 and "must be 0 or 1" in err


def test_extend_failure_exit_codes(run, files):
    _, pres, _ = run("catalog", "get", "mu1", "--presentation")
    code, _, err = run("extend", files("p.json", pres))
    assert code == 1 and err.startswith("failed:")
    broken = json.loads(pres)
    broken["words"]["e3"] = ["e1", "e1"]
    code, _, err = run("extend", files("q.json", broken))
    assert code == 2 and "word for e3 evaluates to e2, not e3" in err


def test_compare_via_basis_change(run, files):
    a = files("a.json", table_text("g5_36"))
    b = files("b.json", table_text("H1ext"))
    m = files("m.json", matrix_to_dict(heisenberg_change()))
    code, out, _ = run("compare", a, b, "--via", m)
    assert (code, out.strip()) == (0, "equal")
    code, out, _ = run("compare", "--json", a, b)
    assert code == 1 and json.loads(out)["equal"] is False


def test_basis_change_output_is_a_table(run, files):
    a = files("a.json", table_text("g5_36"))
    m = files("m.json", matrix_to_dict(heisenberg_change()))
    code, out, _ = run("basis-change", a, "--matrix", m)
    assert code == 0
    assert tables_equal(algebra_from_dict(json.loads(out)), catalog_get("H1ext").table)


def test_analyze_and_derivations(run, files):
    f = files("nf.json", table_text("NF", n=4))
    code, out, _ = run("analyze", f)
    assert code == 0 and "lower central dims [4, 3, 2, 1, 0]" in out
    code, out, _ = run("analyze", "--json", f)
    assert json.loads(out)["series"]["nilindex"] == 5
    code, out, _ = run("derivations", "--json", f)
    d = json.loads(out)
    assert (d["der_dim"], d["inner_dim"]) == (4, 1)
    code, out, _ = run("complete", f)
    assert code == 1


def test_catalog_list_and_errors(run):
    code, out, _ = run("catalog", "list", "--json")
    assert code == 0 and "NF" in {e["name"] for e in json.loads(out)}
    assert run("catalog", "get", "nope")[0] == 2
    assert run("catalog", "get", "NF", "--param", "n=1/2")[0] == 2
    assert run("catalog", "get", "g5_36", "--presentation")[0] == 2
    assert run("catalog", "get")[0] == 2


def test_malformed_input_exit_codes(run, files):
    dec = {"dim": 2, "products": [{"left": "e1", "right": "e1", "result": [["0.5", "e2"]]}]}
    code, _, err = run("check", files("d.json", dec))
    assert code == 2 and "products[0].result[0]: decimal notation is not allowed" in err
    assert run("check", files("s.json", "{not json"))[0] == 2
    assert run("check", "/nonexistent/file.json")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run()[0] == 2


def test_regress_passes(run):
    code, out, _ = run("regress")
    assert code == 0 and "FAIL" not in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "leibniz_ext", "catalog", "get", "H1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["dim"] == 3
