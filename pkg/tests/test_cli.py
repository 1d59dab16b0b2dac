import json
import subprocess
import sys

import pytest

from galmod.cli import main, parse_report
from galmod.cyclo import CycloNumber


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, parse_report(out)


def test_field_command(capsys):
    code, rep = run(capsys, "field", "--conductor", "7")
    assert code == 0 and rep["passed"]
    assert rep["results"]["degree"] == 6
    assert rep["results"]["discriminant"] == "16807"
    assert rep["command"] == "field" and rep["config"]["conductor"] == 7


def test_gauss_command(capsys):
    code, rep = run(capsys, "gauss", "--conductor", "5", "--kernel", "4")
    assert code == 0
    taus = rep["results"]["gauss_sums"]
    assert [t["conductor"] for t in taus] == [1, 5]


def test_delta_command(capsys):
    code, rep = run(capsys, "delta", "--field", '{"conductor": 3}')
    assert code == 0
    assert rep["verdicts"] == {"totval_equal": True, "diff_projections_zero": True, "diff_is_zero_class": True}
    assert rep["results"]["projections"]["delta"]["3"] == {"0": "0", "1": "1"}
    code, rep = run(capsys, "delta", "--conductor", "1")
    assert code == 0 and rep["results"]["projections"]["delta"] == {}


def test_acrep_command(capsys):
    code, rep = run(capsys, "acrep", "--conductor", "13", "--kernel", "3", "--precision-bits", "96")
    assert code == 0 and all(rep["verdicts"].values())


def test_chase_command(capsys):
    code, rep = run(capsys, "chase", "--conductor", "3")
    assert code == 0
    assert rep["results"]["invariant_factors"] == ["1", "1", "1", "3"]
    assert rep["results"]["cht"] == {"3": {"lhs": "1", "rhs": "1"}}


def test_resolvend_command(capsys):
    T = json.dumps({"gamma": [2], "level": 5, "hom": [[2, [1]]]})
    code, rep = run(capsys, "resolvend", "--torsor", T)
    assert code == 0 and rep["results"]["membership"]["member"]
    t = [CycloNumber.from_json(v) for v in rep["results"]["transforms"]]
    assert t[0] == -1 and t[1] * t[1] == 5


def test_primitive_command(capsys, tmp_path):
    d = {"gamma": [2], "coeffs": [[[0], {"level": 1, "coeffs": ["1"]}],
                                  [[1], {"level": 8, "coeffs": ["0", "1", "0", "-1"]}]]}
    p = tmp_path / "elem.json"
    p.write_text(json.dumps(d))
    code, rep = run(capsys, "primitive", "--element", str(p))
    assert code == 0
    assert rep["results"]["primitive"] is False and rep["results"]["membership"]["member"] is False


def test_pfaffian_command(capsys):
    ram = json.dumps({"places": [{"prime": 3, "residue_degree": 2, "inertia_dims": [1, 1, 1, 1, 0]}]})
    code, rep = run(capsys, "pfaffian", "--table", "q8", "--ram", ram)
    assert code == 0
    assert rep["results"]["pfaffian"]["4"]["3"]["exponent"] == 2
    assert rep["results"]["pfaffian"]["4"]["3"]["value"] == {"level": 1, "coeffs": ["9"]}


def test_schema_error_pointer(capsys):
    code, rep = run(capsys, "field", "--field", '{"conductor": "seven"}')
    assert code == 1 and not rep["passed"]
    assert rep["results"]["error"]["pointer"] == "/conductor"


def test_domain_errors_exit_1(capsys):
    # Q(sqrt 2): conductor 8 is wild
    T = json.dumps({"gamma": [2], "level": 8, "hom": [[3, [1]], [5, [1]]]})
    code, rep = run(capsys, "resolvend", "--torsor", T)
    assert code == 1 and rep["results"]["error"]["error"] == "wild-ramification"
    code, rep = run(capsys, "field", "--conductor", "7", "--kernel", "14")
    assert code == 1 and rep["results"]["error"]["error"] == "bad-subgroup"
    code, rep = run(capsys, "chase", "--conductor", "9")
    assert code == 1
    ram = json.dumps({"places": [{"prime": 3, "residue_degree": 1, "inertia_dims": [1, 1, 1, 1, 1]}]})
    code, rep = run(capsys, "pfaffian", "--ram", ram)
    assert code == 1


def test_failed_verdict_exit_2(capsys, monkeypatch):
    import galmod.cli as cli
    monkeypatch.setitem(cli.RUNNERS, "field", lambda L, prec: ({}, {"forced": False}))
    code, rep = run(capsys, "field", "--conductor", "3")
    assert code == 2 and rep["verdicts"] == {"forced": False}


def test_report_out_file(capsys, tmp_path):
    out = tmp_path / "r.json"
    assert main(["chase", "--conductor", "5", "--kernel", "4", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert parse_report(out.read_text())["passed"]


def strip(rep):
    rep = dict(rep)
    rep.pop("timestamp")
    return rep


@pytest.mark.slow
def test_sweep_serial_equals_parallel(capsys):
    _, a = run(capsys, "sweep", "delta", "--max-conductor", "21", "--max-degree", "4")
    _, b = run(capsys, "sweep", "delta", "--max-conductor", "21", "--max-degree", "4", "--jobs", "3")
    assert strip(a) == strip(b)
    assert a["passed"] and len(a["results"]) == len(a["verdicts"])


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "galmod", "chase", "--conductor", "3"],
                       capture_output=True, text=True, check=False)
    assert p.returncode == 0
    assert parse_report(p.stdout)["results"]["order"] == "3"
