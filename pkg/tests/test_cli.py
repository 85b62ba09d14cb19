import json
import os

import pytest

from nano_kschur import KSchurLab, SymFunc, _verify
from nano_kschur._schema import BoundedPartitionModel, CatalanEvaluationModel, TableauModel
from nano_kschur._utils import parse_int_list
from nano_kschur.cli import EXIT_INVALID, EXIT_OK, EXIT_VERIFY_FAILED, main


def run(capsys, *argv):
    status = main(list(argv))
    return status, capsys.readouterr().out.strip()


def test_parse_int_list():
    assert parse_int_list("3, 3,2") == (3, 3, 2)
    assert parse_int_list("") == ()
    with pytest.raises(ValueError):
        parse_int_list("3,a")


def test_cores(capsys):
    assert run(capsys, "cores", "to-bounded", "--k", "4", "--shape", "5,3,2,2,1") == (EXIT_OK, "3,2,2,2,1")
    assert run(capsys, "cores", "to-core", "--k", "4", "--shape", "3,2,2,2,1") == (EXIT_OK, "5,3,2,2,1")
    status, out = run(capsys, "cores", "to-core", "--k", "4", "--shape", "3,2,2,2,1", "--format", "json")
    assert json.loads(out) == {"shape": [5, 3, 2, 2, 1], "n": 5}


def test_kschur_expand(capsys):
    assert run(capsys, "kschur", "expand", "--k", "9", "--mu", "2,1") == (EXIT_OK, "s[2,1]")
    status, out = run(capsys, "kschur", "expand", "--k", "2", "--mu", "2,1")
    assert out == "s[2,1] + (1*t)*s[3]"


def test_catalan_eval(capsys):
    status, out = run(capsys, "catalan", "eval", "--ell", "2", "--rowcounts", "0,0", "--gamma", "0,2")
    assert (status, out) == (EXIT_OK, "(-1)*s[1,1]")
    status, out = run(
        capsys, "catalan", "eval", "--ell", "2", "--rowcounts", "0,0", "--gamma", "0,2", "--via", "series"
    )
    assert out == "(-1)*s[1,1]"


def test_tableaux_json_chain_form(capsys):
    argv = ["tableaux", "enumerate", "--k", "2", "--outside", "2,1", "--weight", "2,1", "--format", "json"]
    status, out = run(capsys, *argv)
    assert status == EXIT_OK
    chains = json.loads(out)
    expected = KSchurLab().tableaux((2, 1), 2, (2, 1))
    assert len(chains) == len(expected) > 0
    for chain, tableau in zip(chains, expected):
        assert set(chain) == {"outside", "covers"}
        assert all(set(cover) == {"tau", "mark", "spin"} for cover in chain["covers"])
        model = TableauModel.model_validate(chain)
        assert model.to_value(3, (2, 1)) == tableau
        assert model.model_dump() == chain


def test_to_bounded_json(capsys):
    status, out = run(capsys, "cores", "to-bounded", "--k", "4", "--shape", "5,3,2,2,1", "--format", "json")
    assert status == EXIT_OK
    assert BoundedPartitionModel.model_validate_json(out).to_value() == (3, 2, 2, 2, 1)


def test_catalan_eval_json(capsys):
    status, out = run(
        capsys, "catalan", "eval", "--ell", "2", "--rowcounts", "0,0", "--gamma", "0,2", "--format", "json"
    )
    assert status == EXIT_OK
    model = CatalanEvaluationModel.model_validate_json(out)
    assert model.ideal.rowcounts == [0, 0]
    assert model.ideal.gamma == [0, 2]
    assert model.value.to_value() == SymFunc({(1, 1): -1})


def test_straighten_json(capsys):
    status, out = run(
        capsys, "kschur", "straighten", "--k", "4", "--lambda", "3,3,3,2,1", "--z", "2", "--format", "json"
    )
    assert status == EXIT_OK
    assert json.loads(out) == {
        "k": 4,
        "basis": "kschur",
        "terms": [{"partition": [4, 2, 2, 2, 1], "coeff": [0, 1]}],
    }


def test_tableaux(capsys):
    status, out = run(capsys, "tableaux", "enumerate", "--k", "1", "--outside", "1", "--weight", "1")
    assert status == EXIT_OK
    assert "1*" in out
    assert out.endswith("1 tableaux")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["kschur"],
        ["cores", "to-core", "--k", "4", "--shape", "5,1"],
        ["cores", "to-core", "--k", "4", "--shape", "3,x"],
        ["kschur", "straighten", "--k", "4", "--lambda", "2,1", "--z", "3"],
        ["kschur", "pieri", "--k", "2", "--mu", "2,1", "--d", "1", "--direction", "horizontal", "--max-mark", "1"],
        ["catalan", "eval", "--ell", "2", "--rowcounts", "2,0", "--gamma", "1,1"],
    ],
)
def test_invalid_input(capsys, argv):
    assert main(argv) == EXIT_INVALID


def test_verify(capsys, tmp_path):
    status, out = run(capsys, "verify", "--suite", "symfunc", "--size-max", "2", "--ell-max", "1")
    assert status == EXIT_OK
    assert out.startswith("symfunc: ")
    assert " ok " in out

    report_dir = os.path.join(tmp_path, "reports")
    status, _ = run(
        capsys, "verify", "--suite", "symfunc", "--size-max", "1", "--ell-max", "1", "--report", report_dir
    )
    assert status == EXIT_OK
    assert os.path.exists(os.path.join(report_dir, "symfunc.json"))


def test_verify_failure(capsys, monkeypatch):
    monkeypatch.setitem(_verify.SUITES, "broken", lambda param: [("fails", lambda: "nope")])
    status, out = run(capsys, "verify", "--suite", "broken", "--format", "json")
    assert status == EXIT_VERIFY_FAILED
    assert json.loads(out)[0]["failures"] == [{"case": "fails", "detail": "nope"}]
