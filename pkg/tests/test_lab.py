import os
import shutil

import pytest

from nano_kschur import KSchurLab, SymFunc, TPoly, VerifyParam
from nano_kschur._schema import SuiteReportModel

WORKING_DIR = "./tests/nano_kschur_reports_TEST"

T = TPoly((0, 1))
S21_PLUS_T_S3 = SymFunc({(2, 1): 1, (3,): T})


@pytest.fixture(scope="function")
def setup_teardown():
    if os.path.exists(WORKING_DIR):
        shutil.rmtree(WORKING_DIR)

    yield

    if os.path.exists(WORKING_DIR):
        shutil.rmtree(WORKING_DIR)


def test_rejects_unknown_settings():
    with pytest.raises(ValueError):
        KSchurLab(catalan_evaluator="nope")
    with pytest.raises(ValueError):
        KSchurLab(expand_via="nope")


def test_expand_routes_agree():
    lab = KSchurLab()
    assert lab.expand((2, 1), 2) == S21_PLUS_T_S3
    assert lab.expand((2, 1), 2, via="tableaux") == S21_PLUS_T_S3
    assert lab.expand((2, 1), 2, via="branching") == S21_PLUS_T_S3
    assert KSchurLab(catalan_evaluator="series").kschur((2, 1), 2) == S21_PLUS_T_S3


@pytest.mark.asyncio
async def test_aexpand():
    lab = KSchurLab(expand_via="tableaux")
    assert await lab.aexpand((1, 1), 1) == SymFunc({(1, 1): 1, (2,): T})
    with pytest.raises(ValueError):
        await lab.aexpand((1, 1), 1, via="guess")


def test_catalan():
    lab = KSchurLab()
    assert lab.catalan(2, (0, 0), (0, 2)) == SymFunc({(1, 1): -1})
    assert lab.catalan(2, (1, 0), (1, 1), t1=True) == SymFunc({(2,): 1, (1, 1): 1})
    with pytest.raises(ValueError):
        lab.catalan(2, (2, 0), (1, 1))


def test_pieri_directions():
    lab = KSchurLab()
    assert lab.pieri((1, 1), 1, 1) == lab.pieri((1, 1), 1, 1, direction="horizontal")
    assert lab.pieri((1, 1), 1, 1, max_mark=1).coefficient((1,)) == T
    with pytest.raises(ValueError):
        lab.pieri((1, 1), 1, 1, direction="horizontal", max_mark=1)
    with pytest.raises(ValueError):
        lab.pieri((1, 1), 1, 1, direction="diagonal")


def test_cores_and_tableaux():
    lab = KSchurLab()
    assert lab.to_bounded((5, 3, 2, 2, 1), 4) == (3, 2, 2, 2, 1)
    assert lab.to_core((3, 2, 2, 2, 1), 4).shape == (5, 3, 2, 2, 1)
    assert len(lab.tableaux((1, 1), 1, (1,))) == 2
    restricted = lab.tableaux((1, 1), 1, (1,), max_mark=1)
    assert [tableau.spin for tableau in restricted] == [1]


def test_verify_writes_reports(setup_teardown):
    lab = KSchurLab(report_dir=WORKING_DIR)
    reports = lab.verify(VerifyParam(suite="symfunc", size_max=1, ell_max=1))
    assert [r.suite for r in reports] == ["symfunc"]
    assert reports[0].ok
    with open(os.path.join(WORKING_DIR, "symfunc.json"), encoding="utf-8") as f:
        saved = SuiteReportModel.model_validate_json(f.read())
    assert saved.suite == "symfunc"
    assert saved.ok
