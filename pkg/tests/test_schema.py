import pytest
from pydantic import ValidationError

from nano_kschur._cores import enumerate_tableaux
from nano_kschur._schema import (
    BoundedPartitionModel,
    CaseFailureModel,
    CatalanEvaluationModel,
    CoreModel,
    IndexedRootIdealModel,
    KExpansionModel,
    SuiteReportModel,
    SymFuncModel,
    TableauModel,
)
from nano_kschur._vertex import chl
from nano_kschur.base import Core, IndexedRootIdeal, KExpansion, RootIdeal, TPoly


def test_kexpansion_shape():
    expansion = KExpansion(4, {(3, 2, 2, 2): TPoly((0, 0, 1))})
    model = KExpansionModel.from_value(expansion)
    assert model.model_dump() == {
        "k": 4,
        "basis": "kschur",
        "terms": [{"partition": [3, 2, 2, 2], "coeff": [0, 0, 1]}],
    }
    assert KExpansionModel.model_validate_json(model.model_dump_json()).to_value() == expansion


def test_symfunc_terms_are_ordered():
    value = chl((0, 2))
    model = SymFuncModel.from_value(value)
    assert [term.partition for term in model.terms] == [[1, 1], [2]]
    assert model.terms[0].coeff == [-1, 1]
    assert model.to_value() == value


def test_validation():
    with pytest.raises(ValidationError):
        KExpansionModel(k=0)
    with pytest.raises(ValidationError):
        CoreModel(shape=[2, 1], n=1)
    with pytest.raises(ValidationError):
        SymFuncModel(basis="monomial")


def test_indexed_root_ideal():
    iri = IndexedRootIdeal(RootIdeal(3, (1, 1, 0)), (2, 1, -1))
    model = IndexedRootIdealModel.from_value(iri)
    assert model.rowcounts == [1, 1, 0]
    assert model.to_value() == iri


def test_tableau_chain_form():
    tableau = enumerate_tableaux((1, 1), 1, (1,))[0]
    model = TableauModel.from_value(tableau)
    dumped = model.model_dump()
    assert set(dumped) == {"outside", "covers"}
    assert dumped["outside"] == [2, 1]
    assert set(dumped["covers"][0]) == {"tau", "mark", "spin"}
    assert model.to_value(2, (1,)) == tableau
    assert model.to_value(2, (1,)).outside == Core((2, 1), 2)


def test_bounded_partition():
    model = BoundedPartitionModel.from_value((3, 2, 2, 2, 1), 4)
    assert model.model_dump() == {"partition": [3, 2, 2, 2, 1], "k": 4}
    assert model.to_value() == (3, 2, 2, 2, 1)
    with pytest.raises(ValidationError):
        BoundedPartitionModel(partition=[5, 1], k=4)


def test_catalan_evaluation():
    iri = IndexedRootIdeal(RootIdeal(2, (0, 0)), (0, 2))
    model = CatalanEvaluationModel(
        ideal=IndexedRootIdealModel.from_value(iri),
        value=SymFuncModel.from_value(chl((0, 2))),
    )
    again = CatalanEvaluationModel.model_validate_json(model.model_dump_json())
    assert again.ideal.to_value() == iri
    assert again.value.to_value() == chl((0, 2))
    assert not again.t1


def test_suite_report():
    report = SuiteReportModel(suite="symfunc", cases=2, passed=2)
    assert report.ok
    report.failures.append(CaseFailureModel(case="omega ()", detail="got 0"))
    assert not report.ok
