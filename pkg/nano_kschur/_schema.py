from typing import Iterable, Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator

from .base import (
    Core,
    IndexedRootIdeal,
    KExpansion,
    RootIdeal,
    StrongMarkedCover,
    StrongMarkedTableau,
    SymFunc,
    TPoly,
)


class TermModel(BaseModel):
    partition: list[int] = Field(..., description="Basis index, a partition without trailing zeros.")
    coeff: list[int] = Field(
        ..., description="Coefficients of the polynomial in t, constant term first."
    )


def _terms(combination) -> list[TermModel]:
    return [
        TermModel(partition=list(key), coeff=list(c.coeffs))
        for key, c in combination.sorted_items()
    ]


class SymFuncModel(BaseModel):
    basis: Literal["schur"] = "schur"
    terms: list[TermModel] = Field(default_factory=list)

    @classmethod
    def from_value(cls, f: SymFunc) -> "SymFuncModel":
        return cls(terms=_terms(f))

    def to_value(self) -> SymFunc:
        return SymFunc([(tuple(t.partition), TPoly(tuple(t.coeff))) for t in self.terms])


class KExpansionModel(BaseModel):
    k: int = Field(..., ge=1)
    basis: Literal["kschur"] = "kschur"
    terms: list[TermModel] = Field(default_factory=list)

    @classmethod
    def from_value(cls, expansion: KExpansion) -> "KExpansionModel":
        return cls(k=expansion.k, terms=_terms(expansion))

    def to_value(self) -> KExpansion:
        return KExpansion(
            self.k, [(tuple(t.partition), TPoly(tuple(t.coeff))) for t in self.terms]
        )


class IndexedRootIdealModel(BaseModel):
    ell: int = Field(..., ge=1)
    rowcounts: list[int] = Field(..., description="Number of roots in each row of the ideal.")
    gamma: list[int]

    @classmethod
    def from_value(cls, iri: IndexedRootIdeal) -> "IndexedRootIdealModel":
        return cls(ell=iri.ell, rowcounts=list(iri.psi.rowcounts), gamma=list(iri.gamma))

    def to_value(self) -> IndexedRootIdeal:
        return IndexedRootIdeal(RootIdeal(self.ell, tuple(self.rowcounts)), tuple(self.gamma))


class CoreModel(BaseModel):
    shape: list[int]
    n: int = Field(..., ge=2, description="No box of the shape has hook length n.")

    @classmethod
    def from_value(cls, kappa: Core) -> "CoreModel":
        return cls(shape=list(kappa.shape), n=kappa.n)

    def to_value(self) -> Core:
        return Core(tuple(self.shape), self.n)


class BoundedPartitionModel(BaseModel):
    partition: list[int] = Field(..., description="Parts, each at most k.")
    k: int = Field(..., ge=1)

    @model_validator(mode="after")
    def _check_bound(self):
        if any(p > self.k for p in self.partition):
            raise ValueError(f"{self.partition} has a part larger than k={self.k}")
        return self

    @classmethod
    def from_value(cls, lam: Iterable[int], k: int) -> "BoundedPartitionModel":
        return cls(partition=list(lam), k=k)

    def to_value(self) -> tuple[int, ...]:
        return tuple(self.partition)


class CatalanEvaluationModel(BaseModel):
    ideal: IndexedRootIdealModel
    t1: bool = Field(False, description="Whether t was specialized to 1.")
    value: SymFuncModel


class ChainCoverModel(BaseModel):
    tau: list[int] = Field(..., description="Shape of the core below the cover.")
    mark: int = Field(..., ge=1)
    spin: int = Field(..., ge=0)


class TableauModel(BaseModel):
    """Chain form: the outer core and its covers from the inside out.

    ``n`` and the weight are not part of the chain, ``to_value`` takes them back.
    """

    outside: list[int]
    covers: list[ChainCoverModel] = Field(default_factory=list)

    @classmethod
    def from_value(cls, tableau: StrongMarkedTableau) -> "TableauModel":
        return cls(
            outside=list(tableau.outside.shape),
            covers=[
                ChainCoverModel(tau=list(c.tau.shape), mark=c.mark, spin=c.spin)
                for c in tableau.covers
            ],
        )

    def to_value(
        self, n: int, eta: Iterable[int], vertical: bool = False
    ) -> StrongMarkedTableau:
        cores = [Core(tuple(c.tau), n) for c in self.covers] + [Core(tuple(self.outside), n)]
        covers = tuple(
            StrongMarkedCover(cores[i], cores[i + 1], c.mark, c.spin)
            for i, c in enumerate(self.covers)
        )
        return StrongMarkedTableau(
            outside=cores[-1], covers=covers, eta=tuple(eta), vertical=vertical
        )


class CaseFailureModel(BaseModel):
    case: str
    detail: str


class SuiteReportModel(BaseModel):
    suite: str
    cases: int = Field(0, ge=0)
    passed: int = Field(0, ge=0)
    failures: list[CaseFailureModel] = Field(default_factory=list)
    params: dict[str, Union[int, str, bool]] = Field(default_factory=dict)
    seconds: Optional[float] = None

    @property
    def ok(self) -> bool:
        return not self.failures
