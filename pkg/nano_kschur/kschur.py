import asyncio
import os
from dataclasses import asdict, dataclass
from typing import Iterable, Optional

from ._catalan import catalan_chl, catalan_series, catalan_t1
from ._cores import enumerate_tableaux, to_bounded, to_core
from ._kschur import (
    branch,
    horizontal_pieri,
    kschur,
    partial_restriction,
    schur_expand,
    straighten,
    vertical_pieri,
)
from ._schema import SuiteReportModel
from ._utils import always_get_an_event_loop, logger, write_json
from ._verify import run_suite, suite_names
from .base import (
    Core,
    IndexedRootIdeal,
    KExpansion,
    RootIdeal,
    StrongMarkedTableau,
    SymFunc,
    VerifyParam,
)


@dataclass
class KSchurLab:
    # evaluation
    catalan_evaluator: str = "chl"
    expand_via: str = "catalan"

    # verification
    verify_max_async: int = 4
    report_dir: Optional[str] = None

    def __post_init__(self):
        _print_config = ",\n  ".join([f"{k} = {v}" for k, v in asdict(self).items()])
        logger.debug(f"KSchurLab init with param:\n\n  {_print_config}\n")

        self._evaluators = {
            "chl": catalan_chl,
            "series": catalan_series,
        }
        if self.catalan_evaluator not in self._evaluators:
            raise ValueError(f"Unknown catalan evaluator {self.catalan_evaluator}")
        if self.expand_via not in ("catalan", "tableaux", "branching"):
            raise ValueError(f"Unknown expansion route {self.expand_via}")
        if self.report_dir is not None and not os.path.exists(self.report_dir):
            logger.info(f"Creating report directory {self.report_dir}")
            os.makedirs(self.report_dir)

    @property
    def evaluator(self):
        return self._evaluators[self.catalan_evaluator]

    # Catalan functions ---------------------------------------------------------------
    def catalan(
        self, ell: int, rowcounts: Iterable[int], gamma: Iterable[int], t1: bool = False
    ) -> SymFunc:
        iri = IndexedRootIdeal(RootIdeal(ell, tuple(rowcounts)), tuple(gamma))
        if t1:
            return catalan_t1(iri)
        return self.evaluator(iri)

    def kschur(self, mu: Iterable[int], k: int) -> SymFunc:
        return kschur(tuple(mu), k, self.evaluator)

    # Expansions ------------------------------------------------------------------------
    def expand(self, mu: Iterable[int], k: int, via: Optional[str] = None) -> SymFunc:
        loop = always_get_an_event_loop()
        return loop.run_until_complete(self.aexpand(mu, k, via))

    async def aexpand(self, mu: Iterable[int], k: int, via: Optional[str] = None) -> SymFunc:
        via = via or self.expand_via
        mu = tuple(mu)
        loop = asyncio.get_running_loop()
        if via == "catalan":
            return await loop.run_in_executor(None, self.kschur, mu, k)
        if via in ("tableaux", "branching"):
            return await loop.run_in_executor(None, schur_expand, mu, k, None, via)
        raise ValueError(f"Unknown expansion route {via}")

    def branch(self, mu: Iterable[int], k: int) -> KExpansion:
        return branch(tuple(mu), k)

    def pieri(
        self,
        mu: Iterable[int],
        k: int,
        d: int,
        direction: str = "vertical",
        max_mark: Optional[int] = None,
    ) -> KExpansion:
        mu = tuple(mu)
        if direction == "vertical":
            if max_mark is not None:
                return partial_restriction(mu, k, d, max_mark)
            return vertical_pieri(mu, k, d)
        if direction == "horizontal":
            if max_mark is not None:
                raise ValueError("--max-mark only restricts the vertical rule")
            return horizontal_pieri(mu, k, d)
        raise ValueError(f"Unknown Pieri direction {direction}")

    def straighten(self, lam: Iterable[int], z: int, k: int) -> KExpansion:
        return straighten(tuple(lam), z, k)

    # Cores and tableaux ----------------------------------------------------------------
    def to_core(self, shape: Iterable[int], k: int) -> Core:
        return to_core(tuple(shape), k)

    def to_bounded(self, shape: Iterable[int], k: int) -> tuple[int, ...]:
        return to_bounded(Core(tuple(shape), k + 1))

    def tableaux(
        self,
        outside: Iterable[int],
        k: int,
        weight: Iterable[int],
        vertical: bool = False,
        max_mark: Optional[int] = None,
    ) -> list[StrongMarkedTableau]:
        found = enumerate_tableaux(tuple(outside), k, tuple(weight), vertical=vertical)
        if max_mark is not None:
            found = [T for T in found if all(m <= max_mark for m in T.marks)]
        return found

    # Verification ----------------------------------------------------------------------
    def verify(self, param: VerifyParam = VerifyParam()) -> list[SuiteReportModel]:
        loop = always_get_an_event_loop()
        return loop.run_until_complete(self.averify(param))

    async def averify(self, param: VerifyParam = VerifyParam()) -> list[SuiteReportModel]:
        reports = []
        for name in suite_names(param.suite):
            report = await run_suite(name, param, max_async=self.verify_max_async)
            reports.append(report)
            if self.report_dir is not None:
                path = os.path.join(self.report_dir, f"{name}.json")
                write_json(report.model_dump(), path)
                logger.info(f"Wrote {name} report to {path}")
            if param.stop_on_failure and not report.ok:
                logger.warning(f"Stopping after failed suite {name}")
                break
        return reports
