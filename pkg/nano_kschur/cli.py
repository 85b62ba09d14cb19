"""Command-line front end: ``nano-kschur <group> <command> ...``."""

import argparse
import json
import logging
import sys
from typing import Optional

from ._cores import render_tableau, to_bounded
from ._schema import (
    BoundedPartitionModel,
    CatalanEvaluationModel,
    CoreModel,
    IndexedRootIdealModel,
    KExpansionModel,
    SymFuncModel,
    TableauModel,
)
from ._utils import format_int_list, logger, parse_int_list
from ._verify import SUITES
from .base import IndexedRootIdeal, KExpansion, RootIdeal, SymFunc, VerifyParam
from .kschur import KSchurLab

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFY_FAILED = 2


class CommandError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CommandError(f"{self.prog}: {message}")


def _int_list(content: str) -> tuple[int, ...]:
    try:
        return parse_int_list(content)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _render(value, fmt: str) -> str:
    if fmt == "json":
        if isinstance(value, SymFunc):
            return SymFuncModel.from_value(value).model_dump_json(indent=2)
        if isinstance(value, KExpansion):
            return KExpansionModel.from_value(value).model_dump_json(indent=2)
    return str(value)


# Handlers ----------------------------------------------------------------------------
def _kschur_expand(lab: KSchurLab, args):
    return _render(lab.expand(args.mu, args.k, args.via), args.format), EXIT_OK


def _kschur_branch(lab: KSchurLab, args):
    return _render(lab.branch(args.mu, args.k), args.format), EXIT_OK


def _kschur_pieri(lab: KSchurLab, args):
    expansion = lab.pieri(args.mu, args.k, args.d, args.direction, args.max_mark)
    return _render(expansion, args.format), EXIT_OK


def _kschur_straighten(lab: KSchurLab, args):
    return _render(lab.straighten(args.lam, args.z, args.k), args.format), EXIT_OK


def _catalan_eval(lab: KSchurLab, args):
    lab = KSchurLab(catalan_evaluator=args.via)
    value = lab.catalan(args.ell, args.rowcounts, args.gamma, t1=args.t1)
    if args.format == "json":
        model = CatalanEvaluationModel(
            ideal=IndexedRootIdealModel.from_value(
                IndexedRootIdeal(RootIdeal(args.ell, args.rowcounts), args.gamma)
            ),
            t1=args.t1,
            value=SymFuncModel.from_value(value),
        )
        return model.model_dump_json(indent=2), EXIT_OK
    return _render(value, args.format), EXIT_OK


def _cores_to_core(lab: KSchurLab, args):
    kappa = lab.to_core(args.shape, args.k)
    if args.format == "json":
        return CoreModel.from_value(kappa).model_dump_json(indent=2), EXIT_OK
    return format_int_list(kappa.shape), EXIT_OK


def _cores_to_bounded(lab: KSchurLab, args):
    lam = lab.to_bounded(args.shape, args.k)
    if args.format == "json":
        return BoundedPartitionModel.from_value(lam, args.k).model_dump_json(indent=2), EXIT_OK
    return format_int_list(lam), EXIT_OK


def _tableaux_enumerate(lab: KSchurLab, args):
    found = lab.tableaux(args.outside, args.k, args.weight, args.vertical, args.max_mark)
    if args.format == "json":
        return json.dumps([TableauModel.from_value(T).model_dump() for T in found], indent=2), EXIT_OK
    blocks = []
    for T in found:
        header = (
            f"# inside {format_int_list(to_bounded(T.inside))} "
            f"marks {format_int_list(T.marks)} spin {T.spin}"
        )
        blocks.append(f"{header}\n{render_tableau(T)}")
    blocks.append(f"{len(found)} tableaux")
    return "\n\n".join(blocks), EXIT_OK


def _verify(lab: KSchurLab, args):
    lab = KSchurLab(verify_max_async=args.max_async, report_dir=args.report)
    param = VerifyParam(
        suite=args.suite,
        k_max=args.k_max,
        size_max=args.size_max,
        ell_max=args.ell_max,
        stop_on_failure=args.stop_on_failure,
    )
    reports = lab.verify(param)
    status = EXIT_OK if all(r.ok for r in reports) else EXIT_VERIFY_FAILED
    if args.format == "json":
        return json.dumps([r.model_dump() for r in reports], indent=2), status
    lines = []
    for r in reports:
        verdict = "ok" if r.ok else "FAILED"
        lines.append(f"{r.suite}: {r.passed}/{r.cases} {verdict} ({r.seconds}s)")
        for failure in r.failures[:5]:
            lines.append(f"  {failure.case}: {failure.detail}")
    return "\n".join(lines), status


# Parser ------------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--verbose", action="store_true", help="log at DEBUG level")

    parser = _Parser(prog="nano-kschur", description="Graded k-Schur functions as Catalan functions")
    groups = parser.add_subparsers(dest="group", required=True)

    def leaf(sub, name, handler, help=None):
        command = sub.add_parser(name, parents=[common], help=help)
        command.set_defaults(handler=handler)
        return command

    kschur = groups.add_parser("kschur", help="k-Schur expansions")
    kschur_sub = kschur.add_subparsers(dest="command", required=True)

    expand = leaf(kschur_sub, "expand", _kschur_expand, "Schur expansion")
    expand.add_argument("--k", type=int, required=True)
    expand.add_argument("--mu", type=_int_list, required=True)
    expand.add_argument("--via", choices=["catalan", "tableaux", "branching"], default=None)

    br = leaf(kschur_sub, "branch", _kschur_branch, "expand in the (k+1)-Schur basis")
    br.add_argument("--k", type=int, required=True)
    br.add_argument("--mu", type=_int_list, required=True)

    pieri = leaf(kschur_sub, "pieri", _kschur_pieri, "dual Pieri rules")
    pieri.add_argument("--k", type=int, required=True)
    pieri.add_argument("--mu", type=_int_list, required=True)
    pieri.add_argument("--d", type=int, required=True)
    pieri.add_argument("--direction", choices=["vertical", "horizontal"], default="vertical")
    pieri.add_argument("--max-mark", type=int, default=None)

    st = leaf(kschur_sub, "straighten", _kschur_straighten, "straighten lambda - e_z")
    st.add_argument("--k", type=int, required=True)
    st.add_argument("--lambda", dest="lam", type=_int_list, required=True)
    st.add_argument("--z", type=int, required=True)

    catalan = groups.add_parser("catalan", help="Catalan functions")
    catalan_sub = catalan.add_subparsers(dest="command", required=True)
    ev = leaf(catalan_sub, "eval", _catalan_eval, "evaluate H(psi; gamma)")
    ev.add_argument("--ell", type=int, required=True)
    ev.add_argument("--rowcounts", type=_int_list, required=True)
    ev.add_argument("--gamma", type=_int_list, required=True)
    ev.add_argument("--t1", action="store_true", help="specialize at t = 1")
    ev.add_argument("--via", choices=["chl", "series"], default="chl")

    cores = groups.add_parser("cores", help="cores and bounded partitions")
    cores_sub = cores.add_subparsers(dest="command", required=True)
    for name, handler in (("to-core", _cores_to_core), ("to-bounded", _cores_to_bounded)):
        conv = leaf(cores_sub, name, handler)
        conv.add_argument("--k", type=int, required=True)
        conv.add_argument("--shape", type=_int_list, required=True)

    tableaux = groups.add_parser("tableaux", help="strong marked tableaux")
    tableaux_sub = tableaux.add_subparsers(dest="command", required=True)
    en = leaf(tableaux_sub, "enumerate", _tableaux_enumerate)
    en.add_argument("--k", type=int, required=True)
    en.add_argument("--outside", type=_int_list, required=True)
    en.add_argument("--weight", type=_int_list, required=True)
    en.add_argument("--vertical", action="store_true")
    en.add_argument("--max-mark", type=int, default=None)

    verify = leaf(groups, "verify", _verify, "run the identity suites")
    verify.add_argument("--suite", choices=["all"] + list(SUITES), default="all")
    ranges = "default: the suite's own range"
    verify.add_argument("--k-max", type=int, default=None, help=ranges)
    verify.add_argument("--size-max", type=int, default=None, help=ranges)
    verify.add_argument("--ell-max", type=int, default=None, help=ranges)
    verify.add_argument("--max-async", type=int, default=4)
    verify.add_argument("--report", default=None, help="directory for JSON reports")
    verify.add_argument("--stop-on-failure", action="store_true")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except CommandError as e:
        logging.basicConfig(level=logging.WARNING)
        parser.print_usage(sys.stderr)
        logger.error(str(e))
        return EXIT_INVALID
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s:%(name)s:%(message)s",
    )
    try:
        output, status = args.handler(KSchurLab(), args)
    except ValueError as e:
        logger.error(str(e))
        return EXIT_INVALID
    print(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
