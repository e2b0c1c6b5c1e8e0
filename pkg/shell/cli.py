"""
Command-line interface.

Reports go to stdout as JSON lines, one per check; a short summary and
all logs go to stderr.

Exit codes:
    0  every requested check passes
    1  at least one check fails
    2  usage error
    3  unknown reference (structure or example name)
    4  malformed spec file
    5  a rigidity hypothesis fails
    6  another precondition fails
"""

import argparse
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from loguru import logger
from pydantic import BaseModel

from config.logging import configure_logging
from config.settings import settings
from data.schemas import PlethysmSummary
from entwine.antipode import solve_antipode
from entwine.diagrams import check_bimonad, check_compatible, check_delta_law, check_entwining, check_m_law
from entwine.structures import EntwinedTriple, Entwining
from exactla import PreconditionError
from opcore.checks import check_cooperad, check_operad
from rigidity.comparison import comparison_K
from rigidity.morphisms import phi_report
from rigidity.primitives import primitives, primitives_report
from rigidity.verify import HypothesisError, rigidity_verify
from shell.library import BUILTIN_EXAMPLES, build_infinitesimal, builtin_spec
from shell.loader import JSONSpecPersistence, LoadedSpec, SpecLoadError, UnknownReferenceError, load_spec, serialize
from species.plethysm import plethysm_index

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_UNKNOWN_REF = 3
EXIT_MALFORMED = 4
EXIT_HYPOTHESIS = 5
EXIT_PRECONDITION = 6

Outcome = Tuple[List[BaseModel], bool]


def spec_path(name: str) -> str:
    """A --file argument as given, or under the fixtures directory when only the name matches there."""
    if Path(name).exists():
        return name
    candidate = Path(settings.fixtures_dir) / name
    return str(candidate) if candidate.exists() else name


class CommandContext:
    """Resolved flags of one invocation."""

    def __init__(self, args: argparse.Namespace, trunc: int, dim: int):
        self.args = args
        self.trunc = trunc
        self.dim = dim

    def structures(self, strict: bool, with_bialgebras: bool = False) -> LoadedSpec:
        """The spec file if --file was given, otherwise the built-in example."""
        if self.args.file:
            return load_spec(spec_path(self.args.file), strict=strict and not self.args.lenient)
        if self.args.example not in BUILTIN_EXAMPLES:
            raise UnknownReferenceError("example", self.args.example, "--example")
        return builtin_spec(self.args.example, self.trunc, self.dim if with_bialgebras else 0)

    def pick(self, loaded: LoadedSpec, kind: str):
        where = f"{self.args.command} {kind}"
        return loaded.lookup(kind, self.args.name, where) if self.args.name else loaded.only(kind, where)

    def triple(self, loaded: LoadedSpec) -> EntwinedTriple:
        ent = self.pick(loaded, "entwinings")
        if not isinstance(ent, EntwinedTriple):
            raise PreconditionError(f"{ent.name}: operad and cooperad must share one carrier")
        return ent


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _check_operad(ctx: CommandContext) -> Outcome:
    report = check_operad(ctx.pick(ctx.structures(strict=False), "operads"))
    return [report], report.passed


def _check_cooperad(ctx: CommandContext) -> Outcome:
    report = check_cooperad(ctx.pick(ctx.structures(strict=False), "cooperads"))
    return [report], report.passed


def _check_entwining(ctx: CommandContext) -> Outcome:
    report = check_entwining(ctx.pick(ctx.structures(strict=False), "entwinings"))
    return [report], report.passed


def _check_compatible(ctx: CommandContext) -> Outcome:
    report = check_compatible(ctx.triple(ctx.structures(strict=False)))
    return [report], report.passed


def _check_bimonad(ctx: CommandContext) -> Outcome:
    report = check_bimonad(ctx.triple(ctx.structures(strict=False)))
    return [report], report.passed


def _solve_antipode(ctx: CommandContext) -> Outcome:
    solution = solve_antipode(ctx.triple(ctx.structures(strict=settings.strict_load)))
    return [solution.report], solution.report.found


def _phi(ctx: CommandContext) -> Outcome:
    ent: Entwining = ctx.pick(ctx.structures(strict=settings.strict_load), "entwinings")
    report = phi_report(ent)
    return [report], report.h2iso


def _primitives(ctx: CommandContext) -> Outcome:
    b = ctx.pick(ctx.structures(strict=settings.strict_load, with_bialgebras=True), "bialgebras")
    return [primitives_report(b, primitives(b))], True


def _rigidity(ctx: CommandContext) -> Outcome:
    b = ctx.pick(ctx.structures(strict=settings.strict_load, with_bialgebras=True), "bialgebras")
    report = rigidity_verify(b)
    return [report], bool(report)


def _demo_infinitesimal(ctx: CommandContext) -> Outcome:
    """The whole pipeline on the infinitesimal triple and K(V)."""
    t = build_infinitesimal(ctx.trunc)
    reports: List[BaseModel] = [check_entwining(t), check_delta_law(t), check_m_law(t), check_bimonad(t)]
    reports.append(solve_antipode(t).report)
    reports.append(phi_report(t))
    b = comparison_K(t, ctx.dim, ctx.trunc)
    reports.append(primitives_report(b, primitives(b)))
    reports.append(rigidity_verify(b))
    return reports, all(bool(r) for r in reports)


def _dump(ctx: CommandContext) -> Outcome:
    model = serialize(ctx.structures(strict=False, with_bialgebras=True))
    if ctx.args.out:
        if not JSONSpecPersistence().save(model, ctx.args.out):
            raise SpecLoadError(f"could not write {ctx.args.out}")
        return [], True
    return [model], True


def _show(ctx: CommandContext) -> Outcome:
    loaded = ctx.structures(strict=False)
    outer_name = ctx.args.outer or ctx.args.name
    inner_name = ctx.args.inner or outer_name
    if outer_name:
        outer = loaded.lookup("sequences", outer_name, "show --outer")
        inner = loaded.lookup("sequences", inner_name, "show --inner")
    else:
        outer = inner = loaded.only("sequences", "show")
    index = plethysm_index(outer, inner)
    summary = PlethysmSummary(
        subject=f"{outer.name} o {inner.name}",
        checked_arity=outer.max_arity,
        dims=[index.dim(n) for n in range(1, outer.max_arity + 1)],
        labels={str(n): [label.render() for label in index.labels_at(n)] for n in range(1, outer.max_arity + 1)},
    )
    return [summary], True


COMMANDS: Dict[str, Tuple[Callable[[CommandContext], Outcome], str]] = {
    "check-operad": (_check_operad, "associativity and unit laws of an operad"),
    "check-cooperad": (_check_cooperad, "coassociativity and counit laws of a cooperad"),
    "check-entwining": (_check_entwining, "the four entwining diagrams and equivariance"),
    "check-compatible": (_check_compatible, "compatibility of a single-carrier triple"),
    "check-bimonad": (_check_bimonad, "bimonad conditions of a single-carrier triple"),
    "solve-antipode": (_solve_antipode, "solve for an antipode arity by arity"),
    "primitives": (_primitives, "primitive part of a bialgebra"),
    "phi": (_phi, "the comparison map phi : A -> C"),
    "rigidity": (_rigidity, "free-and-cofree reconstruction from primitives"),
    "demo-infinitesimal": (_demo_infinitesimal, "full pipeline on the infinitesimal triple"),
    "dump": (_dump, "write a built-in example or a loaded file as a spec file"),
    "show": (_show, "plethysm dimensions and canonical labels"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entwine-cli",
        description="Exact checks for operads, cooperads, entwinings and their bialgebras",
        epilog="exit codes: 0 pass, 1 fail, 2 usage, 3 unknown reference, 4 malformed spec file, "
               "5 hypothesis failure, 6 precondition failure",
    )
    parser.add_argument("--log-level", default=None, help=f"Log level (default: {settings.log_level})")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--dim", type=int, default=None,
                         help=f"Dimension of the generating space V (default: {settings.default_dim})")
        cmd.add_argument("--trunc", type=int, default=None,
                         help=f"Truncation arity N (default: {settings.default_trunc}, at most {settings.max_trunc})")
        cmd.add_argument("--file", default=None, help="Spec file; built-in example otherwise")
        cmd.add_argument("--example", default="infinitesimal", help=f"Built-in example: {', '.join(BUILTIN_EXAMPLES)}")
        cmd.add_argument("--name", default=None, help="Structure to use when the source holds several")
        cmd.add_argument("--lenient", action="store_true", help="Load failing structures with warnings")
        if name == "dump":
            cmd.add_argument("--out", default=None, help="Write the spec file here instead of stdout")
        if name == "show":
            cmd.add_argument("--outer", default=None, help="Outer sequence")
            cmd.add_argument("--inner", default=None, help="Inner sequence (default: the outer one)")
    return parser


def _emit(reports: List[BaseModel]):
    for report in reports:
        sys.stdout.write(report.model_dump_json(by_alias=True, indent=settings.report_indent))
        sys.stdout.write("\n")
    sys.stdout.flush()


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level or settings.log_level)
    trunc = args.trunc if args.trunc is not None else settings.default_trunc
    dim = args.dim if args.dim is not None else settings.default_dim
    if trunc < 1 or trunc > settings.max_trunc:
        parser.error(f"--trunc must lie in 1..{settings.max_trunc}")
    if dim < 1:
        parser.error("--dim must be positive")
    handler, _ = COMMANDS[args.command]
    try:
        reports, ok = handler(CommandContext(args, trunc, dim))
    except UnknownReferenceError as e:
        logger.error(str(e))
        return EXIT_UNKNOWN_REF
    except SpecLoadError as e:
        logger.error(str(e))
        return EXIT_MALFORMED
    except HypothesisError as e:
        logger.error(str(e))
        if e.report is not None:
            _emit([e.report])
        return EXIT_HYPOTHESIS
    except PreconditionError as e:
        logger.error(str(e))
        return EXIT_PRECONDITION
    _emit(reports)
    print(f"{args.command}: {'PASS' if ok else 'FAIL'} ({len(reports)} reports)", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
