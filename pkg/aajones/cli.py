from dotenv import load_dotenv

load_dotenv()

import argparse  # noqa: E402
import logging  # noqa: E402
import sys  # noqa: E402
from dataclasses import replace  # noqa: E402
from importlib import resources  # noqa: E402
from pathlib import Path  # noqa: E402
from typing import List, Optional  # noqa: E402

from aajones import __version__  # noqa: E402
from aajones.aa import DiagramClass, find_dealternators  # noqa: E402
from aajones.batch import BatchRunner, analyze_diagram  # noqa: E402
from aajones.cache import open_cache  # noqa: E402
from aajones.checkerboard import dump, graph_stats, simplify, tait_graphs  # noqa: E402
from aajones.config import Settings, load_settings  # noqa: E402
from aajones.diagram import (  # noqa: E402
    LinkDiagram,
    is_alternating,
    parse_pd,
    require_connected,
    serialize,
)
from aajones.errors import AAJonesError, ParseError  # noqa: E402
from aajones.families import family_graph  # noqa: E402
from aajones.kauffman import (  # noqa: E402
    is_a_adequate,
    is_b_adequate,
    state_counts,
    turaev_genus,
)
from aajones.schemas import (  # noqa: E402
    DiagramReport,
    ErrorModel,
    FamilyReport,
    RunReport,
    StatsModel,
    TaitGraphModel,
    TaitReport,
    TuraevReport,
)

logger = logging.getLogger(__name__)

# exit codes of the aa command, by diagram class
AA_EXIT_CODES = {
    DiagramClass.AA_STRONGLY_REDUCED.value: 0,
    DiagramClass.ALTERNATING.value: 10,
    DiagramClass.AA_NOT_STRONGLY_REDUCED.value: 11,
    DiagramClass.NOT_AA.value: 12,
}

# labels that are scalars, by family id; every other label is a vector
_SCALAR_LABELS = {1: {"c"}, 2: {"c"}, 3: {"c"}, 4: {"a"}, 5: set(), 6: {"a", "b"}, 7: {"a"}}


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="aajones",
        description="aajones - Jones polynomials and almost alternating diagram analytics",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--debug", "-d", action="store_true", help="Enable debug mode")
    parser.add_argument("--config", type=str, default=None, help="Settings YAML file (default: ./aajones.yaml)")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print a JSON report instead of text")
    common.add_argument("--cap", type=int, default=None, help="Largest crossing number to enumerate (default: 24)")
    common.add_argument("--cache", type=str, default=None, help="Directory of the bracket cache")
    common.add_argument("--no-progress", action="store_true", help="Hide progress bars")

    diagram = argparse.ArgumentParser(add_help=False, parents=[common])
    diagram.add_argument("pd", help="PD text, a file containing it, or - for stdin")
    diagram.add_argument(
        "--reverse",
        type=str,
        default=None,
        help='Comma separated 0-based component indices to reverse (e.g. "0,2")',
    )

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("jones", parents=[diagram], help="Kauffman bracket and Jones polynomial")
    sub.add_parser("aa", parents=[diagram], help="Classify and report on an almost alternating diagram")
    sub.add_parser("tait", parents=[diagram], help="Dump both checkerboard graphs and their stats")
    sub.add_parser("turaev", parents=[diagram], help="All-A and all-B loop counts and Turaev genus")

    batch = sub.add_parser("batch", parents=[common], help="Analyze every row of a CSV fixture table")
    batch.add_argument(
        "csv",
        nargs="?",
        default=None,
        help="CSV with columns name, pd[, expected_jones, tags] (default: packaged fixtures)",
    )
    batch.add_argument("--check", action="store_true", help="Compare against expected_jones; exit 2 on mismatch")
    batch.add_argument("--parallel", type=int, default=1, help="Records analyzed concurrently (default: 1)")

    families = sub.add_parser("families", parents=[common], help="Statistics of a Family 1-7 graph")
    families.add_argument("--id", type=int, required=True, dest="family_id", help="Family number 1-7")
    families.add_argument("--a", type=str, default=None, help='Label a, a scalar or a list like "1,2"')
    families.add_argument("--b", type=str, default=None, help="Label b, a scalar or a list")
    families.add_argument("--c", type=str, default=None, help="Label c, a scalar")

    return parser.parse_args(argv)


# -------------------------------- input helpers
def _int_list(name: str, text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ParseError(f"{name} must be comma separated integers, got {text!r}")


def read_pd_text(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if "X[" in arg or "loops=" in arg:
        return arg
    path = Path(arg)
    try:
        return path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ParseError(f"File not found: {path}")
    except OSError as e:
        raise ParseError(f"Cannot read {path}: {e}")


def load_diagram(args: argparse.Namespace) -> LinkDiagram:
    reverse = _int_list("--reverse", args.reverse) if args.reverse else ()
    return parse_pd(read_pd_text(args.pd), reverse=reverse)


def build_settings(args: argparse.Namespace) -> Settings:
    """Settings file and environment, then command-line flags."""
    settings = load_settings(args.config)
    overrides = {}
    if args.cap is not None:
        overrides["cap"] = args.cap
    if args.cache is not None:
        overrides["cache_dir"] = args.cache
    if args.no_progress:
        overrides["progress"] = False
    return replace(settings, **overrides).validate()


def _emit(model) -> None:
    print(model.model_dump_json(indent=2))


# -------------------------------- commands
def cmd_jones(args: argparse.Namespace, settings: Settings) -> int:
    d = load_diagram(args)
    report = analyze_diagram(d, settings, cache=open_cache(settings.cache_dir), include_aa=False)
    if args.json:
        _emit(RunReport(version=__version__, results=[report]))
    else:
        print(f"bracket: {report.bracket}")
        print(f"jones: {report.jones}")
    return 0


def _print_aa(report: DiagramReport) -> None:
    print(f"class: {report.classification}")
    print(f"jones: {report.jones}")
    if report.dasbach_lin is not None:
        dl = report.dasbach_lin
        print(f"first coefficients: {dl.gamma0} {dl.gamma1} {dl.gamma2} (from A^{dl.anchor})")
        print(f"last coefficients: {dl.gamma_cm2} {dl.gamma_cm1} {dl.gamma_c}")
    for cert in report.dealternators:
        note = "strongly reduced" if cert.strongly_reduced else cert.reason
        print(f"dealternator {cert.crossing}: {note}")
    aa = report.aa
    if aa is None:
        return
    low, high = aa.window
    print(f"alphas: {aa.alpha0} {aa.alpha1} {aa.alpha_cm4} {aa.alpha_cm3} (window A^{low}..A^{high})")
    for label, s in (("G", aa.stats), ("Gbar", aa.stats_bar)):
        print(
            f"{label}: v={s.v} e={s.e} mu={s.mu} tau={s.tau} beta1={s.beta1} "
            f"P={s.P} P0={s.P0} P1={s.P1} P2={s.P2} Q={s.Q} S={s.S}"
        )
    print(f"minimality: {aa.minimality}")
    print(f"sign: {aa.sign_verdict}")
    print(f"nontriviality: {aa.nontriviality}")
    print(f"turaev genus: {aa.turaev_genus}")
    print(f"span minimal: {'yes' if aa.span_minimal else 'no'}")


def cmd_aa(args: argparse.Namespace, settings: Settings) -> int:
    d = load_diagram(args)
    require_connected(d)
    report = analyze_diagram(d, settings, cache=open_cache(settings.cache_dir))
    if args.json:
        _emit(RunReport(version=__version__, results=[report]))
    else:
        _print_aa(report)
    return AA_EXIT_CODES[report.classification]


def cmd_tait(args: argparse.Namespace, settings: Settings) -> int:
    d = load_diagram(args)
    require_connected(d)
    dealternator = None
    if not is_alternating(d):
        certs = find_dealternators(d)
        if certs:
            dealternator = certs[0].crossing
    graphs = []
    for role, g in zip(("G", "Gbar"), tait_graphs(d, dealternator=dealternator)):
        simple = simplify(g)
        gs = graph_stats(simple)
        graphs.append(
            TaitGraphModel(
                role=role, shaded=g.shaded, dump=dump(g), v=gs.v, e=gs.e, mu=gs.mu,
                tau=gs.tau, beta1=gs.beta1, loops_removed=simple.loops_removed,
            )
        )
    report = TaitReport(version=__version__, pd=serialize(d), dealternator=dealternator, graphs=graphs)
    if args.json:
        _emit(report)
    else:
        for g in report.graphs:
            print(f"{g.role}: {g.dump}")
            print(f"  simplified: v={g.v} e={g.e} mu={g.mu} tau={g.tau} beta1={g.beta1} loops={g.loops_removed}")
    return 0


def cmd_turaev(args: argparse.Namespace, settings: Settings) -> int:
    d = load_diagram(args)
    s_a, s_b = state_counts(d)
    report = TuraevReport(
        version=__version__,
        pd=serialize(d),
        turaev_genus=turaev_genus(d),
        s_a=s_a,
        s_b=s_b,
        a_adequate=is_a_adequate(d),
        b_adequate=is_b_adequate(d),
    )
    if args.json:
        _emit(report)
    else:
        print(f"s_A: {report.s_a}")
        print(f"s_B: {report.s_b}")
        print(f"turaev genus: {report.turaev_genus}")
    return 0


def _default_fixtures() -> Path:
    return Path(str(resources.files("aajones") / "data" / "fixtures.csv"))


def cmd_batch(args: argparse.Namespace, settings: Settings) -> int:
    csv_path = Path(args.csv) if args.csv else _default_fixtures()
    runner = BatchRunner(settings, check=args.check, num_workers=args.parallel)
    return runner.run(csv_path)


def _family_label(family_id: int, name: str, text: Optional[str]):
    if text is None:
        return None
    values = _int_list(f"--{name}", text)
    if name in _SCALAR_LABELS.get(family_id, set()):
        if len(values) != 1:
            raise ParseError(f"label {name} of Family {family_id} is a single integer, got {text!r}")
        return values[0]
    return values


def cmd_families(args: argparse.Namespace, settings: Settings) -> int:
    labels = {name: _family_label(args.family_id, name, getattr(args, name)) for name in ("a", "b", "c")}
    graph = family_graph(args.family_id, **labels)
    gs, ps = graph.stats()
    report = FamilyReport(
        version=__version__,
        family=graph.family_id,
        params=graph.params,
        vertices=len(graph.positions),
        edges=len(graph.multi_edges()),
        stats=StatsModel.from_stats(gs, ps),
        identity_holds=graph.identity_holds(),
    )
    if args.json:
        _emit(report)
    else:
        s = report.stats
        print(f"family {report.family} {report.params}: {report.vertices} vertices, {report.edges} edges")
        print(
            f"v={s.v} e={s.e} mu={s.mu} tau={s.tau} beta1={s.beta1} "
            f"P={s.P} P0={s.P0} P1={s.P1} P2={s.P2} Q={s.Q} S={s.S}"
        )
        print(f"identity holds: {'yes' if report.identity_holds else 'no'}")
    return 0


COMMANDS = {
    "jones": cmd_jones,
    "aa": cmd_aa,
    "tait": cmd_tait,
    "turaev": cmd_turaev,
    "batch": cmd_batch,
    "families": cmd_families,
}


def run(args: argparse.Namespace) -> int:
    try:
        settings = build_settings(args)
        return COMMANDS[args.command](args, settings)
    except AAJonesError as e:
        if args.json:
            error = ErrorModel(type=type(e).__name__, message=str(e), exit_code=e.exit_code)
            print(error.model_dump_json(), file=sys.stderr)
        else:
            print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        logger.debug("command failed", exc_info=True)
        return e.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_args(argv)

    # Configure logging based on debug flag
    if args.debug:
        logging.basicConfig(
            level=logging.DEBUG,
            format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            datefmt="%H:%M:%S",
        )
    else:
        logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")

    try:
        return run(args)
    except KeyboardInterrupt:
        return 130
    except Exception as e:
        logging.error(f"Unexpected error: {e}", exc_info=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())
