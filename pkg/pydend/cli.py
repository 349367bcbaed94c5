import argparse
import csv
import io
import json
import logging
import sys
import typing as t

from pydantic import ValidationError

from . import __version__
from .algebra_config import load_algebra_conf
from .algebra_config.dict import _validation_message
from .envelope import audit_pmap_relations, quotient_dims, relation_ideal
from .exception import ConfigException, DendException, GateException
from .field import PrimeField
from .freedend import FreeDendriform
from .laws import SUITE_ALL, LawAbstract, SamplingPlan, resolve_suite, suite_names
from .models import RunConfig
from .search import search_aybe, search_rota_baxter
from .structures.abstract import PMap, VectorOps
from .trees import free_dimension


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

# laws sampling (x, y) pairs through pmap_pairs
PMAP_PLAN_LAWS = frozenset(["restricted-lie", "restricted-prelie", "functor-squares", "operators", "dzhumadildaev"])


class CommandResult:
    """
    What a subcommand produced: the rendered report and the exit status.
    """

    _text: str
    _status: int

    def __init__(self, text: str, status: int = EXIT_OK):
        self._text = text
        self._status = status

    @property
    def text(self) -> str:
        return self._text

    @property
    def status(self) -> int:
        return self._status


def _dumps(data: t.Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _csv(columns: t.List[str], rows: t.Iterable[t.Dict[str, t.Any]]) -> str:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return out.getvalue()


def _plans(config: RunConfig, free: bool) -> t.Tuple[SamplingPlan, SamplingPlan]:
    """
    (plan for multilinear laws, plan for p-map laws)
    """
    max_degree = config.d if free else None
    if config.random is not None:
        plan = SamplingPlan.random(config.random, config.seed, max_degree)
        return plan, SamplingPlan.random(config.random, config.seed, max_degree)
    multilinear = SamplingPlan.exhaustive(max_degree).set_seed(config.seed)
    pmap_plan = SamplingPlan.exhaustive(max_degree).set_seed(config.seed).set_count(config.samples)
    if free:
        pmap_plan.set_x_degree(1).set_y_max_degree(config.d)
    return multilinear, pmap_plan


def _verify_target(config: RunConfig) -> t.Tuple[VectorOps, t.Dict[str, PMap], str, str]:
    """
    (structure, available p-maps, default p-map, description)
    """
    if config.free:
        free = FreeDendriform(PrimeField(config.p), config.g)
        return free, {"star-power": free.star_power}, "star-power", f"Dend(g={config.g}) over F_{config.p}"
    if config.algebra is None:
        raise ConfigException("verify needs --free or --algebra")
    conf = load_algebra_conf(config.algebra, config.p)
    if conf.is_prelie():
        data = conf.find_prelie()
        pmaps: t.Dict[str, PMap] = {"table": data.pmap_of} if data.has_pmap() else {}
        return data.table, pmaps, "table", f"pre-Lie algebra {conf.source}"
    structure = conf.get_structure()
    return structure, conf.get_pmaps(structure), "star-power", f"{structure.tag} structure on {conf.source}"


def cmd_verify(config: RunConfig) -> CommandResult:
    structure, pmaps, default_pmap, description = _verify_target(config)
    pmap_name = config.pmap or default_pmap
    pmap = pmaps.get(pmap_name)
    if config.pmap is not None and pmap is None:
        raise ConfigException(f"p-map {config.pmap} is not available here (available: {', '.join(sorted(pmaps))})")

    laws: t.List[LawAbstract] = []
    for law in resolve_suite(config.suite):
        if not law.can_verify(structure):
            if config.suite != SUITE_ALL:
                raise ConfigException(f"Suite {law.name} does not apply to {description}")
            continue
        if law.needs_pmap and pmap is None:
            if config.suite != SUITE_ALL:
                raise ConfigException(f"Suite {law.name} requires a p-map")
            logger.warning("Skipping %s: no p-map available", law.name)
            continue
        laws.append(law)

    multilinear, pmap_plan = _plans(config, config.free)
    reports = []
    for law in laws:
        plan = pmap_plan if law.name in PMAP_PLAN_LAWS else multilinear
        reports.append(law.verify(structure, plan, pmap if law.name in PMAP_PLAN_LAWS else None))
    passed = all(report.passed() for report in reports)

    if config.format == "csv":
        text = _csv(
            ["law", "verdict", "checked", "violations", "seed"],
            (
                {
                    "law": r.get_law(),
                    "verdict": r.verdict,
                    "checked": r.get_checked(),
                    "violations": r.get_violations(),
                    "seed": config.seed,
                }
                for r in reports
            ),
        )
    else:
        text = _dumps(
            {
                "structure": description,
                "suite": config.suite,
                "pmap": pmap_name if pmap is not None else None,
                "seed": config.seed,
                "verdict": "pass" if passed else "fail",
                "reports": [r.to_dict() for r in reports],
            }
        )
    return CommandResult(text, EXIT_OK if passed else EXIT_FAILED)


def cmd_envelope(config: RunConfig) -> CommandResult:
    if config.algebra is None:
        raise ConfigException("envelope needs --algebra with a pre-Lie file")
    conf = load_algebra_conf(config.algebra, config.p)
    if not conf.is_prelie():
        raise ConfigException(f"{conf.source} is not a pre-Lie algebra")
    data = conf.find_prelie()
    if config.restricted and not data.has_pmap():
        raise ConfigException("--restricted needs a p-map table in the pre-Lie file")

    report = quotient_dims(data, config.d, config.restricted, config.check_stability)
    if config.restricted and config.audit and data.dim:
        if config.d < data.p:
            logger.warning("Skipping the p-map audit: truncation %d is below p = %d", config.d, data.p)
        else:
            span = relation_ideal(data, config.d, restricted=True)
            report.set_audit(audit_pmap_relations(data, config.d, config.audit, config.seed, span))
    status = EXIT_OK if report.audit_passed() else EXIT_FAILED

    if config.format == "csv":
        return CommandResult(report.to_csv(), status)
    payload = report.to_dict()
    payload["seed"] = config.seed
    return CommandResult(_dumps(payload), status)


def cmd_search(config: RunConfig) -> CommandResult:
    if config.algebra is None:
        raise ConfigException("search needs --algebra")
    conf = load_algebra_conf(config.algebra, config.p)
    algebra = conf.find_algebra()
    search = search_rota_baxter if config.kind == "rota-baxter" else search_aybe
    result = search(algebra, config.max_candidates, config.random, config.seed)
    if config.format == "csv":
        key = "matrix" if config.kind == "rota-baxter" else "summands"
        text = _csv([key], ({key: json.dumps(hit[key])} for hit in result["solutions"]))
        return CommandResult(text)
    return CommandResult(_dumps(result))


def cmd_dims(config: RunConfig) -> CommandResult:
    rows = []
    cumulative = 0
    for n in range(1, config.d + 1):
        dim = free_dimension(n, config.g)
        cumulative += dim
        rows.append({"n": n, "free_dim": dim, "cumulative_free": cumulative})
    if config.format == "csv":
        return CommandResult(_csv(["n", "free_dim", "cumulative_free"], rows))
    return CommandResult(_dumps({"g": config.g, "d": config.d, "rows": rows}))


COMMANDS: t.Dict[str, t.Callable[[RunConfig], CommandResult]] = {
    "verify": cmd_verify,
    "envelope": cmd_envelope,
    "search": cmd_search,
    "dims": cmd_dims,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", type=int, default=2, help="characteristic (default: 2)")
    common.add_argument("-g", type=int, default=1, help="generators of the free algebra (default: 1)")
    common.add_argument("-d", type=int, default=3, help="degree bound or truncation (default: 3)")
    common.add_argument("--seed", type=int, default=0, help="seed of every random draw (default: 0)")
    common.add_argument("--samples", type=int, default=200, help="random pairs per p-map law (default: 200)")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("-o", "--output", default=None, help="output path (default: stdout)")
    common.add_argument(
        "--algebra",
        default=None,
        help="algebra JSON file, fixture name or built-in algebra (m2, m3, t2, t3, x2, x3, zero)",
    )
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings only")

    parser = argparse.ArgumentParser(prog="pydend", description="Exact dendriform and pre-Lie algebra checks over F_p.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="run a law suite")
    verify.add_argument("--suite", choices=suite_names(), default=SUITE_ALL)
    verify.add_argument("--free", action="store_true", help="use the free dendriform algebra on g generators")
    verify.add_argument("--pmap", choices=["frobenius", "table", "star-power", "algebra-power"], default=None)
    verify.add_argument("--random", type=int, default=None, help="seeded random plan of N tuples")

    envelope = sub.add_parser("envelope", parents=[common], help="filtered dimensions of U(P) or U_p(P)")
    envelope.add_argument("--restricted", action="store_true", help="use the p-map relations as well")
    envelope.add_argument("--check-stability", action="store_true", help="compare against truncation d+1")
    envelope.add_argument("--audit", type=int, default=50, help="random elements in the p-map audit (default: 50)")

    search = sub.add_parser("search", parents=[common], help="brute-force Rota-Baxter or AYBE search")
    search.add_argument("--kind", choices=["rota-baxter", "aybe"], default="rota-baxter")
    search.add_argument("--random", type=int, default=None, help="random candidates when over the cap")
    search.add_argument("--max-candidates", type=int, default=20000)

    sub.add_parser("dims", parents=[common], help="graded dimensions of the free dendriform algebra")
    return parser


def parse_config(argv: t.Optional[t.Sequence[str]] = None) -> t.Tuple[RunConfig, int]:
    args = vars(build_parser().parse_args(argv))
    level = logging.DEBUG if args.pop("verbose") else (logging.WARNING if args.pop("quiet") else logging.INFO)
    args.pop("quiet", None)
    try:
        return RunConfig(**{k: v for k, v in args.items() if v is not None}), level
    except ValidationError as e:
        raise ConfigException(f"Invalid arguments: {_validation_message(e)}") from e


def write_output(text: str, path: t.Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as out:
        out.write(text)


def main(argv: t.Optional[t.Sequence[str]] = None) -> int:
    try:
        config, level = parse_config(argv)
    except ConfigException as e:
        logging.basicConfig(stream=sys.stderr, level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
        logger.error("%s", e)
        return EXIT_INPUT
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        result = COMMANDS[config.command](config)
    except GateException as e:
        logger.error("%s", e)
        write_output(_dumps(e.report.to_dict()), config.output)
        return EXIT_FAILED
    except DendException as e:
        logger.error("%s", e)
        return EXIT_INPUT
    write_output(result.text, config.output)
    return result.status


if __name__ == "__main__":
    sys.exit(main())
