import typing as t

from ..exception import ConfigException
from ..structures.abstract import PMap
from .abstract import LawAbstract
from .dendriform import DendriformLaw
from .dzhumadildaev import DzhumadildaevLaw, dzhumadildaev_power
from .functor_squares import FunctorSquaresLaw
from .operators import OperatorIdentitiesLaw
from .prelie import PreLieLaw
from .report import LawReport, PlanMode, SamplingPlan, Verdict
from .restricted_lie import RestrictedLieLaw
from .restricted_prelie import RestrictedPreLieLaw
from .zinbiel import ZinbielLaw


SUITE_ALL = "all"


def get_laws() -> t.Dict[str, LawAbstract]:
    laws: t.List[LawAbstract] = [
        DendriformLaw(),
        PreLieLaw(),
        ZinbielLaw(),
        RestrictedLieLaw(),
        RestrictedPreLieLaw(),
        FunctorSquaresLaw(),
        OperatorIdentitiesLaw(),
        DzhumadildaevLaw(),
    ]
    return {law.name: law for law in laws}


def suite_names() -> t.List[str]:
    return list(get_laws()) + [SUITE_ALL]


def resolve_suite(suite: str) -> t.List[LawAbstract]:
    laws = get_laws()
    if suite == SUITE_ALL:
        return [law for law in laws.values() if not law.predicate]
    if suite not in laws:
        raise ConfigException(f"Unknown suite: {suite} (known: {', '.join(suite_names())})")
    return [laws[suite]]


def verify_dendriform(structure: t.Any, plan: SamplingPlan) -> LawReport:
    return DendriformLaw().verify(structure, plan)


def verify_prelie(structure: t.Any, plan: SamplingPlan) -> LawReport:
    return PreLieLaw().verify(structure, plan)


def verify_zinbiel(structure: t.Any, plan: SamplingPlan) -> LawReport:
    return ZinbielLaw().verify(structure, plan)


def verify_restricted_lie(structure: t.Any, pmap: PMap, plan: SamplingPlan) -> LawReport:
    return RestrictedLieLaw().verify(structure, plan, pmap)


def verify_restricted_prelie(structure: t.Any, pmap: PMap, plan: SamplingPlan) -> LawReport:
    return RestrictedPreLieLaw().verify(structure, plan, pmap)


def verify_functor_squares(structure: t.Any, plan: SamplingPlan, pmap: t.Optional[PMap] = None) -> LawReport:
    return FunctorSquaresLaw().verify(structure, plan, pmap)


def verify_operator_identities(structure: t.Any, plan: SamplingPlan) -> LawReport:
    return OperatorIdentitiesLaw().verify(structure, plan)


def verify_dzhumadildaev(structure: t.Any, plan: SamplingPlan) -> LawReport:
    return DzhumadildaevLaw().verify(structure, plan)


__all__ = [
    "LawAbstract",
    "LawReport",
    "PlanMode",
    "SamplingPlan",
    "Verdict",
    "SUITE_ALL",
    "dzhumadildaev_power",
    "get_laws",
    "resolve_suite",
    "suite_names",
    "verify_dendriform",
    "verify_prelie",
    "verify_zinbiel",
    "verify_restricted_lie",
    "verify_restricted_prelie",
    "verify_functor_squares",
    "verify_operator_identities",
    "verify_dzhumadildaev",
]
