import logging
import typing as t

from ..structures.abstract import PMap, PreLieOps
from .abstract import LawAbstract, pmap_pairs
from .report import LawReport, SamplingPlan
from .restricted_prelie import check_prelie_power


logger = logging.getLogger(__name__)


def dzhumadildaev_power(ops: PreLieOps, x: t.Any) -> t.Any:
    """
    x^{p} = {x,{x,...{x,x}}} with p copies of x.
    """
    return ops.prelie_power(x, x, ops.p - 1)


class DzhumadildaevLaw(LawAbstract):
    """
    {x^{p}, y} = {x,{x,...{x,y}}} for the right-nested power x^{p}. Any explicit p-map
    is ignored: the law is about this particular one.
    """

    name = "dzhumadildaev"
    requires = PreLieOps
    predicate = True

    def verify(self, structure: t.Any, plan: SamplingPlan, pmap: t.Optional[PMap] = None) -> LawReport:
        self.check_structure(structure)
        ops: PreLieOps = structure
        report = self.new_report(plan)

        def power(x: t.Any) -> t.Any:
            return dzhumadildaev_power(ops, x)

        for x, y in pmap_pairs(ops, plan):
            check_prelie_power(report, ops, power, x, y)
        logger.info("%s: %s after %d checks", self.name, report.verdict, report.get_checked())
        return report
