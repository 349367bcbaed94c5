import logging
import typing as t

from ..structures.abstract import DendriformOps, PMap
from .abstract import LawAbstract, check_zero, sample_tuples
from .report import LawReport, SamplingPlan


logger = logging.getLogger(__name__)


class ZinbielLaw(LawAbstract):
    name = "zinbiel"
    requires = DendriformOps
    predicate = True

    def verify(self, structure: t.Any, plan: SamplingPlan, pmap: t.Optional[PMap] = None) -> LawReport:
        self.check_structure(structure)
        ops: DendriformOps = structure
        report = self.new_report(plan)
        for x, y in sample_tuples(ops, plan, 2):
            # x ≻ y = y ≺ x
            check_zero(report, ops, "zinbiel", (x, y), ops.sub(ops.right(x, y), ops.left(y, x)))
        logger.info("%s: %s after %d checks", self.name, report.verdict, report.get_checked())
        return report
