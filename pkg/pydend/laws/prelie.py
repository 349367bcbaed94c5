import logging
import typing as t

from ..structures.abstract import PMap, PreLieOps
from .abstract import LawAbstract, check_zero, sample_tuples
from .report import LawReport, SamplingPlan


logger = logging.getLogger(__name__)


def check_left_symmetry(report: LawReport, ops: PreLieOps, x: t.Any, y: t.Any, z: t.Any) -> bool:
    residual = ops.sub(ops.associator(x, y, z), ops.associator(y, x, z))
    return check_zero(report, ops, "left-symmetry", (x, y, z), residual)


class PreLieLaw(LawAbstract):
    """
    The associator of {-,-} is symmetric in its first two arguments.
    """

    name = "prelie"
    requires = PreLieOps

    def verify(self, structure: t.Any, plan: SamplingPlan, pmap: t.Optional[PMap] = None) -> LawReport:
        self.check_structure(structure)
        report = self.new_report(plan)
        for x, y, z in sample_tuples(structure, plan, 3):
            check_left_symmetry(report, structure, x, y, z)
        logger.info("%s: %s after %d checks", self.name, report.verdict, report.get_checked())
        return report
