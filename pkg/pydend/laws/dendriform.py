import logging
import typing as t

from ..structures.abstract import DendriformOps, PMap
from .abstract import LawAbstract, check_zero, sample_tuples
from .report import LawReport, SamplingPlan


logger = logging.getLogger(__name__)


class DendriformLaw(LawAbstract):
    """
    (x ≺ y) ≺ z = x ≺ (y ⋆ z)
    (x ≻ y) ≺ z = x ≻ (y ≺ z)
    (x ⋆ y) ≻ z = x ≻ (y ≻ z)
    """

    name = "dendriform"
    requires = DendriformOps

    def verify(self, structure: t.Any, plan: SamplingPlan, pmap: t.Optional[PMap] = None) -> LawReport:
        self.check_structure(structure)
        ops: DendriformOps = structure
        report = self.new_report(plan)
        for x, y, z in sample_tuples(ops, plan, 3):
            check_zero(
                report, ops, "left", (x, y, z), ops.sub(ops.left(ops.left(x, y), z), ops.left(x, ops.star(y, z)))
            )
            check_zero(
                report, ops, "middle", (x, y, z), ops.sub(ops.left(ops.right(x, y), z), ops.right(x, ops.left(y, z)))
            )
            check_zero(
                report, ops, "right", (x, y, z), ops.sub(ops.right(ops.star(x, y), z), ops.right(x, ops.right(y, z)))
            )
        logger.info("%s: %s after %d checks", self.name, report.verdict, report.get_checked())
        return report
