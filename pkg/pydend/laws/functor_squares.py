import logging
import typing as t

from ..structures.abstract import DendriformOps, InducedLie, PMap, StarAlgebra
from .abstract import LawAbstract, check_zero, pmap_pairs, sample_tuples
from .report import LawReport, SamplingPlan
from .restricted_lie import check_ad_power


logger = logging.getLogger(__name__)


class FunctorSquaresLaw(LawAbstract):
    """
    Element-level witnesses that the two routes from a dendriform structure agree:
    through the pre-Lie bracket or through the associative product ⋆, for both the
    Lie bracket and the p-map. Without an explicit p-map the ⋆-power is used.
    """

    name = "functor-squares"
    requires = DendriformOps

    def verify(self, structure: t.Any, plan: SamplingPlan, pmap: t.Optional[PMap] = None) -> LawReport:
        self.check_structure(structure)
        ops: DendriformOps = structure
        pmap = pmap or ops.star_power
        report = self.new_report(plan)
        for x, y in sample_tuples(ops, plan, 2):
            # {x,y} - {y,x} = x⋆y - y⋆x
            check_zero(report, ops, "lie-routes", (x, y), ops.sub(ops.lie(x, y), ops.lie_via_star(x, y)))
        assoc = StarAlgebra(ops)
        lie = InducedLie(ops)
        for x, y in pmap_pairs(ops, plan):
            check_zero(report, ops, "pmap-routes", (x,), ops.sub(pmap(x), assoc.frobenius(x)))
            check_ad_power(report, lie, pmap, x, y)
        logger.info("%s: %s after %d checks", self.name, report.verdict, report.get_checked())
        return report
