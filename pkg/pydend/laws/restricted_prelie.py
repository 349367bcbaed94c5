import logging
import typing as t

from ..structures.abstract import InducedLie, PMap, PreLieOps
from .abstract import LawAbstract, basis_tuples, check_zero, pmap_pairs, precheck_bound
from .prelie import check_left_symmetry
from .report import LawReport, SamplingPlan
from .restricted_lie import check_additivity, check_homogeneity


logger = logging.getLogger(__name__)


def check_prelie_power(report: LawReport, ops: PreLieOps, pmap: PMap, x: t.Any, y: t.Any) -> None:
    """
    {x^[p], y} = {x,{x,...{x,y}}} with p copies of x.
    """
    residual = ops.sub(ops.prelie(pmap(x), y), ops.prelie_power(x, y, ops.p))
    check_zero(report, ops, "prelie-power", (x, y), residual)


def check_right_action(report: LawReport, ops: PreLieOps, pmap: PMap, x: t.Any, y: t.Any) -> None:
    """
    {y, x^[p]} = {x,{x,...{x,y}}} - [x,[x,...[x,y]]]
    """
    p = ops.p
    expected = ops.sub(ops.prelie_power(x, y, p), ops.ad_power(x, y, p))
    check_zero(report, ops, "right-action", (x, y), ops.sub(ops.prelie(y, pmap(x)), expected))


class RestrictedPreLieLaw(LawAbstract):
    """
    A pre-Lie product with a p-map: homogeneity, both action relations and additivity
    through Jacobson's s_i of the induced Lie bracket.
    """

    name = "restricted-prelie"
    requires = PreLieOps
    needs_pmap = True

    def verify(self, structure: t.Any, plan: SamplingPlan, pmap: t.Optional[PMap] = None) -> LawReport:
        self.check_structure(structure, pmap)
        assert pmap is not None
        ops: PreLieOps = structure
        report = self.new_report(plan)
        report.add_note("the p-map is not additive: random sums supplement basis pairs")
        for x, y, z in basis_tuples(ops, 3, precheck_bound(plan)):
            check_left_symmetry(report, ops, x, y, z)
        lie = InducedLie(ops)
        for x, y in pmap_pairs(ops, plan):
            check_homogeneity(report, ops, pmap, x)
            check_homogeneity(report, ops, pmap, ops.add(x, y))
            check_prelie_power(report, ops, pmap, x, y)
            check_right_action(report, ops, pmap, x, y)
            check_additivity(report, lie, pmap, x, y)
        logger.info("%s: %s after %d checks", self.name, report.verdict, report.get_checked())
        return report
