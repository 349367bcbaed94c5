import logging
import typing as t

from ..structures.abstract import DendriformOps, PMap
from .abstract import LawAbstract, check_zero, pmap_pairs
from .report import LawReport, SamplingPlan


logger = logging.getLogger(__name__)


def _iterate(fn: t.Callable[[t.Any], t.Any], y: t.Any, times: int) -> t.Any:
    for _ in range(times):
        y = fn(y)
    return y


class OperatorIdentitiesLaw(LawAbstract):
    """
    L_x(y) = x ≻ y and R_x(y) = y ≺ x commute, and their p-th powers are the actions
    of the ⋆-power of x.
    """

    name = "operators"
    requires = DendriformOps

    def verify(self, structure: t.Any, plan: SamplingPlan, pmap: t.Optional[PMap] = None) -> LawReport:
        self.check_structure(structure)
        report = self.new_report(plan)
        for x, y in pmap_pairs(structure, plan):
            self._check_pair(report, structure, x, y)
        logger.info("%s: %s after %d checks", self.name, report.verdict, report.get_checked())
        return report

    def _check_pair(self, report: LawReport, ops: DendriformOps, x: t.Any, y: t.Any) -> None:
        p = ops.p

        def left_action(v: t.Any) -> t.Any:
            return ops.right(x, v)

        def right_action(v: t.Any) -> t.Any:
            return ops.left(v, x)

        def difference(v: t.Any) -> t.Any:
            return ops.sub(left_action(v), right_action(v))

        x_p = ops.star_power(x)
        l_p = _iterate(left_action, y, p)
        r_p = _iterate(right_action, y, p)

        commutator = ops.sub(right_action(left_action(y)), left_action(right_action(y)))
        check_zero(report, ops, "commute", (x, y), commutator)
        check_zero(report, ops, "difference", (x, y), ops.sub(difference(y), ops.prelie(x, y)))
        check_zero(report, ops, "binomial", (x, y), ops.sub(_iterate(difference, y, p), ops.sub(l_p, r_p)))
        check_zero(report, ops, "left-power", (x, y), ops.sub(l_p, ops.right(x_p, y)))
        check_zero(report, ops, "right-power", (x, y), ops.sub(r_p, ops.left(y, x_p)))
