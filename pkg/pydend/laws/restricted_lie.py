import logging
import typing as t

from ..lambda_poly import jacobson_defect
from ..structures.abstract import LieOps, PMap
from .abstract import LawAbstract, basis_tuples, check_zero, pmap_pairs, precheck_bound
from .report import LawReport, SamplingPlan


logger = logging.getLogger(__name__)


def check_lie_axioms(report: LawReport, ops: LieOps, max_degree: t.Optional[int]) -> None:
    for (x,) in basis_tuples(ops, 1, max_degree):
        check_zero(report, ops, "alternating", (x,), ops.lie(x, x))
    for x, y, z in basis_tuples(ops, 3, max_degree):
        jacobi = ops.sum([ops.lie(x, ops.lie(y, z)), ops.lie(y, ops.lie(z, x)), ops.lie(z, ops.lie(x, y))])
        check_zero(report, ops, "jacobi", (x, y, z), jacobi)


def check_homogeneity(report: LawReport, ops: LieOps, pmap: PMap, x: t.Any) -> None:
    """
    (αx)^[p] = α^p x^[p] for every α in F_p.
    """
    field = ops.field
    image = pmap(x)
    for alpha in field.elements():
        residual = ops.sub(pmap(ops.scale(x, alpha)), ops.scale(image, field.power(alpha, field.p)))
        check_zero(report, ops, "homogeneity", (x, ops.scale(x, alpha)), residual)


def check_additivity(report: LawReport, ops: LieOps, pmap: PMap, x: t.Any, y: t.Any) -> None:
    """
    (x+y)^[p] = x^[p] + y^[p] + Σ s_i(x, y)
    """
    expected = ops.sum([pmap(x), pmap(y), jacobson_defect(x, y, ops)])
    check_zero(report, ops, "additivity", (x, y), ops.sub(pmap(ops.add(x, y)), expected))


def check_ad_power(report: LawReport, ops: LieOps, pmap: PMap, x: t.Any, y: t.Any) -> None:
    """
    [x^[p], y] = [x,[x,...[x,y]]] with p copies of x.
    """
    residual = ops.sub(ops.lie(pmap(x), y), ops.ad_power(x, y, ops.p))
    check_zero(report, ops, "ad-power", (x, y), residual)


class RestrictedLieLaw(LawAbstract):
    name = "restricted-lie"
    requires = LieOps
    needs_pmap = True

    def verify(self, structure: t.Any, plan: SamplingPlan, pmap: t.Optional[PMap] = None) -> LawReport:
        self.check_structure(structure, pmap)
        assert pmap is not None
        ops: LieOps = structure
        report = self.new_report(plan)
        report.add_note("the p-map is not additive: random sums supplement basis pairs")
        check_lie_axioms(report, ops, precheck_bound(plan))
        for x, y in pmap_pairs(ops, plan):
            check_homogeneity(report, ops, pmap, x)
            check_homogeneity(report, ops, pmap, ops.add(x, y))
            check_ad_power(report, ops, pmap, x, y)
            check_additivity(report, ops, pmap, x, y)
        logger.info("%s: %s after %d checks", self.name, report.verdict, report.get_checked())
        return report
