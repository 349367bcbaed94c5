import typing as t
from abc import ABCMeta, abstractmethod

import numpy as np

from ..exception import StructureException
from ..structures.abstract import PMap, VectorOps
from .report import LawReport, SamplingPlan


BILINEARITY_NOTE = "multilinear relations on all basis tuples imply them for every element"


class LawAbstract(metaclass=ABCMeta):
    """
    One family of identities. `verify` never raises on a violated identity; it records
    the residual in the returned report.
    """

    name: str = ""
    requires: t.Type[VectorOps] = VectorOps
    needs_pmap: bool = False
    # predicates describe special structures and stay out of the "all" suite
    predicate: bool = False

    @abstractmethod
    def verify(self, structure: t.Any, plan: SamplingPlan, pmap: t.Optional[PMap] = None) -> LawReport:
        raise NotImplementedError

    def can_verify(self, structure: t.Any) -> bool:
        return isinstance(structure, self.requires)

    def check_structure(self, structure: t.Any, pmap: t.Optional[PMap] = None) -> None:
        if not self.can_verify(structure):
            raise StructureException(
                f"Law {self.name} needs a {self.requires.__name__} structure, got {type(structure).__name__}"
            )
        if self.needs_pmap and pmap is None:
            raise StructureException(f"Law {self.name} requires a p-map")

    def new_report(self, plan: SamplingPlan) -> LawReport:
        report = LawReport(self.name, plan)
        if plan.is_exhaustive():
            report.add_note(BILINEARITY_NOTE)
        return report


def check_zero(report: LawReport, ops: VectorOps, relation: str, inputs: t.Sequence[t.Any], residual: t.Any) -> bool:
    return report.record(relation, [ops.describe(x) for x in inputs], ops.describe(residual), ops.is_zero(residual))


def basis_tuples(ops: VectorOps, arity: int, max_degree: t.Optional[int]) -> t.Iterator[t.Tuple[t.Any, ...]]:
    """
    Tuples of basis elements whose degrees add up to at most max_degree (all tuples on
    ungraded structures).
    """
    basis = ops.basis(max_degree)
    degrees = [ops.degree(b) for b in basis]

    def extend(prefix: t.Tuple[t.Any, ...], used: int) -> t.Iterator[t.Tuple[t.Any, ...]]:
        if len(prefix) == arity:
            yield prefix
            return
        for b, deg in zip(basis, degrees):
            if max_degree is not None and used + deg > max_degree:
                continue
            yield from extend(prefix + (b,), used + deg)

    yield from extend((), 0)


def random_tuples(ops: VectorOps, plan: SamplingPlan, arity: int) -> t.Iterator[t.Tuple[t.Any, ...]]:
    rng = np.random.default_rng(plan.get_seed())
    for _ in range(plan.get_count()):
        yield tuple(ops.random_element(rng, plan.get_max_degree(), plan.get_terms()) for _ in range(arity))


def sample_tuples(ops: VectorOps, plan: SamplingPlan, arity: int) -> t.Iterator[t.Tuple[t.Any, ...]]:
    if plan.is_exhaustive():
        return basis_tuples(ops, arity, plan.get_max_degree())
    return random_tuples(ops, plan, arity)


def _x_samples(ops: VectorOps, plan: SamplingPlan) -> t.List[t.Any]:
    x_degree = plan.get_x_degree()
    if x_degree is None:
        return ops.basis(plan.get_max_degree())
    return [b for b in ops.basis(x_degree) if ops.degree(b) == x_degree]


def _y_bound(plan: SamplingPlan) -> t.Optional[int]:
    y_max = plan.get_y_max_degree()
    return y_max if y_max is not None else plan.get_max_degree()


def pmap_pairs(ops: VectorOps, plan: SamplingPlan) -> t.Iterator[t.Tuple[t.Any, t.Any]]:
    """
    (x, y) inputs for relations that involve the p-map. Exhaustive plans walk basis
    pairs; every plan then adds `count` seeded random pairs since the p-map is not
    additive.
    """
    if plan.is_exhaustive():
        ys = ops.basis(_y_bound(plan))
        for x in _x_samples(ops, plan):
            for y in ys:
                yield x, y
    rng = np.random.default_rng(plan.get_seed())
    x_degree, terms = plan.get_x_degree(), plan.get_terms()
    for _ in range(plan.get_count()):
        if x_degree is None:
            x = ops.random_element(rng, plan.get_max_degree(), terms)
        else:
            x = ops.random_homogeneous(rng, x_degree, terms)
        yield x, ops.random_element(rng, _y_bound(plan), terms)


def precheck_bound(plan: SamplingPlan) -> t.Optional[int]:
    """
    Degree bound for the multilinear pre-checks run by the p-map laws.
    """
    return plan.get_max_degree() if plan.get_max_degree() is not None else plan.get_y_max_degree()
