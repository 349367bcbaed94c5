"""
Degree-truncated enveloping dendriform algebras U(P) = Dend(P)/R and
U_p(P) = Dend(P)/R_p of a finite-dimensional (restricted) pre-Lie algebra P.

Everything is computed inside the span of planar trees of degree <= d. Ideal
vectors are echelonized with the highest-degree trees first, so the pivot of every
stored row is its top-degree term and dim(I ∩ F_<=n) is the number of pivots in
degree <= n.
"""
import csv
import io
import logging
import typing as t

import numpy as np
import typing_extensions as te

from .exception import EnvelopeException
from .field import PrimeField
from .freedend import DendElement, FreeDendriform
from .lambda_poly import jacobson_defect
from .laws import verify_prelie, verify_restricted_prelie
from .laws.report import SamplingPlan
from .linalg import EchelonBasis
from .models import PreLieModel
from .structures.abstract import InducedLie
from .structures.table import ProductTable, dense_constants
from .trees import PlanarTree, enumerate_trees, free_dimension, trees_up_to


logger = logging.getLogger(__name__)

TQuotientRow = te.TypedDict(
    "TQuotientRow",
    {
        "n": int,
        "free_dim": int,
        "cumulative_free": int,
        "ideal_rank": int,
        "quotient_dim": int,
        "stabilized": t.Optional[bool],
    },
)

TAuditRow = te.TypedDict(
    "TAuditRow",
    {
        "x": t.List[int],
        "pmap": t.List[int],
        "member": bool,
    },
)

CSV_COLUMNS = ["n", "free_dim", "cumulative_free", "ideal_rank", "quotient_dim", "stabilized"]


class PreLieData:
    """
    A finite-dimensional pre-Lie algebra {e_i, e_j} = Σ_k b[i][j][k] e_k over F_p,
    optionally restricted by a table whose row i is e_i^[p].
    """

    _table: ProductTable
    _pmap: t.Optional[np.ndarray]
    _free: FreeDendriform

    def __init__(
        self,
        field: PrimeField,
        constants: np.ndarray,
        pmap: t.Optional[t.Sequence[t.Sequence[int]]] = None,
        names: t.Optional[t.Sequence[str]] = None,
        validate: bool = True,
        samples: int = 20,
    ):
        self._table = ProductTable(field, constants, names)
        n = self._table.dim
        self._pmap = None
        if pmap is not None:
            table = field.array([list(row) for row in pmap]) if n else field.zeros((0, 0))
            if table.shape != (n, n):
                raise EnvelopeException(f"p-map table must be {n} x {n}, got {table.shape}")
            self._pmap = table
        self._free = FreeDendriform(field, n)
        if validate:
            self._validate(samples)

    @classmethod
    def from_model(cls, model: PreLieModel, validate: bool = True) -> "PreLieData":
        field = PrimeField(model.p)
        return cls(field, dense_constants(field, model.dim, model.bracket), model.pmap, model.basis, validate)

    def _validate(self, samples: int) -> None:
        report = verify_prelie(self._table, SamplingPlan.exhaustive())
        if not report.passed():
            first = report.get_counterexamples()[0]
            raise EnvelopeException(f"Not a pre-Lie algebra: left symmetry fails at {first['inputs']}")
        if self._pmap is not None:
            plan = SamplingPlan.exhaustive().set_count(samples)
            report = verify_restricted_prelie(self._table, self.pmap_of, plan)
            if not report.passed():
                first = report.get_counterexamples()[0]
                raise EnvelopeException(
                    f"p-map table is not restricted: relation {first['relation']} fails at {first['inputs']}"
                )

    @property
    def field(self) -> PrimeField:
        return self._table.field

    @property
    def p(self) -> int:
        return self._table.p

    @property
    def dim(self) -> int:
        return self._table.dim

    @property
    def table(self) -> ProductTable:
        return self._table

    @property
    def free(self) -> FreeDendriform:
        return self._free

    def has_pmap(self) -> bool:
        return self._pmap is not None

    def pmap_row(self, i: int) -> np.ndarray:
        if self._pmap is None:
            raise EnvelopeException("Restricted envelope requires a p-map table")
        return self._pmap[i].copy()

    def pmap_of(self, x: np.ndarray) -> np.ndarray:
        """
        Extends the basis table to any vector: (αe_i)^[p] = α^p e_i^[p] and
        (a + b)^[p] = a^[p] + b^[p] + Σ s_i(a, b), adding one basis term at a time.
        """
        ops = self._table
        field = self.field
        x = ops.check_vector(x)
        lie = InducedLie(ops)
        acc, acc_p = ops.zero(), ops.zero()
        for i in range(self.dim):
            alpha = int(x[i])
            if alpha == 0:
                continue
            term = ops.scale(ops.e(i), alpha)
            term_p = ops.scale(self.pmap_row(i), field.power(alpha, field.p))
            acc_p = ops.sum([acc_p, term_p, jacobson_defect(acc, term, lie)])
            acc = ops.add(acc, term)
        return acc_p

    def embed(self, x: np.ndarray) -> DendElement:
        """
        P -> Dend(P): a vector becomes a combination of the degree-1 trees.
        """
        x = self._table.check_vector(x)
        return self._free.sum(self._free.generator(i).scale(int(x[i])) for i in range(self.dim) if x[i])


def relation_generators_U(data: PreLieData) -> t.List[DendElement]:
    # pylint: disable=invalid-name
    """
    {e_i, e_j} - (e_i ≻ e_j - e_j ≺ e_i) for every ordered basis pair.
    """
    free, table = data.free, data.table
    generators = []
    for i in range(data.dim):
        for j in range(data.dim):
            bracket = data.embed(table.prelie(table.e(i), table.e(j)))
            ei, ej = free.generator(i), free.generator(j)
            generators.append(bracket - free.prelie(ei, ej))
    return generators


def relation_generators_Up(data: PreLieData) -> t.List[DendElement]:
    # pylint: disable=invalid-name
    """
    The pair relations plus e_i^[p] - e_i^{⋆p} for every basis element.
    """
    if not data.has_pmap():
        raise EnvelopeException("Restricted envelope requires a p-map table")
    free = data.free
    generators = relation_generators_U(data)
    for i in range(data.dim):
        generators.append(data.embed(data.pmap_row(i)) - free.star_power(free.generator(i)))
    return generators


class IdealSpan:
    """
    Echelonized span of a dendriform ideal inside F_<=d.
    """

    _free: FreeDendriform
    _d: int
    _columns: t.List[PlanarTree]
    _index: t.Dict[PlanarTree, int]
    _echelon: EchelonBasis
    _rounds: int

    def __init__(self, free: FreeDendriform, d: int):
        self._free = free
        self._d = d
        # highest degree first
        self._columns = list(reversed(trees_up_to(d, free.generators)))
        self._index = {tree: i for i, tree in enumerate(self._columns)}
        self._echelon = EchelonBasis(free.field, len(self._columns))
        self._rounds = 0

    @property
    def d(self) -> int:
        return self._d

    @property
    def rank(self) -> int:
        return self._echelon.rank

    @property
    def rounds(self) -> int:
        return self._rounds

    def to_vector(self, element: DendElement) -> np.ndarray:
        if not element.is_zero() and element.max_degree() > self._d:
            raise EnvelopeException(f"Element of degree {element.max_degree()} exceeds the truncation {self._d}")
        vec = self._free.field.zeros(len(self._columns))
        for tree, coeff in element.items():
            vec[self._index[tree]] = coeff
        return vec

    def to_element(self, vec: np.ndarray) -> DendElement:
        return self._free.element({self._columns[i]: int(vec[i]) for i in np.nonzero(vec)[0]})

    def _insert(self, element: DendElement) -> t.Optional[DendElement]:
        pivot = self._echelon.add(self.to_vector(element))
        if pivot is None:
            return None
        return self.to_element(self._echelon.row(pivot))

    def close(self, generators: t.Sequence[DendElement]) -> "IdealSpan":
        """
        Adds the generators and every product with a basis tree on either side under
        either product, as long as the whole product stays within degree d.
        """
        free = self._free
        queue: t.List[DendElement] = []
        nonzero = [gen for gen in generators if not gen.is_zero()]
        kept = [gen for gen in nonzero if gen.max_degree() <= self._d]
        if nonzero and not kept:
            logger.warning("Truncation %d is below every generator degree: the ideal is empty", self._d)
        elif len(kept) < len(nonzero):
            logger.debug("%d generator(s) above truncation %d dropped", len(nonzero) - len(kept), self._d)
        for gen in kept:
            row = self._insert(gen)
            if row is not None:
                queue.append(row)

        trees_by_degree = {
            n: [free.tree(tree) for tree in enumerate_trees(n, free.generators)] for n in range(1, self._d + 1)
        }
        while queue:
            self._rounds += 1
            fresh: t.List[DendElement] = []
            for row in queue:
                room = self._d - row.max_degree()
                for n in range(1, room + 1):
                    for tree in trees_by_degree[n]:
                        for product in (
                            free.left(row, tree),
                            free.left(tree, row),
                            free.right(row, tree),
                            free.right(tree, row),
                        ):
                            added = self._insert(product)
                            if added is not None:
                                fresh.append(added)
            logger.debug("Ideal closure round %d: rank %d", self._rounds, self.rank)
            queue = fresh
        return self

    def rank_up_to(self, n: int) -> int:
        """
        dim(I ∩ F_<=n)
        """
        return sum(1 for col in self._echelon.pivots() if self._columns[col].degree <= n)

    def contains(self, element: DendElement) -> bool:
        return self._echelon.contains(self.to_vector(element))

    def basis(self) -> t.List[DendElement]:
        """
        Canonical reduced basis, ordered by the pivot tree.
        """
        reduced, pivots = self._echelon.canonical()
        rows = sorted(zip(pivots, reduced), key=lambda item: self._columns[item[0]].sort_key())
        return [self.to_element(vec) for _, vec in rows]

    def pivot_trees(self) -> t.List[str]:
        trees = sorted((self._columns[c] for c in self._echelon.pivots()), key=PlanarTree.sort_key)
        return [tree.encode() for tree in trees]


def ideal_span(generators: t.Sequence[DendElement], d: int, free: t.Optional[FreeDendriform] = None) -> IdealSpan:
    if free is None:
        if not generators:
            raise EnvelopeException("Cannot infer the ambient algebra of an empty generator list")
        free = FreeDendriform(generators[0].field, generators[0].generators)
    return IdealSpan(free, d).close(generators)


def relation_ideal(data: PreLieData, d: int, restricted: bool = False) -> IdealSpan:
    generators = relation_generators_Up(data) if restricted else relation_generators_U(data)
    return ideal_span(generators, d, data.free)


class QuotientReport:
    _p: int
    _g: int
    _d: int
    _restricted: bool
    _rows: t.List[TQuotientRow]
    _pivots: t.List[str]
    _audit: t.Optional[t.List[TAuditRow]]

    def __init__(self, p: int, g: int, d: int, restricted: bool):
        self._p = p
        self._g = g
        self._d = d
        self._restricted = restricted
        self._rows = []
        self._pivots = []
        self._audit = None

    @property
    def rows(self) -> t.List[TQuotientRow]:
        return list(self._rows)

    def quotient_dims(self) -> t.List[int]:
        return [row["quotient_dim"] for row in self._rows]

    def free_dims(self) -> t.List[int]:
        return [row["free_dim"] for row in self._rows]

    def ideal_ranks(self) -> t.List[int]:
        return [row["ideal_rank"] for row in self._rows]

    def get_pivots(self) -> t.List[str]:
        return list(self._pivots)

    def set_pivots(self, pivots: t.List[str]) -> "QuotientReport":
        self._pivots = pivots
        return self

    def add_row(self, row: TQuotientRow) -> "QuotientReport":
        self._rows.append(row)
        return self

    def get_audit(self) -> t.Optional[t.List[TAuditRow]]:
        return self._audit

    def set_audit(self, audit: t.List[TAuditRow]) -> "QuotientReport":
        self._audit = audit
        return self

    def audit_passed(self) -> bool:
        return self._audit is None or all(row["member"] for row in self._audit)

    def to_dict(self) -> t.Dict[str, t.Any]:
        data: t.Dict[str, t.Any] = {
            "p": self._p,
            "g": self._g,
            "d": self._d,
            "algebra": "U_p" if self._restricted else "U",
            "rows": self.rows,
            "pivots": self.get_pivots(),
        }
        if self._audit is not None:
            data["audit"] = {
                "checked": len(self._audit),
                "failures": sum(1 for row in self._audit if not row["member"]),
                "rows": self._audit,
            }
        return data

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in self._rows:
            stabilized = row["stabilized"]
            writer.writerow({**row, "stabilized": "" if stabilized is None else str(stabilized).lower()})
        return out.getvalue()


def quotient_dims(
    data: PreLieData, d: int, restricted: bool = False, check_stability: bool = False
) -> QuotientReport:
    """
    dim(F_<=n / (I ∩ F_<=n)) for n = 1..d. With check_stability every row is marked by
    comparing against the run at d + 1.
    """
    if d < 1:
        raise EnvelopeException(f"Truncation must be at least 1, got {d}")
    g = data.dim
    report = QuotientReport(data.p, g, d, restricted)
    if g == 0:
        return report
    span = relation_ideal(data, d, restricted)
    wider = relation_ideal(data, d + 1, restricted) if check_stability else None
    cumulative = 0
    for n in range(1, d + 1):
        free_dim = free_dimension(n, g)
        cumulative += free_dim
        rank = span.rank_up_to(n)
        report.add_row(
            {
                "n": n,
                "free_dim": free_dim,
                "cumulative_free": cumulative,
                "ideal_rank": rank,
                "quotient_dim": cumulative - rank,
                "stabilized": None if wider is None else wider.rank_up_to(n) == rank,
            }
        )
    return report.set_pivots(span.pivot_trees())


def membership_check(
    data: PreLieData,
    d: int,
    element: DendElement,
    restricted: bool = False,
    span: t.Optional[IdealSpan] = None,
) -> bool:
    if not element.is_zero() and element.max_degree() > d:
        raise EnvelopeException(f"Element of degree {element.max_degree()} exceeds the truncation {d}")
    span = span or relation_ideal(data, d, restricted)
    return span.contains(element)


def audit_pmap_relations(
    data: PreLieData, d: int, count: int, seed: int = 0, span: t.Optional[IdealSpan] = None
) -> t.List[TAuditRow]:
    """
    For seeded random x in P, whether x^[p] - x^{⋆p} lies in the computed ideal. Only
    basis elements generate R_p, so this is an audit of the result, not a premise.
    """
    if d < data.p:
        raise EnvelopeException(f"The audit needs truncation >= p = {data.p}, got {d}")
    span = span or relation_ideal(data, d, restricted=True)
    rng = np.random.default_rng(seed)
    free, table = data.free, data.table
    rows: t.List[TAuditRow] = []
    for _ in range(count):
        x = table.random_element(rng)
        element = data.embed(data.pmap_of(x)) - free.star_power(data.embed(x))
        member = span.contains(element)
        rows.append({"x": table.describe(x), "pmap": table.describe(data.pmap_of(x)), "member": member})
    failures = sum(1 for row in rows if not row["member"])
    if failures:
        logger.warning("p-map audit: %d of %d random elements fall outside the ideal", failures, count)
    return rows
