import logging
import typing as t

import numpy as np
import typing_extensions as te

from .exception import GateException, StructureException
from .field import PrimeField
from .laws.report import LawReport, SamplingPlan
from .linalg import solve_mod
from .structures.abstract import AssociativeOps, DendriformOps, PMap
from .structures.coordinates import CoordinateOps, bilinear, contract
from .structures.table import ProductTable, dense_constants, sparse_constants


logger = logging.getLogger(__name__)


class StructureTag:
    DENDRIFORM: te.Final = "dendriform"
    ZINBIEL: te.Final = "zinbiel"
    ROTA_BAXTER: te.Final = "rota-baxter"
    TRIVIAL_SPLITTING: te.Final = "trivial-splitting"


class SCAlgebra(CoordinateOps, AssociativeOps[np.ndarray]):
    """
    Finite-dimensional associative algebra over F_p given by structure constants
    e_i · e_j = Σ_k c[i][j][k] e_k. Associativity is checked at construction.
    """

    _constants: np.ndarray
    _names: t.List[str]

    def __init__(
        self,
        field: PrimeField,
        constants: np.ndarray,
        names: t.Optional[t.Sequence[str]] = None,
        check: bool = True,
    ):
        constants = np.asarray(constants)
        if constants.ndim != 3 or len(set(constants.shape)) > 1:
            raise StructureException(f"Structure constants must be an n x n x n array, got {constants.shape}")
        self._field = field
        self._dim = constants.shape[0]
        self._constants = constants % field.p
        self._names = list(names) if names is not None else [f"e{i}" for i in range(self._dim)]
        if len(self._names) != self._dim:
            raise StructureException(f"Expected {self._dim} basis names, got {len(self._names)}")
        if check:
            bad = self.associativity_defect()
            if bad is not None:
                i, j, k = bad
                raise StructureException(
                    f"Structure constants are not associative at "
                    f"({self._names[i]}, {self._names[j]}, {self._names[k]})"
                )

    @classmethod
    def from_sparse(
        cls,
        p: int,
        dim: int,
        sparse: t.Sequence[t.Sequence[int]],
        names: t.Optional[t.Sequence[str]] = None,
    ) -> "SCAlgebra":
        field = PrimeField(p)
        return cls(field, dense_constants(field, dim, sparse), names)

    @property
    def constants(self) -> np.ndarray:
        return self._constants.copy()

    @property
    def names(self) -> t.List[str]:
        return list(self._names)

    def to_sparse(self) -> t.List[t.List[int]]:
        return sparse_constants(self._constants)

    def associativity_defect(self) -> t.Optional[t.Tuple[int, int, int]]:
        # (e_i e_j) e_k = Σ_m c[i,j,m] c[m,k,l];  e_i (e_j e_k) = Σ_m c[j,k,m] c[i,m,l]
        c = self._constants
        lhs = contract(self._field, "ijm,mkl->ijkl", c, c)
        rhs = contract(self._field, "jkm,iml->ijkl", c, c)
        diff = np.argwhere(np.any((lhs - rhs) % self._field.p != 0, axis=3))
        if len(diff) == 0:
            return None
        i, j, k = (int(v) for v in diff[0])
        return i, j, k

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return bilinear(self._field, self._constants, self.check_vector(a), self.check_vector(b))

    def commutator(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.lie(a, b)

    def unit(self) -> t.Optional[np.ndarray]:
        """
        The two-sided identity, when the algebra has one.
        """
        n = self._dim
        if n == 0:
            return None
        c = self._constants
        # u·e_i = e_i and e_i·u = e_i, linear in the coordinates of u
        left = c.transpose(1, 2, 0).reshape(n * n, n)
        right = c.transpose(0, 2, 1).reshape(n * n, n)
        target = np.eye(n, dtype=np.int64).reshape(n * n)
        a = np.concatenate([left, right])
        b = np.concatenate([target, target])
        u = solve_mod(a, b, self._field)
        if u is None:
            return None
        return u

    def as_prelie(self) -> ProductTable:
        """
        The associative product read as a pre-Lie product (associators vanish).
        """
        return ProductTable(self._field, self._constants, self._names)


class LinearOperator:
    """
    n x n matrix over F_p acting on coordinates; column j holds β(e_j).
    """

    _field: PrimeField
    _matrix: np.ndarray

    def __init__(self, field: PrimeField, matrix: np.ndarray):
        matrix = np.asarray(matrix)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise StructureException(f"Operator matrix must be square, got {matrix.shape}")
        self._field = field
        self._matrix = field.array(matrix.tolist()) if matrix.size else field.zeros(matrix.shape)

    @classmethod
    def from_row_major(cls, field: PrimeField, dim: int, entries: t.Sequence[int]) -> "LinearOperator":
        if len(entries) != dim * dim:
            raise StructureException(f"Operator needs {dim * dim} entries, got {len(entries)}")
        return cls(field, np.array(list(entries), dtype=np.int64).reshape(dim, dim))

    @classmethod
    def identity(cls, field: PrimeField, dim: int) -> "LinearOperator":
        return cls(field, np.eye(dim, dtype=np.int64))

    @classmethod
    def zero(cls, field: PrimeField, dim: int) -> "LinearOperator":
        return cls(field, np.zeros((dim, dim), dtype=np.int64))

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix.copy()

    def row_major(self) -> t.List[int]:
        return [int(v) for v in self._matrix.reshape(-1)]

    def apply(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x)
        if x.shape != (self.dim,):
            raise StructureException(f"Dimension mismatch: operator is {self.dim}-dimensional, vector {x.shape}")
        return contract(self._field, "ij,j->i", self._matrix, x)

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.apply(x)

    def compose(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(self._field, contract(self._field, "ij,jk->ik", self._matrix, other._matrix))

    def is_zero(self) -> bool:
        return not np.any(self._matrix)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearOperator):
            return NotImplemented
        return self._field == other._field and np.array_equal(self._matrix, other._matrix)

    def __hash__(self) -> int:
        return hash((self._field.p, tuple(self.row_major())))


class TensorElement:
    """
    r = Σ u_i ⊗ v_i in A ⊗ A; pairs with a zero factor are pruned.
    """

    _field: PrimeField
    _dim: int
    _summands: t.List[t.Tuple[np.ndarray, np.ndarray]]

    def __init__(self, algebra: SCAlgebra, summands: t.Sequence[t.Tuple[t.Sequence[int], t.Sequence[int]]]):
        self._field = algebra.field
        self._dim = algebra.dim
        self._summands = []
        for u, v in summands:
            uu, vv = algebra.vector(list(u)), algebra.vector(list(v))
            if algebra.is_zero(uu) or algebra.is_zero(vv):
                continue
            self._summands.append((uu, vv))

    @property
    def summands(self) -> t.List[t.Tuple[np.ndarray, np.ndarray]]:
        return [(u.copy(), v.copy()) for u, v in self._summands]

    def to_json(self) -> t.List[t.List[t.List[int]]]:
        return [[[int(c) for c in u], [int(c) for c in v]] for u, v in self._summands]

    def matrix(self) -> np.ndarray:
        """
        R[a][b] = coefficient of e_a ⊗ e_b.
        """
        acc = self._field.zeros((self._dim, self._dim))
        for u, v in self._summands:
            acc = (acc + contract(self._field, "a,b->ab", u, v)) % self._field.p
        return acc


class BilinearStructure(CoordinateOps, DendriformOps[np.ndarray]):
    """
    Concrete pair of products (≺, ≻) on F_p^n given by coefficient tensors.
    """

    _left: np.ndarray
    _right: np.ndarray
    _names: t.List[str]
    _tag: str

    def __init__(
        self,
        field: PrimeField,
        left: np.ndarray,
        right: np.ndarray,
        tag: str = StructureTag.DENDRIFORM,
        names: t.Optional[t.Sequence[str]] = None,
    ):
        left, right = np.asarray(left), np.asarray(right)
        if left.shape != right.shape or left.ndim != 3 or len(set(left.shape)) > 1:
            raise StructureException(f"Inconsistent product tensors: {left.shape} vs {right.shape}")
        self._field = field
        self._dim = left.shape[0]
        self._left = left % field.p
        self._right = right % field.p
        self._tag = tag
        self._names = list(names) if names is not None else [f"e{i}" for i in range(self._dim)]

    @classmethod
    def from_sparse(
        cls,
        field: PrimeField,
        dim: int,
        left: t.Sequence[t.Sequence[int]],
        right: t.Sequence[t.Sequence[int]],
        tag: str = StructureTag.DENDRIFORM,
        names: t.Optional[t.Sequence[str]] = None,
    ) -> "BilinearStructure":
        return cls(field, dense_constants(field, dim, left), dense_constants(field, dim, right), tag, names)

    @property
    def tag(self) -> str:
        return self._tag

    @property
    def names(self) -> t.List[str]:
        return list(self._names)

    @property
    def left_constants(self) -> np.ndarray:
        return self._left.copy()

    @property
    def right_constants(self) -> np.ndarray:
        return self._right.copy()

    def left(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return bilinear(self._field, self._left, self.check_vector(a), self.check_vector(b))

    def right(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return bilinear(self._field, self._right, self.check_vector(a), self.check_vector(b))

    def perturbed(self, product: str, i: int, j: int, k: int, delta: int = 1) -> "BilinearStructure":
        left, right = self._left.copy(), self._right.copy()
        target = left if product == "left" else right
        target[i, j, k] = (target[i, j, k] + delta) % self._field.p
        return BilinearStructure(self._field, left, right, self._tag, self._names)


def algebra_mul(algebra: SCAlgebra, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return algebra.mul(x, y)


def frobenius(algebra: SCAlgebra, x: np.ndarray) -> np.ndarray:
    return algebra.frobenius(algebra.check_vector(x))


def _check_dims(algebra: SCAlgebra, beta: LinearOperator) -> None:
    if beta.dim != algebra.dim:
        raise StructureException(f"Operator dimension {beta.dim} does not match algebra dimension {algebra.dim}")


def check_rota_baxter(algebra: SCAlgebra, beta: LinearOperator) -> LawReport:
    """
    β(x)β(y) = β(β(x)y + xβ(y)) on all basis pairs; bilinearity makes that complete.
    """
    _check_dims(algebra, beta)
    report = LawReport("rota-baxter", SamplingPlan.exhaustive())
    report.add_note("weight 0; basis pairs suffice by bilinearity")
    images = [beta(e) for e in algebra.basis()]
    for i, (ei, bi) in enumerate(zip(algebra.basis(), images)):
        for j, (ej, bj) in enumerate(zip(algebra.basis(), images)):
            lhs = algebra.mul(bi, bj)
            rhs = beta(algebra.add(algebra.mul(bi, ej), algebra.mul(ei, bj)))
            residual = algebra.sub(lhs, rhs)
            report.record(
                "rota-baxter",
                [algebra.names[i], algebra.names[j]],
                algebra.describe(residual),
                algebra.is_zero(residual),
            )
    return report


def induced_dendriform(algebra: SCAlgebra, beta: LinearOperator) -> BilinearStructure:
    """
    x ≻ y = β(x)·y and x ≺ y = x·β(y); refuses operators that fail the Rota-Baxter gate.
    """
    report = check_rota_baxter(algebra, beta)
    if not report.passed():
        raise GateException("Rota-Baxter", report)
    c = algebra.constants
    m = beta.matrix
    # (e_i ≺ e_j)_k = Σ_b β[b,j] c[i,b,k];  (e_i ≻ e_j)_k = Σ_a β[a,i] c[a,j,k]
    left = contract(algebra.field, "bj,ibk->ijk", m, c)
    right = contract(algebra.field, "ai,ajk->ijk", m, c)
    return BilinearStructure(algebra.field, left, right, StructureTag.ROTA_BAXTER, algebra.names)


def trivial_dendriform(algebra: SCAlgebra) -> BilinearStructure:
    """
    x ≻ y = x·y, x ≺ y = 0. Dendriform exactly because the product is associative;
    its pre-Lie bracket is the product itself.
    """
    c = algebra.constants
    return BilinearStructure(
        algebra.field, algebra.field.zeros(c.shape), c, StructureTag.TRIVIAL_SPLITTING, algebra.names
    )


def rota_baxter_pmaps(algebra: SCAlgebra, structure: BilinearStructure) -> t.Dict[str, PMap]:
    """
    Candidate p-maps on a Rota-Baxter structure: the ⋆-power of the induced dendriform
    product and the power of the underlying algebra.
    """
    return {
        "star-power": structure.star_power,
        "algebra-power": algebra.frobenius,
    }


def aybe_residual(algebra: SCAlgebra, r: TensorElement) -> np.ndarray:
    """
    r13 r12 - r12 r23 + r23 r13 as an n x n x n coefficient array.
    """
    field, c, rm = algebra.field, algebra.constants, r.matrix()
    p = field.p
    # r13 r12 = Σ u_i u_j ⊗ v_j ⊗ v_i
    t1 = contract(field, "abx,az->bxz", c, rm)
    t1 = contract(field, "bxz,by->xyz", t1, rm)
    # r12 r23 = Σ u_i ⊗ v_i u_j ⊗ v_j
    t2 = contract(field, "dby,xd->byx", c, rm)
    t2 = contract(field, "byx,bz->xyz", t2, rm)
    # r23 r13 = Σ u_j ⊗ u_i ⊗ v_i v_j
    t3 = contract(field, "dcz,yd->cyz", c, rm)
    t3 = contract(field, "cyz,xc->xyz", t3, rm)
    return (t1 - t2 + t3) % p


def check_aybe(algebra: SCAlgebra, r: TensorElement) -> LawReport:
    report = LawReport("aybe", SamplingPlan.exhaustive())
    report.add_note("r13 r12 - r12 r23 + r23 r13, every coefficient of e_x ⊗ e_y ⊗ e_z")
    residual = aybe_residual(algebra, r)
    names = algebra.names
    n = algebra.dim
    for x in range(n):
        for y in range(n):
            for z in range(n):
                value = int(residual[x, y, z])
                report.record("aybe", [names[x], names[y], names[z]], value, value == 0)
    return report


def rb_from_tensor(algebra: SCAlgebra, r: TensorElement) -> LinearOperator:
    """
    β(a) = Σ u_i · a · v_i for an AYBE solution r, admitted only through the
    Rota-Baxter gate.
    """
    aybe = check_aybe(algebra, r)
    if not aybe.passed():
        raise GateException("AYBE", aybe)
    field, c, rm = algebra.field, algebra.constants, r.matrix()
    # β(e_j)_l = Σ_{x,y,m} R[x,y] c[x,j,m] c[m,y,l]
    inner = contract(field, "xy,xjm->yjm", rm, c)
    matrix = contract(field, "yjm,myl->lj", inner, c)
    beta = LinearOperator(field, matrix)
    gate = check_rota_baxter(algebra, beta)
    if not gate.passed():
        logger.warning("Operator built from an AYBE tensor failed the Rota-Baxter gate")
        raise GateException("Rota-Baxter", gate)
    return beta


def dendriform_from_tensor(algebra: SCAlgebra, r: TensorElement) -> BilinearStructure:
    return induced_dendriform(algebra, rb_from_tensor(algebra, r))

