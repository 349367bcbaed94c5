import typing as t

import numpy as np

from ..exception import StructureException
from ..field import PrimeField
from .abstract import PreLieOps
from .coordinates import CoordinateOps, bilinear


TSparseConstants = t.Sequence[t.Sequence[int]]


def dense_constants(field: PrimeField, dim: int, sparse: TSparseConstants) -> np.ndarray:
    """
    [[i, j, k, c], ...] -> dim x dim x dim array; repeated entries accumulate.
    """
    tensor = field.zeros((dim, dim, dim))
    for entry in sparse:
        if len(entry) != 4:
            raise StructureException(f"Structure constant entry must be [i, j, k, coeff], got {list(entry)}")
        i, j, k, c = (int(v) for v in entry)
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise StructureException(f"Structure constant index out of range for dim {dim}: {list(entry)}")
        tensor[i, j, k] = (tensor[i, j, k] + c) % field.p
    return tensor


def sparse_constants(tensor: np.ndarray) -> t.List[t.List[int]]:
    return [[int(i), int(j), int(k), int(tensor[i, j, k])] for i, j, k in zip(*np.nonzero(tensor))]


class ProductTable(CoordinateOps, PreLieOps[np.ndarray]):
    """
    A single bilinear product {e_i, e_j} = Σ_k b[i][j][k] e_k read as a pre-Lie
    candidate.
    """

    _constants: np.ndarray
    _names: t.List[str]

    def __init__(self, field: PrimeField, constants: np.ndarray, names: t.Optional[t.Sequence[str]] = None):
        constants = np.asarray(constants)
        if constants.ndim != 3 or len(set(constants.shape)) > 1:
            raise StructureException(f"Structure constants must be an n x n x n array, got {constants.shape}")
        self._field = field
        self._dim = constants.shape[0]
        self._constants = constants % field.p
        self._names = list(names) if names is not None else [f"e{i}" for i in range(self._dim)]
        if len(self._names) != self._dim:
            raise StructureException(f"Expected {self._dim} basis names, got {len(self._names)}")

    @property
    def constants(self) -> np.ndarray:
        return self._constants.copy()

    @property
    def names(self) -> t.List[str]:
        return list(self._names)

    def prelie(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return bilinear(self._field, self._constants, self.check_vector(a), self.check_vector(b))

    def perturbed(self, i: int, j: int, k: int, delta: int = 1) -> "ProductTable":
        constants = self._constants.copy()
        constants[i, j, k] = (constants[i, j, k] + delta) % self._field.p
        return ProductTable(self._field, constants, self._names)
