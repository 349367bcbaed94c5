import typing as t

import numpy as np

from ..exception import StructureException
from ..field import PrimeField
from .abstract import VectorOps


def contract(field: PrimeField, subscripts: str, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    Two-operand einsum reduced mod p. Operands are widened to a dtype that holds every
    partial sum exactly, so results are bit-identical for any p in the supported range.
    """
    a, b = np.asarray(a), np.asarray(b)
    widest = max(a.shape + b.shape + (1,))
    dtype = field.dtype_for(widest**2)
    return np.einsum(subscripts, a.astype(dtype), b.astype(dtype)) % field.p


def bilinear(field: PrimeField, tensor: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """
    Σ_ij x_i y_j tensor[i][j][k]
    """
    xy = contract(field, "i,j->ij", x, y)
    return contract(field, "ij,ijk->k", xy, tensor)


class CoordinateOps(VectorOps[np.ndarray]):
    """
    Vector-space surface of F_p^n with elements stored as coordinate arrays.
    """

    _dim: int

    @property
    def dim(self) -> int:
        return self._dim

    def vector(self, coords: t.Sequence[int]) -> np.ndarray:
        if len(coords) != self._dim:
            raise StructureException(f"Expected a vector of length {self._dim}, got {len(coords)}")
        return self._field.array(list(coords))

    def e(self, i: int) -> np.ndarray:
        v = self._field.zeros(self._dim)
        v[i] = 1
        return v

    def check_vector(self, x: np.ndarray) -> np.ndarray:
        arr = np.asarray(x)
        if arr.shape != (self._dim,):
            raise StructureException(f"Dimension mismatch: expected ({self._dim},), got {arr.shape}")
        return arr

    def zero(self) -> np.ndarray:
        return self._field.zeros(self._dim)

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (self.check_vector(a) + self.check_vector(b)) % self._field.p

    def scale(self, a: np.ndarray, c: int) -> np.ndarray:
        return (self.check_vector(a) * (c % self._field.p)) % self._field.p

    def is_zero(self, a: np.ndarray) -> bool:
        return not np.any(np.asarray(a) % self._field.p)

    def basis(self, max_degree: t.Optional[int] = None) -> t.List[np.ndarray]:
        return [self.e(i) for i in range(self._dim)]

    def random_element(
        self, rng: np.random.Generator, max_degree: t.Optional[int] = None, terms: int = 3
    ) -> np.ndarray:
        v = self._field.zeros(self._dim)
        for i in range(self._dim):
            v[i] = int(rng.integers(0, self._field.p))
        return v

    def describe(self, a: np.ndarray) -> t.List[int]:
        return [int(c) for c in np.asarray(a)]
