import typing as t

import numpy as np

from .exception import StructureException
from .field import PrimeField


def rref_mod(mat: np.ndarray, field: PrimeField) -> t.Tuple[np.ndarray, t.List[int]]:
    """
    Reduced row-echelon form of `mat` over F_p and its pivot columns. The input is
    copied, never mutated.
    """
    p = field.p
    mat = np.array(mat, dtype=field.dtype_for(1)) % p
    if mat.ndim != 2:
        raise StructureException(f"Expected a matrix, got shape {mat.shape}")
    num_rows, num_cols = mat.shape
    pivots: t.List[int] = []
    row = 0
    for col in range(num_cols):
        if row >= num_rows:
            break
        candidates = np.nonzero(mat[row:, col])[0]
        if len(candidates) == 0:
            continue
        pivot_row = int(candidates[0]) + row
        if pivot_row != row:
            mat[[row, pivot_row]] = mat[[pivot_row, row]]
        mat[row] = mat[row] * field.inv(int(mat[row, col])) % p
        for r in range(num_rows):
            if r != row and mat[r, col] != 0:
                mat[r] = (mat[r] - mat[r, col] * mat[row]) % p
        pivots.append(col)
        row += 1
    return mat, pivots


def solve_mod(a: np.ndarray, b: np.ndarray, field: PrimeField) -> t.Optional[np.ndarray]:
    """
    One solution of a x = b over F_p (free variables set to 0), or None.
    """
    a = np.asarray(a)
    rows, cols = a.shape
    aug = np.concatenate([a, np.asarray(b).reshape(rows, 1)], axis=1)
    reduced, pivots = rref_mod(aug, field)
    if cols in pivots:
        return None
    x = field.zeros(cols)
    for r, col in enumerate(pivots):
        x[col] = reduced[r, cols]
    return x


class EchelonBasis:
    """
    Incrementally grown basis of a subspace of F_p^n kept in semi-echelon form:
    every stored row starts with a 1 in its pivot column.
    """

    _field: PrimeField
    _width: int
    _rows: t.Dict[int, np.ndarray]
    _mask: np.ndarray

    def __init__(self, field: PrimeField, width: int):
        self._field = field
        self._width = width
        self._rows = {}
        self._mask = np.zeros(width, dtype=bool)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def width(self) -> int:
        return self._width

    def pivots(self) -> t.List[int]:
        return sorted(self._rows)

    def reduce(self, vec: np.ndarray) -> np.ndarray:
        p = self._field.p
        vec = np.array(vec, dtype=self._field.dtype_for(1)) % p
        if vec.shape != (self._width,):
            raise StructureException(f"Expected a vector of width {self._width}, got {vec.shape}")
        start = 0
        while True:
            # rows vanish left of their pivot, so entries before `start` are final
            hits = np.flatnonzero((vec[start:] != 0) & self._mask[start:])
            if len(hits) == 0:
                return vec
            col = start + int(hits[0])
            vec = (vec - int(vec[col]) * self._rows[col]) % p
            start = col + 1

    def add(self, vec: np.ndarray) -> t.Optional[int]:
        """
        Adds `vec` to the span and returns the pivot column of the new row, or None
        when `vec` was already in the span.
        """
        residual = self.reduce(vec)
        nonzero = np.nonzero(residual)[0]
        if len(nonzero) == 0:
            return None
        col = int(nonzero[0])
        self._rows[col] = residual * self._field.inv(int(residual[col])) % self._field.p
        self._mask[col] = True
        return col

    def row(self, pivot: int) -> np.ndarray:
        return self._rows[pivot].copy()

    def contains(self, vec: np.ndarray) -> bool:
        return not np.any(self.reduce(vec))

    def canonical(self) -> t.Tuple[np.ndarray, t.List[int]]:
        """
        The unique reduced row-echelon basis, independent of insertion order.
        """
        if not self._rows:
            return self._field.zeros((0, self._width)), []
        return rref_mod(np.stack([self._rows[c] for c in sorted(self._rows)]), self._field)
