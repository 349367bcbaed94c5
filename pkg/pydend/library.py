"""
Builders for the example algebras shipped as fixtures.
"""
import typing as t

from .exception import ConfigException
from .field import PrimeField
from .scalg import SCAlgebra
from .structures.table import dense_constants


def matrix_algebra(n: int, p: int) -> SCAlgebra:
    """
    M_n(F_p) on the matrix units; e_ab has index a*n + b and name "e{a+1}{b+1}".
    """
    field = PrimeField(p)
    names = [f"e{a + 1}{b + 1}" for a in range(n) for b in range(n)]
    sparse = []
    for a in range(n):
        for b in range(n):
            for d in range(n):
                # e_ab e_bd = e_ad
                sparse.append([a * n + b, b * n + d, a * n + d, 1])
    return SCAlgebra(field, dense_constants(field, n * n, sparse), names)


def upper_triangular(n: int, p: int) -> SCAlgebra:
    field = PrimeField(p)
    units = [(a, b) for a in range(n) for b in range(a, n)]
    index = {unit: i for i, unit in enumerate(units)}
    sparse = []
    for (a, b), i in index.items():
        for d in range(b, n):
            sparse.append([i, index[(b, d)], index[(a, d)], 1])
    names = [f"e{a + 1}{b + 1}" for a, b in units]
    return SCAlgebra(field, dense_constants(field, len(units), sparse), names)


def truncated_polynomial(degree: int, p: int) -> SCAlgebra:
    """
    F_p[x]/(x^degree) on the monomials 1, x, ..., x^(degree-1).
    """
    field = PrimeField(p)
    sparse = [[i, j, i + j, 1] for i in range(degree) for j in range(degree) if i + j < degree]
    names = ["1" if i == 0 else ("x" if i == 1 else f"x^{i}") for i in range(degree)]
    return SCAlgebra(field, dense_constants(field, degree, sparse), names)


def zero_algebra(p: int, dim: int = 0) -> SCAlgebra:
    field = PrimeField(p)
    return SCAlgebra(field, field.zeros((dim, dim, dim)), [f"e{i}" for i in range(dim)])


LIBRARY: t.Dict[str, t.Callable[[int], SCAlgebra]] = {
    "m2": lambda p: matrix_algebra(2, p),
    "m3": lambda p: matrix_algebra(3, p),
    "t2": lambda p: upper_triangular(2, p),
    "t3": lambda p: upper_triangular(3, p),
    "x2": lambda p: truncated_polynomial(2, p),
    "x3": lambda p: truncated_polynomial(3, p),
    "zero": zero_algebra,
}


def get_library_algebra(name: str, p: int) -> SCAlgebra:
    try:
        builder = LIBRARY[name]
    except KeyError as e:
        raise ConfigException(f"Unknown library algebra: {name} (known: {', '.join(sorted(LIBRARY))})") from e
    return builder(p)
