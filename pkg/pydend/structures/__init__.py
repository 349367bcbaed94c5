from .abstract import (
    AssociativeOps,
    DendriformOps,
    InducedLie,
    LieOps,
    PMap,
    PreLieOps,
    StarAlgebra,
    VectorOps,
)
from .coordinates import CoordinateOps, bilinear, contract
from .table import ProductTable, dense_constants, sparse_constants

__all__ = [
    "AssociativeOps",
    "CoordinateOps",
    "DendriformOps",
    "InducedLie",
    "LieOps",
    "PMap",
    "PreLieOps",
    "ProductTable",
    "StarAlgebra",
    "VectorOps",
    "bilinear",
    "contract",
    "dense_constants",
    "sparse_constants",
]
