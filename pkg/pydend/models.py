"""
Schemas of every JSON input the package reads.
"""
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from .field import MAX_MODULUS, is_prime


class PrimeModel(BaseModel):
    """Anything carrying a characteristic p."""
    p: int = Field(2, description="Characteristic")

    @field_validator("p")
    @classmethod
    def prime_modulus(cls, p: int) -> int:
        if not 2 <= p <= MAX_MODULUS or not is_prime(p):
            raise ValueError(f"p must be a prime below 2^31, got {p}")
        return p


def _check_sparse(entries: List[List[int]], dim: int, what: str) -> None:
    for entry in entries:
        if len(entry) != 4:
            raise ValueError(f"{what} entries must be [i, j, k, coeff], got {entry}")
        if not all(0 <= v < dim for v in entry[:3]):
            raise ValueError(f"{what} index out of range for dim {dim}: {entry}")


class OperatorModel(BaseModel):
    """Linear operator, row-major."""
    matrix: List[int] = Field(..., description="Row-major n x n entries; column j is the image of e_j")


class TensorModel(BaseModel):
    """Element Σ u_i ⊗ v_i of A ⊗ A."""
    summands: List[List[List[int]]] = Field(default_factory=list, description="Pairs [u, v] of coordinate vectors")

    @field_validator("summands")
    @classmethod
    def pairs_only(cls, value: List[List[List[int]]]) -> List[List[List[int]]]:
        for pair in value:
            if len(pair) != 2:
                raise ValueError(f"Tensor summands must be [u, v] pairs, got {len(pair)} vectors")
        return value


class AlgebraModel(PrimeModel):
    """Associative algebra by structure constants, with optional operator, tensor or explicit splitting."""
    p: int = Field(..., description="Characteristic")
    dim: int = Field(..., ge=0, description="Dimension")
    basis: Optional[List[str]] = Field(None, description="Basis names")
    constants: List[List[int]] = Field(default_factory=list, description="Sparse [i, j, k, coeff] entries")
    operator: Optional[OperatorModel] = Field(None, description="Rota-Baxter operator candidate")
    tensor: Optional[TensorModel] = Field(None, description="AYBE tensor candidate")
    left: Optional[List[List[int]]] = Field(None, description="Sparse constants of x ≺ y")
    right: Optional[List[List[int]]] = Field(None, description="Sparse constants of x ≻ y")

    @model_validator(mode="after")
    def consistent_shapes(self) -> "AlgebraModel":
        n = self.dim
        if self.basis is not None and len(self.basis) != n:
            raise ValueError(f"basis has {len(self.basis)} names for dim {n}")
        _check_sparse(self.constants, n, "constants")
        if (self.left is None) != (self.right is None):
            raise ValueError("left and right must be given together")
        if self.left is not None and self.right is not None:
            _check_sparse(self.left, n, "left")
            _check_sparse(self.right, n, "right")
        if self.operator is not None and len(self.operator.matrix) != n * n:
            raise ValueError(f"operator needs {n * n} entries, got {len(self.operator.matrix)}")
        if self.tensor is not None:
            for u, v in self.tensor.summands:
                if len(u) != n or len(v) != n:
                    raise ValueError(f"tensor vectors must have length {n}")
        return self


class PreLieModel(PrimeModel):
    """Pre-Lie algebra by structure constants, optionally with a p-map table."""
    p: int = Field(..., description="Characteristic")
    dim: int = Field(..., ge=0, description="Dimension")
    basis: Optional[List[str]] = Field(None, description="Basis names")
    bracket: List[List[int]] = Field(default_factory=list, description="Sparse [i, j, k, coeff] entries")
    pmap: Optional[List[List[int]]] = Field(None, description="Row i holds the coordinates of e_i^[p]")

    @model_validator(mode="after")
    def consistent_shapes(self) -> "PreLieModel":
        n = self.dim
        if self.basis is not None and len(self.basis) != n:
            raise ValueError(f"basis has {len(self.basis)} names for dim {n}")
        _check_sparse(self.bracket, n, "bracket")
        if self.pmap is not None:
            if len(self.pmap) != n or any(len(row) != n for row in self.pmap):
                raise ValueError(f"pmap must be a {n} x {n} table")
        return self


class RunConfig(PrimeModel):
    """One CLI invocation."""
    command: Literal["verify", "envelope", "search", "dims"] = Field(..., description="Subcommand")
    g: int = Field(1, ge=0, description="Generators of the free dendriform algebra")
    d: int = Field(3, ge=1, description="Degree bound / truncation")
    seed: int = Field(0, ge=0, lt=2**64, description="Seed of every random draw")
    samples: int = Field(200, ge=0, description="Random samples per p-map law")
    format: Literal["json", "csv"] = Field("json", description="Output format")
    output: Optional[str] = Field(None, description="Output path, stdout when missing")
    algebra: Optional[str] = Field(None, description="Algebra or pre-Lie JSON file, or a fixture name")
    free: bool = Field(False, description="Run on the free dendriform algebra")
    suite: str = Field("all", description="Law suite")
    pmap: Optional[Literal["frobenius", "table", "star-power", "algebra-power"]] = Field(
        None, description="p-map choice"
    )
    restricted: bool = Field(False, description="Compute U_p instead of U")
    kind: Literal["rota-baxter", "aybe"] = Field("rota-baxter", description="Search target")
    random: Optional[int] = Field(None, ge=1, description="Random candidates when the space exceeds the cap")
    max_candidates: int = Field(20000, ge=1, description="Largest space searched exhaustively")
    check_stability: bool = Field(False, description="Rerun at d+1 to mark stabilized degrees")
    audit: int = Field(50, ge=0, description="Random elements in the p-map membership audit")
