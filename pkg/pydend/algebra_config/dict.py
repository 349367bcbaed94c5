import typing as t

from pydantic import ValidationError

from ..envelope import PreLieData
from ..exception import ConfigException
from ..field import PrimeField
from ..models import AlgebraModel, PreLieModel
from ..scalg import BilinearStructure, LinearOperator, SCAlgebra, StructureTag, TensorElement
from ..structures.table import dense_constants
from .abstract import AlgebraConfAbstract


TJsonData = t.Dict[str, t.Any]


def _validation_message(e: ValidationError) -> str:
    parts = []
    for err in e.errors():
        where = ".".join(str(loc) for loc in err["loc"]) or "payload"
        parts.append(f"{where}: {err['msg']}")
    return "; ".join(parts)


class AlgebraConfDict(AlgebraConfAbstract):
    _algebra_model: t.Optional[AlgebraModel] = None
    _prelie_model: t.Optional[PreLieModel] = None
    _algebra: t.Optional[SCAlgebra] = None

    def __init__(self, json_data: TJsonData):
        """
        json_data is either an associative algebra

            {"p": 2, "dim": 2, "basis": ["1", "x"], "constants": [[0, 0, 0, 1], ...],
             "operator": {"matrix": [...]}, "tensor": {"summands": [[u, v]]},
             "left": [[i, j, k, c], ...], "right": [[i, j, k, c], ...]}

        where operator, tensor and left/right are optional, or a pre-Lie algebra

            {"p": 2, "dim": 1, "basis": ["x"], "bracket": [], "pmap": [[0]]}
        """
        if not isinstance(json_data, dict):
            raise ConfigException("Invalid algebra format. Must be dict")
        try:
            if "bracket" in json_data:
                self._prelie_model = PreLieModel(**json_data)
            else:
                self._algebra_model = AlgebraModel(**json_data)
        except ValidationError as e:
            raise ConfigException(f"Invalid algebra: {_validation_message(e)}") from e

    def is_prelie(self) -> bool:
        return self._prelie_model is not None

    def _model(self) -> AlgebraModel:
        if self._algebra_model is None:
            raise ConfigException("Payload describes a pre-Lie algebra, not an associative one")
        return self._algebra_model

    def find_algebra(self) -> SCAlgebra:
        if self._algebra is None:
            model = self._model()
            field = PrimeField(model.p)
            self._algebra = SCAlgebra(field, dense_constants(field, model.dim, model.constants), model.basis)
        return self._algebra

    def find_operator(self) -> t.Optional[LinearOperator]:
        model = self._model()
        if model.operator is None:
            return None
        return LinearOperator.from_row_major(PrimeField(model.p), model.dim, model.operator.matrix)

    def find_tensor(self) -> t.Optional[TensorElement]:
        model = self._model()
        if model.tensor is None:
            return None
        return TensorElement(self.find_algebra(), [(u, v) for u, v in model.tensor.summands])

    def find_dendriform(self) -> t.Optional[BilinearStructure]:
        model = self._model()
        if model.left is None or model.right is None:
            return None
        return BilinearStructure.from_sparse(
            PrimeField(model.p), model.dim, model.left, model.right, StructureTag.DENDRIFORM, model.basis
        )

    def find_prelie(self) -> PreLieData:
        if self._prelie_model is None:
            raise ConfigException("Payload describes an associative algebra, not a pre-Lie one")
        return PreLieData.from_model(self._prelie_model)

    @property
    def source(self) -> str:
        return "inline payload"
