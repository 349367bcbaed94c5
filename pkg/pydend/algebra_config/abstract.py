import logging
import typing as t
from abc import ABCMeta, abstractmethod

from ..envelope import PreLieData
from ..scalg import (
    BilinearStructure,
    LinearOperator,
    SCAlgebra,
    TensorElement,
    dendriform_from_tensor,
    induced_dendriform,
    rota_baxter_pmaps,
    trivial_dendriform,
)
from ..structures.abstract import PMap


logger = logging.getLogger(__name__)


class AlgebraConfAbstract(metaclass=ABCMeta):
    """
    Source of the algebra a run works on. Subclasses decide where the payload comes
    from; choosing the dendriform structure is shared.
    """


    @abstractmethod
    def is_prelie(self) -> bool:
        """
        True for pre-Lie payloads (a "bracket" key), False for associative algebras.
        """
        raise NotImplementedError

    @abstractmethod
    def find_algebra(self) -> SCAlgebra:
        raise NotImplementedError

    @abstractmethod
    def find_operator(self) -> t.Optional[LinearOperator]:
        raise NotImplementedError

    @abstractmethod
    def find_tensor(self) -> t.Optional[TensorElement]:
        raise NotImplementedError

    @abstractmethod
    def find_dendriform(self) -> t.Optional[BilinearStructure]:
        """
        Explicitly given ≺ and ≻ tables, never validated here.
        """
        raise NotImplementedError

    @abstractmethod
    def find_prelie(self) -> PreLieData:
        raise NotImplementedError

    def get_structure(self) -> BilinearStructure:
        """
        Explicit tables first, then a Rota-Baxter operator, then an AYBE tensor, then
        the trivial splitting x ≻ y = x·y, x ≺ y = 0. Operators and tensors go through
        their verification gates.
        """
        explicit = self.find_dendriform()
        if explicit is not None:
            logger.debug("Using the explicit dendriform tables")
            return explicit
        algebra = self.find_algebra()
        beta = self.find_operator()
        if beta is not None:
            logger.debug("Using the Rota-Baxter operator")
            return induced_dendriform(algebra, beta)
        r = self.find_tensor()
        if r is not None:
            logger.debug("Using the AYBE tensor")
            return dendriform_from_tensor(algebra, r)
        logger.debug("Using the trivial splitting of the product")
        return trivial_dendriform(algebra)

    def get_pmaps(self, structure: BilinearStructure) -> t.Dict[str, PMap]:
        """
        Named p-maps available on the chosen structure.
        """
        pmaps: t.Dict[str, PMap] = {"star-power": structure.star_power}
        if self.find_dendriform() is None:
            algebra = self.find_algebra()
            pmaps["frobenius"] = algebra.frobenius
            if self.find_operator() is not None or self.find_tensor() is not None:
                pmaps.update(rota_baxter_pmaps(algebra, structure))
        return pmaps
