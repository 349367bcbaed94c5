import typing as t
from abc import ABCMeta, abstractmethod

import numpy as np

from ..field import PrimeField
from ..exception import StructureException


E = t.TypeVar("E")

PMap = t.Callable[[t.Any], t.Any]


class VectorOps(t.Generic[E], metaclass=ABCMeta):
    """
    Linear-algebra surface shared by every algebra the verifiers can run on.
    Elements are opaque to the laws; everything goes through these methods.
    """

    _field: PrimeField

    @property
    def field(self) -> PrimeField:
        return self._field

    @property
    def p(self) -> int:
        return self._field.p

    @abstractmethod
    def zero(self) -> E:
        raise NotImplementedError

    @abstractmethod
    def add(self, a: E, b: E) -> E:
        raise NotImplementedError

    @abstractmethod
    def scale(self, a: E, c: int) -> E:
        raise NotImplementedError

    @abstractmethod
    def is_zero(self, a: E) -> bool:
        raise NotImplementedError

    @abstractmethod
    def basis(self, max_degree: t.Optional[int] = None) -> t.List[E]:
        """
        Basis elements used by exhaustive plans. Graded structures cut at max_degree,
        finite-dimensional ones ignore it.
        """
        raise NotImplementedError

    @abstractmethod
    def random_element(self, rng: np.random.Generator, max_degree: t.Optional[int] = None, terms: int = 3) -> E:
        raise NotImplementedError

    @abstractmethod
    def describe(self, a: E) -> t.Any:
        """
        JSON-serializable exact form of an element, used in reports.
        """
        raise NotImplementedError

    def degree(self, a: E) -> int:
        # pylint: disable=unused-argument
        return 0

    def sub(self, a: E, b: E) -> E:
        return self.add(a, self.scale(b, -1))

    def equal(self, a: E, b: E) -> bool:
        return self.is_zero(self.sub(a, b))

    def sum(self, items: t.Iterable[E]) -> E:
        acc = self.zero()
        for item in items:
            acc = self.add(acc, item)
        return acc

    def random_homogeneous(self, rng: np.random.Generator, degree: int, terms: int = 3) -> E:
        # pylint: disable=unused-argument
        return self.random_element(rng, degree, terms)


class LieOps(VectorOps[E]):
    @abstractmethod
    def lie(self, a: E, b: E) -> E:
        raise NotImplementedError

    def ad_power(self, x: E, y: E, times: int) -> E:
        """
        [x,[x,[...[x,y]]]] with `times` copies of x.
        """
        for _ in range(times):
            y = self.lie(x, y)
        return y


class PreLieOps(LieOps[E]):
    @abstractmethod
    def prelie(self, a: E, b: E) -> E:
        raise NotImplementedError

    def lie(self, a: E, b: E) -> E:
        return self.sub(self.prelie(a, b), self.prelie(b, a))

    def prelie_power(self, x: E, y: E, times: int) -> E:
        """
        {x,{x,{...{x,y}}}} with `times` copies of x.
        """
        for _ in range(times):
            y = self.prelie(x, y)
        return y

    def associator(self, x: E, y: E, z: E) -> E:
        return self.sub(self.prelie(x, self.prelie(y, z)), self.prelie(self.prelie(x, y), z))


class AssociativeOps(LieOps[E]):
    @abstractmethod
    def mul(self, a: E, b: E) -> E:
        raise NotImplementedError

    def lie(self, a: E, b: E) -> E:
        return self.sub(self.mul(a, b), self.mul(b, a))

    def power(self, x: E, n: int) -> E:
        if n < 1:
            raise StructureException("Only positive powers exist in a non-unital algebra")
        acc = x
        for _ in range(n - 1):
            acc = self.mul(acc, x)
        return acc

    def frobenius(self, x: E) -> E:
        return self.power(x, self.p)


class DendriformOps(PreLieOps[E]):
    @abstractmethod
    def left(self, a: E, b: E) -> E:
        """
        a ≺ b
        """
        raise NotImplementedError

    @abstractmethod
    def right(self, a: E, b: E) -> E:
        """
        a ≻ b
        """
        raise NotImplementedError

    def star(self, a: E, b: E) -> E:
        return self.add(self.left(a, b), self.right(a, b))

    def prelie(self, a: E, b: E) -> E:
        return self.sub(self.right(a, b), self.left(b, a))

    def lie_via_star(self, a: E, b: E) -> E:
        return self.sub(self.star(a, b), self.star(b, a))

    def star_power(self, x: E, n: t.Optional[int] = None) -> E:
        n = self.p if n is None else n
        acc = x
        for _ in range(n - 1):
            acc = self.star(acc, x)
        return acc


class StarAlgebra(AssociativeOps[E], t.Generic[E]):
    """
    The associative algebra (D, ⋆) underlying a dendriform structure.
    """

    _dend: DendriformOps[E]

    def __init__(self, dend: DendriformOps[E]):
        self._dend = dend
        self._field = dend.field

    def mul(self, a: E, b: E) -> E:
        return self._dend.star(a, b)

    def zero(self) -> E:
        return self._dend.zero()

    def add(self, a: E, b: E) -> E:
        return self._dend.add(a, b)

    def scale(self, a: E, c: int) -> E:
        return self._dend.scale(a, c)

    def is_zero(self, a: E) -> bool:
        return self._dend.is_zero(a)

    def basis(self, max_degree: t.Optional[int] = None) -> t.List[E]:
        return self._dend.basis(max_degree)

    def random_element(self, rng: np.random.Generator, max_degree: t.Optional[int] = None, terms: int = 3) -> E:
        return self._dend.random_element(rng, max_degree, terms)

    def random_homogeneous(self, rng: np.random.Generator, degree: int, terms: int = 3) -> E:
        return self._dend.random_homogeneous(rng, degree, terms)

    def describe(self, a: E) -> t.Any:
        return self._dend.describe(a)

    def degree(self, a: E) -> int:
        return self._dend.degree(a)


class InducedLie(LieOps[E], t.Generic[E]):
    """
    The Lie algebra (P, [x,y] = {x,y} - {y,x}) of a pre-Lie structure.
    """

    _prelie: PreLieOps[E]

    def __init__(self, prelie: PreLieOps[E]):
        self._prelie = prelie
        self._field = prelie.field

    def lie(self, a: E, b: E) -> E:
        return self._prelie.lie(a, b)

    def zero(self) -> E:
        return self._prelie.zero()

    def add(self, a: E, b: E) -> E:
        return self._prelie.add(a, b)

    def scale(self, a: E, c: int) -> E:
        return self._prelie.scale(a, c)

    def is_zero(self, a: E) -> bool:
        return self._prelie.is_zero(a)

    def basis(self, max_degree: t.Optional[int] = None) -> t.List[E]:
        return self._prelie.basis(max_degree)

    def random_element(self, rng: np.random.Generator, max_degree: t.Optional[int] = None, terms: int = 3) -> E:
        return self._prelie.random_element(rng, max_degree, terms)

    def random_homogeneous(self, rng: np.random.Generator, degree: int, terms: int = 3) -> E:
        return self._prelie.random_homogeneous(rng, degree, terms)

    def describe(self, a: E) -> t.Any:
        return self._prelie.describe(a)

    def degree(self, a: E) -> int:
        return self._prelie.degree(a)
