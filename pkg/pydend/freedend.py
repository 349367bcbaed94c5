import functools
import logging
import typing as t

import numpy as np
import typing_extensions as te

from .exception import FieldException, StructureException, TreeException
from .field import FpScalar, PrimeField
from .structures.abstract import DendriformOps
from .trees import PlanarTree, decode_tree, enumerate_trees, generator_tree, trees_up_to


logger = logging.getLogger(__name__)

TTermJson = te.TypedDict("TTermJson", {"tree": str, "coeff": int})
TBasisProduct = t.Tuple[t.Tuple[PlanarTree, int], ...]


@functools.lru_cache(maxsize=None)
def _basis_left(s: PlanarTree, u: PlanarTree) -> TBasisProduct:
    # s ≺ u = s_l ∨ (s_r ⋆ u); unit ≺ u = 0, s ≺ unit = s
    if u.is_leaf():
        return ((s, 1),)
    if s.is_leaf():
        return ()
    label = s.get_label()
    left = s.get_left()
    return tuple((PlanarTree(left, label, w), c) for w, c in _basis_star(s.get_right(), u))


@functools.lru_cache(maxsize=None)
def _basis_right(s: PlanarTree, u: PlanarTree) -> TBasisProduct:
    # s ≻ u = (s ⋆ u_l) ∨ u_r; unit ≻ u = u, s ≻ unit = 0
    if s.is_leaf():
        return ((u, 1),)
    if u.is_leaf():
        return ()
    label = u.get_label()
    right = u.get_right()
    return tuple((PlanarTree(w, label, right), c) for w, c in _basis_star(s, u.get_left()))


@functools.lru_cache(maxsize=None)
def _basis_star(s: PlanarTree, u: PlanarTree) -> TBasisProduct:
    if s.is_leaf():
        return ((u, 1),)
    if u.is_leaf():
        return ((s, 1),)
    acc: t.Dict[PlanarTree, int] = {}
    for part in (_basis_left(s, u), _basis_right(s, u)):
        for w, c in part:
            acc[w] = acc.get(w, 0) + c
    return tuple(sorted(acc.items(), key=lambda item: item[0].sort_key()))


def basis_cache_size() -> int:
    return sum(rule.cache_info().currsize for rule in (_basis_left, _basis_right, _basis_star))


class DendElement:
    """
    Finitely supported F_p-combination of labeled planar binary trees, i.e. an
    element of the free dendriform algebra on `generators` letters.
    """

    _field: PrimeField
    _generators: int
    _terms: t.Dict[PlanarTree, int]

    def __init__(
        self,
        field: PrimeField,
        generators: int,
        terms: t.Optional[t.Mapping[PlanarTree, int]] = None,
    ):
        self._field = field
        self._generators = generators
        self._terms = {}
        for tree, coeff in (terms or {}).items():
            if tree.is_leaf():
                raise TreeException("The bare leaf is not a basis element")
            if tree.max_label() >= generators:
                raise TreeException(f"Label {tree.max_label()} out of range for {generators} generator(s)")
            c = coeff % field.p
            if c:
                self._terms[tree] = c

    @classmethod
    def _trusted(cls, field: PrimeField, generators: int, terms: t.Dict[PlanarTree, int]) -> "DendElement":
        obj = cls.__new__(cls)
        obj._field = field
        obj._generators = generators
        obj._terms = {k: v for k, v in terms.items() if v}
        return obj

    @property
    def field(self) -> PrimeField:
        return self._field

    @property
    def generators(self) -> int:
        return self._generators

    def items(self) -> t.List[t.Tuple[PlanarTree, int]]:
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def support(self) -> t.List[PlanarTree]:
        return [tree for tree, _ in self.items()]

    def coefficient(self, tree: PlanarTree) -> FpScalar:
        return self._field.scalar(self._terms.get(tree, 0))

    def is_zero(self) -> bool:
        return not self._terms

    def max_degree(self) -> int:
        return max((tree.degree for tree in self._terms), default=0)

    def min_degree(self) -> int:
        return min((tree.degree for tree in self._terms), default=0)

    def homogeneous_part(self, n: int) -> "DendElement":
        return DendElement._trusted(
            self._field, self._generators, {k: v for k, v in self._terms.items() if k.degree == n}
        )

    def truncated(self, d: int) -> "DendElement":
        return DendElement._trusted(
            self._field, self._generators, {k: v for k, v in self._terms.items() if k.degree <= d}
        )

    def check_compatible(self, other: "DendElement") -> None:
        if other._field != self._field or other._generators != self._generators:
            raise StructureException(
                f"Incompatible elements: (p={self._field.p}, g={self._generators}) "
                f"vs (p={other._field.p}, g={other._generators})"
            )

    def __add__(self, other: "DendElement") -> "DendElement":
        self.check_compatible(other)
        p = self._field.p
        terms = dict(self._terms)
        for k, v in other._terms.items():
            terms[k] = (terms.get(k, 0) + v) % p
        return DendElement._trusted(self._field, self._generators, terms)

    def __neg__(self) -> "DendElement":
        return self.scale(-1)

    def __sub__(self, other: "DendElement") -> "DendElement":
        return self + other.scale(-1)

    def scale(self, c: t.Union[int, FpScalar]) -> "DendElement":
        if isinstance(c, FpScalar):
            if c.modulus != self._field.p:
                raise FieldException(f"Modulus mismatch: {self._field.p} != {c.modulus}")
            c = c.value
        p = self._field.p
        c %= p
        return DendElement._trusted(self._field, self._generators, {k: v * c % p for k, v in self._terms.items()})

    def __rmul__(self, c: t.Union[int, FpScalar]) -> "DendElement":
        return self.scale(c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DendElement):
            return NotImplemented
        return (
            self._field == other._field
            and self._generators == other._generators
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self._field.p, self._generators, tuple(self.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{tree.encode()}" for tree, c in self.items())

    def to_json(self) -> t.List[TTermJson]:
        return [{"tree": tree.encode(), "coeff": c} for tree, c in self.items()]

    @classmethod
    def from_json(cls, field: PrimeField, generators: int, data: t.Sequence[TTermJson]) -> "DendElement":
        terms: t.Dict[PlanarTree, int] = {}
        for item in data:
            tree = decode_tree(item["tree"], generators)
            terms[tree] = terms.get(tree, 0) + int(item["coeff"])
        return cls(field, generators, terms)


class DendOperator:
    """
    Linear operator on Dend(X), kept as a closure so sums and compositions stay lazy.
    """

    _fn: t.Callable[[DendElement], DendElement]
    _name: str

    def __init__(self, fn: t.Callable[[DendElement], DendElement], name: str = "op"):
        self._fn = fn
        self._name = name

    def __call__(self, y: DendElement) -> DendElement:
        return self._fn(y)

    def __repr__(self) -> str:
        return self._name

    def compose(self, other: "DendOperator") -> "DendOperator":
        return DendOperator(lambda y: self(other(y)), f"{self._name}∘{other._name}")

    def __sub__(self, other: "DendOperator") -> "DendOperator":
        return DendOperator(lambda y: self(y) - other(y), f"({self._name}-{other._name})")

    def __add__(self, other: "DendOperator") -> "DendOperator":
        return DendOperator(lambda y: self(y) + other(y), f"({self._name}+{other._name})")

    def power(self, n: int) -> "DendOperator":
        def apply(y: DendElement) -> DendElement:
            for _ in range(n):
                y = self(y)
            return y

        return DendOperator(apply, f"{self._name}^{n}")


class FreeDendriform(DendriformOps[DendElement]):
    """
    Dend(X) over F_p with |X| = generators. When `truncation` is set every product
    drops the terms above that degree.
    """

    _generators: int
    _truncation: t.Optional[int]

    def __init__(self, field: PrimeField, generators: int, truncation: t.Optional[int] = None):
        if generators < 0:
            raise StructureException("Generator count must be non-negative")
        self._field = field
        self._generators = generators
        self._truncation = truncation

    @property
    def generators(self) -> int:
        return self._generators

    @property
    def truncation(self) -> t.Optional[int]:
        return self._truncation

    def element(self, terms: t.Optional[t.Mapping[PlanarTree, int]] = None) -> DendElement:
        return DendElement(self._field, self._generators, terms)

    def zero(self) -> DendElement:
        return DendElement._trusted(self._field, self._generators, {})

    def generator(self, label: int) -> DendElement:
        return self.element({generator_tree(label, self._generators): 1})

    def tree(self, tree: PlanarTree, coeff: int = 1) -> DendElement:
        return self.element({tree: coeff})

    def _check(self, x: DendElement) -> None:
        if x.field != self._field or x.generators != self._generators:
            raise StructureException(
                f"Element over (p={x.field.p}, g={x.generators}) used in Dend over "
                f"(p={self._field.p}, g={self._generators})"
            )

    def _bilinear(
        self,
        x: DendElement,
        y: DendElement,
        rule: t.Callable[[PlanarTree, PlanarTree], TBasisProduct],
    ) -> DendElement:
        self._check(x)
        self._check(y)
        p = self._field.p
        limit = self._truncation
        acc: t.Dict[PlanarTree, int] = {}
        cached = basis_cache_size()
        for s, a in x._terms.items():
            for u, b in y._terms.items():
                if limit is not None and s.degree + u.degree > limit:
                    continue
                ab = a * b
                for w, c in rule(s, u):
                    acc[w] = (acc.get(w, 0) + ab * c) % p
        grown = basis_cache_size()
        if grown > cached:
            logger.debug("Basis product cache grew by %d to %d entries", grown - cached, grown)
        return DendElement._trusted(self._field, self._generators, acc)

    def left(self, a: DendElement, b: DendElement) -> DendElement:
        return self._bilinear(a, b, _basis_left)

    def right(self, a: DendElement, b: DendElement) -> DendElement:
        return self._bilinear(a, b, _basis_right)

    def star(self, a: DendElement, b: DendElement) -> DendElement:
        return self._bilinear(a, b, _basis_star)

    def star_power(self, x: DendElement, n: t.Optional[int] = None) -> DendElement:
        if n is not None and n != self._field.p:
            raise FieldException(f"p-map exponent {n} does not match the characteristic {self._field.p}")
        return super().star_power(x)

    def op_L(self, x: DendElement) -> DendOperator:
        # pylint: disable=invalid-name
        self._check(x)
        return DendOperator(lambda y: self.right(x, y), "L_x")

    def op_R(self, x: DendElement) -> DendOperator:
        # pylint: disable=invalid-name
        self._check(x)
        return DendOperator(lambda y: self.left(y, x), "R_x")

    def dzhumadildaev_power(self, x: DendElement) -> DendElement:
        """
        x^{p} = {x,{x,...{x,x}}} with p copies of x.
        """
        return self.prelie_power(x, x, self._field.p - 1)

    def add(self, a: DendElement, b: DendElement) -> DendElement:
        return a + b

    def scale(self, a: DendElement, c: int) -> DendElement:
        return a.scale(c)

    def is_zero(self, a: DendElement) -> bool:
        return a.is_zero()

    def degree(self, a: DendElement) -> int:
        return a.max_degree()

    def basis(self, max_degree: t.Optional[int] = None) -> t.List[DendElement]:
        d = max_degree if max_degree is not None else self._truncation
        if d is None:
            raise StructureException("Dend(X) is infinite-dimensional: a degree bound is required")
        return [self.tree(tree) for tree in trees_up_to(d, self._generators)]

    def homogeneous_basis(self, n: int) -> t.List[DendElement]:
        if self._generators < 1:
            return []
        return [self.tree(tree) for tree in enumerate_trees(n, self._generators)]

    def _random_from(self, rng: np.random.Generator, pool: t.Sequence[PlanarTree], terms: int) -> DendElement:
        if not pool:
            return self.zero()
        p = self._field.p
        chosen = rng.choice(len(pool), size=min(terms, len(pool)), replace=False)
        return self.element({pool[int(i)]: int(rng.integers(1, p)) for i in sorted(chosen)})

    def random_element(
        self, rng: np.random.Generator, max_degree: t.Optional[int] = None, terms: int = 3
    ) -> DendElement:
        d = max_degree if max_degree is not None else (self._truncation or 3)
        return self._random_from(rng, trees_up_to(d, self._generators), terms)

    def random_homogeneous(self, rng: np.random.Generator, degree: int, terms: int = 3) -> DendElement:
        if self._generators < 1:
            return self.zero()
        return self._random_from(rng, enumerate_trees(degree, self._generators), terms)

    def describe(self, a: DendElement) -> t.List[TTermJson]:
        return a.to_json()


def _ambient(x: DendElement) -> FreeDendriform:
    return FreeDendriform(x.field, x.generators)


def dend_left(x: DendElement, y: DendElement) -> DendElement:
    x.check_compatible(y)
    return _ambient(x).left(x, y)


def dend_right(x: DendElement, y: DendElement) -> DendElement:
    x.check_compatible(y)
    return _ambient(x).right(x, y)


def star(x: DendElement, y: DendElement) -> DendElement:
    x.check_compatible(y)
    return _ambient(x).star(x, y)


def prelie_bracket(x: DendElement, y: DendElement) -> DendElement:
    x.check_compatible(y)
    return _ambient(x).prelie(x, y)


def lie_bracket(x: DendElement, y: DendElement) -> DendElement:
    x.check_compatible(y)
    return _ambient(x).lie(x, y)


def star_power(x: DendElement, p: int) -> DendElement:
    return _ambient(x).star_power(x, p)


def op_L(x: DendElement) -> DendOperator:
    # pylint: disable=invalid-name
    return _ambient(x).op_L(x)


def op_R(x: DendElement) -> DendOperator:
    # pylint: disable=invalid-name
    return _ambient(x).op_R(x)
