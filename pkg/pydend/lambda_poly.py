import typing as t

from .structures.abstract import LieOps, VectorOps


E = t.TypeVar("E")


class LambdaPoly(t.Generic[E]):
    """
    Polynomial in a formal variable λ with coefficients in an algebra. Trailing
    zero coefficients are trimmed.
    """

    _ops: VectorOps[E]
    _coeffs: t.List[E]

    def __init__(self, ops: VectorOps[E], coeffs: t.Sequence[E]):
        self._ops = ops
        self._coeffs = list(coeffs)
        while self._coeffs and ops.is_zero(self._coeffs[-1]):
            self._coeffs.pop()

    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, i: int) -> E:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return self._ops.zero()

    def coefficients(self) -> t.List[E]:
        return list(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other: "LambdaPoly[E]") -> "LambdaPoly[E]":
        n = max(len(self._coeffs), len(other._coeffs))
        return LambdaPoly(self._ops, [self._ops.add(self.coefficient(i), other.coefficient(i)) for i in range(n)])

    def shifted(self) -> "LambdaPoly[E]":
        """
        Multiplication by λ.
        """
        if not self._coeffs:
            return self
        return LambdaPoly(self._ops, [self._ops.zero()] + self._coeffs)

    def map(self, fn: t.Callable[[E], E]) -> "LambdaPoly[E]":
        return LambdaPoly(self._ops, [fn(c) for c in self._coeffs])


def bracket_with_pencil(ops: LieOps[E], x: E, y: E, poly: LambdaPoly[E]) -> LambdaPoly[E]:
    """
    [λx + y, poly]
    """
    with_x = poly.map(lambda c: ops.lie(x, c)).shifted()
    with_y = poly.map(lambda c: ops.lie(y, c))
    return with_x + with_y


def pencil_product(ops: LieOps[E], x: E, y: E) -> LambdaPoly[E]:
    """
    The formal (p-1)-fold product [λx+y, [λx+y, ..., [λx+y, x]...]], read innermost first.
    """
    poly: LambdaPoly[E] = LambdaPoly(ops, [x])
    for _ in range(ops.p - 1):
        poly = bracket_with_pencil(ops, x, y, poly)
    return poly


def s_coefficients(x: E, y: E, ops: LieOps[E]) -> t.List[E]:
    """
    Jacobson's s_1(x, y), ..., s_{p-1}(x, y): i * s_i is the coefficient of λ^(i-1)
    in the pencil product.
    """
    field = ops.field
    poly = pencil_product(ops, x, y)
    return [ops.scale(poly.coefficient(i - 1), field.inv(i)) for i in range(1, field.p)]


def jacobson_defect(x: E, y: E, ops: LieOps[E]) -> E:
    """
    Σ s_i(x, y), the amount by which a p-map fails to be additive.
    """
    return ops.sum(s_coefficients(x, y, ops))
