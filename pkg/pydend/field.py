import typing as t
import typing_extensions as te
import numpy as np
from .exception import FieldException


MAX_MODULUS: te.Final = 2**31 - 1
_INT64_LIMIT: te.Final = 2**63 - 1
_MILLER_RABIN_BASES: te.Final = (2, 3, 5, 7)


class FieldOp:
    ADD: te.Final = "add"
    SUB: te.Final = "sub"
    MUL: te.Final = "mul"


def is_prime(n: int) -> bool:
    """
    Deterministic Miller-Rabin. Bases 2, 3, 5, 7 are exact for n < 3215031751,
    which covers every supported modulus.
    """
    if n < 2:
        return False
    for q in _MILLER_RABIN_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MILLER_RABIN_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """
    The prime field F_p. Containers (tree elements, structure-constant tensors) keep
    one PrimeField and plain int residues instead of a modulus per coefficient.
    """

    _p: int

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise FieldException(f"Modulus must be an integer, got {p!r}")
        if p < 2 or p > MAX_MODULUS:
            raise FieldException(f"Modulus {p} outside supported range [2, {MAX_MODULUS}]")
        if not is_prime(p):
            raise FieldException(f"Modulus {p} is not prime")
        self._p = p

    @property
    def p(self) -> int:
        return self._p

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other._p == self._p

    def __hash__(self) -> int:
        return hash(("F", self._p))

    def __repr__(self) -> str:
        return f"F_{self._p}"

    def check_same(self, other: "PrimeField") -> None:
        if other._p != self._p:
            raise FieldException(f"Modulus mismatch: {self._p} != {other._p}")

    def scalar(self, value: int) -> "FpScalar":
        return FpScalar(value, self._p)

    def reduce(self, value: int) -> int:
        return value % self._p

    def inv(self, value: int) -> int:
        value %= self._p
        if value == 0:
            raise FieldException(f"Division by zero in F_{self._p}")
        return pow(value, self._p - 2, self._p)

    def power(self, value: int, exponent: int) -> int:
        return pow(value % self._p, exponent, self._p)

    def elements(self) -> t.Iterator[int]:
        return iter(range(self._p))

    def dtype_for(self, terms: int) -> t.Any:
        """
        numpy dtype able to hold a sum of `terms` products of two residues exactly.
        """
        if terms * (self._p - 1) ** 2 <= _INT64_LIMIT:
            return np.int64
        return object

    def array(self, data: t.Any, terms: int = 1) -> np.ndarray:
        arr = np.array(data, dtype=self.dtype_for(max(terms, 1)))
        return arr % self._p

    def zeros(self, shape: t.Union[int, t.Tuple[int, ...]], terms: int = 1) -> np.ndarray:
        return np.zeros(shape, dtype=self.dtype_for(max(terms, 1)))


class FpScalar:
    _value: int
    _modulus: int

    def __init__(self, value: int, modulus: int):
        if not is_prime(modulus) or modulus > MAX_MODULUS:
            raise FieldException(f"Modulus {modulus} is not a supported prime")
        self._modulus = modulus
        self._value = int(value) % modulus

    @property
    def value(self) -> int:
        return self._value

    @property
    def modulus(self) -> int:
        return self._modulus

    def __int__(self) -> int:
        return self._value

    def __repr__(self) -> str:
        return f"{self._value} (mod {self._modulus})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FpScalar):
            return self._modulus == other._modulus and self._value == other._value
        if isinstance(other, int):
            return self._value == other % self._modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._value, self._modulus))

    def __add__(self, other: "FpScalar") -> "FpScalar":
        return field_ops(self, other, FieldOp.ADD)

    def __sub__(self, other: "FpScalar") -> "FpScalar":
        return field_ops(self, other, FieldOp.SUB)

    def __mul__(self, other: "FpScalar") -> "FpScalar":
        return field_ops(self, other, FieldOp.MUL)

    def __neg__(self) -> "FpScalar":
        return FpScalar(-self._value, self._modulus)

    def __pow__(self, exponent: int) -> "FpScalar":
        return fp_pow(self, exponent)

    def is_zero(self) -> bool:
        return self._value == 0


def field_ops(a: FpScalar, b: FpScalar, kind: str) -> FpScalar:
    if a.modulus != b.modulus:
        raise FieldException(f"Modulus mismatch: {a.modulus} != {b.modulus}")
    if kind == FieldOp.ADD:
        res = a.value + b.value
    elif kind == FieldOp.SUB:
        res = a.value - b.value
    elif kind == FieldOp.MUL:
        res = a.value * b.value
    else:
        raise FieldException(f"Unknown field operation: {kind}")
    return FpScalar(res, a.modulus)


def fp_pow(a: FpScalar, exponent: int) -> FpScalar:
    if exponent < 0:
        return fp_pow(fp_inv(a), -exponent)
    return FpScalar(pow(a.value, exponent, a.modulus), a.modulus)


def fp_inv(a: FpScalar) -> FpScalar:
    if a.value == 0:
        raise FieldException(f"Division by zero in F_{a.modulus}")
    return FpScalar(pow(a.value, a.modulus - 2, a.modulus), a.modulus)
