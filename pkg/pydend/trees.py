import functools
import typing as t
import typing_extensions as te
from .exception import TreeException


LEAF_SYMBOL: te.Final = "·"


class PlanarTree:
    """
    Planar binary tree whose internal vertices carry generator indices.

    The bare leaf is the formal unit of the product recursions and is never a basis
    element. Trees are immutable; equality, hashing and ordering go through the
    canonical encoding.
    """

    _left: t.Optional["PlanarTree"] = None
    _label: t.Optional[int] = None
    _right: t.Optional["PlanarTree"] = None
    _degree: int = 0
    _encoding: str = LEAF_SYMBOL

    def __init__(
        self,
        left: t.Optional["PlanarTree"] = None,
        label: t.Optional[int] = None,
        right: t.Optional["PlanarTree"] = None,
    ):
        if label is None:
            if left is not None or right is not None:
                raise TreeException("A leaf can't have children")
            return
        if left is None or right is None:
            raise TreeException("An internal vertex needs two children (use LEAF)")
        self._left = left
        self._label = label
        self._right = right
        self._degree = left._degree + right._degree + 1
        self._encoding = f"({left._encoding} x{label} {right._encoding})"

    def is_leaf(self) -> bool:
        return self._label is None

    def get_left(self) -> "PlanarTree":
        if self._left is None:
            raise TreeException("The leaf has no left subtree")
        return self._left

    def get_right(self) -> "PlanarTree":
        if self._right is None:
            raise TreeException("The leaf has no right subtree")
        return self._right

    def get_label(self) -> int:
        if self._label is None:
            raise TreeException("The leaf has no label")
        return self._label

    @property
    def degree(self) -> int:
        return self._degree

    def encode(self) -> str:
        return self._encoding

    def max_label(self) -> int:
        if self._label is None:
            return -1
        return max(self._label, self.get_left().max_label(), self.get_right().max_label())

    def sort_key(self) -> t.Tuple[int, str]:
        return self._degree, self._encoding

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PlanarTree) and other._encoding == self._encoding

    def __hash__(self) -> int:
        return hash(self._encoding)

    def __lt__(self, other: "PlanarTree") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return self._encoding


LEAF: te.Final = PlanarTree()


def graft(left: PlanarTree, label: int, right: PlanarTree, generators: int) -> PlanarTree:
    if not 0 <= label < generators:
        raise TreeException(f"Label {label} out of range for {generators} generator(s)")
    return PlanarTree(left, label, right)


def generator_tree(label: int, generators: int) -> PlanarTree:
    return graft(LEAF, label, LEAF, generators)


def tree_compare(s: PlanarTree, t_: PlanarTree) -> int:
    ks, kt = s.sort_key(), t_.sort_key()
    return (ks > kt) - (ks < kt)


@functools.lru_cache(maxsize=None)
def catalan(n: int) -> int:
    if n < 0:
        return 0
    if n == 0:
        return 1
    return sum(catalan(i) * catalan(n - 1 - i) for i in range(n))


def free_dimension(n: int, generators: int) -> int:
    if n < 1:
        return 0
    return catalan(n) * generators**n


@functools.lru_cache(maxsize=None)
def _shapes(n: int, generators: int) -> t.Tuple[PlanarTree, ...]:
    if n == 0:
        return (LEAF,)
    out: t.List[PlanarTree] = []
    for i in range(n):
        for left in _shapes(i, generators):
            for right in _shapes(n - 1 - i, generators):
                for label in range(generators):
                    out.append(PlanarTree(left, label, right))
    return tuple(sorted(out, key=PlanarTree.sort_key))


def enumerate_trees(n: int, generators: int) -> t.List[PlanarTree]:
    if n < 1:
        raise TreeException("There are no basis trees in degree 0")
    if generators < 1:
        raise TreeException("At least one generator is required")
    return list(_shapes(n, generators))


def trees_up_to(d: int, generators: int) -> t.List[PlanarTree]:
    out: t.List[PlanarTree] = []
    if generators < 1:
        return out
    for n in range(1, d + 1):
        out.extend(_shapes(n, generators))
    return out


def decode_tree(encoding: str, generators: t.Optional[int] = None) -> PlanarTree:
    tree, pos = _parse(encoding, 0)
    if pos != len(encoding):
        raise TreeException(f"Trailing characters in tree encoding: {encoding!r}")
    if generators is not None and tree.max_label() >= generators:
        raise TreeException(f"Label {tree.max_label()} out of range for {generators} generator(s)")
    return tree


def _parse(s: str, pos: int) -> t.Tuple[PlanarTree, int]:
    if s.startswith(LEAF_SYMBOL, pos):
        return LEAF, pos + len(LEAF_SYMBOL)
    if not s.startswith("(", pos):
        raise TreeException(f"Invalid tree encoding at {pos}: {s!r}")
    left, pos = _parse(s, pos + 1)
    if not s.startswith(" x", pos):
        raise TreeException(f"Expected label at {pos}: {s!r}")
    pos += 2
    end = pos
    while end < len(s) and s[end].isdigit():
        end += 1
    if end == pos or not s.startswith(" ", end):
        raise TreeException(f"Invalid label at {pos}: {s!r}")
    label = int(s[pos:end])
    right, pos = _parse(s, end + 1)
    if not s.startswith(")", pos):
        raise TreeException(f"Expected ')' at {pos}: {s!r}")
    return PlanarTree(left, label, right), pos + 1
