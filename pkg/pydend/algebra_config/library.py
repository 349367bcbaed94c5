from ..exception import ConfigException
from ..library import LIBRARY, get_library_algebra
from .dict import AlgebraConfDict
from .json_file import AlgebraConfJsonFile, resolve_path


class AlgebraConfLibrary(AlgebraConfDict):
    """
    One of the built-in algebras, built at the requested characteristic.
    """

    _name: str

    def __init__(self, name: str, p: int):
        algebra = get_library_algebra(name, p)
        self._name = name
        super().__init__({"p": p, "dim": algebra.dim, "basis": algebra.names, "constants": algebra.to_sparse()})

    @property
    def source(self) -> str:
        return f"built-in {self._name} over F_{self.find_algebra().p}"


def load_algebra_conf(name: str, p: int) -> AlgebraConfDict:
    """
    Paths and shipped fixtures win; otherwise `name` picks a built-in algebra at
    characteristic p.
    """
    try:
        path = resolve_path(name)
    except ConfigException:
        if name in LIBRARY:
            return AlgebraConfLibrary(name, p)
        raise
    return AlgebraConfJsonFile(path)
