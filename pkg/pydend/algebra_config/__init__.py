from .abstract import AlgebraConfAbstract
from .dict import AlgebraConfDict
from .json_file import FIXTURES_DIR, AlgebraConfJsonFile, resolve_path
from .library import AlgebraConfLibrary, load_algebra_conf

__all__ = [
    "AlgebraConfAbstract",
    "AlgebraConfDict",
    "AlgebraConfJsonFile",
    "AlgebraConfLibrary",
    "FIXTURES_DIR",
    "load_algebra_conf",
    "resolve_path",
]
