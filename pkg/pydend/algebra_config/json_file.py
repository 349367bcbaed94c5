import json
import os

from ..exception import ConfigException
from .dict import AlgebraConfDict, TJsonData


FIXTURES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "fixtures")


def resolve_path(config_file: str) -> str:
    """
    Existing paths win; otherwise the name is looked up among the shipped fixtures,
    with or without the .json suffix.
    """
    if os.path.isfile(config_file):
        return config_file
    for name in (config_file, config_file + ".json"):
        candidate = os.path.join(FIXTURES_DIR, name)
        if os.path.isfile(candidate):
            return candidate
    raise ConfigException(f"Algebra file not found: {config_file}")


class AlgebraConfJsonFile(AlgebraConfDict):
    _path: str

    def __init__(self, config_file: str):
        self._path = resolve_path(config_file)
        try:
            with open(self._path, encoding="utf-8") as cfg:
                json_data: TJsonData = json.loads(cfg.read())
        except json.JSONDecodeError as e:
            raise ConfigException(f"Algebra file {self._path} is not valid JSON: {e}") from e
        super().__init__(json_data)

    @property
    def path(self) -> str:
        return self._path

    @property
    def source(self) -> str:
        return self._path
