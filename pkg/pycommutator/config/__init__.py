# ------------------------------------------------------------------------------
#  Copyright 2022 Upstream Data Inc                                            -
#                                                                              -
#  Licensed under the Apache License, Version 2.0 (the "License");             -
#  you may not use this file except in compliance with the License.            -
#  You may obtain a copy of the License at                                     -
#                                                                              -
#      http://www.apache.org/licenses/LICENSE-2.0                              -
#                                                                              -
#  Unless required by applicable law or agreed to in writing, software         -
#  distributed under the License is distributed on an "AS IS" BASIS,           -
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.    -
#  See the License for the specific language governing permissions and         -
#  limitations under the License.                                              -
# ------------------------------------------------------------------------------

import logging
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Optional, Union

import toml
import yaml

from pycommutator.errors import SchemaError
from pycommutator.settings import CommutatorSettings


@dataclass
class EngineConfig:
    """A dataclass for run configuration documents.

    Attributes:
        seed: Seed of the randomized search stages.
        max_retries: Cap on the trace-zero pair factorization's random attempts.
        ar_retries: Cap on the quaternionic conjugation attempts.
        random_height: Numerator and denominator bound of random search matrices.
        batch_threads: Worker threads of a cross-check run.
        debug: Whether to log at debug level.
    """

    seed: Optional[int] = None
    max_retries: Optional[int] = None
    ar_retries: Optional[int] = None
    random_height: Optional[int] = None
    batch_threads: Optional[int] = None
    debug: Optional[bool] = None

    @classmethod
    def fields(cls):
        return fields(cls)

    def as_dict(self) -> dict:
        """Convert the data in this class to a dict, leaving out unset values."""
        logging.debug(f"EngineConfig - (To Dict) - Dumping Dict config")
        return {key: value for key, value in asdict(self).items() if value is not None}

    def as_toml(self) -> str:
        """Convert the data in this class to toml."""
        logging.debug(f"EngineConfig - (To TOML) - Dumping TOML config")
        return toml.dumps(self.as_dict())

    def as_yaml(self) -> str:
        """Convert the data in this class to yaml."""
        logging.debug(f"EngineConfig - (To YAML) - Dumping YAML config")
        return yaml.dump(self.as_dict(), sort_keys=False)

    def from_dict(self, data: dict, path: str = "$"):
        """Load a config dict into this class.

        Parameters:
            data: The dict config data to convert.
            path: Location of `data` in the enclosing document, for error messages.
        """
        logging.debug(f"EngineConfig - (From Dict) - Loading Dict config")
        if not isinstance(data, dict):
            raise SchemaError("config must be a table", path=path)
        known = {f.name: f for f in self.fields()}
        for key, value in data.items():
            if key not in known:
                raise SchemaError(f"unknown config key {key!r}", path=f"{path}.{key}")
            if value is None:
                continue
            if key == "debug":
                if not isinstance(value, bool):
                    raise SchemaError("debug must be a boolean", path=f"{path}.{key}")
            elif not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise SchemaError(f"{key} must be a non-negative integer", path=f"{path}.{key}")
            setattr(self, key, value)
        return self

    def from_toml(self, data: str):
        """Convert toml config data back into usable data and save it to this class.

        Parameters:
            data: The toml config data to convert.
        """
        logging.debug(f"EngineConfig - (From TOML) - Loading TOML config")
        try:
            loaded = toml.loads(data)
        except toml.TomlDecodeError as e:
            raise SchemaError(f"invalid toml: {e}")
        return self.from_dict(loaded)

    def from_yaml(self, data: str):
        """Convert yaml config data back into usable data and save it to this class.

        Parameters:
            data: The yaml config data to convert.
        """
        logging.debug(f"EngineConfig - (From YAML) - Loading YAML config")
        try:
            loaded = yaml.load(data, Loader=yaml.SafeLoader)
        except yaml.YAMLError as e:
            raise SchemaError(f"invalid yaml: {e}")
        return self.from_dict(loaded or {})

    def from_file(self, path: Union[str, Path]):
        """Load a `.toml`, `.yaml` or `.yml` document."""
        path = Path(path)
        text = path.read_text()
        if path.suffix == ".toml":
            return self.from_toml(text)
        if path.suffix in (".yaml", ".yml"):
            return self.from_yaml(text)
        raise SchemaError(f"unsupported config format {path.suffix!r}")

    def apply(self) -> CommutatorSettings:
        """Push the set values into the global settings."""
        settings = CommutatorSettings()
        if self.max_retries is not None:
            settings.pair_factorization_retries = self.max_retries
        if self.ar_retries is not None:
            settings.ar_conjugation_retries = self.ar_retries
        if self.random_height is not None:
            settings.random_height = self.random_height
        if self.batch_threads is not None:
            settings.batch_threads = self.batch_threads
        if self.debug is not None:
            settings.debug = self.debug
        return settings
