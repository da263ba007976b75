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

"""Readers turning raw JSON documents and flag values into library objects.

Every reader raises `SchemaError` carrying the JSON path of the first
offending value.
"""
import json
from dataclasses import dataclass, field
from typing import Any, List, Optional

from pycommutator.algebra import AlgebraElement
from pycommutator.engine import CommutatorCertificate
from pycommutator.errors import SchemaError
from pycommutator.euler import BundleSpec, SpherePoint
from pycommutator.ncpoly import NCPolynomial

COMMANDS = ("info", "decompose", "verify", "hyperplane", "ncpoly", "euler", "villadsen", "oracle", "bott")
MAX_SEED = 2**64 - 1


@dataclass
class CommandEnvelope:
    """One CLI invocation: the command, its payload and the seed.

    Attributes:
        command: One of `COMMANDS`.
        payload: Command-specific document.
        seed: Optional unsigned 64-bit seed.
    """

    command: str
    payload: dict = field(default_factory=dict)
    seed: Optional[int] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise SchemaError(f"unknown command {self.command!r}", path="$.command")
        if not isinstance(self.payload, dict):
            raise SchemaError("payload must be an object", path="$.payload")
        self.seed = read_seed(self.seed)

    @classmethod
    def from_dict(cls, data: Any) -> "CommandEnvelope":
        if not isinstance(data, dict):
            raise SchemaError("envelope must be an object")
        return cls(data.get("command"), data.get("payload", {}), data.get("seed"))


def load_json(text: str, path: str = "$") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON: {e.msg} at line {e.lineno} column {e.colno}", path=path)


def read_seed(raw: Any, path: str = "$.seed") -> Optional[int]:
    if raw is None:
        return None
    if not isinstance(raw, int) or isinstance(raw, bool) or not (0 <= raw <= MAX_SEED):
        raise SchemaError("seed must be an unsigned 64-bit integer", path=path)
    return raw


def read_count(payload: dict, key: str, minimum: int = 1, required: bool = True) -> Optional[int]:
    value = payload.get(key)
    if value is None and not required:
        return None
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise SchemaError(f"{key} must be an integer >= {minimum}", path=f"$.payload.{key}")
    return value


def read_element(payload: dict, key: str = "element") -> AlgebraElement:
    if key not in payload:
        raise SchemaError(f"missing {key}", path="$.payload")
    return AlgebraElement.from_dict(payload[key], path=f"$.payload.{key}")


def read_certificate(payload: dict) -> CommutatorCertificate:
    if "certificate" not in payload:
        raise SchemaError("missing certificate", path="$.payload")
    return CommutatorCertificate.from_dict(payload["certificate"], path="$.payload.certificate")


def read_polynomial(payload: dict) -> NCPolynomial:
    if "polynomial" not in payload:
        raise SchemaError("missing polynomial", path="$.payload")
    return NCPolynomial.from_dict(payload["polynomial"], path="$.payload.polynomial")


def read_bundle(payload: dict) -> BundleSpec:
    stages = payload.get("stages")
    if not isinstance(stages, list):
        raise SchemaError("stages must be a list of n_i:l_i strings", path="$.payload.stages")
    return BundleSpec.from_strings(stages, path="$.payload.stages")


def read_points(payload: dict) -> List[SpherePoint]:
    points = payload.get("points")
    if not isinstance(points, list) or not points:
        raise SchemaError("points must be a non-empty list", path="$.payload.points")
    return [
        SpherePoint.from_strings(point, path=f"$.payload.points[{n}]") for n, point in enumerate(points)
    ]


def split_point(raw: str) -> List[str]:
    """`"x,y,z"` from the command line as three coordinate strings."""
    parts = [part.strip() for part in raw.split(",")]
    if len(parts) != 3:
        raise SchemaError(f"point {raw!r} is not x,y,z", path="--point")
    return parts
