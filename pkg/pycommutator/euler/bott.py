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

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from pycommutator.errors import DimensionError, NotOnSphere, SchemaError
from pycommutator.linear import QQI, ExactMatrix, GaussianRational, format_rational, parse_rational


@dataclass(frozen=True)
class SpherePoint:
    """A rational point (x, y, z) of the unit 2-sphere."""

    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.x * self.x + self.y * self.y + self.z * self.z != 1:
            raise NotOnSphere(f"({self.x}, {self.y}, {self.z}) is off the sphere")

    @classmethod
    def stereographic(cls, u, v) -> "SpherePoint":
        """Inverse stereographic projection of (u, v) from the north pole."""
        u, v = Fraction(u), Fraction(v)
        denominator = 1 + u * u + v * v
        return cls(2 * u / denominator, 2 * v / denominator, (u * u + v * v - 1) / denominator)

    @classmethod
    def from_strings(cls, raw: Sequence, path: str = "$") -> "SpherePoint":
        if not isinstance(raw, (list, tuple)) or len(raw) != 3:
            raise SchemaError("a sphere point has three coordinates", path=path)
        x, y, z = (parse_rational(value, path=f"{path}[{n}]") for n, value in enumerate(raw))
        return cls(x, y, z)

    def as_list(self) -> List[str]:
        return [format_rational(c) for c in (self.x, self.y, self.z)]

    def bott(self) -> ExactMatrix:
        return bott_eval(self.x, self.y, self.z)


def bott_eval(x, y, z) -> ExactMatrix:
    """The rank-one projection 1/2 [[1 + x, y - iz], [y + iz, 1 - x]] over Q(i)."""
    point = SpherePoint(x, y, z)
    half = Fraction(1, 2)
    return ExactMatrix.from_rows(
        [
            [GaussianRational(half * (1 + point.x)), GaussianRational(half * point.y, -half * point.z)],
            [GaussianRational(half * point.y, half * point.z), GaussianRational(half * (1 - point.x))],
        ],
        QQI,
    )


def tensor_projection_eval(points: Sequence[SpherePoint]) -> ExactMatrix:
    """p(x_1) (x) ... (x) p(x_n), a rank-one projection of size 2^n."""
    if not points:
        raise DimensionError("need at least one sphere point")
    result = points[0].bott()
    for point in points[1:]:
        result = result.kron(point.bott())
    return result


def is_projection(p: ExactMatrix) -> bool:
    """Self-adjoint and idempotent."""
    return p * p == p and p.conjugate_transpose() == p
