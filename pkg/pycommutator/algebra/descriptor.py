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
from enum import Enum
from functools import lru_cache
from typing import Optional, Tuple

from pycommutator.errors import DescriptorError, SchemaError
from pycommutator.linear import QQ, FieldDescriptor, Scalar


class AlgebraKind(Enum):
    MATRIX_OVER_FIELD = "MatrixOverField"
    QUATERNION = "Quaternion"
    MATRIX_OVER_QUATERNION = "MatrixOverQuaternion"


QUATERNION_LABELS = ("1", "i", "j", "k")

# e_s * e_t = coefficient(a, b) * e_k on the basis (1, i, j, k)
_QUATERNION_RULES = {
    (1, 1): (lambda a, b: a, 0),
    (1, 2): (lambda a, b: 1, 3),
    (1, 3): (lambda a, b: a, 2),
    (2, 1): (lambda a, b: -1, 3),
    (2, 2): (lambda a, b: b, 0),
    (2, 3): (lambda a, b: -b, 1),
    (3, 1): (lambda a, b: -a, 2),
    (3, 2): (lambda a, b: b, 1),
    (3, 3): (lambda a, b: -a * b, 0),
}


@dataclass(frozen=True)
class AlgebraDescriptor:
    """A concrete simple algebra M_m(D) given by structure constants.

    Attributes:
        kind: MatrixOverField, Quaternion or MatrixOverQuaternion.
        m: Matrix size (1 for the quaternion algebra itself).
        a: i^2 for quaternion kinds.
        b: j^2 for quaternion kinds.
        base_field: The center F.
    """

    kind: AlgebraKind
    m: int = 1
    a: Optional[int] = None
    b: Optional[int] = None
    base_field: FieldDescriptor = QQ

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise DescriptorError(f"matrix size must be a positive integer, got {self.m}")
        if self.kind == AlgebraKind.MATRIX_OVER_FIELD:
            if self.a is not None or self.b is not None:
                raise DescriptorError("matrix algebras over a field take no (a, b)")
            return
        if self.kind == AlgebraKind.QUATERNION and self.m != 1:
            raise DescriptorError("use MatrixOverQuaternion for m > 1")
        if self.base_field != QQ:
            raise DescriptorError("quaternion algebras are only supported over Q")
        for name, value in (("a", self.a), ("b", self.b)):
            if not isinstance(value, int) or isinstance(value, bool) or value >= 0:
                raise DescriptorError(
                    f"quaternion parameter {name} must be a negative integer, got {value}"
                )

    def __str__(self):
        if self.kind == AlgebraKind.MATRIX_OVER_FIELD:
            return f"M_{self.m}({self.base_field})"
        quaternion = f"({self.a},{self.b})_Q"
        if self.kind == AlgebraKind.QUATERNION:
            return quaternion
        return f"M_{self.m}{quaternion}"

    @property
    def degree_of_D(self) -> int:
        return 1 if self.kind == AlgebraKind.MATRIX_OVER_FIELD else 2

    @property
    def dim_over_F(self) -> int:
        return self.m * self.m * self.degree_of_D**2

    @property
    def block(self) -> int:
        """Coordinates per matrix entry: 1 over a field, 4 over quaternions."""
        return self.degree_of_D**2

    @property
    def is_quaternionic(self) -> bool:
        return self.kind != AlgebraKind.MATRIX_OVER_FIELD

    @property
    def division_algebra(self) -> "AlgebraDescriptor":
        """The algebra D in A = M_m(D); for matrices over a field this is M_1(F)."""
        if self.kind == AlgebraKind.MATRIX_OVER_FIELD:
            return matrix_algebra(1, self.base_field)
        return quaternion_algebra(self.a, self.b)

    def index(self, r: int, s: int, q: int = 0) -> int:
        """Coordinate index of e_rs (times the q-th quaternion unit), 0-indexed."""
        if self.kind == AlgebraKind.QUATERNION:
            return q
        return (r * self.m + s) * self.block + q

    def basis_label(self, index: int) -> str:
        if self.kind == AlgebraKind.QUATERNION:
            return QUATERNION_LABELS[index]
        entry, q = divmod(index, self.block)
        r, s = divmod(entry, self.m)
        if self.kind == AlgebraKind.MATRIX_OVER_FIELD:
            return f"e{r + 1}{s + 1}"
        return f"e{r + 1}{s + 1}*{QUATERNION_LABELS[q]}"

    def as_dict(self) -> dict:
        data = {"kind": self.kind.value, "m": self.m, "field": str(self.base_field)}
        if self.is_quaternionic:
            data["a"] = self.a
            data["b"] = self.b
        return data

    @classmethod
    def from_dict(cls, data: dict, path: str = "$") -> "AlgebraDescriptor":
        if not isinstance(data, dict):
            raise SchemaError("algebra must be an object", path=path)
        try:
            kind = AlgebraKind(data.get("kind"))
        except ValueError:
            raise SchemaError(f"unknown algebra kind {data.get('kind')!r}", path=f"{path}.kind")
        field = FieldDescriptor.from_string(data.get("field", "Q"), path=f"{path}.field")
        values = {}
        for key in ("m", "a", "b"):
            value = data.get(key)
            if value is not None and (not isinstance(value, int) or isinstance(value, bool)):
                raise SchemaError(f"{key} must be an integer", path=f"{path}.{key}")
            values[key] = value
        m = values["m"] if values["m"] is not None else 1
        try:
            if kind == AlgebraKind.MATRIX_OVER_FIELD:
                return cls(kind, m, base_field=field)
            return cls(kind, m, values["a"], values["b"], field)
        except DescriptorError as e:
            raise SchemaError(str(e), path=path)


def matrix_algebra(m: int, field: FieldDescriptor = QQ) -> AlgebraDescriptor:
    return AlgebraDescriptor(AlgebraKind.MATRIX_OVER_FIELD, m, base_field=field)


def quaternion_algebra(a: int = -1, b: int = -1) -> AlgebraDescriptor:
    return AlgebraDescriptor(AlgebraKind.QUATERNION, 1, a, b)


def quaternion_matrix_algebra(m: int, a: int = -1, b: int = -1) -> AlgebraDescriptor:
    return AlgebraDescriptor(AlgebraKind.MATRIX_OVER_QUATERNION, m, a, b)


HAMILTON = quaternion_algebra(-1, -1)


def _quaternion_product(a: int, b: int, s: int, t: int) -> Tuple[int, int]:
    if s == 0:
        return 1, t
    if t == 0:
        return 1, s
    coefficient, k = _QUATERNION_RULES[(s, t)]
    return coefficient(a, b), k


@lru_cache(maxsize=None)
def structure_constants(
    descriptor: AlgebraDescriptor,
) -> Tuple[Tuple[Tuple[Tuple[int, Scalar], ...], ...], ...]:
    """table[i][j] lists the (k, c) with e_i * e_j = sum c * e_k."""
    field = descriptor.base_field
    dim = descriptor.dim_over_F
    m, block = descriptor.m, descriptor.block
    table = []
    for i in range(dim):
        row = []
        for j in range(dim):
            if descriptor.kind == AlgebraKind.QUATERNION:
                c, k = _quaternion_product(descriptor.a, descriptor.b, i, j)
                row.append(((k, field.coerce(c)),))
                continue
            (r, s), q = divmod(i // block, m), i % block
            (t, u), q2 = divmod(j // block, m), j % block
            if s != t:
                row.append(())
            elif descriptor.kind == AlgebraKind.MATRIX_OVER_FIELD:
                row.append(((descriptor.index(r, u), field.one()),))
            else:
                c, k = _quaternion_product(descriptor.a, descriptor.b, q, q2)
                row.append(((descriptor.index(r, u, k), field.coerce(c)),))
        table.append(tuple(row))
    return tuple(table)
