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
import random
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from pycommutator.algebra.descriptor import (
    AlgebraDescriptor,
    AlgebraKind,
    quaternion_matrix_algebra,
    structure_constants,
)
from pycommutator.errors import DescriptorError, DimensionError, NotInvertible, SchemaError
from pycommutator.linear import (
    ExactMatrix,
    Scalar,
    SubspaceBasis,
    kernel_basis,
    solve_linear,
)
from pycommutator.misc import requires_kind


@dataclass(frozen=True)
class AlgebraElement:
    """An element of a structure-constant algebra.

    Attributes:
        algebra: The algebra the element lives in.
        coords: Coordinates on the canonical basis (matrix units row-major,
            then the quaternion units 1, i, j, k).
    """

    algebra: AlgebraDescriptor
    coords: Tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim_over_F:
            raise DimensionError(
                f"{self.algebra} has dimension {self.algebra.dim_over_F}, got {len(self.coords)} coordinates"
            )

    @classmethod
    def from_coords(cls, algebra: AlgebraDescriptor, values: Sequence) -> "AlgebraElement":
        field = algebra.base_field
        return cls(algebra, tuple(field.coerce(x) for x in values))

    @classmethod
    def zero(cls, algebra: AlgebraDescriptor) -> "AlgebraElement":
        return cls(algebra, (algebra.base_field.zero(),) * algebra.dim_over_F)

    @classmethod
    def basis(cls, algebra: AlgebraDescriptor, index: int) -> "AlgebraElement":
        values = [0] * algebra.dim_over_F
        values[index] = 1
        return cls.from_coords(algebra, values)

    @classmethod
    def scalar(cls, algebra: AlgebraDescriptor, value) -> "AlgebraElement":
        values = [0] * algebra.dim_over_F
        for r in range(algebra.m):
            values[algebra.index(r, r)] = value
        return cls.from_coords(algebra, values)

    @classmethod
    def one(cls, algebra: AlgebraDescriptor) -> "AlgebraElement":
        return cls.scalar(algebra, 1)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement) or other.algebra != self.algebra:
            raise DescriptorError(f"cannot combine elements of {self.algebra} and {getattr(other, 'algebra', other)}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(
            self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(
            self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, tuple(-a for a in self.coords))

    def scale(self, value) -> "AlgebraElement":
        value = self.algebra.base_field.coerce(value)
        return AlgebraElement(self.algebra, tuple(value * a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __repr__(self):
        terms = [
            f"{x}*{self.algebra.basis_label(i)}" for i, x in enumerate(self.coords) if x
        ]
        return f"<{self.algebra}: {' + '.join(terms) or '0'}>"

    def as_dict(self) -> dict:
        field = self.algebra.base_field
        return {
            "algebra": self.algebra.as_dict(),
            "coords": [field.dump(x) for x in self.coords],
        }

    @classmethod
    def from_dict(cls, data: dict, path: str = "$") -> "AlgebraElement":
        if not isinstance(data, dict):
            raise SchemaError("element must be an object", path=path)
        algebra = AlgebraDescriptor.from_dict(data.get("algebra"), path=f"{path}.algebra")
        coords = data.get("coords")
        if not isinstance(coords, list):
            raise SchemaError("coords must be a list", path=f"{path}.coords")
        if len(coords) != algebra.dim_over_F:
            raise SchemaError(
                f"expected {algebra.dim_over_F} coordinates, got {len(coords)}",
                path=f"{path}.coords",
            )
        field = algebra.base_field
        return cls(
            algebra,
            tuple(field.parse(x, path=f"{path}.coords[{i}]") for i, x in enumerate(coords)),
        )


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._check(y)
    table = structure_constants(x.algebra)
    field = x.algebra.base_field
    out = [field.zero()] * x.algebra.dim_over_F
    for i, xi in enumerate(x.coords):
        if not xi:
            continue
        row = table[i]
        for j, yj in enumerate(y.coords):
            if not yj:
                continue
            product = xi * yj
            for k, c in row[j]:
                out[k] = out[k] + c * product
    return AlgebraElement(x.algebra, tuple(out))


def commutator(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return multiply(x, y) - multiply(y, x)


def reduced_trace(x: AlgebraElement) -> Scalar:
    algebra = x.algebra
    acc = algebra.base_field.zero()
    for r in range(algebra.m):
        acc = acc + x.coords[algebra.index(r, r)]
    if algebra.is_quaternionic:
        return 2 * acc
    return acc


def quaternion_norm(x: AlgebraElement) -> Scalar:
    """x0^2 - a x1^2 - b x2^2 + ab x3^2, positive definite for a, b < 0."""
    if x.algebra.kind != AlgebraKind.QUATERNION:
        raise DescriptorError(f"quaternion norm on {x.algebra}")
    a, b = x.algebra.a, x.algebra.b
    x0, x1, x2, x3 = x.coords
    return x0 * x0 - a * x1 * x1 - b * x2 * x2 + a * b * x3 * x3


def quaternion_conjugate(x: AlgebraElement) -> AlgebraElement:
    if x.algebra.kind != AlgebraKind.QUATERNION:
        raise DescriptorError(f"quaternion conjugate on {x.algebra}")
    x0, x1, x2, x3 = x.coords
    return AlgebraElement(x.algebra, (x0, -x1, -x2, -x3))


def is_pure(x: AlgebraElement) -> bool:
    return x.algebra.kind == AlgebraKind.QUATERNION and not x.coords[0]


def to_matrix(x: AlgebraElement) -> ExactMatrix:
    if x.algebra.kind != AlgebraKind.MATRIX_OVER_FIELD:
        raise DescriptorError(f"{x.algebra} elements are not matrices over the base field")
    m = x.algebra.m
    return ExactMatrix(
        tuple(tuple(x.coords[r * m : (r + 1) * m]) for r in range(m)),
        x.algebra.base_field,
    )


def from_matrix(algebra: AlgebraDescriptor, M: ExactMatrix) -> AlgebraElement:
    if algebra.kind != AlgebraKind.MATRIX_OVER_FIELD or M.shape != (algebra.m, algebra.m):
        raise DimensionError(f"a {M.shape} matrix is not an element of {algebra}")
    return AlgebraElement(algebra, tuple(x for row in M.rows for x in row))


def entry(x: AlgebraElement, r: int, s: int):
    """The (r, s) entry (0-indexed): a scalar over a field, a quaternion otherwise."""
    algebra = x.algebra
    if algebra.kind == AlgebraKind.MATRIX_OVER_FIELD:
        return x.coords[algebra.index(r, s)]
    start = algebra.index(r, s)
    return AlgebraElement(algebra.division_algebra, x.coords[start : start + 4])


def from_entries(algebra: AlgebraDescriptor, entries: Sequence[Sequence]) -> AlgebraElement:
    """Inverse of `entry`: build an element from its m x m entries."""
    if len(entries) != algebra.m or any(len(row) != algebra.m for row in entries):
        raise DimensionError(f"{algebra} needs {algebra.m} x {algebra.m} entries")
    if algebra.kind == AlgebraKind.MATRIX_OVER_FIELD:
        return AlgebraElement.from_coords(algebra, [x for row in entries for x in row])
    coords = []
    for row in entries:
        for q in row:
            if q.algebra != algebra.division_algebra:
                raise DescriptorError(f"entry {q} is not in {algebra.division_algebra}")
            coords.extend(q.coords)
    return AlgebraElement(algebra, tuple(coords))


def _operator(algebra: AlgebraDescriptor, image) -> ExactMatrix:
    columns = [image(AlgebraElement.basis(algebra, c)).coords for c in range(algebra.dim_over_F)]
    return ExactMatrix.from_columns(columns, algebra.base_field)


def left_multiplication(x: AlgebraElement) -> ExactMatrix:
    """Matrix of y -> x*y in algebra coordinates."""
    return _operator(x.algebra, lambda y: multiply(x, y))


def right_multiplication(x: AlgebraElement) -> ExactMatrix:
    """Matrix of y -> y*x in algebra coordinates."""
    return _operator(x.algebra, lambda y: multiply(y, x))


def ad_operator(u: AlgebraElement) -> ExactMatrix:
    """Matrix of y -> [u, y] in algebra coordinates."""
    return _operator(u.algebra, lambda y: commutator(u, y))


def inverse(x: AlgebraElement) -> AlgebraElement:
    algebra = x.algebra
    if algebra.kind == AlgebraKind.QUATERNION:
        norm = quaternion_norm(x)
        if not norm:
            # a, b < 0 makes the norm definite, so only 0 lands here
            assert x.is_zero(), f"nonzero {x} has vanishing norm"
            raise NotInvertible("0 is not invertible")
        return quaternion_conjugate(x).scale(1 / norm)
    if algebra.kind == AlgebraKind.MATRIX_OVER_FIELD:
        return from_matrix(algebra, to_matrix(x).inverse())
    solution = solve_linear(left_multiplication(x), AlgebraElement.one(algebra).coords)
    if solution is None:
        raise NotInvertible(f"{x} is singular")
    return AlgebraElement(algebra, solution)


def is_invertible(x: AlgebraElement) -> bool:
    try:
        inverse(x)
    except NotInvertible:
        return False
    return True


def is_central(x: AlgebraElement) -> bool:
    return all(
        commutator(x, AlgebraElement.basis(x.algebra, c)).is_zero()
        for c in range(x.algebra.dim_over_F)
    )


def is_field(descriptor: AlgebraDescriptor) -> bool:
    return descriptor.kind == AlgebraKind.MATRIX_OVER_FIELD and descriptor.m == 1


@requires_kind(AlgebraKind.QUATERNION)
def pure_part(x: AlgebraElement) -> AlgebraElement:
    """The pure part x1 i + x2 j + x3 k of a quaternion."""
    return AlgebraElement(x.algebra, (x.algebra.base_field.zero(),) + x.coords[1:])


def kronecker_embed(t: ExactMatrix, d: AlgebraElement) -> AlgebraElement:
    """The element of M_m(D) whose (r, s) entry is t_rs * d."""
    if d.algebra.kind != AlgebraKind.QUATERNION:
        raise DescriptorError(f"kronecker_embed needs a quaternion, got {d.algebra}")
    if not t.is_square:
        raise DimensionError(f"t must be square, got {t.shape}")
    if t.field != d.algebra.base_field:
        raise DimensionError(f"t is over {t.field}, d over {d.algebra.base_field}")
    target = quaternion_matrix_algebra(t.nrows, d.algebra.a, d.algebra.b)
    coords = []
    for row in t.rows:
        for value in row:
            coords.extend(value * q for q in d.coords)
    return AlgebraElement(target, tuple(coords))


def random_element(
    algebra: AlgebraDescriptor, rng: random.Random, height: int = 10
) -> AlgebraElement:
    field = algebra.base_field
    return AlgebraElement(
        algebra, tuple(field.random(rng, height) for _ in range(algebra.dim_over_F))
    )


@dataclass(frozen=True)
class LinearFunctional:
    """tau(x) = coeffs . coords(x).

    Attributes:
        algebra: Domain of the functional.
        coeffs: One coefficient per basis element.
    """

    algebra: AlgebraDescriptor
    coeffs: Tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.algebra.dim_over_F:
            raise DimensionError(
                f"functional on {self.algebra} needs {self.algebra.dim_over_F} coefficients"
            )

    @classmethod
    def reduced_trace(cls, algebra: AlgebraDescriptor) -> "LinearFunctional":
        return cls(
            algebra,
            tuple(
                reduced_trace(AlgebraElement.basis(algebra, c))
                for c in range(algebra.dim_over_F)
            ),
        )

    def __call__(self, x: AlgebraElement) -> Scalar:
        if x.algebra != self.algebra:
            raise DescriptorError(f"functional on {self.algebra} applied to {x.algebra}")
        acc = self.algebra.base_field.zero()
        for c, v in zip(self.coeffs, x.coords):
            if c and v:
                acc = acc + c * v
        return acc

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def kernel(self) -> SubspaceBasis:
        """The hyperplane H = ker tau."""
        return kernel_basis(ExactMatrix((self.coeffs,), self.algebra.base_field))


@dataclass(frozen=True)
class SubfieldBasis:
    """An F-basis of a commutative subfield of a division algebra.

    Attributes:
        algebra: The ambient algebra.
        elements: The basis, starting with the identity.
    """

    algebra: AlgebraDescriptor
    elements: Tuple[AlgebraElement, ...]

    @property
    def dim(self) -> int:
        return len(self.elements)

    def combination(self, coeffs: Sequence) -> AlgebraElement:
        acc = AlgebraElement.zero(self.algebra)
        for c, e in zip(coeffs, self.elements):
            if c:
                acc = acc + e.scale(c)
        return acc

    def span(self) -> SubspaceBasis:
        return SubspaceBasis.span(
            [e.coords for e in self.elements], self.algebra.dim_over_F, self.algebra.base_field
        )

    def contains(self, x: AlgebraElement) -> bool:
        return self.span().contains(x.coords)

    def verify(self) -> bool:
        """Identity included, pairwise commuting, closed under products."""
        space = self.span()
        if space.dim != self.dim:
            return False
        if not space.contains(AlgebraElement.one(self.algebra).coords):
            return False
        for x in self.elements:
            for y in self.elements:
                if not commutator(x, y).is_zero():
                    return False
                if not space.contains(multiply(x, y).coords):
                    return False
        return True


def default_maximal_subfield(algebra: AlgebraDescriptor) -> SubfieldBasis:
    """Q(i) inside a quaternion algebra."""
    D = algebra.division_algebra
    return SubfieldBasis(D, (AlgebraElement.one(D), AlgebraElement.basis(D, 1)))


@requires_kind(AlgebraKind.QUATERNION)
def subfield_containing(d: AlgebraElement) -> Tuple[SubfieldBasis, AlgebraElement]:
    """A maximal subfield L containing d and a primitive element u with L = F(u)."""
    if is_central(d):
        u = AlgebraElement.basis(d.algebra, 1)
        logging.debug(f"{d} - (Subfield Containing) - central input, using u = i")
    else:
        u = d
    return SubfieldBasis(d.algebra, (AlgebraElement.one(d.algebra), u)), u


def quadratic_relation(u: AlgebraElement) -> List[Scalar]:
    """(c0, c1) with u^2 = c0 + c1 u, or an empty list if no such relation exists."""
    one = AlgebraElement.one(u.algebra)
    basis = ExactMatrix.from_columns([one.coords, u.coords], u.algebra.base_field)
    solution = solve_linear(basis, multiply(u, u).coords)
    return list(solution) if solution is not None else []
