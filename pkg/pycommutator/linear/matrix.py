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
from functools import reduce
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from pycommutator.errors import DimensionError, NotInvertible
from pycommutator.linear.fields import QQ, FieldDescriptor, FieldKind, Scalar

Vector = Tuple[Scalar, ...]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _primitive(row: List[Scalar], field: FieldDescriptor) -> List[Scalar]:
    """Scale a rational row to coprime integers. Other fields are left alone."""
    if field.kind != FieldKind.RATIONALS:
        return row
    nonzero = [x for x in row if x]
    if not nonzero:
        return row
    den = reduce(_lcm, (x.denominator for x in nonzero), 1)
    num = reduce(gcd, (abs(x.numerator) * (den // x.denominator) for x in nonzero), 0)
    factor = Fraction(den, num)
    return [x * factor for x in row]


def _eliminate(
    rows: List[List[Scalar]], field: FieldDescriptor, limit: Optional[int] = None
) -> Tuple[List[List[Scalar]], List[int]]:
    """Reduce `rows` to reduced row echelon form on the first `limit` columns.

    Rows are combined fraction-free (row_i <- p*row_i - f*row_r) and, over Q,
    kept as primitive integer rows; the pivot in each column is the candidate
    of smallest bit height. Pivot rows are normalized to a leading 1 at the
    end. All rows are returned, pivot rows first.
    """
    rows = [_primitive(list(row), field) for row in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    limit = ncols if limit is None else limit
    pivots = []
    r = 0
    for c in range(limit):
        if r == nrows:
            break
        candidates = [i for i in range(r, nrows) if rows[i][c]]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: (field.height(rows[i][c]), i))
        rows[r], rows[best] = rows[best], rows[r]
        pivot = rows[r][c]
        for i in range(nrows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = _primitive(
                    [pivot * a - factor * b for a, b in zip(rows[i], rows[r])], field
                )
        pivots.append(c)
        r += 1
    for i, c in enumerate(pivots):
        inv = field.one() / rows[i][c]
        rows[i] = [x * inv for x in rows[i]]
    return rows, pivots


@dataclass(frozen=True)
class ExactMatrix:
    """A dense matrix over an exact field.

    Attributes:
        rows: The entries, row by row.
        field: The field every entry belongs to.
    """

    rows: Tuple[Tuple[Scalar, ...], ...]
    field: FieldDescriptor = QQ

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise DimensionError("matrices need at least one row and one column")
        width = len(self.rows[0])
        if any(len(row) != width for row in self.rows):
            raise DimensionError("ragged matrix rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], field: FieldDescriptor = QQ):
        return cls(tuple(tuple(field.coerce(x) for x in row) for row in rows), field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: FieldDescriptor = QQ):
        return cls.from_rows(zip(*columns), field)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: FieldDescriptor = QQ):
        zero = field.zero()
        return cls(tuple(tuple(zero for _ in range(ncols)) for _ in range(nrows)), field)

    @classmethod
    def identity(cls, n: int, field: FieldDescriptor = QQ):
        return cls.diagonal([1] * n, field)

    @classmethod
    def diagonal(cls, values: Sequence, field: FieldDescriptor = QQ):
        n = len(values)
        zero = field.zero()
        return cls(
            tuple(
                tuple(field.coerce(values[r]) if r == c else zero for c in range(n))
                for r in range(n)
            ),
            field,
        )

    @classmethod
    def unit(cls, n: int, r: int, s: int, field: FieldDescriptor = QQ):
        """The matrix unit e_rs (0-indexed) of size n."""
        return cls.from_rows(
            [[1 if (i, j) == (r, s) else 0 for j in range(n)] for i in range(n)], field
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, item: Tuple[int, int]) -> Scalar:
        r, c = item
        return self.rows[r][c]

    def row(self, r: int) -> Vector:
        return self.rows[r]

    def column(self, c: int) -> Vector:
        return tuple(row[c] for row in self.rows)

    def columns(self) -> List[Vector]:
        return [self.column(c) for c in range(self.ncols)]

    def _check_same_shape(self, other: "ExactMatrix"):
        if self.shape != other.shape:
            raise DimensionError(f"shape {self.shape} does not match {other.shape}")
        if self.field != other.field:
            raise DimensionError(f"field {self.field} does not match {other.field}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
            ),
            self.field,
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
            ),
            self.field,
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(-a for a in row) for row in self.rows), self.field)

    def scale(self, value) -> "ExactMatrix":
        value = self.field.coerce(value)
        return ExactMatrix(
            tuple(tuple(value * a for a in row) for row in self.rows), self.field
        )

    def __mul__(self, other):
        if not isinstance(other, ExactMatrix):
            return self.scale(other)
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        if self.field != other.field:
            raise DimensionError(f"field {self.field} does not match {other.field}")
        zero = self.field.zero()
        cols = other.columns()
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(tuple(out_row))
        return ExactMatrix(tuple(out), self.field)

    __matmul__ = __mul__

    def __rmul__(self, other):
        return self.scale(other)

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        if len(vector) != self.ncols:
            raise DimensionError(f"vector of length {len(vector)} for {self.shape} matrix")
        zero = self.field.zero()
        out = []
        for row in self.rows:
            acc = zero
            for a, b in zip(row, vector):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.rows)), self.field)

    def conjugate_transpose(self) -> "ExactMatrix":
        if self.field.kind != FieldKind.GAUSSIAN_RATIONALS:
            return self.transpose()
        return ExactMatrix(
            tuple(tuple(x.conjugate() for x in col) for col in zip(*self.rows)),
            self.field,
        )

    def trace(self) -> Scalar:
        if not self.is_square:
            raise DimensionError("trace of a non-square matrix")
        acc = self.field.zero()
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def diagonal_entries(self) -> Vector:
        return tuple(self.rows[i][i] for i in range(min(self.shape)))

    def is_zero(self) -> bool:
        return not any(x for row in self.rows for x in row)

    def is_scalar(self) -> bool:
        if not self.is_square:
            return False
        first = self.rows[0][0]
        return all(
            (x == first) if r == c else not x
            for r, row in enumerate(self.rows)
            for c, x in enumerate(row)
        )

    def submatrix(self, row_start: int, row_end: int, col_start: int, col_end: int):
        return ExactMatrix(
            tuple(row[col_start:col_end] for row in self.rows[row_start:row_end]),
            self.field,
        )

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        out = []
        for row_a in self.rows:
            for row_b in other.rows:
                out.append(tuple(a * b for a in row_a for b in row_b))
        return ExactMatrix(tuple(out), self.field)

    def rref(self) -> Tuple["ExactMatrix", List[int]]:
        rows, pivots = _eliminate([list(r) for r in self.rows], self.field)
        return ExactMatrix(tuple(tuple(r) for r in rows), self.field), pivots

    def rank(self) -> int:
        return len(_eliminate([list(r) for r in self.rows], self.field)[1])

    def det(self) -> Scalar:
        if not self.is_square:
            raise DimensionError("determinant of a non-square matrix")
        field = self.field
        rows = [list(r) for r in self.rows]
        n = self.nrows
        det = field.one()
        for c in range(n):
            candidates = [i for i in range(c, n) if rows[i][c]]
            if not candidates:
                return field.zero()
            best = min(candidates, key=lambda i: (field.height(rows[i][c]), i))
            if best != c:
                rows[c], rows[best] = rows[best], rows[c]
                det = -det
            pivot = rows[c][c]
            det = det * pivot
            for i in range(c + 1, n):
                if rows[i][c]:
                    factor = rows[i][c] / pivot
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[c])]
        return det

    def inverse(self) -> "ExactMatrix":
        if not self.is_square:
            raise NotInvertible("non-square matrix")
        n = self.nrows
        one, zero = self.field.one(), self.field.zero()
        augmented = [
            list(row) + [one if i == j else zero for j in range(n)]
            for i, row in enumerate(self.rows)
        ]
        rows, pivots = _eliminate(augmented, self.field, limit=n)
        if len(pivots) < n:
            raise NotInvertible(f"matrix has rank {len(pivots)} < {n}")
        return ExactMatrix(tuple(tuple(row[n:]) for row in rows), self.field)

    def as_lists(self) -> List[List[Scalar]]:
        return [list(row) for row in self.rows]


@dataclass(frozen=True)
class SubspaceBasis:
    """Linearly independent coordinate vectors spanning a subspace.

    Attributes:
        ambient_dim: Length of every vector.
        vectors: The basis vectors.
        field: Field of the coordinates.
    """

    ambient_dim: int
    vectors: Tuple[Vector, ...]
    field: FieldDescriptor = QQ

    def __post_init__(self):
        if any(len(v) != self.ambient_dim for v in self.vectors):
            raise DimensionError(f"basis vectors must have length {self.ambient_dim}")

    @classmethod
    def span(
        cls, vectors: Iterable[Sequence], ambient_dim: int, field: FieldDescriptor = QQ
    ) -> "SubspaceBasis":
        """Canonical (reduced echelon) basis of the span of `vectors`."""
        vectors = [[field.coerce(x) for x in v] for v in vectors]
        if any(len(v) != ambient_dim for v in vectors):
            raise DimensionError(f"vectors must have length {ambient_dim}")
        if not vectors:
            return cls(ambient_dim, (), field)
        rows, pivots = _eliminate(vectors, field)
        return cls(ambient_dim, tuple(tuple(rows[i]) for i in range(len(pivots))), field)

    @classmethod
    def full(cls, ambient_dim: int, field: FieldDescriptor = QQ) -> "SubspaceBasis":
        return cls.span(ExactMatrix.identity(ambient_dim, field).rows, ambient_dim, field)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __len__(self):
        return self.dim

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, item: int) -> Vector:
        return self.vectors[item]

    def as_columns(self) -> ExactMatrix:
        return ExactMatrix.from_columns(self.vectors, self.field)

    def echelon(self) -> "SubspaceBasis":
        return SubspaceBasis.span(self.vectors, self.ambient_dim, self.field)

    def contains(self, vector: Sequence) -> bool:
        if not self.vectors:
            return not any(vector)
        return solve_linear(self.as_columns(), vector) is not None

    def coordinates(self, vector: Sequence) -> Optional[Vector]:
        """Coefficients of `vector` in this basis, or None when it lies outside."""
        if not self.vectors:
            return () if not any(vector) else None
        return solve_linear(self.as_columns(), vector)


def rank(M: ExactMatrix) -> int:
    return M.rank()


def kernel_basis(M: ExactMatrix) -> SubspaceBasis:
    """Basis of {v : M v = 0}, one vector per free column."""
    rows, pivots = _eliminate([list(r) for r in M.rows], M.field)
    field = M.field
    free = [c for c in range(M.ncols) if c not in pivots]
    vectors = []
    for f in free:
        v = [field.zero()] * M.ncols
        v[f] = field.one()
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        vectors.append(tuple(v))
    return SubspaceBasis(M.ncols, tuple(vectors), field)


def column_space(M: ExactMatrix) -> SubspaceBasis:
    return SubspaceBasis.span(M.columns(), M.nrows, M.field)


def solve_linear(M: ExactMatrix, b: Sequence) -> Optional[Vector]:
    """Solve M x = b exactly.

    Returns:
        A particular solution (free variables set to 0), or None when b is
        not in the column space of M.
    """
    if len(b) != M.nrows:
        raise DimensionError(f"right-hand side of length {len(b)} for {M.shape} matrix")
    field = M.field
    augmented = [list(row) + [field.coerce(x)] for row, x in zip(M.rows, b)]
    rows, pivots = _eliminate(augmented, field, limit=M.ncols)
    for row in rows[len(pivots) :]:
        if row[-1]:
            return None
    x = [field.zero()] * M.ncols
    for i, c in enumerate(pivots):
        x[c] = rows[i][-1]
    return tuple(x)


def intersect_subspaces(U: SubspaceBasis, V: SubspaceBasis) -> SubspaceBasis:
    """Canonical basis of U ∩ V."""
    if U.ambient_dim != V.ambient_dim:
        raise DimensionError(
            f"ambient dimensions {U.ambient_dim} and {V.ambient_dim} differ"
        )
    if not U.vectors or not V.vectors:
        return SubspaceBasis(U.ambient_dim, (), U.field)
    # columns u_1..u_p, -v_1..-v_q; a kernel vector (alpha, beta) gives sum alpha_s u_s
    columns = list(U.vectors) + [tuple(-x for x in v) for v in V.vectors]
    kernel = kernel_basis(ExactMatrix.from_columns(columns, U.field))
    zero = U.field.zero()
    common = []
    for coeffs in kernel:
        w = [zero] * U.ambient_dim
        for alpha, u in zip(coeffs[: U.dim], U.vectors):
            if alpha:
                w = [a + alpha * b for a, b in zip(w, u)]
        common.append(w)
    return SubspaceBasis.span(common, U.ambient_dim, U.field)


def sum_subspaces(U: SubspaceBasis, V: SubspaceBasis) -> SubspaceBasis:
    if U.ambient_dim != V.ambient_dim:
        raise DimensionError(
            f"ambient dimensions {U.ambient_dim} and {V.ambient_dim} differ"
        )
    return SubspaceBasis.span(list(U.vectors) + list(V.vectors), U.ambient_dim, U.field)


def random_matrix(
    rng, nrows: int, ncols: int, field: FieldDescriptor = QQ, height: int = 10
) -> ExactMatrix:
    return ExactMatrix(
        tuple(
            tuple(field.random(rng, height) for _ in range(ncols)) for _ in range(nrows)
        ),
        field,
    )
