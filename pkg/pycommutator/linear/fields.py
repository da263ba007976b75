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

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Optional, Union

import sympy

from pycommutator.errors import DescriptorError, SchemaError

MAX_PRIME = 2**31


def format_rational(value: Fraction) -> str:
    """Serialize a rational as `"p/q"`, or `"p"` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(raw: Any, path: str = "$") -> Fraction:
    if isinstance(raw, bool):
        raise SchemaError("expected a rational string", path=path)
    if isinstance(raw, int):
        return Fraction(raw)
    if not isinstance(raw, str):
        raise SchemaError("expected a rational string", path=path)
    try:
        return Fraction(raw.strip())
    except (ValueError, ZeroDivisionError):
        raise SchemaError(f"cannot read {raw!r} as a rational", path=path)


@dataclass(frozen=True, eq=False)
class GaussianRational:
    """An element re + im*i of Q(i), both parts kept as reduced fractions."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def _lift(other) -> Optional["GaussianRational"]:
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(Fraction(other))
        return None

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        norm = other.norm()
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * other.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other / self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({format_rational(self.re)}, {format_rational(self.im)})"


@dataclass(frozen=True, eq=False)
class Residue:
    """A residue class modulo the prime `p`, stored in [0, p)."""

    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _lift(self, other) -> Optional["Residue"]:
        if isinstance(other, Residue):
            if other.p != self.p:
                raise DescriptorError(f"cannot mix residues mod {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return Residue(other, self.p)
        return None

    def inverse(self) -> "Residue":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return Residue(self.value + other.value, self.p)

    __radd__ = __add__

    def __neg__(self):
        return Residue(-self.value, self.p)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return Residue(self.value - other.value, self.p)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return Residue(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"Residue({self.value} mod {self.p})"


Scalar = Union[Fraction, GaussianRational, Residue]


class FieldKind(Enum):
    RATIONALS = "Q"
    GAUSSIAN_RATIONALS = "Q(i)"
    PRIME_FIELD = "Fp"


@dataclass(frozen=True)
class FieldDescriptor:
    """An exact base field.

    Attributes:
        kind: Which of Q, Q(i) or F_p this is.
        p: The modulus, only set for prime fields.
    """

    kind: FieldKind
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == FieldKind.PRIME_FIELD:
            if self.p is None or not (1 < self.p < MAX_PRIME) or not sympy.isprime(self.p):
                raise DescriptorError(f"F_p needs a prime p < 2^31, got {self.p}")
        elif self.p is not None:
            raise DescriptorError(f"{self.kind.value} takes no modulus")

    def __str__(self):
        if self.kind == FieldKind.PRIME_FIELD:
            return f"Fp:{self.p}"
        return self.kind.value

    @classmethod
    def from_string(cls, raw: str, path: str = "$") -> "FieldDescriptor":
        if not isinstance(raw, str):
            raise SchemaError("field must be a string", path=path)
        if raw == "Q":
            return QQ
        if raw in ("Q(i)", "QI"):
            return QQI
        if raw.startswith("Fp:"):
            try:
                return GF(int(raw[3:]))
            except ValueError:
                raise SchemaError(f"bad prime field {raw!r}", path=path)
            except DescriptorError as e:
                raise SchemaError(str(e), path=path)
        raise SchemaError(f"unknown field {raw!r}", path=path)

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == FieldKind.PRIME_FIELD else 0

    def zero(self) -> Scalar:
        return self.coerce(0)

    def one(self) -> Scalar:
        return self.coerce(1)

    def coerce(self, value) -> Scalar:
        """Bring an int, Fraction, string or scalar of this field into canonical form."""
        if isinstance(value, str):
            value = parse_rational(value)
        if self.kind == FieldKind.RATIONALS:
            if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
                return Fraction(value)
            if isinstance(value, GaussianRational) and not value.im:
                return value.re
        elif self.kind == FieldKind.GAUSSIAN_RATIONALS:
            if isinstance(value, GaussianRational):
                return value
            if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
                return GaussianRational(Fraction(value))
        else:
            if isinstance(value, Residue) and value.p == self.p:
                return value
            if isinstance(value, int) and not isinstance(value, bool):
                return Residue(value, self.p)
            if isinstance(value, Fraction):
                return Residue(value.numerator, self.p) / value.denominator
        raise DescriptorError(f"{value!r} is not a scalar of {self}")

    def contains(self, value) -> bool:
        if self.kind == FieldKind.RATIONALS:
            return isinstance(value, Fraction)
        if self.kind == FieldKind.GAUSSIAN_RATIONALS:
            return isinstance(value, GaussianRational)
        return isinstance(value, Residue) and value.p == self.p

    def height(self, value: Scalar) -> int:
        """Bit size of a scalar, used to pick cheap pivots."""
        if self.kind == FieldKind.RATIONALS:
            return abs(value.numerator).bit_length() + value.denominator.bit_length()
        if self.kind == FieldKind.GAUSSIAN_RATIONALS:
            return sum(
                abs(part.numerator).bit_length() + part.denominator.bit_length()
                for part in (value.re, value.im)
            )
        return 0

    def random(self, rng: random.Random, height: int) -> Scalar:
        if self.kind == FieldKind.PRIME_FIELD:
            return Residue(rng.randrange(self.p), self.p)
        re = Fraction(rng.randint(-height, height), rng.randint(1, height))
        if self.kind == FieldKind.RATIONALS:
            return re
        return GaussianRational(re, Fraction(rng.randint(-height, height), rng.randint(1, height)))

    def dump(self, value: Scalar):
        """JSON form of a scalar of this field."""
        if self.kind == FieldKind.RATIONALS:
            return format_rational(value)
        if self.kind == FieldKind.GAUSSIAN_RATIONALS:
            return {"re": format_rational(value.re), "im": format_rational(value.im)}
        return str(value.value)

    def parse(self, raw, path: str = "$") -> Scalar:
        if self.kind == FieldKind.GAUSSIAN_RATIONALS:
            if isinstance(raw, dict):
                if set(raw.keys()) - {"re", "im"}:
                    raise SchemaError("Gaussian rationals take only re and im", path=path)
                return GaussianRational(
                    parse_rational(raw.get("re", "0"), path=f"{path}.re"),
                    parse_rational(raw.get("im", "0"), path=f"{path}.im"),
                )
            return GaussianRational(parse_rational(raw, path=path))
        if self.kind == FieldKind.PRIME_FIELD:
            if isinstance(raw, str) and raw.strip().lstrip("-").isdigit():
                return Residue(int(raw), self.p)
            if isinstance(raw, int) and not isinstance(raw, bool):
                return Residue(raw, self.p)
            raise SchemaError("expected a decimal residue string", path=path)
        return parse_rational(raw, path=path)


QQ = FieldDescriptor(FieldKind.RATIONALS)
QQI = FieldDescriptor(FieldKind.GAUSSIAN_RATIONALS)


def GF(p: int) -> FieldDescriptor:
    return FieldDescriptor(FieldKind.PRIME_FIELD, p)
