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

import json
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from pycommutator.errors import DimensionError, NotAnIdentity, SchemaError
from pycommutator.linear import format_rational, parse_rational

Word = Tuple[int, ...]


@dataclass(frozen=True)
class NCPolynomial:
    """A polynomial in noncommuting variables x_1, ..., x_n over Q.

    Attributes:
        variables: The number n of variables.
        terms: Map from words (tuples of 1-based variable indices) to
            coefficients; the empty word is the constant term.
    """

    variables: int
    terms: Dict[Word, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.variables, int) or self.variables < 0:
            raise DimensionError(f"variable count must be a non-negative integer, got {self.variables}")
        cleaned = {}
        for word, coeff in self.terms.items():
            word = tuple(word)
            if any(not (1 <= x <= self.variables) for x in word):
                raise DimensionError(f"word {word} uses a variable outside x1..x{self.variables}")
            coeff = Fraction(coeff)
            if coeff:
                cleaned[word] = coeff
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def zero(cls, variables: int) -> "NCPolynomial":
        return cls(variables, {})

    @classmethod
    def monomial(cls, variables: int, word: Word, coeff=1) -> "NCPolynomial":
        return cls(variables, {tuple(word): Fraction(coeff)})

    @classmethod
    def variable(cls, variables: int, index: int) -> "NCPolynomial":
        return cls.monomial(variables, (index,))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((len(word) for word in self.terms), default=-1)

    def _check(self, other: "NCPolynomial") -> int:
        if not isinstance(other, NCPolynomial):
            raise TypeError(f"cannot combine NCPolynomial with {type(other).__name__}")
        return max(self.variables, other.variables)

    def __add__(self, other: "NCPolynomial") -> "NCPolynomial":
        variables = self._check(other)
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            terms[word] = terms.get(word, Fraction(0)) + coeff
        return NCPolynomial(variables, terms)

    def __neg__(self) -> "NCPolynomial":
        return NCPolynomial(self.variables, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "NCPolynomial") -> "NCPolynomial":
        return self + (-other)

    def scale(self, value) -> "NCPolynomial":
        value = Fraction(value)
        return NCPolynomial(self.variables, {w: value * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NCPolynomial):
            return self.scale(other)
        variables = self._check(other)
        terms = defaultdict(Fraction)
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                terms[u + v] += a * b
        return NCPolynomial(variables, dict(terms))

    def __rmul__(self, other):
        return self.scale(other)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for word in sorted(self.terms, key=lambda w: (len(w), w)):
            monomial = "*".join(f"x{i}" for i in word) or "1"
            parts.append(f"{format_rational(self.terms[word])}*{monomial}")
        return " + ".join(parts)

    def as_dict(self) -> dict:
        return {
            "vars": self.variables,
            "terms": [
                {"word": list(word), "coeff": format_rational(self.terms[word])}
                for word in sorted(self.terms, key=lambda w: (len(w), w))
            ],
        }

    @classmethod
    def from_dict(cls, data: dict, path: str = "$") -> "NCPolynomial":
        if not isinstance(data, dict):
            raise SchemaError("polynomial must be an object", path=path)
        variables = data.get("vars")
        if not isinstance(variables, int) or isinstance(variables, bool) or variables < 0:
            raise SchemaError("vars must be a non-negative integer", path=f"{path}.vars")
        raw_terms = data.get("terms", [])
        if not isinstance(raw_terms, list):
            raise SchemaError("terms must be a list", path=f"{path}.terms")
        terms = defaultdict(Fraction)
        for n, term in enumerate(raw_terms):
            term_path = f"{path}.terms[{n}]"
            if not isinstance(term, dict):
                raise SchemaError("term must be an object", path=term_path)
            word = term.get("word")
            if not isinstance(word, list) or any(
                not isinstance(x, int) or isinstance(x, bool) for x in word
            ):
                raise SchemaError("word must be a list of integers", path=f"{term_path}.word")
            if any(not (1 <= x <= variables) for x in word):
                raise SchemaError(
                    f"word uses a variable outside x1..x{variables}", path=f"{term_path}.word"
                )
            terms[tuple(word)] += parse_rational(term.get("coeff", "1"), path=f"{term_path}.coeff")
        return cls(variables, dict(terms))


def abelianize(f: NCPolynomial) -> Dict[Word, Fraction]:
    """Image of f in the commutative polynomial ring, keyed by sorted words."""
    image = defaultdict(Fraction)
    for word, coeff in f.terms.items():
        image[tuple(sorted(word))] += coeff
    return {word: coeff for word, coeff in image.items() if coeff}


@dataclass(frozen=True)
class CommutatorSummand:
    """g [x_i, x_j] h."""

    g: NCPolynomial
    i: int
    j: int
    h: NCPolynomial

    def expand(self, variables: int) -> NCPolynomial:
        xi = NCPolynomial.variable(variables, self.i)
        xj = NCPolynomial.variable(variables, self.j)
        return self.g * (xi * xj - xj * xi) * self.h

    def as_dict(self) -> dict:
        return {"g": self.g.as_dict(), "i": self.i, "j": self.j, "h": self.h.as_dict()}


@dataclass(frozen=True)
class CommutatorIdealDecomposition:
    """f = sum_k g_k [x_{i_k}, x_{j_k}] h_k.

    Attributes:
        f: The decomposed polynomial.
        summands: The terms of the sum.
    """

    f: NCPolynomial
    summands: Tuple[CommutatorSummand, ...]

    @property
    def m(self) -> int:
        return len(self.summands)

    def expand(self) -> NCPolynomial:
        total = NCPolynomial.zero(self.f.variables)
        for summand in self.summands:
            total = total + summand.expand(self.f.variables)
        return total

    def as_dict(self) -> dict:
        return {
            "f": self.f.as_dict(),
            "m": self.m,
            "cm_index": self.m,
            "summands": [s.as_dict() for s in self.summands],
            "expand_check": expand_check(self, self.f),
        }

    def as_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)


def _leftmost_descent(word: Word) -> Optional[int]:
    for p in range(len(word) - 1):
        if word[p] > word[p + 1]:
            return p
    return None


def commutator_ideal_decompose(f: NCPolynomial) -> CommutatorIdealDecomposition:
    """Rewrite an abelianization-zero f as a sum of g [x_i, x_j] h.

    Every term is bubble-sorted by swapping its leftmost descending adjacent
    pair; x_j x_i = x_i x_j - [x_i, x_j] leaves one summand per swap. The
    sorted remainders cancel because the abelianization of f vanishes.
    """
    image = abelianize(f)
    if image:
        raise NotAnIdentity(f"abelianization of {f} is nonzero")

    merged: Dict[Tuple[Word, int, int, Word], Fraction] = {}
    remainder = defaultdict(Fraction)
    for word in sorted(f.terms, key=lambda w: (len(w), w)):
        coeff = f.terms[word]
        current = list(word)
        p = _leftmost_descent(tuple(current))
        while p is not None:
            j, i = current[p], current[p + 1]
            key = (tuple(current[:p]), i, j, tuple(current[p + 2 :]))
            merged[key] = merged.get(key, Fraction(0)) - coeff
            current[p], current[p + 1] = i, j
            p = _leftmost_descent(tuple(current))
        remainder[tuple(current)] += coeff
    assert not any(remainder.values()), "sorted remainders must cancel"

    n = f.variables
    summands = tuple(
        CommutatorSummand(
            g=NCPolynomial.monomial(n, u, coeff),
            i=i,
            j=j,
            h=NCPolynomial.monomial(n, v),
        )
        for (u, i, j, v), coeff in merged.items()
        if coeff
    )
    logging.debug(f"{f} - (Commutator Ideal Decompose) - {len(summands)} summands")
    return CommutatorIdealDecomposition(f=f, summands=summands)


def expand_check(dec: CommutatorIdealDecomposition, f: NCPolynomial) -> bool:
    """Whether the summands of `dec` expand to exactly f."""
    variables = max(f.variables, dec.f.variables)
    total = NCPolynomial.zero(variables)
    for summand in dec.summands:
        total = total + summand.expand(variables)
    return total.terms == f.terms


__all__ = [
    "CommutatorIdealDecomposition",
    "CommutatorSummand",
    "NCPolynomial",
    "Word",
    "abelianize",
    "commutator_ideal_decompose",
    "expand_check",
]
