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

import itertools
import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import sympy
import yaml

from pycommutator.errors import DimensionError, SchemaError, TooLarge
from pycommutator.settings import CommutatorSettings

# alpha_{i,j}: sphere j of stage i, both 1-based
Generator = Tuple[int, int]
Monomial = FrozenSet[Generator]


def _sorted_monomial(monomial: Iterable[Generator]) -> List[Generator]:
    return sorted(monomial)


@dataclass(frozen=True)
class SquareFreePolynomial:
    """Integer polynomial in generators with alpha^2 = 0.

    Attributes:
        terms: Map from squarefree monomials (frozensets of generators) to
            nonzero integer coefficients.
    """

    terms: Dict[Monomial, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for monomial, coeff in self.terms.items():
            if coeff:
                cleaned[frozenset(monomial)] = int(coeff)
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def zero(cls) -> "SquareFreePolynomial":
        return cls({})

    @classmethod
    def one(cls) -> "SquareFreePolynomial":
        return cls({frozenset(): 1})

    @classmethod
    def generator(cls, stage: int, j: int) -> "SquareFreePolynomial":
        return cls({frozenset([(stage, j)]): 1})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((len(monomial) for monomial in self.terms), default=-1)

    def coefficient(self, monomial: Iterable[Generator]) -> int:
        return self.terms.get(frozenset(monomial), 0)

    def monomials(self) -> List[List[Generator]]:
        return sorted(_sorted_monomial(monomial) for monomial in self.terms)

    def __add__(self, other: "SquareFreePolynomial") -> "SquareFreePolynomial":
        terms = dict(self.terms)
        for monomial, coeff in other.terms.items():
            terms[monomial] = terms.get(monomial, 0) + coeff
        return SquareFreePolynomial(terms)

    def __mul__(self, other: "SquareFreePolynomial") -> "SquareFreePolynomial":
        return sq_mul(self, other)

    def __pow__(self, exponent: int) -> "SquareFreePolynomial":
        return sq_pow(self, exponent)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for monomial in self.monomials():
            name = "*".join(f"a{i},{j}" for i, j in monomial) or "1"
            parts.append(f"{self.terms[frozenset(monomial)]}*{name}")
        return " + ".join(parts)

    def as_dict(self) -> dict:
        return {
            "terms": [
                {
                    "monomial": [list(g) for g in monomial],
                    "coeff": str(self.terms[frozenset(monomial)]),
                }
                for monomial in self.monomials()
            ]
        }


def sq_mul(f: SquareFreePolynomial, g: SquareFreePolynomial) -> SquareFreePolynomial:
    """Product in the square-zero ring; overlapping monomials vanish."""
    terms: Dict[Monomial, int] = {}
    for u, a in f.terms.items():
        for v, b in g.terms.items():
            if u & v:
                continue
            key = u | v
            terms[key] = terms.get(key, 0) + a * b
    return SquareFreePolynomial(terms)


def sq_pow(f: SquareFreePolynomial, exponent: int) -> SquareFreePolynomial:
    """f ** exponent by repeated squaring."""
    if exponent < 0:
        raise DimensionError(f"negative exponent {exponent}")
    result = SquareFreePolynomial.one()
    base = f
    while exponent:
        if exponent & 1:
            result = sq_mul(result, base)
        exponent >>= 1
        if exponent:
            base = sq_mul(base, base)
    return result


def euler_class_of_tensor(stage: int, n: int) -> SquareFreePolynomial:
    """alpha_{stage,1} + ... + alpha_{stage,n}: the class of p(x_1) (x) ... (x) p(x_n)."""
    if n < 1:
        raise DimensionError(f"a stage needs at least one sphere, got {n}")
    return SquareFreePolynomial({frozenset([(stage, j)]): 1 for j in range(1, n + 1)})


@dataclass(frozen=True)
class BundleSpec:
    """The bundle q_1^{l_1} (+) q_2^{l_2} (+) ... over a product of sphere powers.

    Attributes:
        stages: One (n_i, l_i) pair per stage: n_i spheres carrying the
            rank-one tensor projection, repeated l_i times.
    """

    stages: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        stages = tuple((int(n), int(l)) for n, l in self.stages)
        for n, l in stages:
            if n < 1 or l < 1:
                raise DimensionError(f"stage ({n}, {l}) needs n_i >= 1 and l_i >= 1")
        object.__setattr__(self, "stages", stages)

    @classmethod
    def from_strings(cls, raw: Sequence[str], path: str = "$") -> "BundleSpec":
        """Parse `["8:1", "16:2"]` style stage descriptions."""
        stages = []
        for index, item in enumerate(raw):
            try:
                n, l = (int(part) for part in item.split(":"))
            except (ValueError, AttributeError):
                raise SchemaError(f"stage {item!r} is not n_i:l_i", path=f"{path}[{index}]")
            if n < 1 or l < 1:
                raise SchemaError(f"stage {item!r} needs positive entries", path=f"{path}[{index}]")
            stages.append((n, l))
        if not stages:
            raise SchemaError("at least one stage is required", path=path)
        return cls(tuple(stages))

    @property
    def total_spheres(self) -> int:
        return sum(n for n, _ in self.stages)

    def as_dict(self) -> dict:
        return {"stages": [{"n": n, "l": l} for n, l in self.stages]}


class Conclusion(Enum):
    NOT_SUBEQUIVALENT = "NotSubequivalent"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class EulerCertificate:
    """Nonvanishing of the Euler class of the power-fold direct sum.

    Attributes:
        spec: The bundle r.
        power: The number of copies of r summed.
        witness_monomial: A monomial with nonzero coefficient, empty if none.
        coefficient: Its coefficient, 0 if none.
        conclusion: NotSubequivalent when the class is nonzero.
    """

    spec: BundleSpec
    power: int
    witness_monomial: Tuple[Generator, ...]
    coefficient: int
    conclusion: Conclusion

    @property
    def certified(self) -> bool:
        return self.conclusion == Conclusion.NOT_SUBEQUIVALENT

    def verify(self) -> bool:
        """Recheck the certificate by multiplying out in the square-free ring.

        Stages whose expansion would be too large fall back to the closed form.
        """
        if not self.certified:
            return (
                self.coefficient == 0
                and not self.witness_monomial
                and _class_vanishes(self.spec, self.power)
            )
        if not _admissible(self.spec, self.power, self.witness_monomial):
            return False
        return self.coefficient == _witness_coefficient(self.spec, self.power, self.witness_monomial)

    def as_dict(self) -> dict:
        return {
            "spec": self.spec.as_dict(),
            "power": self.power,
            "witness_monomial": [list(g) for g in self.witness_monomial],
            "coefficient": str(self.coefficient),
            "conclusion": self.conclusion.value,
        }

    def as_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def as_yaml(self) -> str:
        return yaml.dump(self.as_dict(), sort_keys=False)


def _admissible(spec: BundleSpec, power: int, monomial: Sequence[Generator]) -> bool:
    """Whether `monomial` is one of the monomials surviving in the class."""
    if len(set(monomial)) != len(monomial):
        return False
    for stage, (n, l) in enumerate(spec.stages, start=1):
        spheres = [j for i, j in monomial if i == stage]
        if len(spheres) != power * l or any(not (1 <= j <= n) for j in spheres):
            return False
    return all(1 <= i <= len(spec.stages) for i, _ in monomial)


def _expandable(generators: int) -> bool:
    # the widest squaring step multiplies two polynomials of C(k, k/2) terms
    middle = int(sympy.binomial(generators, generators // 2))
    return middle * middle <= CommutatorSettings().expansion_max_terms


def _stage_power(stage: int, n: int, degree: int, spheres: Sequence[int]) -> SquareFreePolynomial:
    """(alpha_{stage,1} + ... + alpha_{stage,n}) ** degree with alpha_{stage,j} = 0 off `spheres`."""
    wanted = {(stage, j) for j in spheres}
    full = euler_class_of_tensor(stage, n)
    return sq_pow(SquareFreePolynomial({u: c for u, c in full.terms.items() if u <= wanted}), degree)


def _witness_coefficient(spec: BundleSpec, power: int, monomial: Sequence[Generator]) -> int:
    coefficient = 1
    for stage, (n, l) in enumerate(spec.stages, start=1):
        spheres = sorted(j for i, j in monomial if i == stage)
        degree = power * l
        if _expandable(len(spheres)):
            factor = _stage_power(stage, n, degree, spheres)
            coefficient *= factor.coefficient((stage, j) for j in spheres)
        else:
            coefficient *= int(sympy.factorial(degree))
    return coefficient


def _class_vanishes(spec: BundleSpec, power: int) -> bool:
    for stage, (n, l) in enumerate(spec.stages, start=1):
        degree = power * l
        if degree <= n:
            continue
        if not _expandable(n):
            return True
        if sq_pow(euler_class_of_tensor(stage, n), degree).is_zero():
            return True
    return False


def euler_witness(spec: BundleSpec, power: int) -> Optional[Tuple[Tuple[Generator, ...], int]]:
    """Least surviving monomial of e(r^{(+) power}) and its coefficient, without expanding.

    The class is prod_i (sum_j alpha_{i,j})^{power * l_i}; every surviving
    monomial picks power * l_i distinct spheres of stage i and carries the
    coefficient prod_i (power * l_i)!.
    """
    monomial = []
    coefficient = 1
    for stage, (n, l) in enumerate(spec.stages, start=1):
        degree = power * l
        if degree > n:
            return None
        monomial.extend((stage, j) for j in range(1, degree + 1))
        coefficient *= int(sympy.factorial(degree))
    return tuple(monomial), coefficient


def euler_direct_sum_power(spec: BundleSpec, power: int) -> SquareFreePolynomial:
    """The full class e(r^{(+) power}), materialized stage by stage."""
    size = 1
    for n, l in spec.stages:
        size *= int(sympy.binomial(n, power * l)) if power * l <= n else 0
    limit = CommutatorSettings().expansion_max_terms
    if size > limit:
        raise TooLarge(f"the class has {size} monomials, above the limit of {limit}")
    result = SquareFreePolynomial.one()
    for stage, (n, l) in enumerate(spec.stages, start=1):
        degree = power * l
        if degree > n:
            return SquareFreePolynomial.zero()
        factor = int(sympy.factorial(degree))
        stage_terms = {
            frozenset((stage, j) for j in subset): factor
            for subset in itertools.combinations(range(1, n + 1), degree)
        }
        result = sq_mul(result, SquareFreePolynomial(stage_terms))
    return result


def certify_subequivalence_obstruction(spec: BundleSpec, power: int) -> EulerCertificate:
    """Certificate that e_11 is not subequivalent to r^{(+) power}, when the class detects it."""
    witness = euler_witness(spec, power)
    if witness is None:
        logging.debug(f"{spec.stages} - (Euler Obstruction) - class vanishes at power {power}")
        return EulerCertificate(
            spec=spec,
            power=power,
            witness_monomial=(),
            coefficient=0,
            conclusion=Conclusion.INCONCLUSIVE,
        )
    monomial, coefficient = witness
    return EulerCertificate(
        spec=spec,
        power=power,
        witness_monomial=monomial,
        coefficient=coefficient,
        conclusion=Conclusion.NOT_SUBEQUIVALENT,
    )


def certify_cm_failure(spec: BundleSpec, m: int) -> EulerCertificate:
    """Obstruction at power 8m, the hypothesis ruling out property C_m."""
    if m < 1:
        raise DimensionError(f"m must be positive, got {m}")
    return certify_subequivalence_obstruction(spec, 8 * m)
