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
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

import yaml

from pycommutator.algebra import (
    HAMILTON,
    AlgebraDescriptor,
    AlgebraKind,
    matrix_algebra,
    quaternion_matrix_algebra,
    random_element,
)
from pycommutator.errors import CommutatorError, DescriptorError, IsAField, TooLarge
from pycommutator.linear import GF, FieldKind
from pycommutator.oracle.independent import (
    commutator_coords,
    independent_multiply,
    product_coords,
    quaternion_product,
    verify_certificate,
    verify_two_commutators,
)
from pycommutator.settings import CommutatorSettings

RawMatrix = Tuple[int, ...]


@dataclass(frozen=True)
class EnumerationReport:
    """Exhaustive check that M_m(F_p) is covered by products of two commutators.

    Attributes:
        algebra: The enumerated algebra.
        total: p^{m^2}.
        commutator_set_size: Number of distinct [x, y].
        product_set_size: Number of distinct products of two commutators.
        covers_all: Whether every element is such a product.
        missing: Elements that are not, row-major residues.
        trace_zero_count: Number of trace-zero elements.
        commutators_are_trace_zero: Whether the commutators are exactly the
            trace-zero elements.
    """

    algebra: AlgebraDescriptor
    total: int
    commutator_set_size: int
    product_set_size: int
    covers_all: bool
    missing: Tuple[RawMatrix, ...] = ()
    trace_zero_count: int = 0
    commutators_are_trace_zero: bool = True

    def as_dict(self) -> dict:
        m = self.algebra.m
        return {
            "algebra": self.algebra.as_dict(),
            "total": self.total,
            "commutator_set_size": self.commutator_set_size,
            "product_set_size": self.product_set_size,
            "covers_all": self.covers_all,
            "missing": [
                [[str(x[r * m + s]) for s in range(m)] for r in range(m)] for x in self.missing
            ],
            "trace_zero_count": self.trace_zero_count,
            "commutators_are_trace_zero": self.commutators_are_trace_zero,
        }

    def as_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def as_yaml(self) -> str:
        return yaml.dump(self.as_dict(), sort_keys=False)


def prime_matrix_algebra(p: int, m: int) -> AlgebraDescriptor:
    return matrix_algebra(m, GF(p))


def _raw_product(x: RawMatrix, y: RawMatrix, m: int, p: int) -> RawMatrix:
    return tuple(
        sum(x[r * m + s] * y[s * m + u] for s in range(m)) % p
        for r in range(m)
        for u in range(m)
    )


def _raw_commutator(x: RawMatrix, y: RawMatrix, m: int, p: int) -> RawMatrix:
    xy = _raw_product(x, y, m, p)
    yx = _raw_product(y, x, m, p)
    return tuple((a - b) % p for a, b in zip(xy, yx))


def _raw_trace(x: RawMatrix, m: int, p: int) -> int:
    return sum(x[r * m + r] for r in range(m)) % p


def enumerate_products(descriptor: AlgebraDescriptor) -> EnumerationReport:
    """Enumerate all [x, y] and all products of two of them in M_m(F_p).

    Works on raw residue tuples only, so nothing here shares code with the
    decomposition engine.
    """
    field_ = descriptor.base_field
    if descriptor.kind != AlgebraKind.MATRIX_OVER_FIELD or field_.kind != FieldKind.PRIME_FIELD:
        raise DescriptorError(f"enumeration needs M_m(F_p), got {descriptor}")
    m, p = descriptor.m, field_.p
    if m == 1:
        raise IsAField(f"{descriptor} is a field: every commutator vanishes")
    total = p ** (m * m)
    limit = CommutatorSettings().oracle_max_elements
    if total > limit:
        raise TooLarge(f"{descriptor} has {total} elements, above the limit of {limit}")

    elements = list(itertools.product(range(p), repeat=m * m))
    commutators: Set[RawMatrix] = set()
    for x in elements:
        for y in elements:
            commutators.add(_raw_commutator(x, y, m, p))
    logging.debug(f"{descriptor} - (Enumerate Products) - {len(commutators)} commutators")

    products: Set[RawMatrix] = set()
    ordered = sorted(commutators)
    for x in ordered:
        for y in ordered:
            products.add(_raw_product(x, y, m, p))

    trace_zero = {x for x in elements if not _raw_trace(x, m, p)}
    commutators_are_trace_zero = commutators == trace_zero
    if not commutators_are_trace_zero:
        logging.warning(
            f"{descriptor} - (Enumerate Products) - commutators differ from the trace-zero set"
        )
    missing = tuple(x for x in elements if x not in products)
    return EnumerationReport(
        algebra=descriptor,
        total=total,
        commutator_set_size=len(commutators),
        product_set_size=len(products),
        covers_all=not missing,
        missing=missing,
        trace_zero_count=len(trace_zero),
        commutators_are_trace_zero=commutators_are_trace_zero,
    )


DEFAULT_KINDS = (
    HAMILTON,
    matrix_algebra(2),
    matrix_algebra(3),
    quaternion_matrix_algebra(2),
)


@dataclass
class KindSummary:
    trials: int = 0
    verified: int = 0
    max_retries: int = 0
    failures: List[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "trials": self.trials,
            "verified": self.verified,
            "max_retries": self.max_retries,
            "failures": list(self.failures),
        }


@dataclass
class CrossCheckReport:
    """Outcome of decomposing random elements and re-verifying every certificate."""

    seed: int
    trials: int
    kinds: Dict[str, KindSummary] = field(default_factory=dict)

    @property
    def all_verified(self) -> bool:
        return all(s.verified == s.trials and not s.failures for s in self.kinds.values())

    def as_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "all_verified": self.all_verified,
            "kinds": {name: s.as_dict() for name, s in self.kinds.items()},
        }

    def as_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def as_yaml(self) -> str:
        return yaml.dump(self.as_dict(), sort_keys=False)


def _check_one(element, seed: int) -> Tuple[bool, int, Optional[str]]:
    from pycommutator.engine import decompose

    try:
        certificate = decompose(element, seed=seed)
    except CommutatorError as e:
        return False, 0, f"{element}: {e.__class__.__name__}: {e}"
    if not verify_certificate(certificate):
        return False, certificate.retries_used, f"{element}: independent re-verification failed"
    return True, certificate.retries_used, None


def cross_check(
    seed: Optional[int] = None,
    trials: int = 100,
    kinds: Optional[Sequence[AlgebraDescriptor]] = None,
    height: int = 10,
    threads: Optional[int] = None,
) -> CrossCheckReport:
    """Decompose `trials` random elements of each algebra and re-verify independently.

    Parameters:
        seed: Seed of the element generator and of every decomposition.
        trials: Elements per algebra.
        kinds: Algebras to sample, defaulting to Hamilton, M_2(Q), M_3(Q) and M_2(Hamilton).
        height: Coordinate height of the sampled elements.
        threads: Worker threads, defaulting to the batch_threads setting.
    """
    seed = seed if seed is not None else 0
    if threads is None:
        threads = CommutatorSettings().batch_threads
    kinds = list(kinds) if kinds is not None else list(DEFAULT_KINDS)
    report = CrossCheckReport(seed=seed, trials=trials)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        for algebra in kinds:
            rng = random.Random(seed)
            elements = [random_element(algebra, rng, height) for _ in range(trials)]
            results = pool.map(_check_one, elements, [seed + n for n in range(trials)])
            summary = KindSummary()
            for ok, retries, failure in results:
                summary.trials += 1
                summary.verified += int(ok)
                summary.max_retries = max(summary.max_retries, retries)
                if failure is not None:
                    summary.failures.append(failure)
            logging.debug(
                f"{algebra} - (Cross Check) - {summary.verified}/{summary.trials} verified"
            )
            report.kinds[str(algebra)] = summary
    return report


__all__ = [
    "DEFAULT_KINDS",
    "CrossCheckReport",
    "EnumerationReport",
    "KindSummary",
    "commutator_coords",
    "cross_check",
    "enumerate_products",
    "independent_multiply",
    "prime_matrix_algebra",
    "product_coords",
    "quaternion_product",
    "verify_certificate",
    "verify_two_commutators",
]
