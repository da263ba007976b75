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
from typing import Optional

from pycommutator.algebra import AlgebraElement, AlgebraKind, is_field
from pycommutator.engine.certificate import (
    CertificatePath,
    CommutatorCertificate,
    DivisionTrace,
)
from pycommutator.engine.division import (
    anticommuting_pure,
    division_two_commutators,
    pure_quaternion_commutator,
)
from pycommutator.engine.matrix_field import (
    TraceZeroPair,
    matrix_field_two_commutators,
    pair_catalog,
    shoda_commutator,
    shoda_pair,
    trace_zero_pair_factorization,
    zero_diagonal_similarity,
)
from pycommutator.engine.matrix_quaternion import (
    ar_commutator,
    matrix_quaternion_two_commutators,
    sylvester_solve,
    t_catalog,
)
from pycommutator.errors import CommutatorError, DescriptorError, IsAField
from pycommutator.linear import QQ


def _division(a: AlgebraElement, seed: Optional[int], max_retries: Optional[int]):
    certificate, _ = division_two_commutators(a)
    return certificate


DECOMPOSERS = {
    AlgebraKind.QUATERNION: _division,
    AlgebraKind.MATRIX_OVER_FIELD: matrix_field_two_commutators,
    AlgebraKind.MATRIX_OVER_QUATERNION: matrix_quaternion_two_commutators,
}


def _trivial_zero(a: AlgebraElement) -> CommutatorCertificate:
    algebra = a.algebra
    one = AlgebraElement.one(algebra)
    return CommutatorCertificate(
        a=a,
        b=AlgebraElement.basis(algebra, 0),
        c=AlgebraElement.basis(algebra, algebra.dim_over_F - 1),
        d=one,
        e=one,
        path=CertificatePath.TRIVIAL_ZERO,
    ).certify()


def decompose(
    a: AlgebraElement,
    seed: Optional[int] = None,
    max_retries: Optional[int] = None,
) -> CommutatorCertificate:
    """Write a as a product of two commutators [b, c] [d, e].

    Parameters:
        a: Element of a simple algebra over Q that is not a field.
        seed: Seed for the randomized search stages.
        max_retries: Cap on random attempts of the search stages.

    Returns:
        A certificate re-verified by the independent multiplier.
    """
    algebra = a.algebra
    if is_field(algebra):
        raise IsAField(f"{algebra} is a field: every commutator vanishes")
    if algebra.base_field != QQ:
        raise DescriptorError(f"decomposition runs over Q, not {algebra.base_field}")
    if a.is_zero():
        logging.debug(f"{algebra} - (Decompose) - zero input")
        return _trivial_zero(a)
    certificate = DECOMPOSERS[algebra.kind](a, seed=seed, max_retries=max_retries)
    if not certificate.verified:
        raise CommutatorError(f"certificate for {a} failed independent verification")
    logging.debug(
        f"{algebra} - (Decompose) - {certificate.path.value}, {certificate.retries_used} retries"
    )
    return certificate


__all__ = [
    "DECOMPOSERS",
    "CertificatePath",
    "CommutatorCertificate",
    "DivisionTrace",
    "TraceZeroPair",
    "anticommuting_pure",
    "ar_commutator",
    "decompose",
    "division_two_commutators",
    "matrix_field_two_commutators",
    "matrix_quaternion_two_commutators",
    "pair_catalog",
    "pure_quaternion_commutator",
    "shoda_commutator",
    "shoda_pair",
    "sylvester_solve",
    "t_catalog",
    "trace_zero_pair_factorization",
    "zero_diagonal_similarity",
]
