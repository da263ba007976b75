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

from pycommutator.algebra import (
    HAMILTON,
    AlgebraDescriptor,
    AlgebraElement,
    AlgebraKind,
    matrix_algebra,
    quaternion_algebra,
    quaternion_matrix_algebra,
)
from pycommutator.config import EngineConfig
from pycommutator.engine import CommutatorCertificate, decompose
from pycommutator.errors import CommutatorError, SearchWarning
from pycommutator.euler import BundleSpec, EulerCertificate, certify_cm_failure, villadsen_plan
from pycommutator.hyperplane import HyperplaneFactorization, hyperplane_factorize
from pycommutator.linear import GF, QQ, QQI, ExactMatrix
from pycommutator.ncpoly import NCPolynomial, commutator_ideal_decompose
from pycommutator.oracle import cross_check, enumerate_products, verify_certificate
from pycommutator.settings import CommutatorSettings

__all__ = [
    "HAMILTON",
    "AlgebraDescriptor",
    "AlgebraElement",
    "AlgebraKind",
    "matrix_algebra",
    "quaternion_algebra",
    "quaternion_matrix_algebra",
    "EngineConfig",
    "CommutatorCertificate",
    "decompose",
    "CommutatorError",
    "SearchWarning",
    "BundleSpec",
    "EulerCertificate",
    "certify_cm_failure",
    "villadsen_plan",
    "HyperplaneFactorization",
    "hyperplane_factorize",
    "GF",
    "QQ",
    "QQI",
    "ExactMatrix",
    "NCPolynomial",
    "commutator_ideal_decompose",
    "cross_check",
    "enumerate_products",
    "verify_certificate",
    "CommutatorSettings",
]
