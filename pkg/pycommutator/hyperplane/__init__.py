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
from dataclasses import dataclass
from typing import Dict, Optional

from pycommutator.algebra import (
    AlgebraDescriptor,
    AlgebraElement,
    AlgebraKind,
    LinearFunctional,
    SubfieldBasis,
    default_maximal_subfield,
    inverse,
    kronecker_embed,
    multiply,
)
from pycommutator.errors import DescriptorError, DimensionError, ZeroElement
from pycommutator.linear import ExactMatrix, format_rational, kernel_basis, solve_linear
from pycommutator.misc import requires_kind


def tensor(t: ExactMatrix, d: AlgebraElement, algebra: AlgebraDescriptor) -> AlgebraElement:
    """t (x) d inside `algebra`; for the quaternion algebra itself t is 1 x 1."""
    if algebra.kind == AlgebraKind.QUATERNION:
        if t.shape != (1, 1):
            raise DimensionError(f"t must be 1 x 1 for {algebra}, got {t.shape}")
        return d.scale(t[0, 0])
    if t.shape != (algebra.m, algebra.m):
        raise DimensionError(f"t must be {algebra.m} x {algebra.m}, got {t.shape}")
    return kronecker_embed(t, d)


def kronecker_component(a: AlgebraElement, t: ExactMatrix) -> Optional[AlgebraElement]:
    """The d in D with a = t (x) d, or None when a is not in t (x) D."""
    algebra = a.algebra
    D = algebra.division_algebra
    columns = [tensor(t, AlgebraElement.basis(D, q), algebra).coords for q in range(4)]
    solution = solve_linear(ExactMatrix.from_columns(columns, algebra.base_field), a.coords)
    if solution is None:
        return None
    return AlgebraElement(D, solution)


@dataclass(frozen=True)
class HyperplaneFactorization:
    """a = h1 * h2 with both factors in the hyperplane ker(tau).

    Attributes:
        a: The factored element.
        h1: a * (t^-1 (x) d0^-1 k0).
        h2: t (x) (k0^-1 d0).
        tau: The functional cutting out the hyperplane.
        t: Invertible m x m matrix over the center.
        d0: Kernel vector of k -> tau(t (x) k d0) on K.
        k0: Element of K putting h1 into the hyperplane.
        K: The maximal subfield used.
    """

    a: AlgebraElement
    h1: AlgebraElement
    h2: AlgebraElement
    tau: LinearFunctional
    t: ExactMatrix
    d0: AlgebraElement
    k0: AlgebraElement
    K: SubfieldBasis

    @property
    def d(self) -> AlgebraElement:
        return multiply(inverse(self.k0), self.d0)

    def checks(self) -> Dict[str, bool]:
        return {
            "product": multiply(self.h1, self.h2) == self.a,
            "tau_h1_zero": not self.tau(self.h1),
            "tau_h2_zero": not self.tau(self.h2),
            "h2_kronecker_form": tensor(self.t, self.d, self.a.algebra) == self.h2,
            "d0_annihilates_K": all(
                not self.tau(tensor(self.t, multiply(k, self.d0), self.a.algebra))
                for k in self.K.elements
            ),
        }

    def verify(self) -> bool:
        return all(self.checks().values())

    def as_dict(self) -> dict:
        return {
            "a": self.a.as_dict(),
            "h1": self.h1.as_dict(),
            "h2": self.h2.as_dict(),
            "t": [[format_rational(x) for x in row] for row in self.t.rows],
            "tau": [format_rational(x) for x in self.tau.coeffs],
            "K": [k.as_dict() for k in self.K.elements],
            "d0": self.d0.as_dict(),
            "k0": self.k0.as_dict(),
            "d": self.d.as_dict(),
            "checks": self.checks(),
        }

    def as_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)


@requires_kind(AlgebraKind.QUATERNION, AlgebraKind.MATRIX_OVER_QUATERNION)
def find_d0(tau: LinearFunctional, t: ExactMatrix, K: SubfieldBasis) -> AlgebraElement:
    """A nonzero d0 in D with tau(t (x) k d0) = 0 for every k in K."""
    algebra = tau.algebra
    D = algebra.division_algebra
    if K.algebra != D:
        raise DescriptorError(f"K lives in {K.algebra}, expected {D}")
    units = [AlgebraElement.basis(D, q) for q in range(4)]
    # U(d)(k_s) = tau(t (x) k_s d), one row per basis element of K
    rows = [
        [tau(tensor(t, multiply(k, unit), algebra)) for unit in units] for k in K.elements
    ]
    kernel = kernel_basis(ExactMatrix.from_rows(rows, algebra.base_field))
    d0 = AlgebraElement(D, kernel[0])
    logging.debug(f"{algebra} - (Find d0) - kernel of dimension {kernel.dim}, d0 = {d0}")
    return d0


def _vector_height(vector, field) -> int:
    return max(field.height(x) for x in vector)


def hyperplane_factorize(
    a: AlgebraElement,
    tau: LinearFunctional,
    t: ExactMatrix,
    K: Optional[SubfieldBasis] = None,
) -> HyperplaneFactorization:
    """Factor a nonzero a as h1 * h2 with tau(h1) = tau(h2) = 0.

    Parameters:
        a: The element to factor.
        tau: Linear functional on the algebra of `a`.
        t: Invertible m x m matrix over the center.
        K: Maximal subfield of D, Q(i) when omitted.
    """
    if a.is_zero():
        raise ZeroElement("hyperplane factorization of 0")
    if tau.algebra != a.algebra:
        raise DescriptorError(f"tau is defined on {tau.algebra}, a lives in {a.algebra}")
    algebra = a.algebra
    field = algebra.base_field
    if K is None:
        K = default_maximal_subfield(algebra)
    d0 = find_d0(tau, t, K)
    d0_inverse = inverse(d0)
    t_inverse = t.inverse()

    # tau(a (t^-1 (x) d0^-1 k)) is linear in the K-coordinates of k
    coefficients = [
        tau(multiply(a, tensor(t_inverse, multiply(d0_inverse, k), algebra)))
        for k in K.elements
    ]
    kernel = kernel_basis(ExactMatrix.from_rows([coefficients], field))
    choice = min(kernel.vectors, key=lambda v: _vector_height(v, field))
    k0 = K.combination(choice)

    h1 = multiply(a, tensor(t_inverse, multiply(d0_inverse, k0), algebra))
    h2 = tensor(t, multiply(inverse(k0), d0), algebra)
    logging.debug(f"{algebra} - (Hyperplane Factorize) - d0 = {d0}, k0 = {k0}")
    return HyperplaneFactorization(a=a, h1=h1, h2=h2, tau=tau, t=t, d0=d0, k0=k0, K=K)
