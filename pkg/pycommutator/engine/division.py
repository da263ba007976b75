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
from typing import Tuple

from pycommutator.algebra import (
    AlgebraElement,
    AlgebraKind,
    ad_operator,
    commutator,
    inverse,
    is_pure,
    multiply,
    subfield_containing,
)
from pycommutator.engine.certificate import (
    CertificatePath,
    CommutatorCertificate,
    DivisionTrace,
)
from pycommutator.errors import DescriptorError, ZeroElement
from pycommutator.linear import (
    ExactMatrix,
    SubspaceBasis,
    column_space,
    intersect_subspaces,
    kernel_basis,
    solve_linear,
)
from pycommutator.misc import requires_kind

PURE_UNITS = (1, 2, 3)


def _anticommutes(x: AlgebraElement, y: AlgebraElement) -> bool:
    return (multiply(x, y) + multiply(y, x)).is_zero()


@requires_kind(AlgebraKind.QUATERNION)
def anticommuting_pure(q: AlgebraElement) -> AlgebraElement:
    """A pure x with xq + qx = 0, preferring the units i, j, k in that order."""
    D = q.algebra
    for index in PURE_UNITS:
        x = AlgebraElement.basis(D, index)
        if _anticommutes(x, q):
            return x
    # xq + qx is a scalar for pure x and q, linear in the pure coordinates of x
    row = [
        (multiply(AlgebraElement.basis(D, index), q) + multiply(q, AlgebraElement.basis(D, index))).coords[0]
        for index in PURE_UNITS
    ]
    kernel = kernel_basis(ExactMatrix.from_rows([row], D.base_field))
    zero = D.base_field.zero()
    return AlgebraElement(D, (zero,) + tuple(kernel[0]))


@requires_kind(AlgebraKind.QUATERNION)
def pure_quaternion_commutator(q: AlgebraElement) -> Tuple[AlgebraElement, AlgebraElement]:
    """(x, y) with [x, y] = q for a nonzero pure quaternion q."""
    if q.is_zero():
        raise ZeroElement("0 needs no commutator witnesses")
    if not is_pure(q):
        raise DescriptorError(f"{q} has nonzero reduced trace")
    x = anticommuting_pure(q)
    solution = solve_linear(ad_operator(x), q.coords)
    # the image of ad_x on pures is the plane orthogonal to x, which holds q
    assert solution is not None, f"{q} not in the image of ad_{x}"
    return x, AlgebraElement(q.algebra, solution)


@requires_kind(AlgebraKind.QUATERNION)
def division_two_commutators(d: AlgebraElement) -> Tuple[CommutatorCertificate, DivisionTrace]:
    """Write a nonzero quaternion d as [u, b] * [x, y], deterministically."""
    if d.is_zero():
        raise ZeroElement("the zero element is handled by decompose")
    D = d.algebra
    field = D.base_field
    _, u = subfield_containing(d)
    one = AlgebraElement.one(D)

    v = next(
        AlgebraElement.basis(D, index)
        for index in range(D.dim_over_F)
        if not commutator(u, AlgebraElement.basis(D, index)).is_zero()
    )
    uv = commutator(u, v)
    uv_inverse = inverse(uv)
    W = SubspaceBasis(
        D.dim_over_F,
        tuple(multiply(uv_inverse, x).coords for x in (one, u, v)),
        field,
    )
    dW = SubspaceBasis.span([multiply(d, AlgebraElement(D, vec)).coords for vec in W], D.dim_over_F, field)
    ad_u = ad_operator(u)
    common = intersect_subspaces(column_space(ad_u), dW)
    y = AlgebraElement(D, common[common.dim - 1])
    b = AlgebraElement(D, solve_linear(ad_u, y.coords))
    w = multiply(inverse(d), y)

    # [u,v] w = mu0 + mu1 u + mu2 v
    mu = solve_linear(
        ExactMatrix.from_columns([one.coords, u.coords, v.coords], field),
        multiply(uv, w).coords,
    )
    ell = one.scale(mu[0]) + u.scale(mu[1])
    lambda_ = mu[2]

    if not lambda_:
        # w^-1 = ell^-1 [u, v] = [u, ell^-1 v]
        x, z = u, multiply(inverse(ell), v)
    else:
        # w^-1 = (ell + lambda v)^-1 [u, v] = [lambda^-1 (ell + lambda v)^-1 u, ell + lambda v]
        z = ell + v.scale(lambda_)
        x = multiply(inverse(z), u).scale(1 / lambda_)

    trace = DivisionTrace(d=d, u=u, v=v, W_basis=W, ell=ell, b=b, w=w, lambda_=lambda_)
    logging.debug(
        f"{d} - (Division Two Commutators) - u = {u}, v = {v}, w = {w}, branch {trace.branch}"
    )
    certificate = CommutatorCertificate(
        a=d,
        b=u,
        c=b,
        d=x,
        e=z,
        path=CertificatePath.DIVISION_CASE,
        division_trace=trace,
    )
    return certificate.certify(), trace
