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

"""Closed-form products that never touch the structure-constant tables.

Certificates produced by the engine are re-multiplied here, so a bug in the
tables or in the builders cannot hide behind a matching bug in the check.
"""
import logging
from typing import Callable, List, Sequence, Tuple

from pycommutator.algebra import AlgebraDescriptor, AlgebraElement, AlgebraKind


def quaternion_product(x: Sequence, y: Sequence, a: int, b: int) -> Tuple:
    """(x0 + x1 i + x2 j + x3 k)(y0 + y1 i + y2 j + y3 k) with i^2 = a, j^2 = b."""
    x0, x1, x2, x3 = x
    y0, y1, y2, y3 = y
    return (
        x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3,
        x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
        x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
        x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
    )


def _entries(coords: Sequence, m: int, block: int) -> List[List]:
    if block == 1:
        return [[coords[r * m + s] for s in range(m)] for r in range(m)]
    return [
        [tuple(coords[(r * m + s) * block : (r * m + s + 1) * block]) for s in range(m)]
        for r in range(m)
    ]


def _block_product(x: List[List], y: List[List], mul: Callable, add: Callable, zero) -> List[List]:
    m = len(x)
    out = []
    for r in range(m):
        row = []
        for u in range(m):
            acc = zero
            for s in range(m):
                acc = add(acc, mul(x[r][s], y[s][u]))
            row.append(acc)
        out.append(row)
    return out


def _flatten(entries: List[List], block: int) -> Tuple:
    if block == 1:
        return tuple(x for row in entries for x in row)
    return tuple(x for row in entries for q in row for x in q)


def product_coords(descriptor: AlgebraDescriptor, x: Sequence, y: Sequence) -> Tuple:
    """Coordinates of x*y, both given as raw coordinate sequences."""
    field = descriptor.base_field
    zero = field.zero()
    if descriptor.kind == AlgebraKind.QUATERNION:
        return quaternion_product(x, y, descriptor.a, descriptor.b)
    if descriptor.kind == AlgebraKind.MATRIX_OVER_FIELD:
        entries = _block_product(
            _entries(x, descriptor.m, 1),
            _entries(y, descriptor.m, 1),
            lambda p, q: p * q,
            lambda p, q: p + q,
            zero,
        )
        return _flatten(entries, 1)
    a, b = descriptor.a, descriptor.b
    entries = _block_product(
        _entries(x, descriptor.m, 4),
        _entries(y, descriptor.m, 4),
        lambda p, q: quaternion_product(p, q, a, b),
        lambda p, q: tuple(s + t for s, t in zip(p, q)),
        (zero,) * 4,
    )
    return _flatten(entries, 4)


def commutator_coords(descriptor: AlgebraDescriptor, x: Sequence, y: Sequence) -> Tuple:
    xy = product_coords(descriptor, x, y)
    yx = product_coords(descriptor, y, x)
    return tuple(p - q for p, q in zip(xy, yx))


def independent_multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.algebra != y.algebra:
        raise ValueError(f"cannot multiply elements of {x.algebra} and {y.algebra}")
    return AlgebraElement(x.algebra, product_coords(x.algebra, x.coords, y.coords))


def verify_two_commutators(
    a: AlgebraElement,
    b: AlgebraElement,
    c: AlgebraElement,
    d: AlgebraElement,
    e: AlgebraElement,
) -> bool:
    """Check a = (bc - cb)(de - ed) exactly."""
    descriptor = a.algebra
    if any(x.algebra != descriptor for x in (b, c, d, e)):
        return False
    left = commutator_coords(descriptor, b.coords, c.coords)
    right = commutator_coords(descriptor, d.coords, e.coords)
    return product_coords(descriptor, left, right) == tuple(a.coords)


def verify_certificate(certificate) -> bool:
    """Re-verify anything carrying a, b, c, d, e elements."""
    try:
        result = verify_two_commutators(
            certificate.a, certificate.b, certificate.c, certificate.d, certificate.e
        )
    except (AttributeError, TypeError, ValueError) as e:
        logging.warning(f"{certificate!r} - (Verify Certificate) - unreadable certificate: {e}")
        return False
    if not result:
        logging.debug(f"{certificate.a} - (Verify Certificate) - product mismatch")
    return result
