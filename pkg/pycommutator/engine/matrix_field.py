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
import logging
import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

import sympy

from pycommutator.algebra import AlgebraElement, AlgebraKind, from_matrix, to_matrix
from pycommutator.engine.certificate import CertificatePath, CommutatorCertificate
from pycommutator.errors import (
    DescriptorError,
    DimensionError,
    SearchExhausted,
    SearchWarning,
    ZeroElement,
)
from pycommutator.linear import QQ, ExactMatrix, SubspaceBasis, random_matrix
from pycommutator.misc import requires_kind
from pycommutator.settings import CommutatorSettings


def _check_trace_zero(X: ExactMatrix):
    if not X.is_square:
        raise DimensionError(f"expected a square matrix, got {X.shape}")
    if X.trace():
        raise DescriptorError(f"matrix has trace {X.trace()}, expected 0")


def _candidate_vectors(m: int, bound: int) -> Iterator[Tuple[int, ...]]:
    for r in range(m):
        yield tuple(1 if i == r else 0 for i in range(m))
    values = [0]
    for k in range(1, bound + 1):
        values.extend((k, -k))
    for v in itertools.product(values, repeat=m):
        if any(v):
            yield v


def _find_splitting_vector(X: ExactMatrix, bound: int) -> Optional[Tuple]:
    """A vector v with Xv = 0 or with v, Xv independent."""
    m = X.nrows
    for raw in _candidate_vectors(m, bound):
        v = tuple(X.field.coerce(x) for x in raw)
        Xv = X.apply(v)
        if not any(Xv):
            return v
        if SubspaceBasis.span([v, Xv], m, X.field).dim == 2:
            return v
    return None


def _extend_to_basis(columns: List[Tuple], m: int, field) -> ExactMatrix:
    basis = list(columns)
    for r in range(m):
        if len(basis) == m:
            break
        unit = tuple(field.one() if i == r else field.zero() for i in range(m))
        if SubspaceBasis.span(basis + [unit], m, field).dim == len(basis) + 1:
            basis.append(unit)
    return ExactMatrix.from_columns(basis, field)


def _block_diagonal(S: ExactMatrix) -> ExactMatrix:
    """diag(1, S)."""
    field = S.field
    m = S.nrows + 1
    rows = [[field.one()] + [field.zero()] * (m - 1)]
    for row in S.rows:
        rows.append([field.zero()] + list(row))
    return ExactMatrix.from_rows(rows, field)


def zero_diagonal_similarity(X: ExactMatrix, bound: Optional[int] = None) -> ExactMatrix:
    """An invertible S with S^-1 X S having an all-zero diagonal.

    Parameters:
        X: A trace-zero square matrix over Q.
        bound: Largest absolute entry of the candidate vectors, before the
            single widening step.
    """
    _check_trace_zero(X)
    m = X.nrows
    if not any(X.diagonal_entries()):
        return ExactMatrix.identity(m, X.field)
    if bound is None:
        bound = CommutatorSettings().zero_diagonal_bound

    v = _find_splitting_vector(X, bound)
    if v is None:
        warnings.warn(SearchWarning(f"widening zero-diagonal search to entries up to {bound + 1}"))
        logging.warning(f"{X.rows} - (Zero Diagonal Similarity) - widening candidates to {bound + 1}")
        v = _find_splitting_vector(X, bound + 1)
    if v is None:
        raise SearchExhausted(
            f"no splitting vector with entries up to {bound + 1}",
            transcript=[f"bound {bound}", f"bound {bound + 1}"],
        )

    Xv = X.apply(v)
    S1 = _extend_to_basis([v] if not any(Xv) else [v, Xv], m, X.field)
    Y = S1.inverse() * X * S1
    trailing = Y.submatrix(1, m, 1, m)
    if m == 2 or not any(trailing.diagonal_entries()):
        return S1
    return S1 * _block_diagonal(zero_diagonal_similarity(trailing, bound))


def shoda_pair(X: ExactMatrix) -> Tuple[ExactMatrix, ExactMatrix]:
    """Matrices (P, Q) with PQ - QP = X for a trace-zero X."""
    S = zero_diagonal_similarity(X)
    S_inverse = S.inverse()
    Y = S_inverse * X * S
    m = X.nrows
    field = X.field
    P_prime = ExactMatrix.diagonal(list(range(1, m + 1)), field)
    Q_prime = ExactMatrix.from_rows(
        [[Y[r, s] / (r - s) if r != s else field.zero() for s in range(m)] for r in range(m)],
        field,
    )
    return S * P_prime * S_inverse, S * Q_prime * S_inverse


@requires_kind(AlgebraKind.MATRIX_OVER_FIELD)
def shoda_commutator(X: AlgebraElement) -> Tuple[AlgebraElement, AlgebraElement]:
    """(P, Q) with [P, Q] = X for a nonzero trace-zero X in M_m(Q)."""
    if X.is_zero():
        raise ZeroElement("0 = [1, 1] needs no construction")
    P, Q = shoda_pair(to_matrix(X))
    return from_matrix(X.algebra, P), from_matrix(X.algebra, Q)


@dataclass(frozen=True)
class TraceZeroPair:
    """a = g * h with trace(g) = trace(h) = 0 and g invertible.

    Attributes:
        g: Left factor.
        h: Right factor, g^-1 a.
        stage: Which search stage found g.
        retries_used: Random conjugations tried.
    """

    g: ExactMatrix
    h: ExactMatrix
    stage: str
    retries_used: int = 0


def _cyclic_shift(m: int, power: int = 1, field=QQ) -> ExactMatrix:
    return ExactMatrix.from_rows(
        [[1 if c == (r + power) % m else 0 for c in range(m)] for r in range(m)], field
    )


def pair_catalog(m: int, field=QQ) -> List[ExactMatrix]:
    """Invertible trace-zero matrices tried before any search."""
    C = _cyclic_shift(m, 1, field)
    candidates = [
        C,
        ExactMatrix.diagonal([1] * (m - 1) + [1 - m], field),
        ExactMatrix.diagonal([1 - m] + [1] * (m - 1), field),
        C * ExactMatrix.diagonal([-1] + [1] * (m - 1), field),
    ]
    candidates.extend(_cyclic_shift(m, k, field) for k in range(2, m))
    candidates.append(C.transpose())
    candidates.append(ExactMatrix.diagonal([(-1) ** r for r in range(m)], field))
    catalog = []
    for g in candidates:
        if g.trace() or not g.det() or g in catalog:
            continue
        catalog.append(g)
    return catalog


def _monomial_factor(a: ExactMatrix) -> Optional[ExactMatrix]:
    """g = C^k D with trace(g^-1 a) = 0, or None.

    For g = C^k D the trace of g^-1 a is sum_i e_i a[i-k, i] with e_i = 1/d_i,
    a linear condition on the e_i that must be met with every e_i nonzero.
    """
    m = a.nrows
    field = a.field
    for power in range(1, m):
        coefficients = [a[(i - power) % m, i] for i in range(m)]
        support = [i for i in range(m) if coefficients[i]]
        if len(support) == 1:
            continue
        e = [field.one()] * m
        if support:
            for i in support[:-1]:
                e[i] = field.one() / coefficients[i]
            last = support[-1]
            e[last] = field.coerce(1 - len(support)) / coefficients[last]
        g = _cyclic_shift(m, power, field) * ExactMatrix.diagonal(
            [field.one() / x for x in e], field
        )
        return g
    return None


def _to_sympy(M: ExactMatrix) -> sympy.Matrix:
    return sympy.Matrix(
        [[sympy.Rational(x.numerator, x.denominator) for x in row] for row in M.rows]
    )


def _line_search(a: ExactMatrix, catalog: List[ExactMatrix]) -> Optional[ExactMatrix]:
    """g = g0 + t g1 with trace(adj(g) a) = 0 and det(g) != 0, t rational."""
    t = sympy.Symbol("t")
    A = _to_sympy(a)
    for g0, g1 in itertools.permutations(catalog[:4], 2):
        G = _to_sympy(g0) + t * _to_sympy(g1)
        poly = sympy.Poly((G.adjugate() * A).trace(), t, domain="QQ")
        if poly.is_zero:
            roots = list(range(4))
        else:
            roots = sorted(poly.ground_roots().keys())
        for root in roots:
            value = sympy.Rational(root)
            shift = Fraction(int(value.p), int(value.q))
            g = g0 + g1.scale(shift)
            if g.det():
                logging.debug(f"{a.rows} - (Trace Zero Pair) - line search hit at t = {shift}")
                return g
    return None


def trace_zero_pair_factorization(
    a: ExactMatrix,
    seed: Optional[int] = None,
    max_retries: Optional[int] = None,
    height: Optional[int] = None,
) -> TraceZeroPair:
    """Factor a nonzero square matrix over Q as g * h with both factors trace zero.

    Parameters:
        a: The matrix, at least 2 x 2.
        seed: Seed of the random conjugation stage.
        max_retries: Random conjugations allowed before giving up.
        height: Entry height of the random conjugators.
    """
    if not a.is_square or a.nrows < 2:
        raise DimensionError(f"need a square matrix of size >= 2, got {a.shape}")
    if a.is_zero():
        raise ZeroElement("0 is handled by decompose")
    if a.field != QQ:
        raise DescriptorError(f"pair factorization runs over Q, not {a.field}")
    settings = CommutatorSettings()
    if max_retries is None:
        max_retries = settings.pair_factorization_retries
    if height is None:
        height = settings.random_height
    m = a.nrows

    catalog = pair_catalog(m, a.field)
    for g in catalog:
        g_inverse = g.inverse()
        if not (g_inverse * a).trace():
            logging.debug(f"{a.rows} - (Trace Zero Pair) - catalog hit {g.rows}")
            return TraceZeroPair(g=g, h=g_inverse * a, stage="catalog")

    g = _monomial_factor(a)
    if g is not None:
        return TraceZeroPair(g=g, h=g.inverse() * a, stage="monomial")

    g = _line_search(a, catalog)
    if g is not None:
        return TraceZeroPair(g=g, h=g.inverse() * a, stage="line_search")

    rng = random.Random(seed if seed is not None else 0)
    transcript = []
    for attempt in range(1, max_retries + 1):
        S = random_matrix(rng, m, m, a.field, height)
        if not S.det():
            transcript.append(f"attempt {attempt}: singular conjugator")
            continue
        S_inverse = S.inverse()
        g_prime = _monomial_factor(S * a * S_inverse)
        if g_prime is None:
            transcript.append(f"attempt {attempt}: no monomial factor")
            continue
        g = S_inverse * g_prime * S
        logging.debug(f"{a.rows} - (Trace Zero Pair) - random conjugation succeeded after {attempt} attempts")
        return TraceZeroPair(g=g, h=g.inverse() * a, stage="random", retries_used=attempt)
    raise SearchExhausted(
        f"no trace-zero factorization after {max_retries} random conjugations",
        transcript=transcript,
    )


@requires_kind(AlgebraKind.MATRIX_OVER_FIELD)
def matrix_field_two_commutators(
    a: AlgebraElement,
    seed: Optional[int] = None,
    max_retries: Optional[int] = None,
) -> CommutatorCertificate:
    """Certificate a = [P1, Q1] [P2, Q2] for a nonzero a in M_m(Q), m >= 2."""
    pair = trace_zero_pair_factorization(to_matrix(a), seed=seed, max_retries=max_retries)
    P1, Q1 = shoda_pair(pair.g)
    P2, Q2 = shoda_pair(pair.h)
    algebra = a.algebra
    certificate = CommutatorCertificate(
        a=a,
        b=from_matrix(algebra, P1),
        c=from_matrix(algebra, Q1),
        d=from_matrix(algebra, P2),
        e=from_matrix(algebra, Q2),
        path=CertificatePath.MATRIX_OVER_FIELD_CASE,
        retries_used=pair.retries_used,
        transcript=[f"pair factorization stage: {pair.stage}"],
    )
    return certificate.certify()
