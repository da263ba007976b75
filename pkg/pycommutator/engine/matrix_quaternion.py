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
from typing import Iterator, List, Optional, Tuple

from pycommutator.algebra import (
    AlgebraElement,
    AlgebraKind,
    LinearFunctional,
    ad_operator,
    commutator,
    entry,
    from_entries,
    inverse,
    is_central,
    is_invertible,
    left_multiplication,
    multiply,
    quaternion_algebra,
    quaternion_norm,
    random_element,
    reduced_trace,
    right_multiplication,
)
from pycommutator.engine.certificate import CertificatePath, CommutatorCertificate
from pycommutator.engine.division import anticommuting_pure, division_two_commutators
from pycommutator.errors import DescriptorError, SearchExhausted, ZeroElement
from pycommutator.hyperplane import hyperplane_factorize, kronecker_component
from pycommutator.linear import ExactMatrix, solve_linear
from pycommutator.misc import requires_kind
from pycommutator.settings import CommutatorSettings


@requires_kind(AlgebraKind.QUATERNION)
def sylvester_solve(p: AlgebraElement, q: AlgebraElement, c: AlgebraElement) -> Optional[AlgebraElement]:
    """x with p x - x q = c, or None when c is outside the image."""
    operator = left_multiplication(p) - right_multiplication(q)
    solution = solve_linear(operator, c.coords)
    if solution is None:
        return None
    return AlgebraElement(p.algebra, solution)


def _real_part(x: AlgebraElement):
    return x.coords[0]


def _elementary(algebra, r: int, s: int, c: AlgebraElement) -> AlgebraElement:
    """I + c e_rs."""
    D = algebra.division_algebra
    one, zero = AlgebraElement.one(D), AlgebraElement.zero(D)
    entries = [[one if i == j else zero for j in range(algebra.m)] for i in range(algebra.m)]
    entries[r][s] = c
    return from_entries(algebra, entries)


def _push_real_parts(X: AlgebraElement) -> Optional[AlgebraElement]:
    """Conjugator E with E X E^-1 pure on the diagonal, by elementary steps only.

    Conjugating by I + c e_rs (r != s) moves c X_sr onto the (r, r) entry and
    -X_sr c onto the (s, s) entry, leaving every other diagonal entry alone.
    """
    algebra = X.algebra
    m = algebra.m
    E = AlgebraElement.one(algebra)
    current = X
    for r in range(m - 1):
        x_rr = entry(current, r, r)
        real = _real_part(x_rr)
        if not real:
            continue
        step = None
        for s in range(r + 1, m):
            below = entry(current, s, r)
            if not below.is_zero():
                c = inverse(below).scale(-real)
                step, step_inverse = _elementary(algebra, r, s, c), _elementary(algebra, r, s, -c)
                break
            above = entry(current, r, s)
            if not above.is_zero():
                c = inverse(above).scale(real)
                step, step_inverse = _elementary(algebra, s, r, c), _elementary(algebra, s, r, -c)
                break
        if step is None:
            return None
        current = multiply(multiply(step, current), step_inverse)
        E = multiply(step, E)
    return E


def _preconditioners(algebra, rng: random.Random, height: int) -> Iterator[Tuple[str, AlgebraElement]]:
    yield "identity", AlgebraElement.one(algebra)
    D = algebra.division_algebra
    for r, s in itertools.permutations(range(algebra.m), 2):
        for q in range(4):
            unit = AlgebraElement.basis(D, q)
            yield f"I + e{r + 1}{s + 1}*{D.basis_label(q)}", _elementary(algebra, r, s, unit)
    while True:
        yield "random", random_element(algebra, rng, height)


def _distinct_norm_pures(diagonal: List[AlgebraElement]) -> List[AlgebraElement]:
    """p_r anticommuting with the r-th entry, scaled until all norms differ."""
    chosen = []
    norms = []
    for x in diagonal:
        base = anticommuting_pure(x)
        scale = 1
        while quaternion_norm(base) * scale * scale in norms:
            scale += 1
        chosen.append(base.scale(scale))
        norms.append(quaternion_norm(base) * scale * scale)
    return chosen


def ar_commutator(
    X: AlgebraElement,
    seed: Optional[int] = None,
    max_retries: Optional[int] = None,
) -> Tuple[AlgebraElement, AlgebraElement, int]:
    """(P, Q, retries) with [P, Q] = X for X in M_m(D) of reduced trace zero.

    Parameters:
        X: Noncentral element of reduced trace zero.
        seed: Seed of the random preconditioners.
        max_retries: Preconditioners tried before giving up.
    """
    algebra = X.algebra
    if algebra.kind != AlgebraKind.MATRIX_OVER_QUATERNION:
        raise DescriptorError(f"ar_commutator works in M_m(D), got {algebra}")
    if X.is_zero():
        raise ZeroElement("0 = [1, 1] needs no construction")
    if reduced_trace(X):
        raise DescriptorError(f"{X} has reduced trace {reduced_trace(X)}")
    # nonzero with reduced trace zero is never central over Q
    assert not is_central(X), f"{X} is central"
    settings = CommutatorSettings()
    if max_retries is None:
        max_retries = settings.ar_conjugation_retries
    rng = random.Random(seed if seed is not None else 0)
    m = algebra.m

    transcript = []
    S = None
    attempts = 0
    for attempts, (label, S0) in enumerate(
        itertools.islice(_preconditioners(algebra, rng, settings.random_height), max_retries)
    ):
        if not is_invertible(S0):
            transcript.append(f"{label}: singular")
            continue
        E = _push_real_parts(multiply(multiply(S0, X), inverse(S0)))
        if E is None:
            transcript.append(f"{label}: no elementary push")
            continue
        S = multiply(E, S0)
        logging.debug(f"{X} - (AR Commutator) - preconditioner {label} after {attempts} retries")
        break
    if S is None:
        raise SearchExhausted(
            f"no conjugation to a pure diagonal within {max_retries} attempts",
            transcript=transcript,
        )

    S_inverse = inverse(S)
    X_prime = multiply(multiply(S, X), S_inverse)
    diagonal = [entry(X_prime, r, r) for r in range(m)]
    pures = _distinct_norm_pures(diagonal)

    D = algebra.division_algebra
    Q_entries = [[AlgebraElement.zero(D) for _ in range(m)] for _ in range(m)]
    for r in range(m):
        solution = solve_linear(ad_operator(pures[r]), diagonal[r].coords)
        assert solution is not None, f"{diagonal[r]} not in the image of ad_{pures[r]}"
        Q_entries[r][r] = AlgebraElement(D, solution)
        for s in range(m):
            if r == s:
                continue
            x = sylvester_solve(pures[r], pures[s], entry(X_prime, r, s))
            # distinct norms make p_r and p_s non-similar, so x -> p_r x - x p_s is bijective
            assert x is not None, f"Sylvester equation for ({r}, {s}) is singular"
            Q_entries[r][s] = x
    zero = AlgebraElement.zero(D)
    P_prime = from_entries(
        algebra, [[pures[r] if r == s else zero for s in range(m)] for r in range(m)]
    )
    Q_prime = from_entries(algebra, Q_entries)

    P = multiply(multiply(S_inverse, P_prime), S)
    Q = multiply(multiply(S_inverse, Q_prime), S)
    assert commutator(P, Q) == X, "conjugated commutator does not reproduce X"
    return P, Q, attempts


def t_catalog(m: int, field) -> Iterator[Tuple[int, ExactMatrix]]:
    """(lambda, I + lambda e_12) for lambda = 1, 2, 3, ..."""
    identity = ExactMatrix.identity(m, field)
    for shift in itertools.count(1):
        yield shift, identity + ExactMatrix.unit(m, 0, 1, field).scale(shift)


def _single_block(a: AlgebraElement) -> CommutatorCertificate:
    # M_1(a, b) and (a, b) share the coordinate layout 1, i, j, k
    algebra = a.algebra
    D = quaternion_algebra(algebra.a, algebra.b)
    division, _ = division_two_commutators(AlgebraElement(D, a.coords))
    logging.debug(f"{a} - (Matrix Quaternion) - m = 1, using the division construction")
    lift = {key: AlgebraElement(algebra, getattr(division, key).coords) for key in "bcde"}
    certificate = CommutatorCertificate(
        a=a,
        path=CertificatePath.DIVISION_CASE,
        retries_used=division.retries_used,
        transcript=["m = 1: division construction in D"],
        **lift,
    )
    return certificate.certify()


@requires_kind(AlgebraKind.MATRIX_OVER_QUATERNION)
def matrix_quaternion_two_commutators(
    a: AlgebraElement,
    seed: Optional[int] = None,
    max_retries: Optional[int] = None,
) -> CommutatorCertificate:
    """Certificate a = [P1, Q1] [P2, Q2] for a nonzero a in M_m(D).

    M_1(D) is D itself; such elements go through the division construction.
    """
    if a.is_zero():
        raise ZeroElement("the zero element is handled by decompose")
    algebra = a.algebra
    if algebra.m == 1:
        return _single_block(a)
    transcript = []
    for shift, t in t_catalog(algebra.m, algebra.base_field):
        if kronecker_component(a, t) is None:
            break
        transcript.append(f"skipped t = I + {shift} e12: a lies in t (x) D")
        logging.debug(f"{a} - (Matrix Quaternion) - a in t (x) D for t = I + {shift} e12, skipping")

    factorization = hyperplane_factorize(a, LinearFunctional.reduced_trace(algebra), t)
    h1, h2 = factorization.h1, factorization.h2
    assert not is_central(h1) and not is_central(h2), "hyperplane factors must be noncentral"
    P1, Q1, retries1 = ar_commutator(h1, seed=seed, max_retries=max_retries)
    P2, Q2, retries2 = ar_commutator(h2, seed=seed, max_retries=max_retries)
    transcript.append(f"t = I + {shift} e12")
    certificate = CommutatorCertificate(
        a=a,
        b=P1,
        c=Q1,
        d=P2,
        e=Q2,
        path=CertificatePath.MATRIX_OVER_QUATERNION_CASE,
        retries_used=retries1 + retries2,
        transcript=transcript,
    )
    return certificate.certify()
