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

import random
import unittest
from dataclasses import replace

from pycommutator.algebra import (
    HAMILTON,
    AlgebraElement,
    commutator,
    matrix_algebra,
    multiply,
    quaternion_algebra,
    quaternion_matrix_algebra,
    random_element,
    reduced_trace,
)
from pycommutator.engine import (
    CertificatePath,
    CommutatorCertificate,
    anticommuting_pure,
    ar_commutator,
    decompose,
    division_two_commutators,
    pair_catalog,
    pure_quaternion_commutator,
    shoda_pair,
    trace_zero_pair_factorization,
    zero_diagonal_similarity,
)
from pycommutator.errors import DescriptorError, IsAField, SchemaError, ZeroElement
from pycommutator.linear import GF, QQ, ExactMatrix, random_matrix
from pycommutator.oracle import verify_certificate


def trace_zero_matrix(rng: random.Random, m: int) -> ExactMatrix:
    M = random_matrix(rng, m, m, QQ, 5)
    return M - ExactMatrix.unit(m, m - 1, m - 1).scale(M.trace())


class DivisionTest(unittest.TestCase):
    def test_unit_i(self):
        i = AlgebraElement.basis(HAMILTON, 1)
        certificate, trace = division_two_commutators(i)
        self.assertEqual(trace.u, i)
        self.assertEqual(trace.v, AlgebraElement.basis(HAMILTON, 2))
        self.assertEqual(commutator(trace.u, trace.v), AlgebraElement.basis(HAMILTON, 3).scale(2))
        self.assertEqual(trace.lambda_, 0)
        self.assertEqual(trace.branch, "lambda_zero")
        self.assertEqual(certificate.retries_used, 0)
        self.assertTrue(all(trace.checks().values()))
        self.assertTrue(certificate.verified)
        self.assertEqual(certificate.path, CertificatePath.DIVISION_CASE)

    def test_random_quaternions(self):
        rng = random.Random(5)
        for D in [HAMILTON, quaternion_algebra(-1, -3), quaternion_algebra(-2, -5)]:
            for n in range(5):
                d = random_element(D, rng, 10)
                if d.is_zero():
                    continue
                with self.subTest(msg=f"Division construction in {D}, element {n}", d=d):
                    certificate, trace = division_two_commutators(d)
                    self.assertTrue(certificate.verified)
                    self.assertTrue(all(trace.checks().values()))

    def test_central_quaternion(self):
        certificate, trace = division_two_commutators(AlgebraElement.scalar(HAMILTON, 3))
        self.assertEqual(trace.u, AlgebraElement.basis(HAMILTON, 1))
        self.assertTrue(certificate.verified)

    def test_pure_commutators(self):
        i = AlgebraElement.basis(HAMILTON, 1)
        self.assertEqual(anticommuting_pure(i), AlgebraElement.basis(HAMILTON, 2))
        for q in [i, AlgebraElement.from_coords(HAMILTON, [0, 1, 2, 3])]:
            with self.subTest(msg=f"Commutator witnesses for {q}", q=q):
                x, y = pure_quaternion_commutator(q)
                self.assertEqual(commutator(x, y), q)
        with self.assertRaises(DescriptorError):
            pure_quaternion_commutator(AlgebraElement.one(HAMILTON))
        with self.assertRaises(ZeroElement):
            division_two_commutators(AlgebraElement.zero(HAMILTON))


class MatrixFieldTest(unittest.TestCase):
    def test_shoda_pair(self):
        X = ExactMatrix.diagonal([1, -1])
        P, Q = shoda_pair(X)
        self.assertEqual(P * Q - Q * P, X)

    def test_random_shoda_pairs(self):
        rng = random.Random(2)
        for m in (2, 3, 4):
            X = trace_zero_matrix(rng, m)
            with self.subTest(msg=f"Shoda pair for a {m} x {m} matrix", X=X.rows):
                S = zero_diagonal_similarity(X)
                self.assertFalse(any((S.inverse() * X * S).diagonal_entries()))
                P, Q = shoda_pair(X)
                self.assertEqual(P * Q - Q * P, X)

    def test_shoda_rejects_nonzero_trace(self):
        with self.assertRaises(DescriptorError):
            shoda_pair(ExactMatrix.identity(2))

    def test_pair_catalog(self):
        for m in (2, 3, 5):
            with self.subTest(msg=f"Catalog for m = {m}", m=m):
                catalog = pair_catalog(m)
                self.assertTrue(catalog)
                for g in catalog:
                    self.assertEqual(g.trace(), 0)
                    self.assertNotEqual(g.det(), 0)

    def test_trace_zero_pairs(self):
        rng = random.Random(4)
        cases = [ExactMatrix.identity(2), ExactMatrix.identity(3).scale(5), ExactMatrix.diagonal([1, 2, 3])]
        cases.extend(random_matrix(rng, m, m, QQ, 8) for m in (2, 3, 4))
        for a in cases:
            if a.is_zero():
                continue
            with self.subTest(msg=f"Trace-zero pair for {a.rows}", a=a.rows):
                pair = trace_zero_pair_factorization(a, seed=0)
                self.assertEqual(pair.g * pair.h, a)
                self.assertEqual(pair.g.trace(), 0)
                self.assertEqual(pair.h.trace(), 0)

    def test_identity_hits_catalog(self):
        pair = trace_zero_pair_factorization(ExactMatrix.identity(2))
        self.assertEqual(pair.stage, "catalog")
        self.assertEqual(pair.retries_used, 0)
        with self.assertRaises(ZeroElement):
            trace_zero_pair_factorization(ExactMatrix.zeros(2, 2))


class MatrixQuaternionTest(unittest.TestCase):
    def test_ar_commutator(self):
        A = quaternion_matrix_algebra(2)
        rng = random.Random(8)
        for n in range(3):
            x = random_element(A, rng, 5)
            X = x - AlgebraElement.basis(A, A.index(1, 1)).scale(reduced_trace(x) / 2)
            self.assertEqual(reduced_trace(X), 0)
            with self.subTest(msg=f"AR commutator for random element {n}", X=X):
                P, Q, _ = ar_commutator(X, seed=n)
                self.assertEqual(commutator(P, Q), X)

    def test_ar_commutator_refusals(self):
        A = quaternion_matrix_algebra(2)
        with self.assertRaises(DescriptorError):
            ar_commutator(AlgebraElement.one(A))
        with self.assertRaises(ZeroElement):
            ar_commutator(AlgebraElement.zero(A))


class DecomposeTest(unittest.TestCase):
    def test_decompose_random_elements(self):
        rng = random.Random(0)
        algebras = [HAMILTON, matrix_algebra(2), matrix_algebra(3), quaternion_matrix_algebra(2)]
        for algebra in algebras:
            for n in range(3):
                a = random_element(algebra, rng, 6)
                with self.subTest(msg=f"Decomposing a random element of {algebra}", a=a):
                    certificate = decompose(a, seed=n)
                    self.assertTrue(certificate.verified)
                    self.assertEqual(multiply(certificate.left, certificate.right), a)

    def test_single_block_quaternion_matrices(self):
        rng = random.Random(5)
        for algebra in [quaternion_matrix_algebra(1), quaternion_matrix_algebra(1, -2, -5)]:
            samples = [AlgebraElement.basis(algebra, q) for q in range(4)]
            samples += [random_element(algebra, rng, 6) for _ in range(10)]
            for a in samples:
                if a.is_zero():
                    continue
                with self.subTest(msg=f"Decomposing an element of {algebra}", a=a):
                    certificate = decompose(a)
                    self.assertTrue(certificate.verified)
                    self.assertEqual(certificate.path, CertificatePath.DIVISION_CASE)
                    self.assertEqual(certificate.b.algebra, algebra)
                    self.assertEqual(multiply(certificate.left, certificate.right), a)

    def test_decompose_scalars(self):
        for algebra in [HAMILTON, matrix_algebra(2), quaternion_matrix_algebra(2)]:
            a = AlgebraElement.scalar(algebra, 7)
            with self.subTest(msg=f"Decomposing 7 in {algebra}", algebra=algebra):
                self.assertTrue(decompose(a).verified)

    def test_trivial_zero(self):
        for algebra in [HAMILTON, matrix_algebra(3), quaternion_matrix_algebra(2)]:
            with self.subTest(msg=f"Decomposing 0 in {algebra}", algebra=algebra):
                certificate = decompose(AlgebraElement.zero(algebra))
                self.assertEqual(certificate.path, CertificatePath.TRIVIAL_ZERO)
                self.assertTrue(certificate.verified)

    def test_refusals(self):
        with self.assertRaises(IsAField):
            decompose(AlgebraElement.one(matrix_algebra(1)))
        with self.assertRaises(DescriptorError):
            decompose(AlgebraElement.one(matrix_algebra(2, GF(3))))

    def test_seeded_runs_repeat(self):
        a = random_element(quaternion_matrix_algebra(2), random.Random(9), 6)
        self.assertEqual(decompose(a, seed=3).as_dict(), decompose(a, seed=3).as_dict())


class CertificateTest(unittest.TestCase):
    def test_tampered_certificate(self):
        a = random_element(matrix_algebra(2), random.Random(1), 6)
        certificate = decompose(a)
        tampered = replace(certificate, b=certificate.c, verified=False)
        self.assertFalse(verify_certificate(tampered))
        self.assertFalse(tampered.certify().verified)

    def test_document_round_trip(self):
        a = AlgebraElement.from_coords(HAMILTON, [1, 2, 3, 4])
        certificate = decompose(a)
        data = certificate.as_dict()
        self.assertIn("division_trace", data)
        restored = CommutatorCertificate.from_dict(data)
        self.assertFalse(restored.verified)
        self.assertTrue(restored.verify())
        self.assertEqual(restored.path, CertificatePath.DIVISION_CASE)

    def test_transcript_round_trip(self):
        a = random_element(quaternion_matrix_algebra(2), random.Random(4), 6)
        certificate = decompose(a, seed=0)
        self.assertTrue(certificate.transcript)
        data = certificate.as_dict()
        self.assertEqual(data["transcript"], list(certificate.transcript))
        restored = CommutatorCertificate.from_dict(data)
        self.assertEqual(list(restored.transcript), list(certificate.transcript))
        self.assertTrue(restored.verify())

    def test_malformed_transcript(self):
        data = decompose(AlgebraElement.from_coords(HAMILTON, [1, 2, 3, 4])).as_dict()
        for transcript in ["t = I + 1 e12", [1, 2], {"line": "x"}]:
            with self.subTest(msg=f"Reading transcript {transcript!r}", transcript=transcript):
                with self.assertRaises(SchemaError) as caught:
                    CommutatorCertificate.from_dict({**data, "transcript": transcript})
                self.assertEqual(caught.exception.path, "$.transcript")


if __name__ == "__main__":
    unittest.main()
