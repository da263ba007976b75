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

from pycommutator.algebra import (
    HAMILTON,
    AlgebraElement,
    LinearFunctional,
    default_maximal_subfield,
    kronecker_embed,
    matrix_algebra,
    multiply,
    quaternion_matrix_algebra,
    random_element,
    reduced_trace,
)
from pycommutator.errors import DescriptorError, ZeroElement
from pycommutator.hyperplane import find_d0, hyperplane_factorize, kronecker_component
from pycommutator.linear import ExactMatrix


def shear(m: int, shift: int = 1) -> ExactMatrix:
    return ExactMatrix.identity(m) + ExactMatrix.unit(m, 0, 1).scale(shift)


class HyperplaneTest(unittest.TestCase):
    def test_central_quaternion(self):
        a = AlgebraElement.scalar(HAMILTON, 2)
        tau = LinearFunctional.reduced_trace(HAMILTON)
        factorization = hyperplane_factorize(a, tau, ExactMatrix.identity(1))
        j = AlgebraElement.basis(HAMILTON, 2)
        self.assertEqual(factorization.d0, j)
        self.assertEqual(factorization.k0, AlgebraElement.one(HAMILTON))
        self.assertEqual(factorization.h1, j.scale(-2))
        self.assertEqual(factorization.h2, j)
        self.assertTrue(factorization.verify())

    def test_random_quaternion_matrices(self):
        rng = random.Random(7)
        A = quaternion_matrix_algebra(2)
        tau = LinearFunctional.reduced_trace(A)
        t = shear(2)
        for n in range(100):
            a = random_element(A, rng, 10)
            with self.subTest(msg=f"Hyperplane factorization of random element {n}", a=a):
                factorization = hyperplane_factorize(a, tau, t)
                self.assertEqual(multiply(factorization.h1, factorization.h2), a)
                self.assertEqual(reduced_trace(factorization.h1), 0)
                self.assertEqual(reduced_trace(factorization.h2), 0)
                self.assertTrue(all(factorization.checks().values()))

    def test_three_by_three(self):
        A = quaternion_matrix_algebra(3)
        a = random_element(A, random.Random(11), 5)
        factorization = hyperplane_factorize(a, LinearFunctional.reduced_trace(A), shear(3, 2))
        self.assertTrue(factorization.verify())

    def test_d0_annihilates_subfield(self):
        A = quaternion_matrix_algebra(2)
        tau = LinearFunctional.reduced_trace(A)
        K = default_maximal_subfield(A)
        t = shear(2)
        d0 = find_d0(tau, t, K)
        self.assertFalse(d0.is_zero())
        for k in K.elements:
            with self.subTest(msg=f"tau(t (x) k d0) for k = {k}", k=k):
                self.assertEqual(tau(kronecker_embed(t, multiply(k, d0))), 0)

    def test_kronecker_component(self):
        t = shear(2)
        k = AlgebraElement.basis(HAMILTON, 3)
        self.assertEqual(kronecker_component(kronecker_embed(t, k), t), k)
        e12 = AlgebraElement.basis(quaternion_matrix_algebra(2), 4)
        self.assertIsNone(kronecker_component(e12, t))

    def test_refusals(self):
        A = quaternion_matrix_algebra(2)
        tau = LinearFunctional.reduced_trace(A)
        with self.assertRaises(ZeroElement):
            hyperplane_factorize(AlgebraElement.zero(A), tau, shear(2))
        with self.assertRaises(DescriptorError):
            hyperplane_factorize(AlgebraElement.one(HAMILTON), tau, shear(2))
        M2 = matrix_algebra(2)
        with self.assertRaises(DescriptorError):
            find_d0(LinearFunctional.reduced_trace(M2), shear(2), default_maximal_subfield(A))

    def test_document(self):
        a = AlgebraElement.scalar(HAMILTON, 2)
        factorization = hyperplane_factorize(a, LinearFunctional.reduced_trace(HAMILTON), ExactMatrix.identity(1))
        data = factorization.as_dict()
        self.assertEqual(data["tau"], ["2", "0", "0", "0"])
        self.assertEqual(data["d"], AlgebraElement.basis(HAMILTON, 2).as_dict())
        self.assertTrue(all(data["checks"].values()))


if __name__ == "__main__":
    unittest.main()
