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

import time
import unittest

from pycommutator.algebra import (
    HAMILTON,
    AlgebraElement,
    matrix_algebra,
    quaternion_algebra,
    quaternion_matrix_algebra,
)
from pycommutator.errors import DescriptorError, IsAField, TooLarge
from pycommutator.oracle import (
    DEFAULT_KINDS,
    commutator_coords,
    cross_check,
    enumerate_products,
    prime_matrix_algebra,
    product_coords,
    quaternion_product,
    verify_certificate,
    verify_two_commutators,
)
from pycommutator.settings import CommutatorSettings


class IndependentMultiplierTest(unittest.TestCase):
    def test_quaternion_product(self):
        self.assertEqual(quaternion_product((0, 1, 0, 0), (0, 0, 1, 0), -1, -1), (0, 0, 0, 1))
        self.assertEqual(quaternion_product((0, 1, 0, 0), (0, 1, 0, 0), -2, -5), (-2, 0, 0, 0))
        self.assertEqual(quaternion_product((0, 0, 1, 0), (0, 0, 1, 0), -2, -5), (-5, 0, 0, 0))

    def test_matrix_product(self):
        M2 = matrix_algebra(2)
        self.assertEqual(tuple(product_coords(M2, (0, 1, 0, 0), (0, 0, 1, 0))), (1, 0, 0, 0))
        self.assertEqual(tuple(commutator_coords(M2, (0, 1, 0, 0), (0, 0, 1, 0))), (1, 0, 0, -1))

    def test_verify_two_commutators(self):
        D = quaternion_algebra(-1, -1)
        one, i, j, k = (AlgebraElement.basis(D, q) for q in range(4))
        # [i, j] [j, k] = (2k)(2i) = 4j
        self.assertTrue(verify_two_commutators(j.scale(4), i, j, j, k))
        self.assertFalse(verify_two_commutators(j, i, j, j, k))
        self.assertTrue(verify_two_commutators(AlgebraElement.zero(D), one, i, j, k))

    def test_unreadable_certificate(self):
        with self.assertLogs(level="WARNING"):
            self.assertFalse(verify_certificate(object()))


class EnumerationTest(unittest.TestCase):
    def test_two_by_two_over_f2(self):
        start = time.perf_counter()
        report = enumerate_products(prime_matrix_algebra(2, 2))
        self.assertLess(time.perf_counter() - start, 1.0)
        self.assertEqual(report.total, 16)
        self.assertEqual(report.commutator_set_size, 8)
        self.assertTrue(report.covers_all)
        self.assertEqual(report.missing, ())

    def test_two_by_two_over_f3(self):
        start = time.perf_counter()
        report = enumerate_products(prime_matrix_algebra(3, 2))
        self.assertLess(time.perf_counter() - start, 10.0)
        self.assertEqual(report.total, 81)
        self.assertEqual(report.commutator_set_size, 27)
        self.assertEqual(report.trace_zero_count, 27)
        self.assertTrue(report.commutators_are_trace_zero)
        self.assertTrue(report.covers_all)
        self.assertEqual(report.product_set_size, report.total)
        data = report.as_dict()
        self.assertEqual(data["algebra"]["field"], "Fp:3")
        self.assertEqual(data["missing"], [])

    def test_refusals(self):
        with self.assertRaises(IsAField):
            enumerate_products(prime_matrix_algebra(5, 1))
        with self.assertRaises(DescriptorError):
            enumerate_products(matrix_algebra(2))
        with self.assertRaises(DescriptorError):
            enumerate_products(HAMILTON)

    def test_size_limit(self):
        settings = CommutatorSettings()
        previous = settings.oracle_max_elements
        settings.oracle_max_elements = 100
        try:
            with self.assertRaises(TooLarge):
                enumerate_products(prime_matrix_algebra(5, 2))
        finally:
            settings.oracle_max_elements = previous


class CrossCheckTest(unittest.TestCase):
    def test_small_run(self):
        kinds = [HAMILTON, matrix_algebra(2)]
        report = cross_check(seed=1, trials=3, kinds=kinds, height=5, threads=2)
        self.assertTrue(report.all_verified)
        self.assertEqual(set(report.kinds), {str(HAMILTON), str(matrix_algebra(2))})
        for name, summary in report.kinds.items():
            with self.subTest(msg=f"Cross-check summary for {name}", name=name):
                self.assertEqual(summary.trials, 3)
                self.assertEqual(summary.verified, 3)
                self.assertEqual(summary.failures, [])

    def test_seeded_runs_repeat(self):
        kinds = [matrix_algebra(3)]
        first = cross_check(seed=7, trials=2, kinds=kinds, threads=1)
        second = cross_check(seed=7, trials=2, kinds=kinds, threads=2)
        self.assertEqual(first.as_dict(), second.as_dict())

    def test_fields_are_reported(self):
        report = cross_check(seed=0, trials=1, kinds=[matrix_algebra(1)], threads=1)
        self.assertFalse(report.all_verified)
        self.assertIn("IsAField", report.kinds[str(matrix_algebra(1))].failures[0])

    def test_hundred_per_kind(self):
        settings = CommutatorSettings()
        caps = {
            str(HAMILTON): 0,
            str(matrix_algebra(2)): settings.pair_factorization_retries,
            str(matrix_algebra(3)): settings.pair_factorization_retries,
            str(quaternion_matrix_algebra(2)): 2 * settings.ar_conjugation_retries,
        }
        report = cross_check(seed=0, trials=100)
        self.assertTrue(report.all_verified)
        self.assertEqual(set(report.kinds), {str(algebra) for algebra in DEFAULT_KINDS})
        for name, summary in report.kinds.items():
            with self.subTest(msg=f"Cross checking {name}", name=name):
                self.assertEqual(summary.trials, 100)
                self.assertEqual(summary.verified, 100)
                self.assertEqual(summary.failures, [])
                self.assertLessEqual(summary.max_retries, caps[name])

    def test_dispatcher_is_total(self):
        # 250 per kind over the four default kinds
        report = cross_check(seed=1, trials=250)
        self.assertEqual(sum(s.trials for s in report.kinds.values()), 1000)
        for name, summary in report.kinds.items():
            with self.subTest(msg=f"Dispatching random elements of {name}", name=name):
                self.assertEqual(summary.failures, [])
                self.assertEqual(summary.verified, summary.trials)


if __name__ == "__main__":
    unittest.main()
