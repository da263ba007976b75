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
import math
import random
import unittest
from dataclasses import replace
from fractions import Fraction
from unittest.mock import patch

from pycommutator.errors import DimensionError, NotOnSphere, SchemaError, TooLarge
from pycommutator.euler import (
    BundleSpec,
    Conclusion,
    EulerCertificate,
    PointSchedule,
    SpherePoint,
    SquareFreePolynomial,
    VilladsenPlan,
    bott_eval,
    certify_cm_failure,
    certify_subequivalence_obstruction,
    dense_point,
    dense_point_schedule,
    euler_class_of_tensor,
    euler_direct_sum_power,
    euler_witness,
    first_stage_realizing,
    is_projection,
    minimal_sphere_counts,
    slot_indices,
    spread,
    tensor_projection_eval,
    unpair,
    villadsen_plan,
)
from pycommutator.linear import GaussianRational


class SquareFreeTest(unittest.TestCase):
    def test_generators_square_to_zero(self):
        a = SquareFreePolynomial.generator(1, 1)
        self.assertTrue((a * a).is_zero())
        self.assertEqual((a ** 0), SquareFreePolynomial.one())

    def test_powers_of_sums(self):
        e = euler_class_of_tensor(1, 3)
        self.assertEqual((e ** 2).coefficient([(1, 1), (1, 2)]), 2)
        cube = e ** 3
        self.assertEqual(cube.monomials(), [[(1, 1), (1, 2), (1, 3)]])
        self.assertEqual(cube.coefficient([(1, 1), (1, 2), (1, 3)]), 6)
        self.assertTrue((e ** 4).is_zero())
        with self.assertRaises(DimensionError):
            e ** -1

    def test_factorial_coefficients(self):
        for n in range(1, 9):
            e = euler_class_of_tensor(1, n)
            with self.subTest(msg=f"Power {n} of a sum of {n} generators", n=n):
                power = e ** n
                self.assertEqual(len(power.terms), 1)
                self.assertEqual(power.coefficient([(1, j) for j in range(1, n + 1)]), math.factorial(n))
                self.assertTrue((e ** (n + 1)).is_zero())

    def test_tampered_coefficient_fails_expansion(self):
        spec = BundleSpec(((8, 1),))
        monomial = tuple((1, j) for j in range(1, 9))
        with patch("pycommutator.euler.cohomology.euler_witness", return_value=(monomial, 40319)):
            certificate = certify_cm_failure(spec, 1)
        self.assertEqual(certificate.coefficient, 40319)
        self.assertFalse(certificate.verify())
        honest = EulerCertificate(spec, 8, monomial, 40320, Conclusion.NOT_SUBEQUIVALENT)
        self.assertTrue(honest.verify())

    def test_false_inconclusive_fails_expansion(self):
        with patch("pycommutator.euler.cohomology.euler_witness", return_value=None):
            certificate = certify_cm_failure(BundleSpec(((8, 1),)), 1)
        self.assertEqual(certificate.conclusion, Conclusion.INCONCLUSIVE)
        self.assertFalse(certificate.verify())

    def test_large_stage_uses_closed_form(self):
        certificate = certify_subequivalence_obstruction(BundleSpec(((12, 1),)), 12)
        self.assertEqual(certificate.coefficient, math.factorial(12))
        self.assertTrue(certificate.verify())
        self.assertFalse(replace(certificate, coefficient=certificate.coefficient + 1).verify())

    def test_document(self):
        f = SquareFreePolynomial.generator(2, 1) * SquareFreePolynomial.generator(1, 3)
        self.assertEqual(f.as_dict(), {"terms": [{"monomial": [[1, 3], [2, 1]], "coeff": "1"}]})
        self.assertEqual(f.degree, 2)


class BundleSpecTest(unittest.TestCase):
    def test_from_strings(self):
        spec = BundleSpec.from_strings(["8:1", "16:2"])
        self.assertEqual(spec.stages, ((8, 1), (16, 2)))
        self.assertEqual(spec.total_spheres, 24)

    def test_bad_strings(self):
        cases = [(["8:1", "x"], "$[1]"), (["0:1"], "$[0]"), (["8"], "$[0]"), ([], "$")]
        for raw, path in cases:
            with self.subTest(msg=f"Rejecting stages {raw}", raw=raw):
                with self.assertRaises(SchemaError) as ctx:
                    BundleSpec.from_strings(raw)
                self.assertEqual(ctx.exception.path, path)
        with self.assertRaises(DimensionError):
            BundleSpec(((3, 0),))


class EulerCertificateTest(unittest.TestCase):
    def test_cm_failure_with_eight_spheres(self):
        certificate = certify_cm_failure(BundleSpec(((8, 1),)), 1)
        self.assertTrue(certificate.certified)
        self.assertEqual(certificate.coefficient, 40320)
        self.assertEqual(certificate.witness_monomial, tuple((1, j) for j in range(1, 9)))
        self.assertTrue(certificate.verify())

    def test_inconclusive_below_threshold(self):
        certificate = certify_cm_failure(BundleSpec(((7, 1),)), 1)
        self.assertEqual(certificate.conclusion, Conclusion.INCONCLUSIVE)
        self.assertEqual(certificate.coefficient, 0)
        self.assertTrue(certificate.verify())
        with self.assertRaises(DimensionError):
            certify_cm_failure(BundleSpec(((8, 1),)), 0)

    def test_witness_matches_expansion(self):
        spec = BundleSpec(((4, 1), (3, 1)))
        monomial, coefficient = euler_witness(spec, 2)
        self.assertEqual(monomial, ((1, 1), (1, 2), (2, 1), (2, 2)))
        self.assertEqual(coefficient, 4)
        expansion = euler_direct_sum_power(spec, 2)
        self.assertEqual(len(expansion.terms), 18)
        self.assertEqual(expansion.coefficient(monomial), coefficient)
        self.assertTrue(euler_direct_sum_power(spec, 4).is_zero())
        self.assertIsNone(euler_witness(spec, 4))

    def test_expansion_limit(self):
        with self.assertRaises(TooLarge):
            euler_direct_sum_power(BundleSpec(((40, 1),)), 20)

    def test_tampered_certificate(self):
        certificate = certify_subequivalence_obstruction(BundleSpec(((3, 1), (4, 2))), 2)
        self.assertTrue(certificate.verify())
        self.assertFalse(replace(certificate, coefficient=1).verify())
        self.assertFalse(replace(certificate, witness_monomial=((1, 1), (1, 1))).verify())

    def test_document(self):
        data = certify_cm_failure(BundleSpec(((8, 1),)), 1).as_dict()
        self.assertEqual(data["coefficient"], "40320")
        self.assertEqual(data["conclusion"], "NotSubequivalent")
        self.assertEqual(data["spec"], {"stages": [{"n": 8, "l": 1}]})


class BottTest(unittest.TestCase):
    def test_sphere_points(self):
        self.assertEqual(SpherePoint.stereographic(1, 1), SpherePoint(Fraction(2, 3), Fraction(2, 3), Fraction(1, 3)))
        self.assertEqual(SpherePoint.stereographic(0, 0), SpherePoint(0, 0, -1))
        with self.assertRaises(NotOnSphere):
            SpherePoint(1, 1, 0)
        with self.assertRaises(SchemaError) as ctx:
            SpherePoint.from_strings(["1", "x", "0"])
        self.assertEqual(ctx.exception.path, "$[1]")
        self.assertEqual(SpherePoint.from_strings(["3/5", "4/5", "0"]).as_list(), ["3/5", "4/5", "0"])

    def test_bott_projection(self):
        p = bott_eval(0, 0, 1)
        half = Fraction(1, 2)
        self.assertEqual(p[0, 1], GaussianRational(0, -half))
        self.assertEqual(p[1, 0], GaussianRational(0, half))
        self.assertTrue(is_projection(p))
        self.assertEqual(p.rank(), 1)

    def test_pythagorean_points(self):
        triples = [(a * a - b * b, 2 * a * b, a * a + b * b) for a in range(1, 8) for b in range(0, a)]
        for x, y, r in triples:
            for z_sign in (1, -1):
                point = SpherePoint(Fraction(x, r), 0, Fraction(z_sign * y, r))
                with self.subTest(msg=f"Bott projection at {point.as_list()}", point=point.as_list()):
                    p = point.bott()
                    self.assertTrue(is_projection(p))
                    self.assertEqual(p.trace(), GaussianRational(1))
        pair = tensor_projection_eval([SpherePoint(Fraction(3, 5), 0, Fraction(4, 5)), SpherePoint(0, Fraction(5, 13), Fraction(-12, 13))])
        self.assertEqual(pair.rank(), 1)

    def test_random_rational_points(self):
        rng = random.Random(12)
        points = []
        for n in range(1000):
            u = Fraction(rng.randint(-20, 20), rng.randint(1, 20))
            v = Fraction(rng.randint(-20, 20), rng.randint(1, 20))
            point = SpherePoint.stereographic(u, v)
            points.append(point)
            with self.subTest(msg=f"Bott projection at random point {n}", point=point.as_list()):
                p = point.bott()
                self.assertTrue(is_projection(p))
                self.assertEqual(p.trace(), GaussianRational(1))
        for n in range(100):
            pair = points[2 * n : 2 * n + 2]
            with self.subTest(msg=f"Tensor projection of random pair {n}", n=n):
                self.assertEqual(tensor_projection_eval(pair).rank(), 1)

    def test_tensor_projection(self):
        points = [SpherePoint(0, 0, 1), SpherePoint(Fraction(3, 5), Fraction(4, 5), 0), SpherePoint.stereographic(2, -1)]
        p = tensor_projection_eval(points)
        self.assertEqual(p.shape, (8, 8))
        self.assertTrue(is_projection(p))
        self.assertEqual(p.rank(), 1)
        self.assertEqual(p.trace(), GaussianRational(1))
        with self.assertRaises(DimensionError):
            tensor_projection_eval([])


class ScheduleTest(unittest.TestCase):
    def test_dense_points(self):
        self.assertEqual([unpair(n) for n in range(4)], [(0, 0), (0, 1), (1, 1), (1, 0)])
        self.assertEqual(dense_point(0), SpherePoint(0, 0, -1))
        self.assertEqual(dense_point(1), SpherePoint(0, 1, 0))
        self.assertEqual(dense_point(2), SpherePoint(Fraction(2, 3), Fraction(2, 3), Fraction(1, 3)))
        self.assertEqual(dense_point(3), SpherePoint(1, 0, 0))

    def test_slot_interleaving(self):
        self.assertEqual(slot_indices(0, 3), [0, 0, 0])
        self.assertEqual(slot_indices(3, 3), [3, 0, 0])
        self.assertEqual(slot_indices(8, 3), [0, 1, 0])
        for slot in range(3):
            for index in (1, 5, 12):
                with self.subTest(msg=f"Spreading index {index} into slot {slot}", slot=slot, index=index):
                    expected = [0, 0, 0]
                    expected[slot] = index
                    self.assertEqual(slot_indices(spread(slot, index), 3), expected)

    def test_first_block_reaches_both_hemispheres(self):
        schedule = dense_point_schedule(4, [1, 1, 1, 1], limit=10)
        firsts = schedule.first_coordinates(1)
        self.assertEqual(firsts, [dense_point(n) for n in range(4)])
        self.assertTrue(any(p.z > 0 for p in firsts))
        self.assertTrue(any(p.z < 0 for p in firsts))
        self.assertEqual([len(z) for z in schedule.points], [1, 2, 3, 4])

    def test_coverage(self):
        with self.assertLogs(level="WARNING"):
            short = dense_point_schedule(2, [2, 3], limit=10)
        self.assertEqual(short.coverage, {1: None, 2: None})
        schedule = dense_point_schedule(2, [2, 3])
        self.assertIsInstance(schedule, PointSchedule)
        self.assertIsNotNone(schedule.coverage[1])
        self.assertGreaterEqual(schedule.coverage[2], schedule.coverage[1])

    def test_first_stage_realizing(self):
        self.assertEqual(first_stage_realizing((0,)), 1)
        self.assertEqual(first_stage_realizing((0, 1)), 9)
        # z_1 has no second block, so (0, 0) first shows up once slot 2 moves
        self.assertEqual(first_stage_realizing((0, 0)), 33)
        self.assertEqual(slot_indices(32, 2), [0, 0])
        for indices in itertools.product(range(4), repeat=2):
            n = first_stage_realizing(indices)
            with self.subTest(msg=f"First stage realizing {indices}", indices=indices):
                self.assertGreaterEqual(n, 2)
                self.assertEqual(slot_indices(n - 1, 2), list(indices))
                earlier = [k for k in range(2, n) if slot_indices(k - 1, 2) == list(indices)]
                self.assertEqual(earlier, [])

    def test_coverage_counts_existing_blocks(self):
        schedule = dense_point_schedule(2, [2, 3])
        self.assertGreaterEqual(schedule.coverage[2], first_stage_realizing((0, 0)))
        single = dense_point_schedule(1, [2])
        self.assertEqual(list(single.coverage), [1])

    def test_bad_schedules(self):
        with self.assertRaises(DimensionError):
            dense_point_schedule(2, [1])
        with self.assertRaises(DimensionError):
            dense_point_schedule(1, [0])


class VilladsenTest(unittest.TestCase):
    def test_minimal_plan(self):
        self.assertEqual(minimal_sphere_counts(1, 3), [8, 16, 32])
        plan = villadsen_plan(1, 3)
        self.assertIsInstance(plan, VilladsenPlan)
        self.assertEqual([s.k_n for s in plan.stages], [8, 16, 32])
        self.assertEqual([s.l_n for s in plan.stages], [1, 2, 4])
        self.assertEqual([s.rank_r_n for s in plan.stages], [2, 4, 8])
        self.assertEqual([s.dim_Y_n for s in plan.stages], [16, 48, 112])
        self.assertEqual([len(s.z_n) for s in plan.stages], [8, 24, 56])
        self.assertTrue(plan.all_certified)
        self.assertTrue(plan.verify())
        first = plan.stages[0]
        self.assertEqual(first.next_multiplicity, plan.stages[1].l_n)
        self.assertEqual(first.corner_split, (1, 1))
        self.assertEqual(first.section_count, 8)

    def test_corner_split(self):
        plan = villadsen_plan(1, 3)
        for n, stage in enumerate(plan.stages, start=1):
            with self.subTest(msg=f"Corner split at stage {n}", n=n):
                self.assertEqual(stage.corner_split, (1, sum(s.l_n for s in plan.stages[:n])))
                self.assertEqual(sum(stage.corner_split), stage.rank_r_n)

    def test_six_stage_plans(self):
        for m in range(1, 5):
            plan = villadsen_plan(m, 6)
            with self.subTest(msg=f"Six stages ruling out C_{m}", m=m):
                self.assertTrue(plan.all_certified)
                for n, stage in enumerate(plan.stages, start=1):
                    self.assertEqual(stage.l_n, 2 ** (n - 1))
                    self.assertEqual(stage.k_n, 8 * m * 2 ** (n - 1))
                for stage, following in zip(plan.stages, plan.stages[1:]):
                    self.assertEqual(following.l_n, stage.rank_r_n)

    def test_each_short_block_flips_its_stage(self):
        ks = minimal_sphere_counts(1, 6)
        for j in range(6):
            mutated = list(ks)
            mutated[j] -= 1
            plan = villadsen_plan(1, 6, mutated)
            with self.subTest(msg=f"Block {j + 1} one sphere short", j=j):
                flags = [s.stage_certificate.certified for s in plan.stages]
                self.assertEqual(flags, [n != j for n in range(6)])
                self.assertTrue(plan.verify())

    def test_short_block_breaks_its_stage(self):
        plan = villadsen_plan(1, 3, [8, 15, 32])
        self.assertFalse(plan.all_certified)
        self.assertEqual([s.stage_certificate.certified for s in plan.stages], [True, False, True])
        self.assertEqual([s.certificate.certified for s in plan.stages], [True, False, False])
        self.assertTrue(plan.verify())

    def test_tampered_plan(self):
        plan = villadsen_plan(1, 2)
        stages = (replace(plan.stages[0], section_count=1),) + plan.stages[1:]
        self.assertFalse(replace(plan, stages=stages).verify())
        stages = (replace(plan.stages[0], rank_r_n=3),) + plan.stages[1:]
        self.assertFalse(replace(plan, stages=stages).verify())

    def test_document(self):
        data = villadsen_plan(2, 1).as_dict()
        self.assertEqual(data["m"], 2)
        self.assertTrue(data["all_certified"])
        self.assertEqual(data["stages"][0]["k_n"], 16)
        self.assertEqual(data["stages"][0]["section_count"], 16)
        self.assertEqual(list(data["schedule_coverage"]), ["1"])

    def test_refusals(self):
        for args in [(0, 2), (1, 0)]:
            with self.subTest(msg=f"villadsen_plan{args}", args=args):
                with self.assertRaises(DimensionError):
                    villadsen_plan(*args)
        with self.assertRaises(DimensionError):
            villadsen_plan(1, 2, [8])


if __name__ == "__main__":
    unittest.main()
