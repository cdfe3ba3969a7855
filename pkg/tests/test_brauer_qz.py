import itertools
import unittest

from math import lcm

from arithmetic.brauer_qz import (annihilated_by_index, is_prime_power_order, qz_add, qz_neg, qz_order, qz_scale,
                                  qz_sum, relative_brauer_local, relative_brauer_real)
from models.invariant_class import CyclicSubgroup, HALF, InvariantClass, ZERO


class TestInvariantClass(unittest.TestCase):
    def test_reduced_representative(self):
        self.assertEqual(InvariantClass.of(5, 4), InvariantClass(1, 4))
        self.assertEqual(InvariantClass.of(-1, 3), InvariantClass(2, 3))
        self.assertEqual(InvariantClass.of(4, 2), ZERO)

    def test_rejects_unreduced(self):
        with self.assertRaises(ValueError):
            InvariantClass(2, 4)
        with self.assertRaises(ValueError):
            InvariantClass(3, 3)
        with self.assertRaises(ValueError):
            InvariantClass(0, 0)

    def test_parse_and_str(self):
        self.assertEqual(InvariantClass.parse("3/8"), InvariantClass(3, 8))
        self.assertEqual(InvariantClass.parse(" 7/2 "), HALF)
        self.assertEqual(str(InvariantClass(3, 8)), "3/8")
        self.assertEqual(str(ZERO), "0/1")
        with self.assertRaises(ValueError):
            InvariantClass.parse("half")
        with self.assertRaises(ValueError):
            InvariantClass.parse("1/0")

    def test_ordered_by_value(self):
        third, two_thirds = InvariantClass(1, 3), InvariantClass(2, 3)
        self.assertLess(third, HALF)
        self.assertGreater(HALF, third)
        self.assertLessEqual(ZERO, third)
        self.assertEqual(sorted([two_thirds, HALF, ZERO, third]), [ZERO, third, HALF, two_thirds])


class TestQZArithmetic(unittest.TestCase):
    def setUp(self):
        self.sample = [InvariantClass.of(k, n) for n in range(1, 9) for k in range(n)]

    def test_add_examples(self):
        self.assertEqual(qz_add(InvariantClass(1, 3), InvariantClass(1, 6)), HALF)
        self.assertEqual(qz_add(HALF, HALF), ZERO)
        self.assertEqual(qz_add(InvariantClass(2, 3), InvariantClass(2, 3)), InvariantClass(1, 3))

    def test_group_laws(self):
        for a, b in itertools.product(self.sample[:12], repeat=2):
            self.assertEqual(qz_add(a, b), qz_add(b, a))
            self.assertEqual(qz_add(a, ZERO), a)
            self.assertEqual(qz_add(a, qz_neg(a)), ZERO)
        for a, b, c in itertools.product(self.sample[:8], repeat=3):
            self.assertEqual(qz_add(qz_add(a, b), c), qz_add(a, qz_add(b, c)))

    def test_order_of_sum_divides_lcm(self):
        for a, b in itertools.product(self.sample, repeat=2):
            self.assertEqual(lcm(qz_order(a), qz_order(b)) % qz_order(qz_add(a, b)), 0)

    def test_order_examples(self):
        self.assertEqual(qz_order(ZERO), 1)
        self.assertEqual(qz_order(HALF), 2)
        self.assertEqual(qz_order(InvariantClass(3, 8)), 8)

    def test_scale_and_sum(self):
        self.assertEqual(qz_scale(InvariantClass(1, 3), 3), ZERO)
        self.assertEqual(qz_scale(InvariantClass(1, 4), -1), InvariantClass(3, 4))
        self.assertEqual(qz_sum([HALF, InvariantClass(1, 4), InvariantClass(1, 4)]), ZERO)
        self.assertEqual(qz_sum([]), ZERO)

    def test_prime_power_order(self):
        self.assertFalse(is_prime_power_order(HALF, 3))
        self.assertTrue(is_prime_power_order(ZERO, 5))
        self.assertTrue(is_prime_power_order(InvariantClass(1, 4), 2))
        self.assertFalse(is_prime_power_order(InvariantClass(1, 6), 2))
        with self.assertRaises(ValueError):
            is_prime_power_order(HALF, 4)


class TestCyclicSubgroup(unittest.TestCase):
    def test_membership(self):
        group = CyclicSubgroup(6)
        self.assertIn(InvariantClass(1, 3), group)
        self.assertIn(HALF, group)
        self.assertNotIn(InvariantClass(1, 4), group)

    def test_closed_under_addition(self):
        group = CyclicSubgroup(12)
        elements = list(group.elements())
        self.assertEqual(len(elements), 12)
        for a, b in itertools.product(elements, repeat=2):
            self.assertIn(qz_add(a, b), group)

    def test_elements_ascending(self):
        self.assertEqual([str(a) for a in CyclicSubgroup(4).elements()], ["0/1", "1/4", "1/2", "3/4"])

    def test_rejects_non_positive(self):
        with self.assertRaises(ValueError):
            CyclicSubgroup(0)


class TestRelativeBrauerShapes(unittest.TestCase):
    def test_local_examples(self):
        pointed = relative_brauer_local(1, 1)
        self.assertEqual((pointed.full.order, pointed.ns_order), (1, 1))

        shape = relative_brauer_local(2, 4)
        self.assertEqual(shape.full.order, 4)
        self.assertEqual(shape.degree_zero.order, 2)
        self.assertEqual(shape.ns_order, 2)

        self.assertEqual(relative_brauer_local(3, 6).ns_order, 2)

    def test_period_must_divide_index(self):
        with self.assertRaises(ValueError):
            relative_brauer_local(2, 3)
        with self.assertRaises(ValueError):
            relative_brauer_local(0, 3)

    def test_degree_zero_inside_full_and_annihilated(self):
        for pe in range(1, 7):
            for ix in (pe, 2 * pe, 3 * pe):
                shape = relative_brauer_local(pe, ix)
                self.assertTrue(shape.degree_zero.is_subgroup_of(shape.full))
                self.assertTrue(all(a in shape.full for a in shape.degree_zero_elements))
                self.assertEqual(shape.full.order // shape.degree_zero.order, shape.ns_order)
                self.assertTrue(annihilated_by_index(shape))

    def test_real_place(self):
        self.assertEqual(relative_brauer_real(True).order, 1)
        self.assertEqual(relative_brauer_real(False).order, 2)
        self.assertIn(HALF, relative_brauer_real(False))


if __name__ == '__main__':
    unittest.main()
