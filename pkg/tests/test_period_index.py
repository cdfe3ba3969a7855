import unittest

from arithmetic.period_index import (admissible_with_section, enumerate_admissible, even_cover_genus_is_odd,
                                     finite_field_triple, general_constraints, hurwitz_genus,
                                     lichtenbaum_admissible, section_consequences, step1_equivalence_holds)
from models.pi_triple import PITriple, SectionContext
from models.reports import Rule


class TestLichtenbaumAdmissible(unittest.TestCase):
    def test_elliptic_curves(self):
        for n in range(1, 40):
            self.assertTrue(lichtenbaum_admissible(PITriple(1, n, n)))
            self.assertFalse(lichtenbaum_admissible(PITriple(1, n, 2 * n)))

    def test_examples(self):
        self.assertTrue(lichtenbaum_admissible(PITriple(2, 1, 2)))
        self.assertTrue(lichtenbaum_admissible(PITriple(3, 2, 4)))

        result = lichtenbaum_admissible(PITriple(5, 2, 4))
        self.assertFalse(result)
        self.assertEqual(len(result.violations), 1)
        self.assertIn("even", result.violations[0])

    def test_genus_zero_rejected(self):
        with self.assertRaises(ValueError):
            lichtenbaum_admissible(PITriple(0, 1, 1))

    def test_triple_validation(self):
        with self.assertRaises(ValueError):
            PITriple(2, 0, 1)
        with self.assertRaises(ValueError):
            PITriple(-1, 1, 1)


class TestEnumerateAdmissible(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(enumerate_admissible(2), [(1, 1), (1, 2)])
        self.assertEqual(enumerate_admissible(3), [(1, 1), (2, 2), (2, 4)])
        self.assertEqual(enumerate_admissible(1, bound=3), [(1, 1), (2, 2), (3, 3)])

    def test_genus_one_needs_bound(self):
        with self.assertRaises(ValueError):
            enumerate_admissible(1)
        with self.assertRaises(ValueError):
            enumerate_admissible(0)

    def test_genus_one_has_period_equal_index(self):
        pairs = enumerate_admissible(1, bound=50)
        self.assertEqual(len(pairs), 50)
        self.assertTrue(all(pe == ix for pe, ix in pairs))

    def test_matches_brute_force(self):
        for g in range(2, 60):
            expected = sorted(
                (pe, ix) for pe in range(1, 2 * g) for ix in range(1, 4 * g)
                if lichtenbaum_admissible(PITriple(g, pe, ix))
            )
            self.assertEqual(enumerate_admissible(g), expected, g)

    def test_bound_truncates(self):
        self.assertEqual(enumerate_admissible(13, bound=3), [(pe, ix) for pe, ix in enumerate_admissible(13) if pe <= 3])


class TestStepOneEquivalence(unittest.TestCase):
    def test_examples(self):
        self.assertTrue(step1_equivalence_holds(PITriple(3, 2, 2)))
        self.assertTrue(step1_equivalence_holds(PITriple(3, 2, 4)))

    def test_holds_for_every_admissible_triple(self):
        for g in range(2, 201):
            for pe, ix in enumerate_admissible(g):
                self.assertTrue(step1_equivalence_holds(PITriple(g, pe, ix)), (g, pe, ix))

    def test_inadmissible_rejected(self):
        with self.assertRaises(ValueError):
            step1_equivalence_holds(PITriple(5, 2, 4))


class TestCovers(unittest.TestCase):
    def test_hurwitz_examples(self):
        self.assertEqual(hurwitz_genus(2, 2), 3)
        self.assertEqual(hurwitz_genus(4, 3), 10)
        for d in range(1, 10):
            self.assertEqual(hurwitz_genus(1, d), 1)

    def test_even_covers_have_odd_genus(self):
        for g in range(2, 30):
            for d in (2, 4, 6):
                self.assertTrue(even_cover_genus_is_odd(g, d))

    def test_rejects_non_positive(self):
        with self.assertRaises(ValueError):
            hurwitz_genus(0, 2)
        with self.assertRaises(ValueError):
            hurwitz_genus(2, 0)


class TestGeneralConstraints(unittest.TestCase):
    def test_admissible_triples_satisfy_them(self):
        for g in range(2, 40):
            for pe, ix in enumerate_admissible(g):
                self.assertEqual(general_constraints(PITriple(g, pe, ix)), [])

    def test_violations(self):
        self.assertEqual(len(general_constraints(PITriple(3, 3, 5))), 2)
        self.assertEqual(len(general_constraints(PITriple(2, 2, 2))), 0)

    def test_finite_field(self):
        t = finite_field_triple(4)
        self.assertEqual(t.pair(), (1, 1))
        self.assertTrue(lichtenbaum_admissible(t))


class TestSectionConsequences(unittest.TestCase):
    def test_odd_prime(self):
        report = section_consequences(SectionContext(3, 2, True))
        statements = report.statements()
        self.assertIn("pe is a power of 3", statements)
        self.assertIn("ix is a power of 3", statements)
        self.assertIn("pe = ix", statements)
        rules = {c.rule for c in report.conclusions}
        self.assertIn(Rule.ODD_P_PERIOD_EQUALS_INDEX, rules)
        self.assertIn(Rule.LICHTENBAUM, rules)
        self.assertEqual([t.pair() for t in report.surviving_triples], [(1, 1)])

    def test_two_without_even_cover(self):
        report = section_consequences(SectionContext(2, 2, True))
        statements = report.statements()
        self.assertIn("pe is a power of 2", statements)
        self.assertIn("ix is a power of 2", statements)
        self.assertNotIn("pe = ix", statements)
        self.assertEqual(len(report.notes), 1)
        self.assertEqual([t.pair() for t in report.surviving_triples], [(1, 1), (1, 2)])

    def test_two_with_even_cover(self):
        report = section_consequences(SectionContext(2, 2, True, even_cover_with_section=True))
        self.assertIn("pe = ix", report.statements())
        self.assertIn(Rule.EVEN_COVER_PERIOD_EQUALS_INDEX, {c.rule for c in report.conclusions})
        self.assertEqual([t.pair() for t in report.surviving_triples], [(1, 1)])

    def test_no_section_concludes_nothing(self):
        report = section_consequences(SectionContext(5, 3, False))
        self.assertEqual(report.conclusions, [])
        self.assertIsNone(report.surviving_triples)

    def test_context_validation(self):
        with self.assertRaises(ValueError):
            SectionContext(4, 2, True)
        with self.assertRaises(ValueError):
            SectionContext(3, 0, True)


class TestAdmissibleWithSection(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(admissible_with_section(2, 3), [(1, 1)])
        self.assertEqual(admissible_with_section(3, 2), [(1, 1), (2, 2), (2, 4)])
        self.assertEqual(admissible_with_section(3, 5), [(1, 1)])

    def test_odd_primes_force_equality(self):
        for g in range(2, 80):
            for p in (3, 5, 7):
                self.assertTrue(all(pe == ix for pe, ix in admissible_with_section(g, p)))

    def test_subset_of_admissible(self):
        for g in range(2, 80):
            self.assertTrue(set(admissible_with_section(g, 2)) <= set(enumerate_admissible(g)))

    def test_rejects_bad_input(self):
        with self.assertRaises(ValueError):
            admissible_with_section(1, 3)
        with self.assertRaises(ValueError):
            admissible_with_section(3, 6)


if __name__ == '__main__':
    unittest.main()
