"""
引理输入生成器的测试
"""

import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from indcat.core.errors import ParameterError
from indcat.core.shape import (
    DOMINANCE_CLASSES,
    STRICT_LD,
    STRICT_RD,
    WEAK_LD,
    WEAK_RD,
    analyze_shape,
)
from indcat.verify.generators import gen_dominant_poly, generate_lemma_cases


class TestGenDominantPoly(unittest.TestCase):
    """测试按占优类生成多项式"""

    def test_same_seed_same_polynomial(self):
        first = gen_dominant_poly(7, STRICT_LD, 8)
        second = gen_dominant_poly(7, STRICT_LD, 8)
        self.assertEqual(first, second)
        self.assertEqual(first.degree, 8)

    def test_balanced_modes(self):
        self.assertEqual(analyze_shape(gen_dominant_poly(1, STRICT_LD, 7)).mode, 4)
        self.assertEqual(analyze_shape(gen_dominant_poly(1, STRICT_RD, 7)).mode, 3)
        self.assertEqual(analyze_shape(gen_dominant_poly(1, WEAK_LD, 6)).mode, 3)

    def test_weak_class_is_not_strict(self):
        report = analyze_shape(gen_dominant_poly(3, WEAK_RD, 8))
        self.assertIn(WEAK_RD, report.dominance)
        self.assertNotIn(STRICT_RD, report.dominance)

    def test_unbalanced(self):
        report = analyze_shape(gen_dominant_poly(4, STRICT_LD, 9, balanced=False))
        self.assertEqual(report.mode, 4)
        self.assertIs(report.balanced, False)

    def test_infeasible_parameters(self):
        with self.assertRaises(ParameterError):
            gen_dominant_poly(0, "LD", 6)
        with self.assertRaises(ParameterError):
            gen_dominant_poly(0, STRICT_LD, 1)
        with self.assertRaises(ParameterError):
            gen_dominant_poly(0, WEAK_LD, 3)
        with self.assertRaises(ParameterError):
            gen_dominant_poly(0, STRICT_RD, 2, balanced=False)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 31),
           st.sampled_from(DOMINANCE_CLASSES),
           st.integers(min_value=6, max_value=14),
           st.booleans())
    def test_generated_polynomial_has_requested_shape(self, seed, dominance_class, degree, balanced):
        poly = gen_dominant_poly(seed, dominance_class, degree, balanced)
        report = analyze_shape(poly)
        self.assertEqual(poly.degree, degree)
        self.assertTrue(report.strictly_unimodal)
        self.assertIn(dominance_class, report.dominance)
        self.assertIs(report.balanced, balanced)
        self.assertTrue(all(c > 0 for c in poly.coeffs))


class TestGenerateLemmaCases(unittest.TestCase):
    """测试批量生成引理输入"""

    def test_cases_satisfy_hypotheses(self):
        cases = generate_lemma_cases(50, seed=11)
        self.assertEqual(len(cases), 50)
        for case in cases:
            report = analyze_shape(case.q)
            self.assertIn(case.dominance_class, (STRICT_LD, STRICT_RD))
            self.assertIn(case.dominance_class, report.dominance)
            self.assertTrue(report.balanced)
            self.assertEqual(report.mode, case.mu)
            self.assertTrue(1 <= case.t <= case.mu)
            self.assertEqual(case.q, gen_dominant_poly(case.seed, case.dominance_class, case.degree))

    def test_reproducible(self):
        self.assertEqual(generate_lemma_cases(20, seed=3), generate_lemma_cases(20, seed=3))
        self.assertEqual(generate_lemma_cases(0), [])

    def test_to_dict(self):
        data = generate_lemma_cases(1, seed=5)[0].to_dict()
        self.assertEqual(set(data), {"q", "t", "seed", "class", "degree", "mu"})
        self.assertTrue(all(isinstance(c, str) for c in data["q"]))

    def test_invalid_arguments(self):
        with self.assertRaises(ParameterError):
            generate_lemma_cases(-1)
        with self.assertRaises(ParameterError):
            generate_lemma_cases(5, min_degree=1)
        with self.assertRaises(ParameterError):
            generate_lemma_cases(5, min_degree=6, max_degree=4)


if __name__ == '__main__':
    unittest.main()
