"""
毛毛虫闭式机制的测试

本模块测试 p/k/q 递推、条件 (1)-(3) 的检查与峰位预测。
"""

import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from indcat.core.caterpoly import (
    InequalityCheck,
    RecursionStep,
    caterpillar_polys,
    check_conditions,
    closed_k,
    instance_report,
    k_exponent_min_recurrence,
    p_recursion,
    predict_theorem,
)
from indcat.core.polyalg import Polynomial, remove_binomial_factor
from indcat.core.shape import analyze_shape
from indcat.core.treegraph import CaterpillarSpec, build_caterpillar, indpoly_treedp

SPEC_4_9_9_10 = CaterpillarSpec((4, 9, 9, 10))


class TestRecursions(unittest.TestCase):
    """测试 p/q 递推与 k 闭式"""

    def test_closed_k(self):
        self.assertEqual([closed_k(SPEC_4_9_9_10.m, j) for j in range(1, 6)], [0, 4, 9, 13, 19])
        with self.assertRaises(ValueError):
            closed_k((1, 2), 0)
        with self.assertRaises(ValueError):
            closed_k((1, 2), 4)

    def test_p_recursion_small(self):
        p = p_recursion((1, 1, 1))
        self.assertEqual(p[0], Polynomial((1, 2)))
        self.assertEqual(p[2], Polynomial((1, 6, 10, 5)))

    def test_three_four(self):
        seq = caterpillar_polys(CaterpillarSpec((3, 4)))
        self.assertTrue(seq.closed_form)
        self.assertEqual(seq.p[1], Polynomial((1, 9, 28, 44, 40, 22, 7, 1)))
        self.assertEqual(seq.k, (0, 3))
        self.assertEqual(seq.q[0], Polynomial((1, 4, 3, 1)))
        self.assertEqual(seq.q[1], Polynomial((1, 6, 7, 4, 1)))

    def test_four_nine_nine_ten(self):
        seq = caterpillar_polys(SPEC_4_9_9_10)
        self.assertEqual(seq.k, (0, 4, 9, 13))
        self.assertEqual(seq.t_steps, (4, 5, 4, 6))
        self.assertEqual(seq.tprime_steps, (4, 5, 4))
        self.assertEqual(seq.q[0], Polynomial((1, 5, 6, 4, 1)))
        self.assertEqual(seq.q[1], Polynomial((1, 11, 41, 94, 136, 131, 85, 36, 9, 1)))
        self.assertEqual(seq.q[2], Polynomial((1, 16, 96, 334, 807, 1415, 1842, 1800, 1323,
                                               724, 287, 78, 13, 1)))
        self.assertEqual(seq.q[3], Polynomial((1, 23, 218, 1211, 4680, 13569, 30785, 55904,
                                               82294, 98912, 97404, 78587, 51753, 27587,
                                               11733, 3891, 970, 171, 19, 1)))
        p4 = seq.p[3]
        self.assertEqual((p4[15], p4[16], p4[17]), (607829171, 639688410, 596714094))
        self.assertEqual(analyze_shape(p4).modes, (16,))

    def test_non_monotone_has_no_closed_form(self):
        seq = caterpillar_polys(CaterpillarSpec((5, 3)))
        self.assertFalse(seq.closed_form)
        self.assertIsNone(seq.k)
        self.assertEqual([k for k, _ in seq.factored()], [0, 3])

    def test_min_recurrence_is_only_a_lower_bound(self):
        spec = CaterpillarSpec((1, 2, 1))
        self.assertEqual(k_exponent_min_recurrence(spec.m), (0, 1, 2))
        seq = caterpillar_polys(spec)
        self.assertEqual(seq.p[2], Polynomial((1, 7, 15, 13, 4)))
        self.assertEqual(seq.factored()[2], (3, Polynomial((1, 4))))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=5))
    def test_recursion_matches_tree_dp(self, m):
        spec = CaterpillarSpec(tuple(sorted(m)))
        seq = caterpillar_polys(spec)
        self.assertEqual(seq.p[-1], indpoly_treedp(build_caterpillar(spec)))
        self.assertEqual(k_exponent_min_recurrence(spec.m), seq.k)

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=5))
    def test_min_recurrence_never_exceeds_multiplicity(self, m):
        spec = CaterpillarSpec(tuple(m))
        seq = caterpillar_polys(spec)
        lower = k_exponent_min_recurrence(spec.m)
        for bound, pj in zip(lower, seq.p):
            self.assertGreaterEqual(remove_binomial_factor(pj)[0], bound)


class TestConditions(unittest.TestCase):
    """测试定理条件"""

    def test_all_conditions_hold(self):
        report = check_conditions(SPEC_4_9_9_10)
        self.assertTrue(report.cond1_nondecreasing)
        self.assertTrue(report.cond2_base)
        self.assertEqual(report.cond3_range, (3, 4))
        self.assertEqual((report.cond3_results[3].lhs, report.cond3_results[3].rhs), (26, 27))
        self.assertEqual((report.cond3_results[4].lhs, report.cond3_results[4].rhs), (38, 39))
        self.assertEqual(report.sufficient_variant, {3: True, 4: True})
        self.assertTrue(report.all_pass)
        self.assertEqual(report.sufficient_discrepancies, ())

    def test_sufficient_variant_discrepancy(self):
        report = check_conditions(CaterpillarSpec((3, 4, 4)))
        self.assertFalse(report.cond3_results[3].holds)
        self.assertEqual(report.sufficient_discrepancies, (3,))
        self.assertFalse(report.all_pass)

    def test_cond3_failure_without_discrepancy(self):
        report = check_conditions(CaterpillarSpec((3, 4, 5)))
        self.assertEqual((report.cond3_results[3].lhs, report.cond3_results[3].rhs), (16, 12))
        self.assertEqual(report.sufficient_discrepancies, ())

    def test_base_condition(self):
        self.assertTrue(check_conditions(CaterpillarSpec((3,))).all_pass)
        self.assertFalse(check_conditions(CaterpillarSpec((2,))).cond2_base)
        self.assertFalse(check_conditions(CaterpillarSpec((4, 4))).cond2_base)
        self.assertFalse(check_conditions(CaterpillarSpec((3, 4, 9, 9))).cond2_base)
        self.assertFalse(check_conditions(CaterpillarSpec((5, 3))).cond1_nondecreasing)

    def test_custom_range_is_clipped(self):
        wide = check_conditions(SPEC_4_9_9_10, (1, None))
        self.assertEqual(wide.cond3_range, (1, 4))
        self.assertEqual(sorted(wide.cond3_results), [1, 2, 3, 4])
        self.assertFalse(wide.all_pass)
        clipped = check_conditions(SPEC_4_9_9_10, (3, 10))
        self.assertEqual(clipped.cond3_range, (3, 4))
        empty = check_conditions(SPEC_4_9_9_10, (5, None))
        self.assertEqual(empty.cond3_results, {})
        self.assertTrue(empty.all_pass)

    def test_inequality_check(self):
        check = InequalityCheck(3, 26, 27)
        self.assertTrue(check.holds)
        self.assertEqual(check.to_dict(), {"k": 3, "lhs": 26, "rhs": 27, "holds": True})
        self.assertFalse(InequalityCheck(3, 27, 27).holds)


class TestPrediction(unittest.TestCase):
    """测试峰位预测"""

    def test_prediction_steps(self):
        prediction = predict_theorem(SPEC_4_9_9_10)
        self.assertEqual(prediction.d, 32)
        self.assertEqual(prediction.mode_set, (16,))
        self.assertEqual([(s.step, s.t, s.tprime, s.mu) for s in prediction.steps],
                         [(3, 4, 5, 4), (4, 6, 4, 6)])
        self.assertEqual([s.bound for s in prediction.steps], [12, 15])
        self.assertEqual(prediction.t_hypothesis_ok, (True, True))

    def test_odd_degree_has_two_modes(self):
        self.assertEqual(predict_theorem(CaterpillarSpec((3, 4))).mode_set, (3, 4))

    def test_non_monotone_rejected(self):
        with self.assertRaises(ValueError):
            predict_theorem(CaterpillarSpec((5, 3)))

    def test_step_without_unique_mode(self):
        step = RecursionStep(step=3, t=2, tprime=3, mu=None)
        self.assertIsNone(step.t_hypothesis_ok)
        self.assertEqual(step.bound, 2)


class TestInstanceReport(unittest.TestCase):
    """测试单实例报告"""

    def test_monotone_report(self):
        report = instance_report(CaterpillarSpec((3, 4)))
        self.assertEqual(set(report), {"spec", "k", "p", "q", "conditions", "prediction"})
        self.assertEqual(report["k"], [0, 3])
        self.assertEqual(report["p"][1], ["1", "9", "28", "44", "40", "22", "7", "1"])
        self.assertEqual(report["q"][1], ["1", "6", "7", "4", "1"])
        self.assertEqual(report["prediction"]["mode_set"], [3, 4])

    def test_non_monotone_report(self):
        report = instance_report(CaterpillarSpec((5, 3)))
        self.assertEqual(report["k"], [0, 3])
        self.assertIsNone(report["prediction"])
        self.assertFalse(report["conditions"]["cond1_nondecreasing"])


if __name__ == '__main__':
    unittest.main()
