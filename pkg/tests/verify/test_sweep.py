"""
批量核对模块的测试
"""

import unittest

from indcat.core.errors import ParameterError
from indcat.core.treegraph import CaterpillarSpec
from indcat.verify.records import CONFORM, HYPOTHESIS_NOT_MET, NONCONFORM
from indcat.verify.sweep import (
    SweepConfig,
    default_workers,
    enumerate_specs,
    sweep_family,
)


class TestEnumerateSpecs(unittest.TestCase):
    """测试实例枚举"""

    def test_lexicographic_order(self):
        specs = enumerate_specs(SweepConfig(m_min=1, m_max=2, n_min=1, n_max=2))
        self.assertEqual([s.m for s in specs],
                         [(1,), (2,), (1, 1), (1, 2), (2, 1), (2, 2)])

    def test_monotone_only(self):
        specs = enumerate_specs(SweepConfig(m_max=2, n_max=2, monotone_only=True))
        self.assertEqual([s.m for s in specs], [(1,), (2,), (1, 1), (1, 2), (2, 2)])

    def test_explicit_specs_sorted(self):
        config = SweepConfig(specs=[CaterpillarSpec((3, 4)), CaterpillarSpec((5,)),
                                    CaterpillarSpec((2, 3))])
        self.assertEqual([s.m for s in enumerate_specs(config)], [(5,), (2, 3), (3, 4)])

    def test_empty_family(self):
        self.assertEqual(enumerate_specs(SweepConfig(n_min=3, n_max=2)), [])


class TestSweepConfig(unittest.TestCase):
    """测试配置校验"""

    def test_invalid_configs(self):
        for kwargs in ({"m_min": 0}, {"m_min": 3, "m_max": 2}, {"workers": 0}, {"cap": 31},
                       {"m_max": 9, "n_max": 4}):
            with self.assertRaises(ParameterError, msg=str(kwargs)):
                SweepConfig(**kwargs).validate()

    def test_large_family_without_bruteforce(self):
        SweepConfig(m_max=9, n_max=4, use_bruteforce=False).validate()

    def test_max_vertex_count(self):
        self.assertEqual(SweepConfig(m_max=4, n_max=4).max_vertex_count(), 20)
        self.assertEqual(SweepConfig(specs=[CaterpillarSpec((4, 9))]).max_vertex_count(), 15)

    def test_default_workers(self):
        self.assertGreaterEqual(default_workers(), 1)


class TestSweepFamily(unittest.TestCase):
    """测试批量核对"""

    def test_small_family(self):
        result = sweep_family(SweepConfig(m_max=2, n_max=2))
        summary = result.summary
        self.assertEqual(summary.instances, 6)
        self.assertEqual(summary.cross_validation[CONFORM], 6)
        self.assertEqual(summary.theorem[HYPOTHESIS_NOT_MET], 6)
        self.assertFalse(summary.has_failures)
        self.assertEqual([r["spec"] for r in result.rows()], ["1", "2", "1,1", "1,2", "2,1", "2,2"])

    def test_row_columns(self):
        row = sweep_family(SweepConfig(specs=[CaterpillarSpec((3, 4))])).rows()[0]
        self.assertEqual(row, {"spec": "3,4", "n": 2, "cross_validation": CONFORM,
                               "theorem": CONFORM, "mode": "3", "k": 3, "d": 7})

    def test_failures_are_collected(self):
        config = SweepConfig(specs=[CaterpillarSpec((1, 2, 1)), CaterpillarSpec((1, 1))],
                             run_theorem=False)
        result = sweep_family(config)
        self.assertTrue(result.summary.has_failures)
        self.assertEqual(result.summary.nonconform_specs, ["1,2,1"])
        self.assertEqual(result.summary.cross_validation[NONCONFORM], 1)
        self.assertIsNone(result.results[0].theorem)
        self.assertEqual(result.rows()[0]["theorem"], "")

    def test_worker_count_does_not_change_results(self):
        config = dict(m_min=1, m_max=3, n_min=1, n_max=3, monotone_only=True)
        serial = sweep_family(SweepConfig(**config))
        parallel = sweep_family(SweepConfig(workers=2, **config))
        self.assertEqual(serial.rows(), parallel.rows())
        self.assertEqual(serial.summary.to_dict(), parallel.summary.to_dict())


if __name__ == '__main__':
    unittest.main()
