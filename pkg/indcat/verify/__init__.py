"""
indcat.verify 包

核对工具: 单项核对函数、引理输入生成器和批量核对。
"""

from indcat.verify.records import (
    CONFORM,
    HYPOTHESIS_NOT_MET,
    NONCONFORM,
    ConformanceRecord,
)
from indcat.verify.harness import (
    check_base_case,
    check_diff_bounds,
    check_shift_lemma,
    check_symmetric_multiplier,
    cross_validate_instance,
    verify_theorem_instance,
)
from indcat.verify.generators import gen_dominant_poly, generate_lemma_cases
from indcat.verify.sweep import SweepConfig, sweep_family
