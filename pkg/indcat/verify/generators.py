"""
引理输入生成器

按给定占优类、次数与平衡性确定性地构造严格单峰多项式: 先采样一条严格递减的
正整数链，再按该类的交错顺序写入各下标。生成结果经 analyze_shape 自检。
"""

import logging
import random
from dataclasses import dataclass
from typing import Dict, List

from indcat.core.errors import IntegrityError, ParameterError
from indcat.core.polyalg import Polynomial
from indcat.core.shape import (
    DOMINANCE_CLASSES,
    STRICT_LD,
    STRICT_RD,
    WEAK_LD,
    analyze_shape,
)

logger = logging.getLogger(__name__)

MAX_CHAIN_GAP = 9


def _target_mode(left: bool, degree: int, balanced: bool) -> int:
    if balanced:
        return (degree + 1) // 2 if left else degree // 2
    if degree < 3:
        raise ParameterError(f"非平衡多项式要求次数 >= 3: d={degree}")
    if left:
        return degree // 2 if degree % 2 == 1 else degree // 2 - 1
    return (degree + 1) // 2 if degree % 2 == 1 else degree // 2 + 1


def _chain_order(mu: int, degree: int, left: bool) -> List[int]:
    """窗口内按交错顺序排列下标，窗口外的下标按到峰位的距离追加"""
    span = min(mu, degree - mu)
    sign = 1 if left else -1
    order = [mu]
    for s in range(1, span + 1):
        order.append(mu - sign * s)
        order.append(mu + sign * s)
    for s in range(span + 1, degree + 1):
        for idx in (mu - s, mu + s):
            if 0 <= idx <= degree:
                order.append(idx)
    return order


def gen_dominant_poly(seed: int, dominance_class: str, degree: int,
                      balanced: bool = True) -> Polynomial:
    """
    构造指定占优类的严格单峰多项式

    参数:
        seed: 随机种子，相同参数得到相同多项式
        dominance_class: DOMINANCE_CLASSES 之一
        degree: 次数 d (>= 2)
        balanced: 是否平衡

    返回:
        Polynomial: analyze_shape 认证过的多项式

    异常:
        ParameterError: 参数组合不可行
    """
    if dominance_class not in DOMINANCE_CLASSES:
        raise ParameterError(f"未知的占优类: {dominance_class}")
    if degree < 2:
        raise ParameterError(f"次数必须 >= 2: d={degree}")

    left = dominance_class in (STRICT_LD, WEAK_LD)
    strict = dominance_class in (STRICT_LD, STRICT_RD)
    mu = _target_mode(left, degree, balanced)
    if not strict and min(mu, degree - mu) < 2:
        # 窗口只有一环时弱类与严格类无法区分
        raise ParameterError(f"弱占优类要求峰位两侧各至少 2 项: d={degree}, mu={mu}")

    rng = random.Random(seed)
    order = _chain_order(mu, degree, left)
    values = [0] * len(order)
    values[-1] = rng.randint(1, MAX_CHAIN_GAP)
    for pos in range(len(order) - 2, -1, -1):
        values[pos] = values[pos + 1] + rng.randint(1, MAX_CHAIN_GAP)
    if not strict:
        values[2] = values[1]

    coeffs = [0] * (degree + 1)
    for idx, value in zip(order, values):
        coeffs[idx] = value
    poly = Polynomial(tuple(coeffs))

    report = analyze_shape(poly)
    if (dominance_class not in report.dominance or report.mode != mu
            or report.balanced is not balanced):
        raise IntegrityError(f"生成器自检({dominance_class}, d={degree})", mu, report.to_dict())
    return poly


@dataclass(frozen=True)
class LemmaCase:
    """一组平移引理输入 (q, t)"""
    q: Polynomial
    t: int
    seed: int
    dominance_class: str
    degree: int
    mu: int

    def to_dict(self) -> Dict:
        return {
            "q": self.q.to_strings(),
            "t": self.t,
            "seed": self.seed,
            "class": self.dominance_class,
            "degree": self.degree,
            "mu": self.mu,
        }


def generate_lemma_cases(count: int, seed: int = 0, min_degree: int = 2,
                         max_degree: int = 12) -> List[LemmaCase]:
    """
    生成满足引理前提的输入: 严格 LD 或严格 RD、平衡、严格单峰，且 1 <= t <= mu

    参数:
        count: 生成数量
        seed: 总种子，每组输入另有派生种子记录在 LemmaCase.seed
        min_degree: 最小次数
        max_degree: 最大次数

    返回:
        List[LemmaCase]: 输入列表
    """
    if count < 0:
        raise ParameterError(f"生成数量不能为负: {count}")
    if min_degree < 2 or max_degree < min_degree:
        raise ParameterError(f"次数区间无效: [{min_degree}, {max_degree}]")
    rng = random.Random(seed)
    cases = []
    for _ in range(count):
        case_seed = rng.randrange(2 ** 31)
        dominance_class = rng.choice((STRICT_LD, STRICT_RD))
        degree = rng.randint(min_degree, max_degree)
        q = gen_dominant_poly(case_seed, dominance_class, degree, balanced=True)
        mu = analyze_shape(q).mode
        t = rng.randint(1, mu)
        cases.append(LemmaCase(q, t, case_seed, dominance_class, degree, mu))
    logger.debug(f"生成 {len(cases)} 组引理输入 (seed={seed})")
    return cases
