"""
毛毛虫独立多项式的闭式机制

本模块实现 p_n、k_n、q_n 的递推与闭式公式，定理条件 (1)-(3) 的检查，以及峰位预测:

- p_1 = (1+x)^{m_1} + x
- p_2 = (1+x)^{m_1+m_2} + x((1+x)^{m_1} + (1+x)^{m_2})
- p_n = (1+x)^{m_n} p_{n-1} + x (1+x)^{m_{n-1}} p_{n-2}    (n >= 3)

当 m 非递减时，k_n = m_1+m_3+...+m_{n-1} (n 偶) 或 m_2+m_4+...+m_{n-1} (n 奇)，
q_n 按 q_n = (1+x)^{k_{n+1}-k_n} q_{n-1} + x q_{n-2} 递推。
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from indcat.core.errors import IntegrityError
from indcat.core.polyalg import (
    Polynomial,
    mul_binomial_power,
    remove_binomial_factor,
)
from indcat.core.shape import analyze_shape
from indcat.core.treegraph import CaterpillarSpec

logger = logging.getLogger(__name__)


def closed_k(m: Sequence[int], j: int) -> int:
    """
    k_j 的闭式: j 为偶数时 m_1+m_3+...+m_{j-1}，j 为奇数时 m_2+m_4+...+m_{j-1}，k_1 = 0

    参数:
        m: 序列 m (0 下标存 m_1)
        j: 1 <= j <= len(m) + 1
    """
    if j < 1 or j > len(m) + 1:
        raise ValueError(f"k_j 的下标超出范围: j={j}, n={len(m)}")
    start = 0 if j % 2 == 0 else 1
    return sum(m[start:j - 1:2])


@dataclass(frozen=True)
class CaterpillarPolySequence:
    """
    p_1..p_n 及 (m 非递减时) k_1..k_{n+1}、q_1..q_n

    属性:
        spec: 毛毛虫参数
        p: p_1..p_n
        k_closed: k_1..k_{n+1} (闭式)；m 非单调时为 None
        q: q_1..q_n (递推)；m 非单调时为 None
    """
    spec: CaterpillarSpec
    p: Tuple[Polynomial, ...]
    k_closed: Optional[Tuple[int, ...]] = None
    q: Optional[Tuple[Polynomial, ...]] = None

    @property
    def closed_form(self) -> bool:
        return self.q is not None

    @property
    def k(self) -> Optional[Tuple[int, ...]]:
        """k_1..k_n"""
        if self.k_closed is None:
            return None
        return self.k_closed[:self.spec.n]

    def t_at(self, j: int) -> int:
        """第 j 步的 t = k_{j+1} - k_j"""
        return self.k_closed[j] - self.k_closed[j - 1]

    def tprime_at(self, j: int) -> int:
        """第 j 步的 t' = k_j - k_{j-1} (j >= 2)"""
        return self.k_closed[j - 1] - self.k_closed[j - 2]

    @property
    def t_steps(self) -> Tuple[int, ...]:
        return tuple(self.t_at(j) for j in range(1, self.spec.n + 1))

    @property
    def tprime_steps(self) -> Tuple[int, ...]:
        return tuple(self.tprime_at(j) for j in range(2, self.spec.n + 1))

    def factored(self) -> List[Tuple[int, Polynomial]]:
        """对每个 p_j 独立做 (1+x) 因式分解"""
        return [remove_binomial_factor(pj) for pj in self.p]


def _binomial_plus_x(exponent: int) -> Polynomial:
    return mul_binomial_power(Polynomial.ONE, exponent) + Polynomial.X


def p_recursion(m: Sequence[int]) -> List[Polynomial]:
    """
    p 递推，对任意正整数序列成立

    参数:
        m: m_1..m_n

    返回:
        List[Polynomial]: p_1..p_n
    """
    p: List[Polynomial] = []
    for j, mj in enumerate(m, start=1):
        if j == 1:
            p.append(_binomial_plus_x(mj))
        elif j == 2:
            m1 = m[0]
            cross = mul_binomial_power(Polynomial.ONE, m1) + mul_binomial_power(Polynomial.ONE, mj)
            p.append(mul_binomial_power(Polynomial.ONE, m1 + mj) + cross.shift(1))
        else:
            p.append(mul_binomial_power(p[-1], mj)
                     + mul_binomial_power(p[-2], m[j - 2]).shift(1))
    return p


def q_recursion(m: Sequence[int], k_closed: Sequence[int]) -> List[Polynomial]:
    """q 递推，要求 m 非递减"""
    q: List[Polynomial] = []
    for j in range(1, len(m) + 1):
        if j == 1:
            q.append(_binomial_plus_x(m[0]))
        elif j == 2:
            m1, m2 = m[0], m[1]
            q.append(mul_binomial_power(Polynomial.ONE, m2)
                     + mul_binomial_power(Polynomial.ONE, m2 - m1).shift(1)
                     + Polynomial.X)
        else:
            t = k_closed[j] - k_closed[j - 1]
            q.append(mul_binomial_power(q[-1], t) + q[-2].shift(1))
    return q


def caterpillar_polys(spec: CaterpillarSpec) -> CaterpillarPolySequence:
    """
    计算 p、k、q 序列并与独立因式分解交叉核对

    m 非递减时给出闭式 k 与递推 q，并要求 remove_binomial_factor(p_j) == (k_j, q_j)；
    否则只给出 p (q 请通过 factored() 取得)。

    参数:
        spec: 毛毛虫参数

    返回:
        CaterpillarPolySequence: 多项式序列

    异常:
        IntegrityError: 递推与因式分解不一致
    """
    m = spec.m
    p = p_recursion(m)
    if not spec.is_non_decreasing:
        logger.debug(f"m=({spec}) 非单调，只给出 p 序列")
        return CaterpillarPolySequence(spec=spec, p=tuple(p))

    k_closed = tuple(closed_k(m, j) for j in range(1, spec.n + 2))
    q = q_recursion(m, k_closed)
    for j, (pj, qj) in enumerate(zip(p, q), start=1):
        observed_k, observed_q = remove_binomial_factor(pj)
        if observed_k != k_closed[j - 1]:
            logger.error(f"m=({spec}) 的 k_{j} 交叉核对失败")
            raise IntegrityError(f"k_{j}", k_closed[j - 1], observed_k)
        if observed_q != qj:
            logger.error(f"m=({spec}) 的 q_{j} 交叉核对失败")
            raise IntegrityError(f"q_{j}", qj.to_strings(), observed_q.to_strings())
    return CaterpillarPolySequence(spec=spec, p=tuple(p), k_closed=k_closed, q=tuple(q))


def k_exponent_min_recurrence(m: Sequence[int]) -> Tuple[int, ...]:
    """
    k_n = min{k_{n-1} + m_n, k_{n-2} + m_{n-1}} (n >= 3)，k_1 = 0，k_2 = min(m_1, m_2)

    对非单调 m 也可计算，但只是 (1+x) 重数的下界: 两项相等时可能发生抵消。
    """
    k: List[int] = []
    for j in range(1, len(m) + 1):
        if j == 1:
            k.append(0)
        elif j == 2:
            k.append(min(m[0], m[1]))
        else:
            k.append(min(k[-1] + m[j - 1], k[-2] + m[j - 2]))
    return tuple(k)


@dataclass(frozen=True)
class InequalityCheck:
    """条件 (3) 在某个 k 上的一次比较: lhs < rhs"""
    k: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs < self.rhs

    def to_dict(self) -> Dict:
        return {"k": self.k, "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


@dataclass(frozen=True)
class ConditionReport:
    """
    定理条件 (1)-(3) 的检查结果

    属性:
        cond1_nondecreasing: 条件 (1)
        cond2_base: 条件 (2)
        cond3_results: k -> InequalityCheck
        cond3_range: 实际检查的 k 区间 (闭区间)，为空时 start > stop
        sufficient_variant: k -> 充分条件是否成立
    """
    cond1_nondecreasing: bool
    cond2_base: bool
    cond3_results: Dict[int, InequalityCheck] = field(default_factory=dict)
    cond3_range: Tuple[int, int] = (3, 2)
    sufficient_variant: Dict[int, bool] = field(default_factory=dict)

    @property
    def all_pass(self) -> bool:
        return (self.cond1_nondecreasing and self.cond2_base
                and all(c.holds for c in self.cond3_results.values()))

    @property
    def sufficient_discrepancies(self) -> Tuple[int, ...]:
        """充分条件成立但条件 (3) 不成立的 k"""
        return tuple(k for k, ok in sorted(self.sufficient_variant.items())
                     if ok and not self.cond3_results[k].holds)

    def to_dict(self) -> Dict:
        return {
            "cond1_nondecreasing": self.cond1_nondecreasing,
            "cond2_base": self.cond2_base,
            "cond3_range": list(self.cond3_range),
            "cond3": [self.cond3_results[k].to_dict() for k in sorted(self.cond3_results)],
            "sufficient_variant": {str(k): v for k, v in sorted(self.sufficient_variant.items())},
            "sufficient_discrepancies": list(self.sufficient_discrepancies),
            "all_pass": self.all_pass,
        }


def _odd_sum(m: Sequence[int], upto: int) -> int:
    """m_1 + m_3 + ... (下标 <= upto)"""
    return sum(m[0:upto:2])


def _even_sum(m: Sequence[int], upto: int) -> int:
    """m_2 + m_4 + ... (下标 <= upto)"""
    return sum(m[1:upto:2])


def check_conditions(spec: CaterpillarSpec,
                     cond3_range: Optional[Tuple[int, Optional[int]]] = None) -> ConditionReport:
    """
    检查定理的三个条件

    参数:
        spec: 毛毛虫参数
        cond3_range: 条件 (3) 检查的 k 闭区间，默认 [3, n]；上端为 None 表示 n，超出 [1, n] 的部分被截掉

    返回:
        ConditionReport: 检查结果
    """
    m = spec.m
    n = spec.n
    cond1 = spec.is_non_decreasing

    cond2 = m[0] >= 3
    if n >= 2:
        cond2 = cond2 and m[0] < m[1]
    if n >= 4:
        cond2 = cond2 and m[2] < m[3]

    start, stop = cond3_range if cond3_range is not None else (3, n)
    start, stop = max(start, 1), n if stop is None else min(stop, n)
    results: Dict[int, InequalityCheck] = {}
    sufficient: Dict[int, bool] = {}
    for k in range(start, stop + 1):
        if k % 2 == 1:
            lhs = 2 * _odd_sum(m, k)
            rhs = 3 * _even_sum(m, k - 1)
            sufficient[k] = m[k - 1] <= _even_sum(m, k - 1)
        else:
            lhs = 2 * _even_sum(m, k)
            rhs = 3 * _odd_sum(m, k - 1)
            sufficient[k] = m[k - 1] <= _odd_sum(m, k - 1)
        results[k] = InequalityCheck(k, lhs, rhs)

    return ConditionReport(
        cond1_nondecreasing=cond1,
        cond2_base=cond2,
        cond3_results=results,
        cond3_range=(start, stop),
        sufficient_variant=sufficient,
    )


@dataclass(frozen=True)
class RecursionStep:
    """
    q 递推第 n 步 (n >= 3) 的证明量

    属性:
        step: n
        t: k_{n+1} - k_n
        tprime: k_n - k_{n-1}
        mu: q_{n-1} 的唯一峰位，峰位不唯一时为 None
    """
    step: int
    t: int
    tprime: int
    mu: Optional[int]

    @property
    def t_hypothesis_ok(self) -> Optional[bool]:
        if self.mu is None:
            return None
        return self.t <= self.mu

    @property
    def bound(self) -> int:
        """(t-1)(t'-1)"""
        return (self.t - 1) * (self.tprime - 1)

    def to_dict(self) -> Dict:
        return {
            "step": self.step,
            "t": self.t,
            "tprime": self.tprime,
            "mu": self.mu,
            "t_hypothesis_ok": self.t_hypothesis_ok,
            "bound": self.bound,
        }


@dataclass(frozen=True)
class TheoremPrediction:
    """定理预测: 次数 d、峰位集合 {floor(d/2), ceil(d/2)} 及各步的 t 假设"""
    d: int
    mode_set: Tuple[int, ...]
    steps: Tuple[RecursionStep, ...] = ()

    @property
    def t_hypothesis_ok(self) -> Tuple[Optional[bool], ...]:
        return tuple(s.t_hypothesis_ok for s in self.steps)

    def to_dict(self) -> Dict:
        return {
            "d": self.d,
            "mode_set": list(self.mode_set),
            "steps": [s.to_dict() for s in self.steps],
        }


def predict_theorem(spec: CaterpillarSpec,
                    sequence: Optional[CaterpillarPolySequence] = None) -> TheoremPrediction:
    """
    按定理预测 p_n 的峰位，并记录每个递推步的 t <= mu(q_{n-1}) 是否成立

    参数:
        spec: 非递减的毛毛虫参数
        sequence: 已算好的多项式序列，省略时现算

    返回:
        TheoremPrediction: 预测结果
    """
    if not spec.is_non_decreasing:
        raise ValueError(f"定理预测要求 m 非递减: ({spec})")
    sequence = sequence if sequence is not None else caterpillar_polys(spec)
    d = sum(spec.m)
    mode_set = tuple(sorted({d // 2, (d + 1) // 2}))
    steps = []
    for j in range(3, spec.n + 1):
        mu = analyze_shape(sequence.q[j - 2]).mode
        steps.append(RecursionStep(step=j, t=sequence.t_at(j), tprime=sequence.tprime_at(j), mu=mu))
    return TheoremPrediction(d=d, mode_set=mode_set, steps=tuple(steps))


def instance_report(spec: CaterpillarSpec,
                    cond3_range: Optional[Tuple[int, int]] = None) -> Dict:
    """
    单个实例的 JSON 报告: {spec, k, p, q, conditions, prediction}

    m 非单调时 k、q 取自因式分解，prediction 为 None。
    """
    sequence = caterpillar_polys(spec)
    if sequence.closed_form:
        k = list(sequence.k)
        q = list(sequence.q)
        prediction = predict_theorem(spec, sequence).to_dict()
    else:
        factored = sequence.factored()
        k = [kj for kj, _ in factored]
        q = [qj for _, qj in factored]
        prediction = None
    return {
        "spec": spec.to_dict(),
        "k": k,
        "p": [pj.to_strings() for pj in sequence.p],
        "q": [qj.to_strings() for qj in q],
        "conditions": check_conditions(spec, cond3_range).to_dict(),
        "prediction": prediction,
    }
