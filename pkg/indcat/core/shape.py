"""
系数序列形态分类模块

对一个计数序列 b_0..b_d 给出全部序关系性质: 单峰、严格单峰、左/右占优
(严格与弱)、平衡、对称。

左占优 (LD) 与右占优 (RD) 统一用成对窗口规则判断: 设唯一峰位为 mu，
S = min(mu, d-mu)，严格 LD 要求对 1 <= s <= S-1 有
b[mu-s] > b[mu+s] 且 b[mu+s] > b[mu-(s+1)]，最后一环 b[mu-S] >= b[mu+S]；
弱 LD 把所有比较都放宽为 >=。RD 左右镜像。窗口 [mu-S, mu+S] 以外的
系数只受单峰性约束。
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

from indcat.core.errors import ShapeDomainError
from indcat.core.polyalg import Polynomial

STRICT_LD = "strict-LD"
WEAK_LD = "weak-LD"
STRICT_RD = "strict-RD"
WEAK_RD = "weak-RD"

DOMINANCE_CLASSES = (STRICT_LD, WEAK_LD, STRICT_RD, WEAK_RD)


@dataclass(frozen=True)
class ShapeReport:
    """
    单个系数序列的完整分类结果

    属性:
        degree: 次数 d
        modes: 取到最大系数的全部下标 (升序)
        unimodal: 是否单峰
        strictly_unimodal: 是否严格单峰
        dominance: 满足的占优类 (DOMINANCE_CLASSES 的子集)
        balanced: 是否平衡；不严格单峰或无占优类时为 None (不适用)
        symmetric: 是否对称
    """
    degree: int
    modes: Tuple[int, ...]
    unimodal: bool
    strictly_unimodal: bool
    dominance: FrozenSet[str] = field(default_factory=frozenset)
    balanced: Optional[bool] = None
    symmetric: bool = False

    @property
    def mode(self) -> Optional[int]:
        """唯一峰位；峰位不唯一时为 None"""
        return self.modes[0] if len(self.modes) == 1 else None

    @property
    def is_left_dominant(self) -> bool:
        return WEAK_LD in self.dominance

    @property
    def is_right_dominant(self) -> bool:
        return WEAK_RD in self.dominance

    @property
    def is_dominant(self) -> bool:
        """至少满足一个 (弱) 占优类"""
        return bool(self.dominance)

    def to_dict(self) -> Dict:
        return {
            "degree": self.degree,
            "modes": list(self.modes),
            "unimodal": self.unimodal,
            "strictly_unimodal": self.strictly_unimodal,
            "dominance": [c for c in DOMINANCE_CLASSES if c in self.dominance],
            "balanced": self.balanced,
            "symmetric": self.symmetric,
        }


def _check_counting_sequence(p: Polynomial) -> None:
    if p.is_zero:
        raise ShapeDomainError("零多项式不是计数序列")
    if any(c < 0 for c in p.coeffs):
        raise ShapeDomainError(f"系数必须非负: {list(p.coeffs)}")


def modes_of(p: Polynomial) -> Tuple[int, ...]:
    """
    取到最大系数的全部下标

    异常:
        ShapeDomainError: 有负系数或为零多项式
    """
    _check_counting_sequence(p)
    top = max(p.coeffs)
    return tuple(i for i, c in enumerate(p.coeffs) if c == top)


def _is_unimodal(b: Sequence[int], peak: int) -> bool:
    rising = all(b[i] <= b[i + 1] for i in range(peak))
    falling = all(b[i] >= b[i + 1] for i in range(peak, len(b) - 1))
    return rising and falling


def _is_strictly_unimodal(b: Sequence[int], peak: int) -> bool:
    rising = all(b[i] < b[i + 1] for i in range(peak))
    falling = all(b[i] > b[i + 1] for i in range(peak, len(b) - 1))
    return rising and falling


def _window_holds(b: Sequence[int], mu: int, left: bool, strict: bool) -> bool:
    """成对窗口规则；left=True 判 LD，否则判 RD"""
    d = len(b) - 1
    span = min(mu, d - mu)
    sign = 1 if left else -1

    def greater(i: int, j: int) -> bool:
        return b[i] > b[j] if strict else b[i] >= b[j]

    for s in range(1, span):
        near, far = mu - sign * s, mu + sign * s
        beyond = mu - sign * (s + 1)
        if not (greater(near, far) and greater(far, beyond)):
            return False
    if span >= 1:
        return b[mu - sign * span] >= b[mu + sign * span]
    # mu 位于端点时链为空，两侧都视为成立
    return True


def analyze_shape(p: Polynomial) -> ShapeReport:
    """
    对系数序列做完整分类

    参数:
        p: 系数非负的非零多项式

    返回:
        ShapeReport: 分类结果
    """
    modes = modes_of(p)
    b = p.coeffs
    d = p.degree
    unimodal = _is_unimodal(b, modes[0])
    strictly = len(modes) == 1 and _is_strictly_unimodal(b, modes[0])
    symmetric = all(b[j] == b[d - j] for j in range(d + 1))

    dominance = set()
    balanced = None
    if strictly:
        mu = modes[0]
        if _window_holds(b, mu, left=True, strict=True):
            dominance.add(STRICT_LD)
        if _window_holds(b, mu, left=True, strict=False):
            dominance.add(WEAK_LD)
        if _window_holds(b, mu, left=False, strict=True):
            dominance.add(STRICT_RD)
        if _window_holds(b, mu, left=False, strict=False):
            dominance.add(WEAK_RD)
        if dominance:
            balanced = ((WEAK_LD in dominance and mu == (d + 1) // 2)
                        or (WEAK_RD in dominance and mu == d // 2))

    return ShapeReport(
        degree=d,
        modes=modes,
        unimodal=unimodal,
        strictly_unimodal=strictly,
        dominance=frozenset(dominance),
        balanced=balanced,
        symmetric=symmetric,
    )
