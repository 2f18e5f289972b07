"""
核对记录模块

所有核对函数都返回 ConformanceRecord，三值判定:
conform (预测全部与实测一致)、nonconform (至少一项不一致)、
hypothesis-not-met (前提不成立，不计为失败)。
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

CONFORM = "conform"
NONCONFORM = "nonconform"
HYPOTHESIS_NOT_MET = "hypothesis-not-met"

VERDICTS = (CONFORM, NONCONFORM, HYPOTHESIS_NOT_MET)


@dataclass
class ConformanceRecord:
    """
    单次核对的结果

    属性:
        check_name: 核对名称
        inputs: 序列化后的输入 (系数以十进制字符串表示)
        predicted: 预测性质
        observed: 实测性质
        verdict: VERDICTS 之一
        seed: 输入由生成器产生时的随机种子
        findings: 与预测不一致或值得记录的具体条目
    """
    check_name: str
    inputs: Dict[str, Any]
    predicted: Dict[str, Any] = field(default_factory=dict)
    observed: Dict[str, Any] = field(default_factory=dict)
    verdict: str = CONFORM
    seed: Optional[int] = None
    findings: List[str] = field(default_factory=list)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"未知的判定: {self.verdict}")

    @property
    def is_failure(self) -> bool:
        return self.verdict == NONCONFORM

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check_name": self.check_name,
            "inputs": self.inputs,
            "predicted": self.predicted,
            "observed": self.observed,
            "verdict": self.verdict,
            "seed": self.seed,
            "findings": list(self.findings),
        }


def verdict_from_findings(findings: List[str]) -> str:
    return CONFORM if not findings else NONCONFORM


def count_verdicts(records: List[ConformanceRecord]) -> Dict[str, int]:
    """按判定统计记录数，三种判定都出现在结果里"""
    counts = {v: 0 for v in VERDICTS}
    for record in records:
        counts[record.verdict] += 1
    return counts
