"""
批量核对模块

按 (n, m) 字典序枚举一族毛毛虫参数，对每个实例运行交叉核对与定理核对，
按判定汇总。实例之间相互独立，可以分发到多个进程；结果始终按枚举顺序合并，
汇总与进程数无关。
"""

import itertools
import logging
import multiprocessing
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import psutil
from tqdm import tqdm

from indcat.core.errors import ParameterError
from indcat.core.treegraph import BRUTEFORCE_CEILING, DEFAULT_BRUTEFORCE_CAP, CaterpillarSpec
from indcat.verify.harness import cross_validate_instance, verify_theorem_instance
from indcat.verify.records import NONCONFORM, VERDICTS, ConformanceRecord

logger = logging.getLogger(__name__)


def default_workers() -> int:
    """物理核心数，取不到时为 1"""
    return psutil.cpu_count(logical=False) or 1


@dataclass
class SweepConfig:
    """
    批量核对配置

    属性:
        m_min, m_max: 每个 m_i 的取值范围
        n_min, n_max: 脊椎长度范围；n_min > n_max 表示空族
        monotone_only: 只保留非递减的 m
        use_bruteforce: 是否启用暴力枚举对照
        cap: 暴力枚举顶点数上限
        cond3_range: 条件 (3) 的检查区间，None 表示默认 [3, n]
        workers: 进程数，1 表示在当前进程内顺序执行
        run_theorem: 是否同时运行定理核对
        specs: 显式给出的实例列表 (来自输入文件)，给出时替代范围枚举
        progress: 是否在 stderr 显示进度条
    """
    m_min: int = 1
    m_max: int = 4
    n_min: int = 1
    n_max: int = 4
    monotone_only: bool = False
    use_bruteforce: bool = True
    cap: int = DEFAULT_BRUTEFORCE_CAP
    cond3_range: Optional[Tuple[int, int]] = None
    workers: int = 1
    run_theorem: bool = True
    specs: Optional[List[CaterpillarSpec]] = None
    progress: bool = False

    def max_vertex_count(self) -> int:
        if self.specs is not None:
            return max((s.vertex_count for s in self.specs), default=0)
        if self.n_min > self.n_max:
            return 0
        return self.n_max * (1 + self.m_max)

    def validate(self) -> None:
        """
        检查配置

        异常:
            ParameterError: 范围非正、m 范围为空、进程数非正，或启用暴力枚举时顶点数超过上限
        """
        for name in ("m_min", "m_max", "n_min", "n_max"):
            if getattr(self, name) < 1:
                raise ParameterError(f"{name} 必须为正整数: {getattr(self, name)}")
        if self.m_min > self.m_max:
            raise ParameterError(f"m 的范围为空: [{self.m_min}, {self.m_max}]")
        if self.workers < 1:
            raise ParameterError(f"进程数必须为正: {self.workers}")
        if self.cap > BRUTEFORCE_CEILING:
            raise ParameterError(f"暴力枚举上限不能超过 {BRUTEFORCE_CEILING}: {self.cap}")
        if self.use_bruteforce and self.max_vertex_count() > self.cap:
            raise ParameterError(
                f"最大顶点数 {self.max_vertex_count()} 超过暴力枚举上限 {self.cap}，"
                f"请关闭暴力枚举或缩小范围"
            )

    def to_dict(self) -> Dict:
        return {
            "m_range": [self.m_min, self.m_max],
            "n_range": [self.n_min, self.n_max],
            "monotone_only": self.monotone_only,
            "use_bruteforce": self.use_bruteforce,
            "cap": self.cap,
            "cond3_range": list(self.cond3_range) if self.cond3_range else None,
            "run_theorem": self.run_theorem,
            "explicit_specs": self.specs is not None,
        }


def enumerate_specs(config: SweepConfig) -> List[CaterpillarSpec]:
    """按 n、再按 m 字典序列出全部实例"""
    if config.specs is not None:
        specs = sorted(config.specs, key=lambda s: (s.n, s.m))
        if config.monotone_only:
            specs = [s for s in specs if s.is_non_decreasing]
        return specs
    specs = []
    values = range(config.m_min, config.m_max + 1)
    for n in range(config.n_min, config.n_max + 1):
        for m in itertools.product(values, repeat=n):
            spec = CaterpillarSpec(m)
            if config.monotone_only and not spec.is_non_decreasing:
                continue
            specs.append(spec)
    return specs


@dataclass
class InstanceResult:
    """单个实例的核对结果"""
    spec: CaterpillarSpec
    cross_validation: ConformanceRecord
    theorem: Optional[ConformanceRecord] = None

    @property
    def records(self) -> List[ConformanceRecord]:
        return [r for r in (self.cross_validation, self.theorem) if r is not None]

    @property
    def is_failure(self) -> bool:
        return any(r.is_failure for r in self.records)

    def to_row(self) -> Dict:
        """CSV 导出用的扁平行"""
        cv = self.cross_validation.observed
        modes = self.theorem.observed.get("p_mode") if self.theorem else None
        return {
            "spec": str(self.spec),
            "n": self.spec.n,
            "cross_validation": self.cross_validation.verdict,
            "theorem": self.theorem.verdict if self.theorem else "",
            "mode": " ".join(str(v) for v in modes) if modes else "",
            "k": cv["multiplicity"],
            "d": len(cv["indpoly"]) - 1,
        }


def _evaluate(task: Tuple[CaterpillarSpec, int, bool, Optional[Tuple[int, int]], bool]) -> InstanceResult:
    spec, cap, use_bruteforce, cond3_range, run_theorem = task
    cross = cross_validate_instance(spec, cap=cap, use_bruteforce=use_bruteforce)
    theorem = verify_theorem_instance(spec, cond3_range) if run_theorem else None
    return InstanceResult(spec, cross, theorem)


@dataclass
class SweepSummary:
    """按判定汇总的计数"""
    instances: int = 0
    cross_validation: Dict[str, int] = field(default_factory=lambda: {v: 0 for v in VERDICTS})
    theorem: Dict[str, int] = field(default_factory=lambda: {v: 0 for v in VERDICTS})
    nonconform_specs: List[str] = field(default_factory=list)

    def add(self, result: InstanceResult) -> None:
        self.instances += 1
        self.cross_validation[result.cross_validation.verdict] += 1
        if result.theorem is not None:
            self.theorem[result.theorem.verdict] += 1
        if result.is_failure:
            self.nonconform_specs.append(str(result.spec))

    @property
    def has_failures(self) -> bool:
        return bool(self.nonconform_specs)

    def to_dict(self) -> Dict:
        return {
            "instances": self.instances,
            "cross_validation": dict(self.cross_validation),
            "theorem": dict(self.theorem),
            "nonconform": len(self.nonconform_specs),
            "nonconform_specs": list(self.nonconform_specs),
        }


@dataclass
class SweepResult:
    config: SweepConfig
    results: List[InstanceResult]
    summary: SweepSummary

    def rows(self) -> List[Dict]:
        return [r.to_row() for r in self.results]


def _progress(it: Iterable, total: int, enabled: bool) -> Iterator:
    if not enabled:
        return iter(it)
    bar_format = '{l_bar}{bar}| {n_fmt}/{total_fmt} ({elapsed}<{remaining})'
    return iter(tqdm(it, total=total, desc="sweep", ncols=80, bar_format=bar_format))


def sweep_family(config: SweepConfig) -> SweepResult:
    """
    对一族实例运行批量核对

    参数:
        config: 批量核对配置

    返回:
        SweepResult: 按枚举顺序排列的逐实例结果与汇总

    异常:
        ParameterError: 配置无效
    """
    config.validate()
    specs = enumerate_specs(config)
    tasks = [(s, config.cap, config.use_bruteforce, config.cond3_range, config.run_theorem)
             for s in specs]
    logger.info(f"开始批量核对: {len(tasks)} 个实例，{config.workers} 个进程")

    summary = SweepSummary()
    results: List[InstanceResult] = []
    if config.workers == 1 or len(tasks) <= 1:
        for result in _progress(map(_evaluate, tasks), len(tasks), config.progress):
            results.append(result)
            summary.add(result)
    else:
        with multiprocessing.Pool(processes=config.workers) as pool:
            ordered = pool.imap(_evaluate, tasks, chunksize=max(1, len(tasks) // (config.workers * 8)))
            for result in _progress(ordered, len(tasks), config.progress):
                results.append(result)
                summary.add(result)

    logger.info(
        f"批量核对完成: {summary.instances} 个实例，"
        f"{summary.cross_validation[NONCONFORM]} 个交叉核对不一致，"
        f"{summary.theorem[NONCONFORM]} 个定理核对不一致"
    )
    return SweepResult(config=config, results=results, summary=summary)

