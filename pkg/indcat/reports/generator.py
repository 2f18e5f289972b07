"""
indcat - 报告生成模块

本模块把核对记录和批量核对结果写成 JSON 文档、JSON 行流或 CSV 表格。
系数一律以十进制字符串输出，任意长度的整数都能原样保留。
"""

import json
import logging
from pathlib import Path
from typing import IO, Dict, Iterable, List, Optional, Union

import pandas as pd

from indcat.verify.records import ConformanceRecord, count_verdicts
from indcat.verify.sweep import SweepResult

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["spec", "n", "cross_validation", "theorem", "mode", "k", "d"]
RECORD_COLUMNS = ["check_name", "verdict", "seed", "inputs", "findings"]


def to_json(document: Union[Dict, List]) -> str:
    """固定键顺序与缩进的 JSON 文本，相同输入得到逐字节相同的输出"""
    return json.dumps(document, ensure_ascii=False, indent=2)


def records_document(records: List[ConformanceRecord]) -> Dict:
    """
    一组核对记录的 JSON 文档

    参数:
        records: 核对记录

    返回:
        Dict: {"records": [...], "summary": {判定: 计数}}
    """
    return {
        "records": [r.to_dict() for r in records],
        "summary": count_verdicts(records),
    }


def sweep_lines(result: SweepResult) -> Iterable[str]:
    """逐实例一行 {"type": "record", ...}，最后一行为 {"type": "summary", ...}"""
    for item in result.results:
        yield json.dumps({
            "type": "record",
            "spec": item.spec.to_dict(),
            "cross_validation": item.cross_validation.to_dict(),
            "theorem": item.theorem.to_dict() if item.theorem else None,
        }, ensure_ascii=False)
    yield json.dumps({
        "type": "summary",
        "config": result.config.to_dict(),
        **result.summary.to_dict(),
    }, ensure_ascii=False)


def write_sweep_jsonl(result: SweepResult, target: Union[str, Path, IO[str]]) -> None:
    """
    把批量核对结果写成 JSON 行格式

    参数:
        result: 批量核对结果
        target: 文件路径或已打开的文本流

    异常:
        OSError: 输出路径无法写入
    """
    if isinstance(target, (str, Path)):
        path = Path(target)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            for line in sweep_lines(result):
                f.write(line + "\n")
        logger.info(f"批量核对结果已写入 {path}")
        return
    for line in sweep_lines(result):
        target.write(line + "\n")


def sweep_dataframe(result: SweepResult) -> pd.DataFrame:
    """(spec, 判定, 峰位, k, d) 表格"""
    return pd.DataFrame(result.rows(), columns=CSV_COLUMNS)


def records_dataframe(records: List[ConformanceRecord]) -> pd.DataFrame:
    rows = []
    for r in records:
        rows.append({
            "check_name": r.check_name,
            "verdict": r.verdict,
            "seed": "" if r.seed is None else r.seed,
            "inputs": json.dumps(r.inputs, ensure_ascii=False),
            "findings": "; ".join(r.findings),
        })
    return pd.DataFrame(rows, columns=RECORD_COLUMNS)


def write_csv(frame: pd.DataFrame, target: Optional[Union[str, Path, IO[str]]] = None) -> str:
    """
    写出 CSV

    参数:
        frame: 表格
        target: 文件路径或文本流；为 None 时只返回文本

    返回:
        str: CSV 文本
    """
    text = frame.to_csv(index=False, lineterminator="\n")
    if target is None:
        return text
    if isinstance(target, (str, Path)):
        path = Path(target)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    else:
        target.write(text)
    return text
