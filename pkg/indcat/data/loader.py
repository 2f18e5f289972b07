"""
indcat - 数据加载器

本模块负责读取配置文件、环境变量覆盖以及批量核对的实例列表文件。
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from indcat.core.errors import ParameterError
from indcat.core.treegraph import (
    BRUTEFORCE_CEILING,
    DEFAULT_BRUTEFORCE_CAP,
    DEFAULT_CHUNK_BITS,
    CaterpillarSpec,
)

# 设置日志
logger = logging.getLogger(__name__)

CONFIG_PATH = Path("config") / "indcat.json"
CAP_ENV_VAR = "INDCAT_CAP"

DEFAULT_SETTINGS: Dict[str, Any] = {
    "bruteforce_cap": DEFAULT_BRUTEFORCE_CAP,
    "bruteforce_ceiling": BRUTEFORCE_CEILING,
    "cond3_start": 3,
    "workers": 1,
    "log_dir": "logs",
    "bruteforce_chunk_bits": DEFAULT_CHUNK_BITS,
}


def load_settings(path: Optional[Union[str, Path]] = None,
                  environ: Optional[Mapping[str, str]] = None) -> Dict[str, Any]:
    """
    加载设置: 默认值 <- 配置文件 <- 环境变量 INDCAT_CAP

    配置文件缺失或损坏时记录日志并使用默认值。

    参数:
        path: 配置文件路径，默认 config/indcat.json
        environ: 环境变量映射，默认 os.environ

    返回:
        Dict[str, Any]: 设置

    异常:
        ParameterError: 上限超过硬上限，或 INDCAT_CAP 不是整数
    """
    settings = dict(DEFAULT_SETTINGS)
    config_path = Path(path) if path is not None else CONFIG_PATH
    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            loaded = json.load(f)
        if not isinstance(loaded, dict):
            raise ValueError("配置文件的顶层必须是对象")
        unknown = sorted(set(loaded) - set(DEFAULT_SETTINGS))
        if unknown:
            logger.warning(f"忽略未知的配置项: {unknown}")
        settings.update({k: v for k, v in loaded.items() if k in DEFAULT_SETTINGS})
    except FileNotFoundError:
        logger.debug(f"未找到配置文件 {config_path}，使用默认设置")
    except Exception as e:
        logger.error(f"加载配置文件失败: {str(e)}")

    environ = os.environ if environ is None else environ
    raw_cap = environ.get(CAP_ENV_VAR)
    if raw_cap:
        try:
            settings["bruteforce_cap"] = int(raw_cap)
        except ValueError:
            raise ParameterError(f"环境变量 {CAP_ENV_VAR} 必须是整数: {raw_cap}")

    check_cap(settings["bruteforce_cap"], settings["bruteforce_ceiling"])
    return settings


def check_cap(cap: int, ceiling: int = BRUTEFORCE_CEILING) -> int:
    """暴力枚举上限必须在 [1, ceiling] 内，ceiling 本身不能超过 30"""
    ceiling = min(ceiling, BRUTEFORCE_CEILING)
    if not 1 <= cap <= ceiling:
        raise ParameterError(f"暴力枚举上限必须在 1..{ceiling} 之间: {cap}")
    return cap


def parse_int_list(text: str) -> List[int]:
    """
    解析逗号分隔的整数列表，例如 "1,6,7,4,1"

    异常:
        ValueError: 含有非整数项或为空
    """
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p == "" for p in parts):
        raise ValueError(f"整数列表格式错误: {text!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"整数列表格式错误: {text!r}")


def parse_range(text: str) -> Tuple[int, int]:
    """解析 "A,B" 形式的闭区间"""
    values = parse_int_list(text)
    if len(values) != 2:
        raise ValueError(f"区间应为 A,B 两个整数: {text!r}")
    return values[0], values[1]


def parse_specs(lines: List[str]) -> List[CaterpillarSpec]:
    """
    解析实例列表: 每行一个逗号分隔的 m，空行与 # 之后的内容忽略

    异常:
        ValueError: 某一行无法解析，消息中带行号
    """
    specs = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            specs.append(CaterpillarSpec(tuple(parse_int_list(line))))
        except ValueError as e:
            raise ValueError(f"第 {lineno} 行无法解析: {raw.strip()} ({e})") from e
    return specs


def load_spec_file(path: Union[str, Path]) -> List[CaterpillarSpec]:
    """
    读取实例列表文件

    异常:
        OSError: 文件无法读取
        ValueError: 内容格式错误
    """
    with open(path, 'r', encoding='utf-8') as f:
        specs = parse_specs(f.read().splitlines())
    logger.info(f"从 {path} 读取 {len(specs)} 个实例")
    return specs
