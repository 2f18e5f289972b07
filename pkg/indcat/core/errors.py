"""
indcat.core 异常定义

所有库内异常都继承自 IndcatError，命令行层据此把输入错误映射为退出码 2。
"""

from typing import Any


class IndcatError(Exception):
    """indcat 所有异常的基类"""


class ZeroPolynomialError(IndcatError, ValueError):
    """零多项式没有定义 (1+x) 的重数"""


class ShapeDomainError(IndcatError, ValueError):
    """形态分类只接受非零、系数非负的计数序列"""


class ParameterError(IndcatError, ValueError):
    """参数组合不可行或超出允许范围"""


class EnumerationSizeError(IndcatError, ValueError):
    """
    暴力枚举的顶点数超过上限

    属性:
        vertex_count: 树的顶点数
        cap: 当前生效的枚举上限
    """

    def __init__(self, vertex_count: int, cap: int):
        self.vertex_count = vertex_count
        self.cap = cap
        super().__init__(
            f"顶点数 {vertex_count} 超过暴力枚举上限 {cap}，请改用 treedp 或 deletion 方法"
        )


class IntegrityError(IndcatError):
    """
    递推公式与独立因式分解结果不一致

    属性:
        what: 出错的量 (例如 "k_3")
        expected: 递推给出的值
        observed: 因式分解得到的值
    """

    def __init__(self, what: str, expected: Any, observed: Any):
        self.what = what
        self.expected = expected
        self.observed = observed
        super().__init__(f"{what} 不一致: 递推={expected!r}, 实测={observed!r}")
