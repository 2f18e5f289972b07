"""
indcat - 毛毛虫树独立多项式工具

indcat 用精确整数运算计算树 (特别是毛毛虫树) 的独立多项式，对系数序列做单峰性与
左右占优分类，并把相关引理、命题与定理的结论逐项与计算结果核对。
"""

__version__ = "0.1.0"

# 导入子模块
from . import core
from . import verify
from . import reports
from . import data

__all__ = ["core", "verify", "reports", "data", "__version__"]
