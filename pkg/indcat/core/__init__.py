"""
indcat.core 包

这个包包含精确多项式运算、树与毛毛虫树的构造、独立多项式的三种算法、
系数序列形态分类以及毛毛虫闭式递推。
"""

from indcat.core import errors
from indcat.core import polyalg
from indcat.core import treegraph
from indcat.core import shape
from indcat.core import caterpoly

# 导出常用对象，方便直接导入
from indcat.core.polyalg import (
    Polynomial,
    mul_binomial_power,
    remove_binomial_factor,
)

from indcat.core.treegraph import (
    CaterpillarSpec,
    Tree,
    build_caterpillar,
    indpoly,
)

from indcat.core.shape import ShapeReport, analyze_shape

from indcat.core.caterpoly import (
    caterpillar_polys,
    check_conditions,
    predict_theorem,
)
