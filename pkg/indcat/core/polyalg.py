"""
多项式运算模块

本模块实现任意精度整数系数的稠密多项式运算，包括递推公式中反复出现的
(1+x) 因子操作：乘以 (1+x)^t、求 (1+x) 的最大重数并做精确除法。

系数以 Python 原生 int 存储，全部运算都是精确的，不使用浮点数。
"""

from dataclasses import dataclass
from functools import lru_cache
from operator import index
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from indcat.core.errors import ZeroPolynomialError


def _normalize(coeffs: Iterable[int]) -> Tuple[int, ...]:
    """去掉末尾的零系数；零多项式表示为 (0,)"""
    terms = [index(c) for c in coeffs]
    while terms and terms[-1] == 0:
        terms.pop()
    return tuple(terms) if terms else (0,)


@dataclass(frozen=True)
class Polynomial:
    """
    稠密整数多项式

    属性:
        coeffs: 系数元组，下标 i 对应 x^i 的系数；构造后不可变
    """
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    @classmethod
    def from_strings(cls, values: Iterable[str]) -> "Polynomial":
        """从十进制字符串列表构造 (JSON 外部格式)"""
        return cls(tuple(int(v) for v in values))

    def to_strings(self) -> List[str]:
        """序列化为十进制字符串列表，避免下游 64 位截断"""
        return [str(c) for c in self.coeffs]

    @property
    def degree(self) -> int:
        # 零多项式的次数记为 0，用 is_zero 区分
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return add(self, other)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return sub(self, other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: Union["Polynomial", int]) -> "Polynomial":
        if isinstance(other, Polynomial):
            return mul(self, other)
        k = index(other)
        return Polynomial(tuple(c * k for c in self.coeffs))

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "Polynomial":
        """乘以 x^k"""
        if k < 0:
            raise ValueError("shift 的位移必须非负")
        if self.is_zero:
            return self
        return Polynomial((0,) * k + self.coeffs)

    def reversed(self) -> "Polynomial":
        """系数序列反转，x^d p(1/x)"""
        return Polynomial(self.coeffs[::-1])

    def __str__(self) -> str:
        return ",".join(self.to_strings())


Polynomial.ZERO = Polynomial((0,))
Polynomial.ONE = Polynomial((1,))
Polynomial.X = Polynomial((0, 1))


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    """
    逐系数相加

    参数:
        p, q: 加数

    返回:
        Polynomial: 和，次数不超过 max(deg p, deg q)
    """
    n = max(len(p), len(q))
    return Polynomial(tuple(p[i] + q[i] for i in range(n)))


def sub(p: Polynomial, q: Polynomial) -> Polynomial:
    """逐系数相减，用于带符号的差分计算"""
    n = max(len(p), len(q))
    return Polynomial(tuple(p[i] - q[i] for i in range(n)))


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """
    精确卷积

    参数:
        p, q: 因子

    返回:
        Polynomial: 乘积；二者均非零时 deg = deg p + deg q
    """
    if p.is_zero or q.is_zero:
        return Polynomial.ZERO
    result = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            result[i + j] += a * b
    return Polynomial(tuple(result))


@lru_cache(maxsize=256)
def binomial_row(t: int) -> Tuple[int, ...]:
    """
    (1+x)^t 的系数行 C(t,0..t)，按帕斯卡递推逐行计算

    参数:
        t: 非负整数

    返回:
        Tuple[int, ...]: 二项式系数
    """
    if t < 0:
        raise ValueError(f"二项式幂次必须非负: {t}")
    row = [1]
    for _ in range(t):
        row = [a + b for a, b in zip(row + [0], [0] + row)]
    return tuple(row)


def binomial(t: int, i: int) -> int:
    """C(t, i)；i 超出 0..t 时为 0"""
    if i < 0 or i > t:
        return 0
    return binomial_row(t)[i]


def mul_binomial_power(q: Polynomial, t: int) -> Polynomial:
    """
    计算 (1+x)^t q(x)

    结果第 k 个系数为 sum_i C(t,i) q_{k-i}。

    参数:
        q: 多项式
        t: 非负整数幂次

    返回:
        Polynomial: 乘积
    """
    return mul(q, Polynomial(binomial_row(t)))


def _divide_by_one_plus_x(coeffs: Sequence[int]) -> Tuple[List[int], int]:
    """在根 -1 处做综合除法，返回 (商的系数, 余数)"""
    d = len(coeffs) - 1
    if d == 0:
        return [], coeffs[0]
    quotient = [0] * d
    quotient[d - 1] = coeffs[d]
    for k in range(d - 1, 0, -1):
        quotient[k - 1] = coeffs[k] - quotient[k]
    remainder = coeffs[0] - quotient[0]
    return quotient, remainder


def remove_binomial_factor(p: Polynomial) -> Tuple[int, Polynomial]:
    """
    求整除 p 的 (1+x) 的最高次幂

    参数:
        p: 非零多项式

    返回:
        Tuple[int, Polynomial]: (重数 k, 商 q)，满足 p = (1+x)^k q 且 q(-1) != 0

    异常:
        ZeroPolynomialError: p 为零多项式
    """
    if p.is_zero:
        raise ZeroPolynomialError("零多项式的 (1+x) 重数无定义")
    multiplicity = 0
    current = list(p.coeffs)
    while len(current) > 1:
        quotient, remainder = _divide_by_one_plus_x(current)
        if remainder != 0:
            break
        current = quotient
        multiplicity += 1
    return multiplicity, Polynomial(tuple(current))


def evaluate_at_integer(p: Polynomial, x0: int) -> int:
    """Horner 法精确求值"""
    value = 0
    for c in reversed(p.coeffs):
        value = value * x0 + c
    return value
