"""代数基础模块

四元数、虚单位与标架，实系数多项式，以及实多项式求根。

模块结构：
- quaternion: 四元数运算、虚单位、适配标架
- realpoly: 实系数多项式（S_R 的多项式层面）
- roots: Aberth-Ehrlich 求根与重根处理

使用示例：
    from src.algebra import I_UNIT, Quaternion, RealPoly, adapted_frame, proots

    p = Quaternion(1, 2, 3, 4)
    roots = proots(RealPoly((1.0, 0.0, 1.0)))
"""

from .quaternion import (
    I_UNIT,
    J_UNIT,
    K_UNIT,
    ONE,
    QI,
    QJ,
    QK,
    Frame,
    ImaginaryUnit,
    Quaternion,
    adapted_frame,
    complete_basis,
    format_quaternion,
    qconj,
    qinv,
    qmul,
    qnorm,
)
from .realpoly import (
    RealPoly,
    format_realpoly,
    padd,
    pdivides,
    pdivrem,
    pexact_div,
    pgcd,
    pmul,
    pratio,
    psub,
)
from .roots import ComplexPair, RealRoot, RootSet, nonneg_even_real_zeros, proots, sqrt_if_square

__all__ = [
    # 四元数
    "Quaternion",
    "ONE",
    "QI",
    "QJ",
    "QK",
    "qmul",
    "qconj",
    "qnorm",
    "qinv",
    "format_quaternion",
    # 虚单位与标架
    "ImaginaryUnit",
    "I_UNIT",
    "J_UNIT",
    "K_UNIT",
    "Frame",
    "adapted_frame",
    "complete_basis",
    # 实多项式
    "RealPoly",
    "padd",
    "psub",
    "pmul",
    "pdivrem",
    "pdivides",
    "pexact_div",
    "pgcd",
    "pratio",
    "format_realpoly",
    # 求根
    "RealRoot",
    "ComplexPair",
    "RootSet",
    "proots",
    "nonneg_even_real_zeros",
    "sqrt_if_square",
]
