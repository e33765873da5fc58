"""切片正则多项式

f = f0 + f1 i + f2 j + f3 k，其中 f0..f3 为实系数多项式。
提供 *-乘积、共轭、对称化、配对/楔积算子、Hermitian 乘积、求值以及
切片保持分类器。
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence, Union

import numpy as np
from loguru import logger

from src.algebra.quaternion import (
    Frame,
    ImaginaryUnit,
    Quaternion,
    complete_basis,
    format_quaternion,
)
from src.algebra.realpoly import ONE, ZERO, RealPoly, format_realpoly
from src.errors import ZeroFunction
from src.runtime_config import tolerance

PolyLike = Union[RealPoly, Sequence[float]]


def _as_poly(value: PolyLike) -> RealPoly:
    return value if isinstance(value, RealPoly) else RealPoly(value)


@dataclass(frozen=True)
class SlicePoly:
    """四分量表示的切片正则多项式"""

    c0: RealPoly = field(default=ZERO)
    c1: RealPoly = field(default=ZERO)
    c2: RealPoly = field(default=ZERO)
    c3: RealPoly = field(default=ZERO)

    # ==================== 构造 ====================

    @classmethod
    def from_components(cls, c0: PolyLike = (), c1: PolyLike = (), c2: PolyLike = (), c3: PolyLike = ()) -> SlicePoly:
        return cls(_as_poly(c0), _as_poly(c1), _as_poly(c2), _as_poly(c3))

    @classmethod
    def constant(cls, q: Quaternion) -> SlicePoly:
        return cls.from_components((q.w,), (q.x,), (q.y,), (q.z,))

    @classmethod
    def real(cls, p: Union[RealPoly, float]) -> SlicePoly:
        return cls(p if isinstance(p, RealPoly) else RealPoly.constant(p))

    @classmethod
    def variable(cls) -> SlicePoly:
        """变量 q"""
        return cls(RealPoly((0.0, 1.0)))

    @classmethod
    def along(cls, p: RealPoly, axis: Union[ImaginaryUnit, Quaternion]) -> SlicePoly:
        """p · axis"""
        q = axis.axis if isinstance(axis, ImaginaryUnit) else axis
        return cls(p * q.w, p * q.x, p * q.y, p * q.z)

    @classmethod
    def from_right_coefficients(cls, coeffs: Sequence[Quaternion]) -> SlicePoly:
        """由右系数 Σ q^n a_n 构造"""
        return cls.from_components(
            [a.w for a in coeffs],
            [a.x for a in coeffs],
            [a.y for a in coeffs],
            [a.z for a in coeffs],
        )

    @classmethod
    def from_frame(cls, components: Sequence[RealPoly], frame: Union[Frame, Sequence[ImaginaryUnit]]) -> SlicePoly:
        """由标架分量 f0 + f1 I0 + f2 J0 + f3 K0 还原"""
        axes = (frame.I0, frame.J0, frame.K0) if isinstance(frame, Frame) else tuple(frame)
        result = cls.real(components[0])
        for p, axis in zip(components[1:], axes):
            result = result + cls.along(p, axis)
        return result

    # ==================== 基本属性 ====================

    @property
    def components(self) -> tuple[RealPoly, RealPoly, RealPoly, RealPoly]:
        return (self.c0, self.c1, self.c2, self.c3)

    @property
    def degree(self) -> int:
        return max(c.degree for c in self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def norm(self) -> float:
        return max(c.norm() for c in self.components)

    def to_right_coefficients(self) -> list[Quaternion]:
        """右系数列表 [a_0, ..., a_n]"""
        return [
            Quaternion(self.c0[n], self.c1[n], self.c2[n], self.c3[n])
            for n in range(self.degree + 1)
        ]

    def component_along(self, axis: ImaginaryUnit) -> RealPoly:
        """向量部分在 axis 方向上的分量 <f_v, axis>"""
        x, y, z = axis.vector
        return self.c1 * x + self.c2 * y + self.c3 * z

    def in_frame(self, frame: Union[Frame, Sequence[ImaginaryUnit]]) -> tuple[RealPoly, RealPoly, RealPoly, RealPoly]:
        """在正交基 1, I0, J0, K0 下的分量"""
        axes = (frame.I0, frame.J0, frame.K0) if isinstance(frame, Frame) else tuple(frame)
        return (self.c0, *(self.component_along(a) for a in axes))

    def in_slice(self, axis: ImaginaryUnit) -> bool:
        """f ∈ S_axis：向量部分平行于 axis（含实函数）"""
        J0, K0 = complete_basis(axis)
        scale = tolerance().eps_abs + tolerance().eps_rel * self.norm()
        return self.component_along(J0).norm() <= scale and self.component_along(K0).norm() <= scale

    def is_real(self) -> bool:
        """f ∈ S_R：三个虚分量为零"""
        scale = tolerance().eps_abs + tolerance().eps_rel * self.norm()
        return all(c.norm() <= scale for c in (self.c1, self.c2, self.c3))

    # ==================== 运算 ====================

    def __add__(self, other: SlicePoly) -> SlicePoly:
        if not isinstance(other, SlicePoly):
            return NotImplemented
        return SlicePoly(*(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: SlicePoly) -> SlicePoly:
        if not isinstance(other, SlicePoly):
            return NotImplemented
        return SlicePoly(*(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> SlicePoly:
        return SlicePoly(*(-a for a in self.components))

    def __mul__(self, other: Union[SlicePoly, RealPoly, Quaternion, float, int]) -> SlicePoly:
        """*-乘积；实多项式与实数按分量相乘"""
        if isinstance(other, SlicePoly):
            return star_mul(self, other)
        if isinstance(other, Quaternion):
            return star_mul(self, SlicePoly.constant(other))
        if isinstance(other, (RealPoly, int, float)):
            return SlicePoly(*(a * other for a in self.components))
        return NotImplemented

    def __rmul__(self, other: Union[RealPoly, Quaternion, float, int]) -> SlicePoly:
        if isinstance(other, Quaternion):
            return star_mul(SlicePoly.constant(other), self)
        if isinstance(other, (RealPoly, int, float)):
            return SlicePoly(*(a * other for a in self.components))
        return NotImplemented

    def conj(self) -> SlicePoly:
        return star_conj(self)

    def symmetrized(self) -> RealPoly:
        return symmetrized(self)

    def __call__(self, p: Quaternion) -> Quaternion:
        return evaluate(self, p)

    def isclose(self, other: SlicePoly, rel: Optional[float] = None, abs_: Optional[float] = None) -> bool:
        """四个分量共用同一相对尺度比较"""
        tol = tolerance()
        rel = tol.eps_rel if rel is None else rel
        abs_ = tol.eps_abs if abs_ is None else abs_
        limit = abs_ + rel * max(self.norm(), other.norm())
        for a, b in zip(self.components, other.components):
            size = max(len(a), len(b))
            if any(abs(a[n] - b[n]) > limit for n in range(size)):
                return False
        return True

    def __str__(self) -> str:
        return format_slicepoly(self)


# ==================== *-代数 ====================


def star_mul(f: SlicePoly, g: SlicePoly) -> SlicePoly:
    """*-乘积（分量公式）"""
    f0, f1, f2, f3 = f.components
    g0, g1, g2, g3 = g.components
    return SlicePoly(
        f0 * g0 - f1 * g1 - f2 * g2 - f3 * g3,
        f0 * g1 + g0 * f1 + f2 * g3 - f3 * g2,
        f0 * g2 + g0 * f2 + f3 * g1 - f1 * g3,
        f0 * g3 + g0 * f3 + f1 * g2 - f2 * g1,
    )


def star_conj(f: SlicePoly) -> SlicePoly:
    """共轭 f^c = f0 - f_v"""
    return SlicePoly(f.c0, -f.c1, -f.c2, -f.c3)


def symmetrized(f: SlicePoly) -> RealPoly:
    """对称化 f^s = f * f^c = f0² + f1² + f2² + f3²"""
    return f.c0 * f.c0 + f.c1 * f.c1 + f.c2 * f.c2 + f.c3 * f.c3


def real_part(f: SlicePoly) -> RealPoly:
    return f.c0


def vector_part(f: SlicePoly) -> SlicePoly:
    return SlicePoly(ZERO, f.c1, f.c2, f.c3)


def pairing(f: SlicePoly, g: SlicePoly) -> RealPoly:
    """<f, g>_* = Σ f_l g_l"""
    return f.c0 * g.c0 + f.c1 * g.c1 + f.c2 * g.c2 + f.c3 * g.c3


def wedge(f: SlicePoly, g: SlicePoly) -> SlicePoly:
    """f ∧ g = (f*g - g*f)/2，即虚分量的叉积"""
    return SlicePoly(
        ZERO,
        f.c2 * g.c3 - f.c3 * g.c2,
        f.c3 * g.c1 - f.c1 * g.c3,
        f.c1 * g.c2 - f.c2 * g.c1,
    )


def hermitian(f: SlicePoly, g: SlicePoly) -> SlicePoly:
    """Hermitian 乘积 H(f, g) = f * g^c"""
    return star_mul(f, star_conj(g))


def evaluate(f: SlicePoly, p: Quaternion) -> Quaternion:
    """求值 Σ p^n a_n（右系数形式，Horner）"""
    result = Quaternion()
    for a in reversed(f.to_right_coefficients()):
        result = p * result + a
    return result


def rdependent(f: SlicePoly, g: SlicePoly) -> bool:
    """f, g 在实多项式上线性相关：所有 2x2 分量子式为零"""
    fc, gc = f.components, g.components
    scale = max(f.norm() * g.norm(), 1.0)
    limit = tolerance().eps_abs + tolerance().eps_rel * scale
    for a in range(4):
        for b in range(a + 1, 4):
            if (fc[a] * gc[b] - fc[b] * gc[a]).norm() > limit:
                return False
    return True


# ==================== 切片分类 ====================


class SliceVerdict(str, Enum):
    ALL_SLICES = "all_slices"
    ONE_SLICE = "one_slice"
    NO_SLICE = "no_slice"


@dataclass(frozen=True)
class SliceClass:
    """切片保持判定结果"""

    verdict: SliceVerdict
    axis: Optional[ImaginaryUnit] = None

    @property
    def is_all(self) -> bool:
        return self.verdict is SliceVerdict.ALL_SLICES

    @property
    def is_one(self) -> bool:
        return self.verdict is SliceVerdict.ONE_SLICE

    @property
    def is_none(self) -> bool:
        return self.verdict is SliceVerdict.NO_SLICE

    def preserves(self, axis: ImaginaryUnit) -> bool:
        """是否保持 C_axis"""
        return self.is_all or (self.is_one and self.axis.same_slice(axis))


def classify(f: SlicePoly) -> SliceClass:
    """切片保持分类

    - AllSlices: 三个虚分量为零
    - OneSlice(axis): 虚分量系数矩阵数值秩为 1
    - NoSlice: 其他

    Raises:
        ZeroFunction: f 恒为零
    """
    if f.is_zero():
        raise ZeroFunction("Cannot classify the zero function")

    tol = tolerance()
    size = f.degree + 1
    matrix = np.array([[c[n] for n in range(size)] for c in (f.c1, f.c2, f.c3)], dtype=float)
    if np.max(np.abs(matrix)) <= tol.eps_abs + tol.eps_rel * f.norm():
        return SliceClass(SliceVerdict.ALL_SLICES)

    u, s, _ = np.linalg.svd(matrix, full_matrices=False)
    if len(s) < 2 or s[1] <= tol.eps_rank * s[0]:
        axis = ImaginaryUnit.from_vector(tuple(float(v) for v in u[:, 0])).canonical()
        return SliceClass(SliceVerdict.ONE_SLICE, axis)
    return SliceClass(SliceVerdict.NO_SLICE)


def bilinear_slice_test(f: SlicePoly, g: SlicePoly, I0: ImaginaryUnit) -> bool:
    """<f, M0 * g^c>_* ≡ 0 对 I0 正交补中的 M0 = J0, K0 均成立

    与 classify(f*g) 的结论交叉核对，不一致时记录警告
    """
    J0, K0 = complete_basis(I0)
    gc = star_conj(g)
    limit = tolerance().eps_abs + tolerance().eps_rel * max(f.norm() * g.norm(), 1.0)
    result = all(
        pairing(f, star_mul(SlicePoly.constant(M0.axis), gc)).norm() <= limit for M0 in (J0, K0)
    )

    product = star_mul(f, g)
    if not product.is_zero():
        expected = classify(product).preserves(I0)
        if expected != result:
            logger.warning(f"双线性判据与分类器不一致: 判据={result}, 分类={expected}")
    return result


# ==================== 格式化 ====================


def format_slicepoly(f: SlicePoly) -> str:
    """格式化为 "(q^2 - 1) + (2q)i" 形式"""
    if f.is_zero():
        return "0"
    parts = []
    for p, unit in zip(f.components, ("", "i", "j", "k")):
        if p.is_zero():
            continue
        text = format_realpoly(p)
        if unit and p.degree == 0:
            parts.append(format_quaternion(Quaternion(0.0, *(p[0] if u == unit else 0.0 for u in "ijk"))))
        elif unit:
            parts.append(f"({text}){unit}")
        else:
            parts.append(text)
    text = parts[0]
    for part in parts[1:]:
        text += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
    return text


ONE_POLY = SlicePoly(ONE)
