"""零点结构

- 球面限制 f(α + Jβ) = A + J B
- 零点分类：原点、实零点、球面零点（球面重数 + 孤立点重数）
- 按球面逐层剥离的因式分解
- 无非实孤立零点时的多项式分解 q^m · R · S · h
- 由 μ 构造 h ∈ S_I0 使 h^s = μ
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from loguru import logger

from src.algebra.quaternion import ImaginaryUnit, Quaternion, qinv
from src.algebra.realpoly import ONE, RealPoly, pexact_div
from src.algebra.roots import nonneg_even_real_zeros, proots
from src.errors import (
    HasIsolatedNonRealZeros,
    InconsistentSphere,
    InvalidSphere,
    NotRepresentable,
    ZeroFunction,
)
from src.runtime_config import tolerance
from src.slice.slicepoly import SlicePoly, star_mul, symmetrized


@dataclass(frozen=True)
class SphereRestriction:
    """f 在球面 S_{α+Iβ} 上的限制 f(α + Jβ) = A + J B"""

    alpha: float
    beta: float
    A: Quaternion
    B: Quaternion

    def at(self, J: ImaginaryUnit) -> Quaternion:
        return self.A + J.axis * self.B

    def vanishes(self, scale: float) -> bool:
        """A = B = 0（整个球面为零点）"""
        limit = tolerance().eps_zero * max(scale, 1.0)
        return self.A.norm() <= limit and self.B.norm() <= limit

    def zero_unit(self) -> Optional[Quaternion]:
        """唯一零点对应的 J = -A B^{-1}；B = 0 时返回 None"""
        if self.B.norm() == 0.0:
            return None
        return -(self.A * qinv(self.B))


@dataclass(frozen=True)
class IsolatedZero:
    point: Quaternion
    multiplicity: int


@dataclass(frozen=True)
class SphereZero:
    """球面零点：球面重数为偶数，孤立点（若有）给出第一个剥离点"""

    alpha: float
    beta: float
    spherical_mult: int
    isolated: Optional[IsolatedZero] = None


@dataclass(frozen=True)
class ZeroStructure:
    origin_mult: int = 0
    real_zeros: tuple[tuple[float, int], ...] = ()
    spheres: tuple[SphereZero, ...] = field(default_factory=tuple)

    @property
    def symmetrized_degree(self) -> int:
        """与 f^s 次数对应的零点计数"""
        total = self.origin_mult + sum(m for _, m in self.real_zeros)
        total += sum(s.spherical_mult + (s.isolated.multiplicity if s.isolated else 0) for s in self.spheres)
        return 2 * total

    @property
    def has_isolated_non_real(self) -> bool:
        return any(s.isolated is not None for s in self.spheres)


# ==================== 基本工具 ====================


def _evaluation_scale(f: SlicePoly, radius: float) -> float:
    """Σ |a_n| r^n，作为零值判定的参照量"""
    return sum(a.norm() * radius**n for n, a in enumerate(f.to_right_coefficients()))


def restrict_to_sphere(f: SlicePoly, alpha: float, beta: float) -> SphereRestriction:
    """计算 A, B 使 f(α + Jβ) = A + J B 对所有虚单位 J 成立

    (α + Jβ)^n = c_n + J d_n，c_{n+1} = α c_n - β d_n，d_{n+1} = β c_n + α d_n

    Raises:
        InvalidSphere: beta <= 0
    """
    if beta <= 0:
        raise InvalidSphere(f"Sphere radius must be positive, got beta={beta}")

    A, B = Quaternion(), Quaternion()
    c, d = 1.0, 0.0
    for a in f.to_right_coefficients():
        A = A + a * c
        B = B + a * d
        c, d = alpha * c - beta * d, beta * c + alpha * d
    return SphereRestriction(alpha, beta, A, B)


def left_divide_linear(f: SlicePoly, p: Quaternion) -> tuple[SlicePoly, Quaternion]:
    """左除线性因子: f = (q - p) * g + r

    b_{n-1} = a_n，b_{k-1} = a_k + p b_k，r = a_0 + p b_0；r = f(p)
    """
    a = f.to_right_coefficients()
    if not a:
        raise ZeroFunction("Cannot divide the zero function")
    n = len(a) - 1
    b = [Quaternion()] * max(n, 0)
    carry = Quaternion()
    for k in range(n, 0, -1):
        carry = a[k] + p * carry
        b[k - 1] = carry
    remainder = a[0] + p * (b[0] if b else Quaternion())
    return SlicePoly.from_right_coefficients(b), remainder


def _sphere_factor(alpha: float, beta: float) -> RealPoly:
    """(q - α)² + β²"""
    return RealPoly((alpha * alpha + beta * beta, -2.0 * alpha, 1.0))


def _divide_real(f: SlicePoly, p: RealPoly) -> Optional[SlicePoly]:
    """按分量整除实多项式"""
    parts = [c if c.is_zero() else pexact_div(c, p) for c in f.components]
    if any(part is None for part in parts):
        return None
    return SlicePoly(*parts)


def _valid_unit(J: Quaternion) -> bool:
    drift = tolerance().eps_unit
    return abs(J.w) <= drift and abs(J.norm() - 1.0) <= drift


# ==================== 球面剥离 ====================


def _peel_sphere(
    f: SlicePoly, alpha: float, beta: float, expected_isolated: Optional[int] = None
) -> tuple[int, list[Quaternion], SlicePoly]:
    """在一个球面上先剥离球面因子，再剥离孤立线性因子

    Args:
        f: 待分解函数
        alpha: 球心实部
        beta: 球面半径
        expected_isolated: 由 f^s 推出的孤立因子个数；为 None 时剥到无零点为止

    Returns:
        (m, points, g)，f = [(q-α)²+β²]^m (q-p1)*...*(q-pn)*g
    """
    radius = abs(alpha) + beta
    factor = _sphere_factor(alpha, beta)

    m = 0
    g = f
    while not g.is_zero() and g.degree >= 2:
        restriction = restrict_to_sphere(g, alpha, beta)
        if not restriction.vanishes(_evaluation_scale(g, radius)):
            break
        quotient = _divide_real(g, factor)
        if quotient is None:
            break
        g, m = quotient, m + 1

    points: list[Quaternion] = []
    limit = g.degree if expected_isolated is None else expected_isolated
    while len(points) < limit:
        restriction = restrict_to_sphere(g, alpha, beta)
        J = restriction.zero_unit()
        if J is None or not _valid_unit(J):
            break
        p = Quaternion(alpha) + J * beta
        quotient, remainder = left_divide_linear(g, p)
        if remainder.norm() > tolerance().eps_zero * max(_evaluation_scale(g, radius), 1.0):
            break
        points.append(p)
        g = quotient

    if expected_isolated is not None and len(points) != expected_isolated:
        logger.error(
            f"球面 ({alpha:.6g}, {beta:.6g}) 上孤立零点提取失败: 期望 {expected_isolated}，得到 {len(points)}"
        )
        raise InconsistentSphere(
            f"f^s vanishes on the sphere ({alpha}, {beta}) but only {len(points)} of "
            f"{expected_isolated} isolated factors could be extracted"
        )
    return m, points, g


def _real_zero_multiplicity(f: SlicePoly, x: float, cap: int) -> tuple[int, SlicePoly]:
    """实点 x 处的重数：重复左除 (q - x)"""
    g = f
    k = 0
    p = Quaternion(x)
    while k < cap:
        quotient, remainder = left_divide_linear(g, p)
        if remainder.norm() > tolerance().eps_zero * max(_evaluation_scale(g, abs(x)), 1.0):
            break
        g, k = quotient, k + 1
    return k, g


def zero_structure(f: SlicePoly) -> ZeroStructure:
    """零点分类

    候选球面与实零点全部来自 f^s 的根。

    Raises:
        ZeroFunction: f 恒为零
        InconsistentSphere: f^s 在球面上为零但无法提取孤立零点
    """
    if f.is_zero():
        raise ZeroFunction("zero_structure requires a nonzero function")

    mu = symmetrized(f)
    roots = proots(mu)

    origin = 0
    reals: list[tuple[float, int]] = []
    g = f
    for root in roots.real_roots:
        # 实零点 x 在 f 中的重数是其在 f^s 中重数的一半
        expected = root.multiplicity // 2
        k, g = _real_zero_multiplicity(g, root.value, expected)
        if k != expected:
            logger.warning(f"实零点 {root.value:.6g} 重数不一致: 左除得到 {k}，f^s 给出 {expected}")
        if root.value == 0.0:
            origin = k
        elif k:
            reals.append((root.value, k))

    spheres: list[SphereZero] = []
    for pair in roots.complex_pairs:
        m, points, _ = _peel_sphere(f, pair.alpha, pair.beta)
        isolated_count = pair.multiplicity - 2 * m
        if isolated_count != len(points):
            m, points, _ = _peel_sphere(f, pair.alpha, pair.beta, expected_isolated=isolated_count)
        isolated = IsolatedZero(points[0], len(points)) if points else None
        spheres.append(SphereZero(pair.alpha, pair.beta, 2 * m, isolated))
        logger.debug(f"球面 ({pair.alpha:.6g}, {pair.beta:.6g}): 球面重数 {2 * m}，孤立重数 {len(points)}")

    structure = ZeroStructure(origin, tuple(reals), tuple(spheres))
    if structure.symmetrized_degree != mu.degree:
        logger.error(f"零点计数与 f^s 次数不符: {structure.symmetrized_degree} != {mu.degree}")
        raise InconsistentSphere("Zero multiplicities do not account for the degree of f^s")
    return structure


def factor_on_sphere(f: SlicePoly, alpha: float, beta: float) -> tuple[int, list[Quaternion], SlicePoly]:
    """在给定球面上分解 f = [(q-α)²+β²]^m (q-p1)*...*(q-pn)*g

    g 在球面上无零点，且相邻点满足 p_ν ≠ p_{ν+1}^c

    Raises:
        ZeroFunction: f 恒为零
        InvalidSphere: beta <= 0
    """
    if f.is_zero():
        raise ZeroFunction("factor_on_sphere requires a nonzero function")
    if beta <= 0:
        raise InvalidSphere(f"Sphere radius must be positive, got beta={beta}")
    return _peel_sphere(f, alpha, beta)


def reassemble_on_sphere(alpha: float, beta: float, m: int, points: list[Quaternion], g: SlicePoly) -> SlicePoly:
    """由分解结果重新相乘"""
    result = SlicePoly.real(_sphere_factor(alpha, beta) ** m)
    for p in points:
        result = star_mul(result, SlicePoly.from_right_coefficients([-p, Quaternion(1.0)]))
    return star_mul(result, g)


def polynomial_weierstrass(f: SlicePoly) -> tuple[int, RealPoly, RealPoly, SlicePoly]:
    """无非实孤立零点时分解 f = q^m · R · S · h

    Returns:
        (m, R, S, h)：R 首一且恰在非零实零点处为零，S 首一且恰在球面零点处为零，
        h 为非零常数四元数

    Raises:
        HasIsolatedNonRealZeros: 存在非实孤立零点
    """
    structure = zero_structure(f)
    if structure.has_isolated_non_real:
        raise HasIsolatedNonRealZeros("The function has isolated non-real zeros")

    R = ONE
    for x, k in structure.real_zeros:
        R = R * RealPoly((-x, 1.0)) ** k
    S = ONE
    for sphere in structure.spheres:
        S = S * _sphere_factor(sphere.alpha, sphere.beta) ** (sphere.spherical_mult // 2)

    divisor = RealPoly.monomial(structure.origin_mult) * R * S
    h = _divide_real(f, divisor)
    if h is None:
        raise InconsistentSphere("Zero structure does not divide the function")
    return structure.origin_mult, R, S, h


def symmetrized_root(mu: RealPoly, I0: ImaginaryUnit) -> SlicePoly:
    """构造 h ∈ S_I0 使 h^s = μ

    h = √c ∏(q - r)^{m/2} ∏*(q - (a + I0 b))^n，零点取 C_I0 的上半平面

    Raises:
        ZeroFunction: μ 为零
        NotRepresentable: μ 在实轴上变号或有奇数阶实零点
    """
    if mu.is_zero():
        raise ZeroFunction("symmetrized_root requires a nonzero polynomial")
    if mu.leading <= 0 or not nonneg_even_real_zeros(mu):
        raise NotRepresentable(f"{mu} is negative somewhere on the real axis or has a real zero of odd order")

    roots = proots(mu)
    real = RealPoly.constant(math.sqrt(mu.leading))
    for root in roots.real_roots:
        real = real * RealPoly((-root.value, 1.0)) ** (root.multiplicity // 2)

    h = SlicePoly.real(real)
    for pair in roots.complex_pairs:
        zero = Quaternion(pair.alpha) + I0.axis * pair.beta
        linear = SlicePoly.from_right_coefficients([-zero, Quaternion(1.0)])
        for _ in range(pair.multiplicity):
            h = star_mul(h, linear)

    if not SlicePoly.real(symmetrized(h)).isclose(SlicePoly.real(mu), rel=tolerance().eps_div, abs_=0.0):
        logger.error(f"对称化平方根重建失败: μ={mu}")
        raise NotRepresentable("Numerical reconstruction of the symmetrized root failed")
    return h
