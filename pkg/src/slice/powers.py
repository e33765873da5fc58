"""*-幂与二元型

f^{*d} 的闭式展开、二元型 Q_d(x, y) = Σ (-1)^n C(d, 2n+1) x^{d-2n-1} y^{2n+1}、
其非零实根集 Σ_d，以及 f^{*d} 切片保持的判定。
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from loguru import logger

from src.algebra.quaternion import ImaginaryUnit
from src.algebra.realpoly import ZERO, RealPoly
from src.algebra.roots import proots, sqrt_if_square
from src.errors import InvalidDegree, NumericalError, PreconditionViolated, RootFindingFailed
from src.slice.slicepoly import ONE_POLY, SlicePoly, classify, star_mul, symmetrized, vector_part

# Σ_d 与余切公式的比对容差
_ORACLE_TOL = 1e-9

# ξ² 与 f0²/f_v^s 首项比的匹配容差
_XI_TOL = 1e-7


# ==================== 二元型 ====================


@dataclass(frozen=True)
class BinaryForm:
    """Q_d：coeffs[n] 为 x^{d-(2n+1)} y^{2n+1} 的整数系数"""

    degree: int
    coeffs: dict[int, int]

    def terms(self) -> list[tuple[int, int, int]]:
        """(系数, x 的次数, y 的次数)，按 x 降幂"""
        return [(c, self.degree - (2 * n + 1), 2 * n + 1) for n, c in sorted(self.coeffs.items())]

    def dehomogenize(self) -> RealPoly:
        """Q_d(x, 1)"""
        values = [0.0] * self.degree
        for c, i, _ in self.terms():
            values[i] = float(c)
        return RealPoly(values)

    def evaluate(self, x: float, y: float) -> float:
        return sum(c * x**i * y**j for c, i, j in self.terms())

    def __str__(self) -> str:
        pieces = []
        for c, i, j in self.terms():
            monomial = "".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("x", i), ("y", j)) if e > 0
            )
            magnitude = "" if abs(c) == 1 else str(abs(c))
            pieces.append(("- " if c < 0 else "+ ") + magnitude + monomial)
        head = pieces[0]
        text = ("-" + head[2:]) if head.startswith("-") else head[2:]
        return " ".join([text, *pieces[1:]])


@dataclass(frozen=True)
class SigmaSet:
    """Σ_d：Q_d 除 0 与 ∞ 外的实根，升序"""

    d: int
    roots: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def match_square(self, value: float, rel: float = _XI_TOL) -> Optional[float]:
        """返回满足 ξ² ≈ value 的非负 ξ"""
        for xi in self.roots:
            if xi > 0 and abs(xi * xi - value) <= rel * max(1.0, abs(value)):
                return xi
        return None


def qd(d: int) -> BinaryForm:
    """构造 Q_d

    Raises:
        InvalidDegree: d < 2
    """
    if d < 2:
        raise InvalidDegree(f"Q_d requires d >= 2, got {d}")
    return BinaryForm(d, {n: (-1) ** n * math.comb(d, 2 * n + 1) for n in range((d + 1) // 2)})


def sigma_oracle(d: int) -> tuple[float, ...]:
    """{cot(kπ/d) : k = 1..d-1} \\ {0}，升序

    来自 Q_d(x, y) = Im((x + iy)^d)
    """
    if d < 3:
        raise InvalidDegree(f"Sigma_d requires d >= 3, got {d}")
    values = [math.cos(k * math.pi / d) / math.sin(k * math.pi / d) for k in range(1, d) if 2 * k != d]
    return tuple(sorted(values))


def sigma(d: int) -> SigmaSet:
    """Q_d(x, 1) 的非零实根，并与余切公式交叉核对

    Raises:
        InvalidDegree: d < 3
        RootFindingFailed: 出现非实根、重根或与余切公式不一致
    """
    if d < 3:
        raise InvalidDegree(f"Sigma_d requires d >= 3, got {d}")

    rootset = proots(qd(d).dehomogenize())
    if rootset.complex_pairs or any(r.multiplicity != 1 for r in rootset.real_roots):
        logger.error(f"Q_{d} 的根不全是实单根: {rootset}")
        raise RootFindingFailed(f"Q_{d} should have simple real roots only")

    roots = tuple(sorted(r.value for r in rootset.real_roots if r.value != 0.0))
    oracle = sigma_oracle(d)
    if len(roots) != len(oracle) or any(
        abs(a - b) > _ORACLE_TOL * max(1.0, abs(b)) for a, b in zip(roots, oracle)
    ):
        logger.error(f"Σ_{d} 与余切公式不一致: {roots} vs {oracle}")
        raise RootFindingFailed(f"Sigma_{d} disagrees with the cotangent formula")
    return SigmaSet(d, roots)


# ==================== *-幂 ====================


def _finite(f: SlicePoly) -> bool:
    return all(math.isfinite(x) for c in f.components for x in c.coeffs)


def star_power(f: SlicePoly, d: int) -> SlicePoly:
    """f^{*d}，平方-乘法

    Raises:
        InvalidDegree: d < 0
        NumericalError: 中间结果溢出
    """
    if d < 0:
        raise InvalidDegree(f"Power exponent must be nonnegative, got {d}")
    result, base = ONE_POLY, f
    while d:
        if d & 1:
            result = star_mul(result, base)
        d >>= 1
        if not d:
            break
        base = star_mul(base, base)
        if not _finite(base):
            logger.error(f"*-幂的中间结果溢出: 次数 {base.degree}")
            raise NumericalError(f"Intermediate star power of degree {base.degree} overflows the float range")
    return result


def _power_sums(f: SlicePoly, d: int) -> tuple[RealPoly, RealPoly]:
    """(实部和, f_v 的系数和)"""
    f0 = f.c0
    s = symmetrized(vector_part(f))
    scalar, factor = ZERO, ZERO
    try:
        for n in range(d // 2 + 1):
            scalar = scalar + (f0 ** (d - 2 * n)) * (s**n) * float((-1) ** n * math.comb(d, 2 * n))
        for n in range((d + 1) // 2):
            factor = factor + (f0 ** (d - 2 * n - 1)) * (s**n) * float((-1) ** n * math.comb(d, 2 * n + 1))
    except OverflowError as e:
        logger.error(f"幂展开的二项式系数超出浮点范围: d={d}")
        raise NumericalError(f"Binomial coefficients of the degree {d} power exceed the float range") from e
    return scalar, factor


def power_vector_factor(f: SlicePoly, d: int) -> RealPoly:
    """f^{*d} 的向量部分 = 该实多项式 · f_v"""
    if d < 0:
        raise InvalidDegree(f"Power exponent must be nonnegative, got {d}")
    return _power_sums(f, d)[1]


def power_expand(f: SlicePoly, d: int) -> SlicePoly:
    """f^{*d} 的闭式

    Σ (-1)^n C(d,2n) f0^{d-2n} (f_v^s)^n + [Σ (-1)^n C(d,2n+1) f0^{d-2n-1} (f_v^s)^n] f_v
    """
    if d < 0:
        raise InvalidDegree(f"Power exponent must be nonnegative, got {d}")
    scalar, factor = _power_sums(f, d)
    return SlicePoly.real(scalar) + vector_part(f) * factor


# ==================== 幂的切片保持 ====================


class PowerVerdict(str, Enum):
    SLICE_PRESERVING = "slice_preserving"
    ONE_SLICE = "one_slice"
    NO = "no"


@dataclass(frozen=True)
class PowerSliceResult:
    verdict: PowerVerdict
    xi: Optional[float] = None
    axis: Optional[ImaginaryUnit] = None


def _classified_power(f: SlicePoly, d: int) -> PowerSliceResult:
    verdict = classify(star_power(f, d))
    if verdict.is_all:
        return PowerSliceResult(PowerVerdict.SLICE_PRESERVING)
    if verdict.is_one:
        logger.warning(f"f^{{*{d}}} 仅保持一个切片，与幂的单切片判据矛盾")
        return PowerSliceResult(PowerVerdict.ONE_SLICE, axis=verdict.axis)
    return PowerSliceResult(PowerVerdict.NO)


def power_slice_preserving(f: SlicePoly, d: int) -> PowerSliceResult:
    """f 不保持任何切片时判定 f^{*d} 是否切片保持

    f^{*d} ∈ S_R 当且仅当存在 ξ ∈ Σ_d 使 f0² = ξ² f_v^s；f0 ≡ 0 时按实际幂分类

    Args:
        f: 不保持任何切片的函数
        d: 非负指数

    Returns:
        判定结果，切片保持时带见证 ξ（与 f0 首项同号）

    Raises:
        PreconditionViolated: f 保持某个切片
        InvalidDegree: d < 0
    """
    if d < 0:
        raise InvalidDegree(f"Power exponent must be nonnegative, got {d}")
    if not classify(f).is_none:
        raise PreconditionViolated("f must preserve no slice")

    if d == 0:
        return PowerSliceResult(PowerVerdict.SLICE_PRESERVING)
    if d == 1:
        return PowerSliceResult(PowerVerdict.NO)
    if f.c0.is_zero():
        logger.debug(f"f0 ≡ 0，按 f^{{*{d}}} 的分类判定")
        return _classified_power(f, d)

    f0_squared = f.c0 * f.c0
    s = symmetrized(vector_part(f))
    witness = None
    # 归一化为首一后比较，ξ² 取首项系数之比
    if d >= 3 and f0_squared.monic().isclose(s.monic(), rel=_XI_TOL, abs_=_XI_TOL):
        xi = sigma(d).match_square(f0_squared.leading / s.leading)
        if xi is not None:
            witness = math.copysign(xi, f.c0.leading)

    actual = _classified_power(f, d)
    found = witness is not None
    if found != (actual.verdict is PowerVerdict.SLICE_PRESERVING):
        logger.warning(f"ξ 判据与 f^{{*{d}}} 的分类不一致: ξ={witness}, 分类={actual.verdict.value}")
    if not found:
        return PowerSliceResult(PowerVerdict.NO)

    if sqrt_if_square(s) is None:
        logger.warning("切片保持的幂要求 f_v^s 为完全平方，但平方根提取失败")
    logger.debug(f"f^{{*{d}}} 切片保持，ξ={witness:.10g}")
    return PowerSliceResult(PowerVerdict.SLICE_PRESERVING, xi=witness)


__all__ = [
    "BinaryForm",
    "PowerSliceResult",
    "PowerVerdict",
    "SigmaSet",
    "power_expand",
    "power_slice_preserving",
    "power_vector_factor",
    "qd",
    "sigma",
    "sigma_oracle",
    "star_power",
]
