"""实多项式求根

Aberth-Ehrlich 同时迭代（初值取扰动的 Cauchy 界圆周）+ Newton 精化。
重根处理：对全部 Aberth 根做单链接层次聚类，簇的取舍以后向误差经局部 Taylor
系数映射后的扰动半径为准；阈值逐级收紧直至根集能重建原多项式
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np
from loguru import logger
from tenacity import RetryCallState, retry, retry_if_exception_type, stop_after_attempt

from src.algebra.realpoly import Number, RealPoly
from src.errors import RootFindingFailed, ZeroFunction
from src.runtime_config import get_runtime_config, tolerance

# 扰动初值的固定种子，重启时依次加上尝试次数
_PERTURBATION_SEED = 0x51CE

# 单根判为实根的虚部阈值（相对 1+|z|）
_REAL_AXIS_TOL = 1e-9

# 由根集重建多项式的相对校验阈值
_REBUILD_TOL = 1e-6

# 实根判定中由扰动估计放宽的虚部上限（相对 1+|z|）
_REAL_AXIS_CAP = 1e-4


class RealRoot(NamedTuple):
    value: float
    multiplicity: int


class ComplexPair(NamedTuple):
    """共轭根对 alpha ± i beta，beta > 0"""

    alpha: float
    beta: float
    multiplicity: int


@dataclass(frozen=True)
class RootSet:
    """根集：实根与共轭根对（各带重数）"""

    real_roots: tuple[RealRoot, ...] = ()
    complex_pairs: tuple[ComplexPair, ...] = ()

    @property
    def degree(self) -> int:
        return sum(r.multiplicity for r in self.real_roots) + 2 * sum(
            p.multiplicity for p in self.complex_pairs
        )

    def to_poly(self, leading: float = 1.0) -> RealPoly:
        """由根集重建多项式"""
        result = RealPoly.constant(leading)
        for root in self.real_roots:
            result = result * RealPoly((-root.value, 1.0)) ** root.multiplicity
        for pair in self.complex_pairs:
            quadratic = RealPoly((pair.alpha**2 + pair.beta**2, -2.0 * pair.alpha, 1.0))
            result = result * quadratic**pair.multiplicity
        return result

    def real_multiplicity(self, x: float, abs_: float = 1e-9) -> int:
        """实点 x 处的重数（不是根时为 0）"""
        return sum(r.multiplicity for r in self.real_roots if abs(r.value - x) <= abs_ * (1 + abs(x)))


# ==================== Aberth 迭代 ====================


def cauchy_bound(coeffs: np.ndarray) -> float:
    """首一多项式（升幂系数）的 Cauchy 根界 1 + max|a_k|"""
    lead = coeffs[-1]
    return 1.0 + float(np.max(np.abs(coeffs[:-1] / lead))) if len(coeffs) > 1 else 1.0


def _horner(desc: np.ndarray, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """同时计算 p(z) 与 p'(z)，desc 为降幂系数"""
    p = np.full(z.shape, desc[0], dtype=complex)
    dp = np.zeros(z.shape, dtype=complex)
    for c in desc[1:]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _log_restart(retry_state: RetryCallState) -> None:
    logger.warning(f"Aberth 迭代未收敛，使用新的扰动初值重启 (第 {retry_state.attempt_number} 次失败)")


class AberthSolver:
    """Aberth-Ehrlich 同时迭代求根器

    每次失败以新的扰动种子重启，重启次数由运行时配置决定
    """

    def __init__(self):
        cfg = get_runtime_config().root_finder
        self.max_iter = cfg.max_iter
        self.attempts = 0
        self.solve = retry(
            stop=stop_after_attempt(cfg.restarts),
            retry=retry_if_exception_type(RootFindingFailed),
            before_sleep=_log_restart,
            reraise=True,
        )(self._solve)

    def _solve(self, coeffs: np.ndarray) -> np.ndarray:
        """求首一多项式的全部复根

        Args:
            coeffs: 升幂系数，首项为 1

        Returns:
            复根数组
        """
        attempt = self.attempts
        self.attempts += 1

        n = len(coeffs) - 1
        if n == 1:
            return np.array([-coeffs[0] / coeffs[1]], dtype=complex)

        desc = coeffs[::-1].astype(complex)
        abs_desc = np.abs(coeffs[::-1])
        radius = cauchy_bound(coeffs)

        rng = np.random.default_rng(_PERTURBATION_SEED + attempt)
        angles = (
            2.0 * np.pi * np.arange(n) / n
            + rng.uniform(0.0, 2.0 * np.pi / n)
            + rng.uniform(-0.1, 0.1, n) * np.pi / n
        )
        z = radius * (1.0 + 0.01 * rng.uniform(-1.0, 1.0, n)) * np.exp(1j * angles)

        backward = (4 * n + 8) * np.finfo(float).eps
        for _ in range(self.max_iter):
            p, dp = _horner(desc, z)
            bound = np.polyval(abs_desc, np.abs(z))
            if np.all(np.abs(p) <= backward * bound):
                return z

            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            with np.errstate(divide="ignore", invalid="ignore"):
                step = p / (dp - p * inv.sum(axis=1))
            step[~np.isfinite(step)] = 0.0
            z = z - step
            if np.all(np.abs(step) <= 4 * np.finfo(float).eps * (1.0 + np.abs(z))):
                return z

        raise RootFindingFailed(f"Aberth iteration did not converge within {self.max_iter} steps")


# ==================== 重根聚类 ====================


def _taylor(poly: RealPoly, x: Number, j: int) -> Number:
    """poly 在 x 处的第 j 个 Taylor 系数 poly^(j)(x) / j!"""
    derived = poly
    for _ in range(j):
        derived = derived.derivative()
    return derived(x) / math.factorial(j)


class _LocalModel:
    """首一多项式在根簇附近的扰动模型

    系数的后向误差 backward·|a_n| 在中心 c 处的 Taylor 系数不超过
    backward·T_j(|c|)（T_j 为系数取绝对值后的多项式的 Taylor 系数），
    据此估计 m 重根在数值上的散布半径与中心的误差
    """

    def __init__(self, monic: RealPoly):
        self.monic = monic
        self.magnitude = RealPoly(abs(c) for c in monic.coeffs)
        self.backward = (4 * monic.degree + 8) * np.finfo(float).eps

    def _ratios(self, c: complex, m: int) -> list[float]:
        """backward·T_{m-k}(|c|) / |f^(m)(c)/m!|，k = 1..m"""
        cofactor = abs(_taylor(self.monic, c, m))
        if cofactor == 0.0:
            return [math.inf] * m
        return [self.backward * _taylor(self.magnitude, abs(c), m - k) / cofactor for k in range(1, m + 1)]

    def radius(self, c: complex, m: int) -> float:
        """t^m + Σ d_j t^j 的根界 2·max_k |d_{m-k}|^(1/k)"""
        return 2.0 * max(r ** (1.0 / k) for k, r in enumerate(self._ratios(c, m), start=1))

    def is_cluster(self, z: np.ndarray, slack: float) -> bool:
        """簇是否为某个邻近多项式的 m 重根

        簇内各根须落在中心的扰动半径内，且精化后的中心处前 m 个 Taylor 系数
        都不超过后向误差在该处的映射
        """
        m = len(z)
        c = complex(np.mean(z))
        if float(np.max(np.abs(z - c))) > slack * self.radius(c, m):
            return False
        c = self.refine(c, m)
        return all(
            abs(_taylor(self.monic, c, j)) <= slack * self.backward * _taylor(self.magnitude, abs(c), j)
            for j in range(m)
        )

    def refine(self, c: complex, m: int, steps: int = 5) -> complex:
        """在 f^(m-1) 上做 Newton 精化（m 重根是其单根），仅在残差下降时接受"""
        g = self.monic
        for _ in range(m - 1):
            g = g.derivative()
        dg = g.derivative()
        for _ in range(steps):
            value, slope = g(c), dg(c)
            if slope == 0:
                break
            candidate = c - value / slope
            if not abs(g(candidate)) < abs(value):
                break
            c = candidate
        return c

    def real_tolerance(self, c: complex, m: int) -> float:
        """中心虚部的允许量；根间距 >= 1e-2 时真实共轭对的虚部远大于上限"""
        cap = _REAL_AXIS_CAP * (1.0 + abs(c))
        spread = 10.0 * self._ratios(c, m)[0]
        return _REAL_AXIS_TOL * (1.0 + abs(c)) + min(spread, cap)


def _linkage_groups(z: np.ndarray) -> list[frozenset[int]]:
    """单链接层次聚类过程中出现的全部多元簇，由大到小"""
    n = len(z)
    parent = list(range(n))
    members = {i: frozenset((i,)) for i in range(n)}

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    edges = sorted((abs(z[i] - z[j]), i, j) for i in range(n) for j in range(i + 1, n))
    groups: list[frozenset[int]] = []
    for _, i, j in edges:
        a, b = find(i), find(j)
        if a == b:
            continue
        parent[b] = a
        members[a] = members[a] | members.pop(b)
        groups.append(members[a])
    return sorted(groups, key=len, reverse=True)


def _partition(
    z: np.ndarray, groups: list[frozenset[int]], model: _LocalModel, slack: Optional[float]
) -> list[frozenset[int]]:
    """贪心选取互不相交的可接受簇（层次簇互为嵌套，大簇优先）；slack 为 None 时全部为单根"""
    chosen: list[frozenset[int]] = []
    used: set[int] = set()
    if slack is not None:
        for group in groups:
            if used.isdisjoint(group) and model.is_cluster(z[sorted(group)], slack):
                chosen.append(group)
                used |= group
    chosen.extend(frozenset((i,)) for i in range(len(z)) if i not in used)
    return chosen


def _assemble(model: _LocalModel, z: np.ndarray, partition: list[frozenset[int]]) -> RootSet:
    """把簇整理为 RootSet，丢弃下半平面的共轭副本"""
    reals: list[RealRoot] = []
    pairs: list[ComplexPair] = []
    for group in partition:
        m = len(group)
        c = model.refine(complex(np.mean(z[sorted(group)])), m)
        if abs(c.imag) <= model.real_tolerance(c, m):
            reals.append(RealRoot(float(c.real), m))
        elif c.imag > 0:
            pairs.append(ComplexPair(float(c.real), float(c.imag), m))
    reals.sort(key=lambda r: r.value)
    pairs.sort(key=lambda p: (p.alpha, p.beta))
    return RootSet(tuple(reals), tuple(pairs))


def _rebuild_error(rootset: RootSet, poly: RealPoly) -> float:
    """由根集重建的多项式与 poly 的相对系数误差（次数不符时为 inf）"""
    if rootset.degree != poly.degree:
        return math.inf
    rebuilt = rootset.to_poly(poly.leading)
    return max(abs(rebuilt[n] - poly[n]) for n in range(poly.degree + 1)) / poly.norm()


def _cluster_roots(poly: RealPoly, solver: AberthSolver) -> RootSet:
    """Aberth 求全部根，再按逐级收紧的接受阈值聚类，取第一个能重建 poly 的根集"""
    monic = poly.monic()
    z = solver.solve(np.array(monic.coeffs, dtype=float))
    model = _LocalModel(monic)
    groups = _linkage_groups(z)

    slack = get_runtime_config().root_finder.cluster_slack
    best: Optional[RootSet] = None
    best_error = math.inf
    for level in (slack, 1.0, None):
        rootset = _assemble(model, z, _partition(z, groups, model, level))
        error = _rebuild_error(rootset, poly)
        if error <= _REBUILD_TOL:
            logger.debug(f"求根成功: 次数={poly.degree}, 聚类阈值={level}, 重建误差={error:.3g}")
            return rootset
        if error < best_error:
            best, best_error = rootset, error

    if best is None:
        logger.error(f"求根失败: 根无法配成实因式 {poly}")
        raise RootFindingFailed(f"Roots of the degree {poly.degree} polynomial do not pair into a real factorization")
    logger.warning(f"根集重建误差 {best_error:.3g} 超过 {_REBUILD_TOL}，返回最接近的根集")
    return best


# ==================== 公开接口 ====================


def proots(f: RealPoly) -> RootSet:
    """求实多项式的全部根（共轭配对、带重数）

    Args:
        f: 非零实多项式

    Returns:
        根集，重数总和等于次数

    Raises:
        ZeroFunction: f 为零多项式
        RootFindingFailed: 迭代不收敛或无法重建
    """
    if f.is_zero():
        raise ZeroFunction("proots requires a nonzero polynomial")

    # 剥离原点处的根
    coeffs = f.coeffs
    floor = tolerance().eps_trim * f.norm()
    k = 0
    while abs(coeffs[k]) <= floor:
        k += 1
    origin = (RealRoot(0.0, k),) if k else ()
    reduced = RealPoly(coeffs[k:])
    if reduced.degree == 0:
        return RootSet(origin, ())

    rootset = _cluster_roots(reduced, AberthSolver())

    reals = tuple(sorted(origin + rootset.real_roots, key=lambda r: r.value))
    return RootSet(reals, rootset.complex_pairs)


def nonneg_even_real_zeros(f: RealPoly) -> bool:
    """f 在实轴上非负且所有实零点为偶数阶

    Raises:
        ZeroFunction: f 为零多项式
    """
    rootset = proots(f)
    if any(r.multiplicity % 2 for r in rootset.real_roots):
        return False

    values = [r.value for r in rootset.real_roots]
    if values:
        samples = [values[0] - 1.0]
        samples += [(a + b) / 2.0 for a, b in zip(values, values[1:])]
        samples.append(values[-1] + 1.0)
    else:
        samples = [0.0]

    bound_poly = RealPoly(abs(c) for c in f.coeffs)
    eps = tolerance().eps_root
    return all(f(x) >= -eps * bound_poly(abs(x)) for x in samples)


def sqrt_if_square(f: RealPoly) -> Optional[RealPoly]:
    """若 f = s^2 则返回首项为正的 s，否则返回 None

    Raises:
        ZeroFunction: f 为零多项式
    """
    if f.is_zero():
        raise ZeroFunction("sqrt_if_square requires a nonzero polynomial")
    if f.leading <= 0 or f.degree % 2:
        return None

    rootset = proots(f)
    if any(r.multiplicity % 2 for r in rootset.real_roots):
        return None
    if any(p.multiplicity % 2 for p in rootset.complex_pairs):
        return None

    s = RealPoly.constant(math.sqrt(f.leading))
    for root in rootset.real_roots:
        s = s * RealPoly((-root.value, 1.0)) ** (root.multiplicity // 2)
    for pair in rootset.complex_pairs:
        quadratic = RealPoly((pair.alpha**2 + pair.beta**2, -2.0 * pair.alpha, 1.0))
        s = s * quadratic ** (pair.multiplicity // 2)

    if not (s * s).isclose(f, rel=tolerance().eps_div, abs_=0.0):
        return None
    return s


__all__ = [
    "AberthSolver",
    "ComplexPair",
    "RealRoot",
    "RootSet",
    "cauchy_bound",
    "nonneg_even_real_zeros",
    "proots",
    "sqrt_if_square",
]
