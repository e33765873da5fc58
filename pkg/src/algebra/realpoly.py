"""实系数一元多项式

S_R 在多项式层面的系数环：环运算、带容差的整除、最大公因式与比例判定。
系数按升幂存储，首项（最高次）系数按相对下限 eps_trim 截断。
"""

from __future__ import annotations

import math
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from src.errors import DivisionByZero
from src.runtime_config import tolerance

Number = Union[int, float, complex]


class RealPoly:
    """实系数多项式，不可变"""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[float] = ()):
        values = [float(c) for c in coeffs]
        peak = max((abs(c) for c in values), default=0.0)
        if math.isfinite(peak):
            floor = tolerance().eps_trim * peak
            while values and (values[-1] == 0.0 or abs(values[-1]) <= floor):
                values.pop()
        self._coeffs: tuple[float, ...] = tuple(values)

    # ==================== 构造 ====================

    @classmethod
    def constant(cls, value: float) -> RealPoly:
        return cls((value,))

    @classmethod
    def monomial(cls, n: int, value: float = 1.0) -> RealPoly:
        return cls([0.0] * n + [value])

    @classmethod
    def from_roots(cls, roots: Sequence[float], leading: float = 1.0) -> RealPoly:
        result = cls.constant(leading)
        for r in roots:
            result = result * cls((-r, 1.0))
        return result

    # ==================== 基本属性 ====================

    @property
    def coeffs(self) -> tuple[float, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """次数；零多项式为 -1"""
        return len(self._coeffs) - 1

    @property
    def leading(self) -> float:
        return self._coeffs[-1] if self._coeffs else 0.0

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return self.degree <= 0

    def norm(self) -> float:
        """无穷范数"""
        return max((abs(c) for c in self._coeffs), default=0.0)

    def __getitem__(self, n: int) -> float:
        return self._coeffs[n] if 0 <= n < len(self._coeffs) else 0.0

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    # ==================== 运算 ====================

    def __call__(self, x: Number) -> Number:
        """Horner 求值，支持实数与复数"""
        result: Number = 0.0
        for c in reversed(self._coeffs):
            result = result * x + c
        return result

    def __add__(self, other: Union[RealPoly, float, int]) -> RealPoly:
        if isinstance(other, (int, float)):
            other = RealPoly.constant(other)
        if not isinstance(other, RealPoly):
            return NotImplemented
        return padd(self, other)

    __radd__ = __add__

    def __sub__(self, other: Union[RealPoly, float, int]) -> RealPoly:
        if isinstance(other, (int, float)):
            other = RealPoly.constant(other)
        if not isinstance(other, RealPoly):
            return NotImplemented
        return psub(self, other)

    def __rsub__(self, other: Union[float, int]) -> RealPoly:
        return psub(RealPoly.constant(other), self)

    def __neg__(self) -> RealPoly:
        return RealPoly(-c for c in self._coeffs)

    def __mul__(self, other: Union[RealPoly, float, int]) -> RealPoly:
        if isinstance(other, (int, float)):
            return pscale(self, other)
        if not isinstance(other, RealPoly):
            return NotImplemented
        return pmul(self, other)

    def __rmul__(self, other: Union[float, int]) -> RealPoly:
        if isinstance(other, (int, float)):
            return pscale(self, other)
        return NotImplemented

    def __pow__(self, n: int) -> RealPoly:
        if n < 0:
            raise ValueError("Negative polynomial power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RealPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def derivative(self) -> RealPoly:
        return pderiv(self)

    def monic(self) -> RealPoly:
        if self.is_zero():
            raise DivisionByZero("Zero polynomial has no leading coefficient")
        return pscale(self, 1.0 / self.leading)

    def chop(self, tol: float, scale: Optional[float] = None) -> RealPoly:
        """将绝对值不超过 tol * scale 的系数置零"""
        limit = tol * (self.norm() if scale is None else scale)
        return RealPoly(0.0 if abs(c) <= limit else c for c in self._coeffs)

    def isclose(self, other: RealPoly, rel: Optional[float] = None, abs_: Optional[float] = None) -> bool:
        """系数比较，相对量取两者无穷范数的较大值"""
        tol = tolerance()
        rel = tol.eps_rel if rel is None else rel
        abs_ = tol.eps_abs if abs_ is None else abs_
        limit = abs_ + rel * max(self.norm(), other.norm())
        size = max(len(self), len(other))
        return all(abs(self[n] - other[n]) <= limit for n in range(size))

    def to_numpy(self) -> np.ndarray:
        return np.array(self._coeffs, dtype=float)

    def __repr__(self) -> str:
        return f"RealPoly({list(self._coeffs)})"

    def __str__(self) -> str:
        return format_realpoly(self)


ZERO = RealPoly()
ONE = RealPoly((1.0,))
X = RealPoly((0.0, 1.0))


# ==================== 环运算 ====================


def padd(f: RealPoly, g: RealPoly) -> RealPoly:
    size = max(len(f), len(g))
    return RealPoly(f[n] + g[n] for n in range(size))


def psub(f: RealPoly, g: RealPoly) -> RealPoly:
    size = max(len(f), len(g))
    return RealPoly(f[n] - g[n] for n in range(size))


def pmul(f: RealPoly, g: RealPoly) -> RealPoly:
    if f.is_zero() or g.is_zero():
        return ZERO
    return RealPoly(np.convolve(f.to_numpy(), g.to_numpy()).tolist())


def pscale(f: RealPoly, c: float) -> RealPoly:
    return RealPoly(c * x for x in f.coeffs)


def pderiv(f: RealPoly) -> RealPoly:
    return RealPoly(n * c for n, c in enumerate(f.coeffs) if n > 0)


# ==================== 除法 ====================


def pdivrem(f: RealPoly, g: RealPoly) -> tuple[RealPoly, RealPoly]:
    """带余除法 f = g * quotient + remainder，deg(remainder) < deg(g)

    Raises:
        DivisionByZero: g 为零多项式
    """
    if g.is_zero():
        raise DivisionByZero("Polynomial division by the zero polynomial")
    dg = g.degree
    if f.degree < dg:
        return ZERO, f

    rem = list(f.coeffs)
    lead = g.leading
    quotient = [0.0] * (f.degree - dg + 1)
    for k in range(f.degree - dg, -1, -1):
        c = rem[k + dg] / lead
        quotient[k] = c
        for n in range(dg):
            rem[k + n] -= c * g[n]
        rem[k + dg] = 0.0
    return RealPoly(quotient), RealPoly(rem[:dg])


def _remainder_limit(f: RealPoly, g: RealPoly, scale: Optional[float]) -> float:
    magnitude = f.norm() if scale is None else max(f.norm(), scale)
    return tolerance().eps_div * magnitude * (1.0 + g.norm())


def pdivides(g: RealPoly, f: RealPoly, scale: Optional[float] = None) -> bool:
    """g 是否整除 f: ‖remainder‖∞ <= eps_div · max(‖f‖∞, scale) · (1 + ‖g‖∞)

    f 是某个更大问题的分量时，scale 取该问题的范数
    """
    _, rem = pdivrem(f, g)
    return rem.norm() <= _remainder_limit(f, g, scale)


def pexact_div(f: RealPoly, g: RealPoly, scale: Optional[float] = None) -> Optional[RealPoly]:
    """整除时返回商，否则返回 None；scale 的含义同 pdivides"""
    quotient, rem = pdivrem(f, g)
    if rem.norm() <= _remainder_limit(f, g, scale):
        return quotient
    return None


def pgcd(f: RealPoly, g: RealPoly, tol: float = 1e-9) -> RealPoly:
    """数值 Euclid 算法，返回首一最大公因式

    每步余式中不超过 tol·‖被除式‖ 的系数视为零
    """
    if f.is_zero() and g.is_zero():
        raise DivisionByZero("gcd of two zero polynomials")
    a = f.monic() if not f.is_zero() else f
    b = g.monic() if not g.is_zero() else g
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        _, rem = pdivrem(a, b)
        rem = rem.chop(tol, scale=max(a.norm(), b.norm()))
        a, b = b, (rem.monic() if not rem.is_zero() else rem)
    return a.monic()


def pratio(f: RealPoly, g: RealPoly) -> Optional[float]:
    """若 f = c·g（c 为实常数）则返回 c，否则返回 None

    g 为零时仅当 f 也为零才返回 0
    """
    if g.is_zero():
        return 0.0 if f.is_zero() else None
    size = max(len(f), len(g))
    fv = np.array([f[n] for n in range(size)])
    gv = np.array([g[n] for n in range(size)])
    c = float(fv @ gv / (gv @ gv))
    tol = tolerance()
    residual = float(np.max(np.abs(fv - c * gv)))
    if residual <= tol.eps_abs + tol.eps_div * max(f.norm(), abs(c) * g.norm()):
        return c
    return None


# ==================== 格式化 ====================


def format_realpoly(f: RealPoly, var: str = "q") -> str:
    """格式化为 "3q^2 - q + 1" 形式（降幂）"""
    if f.is_zero():
        return "0"
    parts: list[str] = []
    for n in range(f.degree, -1, -1):
        c = f[n]
        if c == 0.0:
            continue
        magnitude = abs(c)
        if n == 0:
            body = f"{magnitude:g}"
        else:
            coeff = "" if magnitude == 1.0 else f"{magnitude:g}"
            body = coeff + (var if n == 1 else f"{var}^{n}")
        parts.append(("- " if c < 0 else "+ ") + body)
    head = parts[0]
    rendered = ("-" + head[2:]) if head.startswith("-") else head[2:]
    return " ".join([rendered, *parts[1:]])
