"""四元数代数与虚单位几何

包含四元数乘法、共轭、范数、逆，虚单位（单位纯四元数）以及
适配正交标架的构造。
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from src.errors import DegenerateFrame, DivisionByZero
from src.runtime_config import tolerance

Scalar = Union[int, float]
Vector3 = tuple[float, float, float]


# ==================== 向量工具 ====================


def dot3(u: Vector3, v: Vector3) -> float:
    """三维欧氏内积"""
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross3(u: Vector3, v: Vector3) -> Vector3:
    """三维向量积"""
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def norm3(u: Vector3) -> float:
    return math.sqrt(dot3(u, u))


def isclose(a: float, b: float, rel: float | None = None, abs_: float | None = None) -> bool:
    """容差相等: |a - b| <= eps_abs + eps_rel * max(|a|, |b|)"""
    tol = tolerance()
    rel = tol.eps_rel if rel is None else rel
    abs_ = tol.eps_abs if abs_ is None else abs_
    return abs(a - b) <= abs_ + rel * max(abs(a), abs(b))


# ==================== 四元数 ====================


@dataclass(frozen=True)
class Quaternion:
    """四元数 w + x i + y j + z k"""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def real(cls, value: Scalar) -> Quaternion:
        return cls(float(value))

    @classmethod
    def pure(cls, vector: Vector3) -> Quaternion:
        return cls(0.0, float(vector[0]), float(vector[1]), float(vector[2]))

    @property
    def scalar(self) -> float:
        return self.w

    @property
    def vector(self) -> Vector3:
        return (self.x, self.y, self.z)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.w, self.x, self.y, self.z)

    def __add__(self, other: Union[Quaternion, Scalar]) -> Quaternion:
        if isinstance(other, (int, float)):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __sub__(self, other: Union[Quaternion, Scalar]) -> Quaternion:
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Quaternion:
        return (-self) + other

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other: Union[Quaternion, Scalar]) -> Quaternion:
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        if isinstance(other, Quaternion):
            return qmul(self, other)
        return NotImplemented

    def __rmul__(self, other: Scalar) -> Quaternion:
        if isinstance(other, (int, float)):
            return self * other
        return NotImplemented

    def __truediv__(self, other: Scalar) -> Quaternion:
        if other == 0:
            raise DivisionByZero("Division of a quaternion by zero")
        return self * (1.0 / other)

    def conj(self) -> Quaternion:
        return qconj(self)

    def norm(self) -> float:
        return qnorm(self)

    def norm2(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inverse(self) -> Quaternion:
        return qinv(self)

    def is_zero(self, abs_: float | None = None) -> bool:
        limit = tolerance().eps_abs if abs_ is None else abs_
        return self.norm() <= limit

    def is_real(self, abs_: float | None = None) -> bool:
        limit = tolerance().eps_abs if abs_ is None else abs_
        return norm3(self.vector) <= limit * max(1.0, self.norm())

    def isclose(self, other: Quaternion, rel: float | None = None, abs_: float | None = None) -> bool:
        """按分量容差比较（相对量取两者范数的较大值）"""
        tol = tolerance()
        rel = tol.eps_rel if rel is None else rel
        abs_ = tol.eps_abs if abs_ is None else abs_
        scale = max(self.norm(), other.norm())
        return all(abs(a - b) <= abs_ + rel * scale for a, b in zip(self.as_tuple(), other.as_tuple()))

    def __str__(self) -> str:
        return format_quaternion(self)


def qmul(p: Quaternion, q: Quaternion) -> Quaternion:
    """四元数乘积 pq = p0 q0 - <p, q> + p0 q + q0 p + p ∧ q"""
    pv, qv = p.vector, q.vector
    cx, cy, cz = cross3(pv, qv)
    return Quaternion(
        p.w * q.w - dot3(pv, qv),
        p.w * q.x + q.w * p.x + cx,
        p.w * q.y + q.w * p.y + cy,
        p.w * q.z + q.w * p.z + cz,
    )


def qconj(q: Quaternion) -> Quaternion:
    return Quaternion(q.w, -q.x, -q.y, -q.z)


def qnorm(q: Quaternion) -> float:
    return math.sqrt(q.norm2())


def qinv(q: Quaternion) -> Quaternion:
    """四元数逆 q^c / |q|^2

    Raises:
        DivisionByZero: q = 0
    """
    n2 = q.norm2()
    if n2 == 0.0:
        raise DivisionByZero("Quaternion zero has no inverse")
    return qconj(q) * (1.0 / n2)


def format_quaternion(q: Quaternion) -> str:
    """格式化为 "1 + 2i - 3j + k" 形式"""
    parts: list[str] = []
    for value, unit in zip(q.as_tuple(), ("", "i", "j", "k")):
        if value == 0.0:
            continue
        magnitude = abs(value)
        text = f"{magnitude:g}" if (unit == "" or magnitude != 1.0) else ""
        sign = "-" if value < 0 else "+"
        parts.append(f"{sign} {text}{unit}")
    if not parts:
        return "0"
    head = parts[0]
    rendered = ("-" + head[2:]) if head.startswith("-") else head[2:]
    return " ".join([rendered, *parts[1:]])


ONE = Quaternion(1.0)
QI = Quaternion(0.0, 1.0, 0.0, 0.0)
QJ = Quaternion(0.0, 0.0, 1.0, 0.0)
QK = Quaternion(0.0, 0.0, 0.0, 1.0)


# ==================== 虚单位 ====================


@dataclass(frozen=True)
class ImaginaryUnit:
    """单位纯四元数，满足 axis^2 = -1"""

    axis: Quaternion

    def __post_init__(self):
        drift = tolerance().eps_unit
        if abs(self.axis.w) > drift:
            raise ValueError(f"Imaginary unit must have zero real part, got w={self.axis.w}")
        if abs(norm3(self.axis.vector) - 1.0) > drift:
            raise ValueError(f"Imaginary unit must have norm 1, got {norm3(self.axis.vector)}")

    @classmethod
    def of(cls, x: float, y: float, z: float) -> ImaginaryUnit:
        """严格构造：允许 eps_unit 内的漂移并重新归一化"""
        n = norm3((x, y, z))
        if abs(n - 1.0) > tolerance().eps_unit:
            raise ValueError(f"Imaginary unit drift too large: |axis| = {n}")
        return cls(Quaternion(0.0, x / n, y / n, z / n))

    @classmethod
    def direction(cls, x: float, y: float, z: float) -> ImaginaryUnit:
        """方向构造：任意非零向量归一化"""
        n = norm3((x, y, z))
        if n == 0.0:
            raise ValueError("Imaginary unit direction must be nonzero")
        return cls(Quaternion(0.0, x / n, y / n, z / n))

    @classmethod
    def from_vector(cls, vector: Vector3) -> ImaginaryUnit:
        return cls.direction(*vector)

    @property
    def vector(self) -> Vector3:
        return self.axis.vector

    def as_quaternion(self) -> Quaternion:
        return self.axis

    def __neg__(self) -> ImaginaryUnit:
        return ImaginaryUnit(-self.axis)

    def dot(self, other: ImaginaryUnit) -> float:
        return dot3(self.vector, other.vector)

    def cross(self, other: ImaginaryUnit) -> Vector3:
        return cross3(self.vector, other.vector)

    def canonical(self) -> ImaginaryUnit:
        """第一个非零坐标取正的代表元（±J 张成同一切片）"""
        drift = tolerance().eps_unit
        for value in self.vector:
            if abs(value) > drift:
                return self if value > 0 else -self
        return self

    def same_slice(self, other: ImaginaryUnit, abs_: float | None = None) -> bool:
        """C_I = C_J 当且仅当 I = ±J"""
        limit = tolerance().eps_unit if abs_ is None else abs_
        return norm3(self.cross(other)) <= limit

    def is_orthogonal(self, other: ImaginaryUnit, abs_: float | None = None) -> bool:
        limit = tolerance().eps_unit if abs_ is None else abs_
        return abs(self.dot(other)) <= limit

    def __str__(self) -> str:
        return format_quaternion(self.axis)


I_UNIT = ImaginaryUnit(QI)
J_UNIT = ImaginaryUnit(QJ)
K_UNIT = ImaginaryUnit(QK)


# ==================== 标架 ====================


@dataclass(frozen=True)
class Frame:
    """正定向正交标架 {I0, J0, K0}，并记录 M0 = a I0 + b J0 的系数"""

    I0: ImaginaryUnit
    J0: ImaginaryUnit
    K0: ImaginaryUnit
    a: float
    b: float

    @property
    def M0(self) -> ImaginaryUnit:
        v = tuple(self.a * s + self.b * t for s, t in zip(self.I0.vector, self.J0.vector))
        return ImaginaryUnit.from_vector(v)

    @property
    def orthogonal(self) -> bool:
        """M0 与 I0 正交（a = 0）"""
        return abs(self.a) <= tolerance().eps_unit

    def coordinates(self, q: Quaternion) -> tuple[float, float, float, float]:
        """q 在基 1, I0, J0, K0 下的坐标"""
        v = q.vector
        return (q.w, dot3(v, self.I0.vector), dot3(v, self.J0.vector), dot3(v, self.K0.vector))

    def compose(self, c0: float, c1: float, c2: float, c3: float) -> Quaternion:
        """由坐标还原四元数"""
        return (
            Quaternion(c0)
            + self.I0.axis * c1
            + self.J0.axis * c2
            + self.K0.axis * c3
        )


def complete_basis(I0: ImaginaryUnit) -> tuple[ImaginaryUnit, ImaginaryUnit]:
    """确定性的正交补全 (J0, K0)，K0 = I0 J0

    J0 取与 I0 最不对齐的坐标轴做 Gram-Schmidt，平局取靠前的轴
    """
    v = I0.vector
    index = min(range(3), key=lambda n: (abs(v[n]), n))
    e = [0.0, 0.0, 0.0]
    e[index] = 1.0
    c = v[index]
    J0 = ImaginaryUnit.from_vector((e[0] - c * v[0], e[1] - c * v[1], e[2] - c * v[2]))
    K0 = ImaginaryUnit.from_vector(cross3(v, J0.vector))
    return J0, K0


def adapted_frame(I0: ImaginaryUnit, M0: ImaginaryUnit, positive_a: bool = False) -> Frame:
    """构造适配标架: K0 为 I0 ∧ M0 的正倍数，J0 = K0 I0，M0 = a I0 + b J0 且 b > 0

    Args:
        I0: 第一个虚单位
        M0: 第二个虚单位，需与 I0 线性无关
        positive_a: 为 True 时通过 (I0, J0, K0) -> (-I0, J0, -K0) 使 a >= 0

    Returns:
        适配标架

    Raises:
        DegenerateFrame: M0 = ±I0
    """
    w = I0.cross(M0)
    if norm3(w) <= tolerance().eps_unit:
        raise DegenerateFrame(f"Imaginary units {I0} and {M0} span the same slice")

    K0 = ImaginaryUnit.from_vector(w)
    J0 = ImaginaryUnit.from_vector(cross3(K0.vector, I0.vector))
    a = M0.dot(I0)
    b = M0.dot(J0)
    if b < 0:
        J0, K0, b = -J0, -K0, -b
    if positive_a and a < 0:
        I0, K0, a = -I0, -K0, -a
    return Frame(I0=I0, J0=J0, K0=K0, a=a, b=b)
