"""表达式语法树

原子: q、实数字面量、i、j、k；运算: + - *（*-乘积）、一元负号、^n
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Variable:
    """变量 q"""


@dataclass(frozen=True)
class Unit:
    """虚单位 i / j / k"""

    name: str


@dataclass(frozen=True)
class BinaryOp:
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Negate:
    operand: Expr


@dataclass(frozen=True)
class Power:
    base: Expr
    exponent: int


Expr = Union[Number, Variable, Unit, BinaryOp, Negate, Power]

ATOMS = (Number, Variable, Unit)
