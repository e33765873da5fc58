"""表达式求值：所有乘法均为 *-乘积"""

from src.algebra.quaternion import QI, QJ, QK
from src.expression.nodes import BinaryOp, Expr, Negate, Number, Power, Unit, Variable
from src.expression.parser import parse
from src.slice.powers import star_power
from src.slice.slicepoly import SlicePoly, star_mul

UNITS = {"i": QI, "j": QJ, "k": QK}


def eval_expr(node: Expr) -> SlicePoly:
    match node:
        case Number(value=value):
            return SlicePoly.real(value)
        case Variable():
            return SlicePoly.variable()
        case Unit(name=name):
            return SlicePoly.constant(UNITS[name])
        case BinaryOp(op="+", left=left, right=right):
            return eval_expr(left) + eval_expr(right)
        case BinaryOp(op="-", left=left, right=right):
            return eval_expr(left) - eval_expr(right)
        case BinaryOp(op="*", left=left, right=right):
            return star_mul(eval_expr(left), eval_expr(right))
        case Negate(operand=operand):
            return -eval_expr(operand)
        case Power(base=base, exponent=n):
            return star_power(eval_expr(base), n)
    raise TypeError(f"Unknown expression node: {node!r}")


def evaluate_text(text: str) -> SlicePoly:
    """解析并求值"""
    return eval_expr(parse(text))
