"""表达式打印：输出可被 parse 还原为同一语法树的文本"""

from src.expression.nodes import ATOMS, BinaryOp, Expr, Negate, Number, Power, Unit, Variable


def format_expr(node: Expr) -> str:
    """二元运算整体加括号；一元负号作用于负号或二元运算以外的对象时不加括号"""
    match node:
        case Number(value=value):
            return repr(value)
        case Variable():
            return "q"
        case Unit(name=name):
            return name
        case BinaryOp(op=op, left=left, right=right):
            return f"({format_expr(left)} {op} {format_expr(right)})"
        case Negate(operand=Negate() as inner):
            return f"-({format_expr(inner)})"
        case Negate(operand=operand):
            return f"-{format_expr(operand)}"
        case Power(base=base, exponent=n):
            text = format_expr(base)
            if not isinstance(base, (*ATOMS, BinaryOp)):
                text = f"({text})"
            return f"{text}^{n}"
    raise TypeError(f"Unknown expression node: {node!r}")
