"""表达式模块

将 "(q - i)*(q + i)" 这样的文本解析为语法树，打印回文本，或求值为 SlicePoly。

使用示例：
    from src.expression import evaluate_text, format_expr, parse

    tree = parse("q^2*k + 3")
    print(format_expr(tree))
    f = evaluate_text("(q - i)*(q + i)")
"""

from .evaluator import eval_expr, evaluate_text
from .nodes import BinaryOp, Expr, Negate, Number, Power, Unit, Variable
from .parser import Parser, Token, TokenKind, parse, tokenize
from .printer import format_expr

__all__ = [
    # 语法树
    "Expr",
    "Number",
    "Variable",
    "Unit",
    "BinaryOp",
    "Negate",
    "Power",
    # 解析
    "Parser",
    "Token",
    "TokenKind",
    "tokenize",
    "parse",
    # 打印与求值
    "format_expr",
    "eval_expr",
    "evaluate_text",
]
