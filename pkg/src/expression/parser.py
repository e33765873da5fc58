"""表达式解析器

递归下降：
    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ('-')? atom ('^' uint)?
    atom   := 'q' | number | 'i' | 'j' | 'k' | '(' expr ')'

因子之间必须显式写 '*'。出错时报告字节偏移与期望的记号集合。
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from src.errors import ExpressionSyntaxError
from src.expression.nodes import BinaryOp, Expr, Negate, Number, Power, Unit, Variable


class TokenKind(str, Enum):
    NUMBER = "number"
    VARIABLE = "'q'"
    UNIT = "unit"
    PLUS = "'+'"
    MINUS = "'-'"
    STAR = "'*'"
    CARET = "'^'"
    LPAREN = "'('"
    RPAREN = "')'"
    END = "end of input"
    INVALID = "invalid character"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    offset: int

    def describe(self) -> str:
        if self.kind is TokenKind.END:
            return "end of input"
        return f"'{self.text}'"


_TOKEN_RE = re.compile(
    r"""
    (?P<space>\s+)
    | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
    | (?P<variable>q)
    | (?P<unit>[ijk])
    | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)

_OPERATORS = {
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "*": TokenKind.STAR,
    "^": TokenKind.CARET,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
}


def tokenize(text: str) -> list[Token]:
    """切分记号，偏移量按 UTF-8 字节计；无法识别的字符生成 INVALID 记号"""
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        offset = len(text[:pos].encode("utf-8"))
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            tokens.append(Token(TokenKind.INVALID, text[pos], offset))
            pos += 1
            continue
        group, value = match.lastgroup, match.group()
        if group == "number":
            tokens.append(Token(TokenKind.NUMBER, value, offset))
        elif group == "variable":
            tokens.append(Token(TokenKind.VARIABLE, value, offset))
        elif group == "unit":
            tokens.append(Token(TokenKind.UNIT, value, offset))
        elif group == "op":
            tokens.append(Token(_OPERATORS[value], value, offset))
        pos = match.end()
    tokens.append(Token(TokenKind.END, "", len(text.encode("utf-8"))))
    return tokens


class Parser:
    """单次使用的解析器"""

    def __init__(self, text: str):
        self._tokens = tokenize(text)
        self._pos = 0
        self._expected: set[str] = set()

    def parse(self) -> Expr:
        node = self._expr()
        if not self._check(TokenKind.END):
            self._fail()
        return node

    # ==================== 记号流 ====================

    def _peek(self) -> Token:
        return self._tokens[self._pos]

    def _check(self, kind: TokenKind, label: str | None = None) -> bool:
        if self._peek().kind is kind:
            return True
        self._expected.add(label or kind.value)
        return False

    def _advance(self) -> Token:
        token = self._peek()
        self._pos += 1
        self._expected.clear()
        return token

    def _fail(self) -> None:
        token = self._peek()
        raise ExpressionSyntaxError(
            f"Unexpected {token.describe()} at offset {token.offset}",
            offset=token.offset,
            expected=tuple(sorted(self._expected)),
        )

    # ==================== 文法 ====================

    def _expr(self) -> Expr:
        node = self._term()
        while True:
            if self._check(TokenKind.PLUS):
                self._advance()
                node = BinaryOp("+", node, self._term())
            elif self._check(TokenKind.MINUS):
                self._advance()
                node = BinaryOp("-", node, self._term())
            else:
                return node

    def _term(self) -> Expr:
        node = self._factor()
        while self._check(TokenKind.STAR):
            self._advance()
            node = BinaryOp("*", node, self._factor())
        return node

    def _factor(self) -> Expr:
        negate = False
        if self._check(TokenKind.MINUS):
            self._advance()
            negate = True
        node = self._atom()
        if self._check(TokenKind.CARET):
            self._advance()
            token = self._peek()
            if token.kind is not TokenKind.NUMBER or not token.text.isdigit():
                self._expected.add("integer")
                self._fail()
            self._advance()
            node = Power(node, int(token.text))
        return Negate(node) if negate else node

    def _atom(self) -> Expr:
        if self._check(TokenKind.NUMBER):
            return Number(float(self._advance().text))
        if self._check(TokenKind.VARIABLE):
            self._advance()
            return Variable()
        for name in "ijk":
            if self._peek().kind is TokenKind.UNIT and self._peek().text == name:
                self._advance()
                return Unit(name)
            self._expected.add(f"'{name}'")
        if self._check(TokenKind.LPAREN):
            self._advance()
            node = self._expr()
            if not self._check(TokenKind.RPAREN):
                self._fail()
            self._advance()
            return node
        self._fail()


def parse(text: str) -> Expr:
    """解析表达式

    Raises:
        ExpressionSyntaxError: 语法错误，带字节偏移与期望集合
    """
    return Parser(text).parse()
