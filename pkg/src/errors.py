"""异常定义

领域异常统一继承 SliceRegError，CLI 入口据此输出 JSON 错误并决定退出码：
- exit_code = 1: 领域错误（除零、退化标架、求根失败等）
- exit_code = 2: 输入错误（表达式语法、JSON 结构）
"""

from typing import Any, Iterable, Optional


class SliceRegError(Exception):
    """所有领域异常的基类"""

    code = "slicereg_error"
    exit_code = 1

    def to_dict(self) -> dict[str, Any]:
        """转换为错误输出字典"""
        return {"error": self.code, "message": str(self)}


class DivisionByZero(SliceRegError, ZeroDivisionError):
    """零元求逆或除以零多项式"""

    code = "division_by_zero"


class DegenerateFrame(SliceRegError):
    """两个虚单位线性相关，无法构造适配标架"""

    code = "degenerate_frame"


class RootFindingFailed(SliceRegError):
    """求根迭代在上限内未收敛"""

    code = "root_finding_failed"


class ZeroFunction(SliceRegError):
    """输入为恒零函数"""

    code = "zero_function"


class InvalidSphere(SliceRegError):
    """球面参数非法（beta <= 0）"""

    code = "invalid_sphere"


class InconsistentSphere(SliceRegError):
    """f^s 在球面上为零，但无法提取合法的孤立零点"""

    code = "inconsistent_sphere"


class HasIsolatedNonRealZeros(SliceRegError):
    """存在非实孤立零点"""

    code = "has_isolated_non_real_zeros"


class NotRepresentable(SliceRegError):
    """实多项式无法写成某个 h 的对称化 h^s"""

    code = "not_representable"


class PreconditionViolated(SliceRegError):
    """前置条件不满足"""

    code = "precondition_violated"


class FormulaMismatch(SliceRegError):
    """闭式公式与直接计算不一致"""

    code = "formula_mismatch"


class StructureNotFound(SliceRegError):
    """应当存在的结构分解未能找到（数值失败）"""

    code = "structure_not_found"


class InvalidDegree(SliceRegError):
    """次数参数越界"""

    code = "invalid_degree"


class NumericalError(SliceRegError):
    """浮点运算溢出或得到非法数值"""

    code = "numerical_error"


class UsageError(SliceRegError):
    """命令行参数错误"""

    code = "usage_error"
    exit_code = 2


class ExpressionSyntaxError(SliceRegError):
    """表达式语法错误"""

    code = "syntax_error"
    exit_code = 2

    def __init__(self, message: str, offset: int, expected: Optional[Iterable[str]] = None):
        super().__init__(message)
        self.offset = offset
        self.expected = tuple(sorted(expected or ()))

    def to_dict(self) -> dict[str, Any]:
        data = super().to_dict()
        data["offset"] = self.offset
        data["expected"] = list(self.expected)
        return data


class SchemaError(SliceRegError):
    """JSON 结构不合法"""

    code = "schema_error"
    exit_code = 2
