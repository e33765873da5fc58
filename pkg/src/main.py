"""slicereg 命令行入口

用法：
    python -m src.main classify "q^2*k + 3"
    python -m src.main zeros "(q - i)*(q + j)"
    python -m src.main power "(1 + q^2) + 2*q*i + (1 - q^2)*j" 4 --check-slice

结果以 JSON 写到 stdout（{"result": ...}），错误以 JSON 写到 stderr。
退出码：0 成功；1 领域错误；2 语法/结构/参数错误。
"""

import argparse
import json
import sys
from typing import Any, Callable, NoReturn, Optional, Sequence

from loguru import logger

from src import __version__
from src.algebra.quaternion import ImaginaryUnit, Quaternion
from src.config import settings
from src.errors import NumericalError, PreconditionViolated, SchemaError, SliceRegError, UsageError
from src.expression import eval_expr, format_expr, parse
from src.output import deserialize, to_payload
from src.runtime_config import get_runtime_config
from src.slice import (
    bilinear_slice_test,
    classify,
    commuting_conjugates,
    conjugate_by,
    conjugated_structure,
    conjugator_structure,
    factor_on_sphere,
    hermitian,
    polynomial_weierstrass,
    power_expand,
    power_slice_preserving,
    product_preserved_slice,
    qd,
    reassemble_on_sphere,
    sigma,
    solve_conjugation_f,
    solve_conjugation_h,
    star_conj,
    star_power,
    sum_preserved_slice,
    symmetrized,
    symmetrized_root,
    twisted_pair_structure,
    zero_structure,
)
from src.slice.slicepoly import SlicePoly

LOG_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)


def setup_logging(level: str) -> None:
    """配置日志；stdout 只留给 JSON 结果"""
    logger.remove()
    logger.add(sys.stderr, format=LOG_FORMAT, level=level)
    if settings.log_file:
        logger.add(settings.log_file, rotation="10 MB", retention="7 days", level="DEBUG")


# ==================== 参数类型 ====================


def _floats(text: str, count: int) -> tuple[float, ...]:
    try:
        values = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected {count} comma-separated reals, got {text!r}")
    if len(values) != count:
        raise argparse.ArgumentTypeError(f"expected {count} comma-separated reals, got {text!r}")
    return values


def axis_arg(text: str) -> ImaginaryUnit:
    """'x,y,z'，输入时归一化"""
    try:
        return ImaginaryUnit.direction(*_floats(text, 3))
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def quaternion_arg(text: str) -> Quaternion:
    return Quaternion(*_floats(text, 4))


def sphere_arg(text: str) -> tuple[float, float]:
    return _floats(text, 2)


def positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"tolerance must be positive, got {text}")
    return value


def load_poly(text: str) -> tuple[str, SlicePoly]:
    """表达式或 JSON（以 '{' 开头）；'-' 从 stdin 读取 JSON"""
    if text == "-":
        text = sys.stdin.read()
    if text.lstrip().startswith("{"):
        f = deserialize(text)
        return str(f), f
    tree = parse(text)
    return format_expr(tree), eval_expr(tree)


# ==================== 命令 ====================


def cmd_eval(args, f: SlicePoly) -> Any:
    if args.at is None:
        return f
    return {"poly": f, "value": f(args.at)}


def cmd_classify(args, f: SlicePoly) -> Any:
    return classify(f)


def cmd_conj(args, f: SlicePoly) -> Any:
    return star_conj(f)


def cmd_normal(args, f: SlicePoly) -> Any:
    return symmetrized(f)


def cmd_zeros(args, f: SlicePoly) -> Any:
    return zero_structure(f)


def cmd_factor(args, f: SlicePoly) -> Any:
    alpha, beta = args.sphere
    m, points, g = factor_on_sphere(f, alpha, beta)
    rebuilt = reassemble_on_sphere(alpha, beta, m, points, g)
    return {"m": m, "points": points, "g": g, "reassembles": rebuilt.isclose(f, rel=1e-8)}


def cmd_weierstrass(args, f: SlicePoly) -> Any:
    m, R, S, h = polynomial_weierstrass(f)
    return {"m": m, "R": R, "S": S, "h": h}


def cmd_symroot(args, mu: SlicePoly) -> Any:
    if not mu.is_real():
        raise PreconditionViolated("mu must be a real polynomial")
    return symmetrized_root(mu.c0, args.axis)


def cmd_sum_slice(args, f: SlicePoly, h: SlicePoly) -> Any:
    return sum_preserved_slice(f, h)


def cmd_prod_slice(args, f: SlicePoly, h: SlicePoly) -> Any:
    return product_preserved_slice(f, h)


def cmd_conj_by(args, h: SlicePoly, f: SlicePoly) -> Any:
    g = conjugate_by(h, f)
    return {"conjugate": g, "classification": None if g.is_zero() else classify(g)}


def cmd_solve_h(args, f: SlicePoly, g: SlicePoly) -> Any:
    return solve_conjugation_h(f, args.m0, g)


def cmd_solve_f(args, h: SlicePoly, g: SlicePoly) -> Any:
    return solve_conjugation_f(h, args.i0, g)


def cmd_twist(args, f: SlicePoly, h: SlicePoly) -> Any:
    return twisted_pair_structure(f, h)


def cmd_power(args, f: SlicePoly) -> Any:
    power = star_power(f, args.d)
    result: dict[str, Any] = {"power": power, "closed_form_agrees": power_expand(f, args.d).isclose(power, rel=1e-8)}
    if args.check_slice:
        result["slice"] = power_slice_preserving(f, args.d)
    return result


def cmd_sigma(args) -> Any:
    return sigma(args.d)


def cmd_qd(args) -> Any:
    return qd(args.d)


def cmd_conjugator(args, f: SlicePoly, h: SlicePoly) -> Any:
    return conjugator_structure(f, h, args.m0)


def cmd_conjugated(args, h: SlicePoly, f: SlicePoly) -> Any:
    return conjugated_structure(h, f)


def cmd_commute(args, f: SlicePoly, h: SlicePoly) -> Any:
    return commuting_conjugates(f, h)


def cmd_bilinear(args, f: SlicePoly, g: SlicePoly) -> Any:
    return bilinear_slice_test(f, g, args.i0)


def cmd_hermitian(args, f: SlicePoly, g: SlicePoly) -> Any:
    return hermitian(f, g)


# 命令名 -> (处理函数, 表达式参数名, 说明)
COMMANDS: dict[str, tuple[Callable[..., Any], tuple[str, ...], str]] = {
    "eval": (cmd_eval, ("expr",), "求值为规范四分量形式"),
    "classify": (cmd_classify, ("expr",), "切片保持分类"),
    "conj": (cmd_conj, ("expr",), "共轭 f^c"),
    "normal": (cmd_normal, ("expr",), "对称化 f^s"),
    "zeros": (cmd_zeros, ("expr",), "零点结构"),
    "factor": (cmd_factor, ("expr",), "在给定球面上的因式分解"),
    "weierstrass": (cmd_weierstrass, ("expr",), "q^m R S h 分解"),
    "symroot": (cmd_symroot, ("mu",), "构造 h ∈ S_axis 使 h^s = mu"),
    "sum-slice": (cmd_sum_slice, ("f", "h"), "f + h 保持的切片"),
    "prod-slice": (cmd_prod_slice, ("f", "h"), "f * h 保持的切片"),
    "conj-by": (cmd_conj_by, ("h", "f"), "h * f * h^c"),
    "solve-h": (cmd_solve_h, ("f", "g"), "求 h ∈ S_M0 使 h*f*h^c = g"),
    "solve-f": (cmd_solve_f, ("h", "g"), "求 f ∈ S_I0 使 h*f*h^c = g"),
    "twist": (cmd_twist, ("f", "h"), "f*h 与 h*f 均单切片保持时的结构"),
    "power": (cmd_power, ("expr",), "*-幂"),
    "sigma": (cmd_sigma, (), "Q_d 的非零实根集"),
    "qd": (cmd_qd, (), "二元型 Q_d"),
    "conjugator": (cmd_conjugator, ("f", "h"), "共轭因子 h 的结构"),
    "conjugated": (cmd_conjugated, ("h", "f"), "h ∈ S_I0 时被共轭函数 f 的结构"),
    "commute": (cmd_commute, ("f", "h"), "h*f*h^c 与 h^c*f*h 是否相等"),
    "bilinear": (cmd_bilinear, ("f", "g"), "双线性判据 f*g ∈ S_I0"),
    "hermitian": (cmd_hermitian, ("f", "g"), "Hermitian 乘积 f * g^c"),
}


class CliArgumentParser(argparse.ArgumentParser):
    """参数错误同样以 JSON 写到 stderr；子命令解析器沿用此类"""

    def error(self, message: str) -> NoReturn:
        error = UsageError(f"{self.prog}: {message}")
        _emit(sys.stderr, error.to_dict())
        sys.exit(error.exit_code)


def build_parser() -> argparse.ArgumentParser:
    parser = CliArgumentParser(
        prog="slicereg",
        description="四元数切片正则多项式计算工具",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--tol", type=positive_float, default=None, help="全局容差（覆盖 SLICEREG_TOL）")
    parser.add_argument("--profile", default=None, help="JSON 容差配置文件")
    parser.add_argument("--log-level", default=None, help="日志级别（默认取 SLICEREG_LOG_LEVEL）")

    sub = parser.add_subparsers(dest="command", required=True)
    for name, (handler, exprs, help_text) in COMMANDS.items():
        cmd = sub.add_parser(name, help=help_text)
        for expr in exprs:
            cmd.add_argument(expr, help="表达式，或以 '{' 开头的 JSON；'-' 从 stdin 读取")
        cmd.set_defaults(handler=handler, exprs=exprs)

        if name == "eval":
            cmd.add_argument("--at", type=quaternion_arg, default=None, help="求值点 w,x,y,z")
        elif name == "factor":
            cmd.add_argument("--sphere", type=sphere_arg, required=True, help="球面参数 alpha,beta")
        elif name == "symroot":
            cmd.add_argument("--axis", type=axis_arg, required=True, help="虚单位 x,y,z")
        elif name == "solve-h":
            cmd.add_argument("--m0", type=axis_arg, required=True, help="h 所在切片 x,y,z")
        elif name == "solve-f":
            cmd.add_argument("--i0", type=axis_arg, required=True, help="f 所在切片 x,y,z")
        elif name == "conjugator":
            cmd.add_argument("--m0", type=axis_arg, default=None, help="共轭结果所在切片 x,y,z")
        elif name == "bilinear":
            cmd.add_argument("--i0", type=axis_arg, required=True, help="目标切片 x,y,z")
        elif name == "power":
            cmd.add_argument("d", type=int, help="指数")
            cmd.add_argument("--check-slice", action="store_true", help="判定 f^{*d} 是否切片保持")
        elif name in ("sigma", "qd"):
            cmd.add_argument("d", type=int, help="次数")
    return parser


def _emit(stream, payload: dict[str, Any]) -> None:
    stream.write(json.dumps(payload, ensure_ascii=False) + "\n")


def _fail(command: str, error: SliceRegError) -> int:
    logger.debug(f"命令 {command} 失败: {error}")
    _emit(sys.stderr, error.to_dict())
    return error.exit_code


def run(args: argparse.Namespace) -> dict[str, Any]:
    """执行命令并返回 stdout 载荷"""
    manager = get_runtime_config()
    manager.reset()
    if args.profile and not manager.load_from_file(args.profile):
        raise SchemaError(f"Cannot load tolerance profile {args.profile}")
    if args.tol is not None:
        manager.override_tolerance(args.tol)

    texts, polys = [], []
    for name in args.exprs:
        text, f = load_poly(getattr(args, name))
        texts.append(text)
        polys.append(f)
    logger.debug(f"执行命令 {args.command}: {texts}")

    payload: dict[str, Any] = {"result": to_payload(args.handler(args, *polys))}
    if texts:
        payload["expr"] = texts
    return payload


def main(argv: Optional[Sequence[str]] = None) -> int:
    """主函数

    Returns:
        退出码
    """
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level or settings.log_level)

    try:
        payload = run(args)
    except SliceRegError as e:
        return _fail(args.command, e)
    except (OverflowError, FloatingPointError, ValueError) as e:
        logger.warning(f"命令 {args.command} 出现数值异常: {e!r}")
        return _fail(args.command, NumericalError(str(e)))
    _emit(sys.stdout, payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
