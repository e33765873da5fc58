"""结果格式化工具

把各运算的返回值统一转换为可 JSON 序列化的字典/列表。
"""

from enum import Enum
from typing import Any, Callable

from src.algebra.quaternion import Frame, ImaginaryUnit, Quaternion
from src.algebra.realpoly import RealPoly, format_realpoly
from src.output.serialization import serialize
from src.slice.laws import (
    ConjugatedForm,
    ConjugationWitness,
    ProductWitness,
    TwistedPair,
)
from src.slice.powers import BinaryForm, PowerSliceResult, SigmaSet
from src.slice.slicepoly import SliceClass, SlicePoly
from src.slice.zeros import IsolatedZero, SphereZero, ZeroStructure


# ==================== 基本对象 ====================


def format_poly(f: SlicePoly) -> dict[str, Any]:
    return {**serialize(f), "text": str(f)}


def format_realpoly_payload(p: RealPoly) -> dict[str, Any]:
    return {"coeffs": list(p.coeffs), "text": format_realpoly(p)}


def format_quaternion_payload(q: Quaternion) -> list[float]:
    return list(q.as_tuple())


def format_unit(u: ImaginaryUnit) -> list[float]:
    return list(u.vector)


def format_frame(frame: Frame) -> dict[str, Any]:
    return {
        "I0": format_unit(frame.I0),
        "J0": format_unit(frame.J0),
        "K0": format_unit(frame.K0),
        "a": frame.a,
        "b": frame.b,
    }


def format_slice_class(c: SliceClass) -> dict[str, Any]:
    return {"verdict": c.verdict.value, "axis": format_unit(c.axis) if c.axis else None}


# ==================== 零点 ====================


def format_isolated(z: IsolatedZero) -> dict[str, Any]:
    return {"point": format_quaternion_payload(z.point), "multiplicity": z.multiplicity}


def format_sphere(s: SphereZero) -> dict[str, Any]:
    return {
        "alpha": s.alpha,
        "beta": s.beta,
        "spherical_multiplicity": s.spherical_mult,
        "isolated": format_isolated(s.isolated) if s.isolated else None,
    }


def format_zero_structure(z: ZeroStructure) -> dict[str, Any]:
    return {
        "origin_multiplicity": z.origin_mult,
        "real_zeros": [{"value": x, "multiplicity": m} for x, m in z.real_zeros],
        "spheres": [format_sphere(s) for s in z.spheres],
    }


# ==================== 切片保持律 ====================


def format_product_witness(w: ProductWitness) -> dict[str, Any]:
    return {"K0": format_unit(w.K0), "a": w.a, "b": w.b, "eps": w.eps}


def format_conjugation_witness(w: ConjugationWitness) -> dict[str, Any]:
    return {
        "M0": format_unit(w.M0),
        "branch": w.branch.value,
        "factor": format_quaternion_payload(w.factor),
        "g": format_poly(w.g),
        "frame": format_frame(w.frame),
    }


def format_twisted_pair(t: TwistedPair) -> dict[str, Any]:
    return {
        "case": t.case.value,
        "f_tilde": format_poly(t.f_tilde),
        "h_tilde": format_poly(t.h_tilde),
        "frame": format_frame(t.frame) if t.frame else None,
        "h_branch": t.branch.value if t.branch else None,
        "f_branch": t.f_branch.value if t.f_branch else None,
        "alpha": format_realpoly_payload(t.alpha) if t.alpha is not None else None,
        "alpha_axis": format_unit(t.alpha_axis) if t.alpha_axis else None,
    }


def format_conjugated_form(c: ConjugatedForm) -> dict[str, Any]:
    return {"case": c.case.value, "rho": format_realpoly_payload(c.rho), "frame": format_frame(c.frame)}


# ==================== *-幂 ====================


def format_binary_form(q: BinaryForm) -> dict[str, Any]:
    return {
        "degree": q.degree,
        "coeffs": {str(n): c for n, c in sorted(q.coeffs.items())},
        "text": str(q),
    }


def format_sigma(s: SigmaSet) -> dict[str, Any]:
    return {"d": s.d, "roots": list(s.roots)}


def format_power_result(r: PowerSliceResult) -> dict[str, Any]:
    return {
        "verdict": r.verdict.value,
        "xi": r.xi,
        "axis": format_unit(r.axis) if r.axis else None,
    }


# ==================== 统一入口 ====================

FORMATTERS: dict[type, Callable[[Any], Any]] = {
    SlicePoly: format_poly,
    RealPoly: format_realpoly_payload,
    Quaternion: format_quaternion_payload,
    ImaginaryUnit: format_unit,
    Frame: format_frame,
    SliceClass: format_slice_class,
    IsolatedZero: format_isolated,
    SphereZero: format_sphere,
    ZeroStructure: format_zero_structure,
    ProductWitness: format_product_witness,
    ConjugationWitness: format_conjugation_witness,
    TwistedPair: format_twisted_pair,
    ConjugatedForm: format_conjugated_form,
    BinaryForm: format_binary_form,
    SigmaSet: format_sigma,
    PowerSliceResult: format_power_result,
}


def to_payload(value: Any) -> Any:
    """递归转换为 JSON 兼容对象"""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, Enum):
        return value.value
    formatter = FORMATTERS.get(type(value))
    if formatter is not None:
        return formatter(value)
    if isinstance(value, dict):
        return {str(k): to_payload(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_payload(v) for v in value]
    raise TypeError(f"No formatter for {type(value).__name__}")
