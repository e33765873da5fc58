"""切片保持律

和、*-乘积与共轭 h*f*h^c 何时保持某个切片的判定，以及
在单切片约束下求解 h*f*h^c = g 的构造性算法。

所有"是否存在"类判定都以 classify 作用于实际计算出的函数为主路径，
结构性充要条件只作交叉核对，不一致时记录警告。
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from loguru import logger

from src.algebra.quaternion import (
    ONE,
    Frame,
    ImaginaryUnit,
    Quaternion,
    adapted_frame,
    complete_basis,
    norm3,
    qinv,
)
from src.algebra.realpoly import RealPoly, pexact_div, pratio
from src.algebra.roots import nonneg_even_real_zeros, sqrt_if_square
from src.errors import (
    FormulaMismatch,
    NotRepresentable,
    PreconditionViolated,
    StructureNotFound,
    ZeroFunction,
)
from src.runtime_config import tolerance
from src.slice.slicepoly import (
    SliceClass,
    SlicePoly,
    classify,
    pairing,
    rdependent,
    real_part,
    star_conj,
    star_mul,
    symmetrized,
    vector_part,
    wedge,
)
from src.slice.zeros import symmetrized_root

# 分解重组的相对容差
_REASSEMBLY_TOL = 1e-8


class Branch(str, Enum):
    """(a ± 1)/b 的分支；ORTHOGONAL 对应 C_M0 = C_I0"""

    PLUS_ONE = "plus_one"
    MINUS_ONE = "minus_one"
    ORTHOGONAL = "orthogonal"


class TwistCase(str, Enum):
    SAME_SLICE = "same_slice"
    SAME_SLICE_ORTHOGONAL = "same_slice_orthogonal"
    DIFFERENT_SLICE = "different_slice"


class ConjugatedCase(str, Enum):
    ORTHOGONAL = "orthogonal"
    GENERAL = "general"


@dataclass(frozen=True)
class ProductWitness:
    """f*h ∈ S_K0 的见证，K0 = a I0 + b J0 + ε I0∧J0"""

    K0: ImaginaryUnit
    a: float
    b: float
    eps: float


@dataclass(frozen=True)
class ConjugationWitness:
    """h = u * g，u = 1 - ((a±1)/b) K0 或 u = J0，g ∈ S_I0"""

    M0: ImaginaryUnit
    branch: Branch
    g: SlicePoly
    frame: Frame

    @property
    def factor(self) -> Quaternion:
        if self.branch is Branch.ORTHOGONAL:
            return self.frame.J0.axis
        return ONE - self.frame.K0.axis * branch_tau(self.frame, self.branch)

    def reassemble(self) -> SlicePoly:
        return star_mul(SlicePoly.constant(self.factor), self.g)


@dataclass(frozen=True)
class TwistedPair:
    """f*h 与 h*f 均为单切片保持时 (f, h) 的结构分解"""

    f_tilde: SlicePoly
    h_tilde: SlicePoly
    case: TwistCase
    frame: Optional[Frame] = None
    branch: Optional[Branch] = None
    f_branch: Optional[Branch] = None
    alpha: Optional[RealPoly] = None
    alpha_axis: Optional[ImaginaryUnit] = None

    def reassemble(self) -> tuple[SlicePoly, SlicePoly]:
        """还原 (f, h)"""
        if self.case is TwistCase.SAME_SLICE:
            return self.f_tilde, self.h_tilde
        if self.case is TwistCase.SAME_SLICE_ORTHOGONAL:
            f = star_mul(self.f_tilde, SlicePoly.constant(self.frame.K0.axis))
            h = star_mul(SlicePoly.constant(self.frame.J0.axis), self.h_tilde)
            return f, h
        K0 = self.frame.K0.axis
        f = star_mul(self.f_tilde, SlicePoly.constant(ONE + K0 * branch_tau(self.frame, self.f_branch)))
        h = star_mul(SlicePoly.constant(ONE - K0 * branch_tau(self.frame, self.branch)), self.h_tilde)
        return f, h


@dataclass(frozen=True)
class ConjugatedForm:
    """h ∈ S_I0 时 f 的结构：由 ρ 与标架给出 f 的虚分量"""

    case: ConjugatedCase
    rho: RealPoly
    frame: Frame


# ==================== 工具 ====================


def branch_tau(frame: Frame, branch: Branch) -> float:
    """τ = (a ± 1)/b"""
    if branch is Branch.PLUS_ONE:
        return (frame.a + 1.0) / frame.b
    if branch is Branch.MINUS_ONE:
        return (frame.a - 1.0) / frame.b
    raise ValueError("Orthogonal branch has no tau")


def _negligible(p: RealPoly | SlicePoly, scale: float) -> bool:
    tol = tolerance()
    return p.norm() <= tol.eps_abs + tol.eps_rel * max(scale, 1.0)


def _left(q: Quaternion, f: SlicePoly) -> SlicePoly:
    return star_mul(SlicePoly.constant(q), f)


def _right(f: SlicePoly, q: Quaternion) -> SlicePoly:
    return star_mul(f, SlicePoly.constant(q))


def _one_slice_axis(f: SlicePoly, name: str) -> ImaginaryUnit:
    verdict = classify(f)
    if not verdict.is_one:
        raise PreconditionViolated(f"{name} must preserve exactly one slice, got {verdict.verdict.value}")
    return verdict.axis


# ==================== 和与积 ====================


def sum_preserved_slice(f: SlicePoly, h: SlicePoly) -> Optional[ImaginaryUnit]:
    """f ∈ S_I0，h ∈ S_J0 时 f + h 保持的切片

    结构判据：f1 与 h1 成比例（b f1 = a h1）

    Raises:
        PreconditionViolated: f 或 h 不是单切片保持，或 C_I0 = C_J0
    """
    I0 = _one_slice_axis(f, "f")
    J0 = _one_slice_axis(h, "h")
    if I0.same_slice(J0):
        raise PreconditionViolated("f and h must preserve different slices")

    ratio = pratio(f.component_along(I0), h.component_along(J0))
    predicted = None
    if ratio is not None and ratio != 0.0:
        v = tuple(ratio * s + t for s, t in zip(I0.vector, J0.vector))
        predicted = ImaginaryUnit.from_vector(v).canonical()

    verdict = classify(f + h)
    actual = verdict.axis if verdict.is_one else None
    if (predicted is None) != (actual is None) or (
        predicted is not None and not predicted.same_slice(actual)
    ):
        logger.warning(f"和的切片判据与分类器不一致: 判据={predicted}, 分类={actual}")
    return actual


def product_preserved_slice(f: SlicePoly, h: SlicePoly) -> Optional[ProductWitness]:
    """f ∈ S_I0，h ∈ S_J0 时 f*h 保持的切片与见证 (K0, a, b, ε)

    判据：f0/f1 与 h0/h1 均为实常数，此时 K0 ∝ (h0/h1) I0 + (f0/f1) J0 + I0∧J0

    Raises:
        PreconditionViolated: 同 sum_preserved_slice
    """
    I0 = _one_slice_axis(f, "f")
    J0 = _one_slice_axis(h, "h")
    if I0.same_slice(J0):
        raise PreconditionViolated("f and h must preserve different slices")

    r_f = pratio(f.c0, f.component_along(I0))
    r_h = pratio(h.c0, h.component_along(J0))
    witness = None
    if r_f is not None and r_h is not None:
        w = I0.cross(J0)
        v = tuple(r_h * s + r_f * t + c for s, t, c in zip(I0.vector, J0.vector, w))
        n = norm3(v)
        witness = ProductWitness(ImaginaryUnit.from_vector(v), r_h / n, r_f / n, 1.0 / n)

    verdict = classify(star_mul(f, h))
    agree = (witness is not None) == verdict.is_one and (
        witness is None or verdict.axis.same_slice(witness.K0)
    )
    if not agree:
        logger.warning(f"积的切片判据与分类器不一致: 见证={witness}, 分类={verdict.verdict.value}")
        return None
    return witness


def real_product_criterion(f: SlicePoly, h: SlicePoly) -> bool:
    """f*h ∈ S_R 当且仅当 f 与 h^c 在实多项式上线性相关"""
    result = rdependent(f, star_conj(h))
    product = star_mul(f, h)
    if not product.is_zero() and classify(product).is_all != result:
        logger.warning(f"实切片判据与分类器不一致: 判据={result}")
    return result


# ==================== 共轭 ====================


def conjugate_by(h: SlicePoly, f: SlicePoly) -> SlicePoly:
    """h * f * h^c，直接乘积与闭式公式双重计算

    闭式：[·]_0 + <h_v, f_v> h_v + h_0² f_v + 2 h_0 (h_v ∧ f_v) - (h_v ∧ f_v) ∧ h_v，
    实部 h_0² f_0 + f_0 <h_v, h_v>

    Raises:
        FormulaMismatch: 两种计算不一致
    """
    direct = star_mul(star_mul(h, f), star_conj(h))

    h0, hv = real_part(h), vector_part(h)
    f0, fv = real_part(f), vector_part(f)
    w = wedge(hv, fv)
    scalar = h0 * h0 * f0 + f0 * pairing(hv, hv)
    formula = (
        SlicePoly.real(scalar)
        + hv * pairing(hv, fv)
        + fv * (h0 * h0)
        + w * (h0 * 2.0)
        - wedge(w, hv)
    )

    if not direct.isclose(formula):
        logger.error(f"共轭闭式与直接乘积不一致: h={h}, f={f}")
        raise FormulaMismatch("Closed-form conjugation disagrees with the direct triple product")
    return direct


def commuting_conjugates(f: SlicePoly, h: SlicePoly) -> bool:
    """h*f*h^c = h^c*f*h 当且仅当 h_0 ≡ 0 或 h_v ∧ f_v ≡ 0"""
    result = conjugate_by(h, f).isclose(conjugate_by(star_conj(h), f))

    scale = h.norm() * f.norm()
    predicate = _negligible(h.c0, h.norm()) or _negligible(wedge(vector_part(h), vector_part(f)), scale)
    if predicate != result:
        logger.warning(f"共轭交换判据与直接比较不一致: 判据={predicate}, 比较={result}")
    return result


def conjugation_classify(h: SlicePoly, f: SlicePoly) -> SliceClass:
    """classify(h * f * h^c)

    Raises:
        ZeroFunction: h * f * h^c ≡ 0
    """
    g = conjugate_by(h, f)
    if g.is_zero():
        raise ZeroFunction("h * f * h^c vanishes identically")
    return classify(g)


def conjugator_structure(f: SlicePoly, h: SlicePoly, M0: Optional[ImaginaryUnit] = None) -> ConjugationWitness:
    """h*f*h^c ∈ S_M0 时 h 的结构

    - C_M0 ≠ C_I0: h = (1 - ((a±1)/b) K0) * g，g ∈ S_I0
    - C_M0 = C_I0: h = J0 * g，J0 ⊥ I0，g ∈ S_I0

    Args:
        f: 单切片保持函数（S_I0，不在 S_R 中）
        h: 不在 S_I0 中的函数
        M0: 共轭结果所在切片；为 None 时取分类结果

    Raises:
        PreconditionViolated: 前置条件不满足
        StructureNotFound: 数值失败
    """
    I0 = _one_slice_axis(f, "f")
    if h.in_slice(I0):
        raise PreconditionViolated("h must not lie in the slice of f")
    verdict = conjugation_classify(h, f)
    if not verdict.is_one:
        raise PreconditionViolated(f"h * f * h^c must preserve exactly one slice, got {verdict.verdict.value}")
    if M0 is None:
        M0 = verdict.axis
    elif not M0.same_slice(verdict.axis):
        raise PreconditionViolated(f"h * f * h^c preserves {verdict.axis}, not {M0}")

    if M0.same_slice(I0):
        J0, K0 = complete_basis(I0)
        frame = Frame(I0=I0, J0=J0, K0=K0, a=M0.dot(I0), b=0.0)
        g = _left(-J0.axis, h)
        witness = ConjugationWitness(M0, Branch.ORTHOGONAL, g, frame)
        if g.in_slice(I0) and witness.reassemble().isclose(h, rel=_REASSEMBLY_TOL):
            logger.debug(f"共轭结构: 正交情形，J0={J0}")
            return witness
        logger.error(f"正交情形分解失败: f={f}, h={h}")
        raise StructureNotFound("Orthogonal conjugator decomposition failed")

    frame = adapted_frame(I0, M0)
    for branch in (Branch.PLUS_ONE, Branch.MINUS_ONE):
        u = ONE - frame.K0.axis * branch_tau(frame, branch)
        g = _left(qinv(u), h)
        witness = ConjugationWitness(M0, branch, g, frame)
        if g.in_slice(I0) and witness.reassemble().isclose(h, rel=_REASSEMBLY_TOL):
            image = classify(conjugate_by(SlicePoly.constant(u), SlicePoly.constant(I0.axis)))
            if not image.preserves(M0):
                logger.warning(f"分支 {branch.value} 的因子未把 I0 送入 C_M0")
            logger.debug(f"共轭结构: 分支 {branch.value}, a={frame.a:.6g}, b={frame.b:.6g}")
            return witness

    logger.error(f"共轭结构分解失败: f={f}, h={h}, M0={M0}")
    raise StructureNotFound("No branch reassembles the conjugator")


def conjugated_structure(h: SlicePoly, f: SlicePoly) -> Optional[ConjugatedForm]:
    """h ∈ S_I0 \\ S_R，f ∉ S_I0 时，若 h*f*h^c ∈ S_M0 则给出 f 的结构

    - M0 ⊥ I0: (h^s)² f2 = ρ(h0² - h1²)，(h^s)² f3 = -2ρ h0 h1，f1 = 0
    - 一般位置: f1 = aρ，h^s f2 = bρ(h0² - h1²)，h^s f3 = -2bρ h0 h1

    Returns:
        结构；共轭不保持任何切片时返回 None

    Raises:
        PreconditionViolated: h 不是单切片保持或 f ∈ S_I0
        StructureNotFound: 观察到 C_M0 = C_I0 或结构方程不成立
    """
    I0 = _one_slice_axis(h, "h")
    if f.in_slice(I0):
        raise PreconditionViolated("f must not lie in the slice of h")

    verdict = conjugation_classify(h, f)
    if not verdict.is_one:
        return None
    M0 = verdict.axis
    if M0.same_slice(I0):
        logger.error(f"共轭落回 h 的切片，与结构定理矛盾: h={h}, f={f}")
        raise StructureNotFound("Conjugation by a one-slice function returned to its own slice")

    frame = adapted_frame(I0, M0)
    h0, h1 = h.c0, h.component_along(frame.I0)
    _, f1, f2, f3 = f.in_frame(frame)
    m1 = conjugate_by(h, f).component_along(frame.M0)
    hs = symmetrized(h)
    d = h0 * h0 - h1 * h1
    e = h0 * h1 * 2.0

    if frame.orthogonal:
        rho = m1
        checks = [(hs * hs * f2, rho * d), (hs * hs * f3, -(rho * e)), (f1, RealPoly())]
        case = ConjugatedCase.ORTHOGONAL
    else:
        rho = pexact_div(m1, hs)
        if rho is None:
            logger.error("h^s 不整除共轭结果的 M0 分量")
            raise StructureNotFound("h^s does not divide the M0-component of the conjugate")
        checks = [
            (f1, rho * frame.a),
            (hs * f2, rho * d * frame.b),
            (hs * f3, -(rho * e * frame.b)),
        ]
        case = ConjugatedCase.GENERAL

    # 两侧量级约为 ‖f‖·‖h^s‖²
    floor = _REASSEMBLY_TOL * max(f.norm(), 1.0) * max(hs.norm(), 1.0) ** 2
    for lhs, rhs in checks:
        if not SlicePoly.real(lhs).isclose(SlicePoly.real(rhs), rel=_REASSEMBLY_TOL, abs_=floor):
            logger.error(f"结构方程不成立: {lhs} != {rhs}")
            raise StructureNotFound("Structure equations of the conjugated function do not hold")
    return ConjugatedForm(case, rho, frame)


# ==================== 求解 h*f*h^c = g ====================


def _conjugates_to(h: SlicePoly, f: SlicePoly, g: SlicePoly) -> bool:
    """回代校验 h*f*h^c = g"""
    if conjugate_by(h, f).isclose(g, rel=tolerance().eps_verify):
        return True
    logger.debug(f"候选解回代失败: h={h}, f={f}")
    return False


def _sqrt_or_zero(p: RealPoly, scale: float = 0.0) -> Optional[RealPoly]:
    """平方根；相对 scale 可忽略的 p 视为零"""
    if p.is_zero() or _negligible(p, scale):
        return RealPoly()
    return sqrt_if_square(p)


def _solve_h_same_slice(f: SlicePoly, M0: ImaginaryUnit, g: SlicePoly) -> Optional[SlicePoly]:
    """C_M0 = C_I0：g = α f，α ≥ 0 且实零点偶数阶，h^s = α"""
    product = star_mul(g, star_conj(f))
    if not product.is_real():
        return None
    alpha = pexact_div(product.c0, symmetrized(f), scale=product.norm())
    if alpha is None or alpha.is_zero() or alpha.leading <= 0:
        return None
    if not nonneg_even_real_zeros(alpha):
        return None
    try:
        return symmetrized_root(alpha, M0)
    except NotRepresentable:
        return None


def _solve_h_general(f: SlicePoly, frame: Frame, g: SlicePoly) -> Optional[SlicePoly]:
    """一般位置（a, b > 0）

    g0 = f0 h^s，g1 = f1(h0² + (2a²-1)h1²)，g2 = 2ab f1 h1²，g3 = -2b f1 h0 h1
    """
    a, b = frame.a, frame.b
    f0, f1, _, _ = f.in_frame(frame)
    g0, g1, g2, g3 = g.in_frame(frame)

    alphas = [pexact_div(gl, f1, scale=g.norm()) for gl in (g1, g2, g3)]
    if any(x is None for x in alphas):
        return None
    alpha1, alpha2, alpha3 = alphas
    if f0.is_zero():
        if not _negligible(g0, g.norm()):
            return None
        alpha0 = alpha1 + alpha2 * (b / a)
    else:
        alpha0 = pexact_div(g0, f0, scale=g.norm())
        if alpha0 is None:
            return None

    # 交叉核对两个相容性条件
    scale = max(alpha0.norm(), alpha1.norm(), alpha2.norm(), alpha3.norm(), 1.0)
    if not _negligible((alpha0 - alpha1) * a - alpha2 * b, scale):
        logger.debug("相容性条件 a(α0 - α1) = bα2 不成立")
        return None
    if not _negligible(
        alpha1 * alpha2 * (2 * a * b) - alpha3 * alpha3 * (a * a) - alpha2 * alpha2 * (2 * a * a - 1),
        scale * scale,
    ):
        logger.debug("相容性条件 2abα1α2 = a²α3² + (2a²-1)α2² 不成立")
        return None

    h1 = _sqrt_or_zero(alpha2 * (1.0 / (2 * a * b)), scale)
    if h1 is None:
        return None
    if h1.is_zero():
        if not _negligible(alpha3, scale):
            return None
        h0 = _sqrt_or_zero(alpha0, scale)
    else:
        h0 = pexact_div(alpha3, h1 * (-2.0 * b), scale=scale)
    if h0 is None:
        return None
    return SlicePoly.real(h0) + SlicePoly.along(h1, frame.M0)


def _solve_h_orthogonal(f: SlicePoly, frame: Frame, g: SlicePoly) -> Optional[SlicePoly]:
    """M0 ⊥ I0：g2 ≡ 0，α0² = α1² + α3²，h0² = (α0+α1)/2，h1² = (α0-α1)/2"""
    f0, f1, _, _ = f.in_frame(frame)
    g0, g1, g2, g3 = g.in_frame(frame)
    if not _negligible(g2, g.norm()):
        return None

    alpha1 = pexact_div(g1, f1, scale=g.norm())
    alpha3 = pexact_div(g3, f1, scale=g.norm())
    if alpha1 is None or alpha3 is None:
        return None
    if f0.is_zero():
        if not _negligible(g0, g.norm()):
            return None
        alpha0 = _sqrt_or_zero(alpha1 * alpha1 + alpha3 * alpha3)
    else:
        alpha0 = pexact_div(g0, f0, scale=g.norm())
    if alpha0 is None:
        return None

    scale = max(alpha0.norm(), alpha1.norm(), alpha3.norm(), 1.0)
    if not _negligible(alpha0 * alpha0 - alpha1 * alpha1 - alpha3 * alpha3, scale * scale):
        logger.debug("相容性条件 α0² = α1² + α3² 不成立")
        return None

    h0 = _sqrt_or_zero((alpha0 + alpha1) * 0.5, scale)
    h1 = _sqrt_or_zero((alpha0 - alpha1) * 0.5, scale)
    if h0 is None or h1 is None:
        return None
    if not _negligible(h0 * h1 * (-2.0) - alpha3, scale):
        h1 = -h1
    return SlicePoly.real(h0) + SlicePoly.along(h1, frame.M0)


def solve_conjugation_h(f: SlicePoly, M0: ImaginaryUnit, g: SlicePoly) -> Optional[SlicePoly]:
    """求 h ∈ S_M0 使 h*f*h^c = g

    Args:
        f: S_I0 中的函数（或 S_R 中的函数）
        M0: h 所在切片
        g: 目标函数

    Returns:
        一个解；无解时返回 None

    Raises:
        PreconditionViolated: f 不保持任何切片
    """
    verdict = classify(f)
    if verdict.is_none:
        raise PreconditionViolated("f must lie in S_I0 for some I0")
    if g.is_zero():
        return None

    if verdict.is_all or M0.same_slice(verdict.axis):
        h = _solve_h_same_slice(f, M0, g)
    else:
        frame = adapted_frame(verdict.axis, M0, positive_a=True)
        if frame.orthogonal:
            h = _solve_h_orthogonal(f, frame, g)
        else:
            h = _solve_h_general(f, frame, g)
    if h is None or not _conjugates_to(h, f, g):
        return None
    return h


def solve_conjugation_f(h: SlicePoly, I0: ImaginaryUnit, g: SlicePoly) -> Optional[SlicePoly]:
    """求 f ∈ S_I0 使 h*f*h^c = g

    Args:
        h: 单切片保持函数（S_M0，不在 S_R 中）
        I0: f 所在切片
        g: 目标函数

    Returns:
        一个解；无解时返回 None

    Raises:
        PreconditionViolated: h 不是单切片保持
    """
    M0 = _one_slice_axis(h, "h")
    hs = symmetrized(h)

    if M0.same_slice(I0):
        if not g.in_slice(I0):
            return None
        parts = [c if c.is_zero() else pexact_div(c, hs, scale=g.norm()) for c in g.components]
        if any(p is None for p in parts):
            return None
        f = SlicePoly(*parts)
        return f if _conjugates_to(h, f, g) else None

    frame = adapted_frame(I0, M0)
    a, b = frame.a, frame.b
    h0, h1 = h.c0, h.component_along(frame.M0)
    g0, g1, g2, g3 = g.in_frame(frame)
    scale = max(g.norm() * h.norm(), 1.0)

    f0 = pexact_div(g0, hs, scale=g.norm())
    if f0 is None:
        return None

    if frame.orthogonal:
        if not _negligible(g2, g.norm()):
            return None
        if not _negligible(h0 * h1 * g1 * 2.0 + (h0 * h0 - h1 * h1) * g3, scale * h.norm()):
            logger.debug("相容性条件 2h0h1g1 + (h0² - h1²)g3 = 0 不成立")
        if _negligible(h0, h.norm()):
            f1 = pexact_div(-g1, h1 * h1, scale=g.norm())
        else:
            f1 = pexact_div(g3, h0 * h1 * (-2.0), scale=g.norm())
    else:
        if not _negligible(h0 * g2 + h1 * g3 * a, scale):
            logger.debug("相容性条件 h0g2 + ah1g3 = 0 不成立")
        if not _negligible(
            (h0 * h0 + h1 * h1 * (2 * a * a - 1)) * g2 - h1 * h1 * g1 * (2 * a * b), scale * h.norm()
        ):
            logger.debug("相容性条件 (h0² + (2a²-1)h1²)g2 = 2abh1²g1 不成立")
        f1 = pexact_div(g2, h1 * h1 * (2 * a * b), scale=g.norm())
    if f1 is None:
        return None
    f = SlicePoly.real(f0) + SlicePoly.along(f1, I0)
    return f if _conjugates_to(h, f, g) else None


# ==================== 扭对 ====================


def _orthogonal_alpha(f: SlicePoly, I0: ImaginaryUnit) -> tuple[Optional[RealPoly], Optional[ImaginaryUnit]]:
    """f = α I_f，I_f ⊥ I0 时返回 (α, I_f)"""
    verdict = classify(f)
    if not verdict.is_one or not verdict.axis.is_orthogonal(I0):
        return None, None
    if not _negligible(f.c0, f.norm()):
        return None, None
    return f.component_along(verdict.axis), verdict.axis


def twisted_pair_structure(f: SlicePoly, h: SlicePoly) -> TwistedPair:
    """f*h ∈ S_I0，h*f ∈ S_M0 时 (f, h) 的结构

    - C_I0 = C_M0: 要么 f, h ∈ S_I0，要么 f = f̃ * K0，h = J0 * h̃（J0, K0 ⊥ I0）
    - C_I0 ≠ C_M0: f = f̃ * (1 + ((a±1)/b) K0)，h = (1 - ((a±1)/b) K0) * h̃

    Raises:
        PreconditionViolated: 两个乘积不都是单切片保持
        StructureNotFound: 数值失败
    """
    fh = classify(star_mul(f, h))
    hf = classify(star_mul(h, f))
    if not (fh.is_one and hf.is_one):
        raise PreconditionViolated("Both f*h and h*f must preserve exactly one slice")
    I0, M0 = fh.axis, hf.axis

    if I0.same_slice(M0):
        if f.in_slice(I0) and h.in_slice(I0):
            return TwistedPair(f, h, TwistCase.SAME_SLICE)

        J0, K0 = complete_basis(I0)
        frame = Frame(I0=I0, J0=J0, K0=K0, a=M0.dot(I0), b=0.0)
        f_tilde = _right(f, -K0.axis)
        h_tilde = _left(-J0.axis, h)
        alpha, alpha_axis = _orthogonal_alpha(f, I0)
        pair = TwistedPair(
            f_tilde,
            h_tilde,
            TwistCase.SAME_SLICE_ORTHOGONAL,
            frame=frame,
            alpha=alpha,
            alpha_axis=alpha_axis,
        )
        rebuilt_f, rebuilt_h = pair.reassemble()
        if (
            f_tilde.in_slice(I0)
            and h_tilde.in_slice(I0)
            and rebuilt_f.isclose(f, rel=_REASSEMBLY_TOL)
            and rebuilt_h.isclose(h, rel=_REASSEMBLY_TOL)
        ):
            return pair
        logger.error(f"扭对正交分解失败: f={f}, h={h}")
        raise StructureNotFound("Orthogonal twisted-pair decomposition failed")

    frame = adapted_frame(I0, M0)
    K0 = frame.K0.axis

    h_choice = None
    for branch in (Branch.PLUS_ONE, Branch.MINUS_ONE):
        u = ONE - K0 * branch_tau(frame, branch)
        h_tilde = _left(qinv(u), h)
        if h_tilde.in_slice(I0) and _left(u, h_tilde).isclose(h, rel=_REASSEMBLY_TOL):
            h_choice = (branch, h_tilde)
            break

    f_choice = None
    for branch in (Branch.PLUS_ONE, Branch.MINUS_ONE):
        v = ONE + K0 * branch_tau(frame, branch)
        f_tilde = _right(f, qinv(v))
        if f_tilde.in_slice(I0) and _right(f_tilde, v).isclose(f, rel=_REASSEMBLY_TOL):
            f_choice = (branch, f_tilde)
            break

    if h_choice is None or f_choice is None:
        logger.error(f"扭对分解失败: f={f}, h={h}")
        raise StructureNotFound("No branch realizes the twisted-pair decomposition")
    if h_choice[0] != f_choice[0]:
        logger.debug(f"扭对两侧分支不同: h={h_choice[0].value}, f={f_choice[0].value}")

    alpha, alpha_axis = None, None
    if classify(f).is_one:
        alpha, alpha_axis = f_choice[1].component_along(frame.I0), frame.I0
    return TwistedPair(
        f_choice[1],
        h_choice[1],
        TwistCase.DIFFERENT_SLICE,
        frame=frame,
        branch=h_choice[0],
        f_branch=f_choice[0],
        alpha=alpha,
        alpha_axis=alpha_axis,
    )
