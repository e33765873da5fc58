"""切片正则多项式模块

*-代数、零点结构、切片保持律与 *-幂。

模块结构：
- slicepoly: SlicePoly、*-乘积、共轭、对称化、切片分类
- zeros: 零点球面、因式剥离、Weierstrass 型分解、h^s = μ 的构造
- laws: 和/积/共轭的切片保持判定与共轭方程求解
- powers: *-幂展开、二元型 Q_d 与 Σ_d

使用示例：
    from src.slice import SlicePoly, classify, star_mul

    q = SlicePoly.variable()
    f = star_mul(q, q)
    print(classify(f).verdict)
"""

from .laws import (
    Branch,
    ConjugatedCase,
    ConjugatedForm,
    ConjugationWitness,
    ProductWitness,
    TwistCase,
    TwistedPair,
    commuting_conjugates,
    conjugate_by,
    conjugated_structure,
    conjugation_classify,
    conjugator_structure,
    product_preserved_slice,
    real_product_criterion,
    solve_conjugation_f,
    solve_conjugation_h,
    sum_preserved_slice,
    twisted_pair_structure,
)
from .powers import (
    BinaryForm,
    PowerSliceResult,
    PowerVerdict,
    SigmaSet,
    power_expand,
    power_slice_preserving,
    power_vector_factor,
    qd,
    sigma,
    sigma_oracle,
    star_power,
)
from .slicepoly import (
    SliceClass,
    SlicePoly,
    SliceVerdict,
    bilinear_slice_test,
    classify,
    evaluate,
    format_slicepoly,
    hermitian,
    pairing,
    rdependent,
    real_part,
    star_conj,
    star_mul,
    symmetrized,
    vector_part,
    wedge,
)
from .zeros import (
    IsolatedZero,
    SphereRestriction,
    SphereZero,
    ZeroStructure,
    factor_on_sphere,
    left_divide_linear,
    polynomial_weierstrass,
    reassemble_on_sphere,
    restrict_to_sphere,
    symmetrized_root,
    zero_structure,
)

__all__ = [
    # *-代数
    "SlicePoly",
    "star_mul",
    "star_conj",
    "symmetrized",
    "real_part",
    "vector_part",
    "pairing",
    "wedge",
    "hermitian",
    "evaluate",
    "rdependent",
    "format_slicepoly",
    # 分类
    "SliceVerdict",
    "SliceClass",
    "classify",
    "bilinear_slice_test",
    # 零点
    "SphereRestriction",
    "IsolatedZero",
    "SphereZero",
    "ZeroStructure",
    "restrict_to_sphere",
    "left_divide_linear",
    "zero_structure",
    "factor_on_sphere",
    "reassemble_on_sphere",
    "polynomial_weierstrass",
    "symmetrized_root",
    # 切片保持律
    "Branch",
    "TwistCase",
    "ConjugatedCase",
    "ProductWitness",
    "ConjugationWitness",
    "TwistedPair",
    "ConjugatedForm",
    "sum_preserved_slice",
    "product_preserved_slice",
    "real_product_criterion",
    "conjugate_by",
    "commuting_conjugates",
    "conjugation_classify",
    "conjugator_structure",
    "conjugated_structure",
    "solve_conjugation_h",
    "solve_conjugation_f",
    "twisted_pair_structure",
    # *-幂
    "BinaryForm",
    "SigmaSet",
    "PowerVerdict",
    "PowerSliceResult",
    "qd",
    "sigma",
    "sigma_oracle",
    "star_power",
    "power_expand",
    "power_vector_factor",
    "power_slice_preserving",
]
