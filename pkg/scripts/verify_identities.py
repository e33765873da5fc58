#!/usr/bin/env python3
"""随机抽样验证 *-代数恒等式

在随机整数系数的切片正则多项式上检查：
- *-乘积结合律、共轭反序、对称化可乘
- 乘积求值公式 (f*g)(p) = f(p) g(f(p)^{-1} p f(p))
- *-幂闭式与逐次相乘一致
- Σ_d 与 cot(kπ/d) 一致
- h^s = μ 构造的正确性

使用方法：
    python scripts/verify_identities.py [样本数]
"""

import os
import sys

# 添加项目根目录到 path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np
from dotenv import load_dotenv

# 加载环境变量（SLICEREG_TOL 等）
load_dotenv()

from src.algebra.quaternion import I_UNIT, Quaternion
from src.slice import (
    SlicePoly,
    power_expand,
    sigma,
    sigma_oracle,
    star_conj,
    star_mul,
    star_power,
    symmetrized,
    symmetrized_root,
)

rng = np.random.default_rng(2024)


def random_poly(max_degree: int = 2) -> SlicePoly:
    return SlicePoly.from_components(*(rng.integers(-3, 4, size=max_degree + 1).astype(float) for _ in range(4)))


def random_point() -> Quaternion:
    return Quaternion(*rng.uniform(-2.0, 2.0, size=4))


def check_algebra(samples: int) -> bool:
    print("🧮 *-代数恒等式...")
    failures = 0
    for _ in range(samples):
        f, g, h = random_poly(), random_poly(), random_poly()
        if not star_mul(star_mul(f, g), h).isclose(star_mul(f, star_mul(g, h))):
            failures += 1
        if not star_conj(star_mul(f, g)).isclose(star_mul(star_conj(g), star_conj(f))):
            failures += 1
        if not symmetrized(star_mul(f, g)).isclose(symmetrized(f) * symmetrized(g)):
            failures += 1
    print(f"   {'✅' if failures == 0 else '❌'} {3 * samples} 项检查，失败 {failures}")
    return failures == 0


def check_evaluation(samples: int) -> bool:
    print("📍 乘积求值公式...")
    failures = skipped = 0
    for _ in range(samples):
        f, g, p = random_poly(), random_poly(), random_point()
        fp = f(p)
        if fp.norm() < 0.1:
            skipped += 1
            continue
        expected = fp * g(fp.inverse() * p * fp)
        if not star_mul(f, g)(p).isclose(expected, rel=1e-8, abs_=1e-8):
            failures += 1
    print(f"   {'✅' if failures == 0 else '❌'} 失败 {failures}，跳过 {skipped}（f(p) 接近零）")
    return failures == 0


def check_powers(samples: int) -> bool:
    print("⚡ *-幂闭式...")
    failures = 0
    for _ in range(samples):
        f = random_poly(1)
        for d in range(2, 7):
            if not power_expand(f, d).isclose(star_power(f, d), rel=1e-8):
                failures += 1
    print(f"   {'✅' if failures == 0 else '❌'} {5 * samples} 项检查，失败 {failures}")
    return failures == 0


def check_sigma() -> bool:
    print("📐 Σ_d 与 cot(kπ/d)...")
    ok = True
    for d in range(3, 13):
        found, expected = sigma(d).roots, sigma_oracle(d)
        same = len(found) == len(expected) and np.allclose(found, expected, rtol=1e-9, atol=1e-9)
        if not same:
            print(f"   ❌ d={d}: {found} != {expected}")
            ok = False
    if ok:
        print("   ✅ d = 3..12 全部一致")
    return ok


def check_symmetrized_root(samples: int) -> bool:
    print("🔁 h^s = μ 构造...")
    failures = 0
    for _ in range(samples):
        f = SlicePoly.from_components(rng.integers(-3, 4, size=3).astype(float), rng.integers(-3, 4, size=3).astype(float))
        if f.is_zero():
            continue
        mu = symmetrized(f)
        h = symmetrized_root(mu, I_UNIT)
        if not (h.in_slice(I_UNIT) and symmetrized(h).isclose(mu, rel=1e-6)):
            failures += 1
    print(f"   {'✅' if failures == 0 else '❌'} 失败 {failures}")
    return failures == 0


def main() -> bool:
    samples = int(sys.argv[1]) if len(sys.argv) > 1 else 50
    print("=" * 60)
    print(f"🔬 slicereg 恒等式抽样验证（样本数 {samples}）")
    print("=" * 60)
    print()

    results = [
        check_algebra(samples),
        check_evaluation(samples),
        check_powers(samples),
        check_sigma(),
        check_symmetrized_root(samples),
    ]

    print()
    if all(results):
        print("🎉 全部通过")
    else:
        print("⚠️  存在失败项，请检查容差设置（SLICEREG_TOL）")
    return all(results)


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
