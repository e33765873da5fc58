"""SlicePoly 的 *-代数与切片分类"""

import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from src.algebra.quaternion import I_UNIT, J_UNIT, K_UNIT, QI, QJ, QK, ImaginaryUnit, Quaternion, adapted_frame
from src.algebra.realpoly import RealPoly
from src.algebra.roots import sqrt_if_square
from src.errors import ZeroFunction
from src.expression import evaluate_text as P
from src.slice.slicepoly import (
    SlicePoly,
    SliceVerdict,
    bilinear_slice_test,
    classify,
    evaluate,
    hermitian,
    pairing,
    rdependent,
    star_conj,
    star_mul,
    symmetrized,
    vector_part,
    wedge,
)
from tests.strategies import non_real_points, nonzero_slicepolys, one_slice_polys, slicepolys, units


# ==================== *-乘积 ====================


def test_constants_multiply_like_quaternions():
    i, j = SlicePoly.constant(QI), SlicePoly.constant(QJ)
    assert star_mul(i, j) == SlicePoly.constant(QK)
    assert star_mul(j, i) == SlicePoly.constant(-QK)


def test_variable_commutes_with_units():
    q = SlicePoly.variable()
    i = SlicePoly.constant(QI)
    assert star_mul(q, i) == star_mul(i, q)


@given(slicepolys(), slicepolys(), slicepolys())
def test_star_product_is_associative(f, g, h):
    assert star_mul(star_mul(f, g), h).isclose(star_mul(f, star_mul(g, h)))


@given(slicepolys(), slicepolys())
def test_conjugation_reverses_products(f, g):
    assert star_conj(star_mul(f, g)).isclose(star_mul(star_conj(g), star_conj(f)))


@given(slicepolys(), slicepolys())
def test_real_functions_commute(f, g):
    real = SlicePoly.real(f.c0)
    assert star_mul(real, g).isclose(star_mul(g, real))


@given(slicepolys())
def test_symmetrized_is_real(f):
    product = star_mul(f, star_conj(f))
    assert product.is_real()
    assert product.c0 == symmetrized(f)


@given(slicepolys(), slicepolys())
def test_symmetrized_is_multiplicative(f, g):
    assert symmetrized(star_mul(f, g)).isclose(symmetrized(f) * symmetrized(g))


def test_scalar_multiplication_is_componentwise():
    f = P("q + i")
    assert (f * 2).components == (RealPoly([0.0, 2.0]), RealPoly([2.0]), RealPoly(), RealPoly())
    assert (RealPoly([0.0, 1.0]) * f) == star_mul(SlicePoly.variable(), f)


# ==================== 求值 ====================


def test_evaluate_at_zeros():
    assert P("q^2 + 1")(QI).isclose(Quaternion(), abs_=1e-12)
    assert P("q - i")(QI).isclose(Quaternion(), abs_=1e-12)
    assert not P("q - i")(QJ).isclose(Quaternion(), abs_=1e-12)


def test_evaluate_uses_right_coefficients():
    f = star_mul(SlicePoly.variable(), SlicePoly.constant(QI))
    p = Quaternion(0.0, 0.0, 1.0, 0.0)
    assert evaluate(f, p) == QJ * QI


@given(nonzero_slicepolys(), nonzero_slicepolys(), non_real_points())
def test_product_evaluation_formula(f, g, p):
    fp = f(p)
    assume(fp.norm() > 0.1)
    twisted = fp.inverse() * p * fp
    assert star_mul(f, g)(p).isclose(fp * g(twisted), rel=1e-8, abs_=1e-8)


# ==================== 配对、楔积与 Hermitian 乘积 ====================


def test_pairing_and_wedge():
    assert pairing(P("q + i"), P("q - i")) == RealPoly([-1.0, 0.0, 1.0])
    assert wedge(SlicePoly.constant(QI), SlicePoly.constant(QJ)) == SlicePoly.constant(QK)


def test_hermitian_examples():
    assert hermitian(P("q + i"), P("q - i")).isclose(P("q^2 - 1 + 2*q*i"))
    assert hermitian(P("1"), P("j")).isclose(P("-j"))


@given(slicepolys())
def test_hermitian_square_is_symmetrized(f):
    assert hermitian(f, f).isclose(SlicePoly.real(symmetrized(f)))


@given(slicepolys(), slicepolys())
def test_hermitian_decomposes_through_pairing(f, g):
    expected = SlicePoly.real(pairing(f, g))
    for unit in (QI, QJ, QK):
        rotated = star_mul(SlicePoly.constant(unit), g)
        expected = expected + SlicePoly.along(pairing(f, rotated), unit)
    assert hermitian(f, g).isclose(expected)


def test_rdependent():
    f = P("q + i")
    assert rdependent(f, star_mul(f, SlicePoly.variable()))
    assert not rdependent(f, P("q + j"))


# ==================== 标架分量 ====================


@given(slicepolys())
def test_frame_components_round_trip(f):
    frame = adapted_frame(I_UNIT, ImaginaryUnit.direction(1.0, 2.0, 2.0))
    assert SlicePoly.from_frame(f.in_frame(frame), frame).isclose(f)


def test_in_slice():
    assert P("q + 2*q^2*i").in_slice(I_UNIT)
    assert P("q^2 + 1").in_slice(J_UNIT)
    assert not P("q + j").in_slice(I_UNIT)


# ==================== 分类 ====================


def test_classify_one_slice():
    result = classify(P("q^2*k + 3"))
    assert result.verdict is SliceVerdict.ONE_SLICE
    assert result.axis.vector == pytest.approx(K_UNIT.vector)


def test_classify_all_slices():
    assert classify(P("q^2 + 1")).verdict is SliceVerdict.ALL_SLICES


def test_classify_no_slice():
    assert classify(P("q*i + q^2*j")).verdict is SliceVerdict.NO_SLICE


def test_classify_rank_one_mixed_axis():
    result = classify(P("(1 + q)*i + (2 + 2*q)*j"))
    assert result.is_one
    assert result.axis.vector == pytest.approx((1 / math.sqrt(5), 2 / math.sqrt(5), 0.0))


def test_classify_axis_is_canonical():
    assert classify(P("-q*i")).axis.vector == pytest.approx(I_UNIT.vector)


def test_classify_zero_raises():
    with pytest.raises(ZeroFunction):
        classify(SlicePoly())


@given(nonzero_slicepolys())
def test_classification_agrees_with_membership(f):
    result = classify(f)
    if result.is_all:
        assert f.is_real()
    elif result.is_one:
        assert f.in_slice(result.axis)
    else:
        assert not f.is_real()
        size = f.degree + 1
        matrix = np.array([[c[n] for n in range(size)] for c in (f.c1, f.c2, f.c3)])
        assert np.linalg.matrix_rank(matrix) >= 2


@given(one_slice_polys())
def test_one_slice_vector_part_is_root_of_its_norm(f):
    result = classify(f)
    assert result.is_one
    root = sqrt_if_square(symmetrized(vector_part(f)))
    assert root is not None
    expected = SlicePoly.along(root, result.axis)
    assert vector_part(f).isclose(expected, rel=1e-7) or vector_part(f).isclose(-expected, rel=1e-7)


@given(units(), st.data())
def test_functions_on_one_axis_commute(axis, data):
    f = data.draw(one_slice_polys(axis))
    h = data.draw(one_slice_polys(axis))
    assert star_mul(f, h).isclose(star_mul(h, f))


# ==================== 双线性判据 ====================


def test_bilinear_slice_test():
    assert bilinear_slice_test(P("q + i"), P("q - i"), I_UNIT)
    assert not bilinear_slice_test(P("q + j"), P("1"), I_UNIT)


def test_format():
    assert str(SlicePoly.variable()) == "q"
    assert str(P("q + i")) == "q + i"
    assert str(P("q^2*k + 3")) == "3 + (q^2)k"
    assert str(SlicePoly()) == "0"


def test_format_folds_negative_terms():
    assert str(P("q - i")) == "q - i"
    assert str(P("1 - 2*j")) == "1 - 2j"
    assert str(P("-q*k")) == "(-q)k"
    assert str(P("q^2 - q*j")) == "q^2 + (-q)j"
