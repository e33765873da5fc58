"""和、积与共轭的切片保持律"""

import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.algebra.quaternion import I_UNIT, J_UNIT, K_UNIT, QI, QJ, QK, ImaginaryUnit
from src.algebra.realpoly import RealPoly
from src.errors import PreconditionViolated, ZeroFunction
from src.expression import evaluate_text as P
from src.slice.laws import (
    Branch,
    ConjugatedCase,
    TwistCase,
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
from src.slice.slicepoly import SlicePoly, classify, star_conj, star_mul
from tests.strategies import (
    distinct_slice_units,
    nonzero_realpolys,
    nonzero_slicepolys,
    off_axis_quaternions,
    one_slice_polys,
    realpolys,
    sliced_polys,
    slicepolys,
    small_ints,
    units,
)

DIAGONAL = ImaginaryUnit.direction(1.0, 1.0, 0.0)
HALF = math.sqrt(0.5)


# ==================== 和与积 ====================


def test_sum_preserves_combined_slice():
    axis = sum_preserved_slice(P("1 + 2*q*i"), P("3 + q*j"))
    assert axis.vector == pytest.approx((2 / math.sqrt(5), 1 / math.sqrt(5), 0.0))


def test_sum_preserves_nothing_when_components_not_proportional():
    assert sum_preserved_slice(P("q*i"), P("q^2*j")) is None


def test_sum_requires_distinct_one_slice_functions():
    with pytest.raises(PreconditionViolated):
        sum_preserved_slice(P("q + i"), P("q + 2*i"))
    with pytest.raises(PreconditionViolated):
        sum_preserved_slice(P("q^2 + 1"), P("q + j"))


def test_product_witness_for_pure_vectors():
    witness = product_preserved_slice(P("q*i"), P("q*j"))
    assert witness.K0.vector == pytest.approx(K_UNIT.vector)
    assert (witness.a, witness.b, witness.eps) == pytest.approx((0.0, 0.0, 1.0))


def test_product_witness_diagonal():
    witness = product_preserved_slice(P("(q + 1)*(1 + i)"), P("(q + 2)*(1 + j)"))
    third = 1 / math.sqrt(3)
    assert witness.K0.vector == pytest.approx((third, third, third))
    assert (witness.a, witness.b, witness.eps) == pytest.approx((third, third, third))


def test_product_without_preserved_slice():
    assert product_preserved_slice(P("(q + 1)*(1 + i)"), P("q + q^2*j")) is None


def test_real_product_criterion():
    assert real_product_criterion(P("q + i"), P("q - i"))
    assert not real_product_criterion(P("q + i"), P("q + j"))

@given(distinct_slice_units(), nonzero_realpolys(), realpolys(), realpolys(), small_ints, small_ints)
def test_sum_of_proportional_components_preserves_combined_slice(axes, p, f0, h0, a, b):
    assume(a != 0 and b != 0)
    I0, J0 = axes
    f = SlicePoly.real(f0) + SlicePoly.along(p * float(a), I0)
    h = SlicePoly.real(h0) + SlicePoly.along(p * float(b), J0)
    combined = ImaginaryUnit.from_vector(tuple(a * s + b * t for s, t in zip(I0.vector, J0.vector)))
    axis = sum_preserved_slice(f, h)
    assert axis is not None
    assert axis.same_slice(combined, abs_=1e-6)


@given(distinct_slice_units(), nonzero_realpolys(), nonzero_realpolys(), small_ints, small_ints)
def test_product_of_constant_ratio_factors_preserves_predicted_slice(axes, f1, h1, r, s):
    I0, J0 = axes
    f = star_mul(SlicePoly.real(f1), SlicePoly.constant(I0.axis + float(r)))
    h = star_mul(SlicePoly.real(h1), SlicePoly.constant(J0.axis + float(s)))
    w = I0.cross(J0)
    predicted = ImaginaryUnit.from_vector(tuple(s * x + r * y + z for x, y, z in zip(I0.vector, J0.vector, w)))
    witness = product_preserved_slice(f, h)
    assert witness is not None
    assert witness.K0.same_slice(predicted, abs_=1e-6)
    assert classify(star_mul(f, h)).preserves(witness.K0)


@given(nonzero_slicepolys(), nonzero_realpolys())
def test_product_with_scaled_conjugate_is_real(f, r):
    h = star_mul(star_conj(f), SlicePoly.real(r))
    assert real_product_criterion(f, h)
    assert star_mul(f, h).is_real()


@given(one_slice_polys())
def test_square_of_one_slice_function_with_real_part_is_not_real(f):
    assume(not f.c0.is_zero())
    assert not real_product_criterion(f, f)


# ==================== 共轭 ====================


def test_conjugate_by_examples():
    assert conjugate_by(P("1 - k"), P("q + i")).isclose(P("2*q - 2*j"))
    assert conjugate_by(P("1 + i"), P("q + j")).isclose(P("2*q + 2*k"))


@given(slicepolys(), slicepolys())
def test_conjugate_by_matches_triple_product(h, f):
    expected = star_mul(star_mul(h, f), star_conj(h))
    assert conjugate_by(h, f).isclose(expected)


def test_commuting_conjugates():
    assert commuting_conjugates(P("q + i"), P("q*i"))
    assert commuting_conjugates(P("q + 2*i"), P("1 + i"))
    assert not commuting_conjugates(P("q + i"), P("1 + k"))

@given(one_slice_polys(), nonzero_realpolys(), units())
def test_pure_vector_conjugators_commute(f, p, axis):
    assert commuting_conjugates(f, SlicePoly.along(p, axis))


@given(units(), st.data())
def test_conjugators_parallel_to_f_commute(axis, data):
    f = data.draw(one_slice_polys(axis))
    h = data.draw(sliced_polys(axis))
    assert commuting_conjugates(f, h)


@given(distinct_slice_units(), nonzero_realpolys(), nonzero_realpolys(), nonzero_realpolys())
def test_generic_conjugators_do_not_commute(axes, f1, h0, h1):
    I0, J0 = axes
    f = SlicePoly.variable() + SlicePoly.along(f1, I0)
    h = SlicePoly.real(h0) + SlicePoly.along(h1, J0)
    assert not commuting_conjugates(f, h)



def test_conjugation_classify():
    result = conjugation_classify(P("1 - k"), P("q + i"))
    assert result.is_one
    assert result.axis.vector == pytest.approx(J_UNIT.vector)
    with pytest.raises(ZeroFunction):
        conjugation_classify(P("1 - k"), SlicePoly())


# ==================== 共轭因子结构 ====================


def test_conjugator_general_position():
    h = P("1 - k")
    witness = conjugator_structure(P("q + i"), h)
    assert witness.branch is Branch.PLUS_ONE
    assert witness.g.isclose(P("1"))
    assert witness.reassemble().isclose(h)


def test_conjugator_returning_to_same_slice():
    h = P("(q + 2)*j")
    witness = conjugator_structure(P("q + i"), h)
    assert witness.branch is Branch.ORTHOGONAL
    assert witness.g.in_slice(I_UNIT)
    assert witness.reassemble().isclose(h)


def test_conjugator_reassembles_constructed_factor():
    h = P("(1 - 2*k)*(q + 1 + 2*i)")
    witness = conjugator_structure(P("q + i"), h)
    assert witness.branch in (Branch.PLUS_ONE, Branch.MINUS_ONE)
    assert witness.g.in_slice(I_UNIT)
    assert witness.reassemble().isclose(h, rel=1e-8)


def test_conjugator_preconditions():
    with pytest.raises(PreconditionViolated):
        conjugator_structure(P("q + i"), P("q - i"))
    with pytest.raises(PreconditionViolated):
        conjugator_structure(P("q*i + q^2*j"), P("1 - k"))
    with pytest.raises(PreconditionViolated):
        conjugator_structure(P("q + i"), P("1 - k"), K_UNIT)

@given(one_slice_polys(I_UNIT), sliced_polys(I_UNIT), off_axis_quaternions())
def test_conjugator_structure_recovers_constructed_factor(f, g, u):
    h = star_mul(SlicePoly.constant(u), g)
    assert conjugation_classify(h, f).is_one
    witness = conjugator_structure(f, h)
    assert witness.g.in_slice(I_UNIT)
    assert witness.reassemble().isclose(h, rel=1e-8)


# ==================== 被共轭函数结构 ====================


def test_conjugated_general_position():
    hs = RealPoly([1.0, 0.0, 1.0])
    d = RealPoly([-1.0, 0.0, 1.0])
    e = RealPoly([0.0, 2.0])
    f = (
        SlicePoly.real(1.0)
        + SlicePoly.along(hs * HALF, QI)
        + SlicePoly.along(d * HALF, QJ)
        - SlicePoly.along(e * HALF, QK)
    )
    form = conjugated_structure(P("q + i"), f)
    assert form.case is ConjugatedCase.GENERAL
    assert form.rho.isclose(hs, rel=1e-8)
    assert form.frame.M0.vector == pytest.approx(DIAGONAL.vector)


def test_conjugated_orthogonal():
    form = conjugated_structure(P("q + i"), P("1 + (q^2 - 1)*j - 2*q*k"))
    assert form.case is ConjugatedCase.ORTHOGONAL
    assert form.rho.isclose(RealPoly([1.0, 0.0, 1.0]) ** 2, rel=1e-8)


def test_conjugated_without_preserved_slice():
    assert conjugated_structure(P("q + i"), P("q*j + q^2*k")) is None


def test_conjugated_preconditions():
    with pytest.raises(PreconditionViolated):
        conjugated_structure(P("q + i"), P("q + 2*i"))
    with pytest.raises(PreconditionViolated):
        conjugated_structure(P("q*i + q^2*j"), P("q + j"))

@given(one_slice_polys(I_UNIT, max_degree=1), slicepolys(1))
def test_conjugation_by_one_slice_function_never_returns_to_its_slice(h, f):
    assume(not f.in_slice(I_UNIT))
    verdict = conjugation_classify(h, f)
    if verdict.is_one:
        assert not verdict.axis.same_slice(I_UNIT)


@pytest.mark.parametrize(
    ("M0", "case"),
    [
        (J_UNIT, ConjugatedCase.ORTHOGONAL),
        (ImaginaryUnit.direction(0.0, 2.0, -1.0), ConjugatedCase.ORTHOGONAL),
        (DIAGONAL, ConjugatedCase.GENERAL),
        (ImaginaryUnit.direction(1.0, -2.0, 2.0), ConjugatedCase.GENERAL),
    ],
    ids=["j", "orthogonal-mixed", "diagonal", "general-mixed"],
)
@given(h=one_slice_polys(I_UNIT, max_degree=1), data=st.data())
def test_conjugated_families_preserve_target_slice(M0, case, h, data):
    # h*(h^c*t*h)*h^c = (h^s)²·t
    t = data.draw(one_slice_polys(M0, max_degree=1))
    f = conjugate_by(star_conj(h), t)
    form = conjugated_structure(h, f)
    assert form is not None
    assert form.case is case
    assert form.frame.M0.same_slice(M0, abs_=1e-6)


# ==================== 求解 h*f*h^c = g ====================


def test_solve_h_same_slice():
    f = P("q + i")
    g = P("(q^2 + 1)*(q + i)")
    h = solve_conjugation_h(f, I_UNIT, g)
    assert h is not None
    assert h.in_slice(I_UNIT)
    assert conjugate_by(h, f).isclose(g, rel=1e-7)


def test_solve_h_trivial_and_unsolvable():
    f = P("q + i")
    assert solve_conjugation_h(f, I_UNIT, f).isclose(P("1"))
    assert solve_conjugation_h(f, I_UNIT, P("q*(q + i)")) is None
    assert solve_conjugation_h(f, I_UNIT, SlicePoly()) is None


@pytest.mark.parametrize("M0", [DIAGONAL, J_UNIT], ids=["general", "orthogonal"])
def test_solve_h_recovers_conjugate(M0):
    f = P("q + i")
    h_true = SlicePoly.real(RealPoly([1.0, 1.0])) + SlicePoly.along(RealPoly([2.0]), M0)
    g = conjugate_by(h_true, f)
    h = solve_conjugation_h(f, M0, g)
    assert h is not None
    assert h.in_slice(M0)
    assert conjugate_by(h, f).isclose(g, rel=1e-7)


def test_solve_h_requires_sliced_f():
    with pytest.raises(PreconditionViolated):
        solve_conjugation_h(P("q*i + q^2*j"), I_UNIT, P("q"))


def test_solve_f_orthogonal():
    f = solve_conjugation_f(P("1 + i"), J_UNIT, P("2*q + 2*k"))
    assert f.isclose(P("q + j"), rel=1e-8)


def test_solve_f_same_slice():
    f = solve_conjugation_f(P("q + i"), I_UNIT, P("(q^2 + 1)*(q + i)"))
    assert f.isclose(P("q + i"), rel=1e-8)
    assert solve_conjugation_f(P("q + i"), I_UNIT, P("q + j")) is None


def test_solve_f_general_position():
    h = P("1 + i")
    f_true = P("q") + SlicePoly.along(RealPoly([1.0]), DIAGONAL)
    g = conjugate_by(h, f_true)
    f = solve_conjugation_f(h, DIAGONAL, g)
    assert f is not None
    assert f.in_slice(DIAGONAL)
    assert conjugate_by(h, f).isclose(g, rel=1e-7)


def test_solve_f_requires_one_slice_h():
    with pytest.raises(PreconditionViolated):
        solve_conjugation_f(P("q^2 + 1"), I_UNIT, P("q"))

@settings(max_examples=100)
@given(one_slice_polys(), units(), realpolys(), realpolys())
def test_solve_h_round_trip(f, M0, h0, h1):
    assume(not (h0.is_zero() and h1.is_zero()))
    h_true = SlicePoly.real(h0) + SlicePoly.along(h1, M0)
    g = conjugate_by(h_true, f)
    h = solve_conjugation_h(f, M0, g)
    assert h is not None
    assert h.in_slice(M0)
    assert conjugate_by(h, f).isclose(g, rel=1e-6)


@settings(max_examples=100)
@given(one_slice_polys(), units(), realpolys(), realpolys())
def test_solve_f_round_trip(h, I0, f0, f1):
    assume(not (f0.is_zero() and f1.is_zero()))
    g = conjugate_by(h, SlicePoly.real(f0) + SlicePoly.along(f1, I0))
    f = solve_conjugation_f(h, I0, g)
    assert f is not None
    assert f.in_slice(I0)
    assert conjugate_by(h, f).isclose(g, rel=1e-6)


def test_solve_h_with_pure_vector_conjugator():
    M0 = ImaginaryUnit.direction(0.2816, 0.663587, 2.9121)
    I0 = ImaginaryUnit.direction(1.0474, -0.644484, 1.57721)
    f = SlicePoly.real(-2.0) + SlicePoly.along(RealPoly([-3.0, 2.0]), I0)
    g = conjugate_by(SlicePoly.along(RealPoly([1.0, 3.0]), M0), f)
    h = solve_conjugation_h(f, M0, g)
    assert h is not None
    assert h.in_slice(M0)
    assert conjugate_by(h, f).isclose(g, rel=1e-6)


# ==================== 扭对 ====================


def test_twisted_pair_same_slice():
    pair = twisted_pair_structure(P("q + i"), P("q + 2*i"))
    assert pair.case is TwistCase.SAME_SLICE


def test_twisted_pair_orthogonal_factors():
    f, h = P("(q + i)*k"), P("j*(q + i)")
    pair = twisted_pair_structure(f, h)
    assert pair.case is TwistCase.SAME_SLICE_ORTHOGONAL
    assert pair.f_tilde.isclose(P("q + i"))
    assert pair.h_tilde.isclose(P("q + i"))
    rebuilt_f, rebuilt_h = pair.reassemble()
    assert rebuilt_f.isclose(f)
    assert rebuilt_h.isclose(h)


def test_twisted_pair_pure_vectors():
    pair = twisted_pair_structure(P("q*i"), P("q*j"))
    assert pair.case is TwistCase.SAME_SLICE_ORTHOGONAL
    assert pair.f_tilde.isclose(P("-q*k"))
    assert pair.h_tilde.isclose(P("-q*k"))
    assert pair.alpha.isclose(RealPoly([0.0, 1.0]))
    assert pair.alpha_axis.vector == pytest.approx(I_UNIT.vector)


def test_twisted_pair_different_slices():
    f = P("(q + i)*(1 + 2*k)")
    h = P("(1 - 2*k)*(q + 1 + 2*i)")
    pair = twisted_pair_structure(f, h)
    assert pair.case is TwistCase.DIFFERENT_SLICE
    assert pair.branch is Branch.PLUS_ONE
    assert pair.f_branch is Branch.PLUS_ONE
    assert pair.f_tilde.isclose(P("q + i"), rel=1e-8)
    assert pair.h_tilde.isclose(P("q + 1 + 2*i"), rel=1e-8)
    rebuilt_f, rebuilt_h = pair.reassemble()
    assert rebuilt_f.isclose(f, rel=1e-8)
    assert rebuilt_h.isclose(h, rel=1e-8)


def test_twisted_pair_requires_one_slice_products():
    with pytest.raises(PreconditionViolated):
        twisted_pair_structure(P("q + i"), P("q - i"))


@given(sliced_polys(I_UNIT), sliced_polys(I_UNIT))
def test_orthogonal_twisted_pairs_have_products_in_one_slice(f_tilde, h_tilde):
    f = star_mul(f_tilde, SlicePoly.constant(QK))
    h = star_mul(SlicePoly.constant(QJ), h_tilde)
    fh, hf = star_mul(f, h), star_mul(h, f)
    assume(not fh.is_real() and not hf.is_real())
    assert classify(fh).preserves(I_UNIT)
    assert classify(hf).preserves(I_UNIT)
    pair = twisted_pair_structure(f, h)
    assert pair.case is TwistCase.SAME_SLICE_ORTHOGONAL
    rebuilt_f, rebuilt_h = pair.reassemble()
    assert rebuilt_f.isclose(f, rel=1e-8)
    assert rebuilt_h.isclose(h, rel=1e-8)
