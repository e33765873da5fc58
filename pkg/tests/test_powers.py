"""*-幂、二元型 Q_d 与 Σ_d"""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.algebra.realpoly import RealPoly
from src.errors import InvalidDegree, NumericalError, PreconditionViolated
from src.expression import evaluate_text as P
from src.slice.powers import (
    PowerVerdict,
    power_expand,
    power_slice_preserving,
    power_vector_factor,
    qd,
    sigma,
    sigma_oracle,
    star_power,
)
from src.slice.slicepoly import SlicePoly, classify, vector_part
from tests.strategies import slicepolys

# ξ(1 + q²) + 2q i + (1 - q²) j 的向量部分满足 f_v^s = (1 + q²)²
PYTHAGOREAN_VECTOR = "2*q*i + (1 - q^2)*j"


def pythagorean(xi: float) -> SlicePoly:
    return SlicePoly.real(RealPoly([xi, 0.0, xi])) + P(PYTHAGOREAN_VECTOR)


# ==================== 二元型 ====================


def test_qd_small_degrees():
    assert qd(2).coeffs == {0: 2}
    assert qd(3).coeffs == {0: 3, 1: -1}
    assert str(qd(3)) == "3x^2y - y^3"
    assert str(qd(4)) == "4x^3y - 4xy^3"


def test_qd_degree_ten():
    assert [c for _, c in sorted(qd(10).coeffs.items())] == [10, -120, 252, -120, 10]


def test_qd_rejects_small_degree():
    with pytest.raises(InvalidDegree):
        qd(1)


@given(
    st.integers(min_value=2, max_value=9),
    st.floats(min_value=-2.0, max_value=2.0),
    st.floats(min_value=-2.0, max_value=2.0),
)
def test_qd_is_imaginary_part_of_power(d, x, y):
    expected = (complex(x, y) ** d).imag
    assert qd(d).evaluate(x, y) == pytest.approx(expected, rel=1e-9, abs=1e-9)


def test_dehomogenize():
    assert qd(3).dehomogenize() == RealPoly([-1.0, 0.0, 3.0])


# ==================== Σ_d ====================


def test_sigma_small_degrees():
    assert sigma(3).roots == pytest.approx((-1 / math.sqrt(3), 1 / math.sqrt(3)))
    assert sigma(4).roots == pytest.approx((-1.0, 1.0))
    assert sigma(6).roots == pytest.approx((-math.sqrt(3), -1 / math.sqrt(3), 1 / math.sqrt(3), math.sqrt(3)))


def test_sigma_eight():
    r = math.sqrt(2)
    assert sigma(8).roots == pytest.approx((-1 - r, -1.0, 1 - r, r - 1, 1.0, 1 + r))


@pytest.mark.parametrize("d", range(3, 13))
def test_sigma_matches_cotangents(d):
    result = sigma(d)
    assert len(result) == (d - 2 if d % 2 == 0 else d - 1)
    assert result.roots == pytest.approx(sigma_oracle(d), rel=1e-9, abs=1e-9)


def test_sigma_rejects_small_degree():
    with pytest.raises(InvalidDegree):
        sigma(2)


def test_match_square():
    assert sigma(4).match_square(1.0) == pytest.approx(1.0)
    assert sigma(3).match_square(1 / 3) == pytest.approx(1 / math.sqrt(3))
    assert sigma(4).match_square(2.0) is None


# ==================== *-幂 ====================


def test_star_power_examples():
    assert star_power(P("q + i"), 2).isclose(P("q^2 - 1 + 2*q*i"))
    assert star_power(P("j"), 2).isclose(P("-1"))
    assert star_power(P("q + k"), 0).isclose(P("1"))


def test_star_power_rejects_negative_exponent():
    with pytest.raises(InvalidDegree):
        star_power(P("q"), -1)


@given(slicepolys(), st.integers(min_value=0, max_value=6))
def test_closed_form_matches_repeated_product(f, d):
    assert power_expand(f, d).isclose(star_power(f, d), rel=1e-9)


@given(slicepolys(), st.integers(min_value=1, max_value=5))
def test_vector_part_is_multiple_of_base_vector(f, d):
    expected = vector_part(f) * power_vector_factor(f, d)
    assert vector_part(star_power(f, d)).isclose(expected, rel=1e-9)


# ==================== 幂的切片保持 ====================


def test_fourth_power_becomes_real():
    f = P("(1 + q^2) + 2*q*i + (1 - q^2)*j")
    result = power_slice_preserving(f, 4)
    assert result.verdict is PowerVerdict.SLICE_PRESERVING
    assert result.xi == pytest.approx(1.0)
    assert classify(star_power(f, 4)).is_all


def test_power_without_matching_real_part():
    result = power_slice_preserving(P("1 + i + q*j"), 4)
    assert result.verdict is PowerVerdict.NO
    assert result.xi is None


def test_perturbed_real_part_breaks_slice_preservation():
    f = pythagorean(1.001)
    assert power_slice_preserving(f, 4).verdict is PowerVerdict.NO


@pytest.mark.parametrize("d", range(3, 9))
def test_every_sigma_value_gives_slice_preserving_power(d):
    for xi in sigma(d).roots:
        result = power_slice_preserving(pythagorean(xi), d)
        assert result.verdict is PowerVerdict.SLICE_PRESERVING
        assert result.xi == pytest.approx(xi, rel=1e-7)


def test_pure_vector_even_powers():
    f = P(PYTHAGOREAN_VECTOR)
    assert power_slice_preserving(f, 2).verdict is PowerVerdict.SLICE_PRESERVING
    assert power_slice_preserving(f, 3).verdict is PowerVerdict.NO


def test_trivial_exponents():
    f = pythagorean(1.0)
    assert power_slice_preserving(f, 0).verdict is PowerVerdict.SLICE_PRESERVING
    assert power_slice_preserving(f, 1).verdict is PowerVerdict.NO


def test_power_slice_requires_no_slice_input():
    with pytest.raises(PreconditionViolated):
        power_slice_preserving(P("q + i"), 4)


def test_overflowing_star_power_is_numerical_error():
    with pytest.raises(NumericalError):
        star_power(P("q*i + q^2*j"), 100000)


def test_overflowing_closed_form_is_numerical_error():
    with pytest.raises(NumericalError):
        power_expand(P("q*i + q^2*j"), 100000)


def test_large_single_power_is_not_squared_again():
    f = SlicePoly.real(RealPoly([1e200]))
    assert star_power(f, 1).isclose(f)
