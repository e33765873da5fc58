"""求根与平方判定"""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.algebra.realpoly import ONE, RealPoly
from src.algebra.roots import AberthSolver, cauchy_bound, nonneg_even_real_zeros, proots, sqrt_if_square
from src.errors import ZeroFunction
from src.runtime_config import RootFinderConfig
from tests.strategies import repeated_integer_roots, separated_real_roots


def linear(r: float) -> RealPoly:
    return RealPoly([-r, 1.0])


def test_origin_root_is_reported_with_multiplicity():
    rootset = proots(RealPoly([0.0, 0.0, -3.0, 1.0]))
    assert [(r.value, r.multiplicity) for r in rootset.real_roots] == [(0.0, 2), (pytest.approx(3.0), 1)]
    assert rootset.complex_pairs == ()


def test_complex_pair():
    rootset = proots(RealPoly([5.0, -2.0, 1.0]))
    assert rootset.real_roots == ()
    (pair,) = rootset.complex_pairs
    assert pair.alpha == pytest.approx(1.0)
    assert pair.beta == pytest.approx(2.0)
    assert pair.multiplicity == 1


def test_repeated_roots():
    f = linear(1.0) ** 3 * RealPoly([1.0, 0.0, 1.0]) ** 2
    rootset = proots(f)
    assert [r.multiplicity for r in rootset.real_roots] == [3]
    assert rootset.real_roots[0].value == pytest.approx(1.0, abs=1e-6)
    (pair,) = rootset.complex_pairs
    assert pair.multiplicity == 2
    assert pair.beta == pytest.approx(1.0, abs=1e-6)
    assert rootset.degree == f.degree


@given(st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=5, unique=True))
def test_distinct_integer_roots(values):
    f = ONE
    for v in values:
        f = f * linear(float(v))
    rootset = proots(f)
    assert sorted(r.value for r in rootset.real_roots) == pytest.approx(sorted(values), abs=1e-7)
    assert rootset.to_poly().isclose(f, rel=1e-8)


def test_zero_polynomial_raises():
    with pytest.raises(ZeroFunction):
        proots(RealPoly())


def test_aberth_matches_numpy():
    coeffs = np.array([6.0, -5.0, -2.0, 1.0])
    found = np.sort_complex(AberthSolver().solve(coeffs))
    expected = np.sort_complex(np.roots(coeffs[::-1]))
    assert np.allclose(found, expected, atol=1e-9)


def test_cauchy_bound():
    assert cauchy_bound(np.array([6.0, -5.0, 1.0])) == 7.0


def test_nonneg_even_real_zeros():
    assert nonneg_even_real_zeros(RealPoly([1.0, 0.0, 1.0]))
    assert nonneg_even_real_zeros(linear(2.0) ** 2)
    assert not nonneg_even_real_zeros(linear(2.0))
    assert not nonneg_even_real_zeros(linear(1.0) * linear(2.0))


def test_sqrt_if_square():
    s = RealPoly([1.0, 2.0]) * RealPoly([2.0, 0.0, 1.0])
    root = sqrt_if_square(s * s)
    assert root is not None
    assert root.isclose(s, rel=1e-7)
    assert sqrt_if_square(RealPoly([1.0, 0.0, 1.0])) is None
    assert sqrt_if_square(RealPoly([-4.0])) is None
    assert sqrt_if_square(RealPoly([4.0])).isclose(RealPoly([2.0]))


def test_sqrt_if_square_of_zero_raises():
    with pytest.raises(ZeroFunction):
        sqrt_if_square(RealPoly())


def test_sqrt_leading_coefficient_positive():
    s = sqrt_if_square(RealPoly([9.0, -12.0, 4.0]))
    assert s.leading > 0
    assert s.isclose(RealPoly([-3.0, 2.0]), rel=1e-7)
    assert math.isclose(s(1.5), 0.0, abs_tol=1e-7)


@given(separated_real_roots())
def test_separated_roots_of_high_degree_rebuild(values):
    f = ONE
    for v in values:
        f = f * linear(v)
    rootset = proots(f)
    assert rootset.degree == f.degree
    assert rootset.to_poly(f.leading).isclose(f, rel=1e-6, abs_=0.0)


@given(repeated_integer_roots())
def test_repeated_integer_roots_keep_multiplicities(roots):
    f = ONE
    for value, multiplicity in roots.items():
        f = f * linear(float(value)) ** multiplicity
    rootset = proots(f)
    found = [(round(r.value), r.multiplicity) for r in rootset.real_roots]
    assert found == sorted(roots.items())
    assert rootset.to_poly().isclose(f, rel=1e-6)


def test_high_multiplicity_next_to_double_root():
    f = linear(1.0) ** 12 * linear(2.0) ** 2
    rootset = proots(f)
    assert [r.multiplicity for r in rootset.real_roots] == [12, 2]
    assert [r.value for r in rootset.real_roots] == pytest.approx([1.0, 2.0], abs=1e-3)
    assert rootset.complex_pairs == ()


def test_cluster_slack_is_configurable(fresh_runtime_config):
    fresh_runtime_config.update_root_finder(RootFinderConfig(cluster_slack=1.0))
    rootset = proots(linear(1.0) ** 3)
    assert rootset.degree == 3
