import math

import pytest
from hypothesis import given, settings, strategies as st

from endokit.algebra.roots import NumericFailure, poly_roots_complex

SQRT2 = math.sqrt(2.0)


def assert_close(got, want, tol=1e-9):
    assert len(got) == len(want)
    for g, w in zip(got, want):
        assert abs(g - w) < tol, (got, want)


def test_quadratic_pure_imaginary():
    # x^2 + 1: roots +/- i, sorted by (re, im)
    assert_close(poly_roots_complex([1, 0, 1]), [-1j, 1j])


def test_cubic_integer_roots():
    # x^3 - x
    assert_close(poly_roots_complex([0, -1, 0, 1]), [-1, 0, 1])


def test_quartic_nested_radicals():
    # z^4 + 6z^2 + 1 has z^2 = -3 +/- 2*sqrt(2) = -(sqrt(2) -/+ 1)^2,
    # so the roots are +/- i(sqrt(2) +/- 1).
    want = [
        -1j * (SQRT2 + 1),
        -1j * (SQRT2 - 1),
        1j * (SQRT2 - 1),
        1j * (SQRT2 + 1),
    ]
    assert_close(poly_roots_complex([1, 0, 6, 0, 1]), want)


def test_scaling_invariance():
    a = poly_roots_complex([1, 0, 6, 0, 1])
    b = poly_roots_complex([-1, 0, -6, 0, -1])
    assert_close(a, b)


def test_rejects_constant_input():
    with pytest.raises(ValueError, match="invalid input"):
        poly_roots_complex([3])
    with pytest.raises(ValueError, match="invalid input"):
        poly_roots_complex([])


def test_budget_exhaustion_names_polynomial():
    with pytest.raises(NumericFailure, match=r"\[1, 0, 6, 0, 1\]"):
        poly_roots_complex([1, 0, 6, 0, 1], max_rounds=1)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(min_value=-5, max_value=5), min_size=3, max_size=3))
def test_monic_cubics_reconstruct(lower):
    coeffs = lower + [1]
    roots = poly_roots_complex(coeffs)
    # elementary symmetric functions recover the coefficients
    e1 = sum(roots)
    e2 = roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2]
    e3 = roots[0] * roots[1] * roots[2]
    assert abs(e1 + coeffs[2]) < 1e-6
    assert abs(e2 - coeffs[1]) < 1e-6
    assert abs(e3 + coeffs[0]) < 1e-6
