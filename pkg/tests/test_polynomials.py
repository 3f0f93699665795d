from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from endokit.algebra.polys import Poly, poly_discriminant, poly_gcd, resultant


def F(*nums):
    return [Fraction(n) for n in nums]


def cofactor_det(m):
    """Independent determinant oracle: recursive cofactor expansion."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = Fraction(0)
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        sign = 1 if j % 2 == 0 else -1
        total += sign * m[0][j] * cofactor_det(minor)
    return total


def sylvester_resultant_oracle(f, g):
    """Resultant recomputed from scratch, bypassing the package's Gaussian
    elimination path."""
    n, m = f.degree, g.degree
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    size = n + m
    rows = []
    for i in range(m):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - n - 1 - i))
    for i in range(n):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - m - 1 - i))
    return cofactor_det(rows)


def test_divmod_round_trip():
    f = Poly(F(2, 0, -3, 1))  # x^3 - 3x^2 + 2
    g = Poly(F(-1, 1))  # x - 1
    q, r = f.divmod(g)
    assert q * g + r == f
    assert r.is_zero()  # 1 is a root


def test_eval_horner():
    f = Poly(F(1, -2, 1))  # (x-1)^2
    assert f(Fraction(1)) == 0
    assert f(Fraction(3)) == 4


def test_derivative():
    f = Poly(F(5, 0, 0, 2))  # 2x^3 + 5
    assert f.derivative() == Poly(F(0, 0, 6))


def test_gcd_monic():
    f = Poly(F(1, -2, 1))  # (x-1)^2
    g = Poly(F(-1, 0, 1))  # (x-1)(x+1)
    assert poly_gcd(f, g) == Poly(F(-1, 1))


# Frozen discriminants, checked once against the closed forms
# disc(x^2 + bx + c) = b^2 - 4c and disc(x^3 + px + q) = -4p^3 - 27q^2.
DISCRIMINANT_CASES = [
    (F(-1, 0, 1), Fraction(4)),  # x^2 - 1
    (F(1, 0, 1), Fraction(-4)),  # x^2 + 1
    (F(0, -1, 0, 1), Fraction(4)),  # x^3 - x
    (F(1, -2, 1), Fraction(0)),  # (x-1)^2
    (F(1, 1, 0, 1), Fraction(-31)),  # x^3 + x + 1
]


@pytest.mark.parametrize("coeffs,expected", DISCRIMINANT_CASES)
def test_discriminant_frozen(coeffs, expected):
    assert poly_discriminant(Poly(coeffs)) == expected


@pytest.mark.parametrize("coeffs,expected", DISCRIMINANT_CASES)
def test_discriminant_matches_cofactor_oracle(coeffs, expected):
    f = Poly(coeffs)
    n = f.degree
    res = sylvester_resultant_oracle(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    assert sign * res / f.leading() == expected


def test_discriminant_rejects_constants():
    with pytest.raises(ValueError, match="invalid input"):
        poly_discriminant(Poly())
    with pytest.raises(ValueError, match="invalid input"):
        poly_discriminant(Poly(F(7)))


def test_resultant_of_zero_rejected():
    with pytest.raises(ValueError):
        resultant(Poly(), Poly(F(1, 1)))


small_fracs = st.integers(min_value=-6, max_value=6).map(Fraction)


@st.composite
def nonconstant_polys(draw, max_degree=5):
    degree = draw(st.integers(min_value=1, max_value=max_degree))
    lead = draw(st.integers(min_value=1, max_value=6).map(Fraction))
    lower = draw(st.lists(small_fracs, min_size=degree, max_size=degree))
    return Poly(lower + [lead])


@settings(max_examples=60, deadline=None)
@given(nonconstant_polys())
def test_discriminant_vanishes_iff_repeated_root(f):
    if f.degree < 2:
        return
    disc = poly_discriminant(f)
    repeated = poly_gcd(f, f.derivative()).degree >= 1
    assert (disc == 0) == repeated


@settings(max_examples=60, deadline=None)
@given(nonconstant_polys(max_degree=3), nonconstant_polys(max_degree=3))
def test_resultant_vanishes_iff_common_factor(f, g):
    res = resultant(f, g)
    common = poly_gcd(f, g).degree >= 1
    assert (res == 0) == common
