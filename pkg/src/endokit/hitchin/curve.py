"""Base-curve parameters for the genus-one ramified moduli surfaces.

Everything downstream is controlled by a cubic f(x) = x^3 + a x + b with
distinct roots e_1, e_2, e_3 summing to zero, together with the nonzero
ramification eigenvalue scale sigma_0.  When the three roots are rational
we keep them exact, which lets the fiber analysis verify its identities as
polynomial identities over Q rather than numerically.
"""

import math
from fractions import Fraction

from ..algebra.polys import Poly
from ..algebra.roots import poly_roots_complex


def _fraction_sqrt(value):
    """Exact square root of a nonnegative Fraction, or None."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _divisors(n):
    n = abs(n)
    out = set()
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.add(i)
            out.add(n // i)
        i += 1
    return out


def _rational_roots(a, b):
    """All rational roots of x^3 + a x + b (a, b Fractions), or None when
    the search is abandoned (coefficients too large for divisor scans)."""
    roots = []
    first = None
    if b == 0:
        first = Fraction(0)
    else:
        scale = math.lcm(a.denominator, b.denominator)
        c0 = int(b * scale)
        if abs(c0) > 10**9:
            return None
        for p in _divisors(c0):
            for q in _divisors(scale):
                for sign in (1, -1):
                    cand = Fraction(sign * p, q)
                    if cand**3 + a * cand + b == 0:
                        first = cand
                        break
                if first is not None:
                    break
            if first is not None:
                break
    if first is None:
        return []
    roots.append(first)
    # f = (x - r)(x^2 + r x + (a + r^2)); solve the quadratic exactly.
    r = first
    delta = -3 * r * r - 4 * a
    root_delta = _fraction_sqrt(delta)
    if root_delta is not None:
        roots.append((-r + root_delta) / 2)
        roots.append((-r - root_delta) / 2)
    return roots


class CurveParams:
    """The cubic y^2 = f(x) = x^3 + a x + b plus the ramification scale.

    `roots` holds (e_1, e_2, e_3); they are exact Fractions in ascending
    order when all three are rational (the `exact` flag), and complex
    values in the root finder's canonical order otherwise.  sigma_0 may be
    any nonzero rational or complex number.
    """

    def __init__(self, a, b, sigma0=1):
        self.a = Fraction(a) if not isinstance(a, complex) else a
        self.b = Fraction(b) if not isinstance(b, complex) else b
        if sigma0 == 0:
            raise ValueError("invalid curve: sigma_0 must be nonzero")
        self.sigma0 = sigma0
        disc = -4 * self.a**3 - 27 * self.b**2
        if disc == 0:
            raise ValueError(
                "invalid curve: x^3 + %sx + %s has a repeated root" % (a, b)
            )
        self.exact = False
        roots = None
        if isinstance(self.a, Fraction) and isinstance(self.b, Fraction):
            found = _rational_roots(self.a, self.b)
            if found is not None and len(found) == 3:
                roots = tuple(sorted(found))
                self.exact = True
        if roots is None:
            roots = tuple(poly_roots_complex([self.b, self.a, 0, 1]))
        self.roots = roots

    @classmethod
    def from_roots(cls, e1, e2, e3, sigma0=1):
        """Exact constructor from three rational roots summing to zero."""
        e1, e2, e3 = Fraction(e1), Fraction(e2), Fraction(e3)
        if e1 + e2 + e3 != 0:
            raise ValueError("invalid curve: roots must sum to zero")
        if len({e1, e2, e3}) != 3:
            raise ValueError("invalid curve: roots must be distinct")
        a = e1 * e2 + e1 * e3 + e2 * e3
        b = -e1 * e2 * e3
        return cls(a, b, sigma0)

    def f_poly(self):
        """f as a Poly (over Fraction when a, b are rational)."""
        zero = self.a * 0
        one = zero + 1
        return Poly([self.b, self.a, zero, one])

    def f(self, x):
        return x**3 + self.a * x + self.b

    def fprime(self, x):
        return 3 * x**2 + self.a

    def other_roots(self, i):
        """The two roots other than e_i (i in {1,2,3}), order preserved."""
        if i not in (1, 2, 3):
            raise ValueError("torsion index must be 1, 2, or 3")
        return tuple(e for k, e in enumerate(self.roots, start=1) if k != i)

    def root(self, i):
        if i not in (1, 2, 3):
            raise ValueError("torsion index must be 1, 2, or 3")
        return self.roots[i - 1]

    def __repr__(self):
        return "CurveParams(a=%s, b=%s, sigma0=%s)" % (self.a, self.b, self.sigma0)
