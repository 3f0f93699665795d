"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Values are rational linear combinations of powers of a primitive n-th root
of unity, reduced modulo the n-th cyclotomic polynomial.  Values of
different orders mix by promotion into the lcm order, so character sums
over products of groups stay exact.
"""

from fractions import Fraction
from math import gcd

from .polys import Poly

_CYCLO_CACHE = {}


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def cyclotomic_polynomial(n):
    """The n-th cyclotomic polynomial as a Poly over Fraction."""
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    poly = Poly([Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)])
    for d in _divisors(n):
        if d < n:
            poly, rem = poly.divmod(cyclotomic_polynomial(d))
            assert rem.is_zero()
    _CYCLO_CACHE[n] = poly
    return poly


def _poly_ext_gcd(a, b):
    """(g, u, v) with u*a + v*b = g, g monic (field coefficients)."""
    r0, r1 = a, b
    u0, u1 = Poly([Fraction(1)]), Poly()
    v0, v1 = Poly(), Poly([Fraction(1)])
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    lead = r0.leading()
    return r0.scale(1 / lead), u0.scale(1 / lead), v0.scale(1 / lead)


class CyclotomicValue:
    """An element of Q(zeta_n), stored lowest-power-first mod Phi_n."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=()):
        if order < 1:
            raise ValueError("order must be >= 1")
        phi = cyclotomic_polynomial(order)
        reduced = Poly([Fraction(c) for c in coeffs]) % phi
        padded = list(reduced.coeffs) + [Fraction(0)] * (
            phi.degree - len(reduced.coeffs)
        )
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(padded))

    def __setattr__(self, *a):
        raise AttributeError("CyclotomicValue is immutable")

    @staticmethod
    def _coerce(value):
        if isinstance(value, CyclotomicValue):
            return value
        if isinstance(value, (int, Fraction)):
            return CyclotomicValue(1, [Fraction(value)])
        return None

    def promote(self, order):
        """The same value written in Q(zeta_order); order must be a multiple
        of self.order."""
        if order == self.order:
            return self
        if order % self.order != 0:
            raise ValueError("cannot promote order %d into %d" % (self.order, order))
        step = order // self.order
        out = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for i, c in enumerate(self.coeffs):
            out[i * step] += c
        return CyclotomicValue(order, out)

    def _pair(self, other):
        other = self._coerce(other)
        if other is None:
            return None, None
        n = self.order * other.order // gcd(self.order, other.order)
        return self.promote(n), other.promote(n)

    def __eq__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self):
        # Equal values can be written in different orders (zeta_6^2 equals
        # zeta_3), so hash the unique minimal-order form.
        return hash(self._minimal_form())

    def _minimal_form(self):
        for m in _divisors(self.order):
            sub = _subfield_coords(self.order, m, self.coeffs)
            if sub is not None:
                return (m, sub)
        return (self.order, self.coeffs)

    def __repr__(self):
        return "CyclotomicValue(%d, %r)" % (self.order, [str(c) for c in self.coeffs])

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return CyclotomicValue(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicValue(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        prod = Poly(a.coeffs) * Poly(b.coeffs)
        return CyclotomicValue(a.order, prod.coeffs)

    __rmul__ = __mul__

    def inverse(self):
        poly = Poly(self.coeffs)
        if poly.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic value")
        phi = cyclotomic_polynomial(self.order)
        g, u, _ = _poly_ext_gcd(poly, phi)
        assert g.degree == 0
        return CyclotomicValue(self.order, u.scale(1 / g.coeffs[0]).coeffs)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exp):
        if exp < 0:
            return self.inverse() ** (-exp)
        result = CyclotomicValue(1, [1])
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def conjugate(self):
        """Complex conjugate: zeta -> zeta^(order-1)."""
        zeta_inv = root_of_unity(self.order, self.order - 1)
        acc = CyclotomicValue(self.order)
        power = CyclotomicValue(1, [1]).promote(self.order)
        for c in self.coeffs:
            acc = acc + CyclotomicValue(1, [c]) * power
            power = power * zeta_inv
        return acc

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("%r is not rational" % (self,))
        return self.coeffs[0]

    def is_real(self):
        return self == self.conjugate()

    def as_complex(self):
        import cmath

        zeta = cmath.exp(2j * cmath.pi / self.order)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * zeta + complex(c)
        return acc

    def multiplicative_order(self):
        """Order as a root of unity, or None when not one."""
        bound = self.order if self.order % 2 == 0 else 2 * self.order
        one = CyclotomicValue(1, [1])
        for m in _divisors(bound):
            if self ** m == one:
                return m
        return None

    def sqrt_unit(self):
        """A square root, valid only for roots of unity: the value
        zeta_{2m}^k with smallest k whose square equals self, where m is
        the multiplicative order."""
        m = self.multiplicative_order()
        if m is None:
            raise ValueError("%r is not a root of unity" % (self,))
        for k in range(2 * m):
            candidate = root_of_unity(2 * m, k)
            if candidate ** 2 == self:
                return candidate
        raise AssertionError("unreachable: zeta_m^j always has a root")


def _subfield_coords(n, m, coeffs):
    """Coordinates of a Q(zeta_n) value inside Q(zeta_m) for m | n, or None
    when the value does not lie in the subfield.  The promotion map is an
    injective field embedding, so the solution is unique when it exists."""
    if m == n:
        return tuple(coeffs)
    phi_m = cyclotomic_polynomial(m).degree
    phi_n = len(coeffs)
    step = n // m
    cols = [CyclotomicValue(n, [0] * (step * j) + [1]).coeffs for j in range(phi_m)]
    rows = [
        [cols[j][i] for j in range(phi_m)] + [coeffs[i]] for i in range(phi_n)
    ]
    pivots = []
    rank = 0
    for col in range(phi_m):
        pivot_row = None
        for rr in range(rank, phi_n):
            if rows[rr][col] != 0:
                pivot_row = rr
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [x / pv for x in rows[rank]]
        for rr in range(phi_n):
            if rr != rank and rows[rr][col] != 0:
                f = rows[rr][col]
                rows[rr] = [x - f * y for x, y in zip(rows[rr], rows[rank])]
        pivots.append(col)
        rank += 1
    for rr in range(rank, phi_n):
        if rows[rr][phi_m] != 0:
            return None
    sol = [Fraction(0)] * phi_m
    for i, col in enumerate(pivots):
        sol[col] = rows[i][phi_m]
    return tuple(sol)


def root_of_unity(n, k=1):
    """zeta_n^k as a CyclotomicValue of order n."""
    k %= n
    return CyclotomicValue(n, [0] * k + [1])
