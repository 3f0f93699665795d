"""Elliptic curves over small finite fields and their closed points.

Everything here is desk scale: point groups are found by exhaustive
enumeration, closed points by partitioning extension-field points into
Frobenius orbits, and divisors of the few rational functions we need
(shifts x - c and the coordinate y) are computed atom by atom.  The curve
shape is y^2 = x^3 + a2 x^2 + a4 x + a6; the a2 term is carried because
the endoscopic double covers arrive naturally in that form.
"""

from ..algebra import FiniteAbelianGroup, FiniteField, quadratic_symbol

ENUMERATION_BUDGET = 10 ** 6
GROUP_BUDGET = 10 ** 4


class ResourceLimitError(ValueError):
    """An enumeration request that would exceed the desk-scale budget."""


def weierstrass_add(P, Q, a2, a4):
    """Group law on V^2 = u^3 + a2 u^2 + a4 u + a6.

    Points are coordinate pairs or None for the point at infinity.  The
    coordinates may live in any commutative ring with division supporting
    the usual operators (field elements, or the quadratic extensions the
    endoscopy layer builds on the fly); a6 never enters the chord formulas.
    """
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if y1 == -y2:
            return None
        lam = (x1 * x1 * 3 + x1 * a2 * 2 + a4) / (y1 * 2)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam - a2 - x1 - x2
    y3 = lam * (x1 - x3) - y1
    return (x3, y3)


def _point_key(P):
    if P is None:
        return (-1, -1)
    x, y = P
    return (x.index(), y.index())


class EllipticCurveFq:
    """y^2 = x^3 + a2 x^2 + a4 x + a6 over F_q, q odd."""

    def __init__(self, field, a4, a6, a2=0):
        if field.p == 2:
            raise ValueError("characteristic 2 is not supported")
        self.field = field
        self.a2 = field.lift(a2)
        self.a4 = field.lift(a4)
        self.a6 = field.lift(a6)
        if self.discriminant().is_zero():
            raise ValueError("singular curve: the discriminant vanishes")

    def discriminant(self):
        # b-invariants of the long Weierstrass form with a1 = a3 = 0;
        # for a2 = 0 this reduces to -16(4 a4^3 + 27 a6^2).
        b2 = self.a2 * 4
        b4 = self.a4 * 2
        b6 = self.a6 * 4
        b8 = self.a2 * self.a6 * 4 - self.a4 * self.a4
        return (
            -(b2 * b2 * b8)
            - b4 * b4 * b4 * 8
            - b6 * b6 * 27
            + b2 * b4 * b6 * 9
        )

    def __repr__(self):
        return "EllipticCurveFq(F_%d^%d, a2=%r, a4=%r, a6=%r)" % (
            self.field.p, self.field.d, self.a2, self.a4, self.a6)

    def __eq__(self, other):
        if not isinstance(other, EllipticCurveFq):
            return NotImplemented
        return (self.field == other.field and self.a2 == other.a2
                and self.a4 == other.a4 and self.a6 == other.a6)

    def __hash__(self):
        return hash((self.field, self.a2.index(), self.a4.index(),
                     self.a6.index()))

    def _coeffs_in(self, field):
        return (field.lift(self.a2), field.lift(self.a4), field.lift(self.a6))

    def rhs(self, x):
        """x^3 + a2 x^2 + a4 x + a6 evaluated in the field of x."""
        a2, a4, a6 = self._coeffs_in(x.field)
        return ((x + a2) * x + a4) * x + a6

    def contains(self, P):
        if P is None:
            return True
        x, y = P
        return y * y == self.rhs(x)

    def add(self, P, Q):
        field = self.field if P is None else P[0].field
        a2, a4, _ = self._coeffs_in(field)
        return weierstrass_add(P, Q, a2, a4)

    def negate(self, P):
        if P is None:
            return None
        return (P[0], -P[1])

    def scale(self, k, P):
        if k < 0:
            return self.scale(-k, self.negate(P))
        acc = None
        cur = P
        while k:
            if k & 1:
                acc = self.add(acc, cur)
            cur = self.add(cur, cur)
            k >>= 1
        return acc

    def frobenius_point(self, P):
        """The curve-level (q-power) Frobenius on a point over an extension."""
        if P is None:
            return None
        x, y = P
        for _ in range(self.field.d):
            x = x.frobenius()
            y = y.frobenius()
        return (x, y)

    def points(self, field=None):
        """All points over the given extension field (default: the base),
        infinity first, then sorted by coordinate index.

        Square roots come from a table built in one sweep, so this is
        O(q) field operations.
        """
        field = field or self.field
        if field.q > ENUMERATION_BUDGET:
            raise ResourceLimitError(
                "point enumeration over a field of size %d exceeds the "
                "budget of %d" % (field.q, ENUMERATION_BUDGET))
        sqrt_table = {}
        for y in field:
            sqrt_table.setdefault((y * y).index(), y)
        pts = [None]
        for x in field:
            v = self.rhs(x)
            if v.is_zero():
                pts.append((x, field.zero()))
                continue
            y0 = sqrt_table.get(v.index())
            if y0 is not None:
                pair = sorted([(x, y0), (x, -y0)], key=_point_key)
                pts.extend(pair)
        return pts

    def point_count(self, field=None):
        return len(self.points(field))

    def group_structure(self):
        """The abstract group E(F_q) with an explicit discrete logarithm.

        Returns an ECGroupData; exhaustive, so the base field is capped at
        10^4 elements.
        """
        if self.field.q > GROUP_BUDGET:
            raise ResourceLimitError(
                "group enumeration needs q <= %d, got q = %d"
                % (GROUP_BUDGET, self.field.q))
        pts = self.points()
        n = len(pts)
        divisors = sorted(d for d in range(1, n + 1) if n % d == 0)

        def point_order(P):
            for d in divisors:
                if self.scale(d, P) is None:
                    return d
            raise AssertionError("point order does not divide the group order")

        orders = {_point_key(P): point_order(P) for P in pts}
        d2 = max(orders.values())
        g2 = next(P for P in pts if orders[_point_key(P)] == d2)
        d1 = n // d2
        if d1 == 1:
            dlog = {}
            acc = None
            for j in range(d2):
                dlog[_point_key(acc)] = (j,)
                acc = self.add(acc, g2)
            return ECGroupData(self, FiniteAbelianGroup((d2,)), (g2,), dlog)
        if d2 % d1 != 0:
            raise AssertionError(
                "rank-two structure with non-dividing orders %d, %d" % (d1, d2))
        # Find a complementary generator by checking that its cosets tile
        # the whole group; candidates are tried in canonical point order.
        g2_multiples = []
        acc = None
        for j in range(d2):
            g2_multiples.append(acc)
            acc = self.add(acc, g2)
        for h in pts:
            if orders[_point_key(h)] % d1 != 0:
                continue
            dlog = {}
            base = None
            ok = True
            for i in range(d1):
                for j, m in enumerate(g2_multiples):
                    key = _point_key(self.add(base, m))
                    if key in dlog:
                        ok = False
                        break
                    dlog[key] = (i, j)
                if not ok:
                    break
                base = self.add(base, h)
            if ok and len(dlog) == n:
                return ECGroupData(
                    self, FiniteAbelianGroup((d1, d2)), (h, g2), dlog)
        raise AssertionError("no generating pair found in a rank-two group")


class ECGroupData:
    """E(F_q) as an explicit FiniteAbelianGroup with a point dictionary."""

    def __init__(self, curve, group, generators, dlog):
        self.curve = curve
        self.group = group
        self.generators = tuple(generators)
        self._dlog = dlog

    def coords(self, P):
        key = _point_key(P)
        if key not in self._dlog:
            raise ValueError("%r is not a recorded point of %r" % (P, self.curve))
        return self._dlog[key]

    def verify(self):
        """Recheck that the coordinate map is an isomorphism of groups."""
        pts = self.curve.points()
        if len(pts) != self.group.order:
            return False
        for P in pts:
            for Q in pts:
                lhs = self.coords(self.curve.add(P, Q))
                rhs = self.group.add(self.coords(P), self.coords(Q))
                if lhs != rhs:
                    return False
        return True


class ClosedPoint:
    """A Frobenius orbit of geometric points; the degree is the orbit size.

    The representative is the orbit member with the smallest coordinate
    index pair, so equal closed points always carry equal reps.
    """

    def __init__(self, curve, orbit):
        orbit = list(orbit)
        rep = min(orbit, key=_point_key)
        while orbit[0] is not rep:
            orbit.append(orbit.pop(0))
        self.curve = curve
        self.orbit = tuple(orbit)
        self.rep = rep
        self.degree = len(orbit)

    @property
    def is_infinity(self):
        return self.rep is None

    def _key(self):
        return (self.degree, _point_key(self.rep))

    def __eq__(self, other):
        if not isinstance(other, ClosedPoint):
            return NotImplemented
        return self.curve == other.curve and self._key() == other._key()

    def __hash__(self):
        return hash((self.curve, self._key()))

    def __repr__(self):
        if self.is_infinity:
            return "ClosedPoint(deg=1, infinity)"
        x, y = self.rep
        return "ClosedPoint(deg=%d, x=%r, y=%r)" % (self.degree, x, y)


def infinity_point(curve):
    return ClosedPoint(curve, [None])


def enumerate_closed_points(curve, N):
    """All closed points of degree <= N, sorted by degree then representative.

    Census bookkeeping: for every n <= N the exact identity
    sum_{m | n} m * N_m = #E(F_{q^n}) is asserted against an independent
    exhaustive recount.
    """
    q = curve.field.q
    if q ** N > ENUMERATION_BUDGET:
        raise ResourceLimitError(
            "closed-point enumeration to degree %d means a field of size "
            "%d > %d; re-run with a smaller degree bound" %
            (N, q ** N, ENUMERATION_BUDGET))
    if curve.field.d != 1 and N > 1:
        raise ValueError(
            "degree bounds beyond 1 need a prime base field (extension "
            "towers over F_{p^m} are out of scope)")
    by_degree = {}
    counts = {}
    for n in range(1, N + 1):
        ext = FiniteField(curve.field.p, n * curve.field.d)
        pts = curve.points(ext)
        counts[n] = len(pts)
        seen = set()
        fresh = []
        for P in pts:
            key = _point_key(P)
            if key in seen:
                continue
            orbit = [P]
            seen.add(key)
            cur = curve.frobenius_point(P)
            while _point_key(cur) != key:
                orbit.append(cur)
                seen.add(_point_key(cur))
                cur = curve.frobenius_point(cur)
            if len(orbit) == n:
                fresh.append(ClosedPoint(curve, orbit))
            elif n % len(orbit) != 0:
                raise AssertionError("orbit size %d does not divide %d"
                                     % (len(orbit), n))
        by_degree[n] = sorted(fresh, key=lambda cp: cp._key())
    for n in range(1, N + 1):
        lhs = sum(m * len(by_degree[m]) for m in range(1, n + 1) if n % m == 0)
        if lhs != counts[n]:
            raise AssertionError(
                "census identity fails at degree %d: %d orbits-weighted "
                "points vs %d enumerated" % (n, lhs, counts[n]))
    out = []
    for n in range(1, N + 1):
        out.extend(by_degree[n])
    return out


class DivisorFF:
    """Finite formal Z-linear combination of closed points."""

    def __init__(self, entries=()):
        table = {}
        items = entries.items() if isinstance(entries, dict) else entries
        for cp, mult in items:
            if mult:
                table[cp] = table.get(cp, 0) + mult
                if not table[cp]:
                    del table[cp]
        self._table = table

    @property
    def degree(self):
        return sum(cp.degree * m for cp, m in self._table.items())

    def multiplicity(self, cp):
        return self._table.get(cp, 0)

    def scaled(self, k):
        return DivisorFF({cp: m * k for cp, m in self._table.items()})

    def support(self):
        return sorted(self._table, key=lambda cp: cp._key())

    def items(self):
        return [(cp, self._table[cp]) for cp in self.support()]

    def __add__(self, other):
        out = dict(self._table)
        for cp, m in other._table.items():
            out[cp] = out.get(cp, 0) + m
        return DivisorFF(out)

    def __neg__(self):
        return DivisorFF({cp: -m for cp, m in self._table.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, DivisorFF):
            return NotImplemented
        return self._table == other._table

    def __hash__(self):
        return hash(tuple((cp, m) for cp, m in self.items()))

    def __repr__(self):
        if not self._table:
            return "DivisorFF(0)"
        return "DivisorFF(%s)" % ", ".join(
            "%d*%r" % (m, cp) for cp, m in self.items())


class RationalFunctionFF:
    """Formal product y^a * prod (x - c)^e on a fixed curve.

    These atoms are all the vanishing search ever shifts by, and their
    divisors are computed directly, so no general function-field
    arithmetic is needed.  Constant scalars are dropped: they do not move
    divisors.
    """

    def __init__(self, curve, x_shifts=(), y_exp=0):
        table = {}
        items = x_shifts.items() if isinstance(x_shifts, dict) else x_shifts
        for c, e in items:
            c = curve.field.lift(c)
            if e:
                key = c.index()
                table[key] = (c, table.get(key, (c, 0))[1] + e)
                if not table[key][1]:
                    del table[key]
        self.curve = curve
        self._shifts = table
        self.y_exp = y_exp

    def is_one(self):
        return not self._shifts and not self.y_exp

    def x_shifts(self):
        return [self._shifts[k] for k in sorted(self._shifts)]

    def __mul__(self, other):
        if other.curve != self.curve:
            raise ValueError("rational functions live on different curves")
        merged = {c: e for c, e in self.x_shifts()}
        for c, e in other.x_shifts():
            merged[c] = merged.get(c, 0) + e
        return RationalFunctionFF(self.curve, merged,
                                  self.y_exp + other.y_exp)

    def inverse(self):
        return RationalFunctionFF(
            self.curve, {c: -e for c, e in self.x_shifts()}, -self.y_exp)

    def __eq__(self, other):
        if not isinstance(other, RationalFunctionFF):
            return NotImplemented
        return (self.curve == other.curve and self.y_exp == other.y_exp
                and self.x_shifts() == other.x_shifts())

    def __hash__(self):
        return hash((self.curve, self.y_exp,
                     tuple((c.index(), e) for c, e in self.x_shifts())))

    def __repr__(self):
        parts = []
        if self.y_exp:
            parts.append("y^%d" % self.y_exp)
        for c, e in self.x_shifts():
            parts.append("(x - %r)^%d" % (c, e))
        return "RationalFunctionFF(%s)" % (" * ".join(parts) or "1")

    def label(self):
        """A short diff-friendly description used in reports."""
        if self.is_one():
            return "1"
        parts = []
        if self.y_exp:
            parts.append("y" if self.y_exp == 1 else "y^%d" % self.y_exp)
        for c, e in self.x_shifts():
            base = "(x-%d)" % c.index()
            parts.append(base if e == 1 else base + "^%d" % e)
        return "*".join(parts)

    def divisor(self):
        """The principal divisor, atom by atom.

        A computed degree other than 0 would mean the atom bookkeeping is
        inconsistent, so it is a hard failure.
        """
        div = DivisorFF()
        if self.y_exp:
            div = div + _divisor_of_y(self.curve).scaled(self.y_exp)
        for c, e in self.x_shifts():
            div = div + _divisor_of_x_shift(self.curve, c).scaled(e)
        if div.degree != 0:
            raise AssertionError(
                "internal consistency failure: divisor of %r has degree %d"
                % (self, div.degree))
        return div


def _divisor_of_x_shift(curve, c):
    """div(x - c): the fiber of x over c minus twice infinity."""
    field = curve.field
    v = curve.rhs(c)
    inf = infinity_point(curve)
    if v.is_zero():
        cp = ClosedPoint(curve, [(c, field.zero())])
        return DivisorFF([(cp, 2), (inf, -2)])
    if quadratic_symbol(v) == 1:
        y0 = field.sqrt(v)
        cp1 = ClosedPoint(curve, [(c, y0)])
        cp2 = ClosedPoint(curve, [(c, -y0)])
        return DivisorFF([(cp1, 1), (cp2, 1), (inf, -2)])
    if field.d != 1:
        raise ValueError(
            "inert fibers over an extension base field are out of scope")
    ext = FiniteField(field.p, 2)
    y0 = ext.sqrt(ext.lift(v))
    c2 = ext.lift(c)
    cp = ClosedPoint(curve, [(c2, y0), (c2, -y0)])
    return DivisorFF([(cp, 1), (inf, -2)])


def _divisor_of_y(curve):
    """div(y): the 2-torsion x-locus minus three times infinity."""
    field = curve.field
    if field.d != 1:
        raise ValueError(
            "y-divisors over an extension base field are out of scope")
    inf = infinity_point(curve)
    entries = [(inf, -3)]
    cubic = [curve.a6, curve.a4, curve.a2, field.one()]
    total = 0
    for d in (1, 2, 3):
        ext = field if d == 1 else FiniteField(field.p, d)
        roots = [r for r in ext.poly_roots([ext.lift(c) for c in cubic])
                 if d == 1 or not r.in_prime_field()]
        seen = set()
        for root in roots:
            if root.index() in seen:
                continue
            orbit = [(root, ext.zero())]
            seen.add(root.index())
            cur = curve.frobenius_point(orbit[0])
            while _point_key(cur) != _point_key(orbit[0]):
                orbit.append(cur)
                seen.add(cur[0].index())
                cur = curve.frobenius_point(cur)
            if len(orbit) != d:
                raise AssertionError(
                    "2-torsion orbit of size %d found at level %d"
                    % (len(orbit), d))
            entries.append((ClosedPoint(curve, orbit), 1))
            total += d
    if total != 3:
        raise AssertionError(
            "2-torsion x-locus has degree %d, expected 3" % total)
    return DivisorFF(entries)
