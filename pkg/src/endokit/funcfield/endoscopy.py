"""Endoscopic data on an elliptic base over F_q.

An endoscopic datum packages the quadratic character cut out by a rational
two-torsion point T = (e, 0) (the function x - e has divisor 2T - 2*inf),
the unramified double cover it classifies (realized by the explicit
quartic w^2 = z^4 + 3e z^2 + f'(e)), and an unramified character mu of the
cover's class group plus a degree twist.  Frobenius at a closed point then
lands in O(2): a rotation with ratio mu(Fr_y1)/mu(Fr_y2) when the point
splits on the cover, a reflection when it does not.

On a genus-one cover the deck transformation is translation by a rational
two-torsion point of the cover, so the rotation ratios are always +1 or
-1 for finite-order characters; data are flagged accordingly rather than
rejected, and the parity computations downstream do not depend on the
generic O(2) picture.
"""

from ..algebra import (
    Character,
    CyclotomicValue,
    FiniteField,
    Poly,
    group_characters,
    quadratic_symbol,
    root_of_unity,
)
from ..algebra.polys import poly_gcd
from .curves import (
    ClosedPoint,
    DivisorFF,
    EllipticCurveFq,
    RationalFunctionFF,
    infinity_point,
    weierstrass_add,
)

ONE = root_of_unity(1)
ZERO = ONE - ONE

DEGENERATE_NOTE = (
    "image possibly in Z2 x Z2: every split rotation ratio is +1 or -1. "
    "On a genus-one cover the deck transformation is translation by a "
    "rational two-torsion point, so this degeneration is automatic for "
    "finite-order characters; parity statements are unaffected."
)


class CoverModelError(RuntimeError):
    """The explicit quartic cover failed to lift or trace a point."""


class _QuadExt:
    """F[s]/(s^2 - xi) for a non-square xi of F = F_{p^d}.

    Cover points over non-split base points have coordinates here, and
    representing the extension relative to F sidesteps any need to embed
    F_{p^d} into F_{p^{2d}}.
    """

    def __init__(self, field, xi):
        self.field = field
        self.xi = xi
        # s^p = xi^((p-1)/2) * s, the only fact Frobenius needs
        self.s_to_p = xi ** ((field.p - 1) // 2)

    def embed(self, a):
        return _QElt(self, a, self.field.zero())

    def s(self):
        return _QElt(self, self.field.zero(), self.field.one())


class _QElt:
    __slots__ = ("ext", "a", "b")

    def __init__(self, ext, a, b):
        self.ext = ext
        self.a = a
        self.b = b

    def _coerce(self, other):
        if isinstance(other, _QElt):
            return other
        if isinstance(other, int):
            return self.ext.embed(self.ext.field.lift(other))
        return self.ext.embed(self.ext.field.lift(other))

    def __eq__(self, other):
        other = self._coerce(other)
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __add__(self, other):
        other = self._coerce(other)
        return _QElt(self.ext, self.a + other.a, self.b + other.b)

    def __neg__(self):
        return _QElt(self.ext, -self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        return _QElt(
            self.ext,
            self.a * other.a + self.b * other.b * self.ext.xi,
            self.a * other.b + self.b * other.a,
        )

    def inverse(self):
        norm = self.a * self.a - self.b * self.b * self.ext.xi
        inv = norm.inverse()
        return _QElt(self.ext, self.a * inv, -(self.b * inv))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero()

    def frobenius(self):
        return _QElt(self.ext, self.a.frobenius(),
                     self.b.frobenius() * self.ext.s_to_p)

    def in_base(self):
        return self.b.is_zero()

    def __repr__(self):
        return "(%r + %r s)" % (self.a, self.b)


class SplitReport:
    """Verdict of the quadratic character at one closed point."""

    def __init__(self, point, split, symbol, value, note=None):
        self.point = point
        self.split = split
        self.symbol = symbol
        self.value = value
        self.note = note

    def __repr__(self):
        return "SplitReport(%r, %s)" % (
            self.point, "split" if self.split else "non-split")


class FrobeniusClass:
    """Semisimple O(2) conjugacy class of Frobenius at a closed point.

    a is the eigenvalue on the sign line (+1 rotation / -1 reflection),
    b the rotation trace ratio + 1/ratio (0 for reflections).  b is
    asserted real in the literal sense: fixed by zeta -> 1/zeta.
    """

    def __init__(self, point, kind, a, b, ratio=None):
        if kind not in ("split-rotation", "non-split-reflection"):
            raise ValueError("unknown Frobenius class kind %r" % (kind,))
        if b != b.conjugate():
            raise AssertionError(
                "rotation trace %r at %r is not conjugation-fixed"
                % (b, point))
        self.point = point
        self.kind = kind
        self.a = a
        self.b = b
        self.ratio = ratio

    @property
    def split(self):
        return self.kind == "split-rotation"

    def __repr__(self):
        return "FrobeniusClass(%r, %s, a=%d, b=%r)" % (
            self.point, self.kind, self.a, self.b)


class EndoscopicDatum:
    """A two-torsion character, its double cover, and a cover character."""

    def __init__(self, curve, torsion_x, mu_exponents=None, twist=1):
        if not curve.a2.is_zero():
            raise ValueError(
                "endoscopic data need the short form y^2 = x^3 + a x + b")
        field = curve.field
        e = field.lift(torsion_x)
        if not curve.rhs(e).is_zero():
            raise ValueError(
                "x = %r is not the abscissa of a two-torsion point" % (e,))
        self.curve = curve
        self.torsion_x = e
        self.torsion_point = ClosedPoint(curve, [(e, field.zero())])

        self.kappa_fn = RationalFunctionFF(curve, {e: 1})
        expected = DivisorFF([(self.torsion_point, 2),
                              (infinity_point(curve), -2)])
        if self.kappa_fn.divisor() != expected:
            raise AssertionError(
                "div(x - e) is not 2T - 2*infinity for %r" % (e,))

        # the quartic model of the cover and its Weierstrass form
        self.cover_p = e * 3
        self.cover_q = e * e * 3 + curve.a4
        self.quartic = Poly([self.cover_q, field.zero(), self.cover_p,
                             field.zero(), field.one()])
        if poly_gcd(self.quartic, self.quartic.derivative()).degree != 0:
            raise AssertionError("cover quartic is not squarefree")
        self.cover = EllipticCurveFq(
            field,
            a4=self.cover_q * (-4),
            a6=self.cover_p * self.cover_q * (-4),
            a2=self.cover_p,
        )
        self._verify_cover_maps()

        self.cover_group = self.cover.group_structure()
        self.tau = (-self.cover_p, field.zero())
        self.tau_coords = self.cover_group.coords(self.tau)

        group = self.cover_group.group
        if mu_exponents is None:
            mu_exponents = (0,) * len(group.orders)
        self.mu = Character(group, mu_exponents)
        twist = ONE * twist
        if twist.multiplicative_order() is None:
            raise ValueError("degree twist %r is not a root of unity" % twist)
        self.twist = twist

    def __repr__(self):
        return "EndoscopicDatum(%r, e=%r, mu=%r, twist=%r)" % (
            self.curve, self.torsion_x, self.mu, self.twist)

    def _verify_cover_maps(self):
        """Check the birational correspondence on every affine cover point:
        (z, w) -> (z^2 + e, z w) lands on the base curve, (z, w) ->
        (2(z^2 - w), -2z(2(z^2 - w) + 3e)) lands on the Weierstrass model,
        and the latter inverts where the chord formulas allow."""
        field = self.curve.field
        for z in field:
            g = self.quartic(z)
            ws = []
            if g.is_zero():
                ws = [field.zero()]
            elif quadratic_symbol(g) == 1:
                w0 = field.sqrt(g)
                ws = [w0, -w0]
            for w in ws:
                base_pt = (z * z + self.torsion_x, z * w)
                if not self.curve.contains(base_pt):
                    raise AssertionError(
                        "cover point (%r, %r) misses the base curve" % (z, w))
                u = (z * z - w) * 2
                v = -(z * 2) * (u + self.cover_p)
                if not self.cover.contains((u, v)):
                    raise AssertionError(
                        "cover point (%r, %r) misses the Weierstrass model"
                        % (z, w))
                if not (u + self.cover_p).is_zero():
                    z_back = -v / ((u + self.cover_p) * 2)
                    w_back = z_back * z_back - u / 2
                    if z_back != z or w_back != w:
                        raise AssertionError(
                            "Weierstrass chart fails to invert at (%r, %r)"
                            % (z, w))

    def mu_of(self, coords, cover_degree):
        return self.mu(coords) * self.twist ** cover_degree

    def _trace_to_coords(self, pt, note):
        """Map an F_q-rational point of the cover model to group coords."""
        if pt is not None:
            u, v = pt
            if isinstance(u, _QElt):
                if not (u.in_base() and v.in_base()):
                    raise CoverModelError(
                        "%s: trace left the rational locus" % note)
                u, v = u.a, v.a
            if not (u.in_prime_field() and v.in_prime_field()):
                raise CoverModelError(
                    "%s: trace left the prime field" % note)
            base = self.cover.field
            pt = (base.lift(u.as_int()), base.lift(v.as_int()))
        try:
            return self.cover_group.coords(pt)
        except ValueError:
            raise CoverModelError("%s: trace is not a recorded point" % note)

    def cover_lift_traces(self, point):
        """Class-group traces of the cover points over one closed point.

        Returns [(coords, cover_degree), ...]: two entries of degree
        deg(point) when the point splits, one entry of degree
        2*deg(point) when it does not.
        """
        field = self.curve.field
        d = point.degree
        if point.is_infinity:
            # the two branches at infinity: the origin and tau
            pairs = [(self.cover_group.coords(None), 1),
                     (self.tau_coords, 1)]
            return sorted(pairs)
        report = split_classify(point, self)
        x0, y0 = point.rep
        ext = x0.field
        if report.split:
            if x0 == ext.lift(self.torsion_x):
                c = field.sqrt(self.cover_q)
                pairs = [(self._trace_to_coords((-(c * 2), field.zero()),
                                                "torsion lift"), 1),
                         (self._trace_to_coords((c * 2, field.zero()),
                                                "torsion lift"), 1)]
                return sorted(pairs)
            xi = x0 - ext.lift(self.torsion_x)
            try:
                z0 = ext.sqrt(xi)
            except ValueError:
                raise CoverModelError(
                    "split point %r has no rational cover abscissa" % point)
            a2 = ext.lift(self.cover.a2)
            a4 = ext.lift(self.cover.a4)
            pairs = []
            for z, w in ((z0, y0 / z0), (-z0, -(y0 / z0))):
                u = (z * z - w) * 2
                v = -(z * 2) * (u + a2)
                trace = self._orbit_trace((u, v), d, a2, a4,
                                          "split lift of %r" % point)
                pairs.append((trace, d))
            return sorted(pairs)
        # non-split: coordinates live in F[s]/(s^2 - xi)
        if x0 == ext.lift(self.torsion_x):
            quad = _QuadExt(ext, ext.lift(self.cover_q))
            z = quad.embed(ext.zero())
            w = quad.s()
        else:
            quad = _QuadExt(ext, x0 - ext.lift(self.torsion_x))
            z = quad.s()
            w = quad.embed(y0 / quad.xi) * z  # y0 / s = (y0 / xi) s
        a2 = quad.embed(ext.lift(self.cover.a2))
        a4 = quad.embed(ext.lift(self.cover.a4))
        u = (z * z - w) * 2
        v = -(z * 2) * (u + a2)
        trace = self._orbit_trace((u, v), 2 * d, a2, a4,
                                  "non-split lift of %r" % point)
        return [(trace, 2 * d)]

    def _orbit_trace(self, pt, size, a2, a4, note):
        def frob(q):
            if q is None:
                return None
            return (q[0].frobenius(), q[1].frobenius())

        acc = pt
        cur = pt
        for _ in range(size - 1):
            cur = frob(cur)
            acc = weierstrass_add(acc, cur, a2, a4)
        closes = frob(cur)
        if not _points_agree(closes, pt):
            raise CoverModelError("%s: orbit does not close after %d steps"
                                  % (note, size))
        return self._trace_to_coords(acc, note)


def _points_agree(P, Q):
    if P is None or Q is None:
        return P is None and Q is None
    return P[0] == Q[0] and P[1] == Q[1]


def split_classify(point, datum):
    """Split/non-split verdict by the quadratic symbol of x - e.

    At the torsion point itself the naive value is 0, so the
    complementary factor y^2 / (x - e) = x^2 + e x + (e^2 + a) is
    evaluated instead; at infinity the local expansion in t = x/y has
    leading unit 1, so infinity always splits.
    """
    if point.curve != datum.curve:
        raise ValueError("point and datum live on different curves")
    if point.is_infinity:
        return SplitReport(point, True, 1, datum.curve.field.one(),
                           note="leading local unit at infinity")
    x0, y0 = point.rep
    ext = x0.field
    e = ext.lift(datum.torsion_x)
    if x0 == e:
        value = ext.lift(datum.cover_q)
        note = "complementary factor at the torsion point"
    else:
        value = x0 - e
        note = None
    sym = quadratic_symbol(value)
    if sym == 0:
        raise AssertionError("vanishing character value at %r" % (point,))
    return SplitReport(point, sym == 1, sym, value, note)


def sigma_frobenius(point, datum):
    """The O(2) Frobenius class at a closed point."""
    report = split_classify(point, datum)
    if not report.split:
        return FrobeniusClass(point, "non-split-reflection", -1, ZERO)
    lifts = datum.cover_lift_traces(point)
    if len(lifts) != 2:
        raise CoverModelError("split point %r produced %d cover lifts"
                              % (point, len(lifts)))
    mu1 = datum.mu_of(*lifts[0])
    mu2 = datum.mu_of(*lifts[1])
    ratio = mu1 / mu2
    return FrobeniusClass(point, "split-rotation", 1,
                          ratio + ratio.inverse(), ratio)


class FrobeniusSummary:
    def __init__(self, datum, classes, degenerate):
        self.datum = datum
        self.classes = classes
        self.degenerate = degenerate
        self.note = DEGENERATE_NOTE if degenerate else None


def frobenius_summary(datum, points):
    """Frobenius classes over a family of points, with the reduction flag."""
    classes = [sigma_frobenius(p, datum) for p in points]
    ratios = [c.ratio for c in classes if c.split]
    degenerate = all(r * r == ONE for r in ratios)
    return FrobeniusSummary(datum, classes, degenerate)


class AdjointCheck:
    def __init__(self, point, frobenius_class, matrix, trace, predicted):
        self.point = point
        self.frobenius_class = frobenius_class
        self.matrix = matrix
        self.trace = trace
        self.predicted = predicted


def sigma_prime_check(point, datum):
    """Verify Tr(sigma'(Fr_x), W) = a_x + (-1)^deg b_x on the adjoint model.

    sigma' twists sigma by the unramified quadratic character with value
    (-1)^deg; W is modeled as the block matrix diag(nu * M, det M) for the
    two-dimensional O(2) matrix M of the class.
    """
    cls = sigma_frobenius(point, datum)
    if cls.split:
        m = [[cls.ratio, ZERO], [ZERO, cls.ratio.inverse()]]
        det = ONE
    else:
        m = [[ZERO, ONE], [ONE, ZERO]]
        det = -ONE
    nu = (-1) ** point.degree
    matrix = [
        [m[0][0] * nu, m[0][1] * nu, ZERO],
        [m[1][0] * nu, m[1][1] * nu, ZERO],
        [ZERO, ZERO, det],
    ]
    trace = matrix[0][0] + matrix[1][1] + matrix[2][2]
    predicted = cls.b * nu + cls.a
    if trace != predicted:
        raise AssertionError(
            "adjoint trace %r disagrees with a + (-1)^deg b = %r at %r"
            % (trace, predicted, point))
    return AdjointCheck(point, cls, matrix, trace, predicted)


class CharacterCheck:
    def __init__(self, function, divisor, kappa_product, mu_product):
        self.function = function
        self.divisor = divisor
        self.kappa_product = kappa_product
        self.mu_product = mu_product
        self.ok = kappa_product == 1 and mu_product == ONE

    def __repr__(self):
        return "CharacterCheck(%s, kappa=%d, mu=%r, %s)" % (
            self.function.label(), self.kappa_product, self.mu_product,
            "ok" if self.ok else "FAIL witness %r" % self.divisor)


def character_consistency(datum, samples):
    """Reciprocity on principal divisors: the non-split sign product and
    the mu-product must both be 1 for every sampled function.

    Failures are returned as records carrying the witness divisor; the
    divisor computation itself hard-fails on any nonzero degree.
    """
    records = []
    for fn in samples:
        div = fn.divisor()
        kappa = 1
        mu_prod = ONE
        for cp, mult in div.items():
            if not split_classify(cp, datum).split:
                kappa *= (-1) ** mult
            for coords, cdeg in datum.cover_lift_traces(cp):
                mu_prod = mu_prod * datum.mu_of(coords, cdeg) ** mult
        records.append(CharacterCheck(fn, div, kappa, mu_prod))
    return records


class DeltaReport:
    def __init__(self, divisor, pairing):
        self.divisor = divisor
        self.pairing = pairing
        self.even = True


def delta_parity(differential, datum):
    """Pairing of a differential g * dx/y with the non-split locus.

    The canonical divisor of an elliptic curve is trivial, so
    div(g dx/y) = div(g); the pairing is the multiplicity sum over
    non-split points, and an odd value is a hard failure (it would
    contradict the evenness theorem for quadratic characters).
    """
    div = differential.divisor()
    pairing = sum(m for cp, m in div.items()
                  if not split_classify(cp, datum).split)
    if pairing % 2:
        raise AssertionError(
            "odd endoscopic pairing %d for %r" % (pairing, differential))
    return DeltaReport(div, pairing)


def select_character(group, order):
    """The lexicographically first character of the given exact order."""
    for chi in group_characters(group):
        if chi.order() == order:
            return chi
    raise ValueError("no character of order %d on %r" % (order, group))


def base_change_datum(datum, k):
    """The same datum over the degree-k constant extension, with trivial
    character; used to check that classification is degree-compatible."""
    field = datum.curve.field
    ext = FiniteField(field.p, field.d * k)
    curve = EllipticCurveFq(ext, ext.lift(datum.curve.a4),
                            ext.lift(datum.curve.a6))
    return EndoscopicDatum(curve, ext.lift(datum.torsion_x))
