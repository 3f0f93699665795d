"""Dense univariate polynomials over an exact field.

Coefficients are stored lowest degree first.  Any coefficient domain with
field arithmetic through the usual operators works: ``fractions.Fraction``,
``complex``, :class:`~endokit.algebra.finite_fields.FFElement`,
:class:`~endokit.algebra.cyclotomic.CyclotomicValue`.  The zero polynomial
has an empty coefficient tuple; otherwise the leading coefficient is
nonzero.
"""


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Immutable dense polynomial, lowest-degree coefficient first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self):
        return "Poly(%r)" % (list(self.coeffs),)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [a[0] * b[0] * 0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Poly(out)

    def scale(self, c):
        return Poly([c * x for x in self.coeffs])

    def shift(self, k):
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        zero = self.coeffs[0] * 0
        return Poly([zero] * k + list(self.coeffs))

    def divmod(self, other):
        """Quotient and remainder; coefficient division must be exact field
        division."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        lead = other.coeffs[-1]
        quot = [rem[0] * 0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lead
            quot[k] = c
            for j, oc in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * oc
        return Poly(quot), Poly(rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def derivative(self):
        return Poly([c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return 0 * x
        return acc

    def monic(self):
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Poly([c / lead for c in self.coeffs])


def poly_gcd(f, g):
    """Monic gcd by the Euclidean algorithm (field coefficients)."""
    while not g.is_zero():
        f, g = g, f % g
    if f.is_zero():
        return f
    return f.monic()


def _det(rows):
    """Determinant by Gaussian elimination with partial pivoting on exact
    nonzero tests.  Destructive on `rows`."""
    n = len(rows)
    sign = 1
    det = None
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if not rows[r][col] == 0:
                pivot = r
                break
        if pivot is None:
            return rows[0][0] * 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            sign = -sign
        p = rows[col][col]
        det = p if det is None else det * p
        for r in range(col + 1, n):
            if rows[r][col] == 0:
                continue
            factor = rows[r][col] / p
            rows[r] = [rows[r][j] - factor * rows[col][j] for j in range(n)]
    if det is None:
        raise ValueError("empty matrix")
    return det if sign == 1 else -det


def resultant(f, g):
    """Resultant via the Sylvester matrix determinant."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    n, m = f.degree, g.degree
    if n == 0 and m == 0:
        return f.coeffs[0] ** 0
    if n == 0:
        return f.coeffs[0] ** m
    if m == 0:
        return g.coeffs[0] ** n
    size = n + m
    zero = f.coeffs[0] * 0
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(m):
        rows.append([zero] * i + fc + [zero] * (size - n - 1 - i))
    for i in range(n):
        rows.append([zero] * i + gc + [zero] * (size - m - 1 - i))
    return _det(rows)


def poly_discriminant(f):
    """Discriminant (-1)^(n(n-1)/2) * Res(f, f') / lc(f).

    Raises ValueError for the zero polynomial and for constants, which have
    no discriminant.
    """
    if f.is_zero():
        raise ValueError("invalid input: zero polynomial has no discriminant")
    n = f.degree
    if n < 1:
        raise ValueError("invalid input: constant polynomial has no discriminant")
    if n == 1:
        return f.leading() ** 0
    df = f.derivative()
    if df.is_zero():
        # Only possible in positive characteristic (e.g. x^p + c); every root
        # of f is then a repeated root.
        return f.leading() * 0
    res = resultant(f, df)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    disc = res / f.leading()
    return disc if sign == 1 else -disc
