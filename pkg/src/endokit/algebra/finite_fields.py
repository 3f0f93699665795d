"""Finite fields GF(p^d) with a deterministic modulus convention.

The extension modulus is the first monic irreducible of degree d in the
base-p integer ordering: encode sum(c_i x^i) as the integer sum(c_i p^i)
and count upward.  That pins GF(5^2) to x^2 + 2 and GF(2^3) to
x^3 + x + 1, so element indices (and anything serialized with them) mean
the same thing on every run and every machine.

Elements are coefficient tuples over the prime field.  Mixing with Python
ints treats the int as an element of the prime subfield (reduced mod p);
`element(n)` instead decodes n as a base-p index into the enumeration
order.  The two agree below p.
"""

from .polys import Poly, poly_gcd


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n):
    out = []
    i = 2
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            while n % i == 0:
                n //= i
        i += 1
    if n > 1:
        out.append(n)
    return out


def _powmod_poly(base, exp, mod):
    """base**exp reduced mod the polynomial `mod` by square-and-multiply."""
    one = mod.leading() ** 0
    result = Poly([one])
    base = base % mod
    while exp:
        if exp & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        exp >>= 1
    return result


class FiniteField:
    """The field GF(p^d); instances with equal (p, d) compare equal."""

    def __init__(self, p, d=1):
        if not _is_prime(p):
            raise ValueError("characteristic %r is not prime" % (p,))
        if d < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.d = d
        self.q = p ** d
        self.modulus = self._find_modulus() if d > 1 else None

    def _find_modulus(self):
        base = FiniteField(self.p, 1)
        x_poly = Poly([base.zero(), base.one()])
        for idx in range(self.p ** self.d):
            digits = []
            n = idx
            for _ in range(self.d):
                digits.append(n % self.p)
                n //= self.p
            coeffs = digits + [1]
            f = Poly([base.element(c) for c in coeffs])
            xq = _powmod_poly(x_poly, self.p ** self.d, f)
            if not (xq - x_poly).is_zero():
                continue
            ok = True
            for r in _prime_factors(self.d):
                h = _powmod_poly(x_poly, self.p ** (self.d // r), f)
                if poly_gcd(f, h - x_poly).degree != 0:
                    ok = False
                    break
            if ok:
                return tuple(coeffs)
        raise RuntimeError("no irreducible of degree %d over GF(%d)" % (self.d, self.p))

    def __eq__(self, other):
        if isinstance(other, FiniteField):
            return self.p == other.p and self.d == other.d
        return NotImplemented

    def __hash__(self):
        return hash(("FiniteField", self.p, self.d))

    def __repr__(self):
        if self.d == 1:
            return "GF(%d)" % self.p
        return "GF(%d^%d)" % (self.p, self.d)

    def element(self, index):
        """The element whose base-p digit expansion is `index` (0 <= index < q)."""
        if not 0 <= index < self.q:
            raise ValueError("element index %r out of range for %r" % (index, self))
        digits = []
        n = index
        for _ in range(self.d):
            digits.append(n % self.p)
            n //= self.p
        return FFElement(self, tuple(digits))

    def __call__(self, index):
        return self.element(index)

    def lift(self, value):
        """Coerce an int (mod p, into the prime subfield) or an element of
        this field / its prime subfield."""
        if isinstance(value, FFElement):
            if value.field == self:
                return value
            if value.field.p == self.p and value.field.d == 1:
                return FFElement(self, (value.coeffs[0],) + (0,) * (self.d - 1))
            raise ValueError("cannot lift %r into %r" % (value, self))
        if isinstance(value, int):
            return FFElement(self, (value % self.p,) + (0,) * (self.d - 1))
        raise TypeError("cannot lift %r into %r" % (value, self))

    def zero(self):
        return FFElement(self, (0,) * self.d)

    def one(self):
        return FFElement(self, (1,) + (0,) * (self.d - 1))

    def gen(self):
        """The residue class of x (for d > 1), else 1."""
        if self.d == 1:
            return self.one()
        return self.element(self.p)

    def elements(self):
        for idx in range(self.q):
            yield self.element(idx)

    def __iter__(self):
        return self.elements()

    def poly_roots(self, coeffs):
        """Distinct roots in this field of a polynomial with coefficients in
        this field (lowest degree first; ints allowed).

        Deterministic: small and even-characteristic fields are scanned
        directly, larger odd ones go through gcd splitting against
        (x + c)^((q-1)/2) - 1 with c swept through the element order.
        Result is sorted by element index.
        """
        f = Poly([self.lift(c) for c in coeffs])
        if f.is_zero():
            raise ValueError("invalid input: zero polynomial")
        if f.degree == 0:
            return []
        f = f.monic()
        if self.q <= 512 or self.p == 2:
            return [x for x in self.elements() if f(x).is_zero()]
        x_poly = Poly([self.zero(), self.one()])
        xq = _powmod_poly(x_poly, self.q, f)
        g = poly_gcd(f, xq - x_poly)
        roots = self._split_all(g)
        return sorted(roots, key=lambda r: r.index())

    def _split_all(self, g):
        # g is monic, squarefree, and a product of linear factors.
        if g.degree <= 0:
            return []
        if g.degree == 1:
            return [-g.coeffs[0]]
        one_poly = Poly([self.one()])
        for idx in range(self.q):
            c = self.element(idx)
            if g(-c).is_zero():
                linear = Poly([c, self.one()])
                rest, _ = g.divmod(linear)
                return [-c] + self._split_all(rest)
            s = _powmod_poly(Poly([c, self.one()]), (self.q - 1) // 2, g)
            g1 = poly_gcd(g, s - one_poly)
            if 0 < g1.degree < g.degree:
                g2, _ = g.divmod(g1)
                return self._split_all(g1) + self._split_all(g2)
        raise RuntimeError("splitting sweep exhausted for %r" % (g,))

    def sqrt(self, x):
        """The canonical square root (smallest element index), or ValueError
        when x is not a square."""
        x = self.lift(x)
        if x.is_zero():
            return x
        if self.p == 2:
            return x ** (self.q // 2)
        if quadratic_symbol(x) != 1:
            raise ValueError("%r is not a square in %r" % (x, self))
        roots = self.poly_roots([-x, self.zero(), self.one()])
        return roots[0]


class FFElement:
    """An element of a :class:`FiniteField`, stored as a coefficient tuple."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def index(self):
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.field.p + c
        return n

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def in_prime_field(self):
        return all(c == 0 for c in self.coeffs[1:])

    def as_int(self):
        """The prime-subfield representative in [0, p); error otherwise."""
        if not self.in_prime_field():
            raise ValueError("%r does not lie in the prime subfield" % (self,))
        return self.coeffs[0]

    def frobenius(self):
        return self ** self.field.p

    def _align(self, other):
        """Bring self and other into a common field, or (None, None).

        Reflected operators are never invoked between same-class operands,
        so prime-field-vs-extension mixing has to be resolved here.
        """
        if isinstance(other, int):
            return self, self.field.lift(other)
        if isinstance(other, FFElement):
            if other.field == self.field:
                return self, other
            if other.field.p == self.field.p:
                if self.field.d == 1 and other.field.d > 1:
                    return other.field.lift(self), other
                if other.field.d == 1 and self.field.d > 1:
                    return self, self.field.lift(other)
        return None, None

    def __eq__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash((self.field.p, self.field.d, self.coeffs))

    def __repr__(self):
        if self.field.d == 1:
            return "%r(%d)" % (self.field, self.coeffs[0])
        return "%r(%d)" % (self.field, self.index())

    def __add__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        p = a.field.p
        return FFElement(
            a.field, tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple((-c) % p for c in self.coeffs))

    def __sub__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return b + (-a)

    def __mul__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        field = a.field
        p, d = field.p, field.d
        if d == 1:
            return FFElement(field, ((a.coeffs[0] * b.coeffs[0]) % p,))
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    prod[i + j] = (prod[i + j] + x * y) % p
        mod = field.modulus
        for k in range(len(prod) - 1, d - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for j in range(d):
                    prod[k - d + j] = (prod[k - d + j] - c * mod[j]) % p
        return FFElement(field, tuple(prod[:d]))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by zero in %r" % (self.field,))
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, exp):
        if exp < 0:
            return self.inverse() ** (-exp)
        result = self.field.one()
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result


def quadratic_symbol(x):
    """The quadratic residue symbol of x in its (odd) field: +1 for nonzero
    squares, -1 for non-squares, 0 at zero."""
    field = x.field
    if field.p == 2:
        raise ValueError("quadratic symbol undefined in characteristic 2")
    if x.is_zero():
        return 0
    s = x ** ((field.q - 1) // 2)
    return 1 if s == field.one() else -1
