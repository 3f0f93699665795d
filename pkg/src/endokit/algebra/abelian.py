"""Finite abelian groups in product coordinates and their characters.

A group is a product Z/n1 x ... x Z/nk; elements are exponent tuples.
Characters are indexed by exponent tuples of the same shape and take
values in cyclotomic fields, so character sums and orthogonality come out
exact rather than floating point.
"""

from itertools import product as _iter_product
from math import gcd

from .cyclotomic import CyclotomicValue, root_of_unity


def _lcm(a, b):
    return a * b // gcd(a, b)


class FiniteAbelianGroup:
    """Z/n1 x ... x Z/nk with additive tuple arithmetic."""

    def __init__(self, orders):
        orders = tuple(int(n) for n in orders)
        if not orders or any(n < 1 for n in orders):
            raise ValueError("cyclic factor orders must be positive: %r" % (orders,))
        self.orders = orders

    @property
    def order(self):
        total = 1
        for n in self.orders:
            total *= n
        return total

    def exponent(self):
        out = 1
        for n in self.orders:
            out = _lcm(out, n)
        return out

    def identity(self):
        return (0,) * len(self.orders)

    def _check(self, elem):
        if len(elem) != len(self.orders):
            raise ValueError("element %r has wrong shape for %r" % (elem, self))
        return tuple(x % n for x, n in zip(elem, self.orders))

    def add(self, a, b):
        a, b = self._check(a), self._check(b)
        return tuple((x + y) % n for x, y, n in zip(a, b, self.orders))

    def negate(self, a):
        a = self._check(a)
        return tuple((-x) % n for x, n in zip(a, self.orders))

    def subtract(self, a, b):
        return self.add(a, self.negate(b))

    def scale(self, k, a):
        a = self._check(a)
        return tuple((k * x) % n for x, n in zip(a, self.orders))

    def element_order(self, a):
        a = self._check(a)
        out = 1
        for x, n in zip(a, self.orders):
            out = _lcm(out, n // gcd(n, x))
        return out

    def elements(self):
        return _iter_product(*(range(n) for n in self.orders))

    def __iter__(self):
        return iter(self.elements())

    def __eq__(self, other):
        if isinstance(other, FiniteAbelianGroup):
            return self.orders == other.orders
        return NotImplemented

    def __hash__(self):
        return hash(("FiniteAbelianGroup", self.orders))

    def __repr__(self):
        return "FiniteAbelianGroup(%r)" % (list(self.orders),)


class Character:
    """chi(x) = prod_i zeta_{n_i}^(a_i * x_i) for a fixed exponent tuple a."""

    __slots__ = ("group", "exponents")

    def __init__(self, group, exponents):
        self.group = group
        self.exponents = group._check(tuple(exponents))

    def __call__(self, elem):
        elem = self.group._check(elem)
        value = CyclotomicValue(1, [1])
        for a, x, n in zip(self.exponents, elem, self.group.orders):
            if n > 1 and (a * x) % n:
                value = value * root_of_unity(n, a * x)
        return value

    def order(self):
        out = 1
        for a, n in zip(self.exponents, self.group.orders):
            out = _lcm(out, n // gcd(n, a))
        return out

    def is_trivial(self):
        return all(a == 0 for a in self.exponents)

    def conjugate(self):
        return Character(self.group, self.group.negate(self.exponents))

    def __mul__(self, other):
        if not isinstance(other, Character) or other.group != self.group:
            return NotImplemented
        return Character(self.group, self.group.add(self.exponents, other.exponents))

    def __eq__(self, other):
        if isinstance(other, Character):
            return self.group == other.group and self.exponents == other.exponents
        return NotImplemented

    def __hash__(self):
        return hash(("Character", self.group.orders, self.exponents))

    def __repr__(self):
        return "Character(%r, %r)" % (self.group, list(self.exponents))


def group_characters(group):
    """All characters of the group, indexed by exponent tuples in
    enumeration order."""
    return [Character(group, a) for a in group.elements()]
