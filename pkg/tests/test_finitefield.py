import pytest

from endokit.algebra.finite_fields import FFElement, FiniteField, quadratic_symbol


def brute_irreducible(p, coeffs):
    """Oracle: degree-<=3 style check by scanning all monic factor candidates.

    coeffs is lowest-first with leading 1.  Works for any degree by trial
    division over all monic polynomials of degree < deg/2 + 1.
    """
    deg = len(coeffs) - 1

    def polydiv_exact(num, den):
        num = list(num)
        dq = len(num) - len(den)
        if dq < 0:
            return False
        for k in range(dq, -1, -1):
            c = num[k + len(den) - 1]
            for j, dc in enumerate(den):
                num[k + j] = (num[k + j] - c * dc) % p
        return all(x == 0 for x in num[: len(den) - 1])

    for d in range(1, deg // 2 + 1):
        for idx in range(p**d):
            digits = []
            n = idx
            for _ in range(d):
                digits.append(n % p)
                n //= p
            if polydiv_exact(coeffs, digits + [1]):
                return False
    return True


# The modulus convention: first monic irreducible in base-p integer order.
FROZEN_MODULI = [
    (5, 2, (2, 0, 1)),  # x^2 + 2
    (2, 3, (1, 1, 0, 1)),  # x^3 + x + 1
    (3, 2, (1, 0, 1)),  # x^2 + 1
    (5, 4, (2, 0, 0, 0, 1)),  # x^4 + 2
]


@pytest.mark.parametrize("p,d,modulus", FROZEN_MODULI)
def test_modulus_frozen(p, d, modulus):
    assert FiniteField(p, d).modulus == modulus


@pytest.mark.parametrize("p,d,modulus", FROZEN_MODULI)
def test_modulus_is_first_irreducible(p, d, modulus):
    assert brute_irreducible(p, modulus)
    own_index = sum(c * p**i for i, c in enumerate(modulus[:-1]))
    for idx in range(own_index):
        digits = []
        n = idx
        for _ in range(d):
            digits.append(n % p)
            n //= p
        assert not brute_irreducible(p, digits + [1])


def test_prime_field_has_no_modulus():
    assert FiniteField(7).modulus is None


def test_rejects_composite_characteristic():
    with pytest.raises(ValueError):
        FiniteField(6)


def test_element_index_round_trip():
    field = FiniteField(5, 2)
    for idx in range(field.q):
        assert field.element(idx).index() == idx
    with pytest.raises(ValueError):
        field.element(25)


def test_int_mixing_is_mod_p():
    field = FiniteField(5)
    assert field.element(2) + 4 == 1
    assert 3 * field.element(4) == 2
    assert field.element(2) == 7  # ints reduce mod p on comparison


def test_field_axioms_gf25():
    field = FiniteField(5, 2)
    elems = list(field.elements())
    assert len(elems) == 25
    one = field.one()
    for a in elems:
        assert a**field.q == a  # Fermat
        if not a.is_zero():
            assert a * a.inverse() == one
    g = field.gen()
    assert g * g == -2  # the modulus relation x^2 = -2


def test_frobenius_is_field_automorphism():
    field = FiniteField(5, 2)
    elems = list(field.elements())
    for a in elems[::3]:
        for b in elems[::4]:
            assert (a + b).frobenius() == a.frobenius() + b.frobenius()
            assert (a * b).frobenius() == a.frobenius() * b.frobenius()
    for c in range(5):
        assert field.lift(c).frobenius() == c


def test_prime_subfield_lift():
    base = FiniteField(5)
    ext = FiniteField(5, 2)
    a = ext.lift(base.element(3))
    assert a.in_prime_field() and a.as_int() == 3
    assert base.element(2) * ext.gen() == ext.gen() + ext.gen()


def test_quadratic_symbol_gf5_table():
    field = FiniteField(5)
    table = {0: 0, 1: 1, 2: -1, 3: -1, 4: 1}
    for n, want in table.items():
        assert quadratic_symbol(field.element(n)) == want


def test_quadratic_symbol_multiplicative():
    field = FiniteField(7)
    for a in field.elements():
        for b in field.elements():
            if a.is_zero() or b.is_zero():
                continue
            assert quadratic_symbol(a * b) == quadratic_symbol(a) * quadratic_symbol(b)


def test_quadratic_symbol_rejects_char2():
    with pytest.raises(ValueError):
        quadratic_symbol(FiniteField(2, 3).one())


def test_poly_roots_small_field():
    field = FiniteField(5)
    assert [r.as_int() for r in field.poly_roots([0, -1, 0, 1])] == [0, 1, 4]
    assert field.poly_roots([2, 0, 1]) == []  # x^2 + 2 irreducible


def test_poly_roots_gcd_splitting_path():
    # q = 625 > 512 forces the gcd-splitting branch
    field = FiniteField(5, 4)
    cube_roots = field.poly_roots([-1, 0, 0, 1])
    assert len(cube_roots) == 3  # 3 | q - 1
    for r in cube_roots:
        assert r**3 == field.one()
    assert cube_roots == sorted(cube_roots, key=lambda r: r.index())
    # x^2 - g^2 has the obvious pair of roots
    g = field.gen()
    pair = field.poly_roots([-(g * g), field.zero(), field.one()])
    assert set(pair) == {g, -g}


def test_sqrt_canonical_and_failing():
    field = FiniteField(5)
    assert field.sqrt(field.element(4)).as_int() == 2  # min of {2, 3}
    with pytest.raises(ValueError, match="not a square"):
        field.sqrt(field.element(2))


def test_sqrt_char2_is_inverse_of_squaring():
    field = FiniteField(2, 3)
    for a in field.elements():
        s = field.sqrt(a)
        assert s * s == a


def test_sqrt_extension_field():
    field = FiniteField(5, 4)
    g = field.gen()
    s = field.sqrt(g * g)
    assert s * s == g * g
    assert s.index() == min(g.index(), (-g).index())
