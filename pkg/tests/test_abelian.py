import pytest

from endokit.algebra.abelian import Character, FiniteAbelianGroup, group_characters


def test_group_basics():
    g = FiniteAbelianGroup([2, 4])
    assert g.order == 8
    assert g.exponent() == 4
    assert g.identity() == (0, 0)
    assert g.add((1, 3), (1, 2)) == (0, 1)
    assert g.negate((1, 1)) == (1, 3)
    assert g.scale(3, (1, 2)) == (1, 2)
    assert len(list(g.elements())) == 8


def test_element_orders():
    g = FiniteAbelianGroup([2, 4])
    assert g.element_order((0, 0)) == 1
    assert g.element_order((1, 0)) == 2
    assert g.element_order((0, 1)) == 4
    assert g.element_order((1, 2)) == 2
    assert g.element_order((1, 1)) == 4


def test_character_values_on_z4():
    g = FiniteAbelianGroup([4])
    chi = Character(g, (1,))
    i = chi((1,))
    assert i * i == -1
    assert chi((2,)) == -1
    assert chi((0,)) == 1
    assert chi.order() == 4
    assert chi.conjugate()((1,)) == chi((3,))


def test_character_group_structure():
    g = FiniteAbelianGroup([2, 4])
    chars = group_characters(g)
    assert len(chars) == 8
    a, b = chars[1], chars[5]
    prod = a * b
    for x in g.elements():
        assert prod(x) == a(x) * b(x)


def test_character_is_homomorphism():
    g = FiniteAbelianGroup([2, 4])
    for chi in group_characters(g):
        for x in g.elements():
            for y in g.elements():
                assert chi(g.add(x, y)) == chi(x) * chi(y)


def test_orthogonality_exact():
    g = FiniteAbelianGroup([2, 4])
    chars = group_characters(g)
    for a in chars:
        for b in chars:
            total = 0
            for x in g.elements():
                total = a(x) * b(x).conjugate() + total
            assert total == (g.order if a == b else 0)


def test_trivial_character():
    g = FiniteAbelianGroup([3])
    chars = group_characters(g)
    assert chars[0].is_trivial()
    assert sum(1 for c in chars if c.is_trivial()) == 1


def test_shape_mismatch_rejected():
    g = FiniteAbelianGroup([2, 4])
    with pytest.raises(ValueError):
        Character(g, (1,))
    with pytest.raises(ValueError):
        g.add((1,), (0, 0))
