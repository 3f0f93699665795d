"""Endoscopic data on y^2 = x^3 - x over F_5: the double cover, Frobenius
classes, adjoint traces, and character reciprocity."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from endokit.algebra import FiniteField, root_of_unity
from endokit.funcfield import (
    DEGENERATE_NOTE,
    EllipticCurveFq,
    EndoscopicDatum,
    RationalFunctionFF,
    base_change_datum,
    character_consistency,
    delta_parity,
    enumerate_closed_points,
    frobenius_summary,
    infinity_point,
    select_character,
    sigma_frobenius,
    sigma_prime_check,
    split_classify,
)

F5 = FiniteField(5)
ONE = root_of_unity(1)


def base_curve():
    return EllipticCurveFq(F5, -1, 0)


def datum(mu_exponents=None, twist=1):
    return EndoscopicDatum(base_curve(), 1, mu_exponents, twist)


def second_datum(mu_exponents=None):
    return EndoscopicDatum(EllipticCurveFq(F5, 1, 0), 0, mu_exponents)


def points_up_to(curve, n):
    return enumerate_closed_points(curve, n)


def fn(curve, shifts=(), y_exp=0):
    return RationalFunctionFF(curve, shifts, y_exp)


def test_datum_validation():
    E = base_curve()
    with pytest.raises(ValueError):
        EndoscopicDatum(E, 2)  # x = 2 is not two-torsion
    with pytest.raises(ValueError):
        EndoscopicDatum(EllipticCurveFq(F5, 2, 1, a2=3), 1)
    with pytest.raises(ValueError):
        EndoscopicDatum(E, 1, twist=2)


def test_cover_model_frozen():
    dat = datum()
    assert [c.index() for c in dat.quartic.coeffs] == [2, 0, 3, 0, 1]
    assert dat.cover == EllipticCurveFq(F5, 2, 1, a2=3)
    assert dat.cover_group.group.orders == (8,)
    gen = dat.cover_group.generators[0]
    assert (gen[0].index(), gen[1].index()) == (0, 1)
    assert (dat.tau[0].index(), dat.tau[1].index()) == (2, 0)
    assert dat.tau_coords == (4,)
    assert dat.cover.add(dat.tau, dat.tau) is None


def test_second_cover_is_isogenous_model():
    dat = second_datum()
    assert dat.cover == EllipticCurveFq(F5, 1, 0)
    assert dat.cover_group.group.orders == (2, 2)


def test_split_classification_frozen():
    dat = datum()
    split, nonsplit = [], []
    for cp in points_up_to(dat.curve, 1):
        report = split_classify(cp, dat)
        key = None if cp.is_infinity else (cp.rep[0].index(),
                                           cp.rep[1].index())
        (split if report.split else nonsplit).append(key)
        assert report.symbol in (1, -1)
    assert split == [None, (0, 0), (2, 1), (2, 4)]
    assert nonsplit == [(1, 0), (3, 2), (3, 3), (4, 0)]


def test_torsion_point_uses_complementary_factor():
    dat = datum()
    report = split_classify(dat.torsion_point, dat)
    assert not report.split
    assert report.value.index() == 2  # 3e^2 + a at e = 1
    assert "complementary" in report.note

    dat2 = second_datum()
    report2 = split_classify(dat2.torsion_point, dat2)
    assert report2.split and report2.value.index() == 1


def test_points_from_another_curve_rejected():
    dat = datum()
    stray = points_up_to(second_datum().curve, 1)[0]
    with pytest.raises(ValueError):
        split_classify(stray, dat)


def test_cover_lift_coordinates_frozen():
    """Each split fiber lifts to a pair of cover classes differing by the
    two-torsion translation tau."""
    dat = datum()
    table = {}
    for cp in points_up_to(dat.curve, 1):
        if not split_classify(cp, dat).split:
            continue
        key = None if cp.is_infinity else (cp.rep[0].index(),
                                           cp.rep[1].index())
        table[key] = dat.cover_lift_traces(cp)
    assert table[None] == [((0,), 1), ((4,), 1)]
    assert table[(0, 0)] == [((2,), 1), ((6,), 1)]
    assert table[(2, 1)] == [((3,), 1), ((7,), 1)]
    assert table[(2, 4)] == [((1,), 1), ((5,), 1)]
    group = dat.cover_group.group
    for (c1, _), (c2, _) in table.values():
        assert group.subtract(c1, c2) in (dat.tau_coords,
                                          group.negate(dat.tau_coords))


def test_nonsplit_lift_is_single_double_degree_class():
    dat = datum()
    for cp in points_up_to(dat.curve, 2):
        if split_classify(cp, dat).split:
            continue
        lifts = dat.cover_lift_traces(cp)
        assert len(lifts) == 1
        assert lifts[0][1] == 2 * cp.degree


def test_character_order_selection():
    group = datum().cover_group.group
    assert select_character(group, 2).exponents == (4,)
    assert select_character(group, 8).exponents == (1,)
    with pytest.raises(ValueError):
        select_character(group, 3)


def test_frobenius_classes_order_two_character():
    dat = datum((4,))
    for cp in points_up_to(dat.curve, 1):
        cls = sigma_frobenius(cp, dat)
        if cls.split:
            assert cls.a == 1 and cls.ratio == 1 and cls.b == 2
        else:
            assert cls.a == -1 and cls.b == 0 and cls.ratio is None


def test_frobenius_classes_order_eight_character():
    """The lift pair differs by tau, so the rotation ratio is the character
    value at tau raised to the point degree: here (-1)^deg."""
    dat = datum((1,))
    for cp in points_up_to(dat.curve, 3):
        cls = sigma_frobenius(cp, dat)
        if not cls.split:
            continue
        want = (-1) ** cp.degree
        assert cls.ratio == want
        assert cls.b == 2 * want


def test_degree_twist_cancels_in_the_ratio():
    dat = datum(twist=-1)
    for cp in points_up_to(dat.curve, 2):
        cls = sigma_frobenius(cp, dat)
        if cls.split:
            assert cls.ratio == 1 and cls.b == 2


def test_rotation_values_are_conjugation_stable():
    dat = datum((1,))
    for cp in points_up_to(dat.curve, 3):
        cls = sigma_frobenius(cp, dat)
        assert cls.b == cls.b.conjugate()
        if cls.split:
            assert cls.ratio * cls.ratio == ONE


def test_degenerate_flag_and_note():
    pts = points_up_to(base_curve(), 2)
    for exps in (None, (4,), (1,)):
        summary = frobenius_summary(datum(exps), pts)
        assert summary.degenerate
        assert "Z2 x Z2" in summary.note
        assert summary.note == DEGENERATE_NOTE


def test_adjoint_trace_nonsplit():
    dat = datum((4,))
    for cp in points_up_to(dat.curve, 2):
        if split_classify(cp, dat).split:
            continue
        check = sigma_prime_check(cp, dat)
        assert check.trace == -1 and check.predicted == -1


def test_adjoint_trace_split_degree_one():
    # r = 1 gives b = 2, and the odd-degree twist makes both sides 1 - 2
    dat = datum((4,))
    for cp in points_up_to(dat.curve, 1):
        cls = sigma_frobenius(cp, dat)
        if cls.split:
            check = sigma_prime_check(cp, dat)
            assert check.trace == -1
            assert check.predicted == cls.a - cls.b


def test_adjoint_trace_split_degree_two():
    dat = datum((1,))
    seen = 0
    for cp in points_up_to(dat.curve, 2):
        if cp.degree != 2:
            continue
        cls = sigma_frobenius(cp, dat)
        if cls.split:
            check = sigma_prime_check(cp, dat)
            assert check.trace == cls.b + 1
            seen += 1
    assert seen > 0


def test_reciprocity_on_named_functions():
    """div(y) meets the non-split locus in (1,0) and (4,0); the sign
    product (-1)(-1) = 1, and the cover character product telescopes."""
    dat = datum((1,))
    samples = [
        fn(dat.curve, (), 1),        # y
        fn(dat.curve, {3: 1}),       # x - 3
        fn(dat.curve, {2: 1}, -1),   # (x - 2) / y
        fn(dat.curve, {0: 1, 4: -1}),
    ]
    for record in character_consistency(dat, samples):
        assert record.kappa_product == 1
        assert record.mu_product == ONE
        assert record.ok
    div_y = samples[0].divisor()
    nonsplit_mults = [m for cp, m in div_y.items()
                      if not split_classify(cp, dat).split]
    assert nonsplit_mults == [1, 1]


def test_reciprocity_on_second_curve():
    dat = second_datum((0, 1))
    samples = [
        fn(dat.curve, (), 1),
        fn(dat.curve, {1: 1}),            # inert fiber: degree-2 point
        fn(dat.curve, {1: 1, 4: 1}, 1),
        fn(dat.curve, {2: 2}, -1),
    ]
    for record in character_consistency(dat, samples):
        assert record.ok, record


@settings(max_examples=25, deadline=None)
@given(
    shifts=st.dictionaries(st.integers(0, 4), st.integers(-2, 2), max_size=3),
    y_exp=st.integers(-2, 2),
)
def test_reciprocity_on_random_products(shifts, y_exp):
    dat = datum((1,))
    record = character_consistency(dat, [fn(dat.curve, shifts, y_exp)])[0]
    assert record.kappa_product == 1
    assert record.mu_product == ONE


def test_delta_pairings_frozen():
    dat = datum()
    assert delta_parity(fn(dat.curve), dat).pairing == 0       # dx/y
    assert delta_parity(fn(dat.curve, {4: 1}), dat).pairing == 2
    assert delta_parity(fn(dat.curve, {3: 1}), dat).pairing == 2


def test_delta_pairings_are_even_in_bulk():
    dat = datum()
    count = 0
    for c1 in range(5):
        for c2 in range(5):
            g = fn(dat.curve, {c1: 1, c2: 1 if c1 != c2 else 2})
            report = delta_parity(g, dat)
            assert report.even and report.pairing % 2 == 0
            count += 1
    assert count == 25


def test_base_change_splits_everything_in_even_degree():
    dat = datum()
    lifted = base_change_datum(dat, 2)
    ext = lifted.curve.field
    for cp in points_up_to(dat.curve, 1):
        if cp.is_infinity or split_classify(cp, dat).split:
            continue
        x0, y0 = cp.rep
        moved = type(cp)(lifted.curve,
                         [(ext.element(x0.index()), ext.element(y0.index()))])
        assert split_classify(moved, lifted).split


def test_base_change_agrees_with_residue_field_symbol():
    """A degree-2 point splits under the quadratic base change exactly when
    its own residue-field symbol already said so."""
    dat = datum()
    lifted = base_change_datum(dat, 2)
    checked = 0
    for cp in points_up_to(dat.curve, 2):
        if cp.degree != 2:
            continue
        x0, y0 = cp.rep
        moved = type(cp)(lifted.curve, [(x0, y0)])
        assert split_classify(moved, lifted).split == \
            split_classify(cp, dat).split
        checked += 1
    assert checked == 12
