import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from endokit.algebra import root_of_unity
from endokit.hitchin.curve import CurveParams
from endokit.spectral import (
    ComponentModule,
    O2StarMonodromy,
    connected_generator,
    disconnected_generator,
    gluing_action,
    prym_components,
    pushforward_degree,
    spectral_singularity,
    thooft_matrix,
    wilson_matrix,
)


CURVE = CurveParams(-1, 0)  # roots -1, 0, 1
# root differences 9, 16, 25: the node discriminant 25 * 16 is a square,
# so the whole certificate stays inside Q
PYTHAGOREAN = CurveParams.from_roots(
    Fraction(-34, 3), Fraction(-7, 3), Fraction(41, 3)
)


def test_singular_at_branch_point():
    report = spectral_singularity(CURVE, 1)
    assert report.status == "singular"
    assert report.branch_index == 3
    assert report.genus == 1
    n = report.normalization
    # w^2 = (z^2 + 2)(z^2 + 1)
    assert n.quartic.coeffs == (2, 0, 3, 0, 1)
    assert n.discriminant != 0
    assert n.points_at_infinity == 2
    (z1, w1), (z2, w2) = n.node_preimages
    assert z1 == 0 and z2 == 0
    assert abs(w1 - math.sqrt(2)) < 1e-12
    assert abs(w2 + math.sqrt(2)) < 1e-12


def test_smooth_away_from_branch_points():
    report = spectral_singularity(CURVE, 5)
    assert report.status == "smooth"
    assert report.genus == 2
    assert report.discriminant != 0
    assert report.normalization is None
    # sextic right-hand side (z^2 + 6)(z^2 + 5)(z^2 + 4)
    assert report.rhs.degree == 6
    assert report.rhs.coeffs[0] == 120


def test_all_three_branch_points_are_nodal():
    for a, expected in ((-1, 1), (0, 2), (1, 3)):
        report = spectral_singularity(CURVE, a)
        assert report.status == "singular"
        assert report.branch_index == expected
        assert report.discriminant == 0


def test_numeric_fiber_coordinate():
    report = spectral_singularity(CURVE, 1 + 1e-14)
    assert report.status == "singular"
    assert spectral_singularity(CURVE, 1.1).status == "smooth"


def test_certificate_orders():
    cert = spectral_singularity(CURVE, 1).certificate
    assert cert.orders == {
        "q_plus": 2,
        "q_minus": -2,
        "infinity_plus": 0,
        "infinity_minus": 0,
    }
    assert cert.numeric_orders == {"q_plus": 2, "q_minus": -2}
    # degree of the divisor 2q' - 2q'' is zero and the values over
    # z = infinity are finite and nonzero
    assert sum(cert.orders.values()) == 0
    assert all(v != 0 for v in cert.values_at_infinity)


def test_certificate_exact_when_node_discriminant_is_square():
    report = spectral_singularity(PYTHAGOREAN, Fraction(41, 3))
    cert = report.certificate
    assert cert.alpha == 25 and cert.beta == 16
    assert cert.c == 20
    assert cert.leading_at_q_plus == Fraction(-81, 64000)
    assert cert.values_at_infinity == (Fraction(-1, 40), Fraction(-81, 40))
    assert cert.numeric_orders == {"q_plus": 2, "q_minus": -2}


def test_certificate_series_sympy_oracle():
    # expansion of the branch of w through (0, c) for alpha, beta = 25, 16:
    # the z^2 coefficient must match the subtracted parabola and the z^4
    # coefficient must match the reported leading coefficient.
    sympy = pytest.importorskip("sympy")
    z = sympy.symbols("z")
    w = sympy.sqrt((z**2 + 25) * (z**2 + 16))
    series = sympy.series(w, z, 0, 6).removeO()
    assert series.coeff(z, 0) == 20
    assert series.coeff(z, 2) == sympy.Rational(41, 40)
    assert series.coeff(z, 4) == sympy.Rational(-81, 64000)


def test_certificate_value_vanishes_on_curve_samples():
    cert = spectral_singularity(PYTHAGOREAN, Fraction(41, 3)).certificate
    # F z^2 + c + ((alpha+beta)/(2c)) z^2 must recover w on the curve
    for zr in (0.3, 0.7 + 0.2j, -1.1j + 0.4):
        w = ((zr**2 + 25) * (zr**2 + 16)) ** 0.5
        lhs = cert.value(zr, w) * zr**2
        assert abs(lhs - (w - 20 - Fraction(41, 40) * zr**2)) < 1e-9


def test_prym_census_canonical_marker():
    report = prym_components(2, "B2")
    assert report.component_count == 2
    assert report.solved_generator == "A2"
    assert report.census[0] == 1
    assert report.census[1] == -1
    assert "swap" in report.labeling_note


def test_prym_census_relabeling_invariance():
    for g in (1, 2, 3):
        for name in ("A%d" % g, "B%d" % g, "B1"):
            assert prym_components(g, name).component_count == 2


def test_prym_census_both_generators_disconnected():
    report = prym_components(1, {"A1": 1, "B1": 1})
    assert report.component_count == 2
    assert report.census[0] == report.census[1] * root_of_unity(2)


def test_genus_one_has_three_double_covers():
    report = prym_components(1, "B1")
    assert [d["components"] for d in report.double_covers] == [2, 2, 2]
    assert [d["split_fiber_index"] for d in report.double_covers] == [1, 2, 3]
    markers = {tuple(sorted(d["marker"].items())) for d in report.double_covers}
    assert len(markers) == 3


def test_trivial_cover_rejected():
    with pytest.raises(ValueError, match="degenerate cover"):
        prym_components(2, {})
    with pytest.raises(ValueError, match="degenerate cover"):
        prym_components(1, {"A1": 0, "B1": 0})


def test_connected_part_is_abelian():
    # commutators of torus elements vanish identically; checked on forty
    # random unit pairs
    import random

    rng = random.Random(3)
    ident = ((1, 0), (0, 1))
    for _ in range(40):
        t = root_of_unity(12, rng.randrange(12))
        u = root_of_unity(12, rng.randrange(12))
        a, b = connected_generator(t), connected_generator(u)
        ab = tuple(
            tuple(sum(a[i][r] * b[r][j] for r in range(2)) for j in range(2))
            for i in range(2)
        )
        ba = tuple(
            tuple(sum(b[i][r] * a[r][j] for r in range(2)) for j in range(2))
            for i in range(2)
        )
        assert ab == ba
    data = O2StarMonodromy(
        1, {"A1": 0, "B1": 0}, {"A1": root_of_unity(12, 5), "B1": root_of_unity(12, 7)}
    )
    assert data.relation_value() == ident


def test_disconnected_generator_inverts_the_torus():
    t = root_of_unity(12, 5)
    a = connected_generator(t)
    b = disconnected_generator(root_of_unity(12, 2))
    binv = ((b[1][1], -b[0][1]), (-b[1][0], b[0][0]))
    conj = tuple(
        tuple(
            sum(b[i][r] * sum(a[r][s] * binv[s][j] for s in range(2)) for r in range(2))
            for j in range(2)
        )
        for i in range(2)
    )
    assert conj == connected_generator(t.inverse())


def test_gluing_action_and_census():
    report = gluing_action(2)
    assert report.pair_count == 2
    assert report.census_size == 4
    assert report.codimension == (2, 2, 4)
    assert report.apply(((1, 1), (2, 3))) == ((1, -1), (2, -3))
    assert not report.is_fixed(((1, 1), (2, 3)))
    assert report.is_fixed(((1, 0), (0, 5)))
    assert len(set(report.fixed_census)) == 4
    for config in report.fixed_census:
        assert report.is_fixed(config)


def test_gluing_genus_counts():
    assert gluing_action(1).pair_count == 2
    assert gluing_action(1).census_size == 4
    report = gluing_action(3)
    assert report.pair_count == 4
    assert report.census_size == 16
    assert report.codimension == (4, 4, 8)


def test_gluing_rejects_degenerate_pair():
    with pytest.raises(ValueError, match="invalid gluing"):
        gluing_action(2).apply(((0, 0), (1, 1)))
    with pytest.raises(ValueError, match="cover class"):
        gluing_action(2, element=3)


def test_trivial_cover_class_acts_trivially():
    report = gluing_action(2, element=1)
    assert report.apply(((1, 1),)) == ((1, 1),)
    assert report.is_fixed(((5, 7),))


PROPER = ComponentModule(("F1", "F2"), {"F1": "F2", "F2": "F1"})


def test_thooft_operator_matrix():
    report = thooft_matrix(PROPER, "T")
    assert report.matrix == ((1, 2), (2, 1))
    assert report.apply((1, 0)) == (1, 2)  # T F1 = F1 + 2 F2
    assert report.source_basis == report.target_basis == ("F1", "F2")


def test_thooft_transfer_matrix():
    report = thooft_matrix(PROPER, "T_tilde")
    assert report.matrix == ((1, 1), (1, 1))
    assert report.target_basis == ("F1*", "F2*")
    assert report.apply((1, 0)) == (1, 1)  # to F1* + F2*
    back = thooft_matrix(PROPER, "T_tilde_improper")
    assert back.source_basis == ("F1*", "F2*")
    assert back.matrix == ((1, 1), (1, 1))


def test_transfer_squares_to_one_plus_t():
    data = thooft_matrix(PROPER, "T").graded_identity
    assert data["verified"]
    assert data["square"] == data["one_plus_t"]
    # both graded pieces see 1 + T = [[2, 2], [2, 2]]
    assert data["square"][0][:2] == (2, 2)
    assert data["square"][2][2:] == (2, 2)
    assert data["square"][0][2:] == (0, 0)


def test_invalid_modules_rejected():
    with pytest.raises(ValueError, match="invalid module"):
        thooft_matrix(ComponentModule(("F1", "F2")), "T")
    with pytest.raises(ValueError, match="invalid module"):
        thooft_matrix(
            ComponentModule(("F1", "F2"), {"F1": "F1", "F2": "F1"}), "T"
        )
    with pytest.raises(ValueError, match="unknown operator"):
        thooft_matrix(PROPER, "S")


def test_wilson_operator_matches_thooft():
    module = ComponentModule(("B+", "B-"), {"B+": "B-", "B-": "B+"})
    report = wilson_matrix(module)
    assert report.matrix == ((1, 2), (2, 1))
    assert report.mirror["equal"]
    assert report.mirror["swap_conjugate_equal"]
    assert "non-canonical" in report.mirror["caveat"]
    assert report.eigen == {"vector": (1, 1), "value": 3, "adjoint_dimension": 3}
    assert report.graded_identity["verified"]


def test_wilson_other_dims():
    module = ComponentModule(("B+", "B-"), {"B+": "B-", "B-": "B+"})
    report = wilson_matrix(module, dims=(3, 1))
    assert report.matrix == ((1, 3), (3, 1))
    assert not report.mirror["equal"]
    assert report.eigen["value"] == 4
    assert report.graded_identity is None


def test_pushforward_degrees():
    assert pushforward_degree(2, 2) == 2
    assert pushforward_degree(2, 3) == 4
    assert pushforward_degree(3, 2) == 6


@given(st.integers(min_value=2, max_value=9), st.integers(min_value=1, max_value=9))
def test_pushforward_degree_formula(n, g):
    d = pushforward_degree(n, g)
    assert d == n * (n - 1) * (g - 1)
    assert d % (n * (n - 1)) == 0
    assert pushforward_degree(1, g) == 0
