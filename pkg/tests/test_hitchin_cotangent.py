import cmath
import math
from fractions import Fraction

import pytest

from endokit.hitchin import (
    CurveParams,
    component_isomorphism,
    cotangent_model,
    embed_quadric,
)

SQ2 = math.sqrt(2)


def test_model_polys_fixture():
    cm = cotangent_model(CurveParams(-1, 0), Fraction(1, 3))
    # A = -(z^4 + 6 z^2 + 1)
    assert cm.A.coeffs == (-1, 0, -6, 0, -1)
    assert cm.B.coeffs == (0, 12, 0, 4)
    assert cm.B.coeffs == tuple(-c * k for k, c in enumerate(cm.A.coeffs))[1:]
    assert cm.C.coeffs == (4 * (-1 - Fraction(1, 3)), 0, -4)


def test_pole_locations_match_radical_form():
    cm = cotangent_model(CurveParams(-1, 0), Fraction(1, 3))
    assert cm.zero_match_error < 1e-12
    # z^2 = -3 +- 2 sqrt 2, i.e. z = +- i (sqrt 2 +- 1)
    expect = sorted([-(SQ2 + 1), -(SQ2 - 1), SQ2 - 1, SQ2 + 1])
    got = sorted(complex(z).imag for z in cm.zeros)
    assert got == pytest.approx(expect, abs=1e-12)
    for z in cm.zeros:
        assert abs((z * z + 3) ** 2 - 8) < 1e-9


def test_residue_pairs():
    for sigma0 in (1, Fraction(3, 2), 1j):
        cm = cotangent_model(CurveParams(-1, 0, sigma0=sigma0), 0.37)
        for _, (polar, regular) in cm.residues:
            assert abs(polar - complex(sigma0)) < 1e-8
            assert abs(regular) < 1e-8
        assert abs(cm.total_residue - 4 * complex(sigma0)) < 1e-8


def test_residues_do_not_depend_on_w():
    for w in (Fraction(1, 3), 0.37, 2.5 + 0.5j):
        cm = cotangent_model(CurveParams(-1, 0), w)
        assert all(abs(p - 1) < 1e-8 for _, (p, _) in cm.residues)


def test_monodromy_report():
    cm = cotangent_model(CurveParams(-1, 0), Fraction(1, 3))
    lam, one = cm.monodromy
    assert one == 1.0
    assert lam == pytest.approx(math.exp(-2 * math.pi))
    cmi = cotangent_model(CurveParams(-1, 0, sigma0=1j), Fraction(1, 3))
    assert cmi.monodromy[0] == pytest.approx(cmath.exp(-2j * math.pi))
    assert "monodromy" in cm.monodromy_note


def test_nilpotent_direction_fixture():
    cm = cotangent_model(CurveParams(-1, 0), Fraction(1, 3))
    a1, a2, a3 = (complex(x) for x in cm.nilpotent_direction)
    assert a1 == 1
    assert a2 == pytest.approx(SQ2 * 1j)
    assert a3 == pytest.approx(1)
    assert abs(a1**2 + a2**2 + a3**2) < 1e-12
    e1, e2, e3 = (complex(e) for e in CurveParams(-1, 0).roots)
    assert abs(e1 * a1**2 + e2 * a2**2 + e3 * a3**2) < 1e-12


def test_degenerate_model_warning():
    # built so that C shares the z^2 = -3 root of A at w = 22/3
    c = CurveParams.from_roots(Fraction(-5, 3), Fraction(-2, 3), Fraction(7, 3))
    cm = cotangent_model(c, Fraction(22, 3))
    assert cm.degenerate
    assert any("degenerate" in w for w in cm.warnings)
    assert not cotangent_model(c, 5).degenerate


def test_embed_quadric_identity():
    import random
    rng = random.Random(3)
    for _ in range(25):
        z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        vt = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        b1, b2, b3 = embed_quadric(z, vt)
        assert abs(b1 * b1 + b2 * b2 + b3 * b3 - 1) < 1e-12


def test_component_isomorphism_fixture():
    iso = component_isomorphism(CurveParams(-1, 0))
    assert iso.all_passed()
    imgs = [z for z in iso.zero_images if z != "infinity"]
    assert "infinity" in iso.zero_images
    assert sorted(complex(z).real for z in imgs) == pytest.approx([-1, 0, 1])
    assert iso.max_residuals["conic"] <= 1e-9
    assert iso.max_residuals["omega"] <= 1e-9
    assert iso.max_residuals["round_trip"] <= 1e-9
    assert "principal" in iso.sign_note


def test_component_isomorphism_more_curves():
    for ab in ((-7, -6), (-2, 1)):
        iso = component_isomorphism(CurveParams(*ab), samples=40, seed=11)
        assert iso.all_passed(), (ab, iso.checks, iso.max_residuals)


def test_conic_membership_sympy_oracle():
    # the change of variables replayed in exact arithmetic: with
    # vt = p + q rho, p = A'/(2A), q = u'/f, membership in the conic splits
    # into A' + B = 0 (trivial) and A p^2 + B p + C + A q^2 g = 0.  The root
    # differences 9, 16, 25 form a Pythagorean triple, so every branch value
    # is rational (s3 = 4i) and the whole check runs over Q(i).
    sympy = pytest.importorskip("sympy")
    R = sympy.Rational
    e1, e2, e3 = R(-34, 3), R(-7, 3), R(41, 3)
    a = e1 * e2 + e1 * e3 + e2 * e3
    b = -e1 * e2 * e3
    s1, s2, s3 = sympy.Integer(5), sympy.Integer(3), 4 * sympy.I
    am, bm, cm, dm = (e1 - s1 * s2) * s3, e2 * s1 + e3 * s2, s3, s1 + s2
    qc, dc = e2 - e3, 2 * e1 - e2 - e3
    for zv, wv in ((R(1, 3), R(2, 5)), (R(-2, 7), R(1, 2))):
        u = (bm + am * zv) / (dm + cm * zv)
        dudz = (am * dm - bm * cm) / (dm + cm * zv) ** 2
        f = u**3 + a * u + b
        A = qc * zv**4 + 2 * dc * zv**2 + qc
        Ap = 4 * qc * zv**3 + 4 * dc * zv
        B = -Ap
        C = 4 * (qc * zv**2 + e1 - wv)
        g = (R(1, 4) * u**4 - wv * u**3 - a / 2 * u**2
             - (2 * b + a * wv) * u + a**2 / 4 - b * wv)
        p = Ap / (2 * A)
        q = dudz / f
        val = A * p**2 + B * p + C + A * q**2 * g
        assert sympy.simplify(sympy.expand(val)) == 0
