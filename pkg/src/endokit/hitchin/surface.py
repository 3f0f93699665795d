"""Singular fibers of the genus-one ramified Hitchin models.

Three models of the same fibration live here.  The proper SL2 component is
the quartic surface

    P(u, rho, w) = rho^2 + (2u + w) f(u) - f'(u)^2 / 4,

fibered over the w-line; the improper component is the pencil of quadric
intersections

    b1^2 + b2^2 + b3^2 = 1,    e1 b1^2 + e2 b2^2 + e3 b3^2 = w,

and the SO3 quotient is the cubic family z^2 = -prod(t - w(ei+ej) + ei ej)/N
with N = prod (ei - ej)^2.  Every model degenerates exactly over w in
{e1, e2, e3}, and the functions below certify how: split fibers with two
double points upstairs, one node downstairs, together with the Q-action
that permutes the pieces.
"""

import cmath
import random
from fractions import Fraction

from ..algebra import Poly, poly_discriminant, poly_roots_complex, resultant
from .curve import _fraction_sqrt


def hitchin_quartic(curve, w):
    """The fiber quartic g(u; w) with P = rho^2 - g, exact when w is rational.

    g(u) = u^4/4 - w u^3 - (a/2) u^2 - (2b + a w) u + (a^2/4 - b w).
    """
    a, b = curve.a, curve.b
    return Poly([
        a * a / 4 - b * w,
        -(2 * b + a * w),
        -a / 2,
        -w,
        Fraction(1, 4),
    ])


def _interp_poly(points):
    # Lagrange interpolation through exact sample points.
    total = Poly([0])
    for k, (xk, yk) in enumerate(points):
        term = Poly([yk])
        for j, (xj, _) in enumerate(points):
            if j == k:
                continue
            term = term * Poly([-xj, 1]).scale(Fraction(1, 1) / (xk - xj))
        total = total + term
    return total


def _near(x, y, tol):
    return abs(complex(x) - complex(y)) <= tol


def _is_rational(x):
    return isinstance(x, (int, Fraction))


def _split_index(curve, w, tol=None):
    """Index i with w = e_i, or None.  Exact when both sides are rational."""
    exact = curve.exact and _is_rational(w)
    if tol is None:
        tol = 1e-10 * (1 + max(abs(complex(e)) for e in curve.roots))
    for i, e in enumerate(curve.roots, start=1):
        if exact:
            if Fraction(w) == e:
                return i
        elif _near(w, e, tol):
            return i
    return None


def _sqrt_any(x):
    """Square root, exact for rational squares, principal branch otherwise."""
    if _is_rational(x):
        r = _fraction_sqrt(Fraction(x))
        if r is not None:
            return r
    z = complex(x)
    if z.imag == 0:
        z = complex(z.real, 0.0)
    return cmath.sqrt(z)


class ProperSurface:
    """The quartic model P(u, rho, w) = rho^2 - g(u; w) of the SL2 component."""

    def __init__(self, curve):
        self.curve = curve

    def g(self, u, w):
        return -(2 * u + w) * self.curve.f(u) + self.curve.fprime(u) ** 2 / 4

    def P(self, u, rho, w):
        return rho * rho - self.g(u, w)

    def partial_w(self, u):
        # dP/dw = f(u): the total space is smooth wherever f(u) != 0.
        return self.curve.f(u)


class ImproperQuadrics:
    """The pencil of quadric intersections modelling the improper component."""

    def __init__(self, curve):
        self.curve = curve

    def q1(self, b1, b2, b3):
        return b1 * b1 + b2 * b2 + b3 * b3 - 1

    def q2(self, b1, b2, b3, w):
        e1, e2, e3 = self.curve.roots
        return e1 * b1 * b1 + e2 * b2 * b2 + e3 * b3 * b3 - w

    def jacobian(self, b1, b2, b3):
        e1, e2, e3 = self.curve.roots
        return (
            (2 * b1, 2 * b2, 2 * b3),
            (2 * e1 * b1, 2 * e2 * b2, 2 * e3 * b3),
        )


class SO3Surface:
    """Cubic model z^2 = -prod(t - w(ei+ej) + ei ej) / prod (ei-ej)^2."""

    def __init__(self, curve):
        self.curve = curve
        e1, e2, e3 = curve.roots
        self.scale = ((e1 - e2) * (e1 - e3) * (e2 - e3)) ** 2

    def branch_roots(self, w):
        """Roots t_ij = w(ei+ej) - ei ej of the cubic, pair order (12, 13, 23)."""
        e1, e2, e3 = self.curve.roots
        return (
            w * (e1 + e2) - e1 * e2,
            w * (e1 + e3) - e1 * e3,
            w * (e2 + e3) - e2 * e3,
        )

    def rhs_poly(self, w):
        acc = Poly([1])
        for t0 in self.branch_roots(w):
            acc = acc * Poly([-t0, 1])
        one = Fraction(1) if _is_rational(w) and self.curve.exact else 1.0
        return acc.scale(-one / self.scale)


class SingularFiberSummary:
    """Where the fibration degenerates, with the discriminant factorization."""

    def __init__(self, w_values, disc_poly, constant, exponents, exact, residual):
        self.w_values = w_values
        self.disc_poly = disc_poly
        self.constant = constant
        self.exponents = exponents
        self.exact = exact
        self.residual = residual

    def __repr__(self):
        return "SingularFiberSummary(w_values=%r, constant=%r, exponents=%r)" % (
            self.w_values, self.constant, self.exponents,
        )


def discriminant_in_w(curve):
    """disc_u(g) as a polynomial in w, by exact interpolation.

    The Sylvester matrix of (g, dg/du) is 7x7 with entries linear in w, so
    nine samples pin the determinant down; the discriminant only rescales
    it by the constant leading coefficient 1/4.
    """
    xs = [Fraction(k) for k in range(-4, 5)]
    pts = [(x, poly_discriminant(hitchin_quartic(curve, x))) for x in xs]
    return _interp_poly(pts)


def singular_fibers(curve):
    """Locate the singular fibers and certify the discriminant factorization.

    The certificate is the identity

        disc_u(g) = (-4a^3 - 27b^2) * f(w)^2
                  = prod_{i<j} (e_i - e_j)^2 * prod_i (w - e_i)^2,

    exact over the rationals whenever a, b are rational (each w - e_i enters
    with exponent 2 because f is squarefree), numeric otherwise.
    """
    disc_poly = discriminant_in_w(curve)
    disc_f = -4 * curve.a ** 3 - 27 * curve.b ** 2
    expected = (curve.f_poly() * curve.f_poly()).scale(disc_f)
    if _is_rational(curve.a) and _is_rational(curve.b):
        if disc_poly.coeffs != expected.coeffs:
            raise AssertionError(
                "discriminant certificate failed for %r" % (curve,)
            )
        exact = True
        residual = 0
    else:
        n = max(len(disc_poly.coeffs), len(expected.coeffs))
        ca = list(disc_poly.coeffs) + [0] * (n - len(disc_poly.coeffs))
        cb = list(expected.coeffs) + [0] * (n - len(expected.coeffs))
        scale = 1 + max(abs(complex(c)) for c in cb)
        residual = max(abs(complex(x) - complex(y)) for x, y in zip(ca, cb))
        if residual > 1e-9 * scale:
            raise AssertionError(
                "discriminant certificate failed for %r" % (curve,)
            )
        exact = False
    return SingularFiberSummary(
        w_values=curve.roots,
        disc_poly=disc_poly,
        constant=disc_f,
        exponents=(2, 2, 2),
        exact=exact,
        residual=residual,
    )


class FiberReport:
    """One Hitchin fiber: split or smooth, with explicit certificates."""

    def __init__(self, w, status, split_index=None, components=(),
                 double_points=(), smoothness=None, so3_node=None,
                 identity_exact=False, discriminant=None):
        self.w = w
        self.status = status
        self.split_index = split_index
        self.components = components
        self.double_points = double_points
        self.smoothness = smoothness
        self.so3_node = so3_node
        self.identity_exact = identity_exact
        self.discriminant = discriminant

    def __repr__(self):
        return "FiberReport(w=%r, status=%r)" % (self.w, self.status)


def analyze_fiber(curve, w):
    """Classify the fiber over w and certify the split identity when singular.

    Over w = e_i the quartic collapses to a perfect square,

        g(u; e_i) = ((u - e_i)^2 - D_i)^2 / 4,    D_i = (e_i-e_j)(e_i-e_k),

    giving two branches rho = +-((u - e_i)^2 - D_i)/2 meeting at the double
    points (e_i +- sqrt(D_i), 0).  The total space stays smooth there since
    dP/dw = f(u) is nonzero at both, certified by a resultant.
    """
    i = _split_index(curve, w)
    if i is None:
        g = hitchin_quartic(curve, w)
        disc = poly_discriminant(g)
        if abs(complex(disc)) == 0:
            raise AssertionError("fiber over %r looks singular but w is not "
                                 "a root of f" % (w,))
        return FiberReport(w=w, status="smooth", discriminant=disc)

    e = curve.root(i)
    ej, ek = curve.other_roots(i)
    D = (e - ej) * (e - ek)
    half = Fraction(1, 2) if curve.exact else 0.5
    branch = Poly([(e * e - D) * half, -e, half])  # ((u-e)^2 - D)/2
    g = hitchin_quartic(curve, e)
    square = branch * branch
    if curve.exact:
        identity_exact = g.coeffs == square.coeffs
        if not identity_exact:
            raise AssertionError("split identity failed over w=%r" % (w,))
    else:
        scale = 1 + max(abs(complex(c)) for c in g.coeffs)
        err = max(abs(complex(x) - complex(y))
                  for x, y in zip(g.coeffs, square.coeffs))
        identity_exact = False
        if err > 1e-9 * scale:
            raise AssertionError("split identity failed over w=%r" % (w,))

    s = _sqrt_any(D)
    dbl = ((e + s, 0), (e - s, 0))
    fvals = tuple(curve.f(complex(u)) for u, _ in dbl)
    # Res((u-e)^2 - D, f) = f(e+s) f(e-s); nonzero iff no double point
    # sits over a zero of f, i.e. iff dP/dw != 0 at both.
    fiber_factor = Poly([e * e - D, -2 * e, 1])
    cert = resultant(fiber_factor, curve.f_poly())
    if curve.exact and cert == 0:
        raise AssertionError("total space fails to be smooth over w=%r" % (w,))
    smoothness = {"partial_w_values": fvals, "resultant": cert}

    node = so3_fiber(curve, e)
    return FiberReport(
        w=w, status="split", split_index=i,
        components=(branch, branch.scale(-1)),
        double_points=dbl, smoothness=smoothness,
        so3_node=(node.node, node.hessian, node.rank),
        identity_exact=identity_exact,
    )


class QActionReport:
    """The involution T_i as Mobius data plus its certified fiber action."""

    def __init__(self, i, e, beta, D, matrix, involution_ok,
                 multiplier_cocycle_ok, surface_preserved, fixed_point_poly_ok,
                 fiber_actions):
        self.i = i
        self.e = e
        self.beta = beta
        self.D = D
        self.matrix = matrix
        self.involution_ok = involution_ok
        self.multiplier_cocycle_ok = multiplier_cocycle_ok
        self.surface_preserved = surface_preserved
        self.fixed_point_poly_ok = fixed_point_poly_ok
        self.fiber_actions = fiber_actions

    def u_map(self, u):
        return (self.e * u + self.beta) / (u - self.e)

    def rho_multiplier(self, u):
        return -self.D / (u - self.e) ** 2

    def __repr__(self):
        return "QActionReport(i=%r, u -> (%s u + %s)/(u - %s))" % (
            self.i, self.e, self.beta, self.e,
        )


def _compose_with_mobius(poly, num, den):
    """poly(num/den) * den^deg(poly), as an exact Poly."""
    coeffs = poly.coeffs
    n = len(coeffs) - 1
    acc = Poly([0])
    num_pow = Poly([1])
    den_pow = [Poly([1])]
    for _ in range(n):
        den_pow.append(den_pow[-1] * den)
    for k, c in enumerate(coeffs):
        acc = acc + (num_pow * den_pow[n - k]).scale(c)
        num_pow = num_pow * num
    return acc


def _poly_eq(p, q, exact, tol=1e-9):
    if exact:
        return p.coeffs == q.coeffs
    n = max(len(p.coeffs), len(q.coeffs))
    ca = list(p.coeffs) + [0] * (n - len(p.coeffs))
    cb = list(q.coeffs) + [0] * (n - len(q.coeffs))
    scale = 1 + max(abs(complex(c)) for c in cb) if cb else 1
    return all(abs(complex(x) - complex(y)) <= tol * scale
               for x, y in zip(ca, cb))


def q_action(curve, i):
    """The order-two deck transformation T_i of the proper surface.

    T_i: u -> (e_i u + beta)/(u - e_i) with beta = e_j e_k - e_i e_k - e_i e_j,
    rho -> -D_i/(u - e_i)^2 rho, w fixed.  All verifications below are
    polynomial identities, exact over the rationals for exact curves:

    * involution: the Mobius matrix squares to D_i * id, and the rho
      multiplier satisfies m(u) m(T_i u) = 1;
    * surface preservation: g(T_i u; w) (u - e_i)^4 = D_i^2 g(u; w);
    * the fixed locus is exactly the two double points of the fiber w = e_i;
    * on the fiber w = e_i the branches rho = +-h_i are preserved, while on
      w = e_j (j != i) they are exchanged and the action is free.
    """
    e = curve.root(i)
    ej, ek = curve.other_roots(i)
    beta = ej * ek - e * ek - e * ej
    D = (e - ej) * (e - ek)
    exact = curve.exact

    # Mobius matrix [[e, beta], [1, -e]]; squares to (e^2 + beta) id = D id.
    m11 = e * e + beta
    m12 = e * beta - beta * e
    m21 = e - e
    m22 = beta + e * e
    scalar_matches = (m11 == D if exact
                      else _near(m11, D, 1e-12 * (1 + abs(complex(D)))))
    involution_ok = (m12 == 0 and m21 == 0 and m11 == m22
                     and scalar_matches and not _near(D, 0, 1e-12))

    num = Poly([beta, e])
    den = Poly([-e, 1])
    # m(u) m(T u) = 1 reduces to (e u + beta) - e (u - e) = D.
    cocycle = num + den.scale(-e)
    multiplier_cocycle_ok = _poly_eq(cocycle, Poly([D]), exact)

    # g(Tu; w) (u-e)^4 == D^2 g(u; w); linear in w, so two samples prove it.
    surface_preserved = True
    for w in (0, 1):
        g = hitchin_quartic(curve, w)
        lhs = _compose_with_mobius(g, num, den)
        rhs = g.scale(D * D)
        if not _poly_eq(lhs, rhs, exact):
            surface_preserved = False

    # Fixed points of the Mobius map: u^2 - 2 e u - beta = (u-e)^2 - D.
    fixed_point_poly_ok = _poly_eq(
        Poly([-beta, -2 * e, 1]), Poly([e * e - D, -2 * e, 1]), exact,
    )

    fiber_actions = {}
    for j in (1, 2, 3):
        f_e = curve.root(j)
        fj, fk = curve.other_roots(j)
        Dj = (f_e - fj) * (f_e - fk)
        halfc = Fraction(1, 2) if exact else 0.5
        h = Poly([(f_e * f_e - Dj) * halfc, -f_e, halfc])
        comp = _compose_with_mobius(h, num, den)  # h(T u) (u-e)^2
        if _poly_eq(comp, h.scale(-D), exact):
            kind = "preserves"
        elif _poly_eq(comp, h.scale(D), exact):
            kind = "swaps"
        else:
            raise AssertionError(
                "T_%d acts on the fiber w=e_%d by neither branch identity"
                % (i, j)
            )
        entry = {"kind": kind}
        if j == i:
            s = _sqrt_any(D)
            entry["fixed_points"] = ((e + s, 0), (e - s, 0))
        else:
            # free: the two Mobius fixed points carry rho = 0 but miss
            # this fiber, certified by a nonzero resultant.
            cert = resultant(Poly([e * e - D, -2 * e, 1]), h)
            if exact and cert == 0:
                raise AssertionError(
                    "T_%d unexpectedly has fixed points on fiber w=e_%d"
                    % (i, j)
                )
            entry["free_certificate"] = cert
        fiber_actions[j] = entry

    expected_kinds = all(
        fiber_actions[j]["kind"] == ("preserves" if j == i else "swaps")
        for j in (1, 2, 3)
    )
    if not expected_kinds:
        raise AssertionError("unexpected component action for T_%d" % i)

    return QActionReport(
        i=i, e=e, beta=beta, D=D,
        matrix=((e, beta), (1, -e)),
        involution_ok=involution_ok,
        multiplier_cocycle_ok=multiplier_cocycle_ok,
        surface_preserved=surface_preserved,
        fixed_point_poly_ok=fixed_point_poly_ok,
        fiber_actions=fiber_actions,
    )


class ImproperFiberReport:
    def __init__(self, w, singular, singular_points, component_relation,
                 infinity_points, infinity_orbit_single, jacobian_samples):
        self.w = w
        self.singular = singular
        self.singular_points = singular_points
        self.component_relation = component_relation
        self.infinity_points = infinity_points
        self.infinity_orbit_single = infinity_orbit_single
        self.jacobian_samples = jacobian_samples

    def __repr__(self):
        return "ImproperFiberReport(w=%r, singular=%r)" % (self.w, self.singular)


def _infinity_section(curve):
    """The four points with b4 = 0 of the projective closure.

    Solving sum b_i^2 = 0 = sum e_i b_i^2 with b1 = 1 gives
    b2^2 = (e3-e1)/(e2-e3) and b3^2 = (e1-e2)/(e2-e3); the four sign
    choices form one orbit of the pairwise sign changes.  They satisfy
    both homogeneous quadrics for every w, so the section is constant.
    """
    e1, e2, e3 = curve.roots
    t = _sqrt_any((e3 - e1) / (e2 - e3))
    r = _sqrt_any((e1 - e2) / (e2 - e3))
    pts = [(1, sa * t, sb * r, 0) for sa in (1, -1) for sb in (1, -1)]
    for (_, b2, b3, _) in pts:
        v1 = 1 + b2 * b2 + b3 * b3
        v2 = e1 + e2 * b2 * b2 + e3 * b3 * b3
        if abs(complex(v1)) > 1e-9 or abs(complex(v2)) > 1e-9:
            raise AssertionError("infinity section failed the quadrics")
    return pts


def improper_fiber(curve, w, samples=6, seed=0, tol=1e-9):
    """Component data for the quadric-intersection fiber over w.

    Singular exactly over w = e_i, where the only rank-drop points are
    b_i = +-1, b_j = b_k = 0, and subtracting e_i times the first quadric
    leaves the component relation (e_j-e_i) b_j^2 + (e_k-e_i) b_k^2 = 0.
    For generic w the Jacobian has rank 2 at every sampled point.
    """
    quad = ImproperQuadrics(curve)
    i = _split_index(curve, w)
    singular_points = []
    relation = None
    if i is not None:
        unit = [0, 0, 0]
        unit[i - 1] = 1
        singular_points = [tuple(unit), tuple(-c for c in unit)]
        e = curve.root(i)
        others = [j for j in (1, 2, 3) if j != i]
        relation = {
            "coefficients": tuple(
                (j, curve.root(j) - e) for j in others
            ),
            "text": "(e%d - e%d) b%d^2 + (e%d - e%d) b%d^2 = 0" % (
                others[0], i, others[0], others[1], i, others[1],
            ),
        }

    inf_pts = _infinity_section(curve)
    base = inf_pts[0]
    # pairwise sign changes, modulo overall sign with b1 normalized to 1
    orbit = {
        (round(complex(p[1]).real, 9), round(complex(p[1]).imag, 9),
         round(complex(p[2]).real, 9), round(complex(p[2]).imag, 9))
        for p in inf_pts
    }
    gens = [(1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    reached = set()
    for g1, g2, g3 in [(1, 1, 1)] + gens:
        b1, b2, b3 = g1 * base[0], g2 * base[1], g3 * base[2]
        if b1 != 1:  # projective normalization (b1 is never zero here)
            b1, b2, b3 = 1, -b2, -b3
        reached.add((round(complex(b2).real, 9), round(complex(b2).imag, 9),
                     round(complex(b3).real, 9), round(complex(b3).imag, 9)))
    orbit_single = reached == orbit

    rng = random.Random(seed)
    e1, e2, e3 = (complex(e) for e in curve.roots)
    wc = complex(w)
    jac_samples = []
    for _ in range(samples):
        b3 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        rhs1 = 1 - b3 * b3
        rhs2 = wc - e3 * b3 * b3
        det = e2 - e1
        b1sq = (rhs1 * e2 - rhs2) / det
        b2sq = (rhs2 - rhs1 * e1) / det
        b1, b2 = cmath.sqrt(b1sq), cmath.sqrt(b2sq)
        rows = quad.jacobian(b1, b2, b3)
        minors = [
            rows[0][p] * rows[1][q] - rows[0][q] * rows[1][p]
            for p, q in ((0, 1), (0, 2), (1, 2))
        ]
        scale = 1 + max(abs(m) for m in minors)
        rank = 2 if max(abs(m) for m in minors) > tol * scale * 1e-3 else 1
        jac_samples.append(((b1, b2, b3), rank))

    return ImproperFiberReport(
        w=w, singular=i is not None,
        singular_points=singular_points,
        component_relation=relation,
        infinity_points=inf_pts,
        infinity_orbit_single=orbit_single,
        jacobian_samples=jac_samples,
    )


class SO3FiberReport:
    def __init__(self, w, rhs, roots, distinct, node, hessian, rank):
        self.w = w
        self.rhs = rhs
        self.roots = roots
        self.distinct = distinct
        self.node = node
        self.hessian = hessian
        self.rank = rank

    def __repr__(self):
        return "SO3FiberReport(w=%r, node=%r, rank=%r)" % (
            self.w, self.node, self.rank,
        )


def so3_fiber(curve, w):
    """Nodal analysis of the SO3 cubic over w.

    The root differences factor as t_ij - t_ik = (e_j - e_k)(w - e_i), so a
    collision happens exactly over w = e_i, merging the pair containing i at
    t0 = e_i^2.  There the local quadratic form of z^2 - RHS in
    (z, t - t0, w - e_i) is

        z^2 + D_i (dt + e_k dw)(dt + e_j dw) / N,

    whose 3x3 matrix has rank 3: an ordinary double point certificate.
    """
    surf = SO3Surface(curve)
    i = _split_index(curve, w)
    roots = surf.branch_roots(w)
    pairs = ((1, 2), (1, 3), (2, 3))
    if i is None:
        diffs = [roots[p] - roots[q] for p in range(3) for q in range(p + 1, 3)]
        if any(abs(complex(d)) < 1e-12 for d in diffs):
            raise AssertionError("unexpected root collision over w=%r" % (w,))
        return SO3FiberReport(w=w, rhs=surf.rhs_poly(w), roots=roots,
                              distinct=True, node=None, hessian=None, rank=None)

    e = curve.root(i)
    ej, ek = curve.other_roots(i)
    D = (e - ej) * (e - ek)
    t0 = e * e
    colliding = [k for k, pr in enumerate(pairs) if i in pr]
    merged = [roots[k] for k in colliding]
    if not all(_near(t, t0, 1e-9 * (1 + abs(complex(t0)))) for t in merged):
        raise AssertionError("node location mismatch over w=%r" % (w,))
    # quadratic form of z^2 + prod/N in (z, dt, dw); the two vanishing
    # factors are dt - (e_i+e_j) dw and dt - (e_i+e_k) dw, the third is
    # D_i + O(1), with e_i+e_j = -e_k etc.
    N = surf.scale
    a_tt = D / N if curve.exact else complex(D) / complex(N)
    s_sum = (e + ej) + (e + ek)
    s_prod = (e + ej) * (e + ek)
    b_tw = -a_tt * s_sum
    c_ww = a_tt * s_prod
    hessian = (
        (1, 0, 0),
        (0, a_tt, b_tw / 2),
        (0, b_tw / 2, c_ww),
    )
    det_block = a_tt * c_ww - (b_tw / 2) ** 2
    rank = 3 if abs(complex(det_block)) > 1e-12 else 2
    if curve.exact and det_block == 0:
        rank = 2
    if rank != 3:
        raise AssertionError("node over w=%r is not an ordinary double point"
                             % (w,))
    return SO3FiberReport(
        w=w, rhs=surf.rhs_poly(w), roots=roots, distinct=False,
        node=(t0, 0), hessian=hessian, rank=rank,
    )
