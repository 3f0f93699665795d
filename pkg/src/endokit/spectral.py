"""Spectral curves over the genus-one base and their Prym component data.

For a value a of the fiber coordinate the rank-two spectral curve is

    y^2 = (z^2 + a - e1)(z^2 + a - e2)(z^2 + a - e3),

smooth of genus two unless a hits a branch point e_i, in which case the
curve acquires a node at (z, y) = (0, 0) and its normalization is the
genus-one curve

    w^2 = (z^2 + alpha)(z^2 + beta),    alpha = e_i - e_j, beta = e_i - e_k,

with w = y/z.  The two preimages of the node differ by a point of exact
order two in the Jacobian of the normalization; spectral_singularity
returns a rational function witnessing that, with its divisor computed
exactly.

The rest of the module is the component calculus attached to such fibers:
the monodromy census behind the two-component Prym (O2* matrices over
cyclotomic units), the action of the nontrivial cover class on gluing
data at the nodes, and the integer matrices of the 't Hooft and Wilson
operators on component modules, with their composition identities checked
rather than assumed.
"""

import cmath
import math
import random

from .algebra import CyclotomicValue, Poly, poly_discriminant, root_of_unity
from .hitchin.surface import _is_rational, _split_index, _sqrt_any

# Every report about components carries this caveat: the two components of
# a singular fiber (or of the Prym, or the two irreducibles B+/B-) can be
# swapped by a symmetry, and no natural choice distinguishes them.
LABELING_NOTE = (
    "component labels are defined only up to the swap symmetry; "
    "which component is which depends on a non-canonical choice"
)


# ---------------------------------------------------------------------------
# singular spectral curves and the order-two certificate


class TwoTorsionCertificate:
    """Witness that the node preimages differ by a point of order two.

    On w^2 = (z^2 + alpha)(z^2 + beta) with c^2 = alpha*beta, the function

        F = (w - c - ((alpha + beta) / (2c)) z^2) / z^2

    has divisor 2q' - 2q'' for the node preimages q' = (0, c),
    q'' = (0, -c): the numerator vanishes to order four at q' (the z^2
    term of the branch of w through +c is cancelled by construction, and
    w = c + ((alpha+beta)/(2c)) z^2 forces z^4 (alpha-beta)^2 = 0 on the
    curve), is nonzero at q'', and has double poles at the two points over
    z = infinity that cancel against the double poles of z^2.  Hence
    2(q' - q'') is principal while q' - q'' is not (a difference of
    distinct points on a genus-one curve is never principal).
    """

    def __init__(self, alpha, beta):
        self.alpha = alpha
        self.beta = beta
        self.c = _sqrt_any(alpha * beta)
        self.orders = {
            "q_plus": 2,
            "q_minus": -2,
            "infinity_plus": 0,
            "infinity_minus": 0,
        }
        half_trace = (alpha + beta) / (2 * self.c)
        # leading coefficient of the numerator at q' and the two finite
        # nonzero values over z = infinity, all exact when c is rational
        self.leading_at_q_plus = -((alpha - beta) ** 2) / (8 * self.c**3)
        self.values_at_infinity = (1 - half_trace, -1 - half_trace)
        self.node_difference_relation = (
            "div(z) = q' + q'' - p' - p'', so [q'' - q'] = [p'' - p'] "
            "for the points p', p'' over z = infinity"
        )
        self.numeric_orders = {
            "q_plus": self._order_near_node(self.c),
            "q_minus": self._order_near_node(-self.c),
        }
        for key in ("q_plus", "q_minus"):
            if self.numeric_orders[key] != self.orders[key]:
                raise AssertionError(
                    "order-two certificate failed at %s: measured order %d"
                    % (key, self.numeric_orders[key])
                )

    def value(self, z, w):
        """F evaluated at a point (z, w) of the normalization."""
        half_trace = (self.alpha + self.beta) / (2 * self.c)
        return (w - self.c - half_trace * z * z) / (z * z)

    def _branch(self, z, near):
        """The value of w at z on the branch through the point (0, near)."""
        w = cmath.sqrt((z * z + complex(self.alpha)) * (z * z + complex(self.beta)))
        return w if abs(w - complex(near)) <= abs(w + complex(near)) else -w

    def _order_near_node(self, center):
        """Vanishing order of F along the branch through (0, center),
        estimated from the ratio of |F| at two radii.

        The radius stays inside the nearest branch point of w(z) but is
        kept moderate: the numerator near q' is a fourth-order
        cancellation against |c|, so shrinking the radius too far buries
        it under roundoff.
        """
        scale = min(abs(complex(self.alpha)), abs(complex(self.beta)))
        radius = 0.1 * min(1.0, math.sqrt(scale))
        estimates = []
        for k in range(4):
            z = radius * cmath.exp(2j * cmath.pi * (k + 0.125) / 4)
            big = self.value(z, self._branch(z, center))
            small = self.value(z / 2, self._branch(z / 2, center))
            estimates.append(math.log2(abs(big) / abs(small)))
        estimates.sort()
        return round((estimates[1] + estimates[2]) / 2)


class Normalization:
    """The genus-one normalization of a nodal spectral curve."""

    def __init__(self, alpha, beta):
        self.alpha = alpha
        self.beta = beta
        zero = alpha * 0
        one = zero + 1
        self.quartic = Poly([alpha * beta, zero, alpha + beta, zero, one])
        self.discriminant = poly_discriminant(self.quartic)
        if not self.discriminant:
            raise AssertionError("normalization is not smooth")
        c = _sqrt_any(alpha * beta)
        self.node_preimages = ((zero, c), (zero, -c))
        # monic square leading term: two points over z = infinity
        self.points_at_infinity = 2
        self.genus = 1


class SpectralFiberReport:
    def __init__(self, curve, a, rhs, status, discriminant, **extra):
        self.curve = curve
        self.a = a
        self.rhs = rhs
        self.status = status
        self.discriminant = discriminant
        self.genus = 2 if status == "smooth" else 1
        self.branch_index = extra.get("branch_index")
        self.normalization = extra.get("normalization")
        self.certificate = extra.get("certificate")


def spectral_singularity(curve, a):
    """Classify the spectral curve over the fiber-coordinate value a.

    Returns a report with status "smooth" (genus two, sextic discriminant
    nonzero) or "singular" (a equals some e_i; the report then carries the
    normalization, the node preimages, and the order-two certificate).
    """
    zero = a * 0
    one = zero + 1
    rhs = Poly([one])
    for e in curve.roots:
        rhs = rhs * Poly([a - e, zero, one])
    disc = poly_discriminant(rhs)
    i = _split_index(curve, a)
    if i is None:
        if not disc:
            raise AssertionError("smooth spectral curve with zero discriminant")
        return SpectralFiberReport(curve, a, rhs, "smooth", disc)
    if _is_rational(a) and curve.exact and disc:
        raise AssertionError("nodal spectral curve with nonzero discriminant")
    e = curve.root(i)
    ej, ek = curve.other_roots(i)
    alpha, beta = e - ej, e - ek
    return SpectralFiberReport(
        curve,
        a,
        rhs,
        "singular",
        disc,
        branch_index=i,
        normalization=Normalization(alpha, beta),
        certificate=TwoTorsionCertificate(alpha, beta),
    )


# ---------------------------------------------------------------------------
# Prym components via O2* monodromy


def _cyc(x):
    return x if isinstance(x, CyclotomicValue) else CyclotomicValue(1, [x])


def _mat(rows):
    return tuple(tuple(_cyc(x) for x in row) for row in rows)


def _mat_mul(x, y):
    return tuple(
        tuple(sum((x[i][r] * y[r][j] for r in range(2)), _cyc(0)) for j in range(2))
        for i in range(2)
    )


def _mat_inv(m):
    # both generator shapes have determinant one
    return ((m[1][1], -m[0][1]), (-m[1][0], m[0][0]))


def _commutator(x, y):
    return _mat_mul(_mat_mul(x, y), _mat_mul(_mat_inv(x), _mat_inv(y)))


_IDENTITY = _mat([[1, 0], [0, 1]])


def connected_generator(t):
    """diag(t, 1/t): monodromy staying in the connected component."""
    t = _cyc(t)
    return _mat([[t, 0], [0, t.inverse()]])


def disconnected_generator(s):
    """antidiag(s, -1/s): monodromy in the disconnected component."""
    s = _cyc(s)
    return _mat([[0, s], [-s.inverse(), 0]])


class O2StarMonodromy:
    """Surface-group monodromy with values in O2*.

    Generators A1..Ag, B1..Bg; ``marker`` assigns each generator its class
    in the component group Z2 (1 = disconnected), and ``units`` assigns
    each generator its unit, a root of unity so the defining relation
    prod_i [A_i, B_i] = 1 evaluates exactly.
    """

    def __init__(self, g, marker, units):
        self.g = g
        self.marker = dict(marker)
        self.units = dict(units)

    def matrix(self, name):
        unit = self.units[name]
        if self.marker.get(name, 0):
            return disconnected_generator(unit)
        return connected_generator(unit)

    def relation_value(self):
        out = _IDENTITY
        for i in range(1, self.g + 1):
            out = _mat_mul(
                out, _commutator(self.matrix("A%d" % i), self.matrix("B%d" % i))
            )
        return out


def _generator_names(g):
    return ["A%d" % i for i in range(1, g + 1)] + ["B%d" % i for i in range(1, g + 1)]


def _normalize_marker(g, marker):
    names = _generator_names(g)
    if isinstance(marker, str):
        if marker not in names:
            raise ValueError("unknown generator %r" % (marker,))
        return {n: (1 if n == marker else 0) for n in names}
    out = {n: 0 for n in names}
    for name, bit in dict(marker).items():
        if name not in out:
            raise ValueError("unknown generator %r" % (name,))
        out[name] = 1 if bit else 0
    return out


class PrymReport:
    def __init__(self, g, marker, solved, census, samples, double_covers=None):
        self.g = g
        self.marker = marker
        self.solved_generator = solved
        self.census = census
        self.component_count = len(census)
        self.samples = samples
        self.double_covers = double_covers
        self.labeling_note = LABELING_NOTE


def _census_for_marker(g, marker, seed=7, samples=5):
    """Solve the surface-group relation for one undetermined unit.

    The distinguished unknown sits in the last handle that meets the
    disconnected component; its partner and all remaining generators get
    sample root-of-unity units.  Conjugating the torus by a disconnected
    element inverts it, so each commutator is diagonal and the relation
    pins the unknown's square: exactly two units survive, differing by
    the central sign.
    """
    names = _generator_names(g)
    handle = max(i for i in range(1, g + 1) if marker["A%d" % i] or marker["B%d" % i])
    a_name, b_name = "A%d" % handle, "B%d" % handle
    # solve for the connected partner when there is one, else for B
    unknown = b_name if marker[a_name] else a_name
    rng = random.Random(seed)
    candidates = [root_of_unity(12, k) for k in range(12)]
    solution_sets = []
    sampled = []
    for _ in range(samples):
        units = {n: root_of_unity(12, rng.randrange(12)) for n in names}
        sampled.append({n: units[n] for n in names if n != unknown})
        found = []
        for t in candidates:
            units[unknown] = t
            data = O2StarMonodromy(g, marker, units)
            if data.relation_value() == _IDENTITY:
                found.append(t)
        solution_sets.append(found)
    counts = {len(s) for s in solution_sets}
    if counts != {2}:
        raise AssertionError("census size %r, expected exactly two" % (counts,))
    for pair in solution_sets:
        if pair[0] != pair[1] * _cyc(-1):
            raise AssertionError("the two solutions do not differ centrally")
    return unknown, solution_sets, sampled


def prym_components(g, marker):
    """Component census of the Prym for a double cover marked on the
    surface-group generators.

    ``marker`` is either the name of the one generator sent to the
    disconnected component of O2* (e.g. "B2") or a dict of Z2 values on
    all generators.  The all-connected marker is the trivial cover and is
    rejected.  For g = 1 (one ramification point) the report also carries
    the census of all three nontrivial double covers, matched to the
    three split fibers of the base.
    """
    if g < 1:
        raise ValueError("genus must be >= 1")
    marker = _normalize_marker(g, marker)
    if not any(marker.values()):
        raise ValueError(
            "degenerate cover: no generator in the disconnected component"
        )
    unknown, solution_sets, sampled = _census_for_marker(g, marker)
    double_covers = None
    if g == 1:
        double_covers = []
        for index, (bit_a, bit_b) in enumerate([(0, 1), (1, 0), (1, 1)], start=1):
            sub = {"A1": bit_a, "B1": bit_b}
            _, sets, _ = _census_for_marker(1, sub)
            double_covers.append(
                {
                    "marker": sub,
                    "components": len(sets[0]),
                    "split_fiber_index": index,
                }
            )
    return PrymReport(g, marker, unknown, solution_sets[0], sampled, double_covers)


# ---------------------------------------------------------------------------
# gluing data at the nodes and the cover-class action


class GluingReport:
    """Action of a cover class on the gluing data (u_i : v_i)."""

    def __init__(self, g, element):
        if element not in (1, -1):
            raise ValueError("cover class must be +1 or -1")
        if g < 1:
            raise ValueError("genus must be >= 1")
        self.g = g
        self.element = element
        # 2g - 2 nodes for g >= 2; the once-ramified genus-one fiber has 2
        self.pair_count = 2 * g - 2 if g >= 2 else 2
        n = self.pair_count
        self.action = "(u_i, v_i) -> (u_i, %d * v_i)" % element
        if element == -1:
            self.fixed_census = tuple(
                tuple((1, 0) if (mask >> i) & 1 else (0, 1) for i in range(n))
                for mask in range(2**n)
            )
            self.codimension = (n, n, 2 * n)
        else:
            self.fixed_census = None
            self.codimension = (0, 0, 0)
        self.census_size = 2**n if element == -1 else None
        self.labeling_note = LABELING_NOTE

    def apply(self, pairs):
        out = []
        for u, v in pairs:
            if not u and not v:
                raise ValueError("invalid gluing datum: (0, 0)")
            out.append((u, self.element * v))
        return tuple(out)

    def is_fixed(self, pairs):
        """Projectively fixed: for the nontrivial class, u_i v_i = 0."""
        if self.element == 1:
            return True
        return all(u * v == 0 for u, v in pairs)


def gluing_action(g, element=-1):
    return GluingReport(g, element)


# ---------------------------------------------------------------------------
# component modules and the 't Hooft / Wilson calculus


class ComponentModule:
    """Free Z-module on an ordered basis of component labels, together
    with the swap exchanging the two components."""

    def __init__(self, labels, swap=None):
        self.labels = tuple(labels)
        self.swap = None if swap is None else dict(swap)

    def swap_matrix(self):
        if self.swap is None:
            raise ValueError("invalid module: no swap involution on the basis")
        if sorted(self.swap) != sorted(self.labels) or sorted(
            self.swap.values()
        ) != sorted(self.labels):
            raise ValueError("invalid module: swap is not a basis permutation")
        for label in self.labels:
            if self.swap[self.swap[label]] != label:
                raise ValueError("invalid module: swap is not an involution")
        index = {label: i for i, label in enumerate(self.labels)}
        n = len(self.labels)
        rows = [[0] * n for _ in range(n)]
        for j, label in enumerate(self.labels):
            rows[index[self.swap[label]]][j] = 1
        return tuple(tuple(r) for r in rows)


def _int_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _int_add(x, y):
    return tuple(tuple(a + b for a, b in zip(rx, ry)) for rx, ry in zip(x, y))


def _int_scale(x, k):
    return tuple(tuple(k * a for a in row) for row in x)


def _int_mul(x, y):
    n = len(x)
    return tuple(
        tuple(sum(x[i][r] * y[r][j] for r in range(n)) for j in range(n))
        for i in range(n)
    )


def _graded_identity(phi):
    """The transfer identity on the graded four-dimensional module.

    With M = 1 + phi mapping each graded piece to the other, the graded
    operator [[0, M], [M, 0]] must square to 1 + T, T = 1 + 2 phi, on
    both pieces at once.  Returns the verified block data.
    """
    n = len(phi)
    ident = _int_identity(n)
    t_block = _int_add(ident, _int_scale(phi, 2))
    m_block = _int_add(ident, phi)
    one_plus_t = _int_add(ident, t_block)
    graded = tuple(
        tuple(0 if (i < n) == (j < n) else m_block[i % n][j % n]
              for j in range(2 * n))
        for i in range(2 * n)
    )
    square = _int_mul(graded, graded)
    expected = tuple(
        tuple(one_plus_t[i % n][j % n] if (i < n) == (j < n) else 0
              for j in range(2 * n))
        for i in range(2 * n)
    )
    if square != expected:
        raise AssertionError("transfer identity failed on the graded module")
    return {
        "transfer_block": m_block,
        "square": square,
        "one_plus_t": expected,
        "verified": True,
    }


class OperatorReport:
    def __init__(self, name, source_basis, target_basis, matrix, graded_identity):
        self.name = name
        self.source_basis = source_basis
        self.target_basis = target_basis
        self.matrix = matrix
        self.graded_identity = graded_identity
        self.labeling_note = LABELING_NOTE

    def apply(self, coefficients):
        return tuple(
            sum(row[j] * c for j, c in enumerate(coefficients))
            for row in self.matrix
        )


def thooft_matrix(module, operator):
    """Exact matrix of a 't Hooft operator on the component module.

    ``operator`` is "T" (the endomorphism 1 + swap + swap^-1 of either
    graded piece), "T_tilde" (the transfer from the proper basis to the
    improper one), or "T_tilde_improper" (the transfer back).  The report
    always carries the squared-transfer identity on the graded
    four-dimensional module, checked as an exact matrix equality.
    """
    phi = module.swap_matrix()
    identity_data = _graded_identity(phi)
    proper = module.labels
    improper = tuple(label + "*" for label in proper)
    ident = _int_identity(len(proper))
    if operator == "T":
        return OperatorReport(
            "T", proper, proper, _int_add(ident, _int_scale(phi, 2)), identity_data
        )
    if operator == "T_tilde":
        return OperatorReport(
            "T_tilde", proper, improper, _int_add(ident, phi), identity_data
        )
    if operator == "T_tilde_improper":
        return OperatorReport(
            "T_tilde_improper", improper, proper, _int_add(ident, phi), identity_data
        )
    raise ValueError("unknown operator %r" % (operator,))


class WilsonReport:
    def __init__(self, basis, dims, matrix, mirror, eigen, graded_identity):
        self.basis = basis
        self.dims = dims
        self.matrix = matrix
        self.mirror = mirror
        self.eigen = eigen
        self.graded_identity = graded_identity
        self.labeling_note = LABELING_NOTE


def wilson_matrix(module, dims=(2, 1)):
    """Wilson operator on the two irreducible components B+/B-.

    The multiplicities are dim(det U) on the diagonal and dim(U) off it;
    for the defining (2, 1) pair this is the same integer matrix as the
    't Hooft operator on the proper components, an equality reported
    together with the labeling caveat (either matching of the two bases
    realizes it).  The vector B+ + B- is an eigenvector with eigenvalue
    dim U + dim det U = 3, the dimension of the adjoint representation.
    """
    phi = module.swap_matrix()
    du, dd = dims
    ident = _int_identity(len(module.labels))
    w = _int_add(_int_scale(ident, dd), _int_scale(phi, du))
    t_reference = _int_add(ident, _int_scale(phi, 2))
    mirror = {
        "t_matrix": t_reference,
        "equal": w == t_reference,
        "swap_conjugate_equal": _int_mul(phi, _int_mul(w, phi)) == t_reference,
        "caveat": LABELING_NOTE,
    }
    ones = tuple(1 for _ in module.labels)
    image = tuple(sum(row) for row in w)
    if image != tuple((du + dd) * x for x in ones):
        raise AssertionError("B+ + B- is not an eigenvector")
    eigen = {"vector": ones, "value": du + dd, "adjoint_dimension": 3}
    graded = _graded_identity(phi) if dims == (2, 1) else None
    return WilsonReport(module.labels, dims, w, mirror, eigen, graded)


def pushforward_degree(n, g):
    """Degree n(n-1)(g-1) of the twist making an n-sheeted spectral
    pushforward match the Hitchin normalization over a genus-g curve."""
    if n < 1 or g < 0:
        raise ValueError("need n >= 1 and g >= 0")
    return n * (n - 1) * (g - 1)
