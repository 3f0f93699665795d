"""Exact finite-group Fourier calculus for fractional Hecke eigen-systems.

A representation of Gamma x H is given concretely: matrices for the
Gamma-action and, per evaluation point, a commuting matrix for the
Frobenius value sigma(Fr_x).  Everything downstream -- isotypic
projectors, Hecke matrices on the formal basis {f_R}, diagonalization by
class characters, the inverse transform -- is computed in exact
cyclotomic/rational arithmetic with zero tolerance.

The f_R are formal symbols only: this is the eigenvalue calculus, not a
space of automorphic functions.  For an abelian Gamma whose characters
have finite order d, the forward/inverse pair below is the d-point
discrete Fourier sum that a contour integral against a finite-order
character degenerates to.
"""

from fractions import Fraction
from itertools import product

from .algebra import CyclotomicValue, FiniteAbelianGroup, group_characters, root_of_unity

ONE = root_of_unity(1)
ZERO = ONE - ONE


# ---------------------------------------------------------------------------
# small exact-matrix helpers (entries: int / Fraction / CyclotomicValue)

def mat_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n))
                 for i in range(n))


def mat_mul(a, b):
    n, mid, m = len(a), len(b), len(b[0])
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(mid))
                       for j in range(m)) for i in range(n))


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


def mat_scale(c, a):
    return tuple(tuple(c * x for x in row) for row in a)


def mat_trace(a):
    return sum(a[i][i] for i in range(len(a)))


def mat_eq(a, b):
    if len(a) != len(b):
        return False
    return all(len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
               for ra, rb in zip(a, b))


def _as_integer(value):
    """Exact integer content of a scalar, or None."""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else None
    if isinstance(value, CyclotomicValue):
        if not value.is_rational():
            return None
        return _as_integer(value.as_fraction())
    return None


# ---------------------------------------------------------------------------
# finite groups with character tables

class FiniteGroupData:
    """Elements, multiplication, conjugacy classes and the character table.

    Rows of the table are irreducibles, columns follow the class order;
    both orthogonality relations are asserted at construction.  For an
    abelian group the irreducibles are identified with dual-group
    elements via `dual_element`.
    """

    def __init__(self, elements, multiply, classes, irrep_names, table,
                 abelian=False, dual=None):
        self.elements = list(elements)
        self.multiply = multiply
        self.classes = [list(c) for c in classes]
        self.irrep_names = list(irrep_names)
        self.table = [list(row) for row in table]
        self.abelian = abelian
        self._dual = list(dual) if dual is not None else None
        self.order = len(self.elements)
        self.class_reps = [c[0] for c in self.classes]
        if len(self.classes) != len(self.table):
            raise ValueError("need as many irreducibles as classes")
        if sum(len(c) for c in self.classes) != self.order:
            raise ValueError("classes do not partition the group")
        self._check_orthogonality()
        self._mult_cache = {}

    def _check_orthogonality(self):
        n = len(self.classes)
        sizes = [len(c) for c in self.classes]
        for i in range(n):
            for j in range(n):
                inner = sum(sizes[c] * self.table[i][c] *
                            _conj(self.table[j][c]) for c in range(n))
                want = self.order if i == j else 0
                if inner != want:
                    raise AssertionError(
                        "character rows %d, %d not orthogonal" % (i, j))
        for c1 in range(n):
            for c2 in range(n):
                inner = sum(self.table[i][c1] * _conj(self.table[i][c2])
                            for i in range(n))
                want = Fraction(self.order, sizes[c1]) if c1 == c2 else 0
                if inner != want:
                    raise AssertionError(
                        "character columns %d, %d not orthogonal" % (c1, c2))

    def dim(self, irrep):
        d = _as_integer(self.table[irrep][0])
        assert d is not None and d > 0
        return d

    def class_of(self, element):
        for idx, cls in enumerate(self.classes):
            if element in cls:
                return idx
        raise ValueError("%r is not a group element" % (element,))

    def dual_element(self, irrep):
        if self._dual is None:
            raise ValueError("dual identification needs an abelian group")
        return self._dual[irrep]

    def tensor_multiplicity(self, i, j, target):
        """m^{R_i, R_j}_{R_target} by the class inner product; always a
        nonnegative integer for genuine character tables."""
        key = (i, j, target)
        if key not in self._mult_cache:
            sizes = [len(c) for c in self.classes]
            inner = sum(
                Fraction(sizes[c], self.order) * self.table[i][c] *
                self.table[j][c] * _conj(self.table[target][c])
                for c in range(len(self.classes)))
            m = _as_integer(inner)
            if m is None or m < 0:
                raise AssertionError(
                    "tensor multiplicity (%d,%d->%d) is %r, not a "
                    "nonnegative integer" % (i, j, target, inner))
            self._mult_cache[key] = m
        return self._mult_cache[key]

    def __repr__(self):
        return "FiniteGroupData(order=%d, classes=%d)" % (
            self.order, len(self.classes))


def _conj(value):
    if isinstance(value, CyclotomicValue):
        return value.conjugate()
    return value


def abelian_group_data(orders):
    """Z_{orders[0]} x ... with singleton classes and the dual-group
    identification of characters with elements."""
    group = FiniteAbelianGroup(orders)
    elements = sorted(product(*[range(n) for n in orders]))
    chars = list(group_characters(group))
    table = [[chi(e) for e in elements] for chi in chars]
    return FiniteGroupData(
        elements,
        group.add,
        [[e] for e in elements],
        [str(tuple(chi.exponents)) for chi in chars],
        table,
        abelian=True,
        dual=[tuple(chi.exponents) for chi in chars],
    )


def symmetric3_group_data():
    """S3 on {0,1,2}: permutations as image tuples, classes (identity,
    transpositions, 3-cycles), the classical three-row character table."""
    elements = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1),
                (1, 2, 0), (2, 0, 1)]

    def multiply(p, q):
        return tuple(p[q[i]] for i in range(3))

    classes = [
        [(0, 1, 2)],
        [(1, 0, 2), (2, 1, 0), (0, 2, 1)],
        [(1, 2, 0), (2, 0, 1)],
    ]
    table = [
        [1, 1, 1],
        [1, -1, 1],
        [2, 0, -1],
    ]
    return FiniteGroupData(elements, multiply, classes,
                           ["trivial", "sign", "standard"], table)


def regular_representation(group):
    """Left-multiplication permutation matrices, element -> matrix."""
    index = {g: i for i, g in enumerate(group.elements)}
    rho = {}
    for g in group.elements:
        mat = [[0] * group.order for _ in range(group.order)]
        for h in group.elements:
            mat[index[group.multiply(g, h)]][index[h]] = 1
        rho[g] = tuple(tuple(row) for row in mat)
    return rho


# ---------------------------------------------------------------------------
# isotypic decomposition and twisted Frobenius values

def _check_commutes(group, rho, sigma, label):
    for g in group.elements:
        if not mat_eq(mat_mul(rho[g], sigma), mat_mul(sigma, rho[g])):
            raise ValueError(
                "invalid datum at %r: sigma does not commute with the "
                "group action; offending pair (%r, sigma)" % (label, g))


class IsotypicDecomposition:
    """Projectors P_R' from the character table, multiplicity-space
    dimensions, the compressed H-action P sigma P per block, and the
    fractional eigenvalues a_{R'} = Tr(P_R' sigma) / dim R'."""

    def __init__(self, group, rho, sigma, projectors, multiplicities,
                 a_values):
        self.group = group
        self.rho = rho
        self.sigma = sigma
        self.projectors = projectors
        self.multiplicities = multiplicities
        self.a_values = a_values

    def block_operator(self, irrep):
        p = self.projectors[irrep]
        return mat_mul(p, mat_mul(self.sigma, p))

    def __repr__(self):
        return "IsotypicDecomposition(%r, blocks %r)" % (
            self.group, self.multiplicities)


def isotypic_decompose(group, rho, sigma, label="x"):
    """Split V under Gamma and read off the per-block Frobenius traces.

    P_R' = (dim R'/|Gamma|) sum_g conj(chi_R'(g)) rho(g); idempotence,
    completeness and integrality of the multiplicity dimensions are all
    asserted exactly.
    """
    _check_commutes(group, rho, sigma, label)
    dim_v = len(sigma)
    n = len(group.classes)
    projectors = []
    multiplicities = []
    a_values = []
    total = None
    for irrep in range(n):
        d = group.dim(irrep)
        acc = None
        for cls_idx, cls in enumerate(group.classes):
            weight = _conj(group.table[irrep][cls_idx]) * Fraction(d, group.order)
            for g in cls:
                term = mat_scale(weight, rho[g])
                acc = term if acc is None else mat_add(acc, term)
        if not mat_eq(mat_mul(acc, acc), acc):
            raise AssertionError("projector %d is not idempotent" % irrep)
        projectors.append(acc)
        total = acc if total is None else mat_add(total, acc)
        block_dim = _as_integer(mat_trace(acc))
        if block_dim is None or block_dim % d != 0:
            raise AssertionError(
                "isotypic block %d has trace %r, not a multiple of dim %d"
                % (irrep, mat_trace(acc), d))
        mult = block_dim // d
        multiplicities.append(mult)
        a_values.append(mat_trace(mat_mul(acc, sigma)) * Fraction(1, d))
    if not mat_eq(total, mat_identity(dim_v)):
        raise AssertionError("projectors do not sum to the identity")
    if sum(m * group.dim(i) for i, m in enumerate(multiplicities)) != dim_v:
        raise AssertionError("block dimensions do not add up to dim V")
    return IsotypicDecomposition(group, rho, sigma, projectors,
                                 multiplicities, a_values)


class TwistedSigma:
    """Per conjugacy class the twisted Frobenius value sigma(Fr_x) * gamma,
    as a matrix in the modeled ambient group; commutation with all of
    Gamma is checked at construction."""

    def __init__(self, group, rho, sigma, label="x"):
        _check_commutes(group, rho, sigma, label)
        self.group = group
        self.values = [mat_mul(sigma, rho[rep]) for rep in group.class_reps]

    def value(self, cls_idx):
        return self.values[cls_idx]

    def trace(self, cls_idx):
        return mat_trace(self.values[cls_idx])


# ---------------------------------------------------------------------------
# the eigen-system on the formal basis {f_R}

class EigenSystem:
    """Formal Hecke eigen-system: per evaluation point the exact matrix of
    T_{V,x} on {f_R}, built from a Gamma-representation and commuting
    sigma-matrices."""

    def __init__(self, group, rho, sigma_by_point):
        self.group = group
        self.rho = rho
        self.sigma_by_point = dict(sigma_by_point)
        self.decompositions = {
            x: isotypic_decompose(group, rho, sigma, label=x)
            for x, sigma in self.sigma_by_point.items()}

    def points(self):
        return list(self.decompositions)

    def a_values(self, x):
        return self.decompositions[x].a_values


def hecke_matrix(system, x):
    """Matrix of T_{V,x}: the f_R coefficient of T f_S is
    sum_R' a_{R',x} m^{S,R'}_R, by the tensor-multiplicity expansion."""
    group = system.group
    a = system.a_values(x)
    n = len(group.classes)
    return tuple(
        tuple(sum(a[rp] * group.tensor_multiplicity(col, rp, row)
                  for rp in range(n)) for col in range(n))
        for row in range(n))


class FourierRecord:
    def __init__(self, cls_idx, class_rep, vector, eigenvalue,
                 twisted_trace):
        self.cls_idx = cls_idx
        self.class_rep = class_rep
        self.vector = vector
        self.eigenvalue = eigenvalue
        self.twisted_trace = twisted_trace

    def __repr__(self):
        return "FourierRecord([%r] -> %r)" % (self.class_rep,
                                              self.eigenvalue)


def fourier_diagonalize(system, x):
    """Eigenvectors fhat_[gamma] = sum_R chi_R(gamma^-1) f_R of T_{V,x}.

    Asserts, exactly: the eigen-identity T fhat = A fhat with
    A_{x,[gamma]} = sum_R' chi_R'(gamma) a_{R',x}, and independently
    A_{x,[gamma]} = Tr(sigma(Fr_x) gamma, V).  Any failure is a hard
    assertion (it would mean broken multiplicities).

    The coefficient of f_R is the conjugate character value: only that
    labeling makes the [gamma]-eigenvalue equal the gamma-twisted trace
    (for a real character table the two conventions coincide).
    """
    group = system.group
    matrix = hecke_matrix(system, x)
    a = system.a_values(x)
    twisted = TwistedSigma(group, system.rho,
                           system.sigma_by_point[x], label=x)
    n = len(group.classes)
    records = []
    for c in range(n):
        vector = tuple(_conj(group.table[irrep][c]) for irrep in range(n))
        eigenvalue = sum(group.table[rp][c] * a[rp] for rp in range(n))
        image = tuple(sum(matrix[row][col] * vector[col]
                          for col in range(n)) for row in range(n))
        scaled = tuple(eigenvalue * v for v in vector)
        if any(lhs != rhs for lhs, rhs in zip(image, scaled)):
            raise AssertionError(
                "eigen-identity fails for class %r at %r"
                % (group.class_reps[c], x))
        if eigenvalue != twisted.trace(c):
            raise AssertionError(
                "eigenvalue %r disagrees with the twisted trace %r for "
                "class %r at %r" % (eigenvalue, twisted.trace(c),
                                    group.class_reps[c], x))
        records.append(FourierRecord(c, group.class_reps[c], vector,
                                     eigenvalue, twisted.trace(c)))
    return records


def inverse_fourier(system):
    """Coefficients of f_R = (1/|Gamma|) sum_[gamma] |[gamma]|
    conj(chi_R(gamma)) fhat_[gamma]; the forward/inverse product is
    verified to be the exact identity and the matrix pair is returned."""
    group = system.group
    n = len(group.classes)
    forward = tuple(tuple(_conj(group.table[irrep][c]) for irrep in range(n))
                    for c in range(n))  # row: class, col: irrep
    inverse = tuple(
        tuple(Fraction(len(group.classes[c]), group.order) *
              group.table[irrep][c] for c in range(n))
        for irrep in range(n))  # row: irrep, col: class
    if not mat_eq(mat_mul(inverse, forward), mat_identity(n)):
        raise AssertionError("forward/inverse Fourier is not the identity")
    return forward, inverse


# ---------------------------------------------------------------------------
# the adjoint fixture fed by endoscopic Frobenius classes

def adjoint_rotation(ratio):
    """Rotation about the fixed axis with eigenvalues (1, r, 1/r) on the
    three-dimensional adjoint space, written exactly over cyclotomics."""
    c = (ratio + ratio.inverse()) * Fraction(1, 2)
    s = (ratio - ratio.inverse()) * root_of_unity(4, 3) * Fraction(1, 2)
    return ((c, -s, ZERO), (s, c, ZERO), (ZERO, ZERO, ONE))


def adjoint_reflection():
    """A half-turn about an axis through the plane: the usual model of a
    non-split Frobenius; its conjugacy class is all that matters."""
    return ((ONE, ZERO, ZERO), (ZERO, -ONE, ZERO), (ZERO, ZERO, -ONE))


def z2_adjoint_system(classes):
    """The two-element group inside the rotation group, acting on the
    adjoint by the half-turn diag(-1,-1,1); Frobenius classes (duck-typed:
    .point, .split, .ratio) become commuting sigma-matrices.

    The trivial-isotypic a-value reproduces a_x and the sign-isotypic one
    b_x, so this is the splice point between the function-field and
    Fourier layers.
    """
    group = abelian_group_data((2,))
    gamma = ((-ONE, ZERO, ZERO), (ZERO, -ONE, ZERO), (ZERO, ZERO, ONE))
    rho = {(0,): mat_identity(3), (1,): gamma}
    sigma_by_point = {}
    for cls in classes:
        if cls.split:
            sigma_by_point[cls.point] = adjoint_rotation(cls.ratio)
        else:
            sigma_by_point[cls.point] = adjoint_reflection()
    return EigenSystem(group, rho, sigma_by_point)


# ---------------------------------------------------------------------------
# the finite scalar toy model

class Z2ToyModel:
    """Census of the order-n scalar model: objects are pairs
    (eps, 1/eps) written additively as e in Z_n, morphism pairs
    (l+, l-) act by e -> e + l+ - l-, and an equivariant structure is a
    scalar mu with mu^2 = 1."""

    def __init__(self, n):
        if n <= 0 or n % 2 == 1:
            raise ValueError(
                "invalid model: square roots of the identity need an "
                "even scalar order, got %r" % n)
        if n > 64:
            raise ValueError("invalid model: scalar order %d > 64" % n)
        self.n = n
        self.objects = list(range(n))
        # one isomorphism class: l+ - l- sweeps all of Z_n
        orbit = sorted({(0 + l1 - l2) % n
                        for l1 in range(n) for l2 in range(n)})
        if orbit != self.objects:
            raise AssertionError("objects fall into several classes")
        self.isomorphism_classes = 1
        self.equivariant_structures = tuple(
            mu for mu in range(n) if (2 * mu) % n == 0)
        if self.equivariant_structures != (0, n // 2):
            raise AssertionError(
                "equivariant census %r is not the expected pair"
                % (self.equivariant_structures,))
        self.equivariant_classes = len(self.equivariant_structures)

    def connecting_morphism(self, source, target):
        """A scalar pair carrying one object to the other."""
        return ((target - source) % self.n, 0)

    def swap(self, mu):
        """The sign-twist on equivariant objects; exchanges the two
        square roots of the identity."""
        return (mu + self.n // 2) % self.n

    def __repr__(self):
        return "Z2ToyModel(n=%d, classes=%d)" % (self.n,
                                                 self.equivariant_classes)


def z2_toy_model(n):
    return Z2ToyModel(n)
