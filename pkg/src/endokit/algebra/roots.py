"""Complex root finding for exact polynomials.

A small Durand-Kerner (Weierstrass) iteration is enough here: the
polynomials we meet have tiny degree (at most eight) and well separated
roots, and keeping the solver local avoids dragging a numerics stack into
an otherwise exact package.
"""

import cmath


class NumericFailure(RuntimeError):
    """Raised when the root iteration fails to converge."""


def poly_roots_complex(coeffs, tol=1e-12, max_rounds=None):
    """All complex roots of a polynomial with numeric coefficients.

    `coeffs` is lowest-degree-first, as in :class:`Poly`.  Returns a list of
    complex roots sorted by (rounded) real part then imaginary part, with
    multiplicity.  Raises :class:`NumericFailure` when the simultaneous
    iteration does not settle within its budget.
    """
    cs = [complex(c) for c in coeffs]
    while cs and abs(cs[-1]) == 0.0:
        cs.pop()
    if len(cs) <= 1:
        raise ValueError("invalid input: need degree >= 1 to extract roots")
    n = len(cs) - 1
    lead = cs[-1]
    monic = [c / lead for c in cs]

    def value(z):
        acc = 0j
        for c in reversed(monic):
            acc = acc * z + c
        return acc

    radius = 1.0 + max(abs(c) for c in monic[:-1])
    # A fixed irrational-ish phase offset keeps the start points away from
    # symmetry axes of the root set (real polynomials have conjugate pairs).
    zs = [radius * cmath.exp(1j * (2 * cmath.pi * k / n + 0.4)) for k in range(n)]

    tol = max(tol, 1e-14)
    budget = max_rounds if max_rounds is not None else 200 * n
    for _ in range(budget):
        moved = 0.0
        for i in range(n):
            denom = 1.0 + 0j
            for j in range(n):
                if j != i:
                    denom *= zs[i] - zs[j]
            if denom == 0:
                denom = tol
            step = value(zs[i]) / denom
            zs[i] -= step
            moved = max(moved, abs(step))
        if moved < tol:
            break
    else:
        raise NumericFailure(
            "root iteration did not converge for coefficients %r" % (list(coeffs),)
        )
    scale = max(1.0, max(abs(z) for z in zs))
    residual = max(abs(value(z)) for z in zs)
    if residual > 1e-8 * scale ** n:
        raise NumericFailure(
            "root residual %.3e too large for coefficients %r"
            % (residual, list(coeffs))
        )
    return sorted(zs, key=lambda z: (round(z.real, 9), round(z.imag, 9)))
