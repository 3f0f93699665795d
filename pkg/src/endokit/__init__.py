"""endokit: exact computations for genus-one Hitchin fibers, geometric
endoscopy, and fractional Hecke eigensystems.

The package is organized in layers:

* ``endokit.algebra`` -- exact arithmetic kernel (polynomials, finite
  fields, cyclotomic values, finite abelian characters, a deterministic
  complex root finder).
* ``endokit.hitchin`` -- the genus-one ramified Hitchin fibration for
  SL2 / SO3: singular fibers, two-torsion symmetry action, the improper
  quadric model, and the affine-deformed cotangent model.
* ``endokit.spectral`` -- spectral curves, Prym component combinatorics,
  gluing data, and the Wilson / 't Hooft operator algebra.
* ``endokit.funcfield`` -- the function-field analogue: elliptic curves
  over F_q, closed points, endoscopic data, Frobenius classes.
* ``endokit.whittaker`` -- GL2 weight characters and the Whittaker
  parity (vanishing) criterion.
* ``endokit.fourier`` -- finite-group Fourier calculus for fractional
  Hecke eigensystems.
* ``endokit.cli`` -- command line front end producing JSON reports.
"""

__version__ = "0.1.0"
