"""Run configuration: parsing, per-command validation, canonical echo.

A configuration can come from command-line flags, from a JSON file, or
from both (flags win).  Validation happens before dispatch and builds
the actual domain objects (curve, endoscopic datum), so a config error
is always reported as such and never surfaces as a failure deep inside
a suite.
"""

import json
import os
from fractions import Fraction

from ..funcfield import EllipticCurveFq, EndoscopicDatum, select_character
from ..algebra import FiniteField
from ..hitchin import CurveParams

COMMANDS = ("hitchin", "spectral", "endoscopy", "whittaker", "fractional",
            "verify-all")

# randomized-check sample counts; a single --samples flag overrides all
SAMPLE_DEFAULTS = {
    "random-curves": 20,
    "isomorphism-points": 100,
    "reciprocity-functions": 100,
    "differentials": 20,
}

TOLERANCE_DEFAULTS = {
    "zero-match": 1e-9,
    "residue": 1e-8,
    "conic": 1e-9,
    "omega": 1e-9,
}


class ConfigError(ValueError):
    """A configuration or input problem; maps to exit status 2."""


def _scalar(value, name):
    """Exact rational when possible, complex otherwise ('i' accepted)."""
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        return value
    if isinstance(value, complex):
        return value
    text = str(value).strip()
    try:
        return Fraction(text)
    except ValueError:
        pass
    try:
        return complex(text.replace("i", "j"))
    except ValueError:
        raise ConfigError("%s: cannot parse %r as a number" % (name, value))


def _integer(value, name, minimum=None):
    try:
        n = int(value)
    except (TypeError, ValueError):
        raise ConfigError("%s: expected an integer, got %r" % (name, value))
    if minimum is not None and n < minimum:
        raise ConfigError("%s: %d is below the minimum %d"
                          % (name, n, minimum))
    return n


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class RunConfig:
    """Validated run parameters plus the domain objects they define.

    `curve` (rational model) and `datum` (function-field model) are
    populated by validate() only for the commands that need them.
    """

    def __init__(self, command, a=None, b=None, sigma0=None, w=None,
                 p=None, m=None, base_a=None, base_b=None, torsion=None,
                 char_order=None, deg=None, toy_n=None, samples=None,
                 seed=None, out=None, cache_dir=None, tolerances=None,
                 plot=False):
        if command not in COMMANDS:
            raise ConfigError("unknown command %r" % (command,))
        self.command = command
        self.a = _scalar(a if a is not None else -1, "a")
        self.b = _scalar(b if b is not None else 0, "b")
        self.sigma0 = _scalar(sigma0 if sigma0 is not None else 1, "sigma0")
        self.w = "all-singular" if w in (None, "all-singular") \
            else _scalar(w, "w")
        self.p = _integer(p if p is not None else 5, "p", minimum=2)
        self.m = _integer(m if m is not None else 1, "m", minimum=1)
        self.base_a = _integer(base_a if base_a is not None else -1, "base_a")
        self.base_b = _integer(base_b if base_b is not None else 0, "base_b")
        self.torsion = _integer(torsion if torsion is not None else 1,
                                "torsion")
        self.char_order = _integer(char_order if char_order is not None
                                   else 2, "char_order", minimum=1)
        self.deg = _integer(deg if deg is not None else 2, "deg", minimum=1)
        self.toy_n = _integer(toy_n if toy_n is not None else 2, "toy_n",
                              minimum=1)
        self.samples = None if samples is None \
            else _integer(samples, "samples", minimum=1)
        self.seed = _integer(seed if seed is not None else 0, "seed")
        self.out = out if out is not None else "endokit-reports"
        self.cache_dir = cache_dir
        self.plot = bool(plot)
        self.tolerances = dict(TOLERANCE_DEFAULTS)
        for key, value in (tolerances or {}).items():
            if key not in TOLERANCE_DEFAULTS:
                raise ConfigError(
                    "unknown tolerance %r (known: %s)"
                    % (key, ", ".join(sorted(TOLERANCE_DEFAULTS))))
            try:
                bound = float(value)
            except (TypeError, ValueError):
                raise ConfigError("tolerance %s: %r is not a number"
                                  % (key, value))
            if bound <= 0:
                raise ConfigError("tolerance %s must be positive" % key)
            self.tolerances[key] = bound
        self.curve = None
        self.datum = None

    # -- lookups ----------------------------------------------------------

    def sample_count(self, key):
        if self.samples is not None:
            return self.samples
        return SAMPLE_DEFAULTS[key]

    def tolerance(self, key):
        return self.tolerances[key]

    # -- validation -------------------------------------------------------

    def validate(self):
        """Build the domain objects the command needs; ConfigError on any
        invalid parameter.  Returns self for chaining."""
        needs_curve = self.command in ("hitchin", "spectral", "verify-all")
        needs_datum = self.command in ("endoscopy", "whittaker",
                                       "verify-all")
        if needs_curve:
            try:
                self.curve = CurveParams(self.a, self.b, sigma0=self.sigma0)
            except ValueError as exc:
                raise ConfigError(str(exc))
            if self.command == "spectral" and not self.curve.exact:
                raise ConfigError(
                    "spectral checks need rational branch points; "
                    "x^3 + %sx + %s has none" % (self.a, self.b))
            if self.w != "all-singular" and isinstance(self.w, complex):
                raise ConfigError("the fiber selector w must be real or "
                                  "'all-singular'")
        if needs_datum:
            if not _is_prime(self.p):
                raise ConfigError("p = %d is not prime" % self.p)
            if self.m > 1 and self.deg > 1:
                raise ConfigError(
                    "closed-point enumeration beyond degree 1 needs a "
                    "prime base field (m = 1)")
            try:
                field = FiniteField(self.p, self.m)
                curve = EllipticCurveFq(field, self.base_a, self.base_b)
                probe = EndoscopicDatum(curve, self.torsion)
                chi = select_character(probe.cover_group.group,
                                       self.char_order)
                self.datum = EndoscopicDatum(curve, self.torsion,
                                             chi.exponents)
            except ValueError as exc:
                raise ConfigError(str(exc))
        if self.command == "fractional":
            if self.toy_n % 2 or self.toy_n > 64:
                raise ConfigError(
                    "toy_n must be even and at most 64, got %d" % self.toy_n)
        return self

    # -- serialization ----------------------------------------------------

    def echo(self):
        """JSON-safe snapshot of every parameter, for the report header."""
        def show(x):
            if isinstance(x, Fraction):
                return str(x)
            if isinstance(x, complex):
                return repr(x)
            return x

        return {
            "command": self.command,
            "a": show(self.a), "b": show(self.b),
            "sigma0": show(self.sigma0), "w": show(self.w),
            "p": self.p, "m": self.m,
            "base_a": self.base_a, "base_b": self.base_b,
            "torsion": self.torsion, "char_order": self.char_order,
            "deg": self.deg, "toy_n": self.toy_n,
            "samples": self.samples, "seed": self.seed,
            "plot": self.plot,
            "tolerances": {k: self.tolerances[k]
                           for k in sorted(self.tolerances)},
        }


def schema_path():
    return os.path.join(os.path.dirname(__file__), "config_schema.json")


def load_schema():
    with open(schema_path()) as fh:
        return json.load(fh)


def load_config_file(path):
    """Read a JSON config; keys are checked against the shipped schema."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError("cannot read config %s: %s" % (path, exc))
    except ValueError as exc:
        raise ConfigError("config %s is not valid JSON: %s" % (path, exc))
    if not isinstance(doc, dict):
        raise ConfigError("config %s: top level must be an object" % path)
    allowed = set(load_schema()["properties"])
    unknown = sorted(set(doc) - allowed)
    if unknown:
        raise ConfigError("config %s: unknown keys %s"
                          % (path, ", ".join(unknown)))
    return doc


def merge_config(file_values, flag_values):
    """Flags override file values; None flags mean 'not given'."""
    merged = dict(file_values)
    for key, value in flag_values.items():
        if value is not None:
            merged[key] = value
    return merged
