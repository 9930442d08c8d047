"""Registry of named, parameterized quadratic algebras with golden metadata.

Each entry knows how to build its algebra over a requested field, which
parameter constraints it needs, and what the point-scheme cubic, cubic class
and Hilbert prefix are expected to be.  Entries that arise from a
regularity test also carry the skew ring and the quadrics, and entries that
are Ore extensions carry their Ore data.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable

from .commalg import CommPoly
from .errors import ConstraintViolation, NeedsExtension
from .exactfield import Field, Scalar
from .ncpoly import FreeAlgebra
from .parser import parse_scalar
from .quadalg import GradedLinearMap, OreData, QuadraticAlgebra, twist

REGULAR_HILBERT = (1, 3, 6, 10, 15)


@dataclass(frozen=True)
class Param:
    name: str
    default: str = None
    kind: str = "scalar"            # scalar | flag | choice
    choices: tuple = ()
    doc: str = ""


@dataclass(frozen=True)
class Constraint:
    label: str
    holds: Callable                 # (field, params) -> bool


@dataclass(frozen=True)
class Expected:
    value: object
    provenance: str                 # "quoted" (stated in the source) or "derived"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    summary: str
    params: tuple
    builder: Callable               # (field, params) -> dict with "algebra" and extras
    source: str
    default_field: tuple = (0, None)
    constraints: tuple = ()
    field_guard: Callable = None    # (field, params) -> error message or None
    cubic: Callable = None          # (field, params) -> Expected or None
    cubic_class: Callable = None
    hilbert: Callable = None

    def param(self, name):
        for p in self.params:
            if p.name == name:
                return p
        raise KeyError(name)


@dataclass
class BuiltEntry:
    entry: CatalogEntry
    field: Field
    params: dict
    algebra: QuadraticAlgebra
    skew_ring: QuadraticAlgebra = None
    quadrics: list = dc_field(default_factory=list)
    ore: OreData = None
    expected_cubic: Expected = None
    expected_class: Expected = None
    expected_hilbert: Expected = None
    violations: list = dc_field(default_factory=list)
    extras: dict = dc_field(default_factory=dict)


# -- helpers -------------------------------------------------------------------------

def _ctx(field, names):
    ctx = FreeAlgebra(field, names)
    return ctx, ctx.gens()


def _alg(ctx, rels, name):
    return QuadraticAlgebra.from_relations(ctx, rels, name)


def _xyz(field):
    return CommPoly.variables(field, 3)


def _quoted(v):
    return Expected(v, "quoted")


def _derived(v):
    return Expected(v, "derived")


def _regular(field, p):
    return _quoted(REGULAR_HILBERT)


def _char_not(*chars):
    def guard(field, p):
        if field.characteristic in chars:
            return f"characteristic {field.characteristic} is excluded for this entry"
        return None
    return guard


def _needs_i(field, p):
    if field.characteristic == 2:
        return "characteristic 2 is excluded for this entry"
    if field.minpoly is None or field.gen() ** 2 != -1:
        return "the field must be K[t]/(t^2 + 1) so that t is a square root of -1"
    return None


def _cube_root(value: Scalar):
    """A cube root of ``value`` inside its own field, or None."""
    field = value.field
    if field.characteristic:
        for s in field.elements():
            if s ** 3 == value:
                return s
        return None
    if field.minpoly is None:
        fr = value.to_fraction()
        sign = -1 if fr < 0 else 1
        num, den = _icbrt(abs(fr.numerator)), _icbrt(fr.denominator)
        if num is None or den is None:
            return None
        return field(Fraction(sign * num, den))
    return value if value == 1 else None


def _icbrt(n):
    r = round(n ** (1 / 3)) if n else 0
    for c in (r - 1, r, r + 1):
        if c >= 0 and c ** 3 == n:
            return c
    return None


# -- entries -------------------------------------------------------------------------

def _nodal(field, p):
    lam = p["lambda"]
    ctx, (x1, x2, x3) = _ctx(field, ("x1", "x2", "x3"))
    if p["normalized"]:
        rels = [lam * x1 * x2 - x2 * x1,
                lam * x2 * x3 - x3 * x2 + x1 * x1,
                lam * x3 * x1 - x1 * x3 + x2 * x2]
    else:
        k = lam ** 3 - 1
        rels = [lam * x1 * x2 - x2 * x1,
                lam * (lam * x2 * x3 - x3 * x2) + k * x1 * x1,
                lam * (lam * x3 * x1 - x1 * x3) + k * x2 * x2]
    out = {"algebra": _alg(ctx, rels, f"nodal(lambda={lam})")}
    if p["normalized"] and lam:
        bctx, (b1, b2) = _ctx(field, ("x1", "x2"))
        base = _alg(bctx, [lam * b1 * b2 - b2 * b1], "nodal base")
        inv = lam.inverse()
        out["ore"] = OreData(base, GradedLinearMap.diagonal(field, [inv, lam]),
                             [-inv * b2 * b2, b1 * b1], "x3")
    elif not p["normalized"] and lam:
        out["normalizer"] = [[1, 0, 0], [0, 1, 0], [0, 0, (lam ** 3 - 1) / lam]]
    if lam ** 3 == -1 and field.characteristic != 2:
        sctx, (z1, z2, z3) = _ctx(field, ("z1", "z2", "z3"))
        out["skew_ring"] = _alg(sctx, [z1 * z2 + lam * z2 * z1, z2 * z3 + lam * z3 * z2,
                                       z3 * z1 + lam * z1 * z3], "skew ring")
        out["quadrics"] = [z3 * z3, z2 * z2 + z1 * z3, z1 * z1 + z3 * z2]
    return out


def _nodal_cubic(field, p):
    lam = p["lambda"]
    x, y, z = _xyz(field)
    if p["normalized"]:
        return _quoted(lam * x ** 3 + lam * y ** 3 + (lam ** 3 - 1) * x * y * z)
    return _derived(x ** 3 + y ** 3 + x * y * z)


def _nodal_dual(field, p):
    lam = p["lambda"]
    k = lam ** 3 - 1
    ctx, (z1, z2, z3) = _ctx(field, ("z1", "z2", "z3"))
    rels = [z3 * z3, z1 * z2 + lam * z2 * z1, lam * z2 * z2 + k * z1 * z3,
            z2 * z3 + lam * z3 * z2, lam * z1 * z1 + k * z3 * z2, z3 * z1 + lam * z1 * z3]
    return {"algebra": _alg(ctx, rels, f"nodal dual(lambda={lam})")}


def _cuspidal(field, p):
    ctx, (x1, x2, x3) = _ctx(field, ("x1", "x2", "x3"))
    rels = [x1 * x2 - x2 * x1 - x1 * x1,
            x3 * x1 - x1 * x3 - x1 * x1 - 3 * x2 * x2,
            x3 * x2 - x2 * x3 + 3 * x2 * x2 + 2 * x1 * x3 + 2 * x1 * x2]
    bctx, (b1, b2) = _ctx(field, ("x1", "x2"))
    base = _alg(bctx, [b1 * b2 - b2 * b1 - b1 * b1], "cuspidal base")
    ore = OreData(base, GradedLinearMap(field, [[1, 0], [-2, 1]]),
                  [b1 * b1 + 3 * b2 * b2, -2 * b1 * b2 - 3 * b2 * b2], "x3")
    return {"algebra": _alg(ctx, rels, "cuspidal"), "ore": ore}


def _cuspidal_cubic(field, p):
    x, y, z = _xyz(field)
    return _quoted(3 * (y ** 3 + x * x * z))


def _cuspidal_class(field, p):
    return _quoted("IdenticallyZero" if field.characteristic == 3 else "Cuspidal")


def _cusp_dual_family(field, p):
    l1, l2 = p["lambda1"], p["lambda2"]
    ctx, (z1, z2, z3) = _ctx(field, ("z1", "z2", "z3"))
    rels = [z3 * z3,
            z2 * z2 - 3 * l1 ** 2 * l2 * z1 * z3 - 3 * l1 ** 2 * l2 ** 2 * z2 * z3,
            z3 * z2 + l1 ** 2 * z2 * z3,
            z3 * z1 + l1 ** 3 * z1 * z3 + 2 * l1 ** 3 * l2 * z2 * z3,
            z1 * z1 + l1 * l2 * z1 * z2 - l1 ** 3 * l2 ** 3 * z1 * z3,
            z2 * z1 + l1 * z1 * z2 + 2 * l1 ** 3 * l2 ** 3 * z2 * z3]
    return {"algebra": _alg(ctx, rels, f"cusp dual family({l1}, {l2})")}


def _cusp_dual_hilbert(field, p):
    if p["lambda1"] == 1:
        return _quoted((1, 3, 3, 1, 0))
    return None


def _cusp_char3(field, p):
    l1, l2 = p["lambda1"], p["lambda2"]
    ctx, (x1, x2, x3) = _ctx(field, ("x1", "x2", "x3"))
    rels = [x1 * x2 - l1 * x2 * x1 - l2 * x1 * x1,
            x1 * x3 - l1 ** 3 * x3 * x1 + l1 * (1 - l1) * x2 * x2
            + l1 * l2 * (1 + l1) * x2 * x1 + l2 ** 2 * (1 + l2) * x1 * x1,
            x2 * x3 - l1 ** 2 * x3 * x2 + l1 ** 2 * (l1 + l2 - 1) * x3 * x1
            + (l1 ** 2 - l1 + 2 * l2) * x2 * x2 + l2 * (l2 ** 2 - l2 - l1 ** 2 + l1) * x2 * x1]
    return {"algebra": _alg(ctx, rels, f"char-3 cusp candidate({l1}, {l2})")}


def _type_h(field, p):
    i = field.gen()
    nu = p["nu"]
    ctx, (x, y, z) = _ctx(field, ("x", "y", "z"))
    rels = [y * y - x * x, z * y + i * y * z, y * x - x * y - i * z * z]
    sctx, (X, Y, Z) = _ctx(field, ("X", "Y", "Z"))
    S = _alg(sctx, [Y * X + X * Y, Y * Z - i * Z * Y, Z * X - nu * X * Z], "skew ring")
    return {"algebra": _alg(ctx, rels, "type H"), "skew_ring": S,
            "quadrics": [X * Z, i * X * Y - Z * Z, X * X + Y * Y]}


def _type_b(field, p):
    a = p["a"]
    ctx, (x, y, z) = _ctx(field, ("x", "y", "z"))
    rels = [x * y + y * x - z * z + y * y, x * y + y * x - a * z * z + x * x,
            z * x - x * z - a * (y * z - z * y)]
    sctx, (X, Y, Z) = _ctx(field, ("X", "Y", "Z"))
    S = _alg(sctx, [Y * X - X * Y, Y * Z + Z * Y, Z * X + X * Z], "skew ring")
    return {"algebra": _alg(ctx, rels, f"type B(a={a})"), "skew_ring": S,
            "quadrics": [Z * (a * X - Y), X * X + Y * Y - X * Y, a * X * X + Y * Y + Z * Z]}


def _type_b_hilbert(field, p):
    a = p["a"]
    return _quoted(REGULAR_HILBERT) if a * a - a + 1 else None


def _type_a(field, p):
    a, b, c = p["a"], p["b"], p["c"]
    ctx, (x, y, z) = _ctx(field, ("x", "y", "z"))
    rels = [a * x * y + b * y * x + c * z * z, a * y * z + b * z * y + c * x * x,
            a * z * x + b * x * z + c * y * y]
    out = {"algebra": _alg(ctx, rels, f"type A({a}, {b}, {c})")}
    if a ** 3 == b ** 3:
        sctx, (X, Y, Z) = _ctx(field, ("X", "Y", "Z"))
        out["skew_ring"] = _alg(sctx, [a * Y * X - b * X * Y, a * Z * Y - b * Y * Z,
                                       a * X * Z - b * Z * X], "skew ring")
        out["quadrics"] = [c * X * Y - a * Z * Z, c * Y * Z - a * X * X,
                           c * Z * X - a * Y * Y]
    return out


def _type_a_class(field, p):
    return None if field.characteristic == 3 else _quoted("Elliptic")


def _type_a_hilbert(field, p):
    a, b, c = p["a"], p["b"], p["c"]
    if a ** 3 == b ** 3 == c ** 3:
        return None
    return _quoted(REGULAR_HILBERT)


def _skew3(field, p):
    c = p["c"]
    ctx, (x, y, z) = _ctx(field, ("x", "y", "z"))
    rels = [y * z + c * z * y, z * x + c * x * z, x * y + c * y * x]
    return {"algebra": _alg(ctx, rels, f"skew3(c={c})")}


def _skew3_class(field, p):
    c = p["c"]
    return _derived("IdenticallyZero" if c ** 3 == -1 else "Triangle")


def _skew3_cubic(field, p):
    c = p["c"]
    x, y, z = _xyz(field)
    return _derived(CommPoly.constant(field, 0) if c ** 3 == -1 else x * y * z)


def cyclic_skew_twist(field, d, e, f):
    """Automorphism x->l1*y, y->l2*z, z->l3*x (row matrix) with d l1 l3^2 = e l1^2 l2 = f l2^2 l3.

    l1 is fixed to 1, which needs a cube root of e^2/(d f) in the field.
    """
    l3 = _cube_root(e * e / (d * f))
    if l3 is None:
        raise NeedsExtension("twisting constants need a cube root of e^2/(d*f)")
    l2 = d * l3 * l3 / e
    zero, one = field.zero(), field.one()
    return GradedLinearMap(field, [[zero, one, zero], [zero, zero, l2], [l3, zero, zero]])


def _cyclic_lines(field, p):
    d, e, f = p["d"], p["e"], p["f"]
    ctx, (x, y, z) = _ctx(field, ("x", "y", "z"))
    rels = [y * x - d * z * z, z * y - e * x * x, x * z - f * y * y]
    A = _alg(ctx, rels, f"cyclic lines({d}, {e}, {f})")
    out = {"algebra": A}
    try:
        tau = cyclic_skew_twist(field, d, e, f)
    except NeedsExtension:
        return out
    out["twist_to_skew"] = tau
    out["skew_constant"] = skew_constant(twist(A, tau))
    return out


def skew_constant(A: QuadraticAlgebra):
    """The c with A = skew3(c) on the same generators, or None."""
    for r in A.relations:
        if set(r.terms) == {(1, 2), (2, 1)}:
            c = r.terms[(2, 1)] / r.terms[(1, 2)]
            return c if A.same_relations(_skew3(A.field, {"c": c})["algebra"]) else None
    return None


def _cyclic_lines_class(field, p):
    c = _cyclic_lines(field, p).get("skew_constant")
    return None if c is None else _skew3_class(field, {"c": c})


def _cyclic_lines_cubic(field, p):
    c = _cyclic_lines(field, p).get("skew_constant")
    return None if c is None else _skew3_cubic(field, {"c": c})


def _central_ore(field, p):
    case = p["case"]
    al, be, ga = p["alpha"], p["beta"], p["gamma"]
    ctx, (x, y, z) = _ctx(field, ("x", "y", "z"))
    tail = al * x * x + be * x * y + ga * x * z
    if case == "i":
        h = z * y - y * z + y * y + tail
        s, t = field.one(), field.one()
    else:
        q = p["q"]
        h = z * y - q * y * z + tail
        s, t = q, field.zero()
    bctx, (bx, by) = _ctx(field, ("x", "y"))
    base = _alg(bctx, [bx * by - by * bx], "polynomial ring")
    phi = GradedLinearMap(field, [[1, 0], [-ga, s]])
    delta = [bctx.zero(), -t * by * by - al * bx * bx - be * bx * by]
    return {"algebra": _alg(ctx, [x * y - y * x, x * z - z * x, h], f"central Ore extension({case})"),
            "ore": OreData(base, phi, delta, "z")}


def _char3_concurrent(field, p):
    a, c, e = p["a"], p["c"], p["e"]
    ctx, (x, y, z) = _ctx(field, ("x", "y", "z"))
    rels = [x * y - x * x - y * y,
            z * y + x * z - c * x * x - e * y * y,
            z * x - (y - x) * z + a * y * x - c * x * x]
    bctx, (bx, by) = _ctx(field, ("x", "y"))
    base = _alg(bctx, [bx * bx + by * by - bx * by], "char-3 base")
    ore = OreData(base, GradedLinearMap(field, [[-1, 1], [-1, 0]]),
                  [c * bx * bx - a * by * bx, c * bx * bx + e * by * by], "z")
    return {"algebra": _alg(ctx, rels, "char-3 concurrent lines"), "ore": ore}


def _concurrent_dual(field, p):
    a, b, c, e = p["a"], p["b"], p["c"], p["e"]
    d = f = -b
    ctx, (X, Y, Z) = _ctx(field, ("X", "Y", "Z"))
    rels = [Y * X + a * Y * Z, Y * Y + X * Y + e * X * Z + e * Y * Z, X * X + X * Y + c * X * Z,
            Z * Z, Z * Y + Z * X + d * X * Z, Z * X + b * Y * Z, Z * Y + f * Y * Z + f * X * Z]
    return {"algebra": _alg(ctx, rels, "concurrent-lines dual")}


def _concurrent_dual_hilbert(field, p):
    b = p["b"]
    if b * b + b + 1 == 0 and field.characteristic != 3:
        return _quoted((1, 3, 3, 0))
    return None


_GSCA_CASES = ("i", "ii", "iii", "iv", "v", "vi")


def _gsca_mu(field, p):
    from .gsca import MuMatrix
    return MuMatrix.from_upper(field, 3, {(1, 2): p["mu12"], (1, 3): p["mu13"],
                                          (2, 3): p["mu23"]})


def _example_gsca(field, p):
    from .gsca import GscaSpec, gsca_from_definition
    mu = _gsca_mu(field, p)
    a1, a2, a3 = p["alpha1"], p["alpha2"], p["alpha3"]
    zero = field.zero()
    two = field(2)
    M1 = [[two, zero, zero], [zero, zero, a1], [zero, mu[2, 1] * a1, zero]]
    M2 = [[zero, zero, a2], [zero, two, zero], [mu[2, 0] * a2, zero, zero]]
    M3 = [[zero, a3, zero], [mu[1, 0] * a3, zero, zero], [zero, zero, two]]
    res = gsca_from_definition(GscaSpec(mu, [M1, M2, M3]), name=f"example gsca ({p['case']})")
    return {"algebra": res.algebra, "gsca": res}


def _gsca_cubic(field, p):
    case = p["case"]
    m12, m13 = p["mu12"], p["mu13"]
    m23 = p["mu23"]
    a1, a2, a3 = p["alpha1"], p["alpha2"], p["alpha3"]
    x, y, z = _xyz(field)
    if case == "i":
        return _quoted(CommPoly.constant(field, 0))
    if case == "ii":
        return _quoted(x * y * z)
    if case == "iii":
        return _quoted(z ** 3)
    if case == "iv":
        return _quoted(((m13 + m12 * m23) * x * y + a3 * z * z) * z)
    if case == "v":
        return _quoted(a2 * y ** 3 + a3 * m13 * z ** 3 + 2 * m12 * x * y * z)
    return _quoted(a1 * x ** 3 + a2 * m12 * y ** 3 + a3 * z ** 3
                   + (2 * m12 ** 2 - a1 * a2 * a3) * x * y * z)


def _gsca_class(field, p):
    case = p["case"]
    tags = {"i": "IdenticallyZero", "ii": "Triangle", "iii": "TripleLine", "v": "Nodal"}
    if case in tags:
        return _quoted(tags[case])
    if case == "iv":
        return None   # a conic plus a line; secant or tangent depends on the parameters
    if p["alpha1"] * p["alpha2"] * p["alpha3"] != 8 * p["mu12"] ** 2:
        return _quoted("Elliptic")
    return None


def _gsca_constraints():
    def case_is(*cases):
        return lambda p: p["case"] in cases

    def c(label, cases, test):
        applies = case_is(*cases)
        return Constraint(label, lambda f, p: not applies(p) or test(p))

    s = lambda p: p["mu13"] + p["mu12"] * p["mu23"]   # noqa: E731
    return (
        c("alpha1 = alpha2 = alpha3 = 0", ("i", "ii"),
          lambda p: not (p["alpha1"] or p["alpha2"] or p["alpha3"])),
        c("mu13 + mu12*mu23 = 0", ("i", "iii"), lambda p: not s(p)),
        c("mu13 + mu12*mu23 != 0", ("ii", "iv"), lambda p: bool(s(p))),
        c("alpha1 = 0 = alpha2 != alpha3", ("iii", "iv"),
          lambda p: not p["alpha1"] and not p["alpha2"] and bool(p["alpha3"])),
        c("mu13*mu23 = 1", ("iii", "iv"), lambda p: p["mu13"] * p["mu23"] == 1),
        c("alpha1 = 0 != alpha2*alpha3", ("v",),
          lambda p: not p["alpha1"] and bool(p["alpha2"] * p["alpha3"])),
        c("alpha1*alpha2*alpha3 != 0", ("vi",),
          lambda p: bool(p["alpha1"] * p["alpha2"] * p["alpha3"])),
        c("mu12 = mu23, mu12^3 = 1, mu13 = mu12^2", ("v", "vi"),
          lambda p: p["mu12"] == p["mu23"] and p["mu12"] ** 3 == 1
          and p["mu13"] == p["mu12"] ** 2),
        c("alpha1*alpha2*alpha3 + mu12^2 != 0", ("vi",),
          lambda p: bool(p["alpha1"] * p["alpha2"] * p["alpha3"] + p["mu12"] ** 2)),
    )


def _nonzero(*names):
    label = " * ".join(names) + " != 0"

    def holds(f, p):
        v = f.one()
        for n in names:
            v = v * p[n]
        return bool(v)
    return Constraint(label, holds)


_ENTRIES = [
    CatalogEntry(
        "nodal", "one-parameter family with a nodal cubic point scheme",
        (Param("lambda", "2"), Param("normalized", "1", "flag",
                                     doc="0 keeps the relations before rescaling x3")),
        _nodal, "nodal point-scheme classification",
        constraints=(Constraint("lambda*(lambda^3 - 1) != 0",
                                lambda f, p: bool(p["lambda"] * (p["lambda"] ** 3 - 1))),),
        cubic=_nodal_cubic, cubic_class=lambda f, p: _quoted("Nodal"), hilbert=_regular),
    CatalogEntry(
        "nodal_dual", "Koszul dual relations of the nodal family (in z1, z2, z3)",
        (Param("lambda", "2"),), _nodal_dual, "nodal point-scheme classification, dual basis",
        constraints=(Constraint("lambda*(lambda^3 - 1) != 0",
                                lambda f, p: bool(p["lambda"] * (p["lambda"] ** 3 - 1))),),
        hilbert=lambda f, p: _quoted((1, 3, 3, 1, 0))),
    CatalogEntry(
        "cuspidal", "the algebra with a cuspidal cubic point scheme", (), _cuspidal,
        "cuspidal point-scheme classification",
        cubic=_cuspidal_cubic, cubic_class=_cuspidal_class, hilbert=_regular),
    CatalogEntry(
        "cusp_dual_family", "dual relations for the two-parameter cusp automorphisms",
        (Param("lambda1", "1"), Param("lambda2", "1")), _cusp_dual_family,
        "cuspidal point-scheme classification, dual basis",
        constraints=(_nonzero("lambda1"),), field_guard=_char_not(3),
        hilbert=_cusp_dual_hilbert),
    CatalogEntry(
        "cusp_char3_candidate", "relation candidates on the char-3 cuspidal curve",
        (Param("lambda1", "2"), Param("lambda2", "1")), _cusp_char3,
        "cuspidal classification, characteristic-3 branch", default_field=(3, None),
        constraints=(Constraint("lambda1*(lambda1 - 1) != 0",
                                lambda f, p: bool(p["lambda1"] * (p["lambda1"] - 1))),),
        field_guard=lambda f, p: None if f.characteristic == 3 else "requires characteristic 3",
        hilbert=lambda f, p: _quoted((1, 3, 6, 9))),
    CatalogEntry(
        "typeH", "type H elliptic algebra over Q(i)", (Param("nu", "1", doc="skew ring constant"),),
        _type_h, "type H elliptic algebras", default_field=(0, (1, 0, 1)),
        constraints=(_nonzero("nu"),), field_guard=_needs_i, hilbert=_regular),
    CatalogEntry(
        "typeB", "type B elliptic algebras", (Param("a", "2"),), _type_b,
        "type B elliptic algebras",
        constraints=(Constraint("a*(a - 1) != 0", lambda f, p: bool(p["a"] * (p["a"] - 1))),
                     Constraint("a^2 - a + 1 != 0",
                                lambda f, p: bool(p["a"] ** 2 - p["a"] + 1))),
        field_guard=_char_not(2), hilbert=_type_b_hilbert),
    CatalogEntry(
        "typeA", "type A elliptic algebras",
        (Param("a", "1"), Param("b", "1"), Param("c", "2")), _type_a, "type A elliptic algebras",
        constraints=(_nonzero("a", "b", "c"),
                     Constraint("(3abc)^3 != (a^3 + b^3 + c^3)^3",
                                lambda f, p: (3 * p["a"] * p["b"] * p["c"]) ** 3
                                != (p["a"] ** 3 + p["b"] ** 3 + p["c"] ** 3) ** 3)),
        cubic_class=_type_a_class, hilbert=_type_a_hilbert),
    CatalogEntry(
        "skew3", "skew polynomial ring yz + c zy = zx + c xz = xy + c yx = 0",
        (Param("c", "2"),), _skew3, "three-line case, twisted form",
        constraints=(_nonzero("c"),), cubic=_skew3_cubic, cubic_class=_skew3_class,
        hilbert=_regular),
    CatalogEntry(
        "lemma16", "yx = d z^2, zy = e x^2, xz = f y^2", (Param("d", "2"), Param("e", "1"),
                                                          Param("f", "4")),
        _cyclic_lines, "three non-concurrent lines cyclically permuted",
        constraints=(_nonzero("d", "e", "f"),),
        cubic=_cyclic_lines_cubic, cubic_class=_cyclic_lines_class, hilbert=_regular),
    CatalogEntry(
        "prop12", "Ore extensions of k[x, y] with x central",
        (Param("case", "ii", "choice", ("i", "ii")), Param("q", "2"), Param("alpha", "1"),
         Param("beta", "1"), Param("gamma", "1")),
        _central_ore, "invariant-line case: Ore extension of the polynomial ring",
        constraints=(Constraint("q != 0", lambda f, p: p["case"] == "i" or bool(p["q"])),),
        hilbert=_regular),
    CatalogEntry(
        "prop2_star", "char-3 algebra on three concurrent lines",
        (Param("a", "1"), Param("c", "1"), Param("e", "1")), _char3_concurrent,
        "concurrent-lines case in characteristic 3", default_field=(3, None),
        constraints=(Constraint("c != e + a", lambda f, p: p["c"] != p["e"] + p["a"]),),
        field_guard=lambda f, p: None if f.characteristic == 3 else "requires characteristic 3",
        cubic=lambda f, p: _quoted(_xyz(f)[0] * _xyz(f)[1] * (_xyz(f)[0] - _xyz(f)[1])),
        cubic_class=lambda f, p: _quoted("ConcurrentLines"),
        hilbert=lambda f, p: _quoted((1, 3, 6, 10))),
    CatalogEntry(
        "prop17_dual", "seven dual relations of the concurrent-lines case (d = f = -b)",
        (Param("a", "0"), Param("b", "t"), Param("c", "1"), Param("e", "0")), _concurrent_dual,
        "concurrent-lines case, dual relations", default_field=(0, (1, 1, 1)),
        constraints=(_nonzero("b"),), hilbert=_concurrent_dual_hilbert),
    CatalogEntry(
        "example_gsca", "graded skew Clifford algebras x_i x_j + mu_ij x_j x_i = alpha_k x_k^2",
        (Param("case", "vi", "choice", _GSCA_CASES), Param("mu12", "1"), Param("mu13", "1"),
         Param("mu23", "1"), Param("alpha1", "1"), Param("alpha2", "1"), Param("alpha3", "1")),
        _example_gsca, "graded skew Clifford algebra examples",
        constraints=(_nonzero("mu12", "mu13", "mu23"),) + _gsca_constraints(),
        field_guard=_char_not(2), cubic=_gsca_cubic, cubic_class=_gsca_class, hilbert=_regular),
]

REGISTRY = {e.name: e for e in _ENTRIES}


def entry_names():
    return sorted(REGISTRY)


def get_entry(name) -> CatalogEntry:
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(entry_names())}") from None


def default_field(name) -> Field:
    char, minpoly = get_entry(name).default_field
    return Field(char, minpoly)


def _coerce_param(param: Param, value, field):
    if param.kind == "flag":
        if isinstance(value, str):
            v = value.strip().lower()
            if v in ("1", "true", "yes", "on"):
                return True
            if v in ("0", "false", "no", "off"):
                return False
            raise ValueError(f"parameter {param.name} expects 0/1, got {value!r}")
        return bool(value)
    if param.kind == "choice":
        value = str(value).strip()
        if value not in param.choices:
            raise ValueError(f"parameter {param.name} must be one of {', '.join(param.choices)}")
        return value
    if isinstance(value, Scalar):
        return field(value)
    if isinstance(value, str):
        return parse_scalar(value, field)
    return field(value)


def resolve_params(entry: CatalogEntry, params, field):
    params = dict(params or {})
    unknown = set(params) - {p.name for p in entry.params}
    if unknown:
        raise ValueError(f"unknown parameter(s) for {entry.name}: {', '.join(sorted(unknown))}")
    out = {}
    for p in entry.params:
        raw = params.get(p.name, p.default)
        out[p.name] = _coerce_param(p, raw, field)
    return out


def build(name, params=None, field=None, check_constraints=True) -> BuiltEntry:
    """Build a catalog algebra with its expected metadata.

    Constraint failures raise ConstraintViolation unless ``check_constraints``
    is False, in which case they are recorded on the result.
    """
    entry = get_entry(name)
    field = field if field is not None else default_field(name)
    p = resolve_params(entry, params, field)
    if entry.field_guard:
        msg = entry.field_guard(field, p)
        if msg:
            raise ConstraintViolation("field", f"{name}: {msg}")
    violations = [c.label for c in entry.constraints if not c.holds(field, p)]
    if violations and check_constraints:
        raise ConstraintViolation(violations[0], f"{name}: constraint {violations[0]} fails")
    parts = entry.builder(field, p)
    built = BuiltEntry(entry, field, p, parts.pop("algebra"),
                       skew_ring=parts.pop("skew_ring", None),
                       quadrics=parts.pop("quadrics", []), ore=parts.pop("ore", None),
                       violations=violations, extras=parts)
    for attr, fn in (("expected_cubic", entry.cubic), ("expected_class", entry.cubic_class),
                     ("expected_hilbert", entry.hilbert)):
        if fn is not None and not violations:
            setattr(built, attr, fn(field, p))
    return built


def build_algebra(name, params=None, field=None, check_constraints=True) -> QuadraticAlgebra:
    return build(name, params, field, check_constraints).algebra
