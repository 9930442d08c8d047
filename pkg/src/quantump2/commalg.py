"""Commutative polynomials in a few variables and projective point geometry.

Polynomials are sparse maps from exponent tuples to Scalars. Groebner bases
use grevlex by default; lex is available for elimination. Zero sets are
found chart by chart (z = 1, then z = 0 & y = 1, then (1:0:0)) with at most
one quadratic field extension adjoined on the fly.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations, product
from math import gcd

from .errors import (BothZero, InhomogeneousInput, NeedsExtension,
                     SingularMatrix, WrongDegree)
from .exactfield import Field, Scalar
from .linalg import det
from .ncpoly import format_terms
from . import univariate as uv

DEFAULT_NAMES = ("x", "y", "z")


def grevlex_key(e):
    return (sum(e), tuple(-a for a in reversed(e)))


def lex_key(e):
    return tuple(e)


ORDERS = {"grevlex": grevlex_key, "lex": lex_key}


def _acc(out, m, c):
    v = out.get(m)
    v = c if v is None else v + c
    if v:
        out[m] = v
    else:
        out.pop(m, None)


class CommPoly:
    """Immutable sparse commutative polynomial."""

    __slots__ = ("field", "terms", "nvars", "names")

    def __init__(self, field: Field, terms: dict, nvars=3, names=None):
        self.field = field
        self.terms = {tuple(e): c for e, c in terms.items() if c}
        self.nvars = nvars
        self.names = tuple(names) if names else (DEFAULT_NAMES[:nvars] if nvars <= 3
                                                 else tuple(f"u{k + 1}" for k in range(nvars)))

    # -- constructors -----------------------------------------------------
    @classmethod
    def constant(cls, field, value, nvars=3, names=None):
        return cls(field, {(0,) * nvars: field(value)}, nvars, names)

    @classmethod
    def var(cls, field, k, nvars=3, names=None):
        e = [0] * nvars
        e[k] = 1
        return cls(field, {tuple(e): field.one()}, nvars, names)

    @classmethod
    def variables(cls, field, nvars=3, names=None):
        return [cls.var(field, k, nvars, names) for k in range(nvars)]

    def _new(self, terms):
        return CommPoly(self.field, terms, self.nvars, self.names)

    # -- arithmetic ----------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, CommPoly):
            return other
        if isinstance(other, (int, Scalar)) or hasattr(other, "numerator"):
            return CommPoly.constant(self.field, other, self.nvars, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _acc(out, tuple(a + b for a, b in zip(m1, m2)), c1 * c2)
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = CommPoly.constant(self.field, 1, self.nvars, self.names)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, CommPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- queries -------------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=None)

    def is_homogeneous(self):
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_degree(self):
        degs = {sum(m) for m in self.terms}
        if len(degs) > 1:
            raise InhomogeneousInput(f"{self} is not homogeneous")
        return degs.pop() if degs else None

    def coeff(self, e):
        return self.terms.get(tuple(e), self.field.zero())

    def leading_monomial(self, order="grevlex"):
        return max(self.terms, key=ORDERS[order]) if self.terms else None

    def monic(self, order="grevlex"):
        if not self.terms:
            return self
        inv = self.terms[self.leading_monomial(order)].inverse()
        return self._new({m: c * inv for m, c in self.terms.items()})

    def primitive(self):
        """Scalar multiple fixed up to sign: coprime integers over Q, monic otherwise."""
        if not self.terms:
            return self
        f = self.field
        lead = self.terms[self.leading_monomial()]
        if f.characteristic or f.minpoly is not None:
            return self.monic()
        fracs = [c.to_fraction() for c in self.terms.values()]
        den = 1
        for q in fracs:
            den = den * q.denominator // gcd(den, q.denominator)
        g = 0
        for q in fracs:
            g = gcd(g, int(q * den))
        scale = Fraction(den, g) * (1 if lead.to_fraction() > 0 else -1)
        return self._new({m: c * f(scale) for m, c in self.terms.items()})

    def diff(self, k):
        out = {}
        for m, c in self.terms.items():
            if m[k]:
                e = list(m)
                e[k] -= 1
                _acc(out, tuple(e), c * m[k])
        return self._new(out)

    def gradient(self):
        return [self.diff(k) for k in range(self.nvars)]

    def evaluate(self, point):
        total = None
        for m, c in self.terms.items():
            term = c
            for v, a in zip(point, m):
                if a:
                    term = term * v ** a
            total = term if total is None else total + term
        if total is None:
            return (point[0] * 0) if point and isinstance(point[0], Scalar) else self.field.zero()
        return total

    def substitute(self, k, value):
        """Set variable k to a scalar, keeping the variable count."""
        field = value.field if isinstance(value, Scalar) and value.field.degree > 1 else self.field
        value = field(value)
        out = {}
        for m, c in self.terms.items():
            e = list(m)
            a = e[k]
            e[k] = 0
            _acc(out, tuple(e), field(c) * value ** a)
        return CommPoly(field, out, self.nvars, self.names)

    def with_field(self, field):
        if field == self.field:
            return self
        return CommPoly(field, {m: field(c) for m, c in self.terms.items()},
                        self.nvars, self.names)

    def univariate(self, k):
        """Coefficient list in variable k (other variables must be absent)."""
        deg = max((m[k] for m in self.terms), default=-1)
        out = [self.field.zero()] * (deg + 1)
        for m, c in self.terms.items():
            if any(a for j, a in enumerate(m) if j != k):
                raise ValueError("polynomial is not univariate")
            out[m[k]] = c
        return uv.trim(out)

    def sorted_terms(self, order="grevlex"):
        return sorted(self.terms.items(), key=lambda kv: ORDERS[order](kv[0]), reverse=True)

    def monomial_text(self, m):
        parts = []
        for nm, a in zip(self.names, m):
            if a == 1:
                parts.append(nm)
            elif a:
                parts.append(f"{nm}^{a}")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        return format_terms(self.sorted_terms(), self.monomial_text)

    def __repr__(self):
        return f"CommPoly({self})"


def proportional(f: CommPoly, g: CommPoly) -> bool:
    """f = c*g for a nonzero scalar c (two zero polynomials count as proportional)."""
    if not f.terms or not g.terms:
        return not f.terms and not g.terms
    if set(f.terms) != set(g.terms):
        return False
    m = next(iter(f.terms))
    ratio = f.terms[m] / g.terms[m]
    return all(f.terms[k] == ratio * g.terms[k] for k in f.terms)


def substitute_linear(f: CommPoly, m) -> CommPoly:
    """g(u) = f(m u): variable i becomes sum_j m[i][j] * var_j."""
    field = f.field
    m = [[field(v) for v in row] for row in (m.matrix if hasattr(m, "matrix") else m)]
    n = f.nvars
    if len(m) != n or not det(m):
        raise SingularMatrix("substitution matrix is not invertible")
    images = [sum((CommPoly.var(field, j, n, f.names) * m[i][j] for j in range(n) if m[i][j]),
                  CommPoly.constant(field, 0, n, f.names)) for i in range(n)]
    out = CommPoly.constant(field, 0, n, f.names)
    powers = [{0: CommPoly.constant(field, 1, n, f.names)} for _ in range(n)]

    def power(i, a):
        cache = powers[i]
        if a not in cache:
            cache[a] = power(i, a - 1) * images[i]
        return cache[a]

    for e, c in f.terms.items():
        term = CommPoly.constant(field, c, n, f.names)
        for i, a in enumerate(e):
            if a:
                term = term * power(i, a)
        out = out + term
    return out


# -- Groebner bases --------------------------------------------------------------

def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _reduce(p, basis, key):
    """Full reduction of dict p by basis [(lm, monic dict)]."""
    p = dict(p)
    rem = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, g in basis:
            if _divides(lm, m):
                q = tuple(a - b for a, b in zip(m, lm))
                for gm, gc in g.items():
                    _acc(p, tuple(a + b for a, b in zip(gm, q)), -c * gc)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _monic(p, key):
    lm = max(p, key=key)
    inv = p[lm].inverse()
    return lm, {m: c * inv for m, c in p.items()}


def _spoly(f, g, lf, lg):
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    qf = tuple(a - b for a, b in zip(lcm, lf))
    qg = tuple(a - b for a, b in zip(lcm, lg))
    out = {}
    for m, c in f.items():
        _acc(out, tuple(a + b for a, b in zip(m, qf)), c)
    for m, c in g.items():
        _acc(out, tuple(a + b for a, b in zip(m, qg)), -c)
    return out


def comm_groebner(gens, order="grevlex"):
    """Reduced Groebner basis, monic, sorted by increasing leading monomial."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    key = ORDERS[order]
    proto = gens[0]
    basis = []
    pairs = []
    for g in gens:
        r = _reduce(g.terms, basis, key)
        if r:
            lm, mono = _monic(r, key)
            for k in range(len(basis)):
                pairs.append((k, len(basis)))
            basis.append((lm, mono))
    while pairs:
        pairs.sort(key=lambda ij: key(tuple(max(a, b) for a, b in
                                             zip(basis[ij[0]][0], basis[ij[1]][0]))))
        i, j = pairs.pop(0)
        (li, gi), (lj, gj) = basis[i], basis[j]
        if all(not (a and b) for a, b in zip(li, lj)):
            continue  # coprime leading monomials
        r = _reduce(_spoly(gi, gj, li, lj), basis, key)
        if r:
            lm, mono = _monic(r, key)
            for k in range(len(basis)):
                pairs.append((k, len(basis)))
            basis.append((lm, mono))
    # minimalize then interreduce
    minimal = [(lm, g) for k, (lm, g) in enumerate(basis)
               if not any(_divides(l2, lm) and (l2 != lm or k2 < k)
                          for k2, (l2, _) in enumerate(basis) if k2 != k)]
    reduced = []
    for k, (lm, g) in enumerate(minimal):
        others = [b for k2, b in enumerate(minimal) if k2 != k]
        tail = _reduce({m: c for m, c in g.items() if m != lm}, others, key)
        tail[lm] = g[lm]
        reduced.append((lm, tail))
    reduced.sort(key=lambda lg: key(lg[0]))
    return [CommPoly(proto.field, g, proto.nvars, proto.names) for _, g in reduced]


def reduce_by(p: CommPoly, basis, order="grevlex") -> CommPoly:
    key = ORDERS[order]
    pairs = [(g.leading_monomial(order), g.monic(order).terms) for g in basis]
    return CommPoly(p.field, _reduce(p.terms, pairs, key), p.nvars, p.names)


def in_ideal(p: CommPoly, gens, order="grevlex") -> bool:
    return not reduce_by(p, comm_groebner(gens, order), order)


# -- projective emptiness ----------------------------------------------------------

@dataclass
class EmptinessResult:
    status: str                      # "Empty" | "NonEmpty" | "Inconclusive"
    certificate: dict = dc_field(default_factory=dict)
    witness: list = None
    field: Field = None
    note: str = ""

    @property
    def is_empty(self):
        return self.status == "Empty"


def pure_power_exponents(gb):
    """Smallest N_i with var_i^N_i a leading monomial of the Groebner basis."""
    out = {}
    for g in gb:
        lm = g.leading_monomial()
        nz = [k for k, a in enumerate(lm) if a]
        if len(nz) == 1:
            k = nz[0]
            out[k] = min(out.get(k, lm[k]), lm[k])
    return out


def projective_empty(gens, power_bound=12, want_witness=True) -> EmptinessResult:
    """Decide whether homogeneous polynomials have a common projective zero.

    The zero set over the algebraic closure is empty exactly when each
    variable has a pure power among the grevlex leading monomials; the
    certificate records those exponents.
    """
    gens = [g for g in gens if g]
    if not gens:
        return EmptinessResult("NonEmpty", note="no equations")
    for g in gens:
        if not g.is_homogeneous():
            raise InhomogeneousInput(f"{g} is not homogeneous")
    n = gens[0].nvars
    gb = comm_groebner(gens)
    powers = pure_power_exponents(gb)
    names = gens[0].names
    cert = {names[k]: e for k, e in sorted(powers.items())}
    if len(powers) == n:
        if max(powers.values()) > power_bound:
            return EmptinessResult("Inconclusive", cert,
                                   note=f"pure powers exceed bound {power_bound}")
        return EmptinessResult("Empty", cert)
    result = EmptinessResult("NonEmpty", cert,
                             note="some variable has no pure power in the ideal")
    if want_witness and n == 3:
        try:
            pts, fld = find_point(gens)
            if pts:
                result.witness, result.field = pts, fld
        except NeedsExtension as exc:
            result.note = f"witness needs a larger extension: {exc}"
    return result


# -- point finding ---------------------------------------------------------------------

class _Extend(Exception):
    def __init__(self, minpoly):
        super().__init__("extension needed")
        self.minpoly = minpoly


class _PositiveDim(Exception):
    pass


def _roots_or_extend(f, field):
    """Roots of univariate f; signal a quadratic extension if one is needed."""
    f = uv.trim(f)
    if not f:
        raise _PositiveDim()
    if len(f) == 1:
        return []
    rts, residue = uv.roots_and_residue(f)
    for g, _ in residue:
        if len(g) == 3 and field.is_prime_field:
            raise _Extend(tuple(c.c[0] for c in uv.pmonic(g)))
        raise NeedsExtension(f"root of degree-{len(g) - 1} factor {uv.format_univariate(g, 'x')} "
                             f"lies outside {field.describe()}")
    return [r for r, _ in rts]


def _gcd_all(polys):
    g = []
    for p in polys:
        g = uv.pgcd(g, p) if g else uv.trim(p)
    return uv.pmonic(g) if g else []


def _affine_points(polys, field):
    """Common zeros in the chart z = 1 (variables x, y)."""
    one = field.one()
    aff = [p.substitute(2, one) for p in polys]
    gb = comm_groebner(aff, "lex")
    if not gb:
        raise _PositiveDim()
    if any(sum(g.leading_monomial("lex")) == 0 for g in gb):
        return []
    elim = [g for g in gb if all(m[0] == 0 for m in g.terms)]
    if not elim:
        raise _PositiveDim()
    points = []
    for y0 in _roots_or_extend(_gcd_all([g.univariate(1) for g in elim]), field):
        fibre = [g.substitute(1, y0) for g in gb]
        xs = _gcd_all([g.univariate(0) for g in fibre if g])
        if not any(g for g in fibre):
            raise _PositiveDim()
        for x0 in _roots_or_extend(xs, field):
            points.append([x0, y0, one])
    return points


def _points_once(polys, field):
    polys = [p.with_field(field) for p in polys]
    one, zero = field.one(), field.zero()
    points = _affine_points(polys, field)
    # line z = 0, chart y = 1
    line = [p.substitute(2, zero).substitute(1, one) for p in polys]
    xs = _gcd_all([p.univariate(0) for p in line if p])
    if all(not p for p in line):
        raise _PositiveDim()
    for x0 in _roots_or_extend(xs, field):
        points.append([x0, one, zero])
    if all(not p.evaluate([one, zero, zero]) for p in polys):
        points.append([one, zero, zero])
    return points


def projective_points(polys, field=None):
    """All common projective zeros of a finite zero set.

    Returns ``(points, field)`` where ``field`` may be a quadratic extension of
    the input field. Raises :class:`NeedsExtension` when a deeper extension
    is needed and ``ValueError`` when the zero set is positive dimensional.
    """
    field = field or polys[0].field
    try:
        return _points_once(polys, field), field
    except _Extend as ext:
        if not field.is_prime_field:
            raise NeedsExtension("a second field extension would be needed")
        bigger = Field(field.characteristic, ext.minpoly)
        try:
            return _points_once(polys, bigger), bigger
        except _Extend as ext2:
            raise NeedsExtension("a second field extension would be needed") from ext2
    except _PositiveDim:
        raise PositiveDimensionalError("zero set is positive dimensional") from None


class PositiveDimensionalError(ValueError):
    pass


def find_point(polys, attempts=6):
    """Some projective zero of the homogeneous polynomials (cutting by lines if needed)."""
    import random
    rng = random.Random(2024)
    field = polys[0].field
    extra = []
    for _ in range(attempts):
        try:
            pts, fld = projective_points(polys + extra, field)
        except PositiveDimensionalError:
            line = sum((CommPoly.var(field, k) * field(rng.randint(-4, 4)) for k in range(3)),
                       CommPoly.constant(field, 0))
            if line:
                extra.append(line)
            continue
        if pts:
            return pts[:1], fld
        if extra:
            extra.pop()
        else:
            return [], field
    return [], field


def normalize_point(p):
    """Scale so the last nonzero coordinate is 1."""
    for v in reversed(p):
        if v:
            inv = v.inverse()
            return [c * inv for c in p]
    raise ValueError("zero vector is not a projective point")


# -- singular loci ------------------------------------------------------------------------

@dataclass
class SingularLocus:
    kind: str                        # Smooth | FinitePoints | PositiveDimensional | NotACurve
    points: list = dc_field(default_factory=list)
    field: Field = None
    ideal: list = dc_field(default_factory=list)


def singular_ideal(f: CommPoly):
    return [f] + [g for g in f.gradient() if g]


def singular_locus(f: CommPoly) -> SingularLocus:
    if not f:
        return SingularLocus("NotACurve", field=f.field)
    if not f.is_homogeneous() or f.homogeneous_degree() != 3:
        raise WrongDegree("singular_locus expects a homogeneous cubic")
    ideal = singular_ideal(f)
    gb = comm_groebner(ideal)
    if len(pure_power_exponents(gb)) == 3:
        return SingularLocus("Smooth", field=f.field, ideal=gb)
    try:
        pts, fld = projective_points(ideal)
    except PositiveDimensionalError:
        return SingularLocus("PositiveDimensional", field=f.field, ideal=gb)
    return SingularLocus("FinitePoints", pts, fld, gb)


# -- binary forms -------------------------------------------------------------------------

class BinaryForm:
    """Homogeneous form of degree d in (x, y): coeffs[k] multiplies x^k y^(d-k)."""

    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field, degree, coeffs):
        coeffs = [field(c) for c in coeffs]
        if len(coeffs) != degree + 1:
            raise ValueError("need degree + 1 coefficients")
        self.field = field
        self.degree = degree
        self.coeffs = coeffs

    @classmethod
    def from_commpoly(cls, p: CommPoly, i=0, j=1):
        d = p.homogeneous_degree() or 0
        coeffs = [p.field.zero()] * (d + 1)
        for m, c in p.terms.items():
            if any(a for k, a in enumerate(m) if k not in (i, j)):
                raise ValueError("form involves a third variable")
            coeffs[m[i]] = c
        return cls(p.field, d, coeffs)

    def is_zero(self):
        return not any(self.coeffs)

    def dehomogenize(self):
        return uv.trim(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, BinaryForm) and self.degree == other.degree
                and self.coeffs == other.coeffs)

    def to_commpoly(self, nvars=3, i=0, j=1):
        terms = {}
        for k, c in enumerate(self.coeffs):
            e = [0] * nvars
            e[i] += k
            e[j] += self.degree - k
            terms[tuple(e)] = c
        return CommPoly(self.field, terms, nvars)

    def __str__(self):
        return str(self.to_commpoly())

    __repr__ = __str__


def binary_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd of two zero forms")
    if f.is_zero() or g.is_zero():
        h = g if f.is_zero() else f
        top = next(c for c in reversed(h.coeffs) if c)
        return BinaryForm(h.field, h.degree, [c / top for c in h.coeffs])
    fd, gd = f.dehomogenize(), g.dehomogenize()
    y_power = min(f.degree - uv.degree(fd), g.degree - uv.degree(gd))
    d = uv.pgcd(fd, gd)
    deg = uv.degree(d) + y_power
    return BinaryForm(f.field, deg, list(d) + [f.field.zero()] * y_power)


# -- brute force ----------------------------------------------------------------------------

def projective_points_fq(field):
    """All points of P^2 over a finite field, normalized."""
    elems = list(field.elements())
    one, zero = field.one(), field.zero()
    for a, b in product(elems, repeat=2):
        yield [a, b, one]
    for a in elems:
        yield [a, one, zero]
    yield [one, zero, zero]


def enumerate_zeros(polys, field):
    return [p for p in projective_points_fq(field)
            if all(not f.evaluate(p) for f in polys)]


def minors(matrix, k):
    """All k x k minors of a matrix of ring elements (rows x cols)."""
    from .linalg import det_laplace
    rows, cols = len(matrix), len(matrix[0])
    out = []
    for rs in combinations(range(rows), k):
        for cs in combinations(range(cols), k):
            out.append(det_laplace([[matrix[r][c] for c in cs] for r in rs]))
    return out
