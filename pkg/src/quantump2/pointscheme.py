"""Point schemes of quadratic algebras and a classifier for plane cubics.

Each degree-2 relation ``sum c_ij x_i x_j`` becomes the bilinear form
``sum c_ij u_i v_j``. Stacking the forms gives a matrix of linear forms
``M(u)`` with ``M(u) v`` equal to the vector of form values, so the cubic
divisor of a 3-relation algebra is ``det M(u)`` and the automorphism sends a
point ``p`` to the null vector of ``M(p)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .commalg import (BinaryForm, CommPoly, binary_gcd, enumerate_zeros,
                      normalize_point, singular_locus, substitute_linear)
from .errors import (DegenerateSampleSet, NeedsExtension, NotOnScheme, NotSquare,
                     RankDeficient, WrongDegree)
from .linalg import cross, det, det_laplace, identity, inverse, matvec, nullspace, rank
from . import univariate as uv


@dataclass
class BilinearSystem:
    field: object
    n: int
    coeffs: list          # coeffs[s][i][j]: coefficient of x_i x_j in relation s

    @property
    def m(self):
        return len(self.coeffs)

    def matrix(self):
        """M(u) as a matrix of linear forms: M[s][j] = sum_i c^s_ij u_i."""
        u = CommPoly.variables(self.field, self.n)
        zero = CommPoly.constant(self.field, 0, self.n)
        return [[sum((u[i] * c[i][j] for i in range(self.n) if c[i][j]), zero)
                 for j in range(self.n)] for c in self.coeffs]

    def evaluate(self, p):
        """Scalar matrix M(p)."""
        return [[sum((p[i] * c[i][j] for i in range(self.n)), self.field.zero())
                 for j in range(self.n)] for c in self.coeffs]

    def form_values(self, p, q):
        return matvec(self.evaluate(p), q)


def multilinearize(A) -> BilinearSystem:
    n = A.ngens
    field = A.field
    coeffs = []
    for r in A.relations:
        c = [[field.zero()] * n for _ in range(n)]
        for (i, j), v in r.terms.items():
            c[i][j] = v
        coeffs.append(c)
    return BilinearSystem(field, n, coeffs)


def pointscheme_cubic(system: BilinearSystem) -> CommPoly:
    if system.m != 3 or system.n != 3:
        raise NotSquare(f"point-scheme cubic needs a 3x3 system, got {system.m}x{system.n}")
    return det_laplace(system.matrix())


def projectively_equal(p, q):
    return not any(cross(p, q)) and any(p) and any(q)


def sigma_eval(system: BilinearSystem, p):
    """The unique q with every form vanishing at (p, q)."""
    if system.m != system.n:
        raise NotSquare("sigma needs as many relations as generators")
    mp = system.evaluate(p)
    rk = rank(mp)
    if rk == system.n:
        raise NotOnScheme(f"M(p) is invertible at {_fmt(p)}")
    if rk < system.n - 1:
        raise RankDeficient(f"M(p) has rank {rk} at {_fmt(p)}; the image is not a single point")
    return normalize_point(nullspace(mp)[0])


def _fmt(p):
    return "(" + ", ".join(str(c) for c in p) + ")"


def verify_graph(system: BilinearSystem, samples) -> bool:
    for p in samples:
        q = sigma_eval(system, p)
        if any(system.form_values(p, q)):
            return False
    return True


# -- sampling points on the scheme --------------------------------------------------

def chord_point(f: CommPoly, p, q):
    """Third intersection of f with the line pq, where f(p) = 0.

    ``f(s p + t q)`` is a binary cubic; the factor ``t`` (point p) is removed,
    as is ``s`` when q is also on the curve, and a remaining linear factor
    gives a new point. Returns None if the line lies in the curve or no
    single new point exists.
    """
    coeffs = _restrict_to_line(f, p, q)          # coeffs[k] multiplies s^k t^(3-k)
    if not any(coeffs):
        return None
    a0, a1, a2, a3 = coeffs
    if a3:
        return None                              # p is not on the curve
    if a0:
        if a2:
            return None
        # f = t^2 (a1 s + a0 t) with a2 = 0: p singular
        s, t = a0, -a1
    else:
        # f = s t (a2 s + a1 t)
        if not a2:
            return None
        s, t = a1, -a2
    r = [s * x + t * y for x, y in zip(p, q)]
    if not any(r):
        return None
    return normalize_point(r)


def _restrict_to_line(f, p, q):
    field = p[0].field
    s_t = [field.zero()] * 4
    for e, c in f.terms.items():
        # prod_i (s p_i + t q_i)^e_i expanded as a binary form
        poly = [field.one()]                     # coefficients in s, low to high, degree tracked
        deg = 0
        for i, a in enumerate(e):
            for _ in range(a):
                new = [field.zero()] * (deg + 2)
                for k, v in enumerate(poly):
                    new[k + 1] = new[k + 1] + v * p[i]
                    new[k] = new[k] + v * q[i]
                poly = new
                deg += 1
        for k, v in enumerate(poly):
            s_t[k] = s_t[k] + c * v
    return s_t


def sample_points(system_or_cubic, count=8, rng=None, field=None, max_tries=400):
    """Points on the cubic where the system has rank n - 1 (when a system is given)."""
    rng = rng or random.Random(7)
    system = system_or_cubic if isinstance(system_or_cubic, BilinearSystem) else None
    f = pointscheme_cubic(system) if system else system_or_cubic
    field = field or (system.field if system else f.field)
    out = []

    def good(p):
        if any(projectively_equal(p, q) for q in out):
            return False
        if f.evaluate(p):
            return False
        if system is not None:
            return rank(system.evaluate(p)) == system.n - 1
        return True

    if field.characteristic and field.order <= 4096:
        pts = enumerate_zeros([f], field) if f else _all_points(field)
        rng.shuffle(pts)
        for p in pts:
            if good(p):
                out.append(p)
                if len(out) == count:
                    break
        return out
    if not f:
        for _ in range(max_tries):
            p = [field(rng.randint(-6, 6)) for _ in range(3)]
            if any(p) and good(normalize_point(p)):
                p = normalize_point(p)
                out.append(p)
                if len(out) == count:
                    break
        return out
    seeds = _seed_points(f, field, rng)
    pool = list(seeds)
    tries = 0
    while len(out) < count and pool and tries < max_tries:
        tries += 1
        p = rng.choice(pool)
        q = [field(rng.randint(-5, 5)) for _ in range(3)]
        if not any(q) or projectively_equal(p, q):
            continue
        r = chord_point(f, p, q)
        if r is None and len(pool) > 1:
            r = chord_point(f, p, rng.choice(pool))
        if r is None or any(projectively_equal(r, x) for x in pool):
            continue
        pool.append(r)
        if good(r):
            out.append(r)
    for p in seeds:
        if len(out) < count and good(p):
            out.append(p)
    return out


def _all_points(field):
    from .commalg import projective_points_fq
    return list(projective_points_fq(field))


def _seed_points(f, field, rng):
    """Rational points from singular points and from intersections with easy lines."""
    seeds = []
    loc = singular_locus(f) if f.homogeneous_degree() == 3 else None
    if loc is not None and loc.kind == "FinitePoints" and loc.field == field:
        seeds.extend(loc.points)
    one, zero = field.one(), field.zero()
    lines = [([one, zero, zero], [zero, one, zero]),
             ([zero, one, zero], [zero, zero, one]),
             ([one, zero, zero], [zero, zero, one])]
    for _ in range(12):
        lines.append(([field(rng.randint(-3, 3)) for _ in range(3)],
                      [field(rng.randint(-3, 3)) for _ in range(3)]))
    for p, q in lines:
        if not any(cross(p, q)):
            continue
        coeffs = _restrict_to_line(f, p, q)
        if not any(coeffs):
            continue
        # roots of the binary cubic sum coeffs[k] s^k t^(3-k)
        if not coeffs[3]:
            seeds.append(normalize_point(list(p)))
        for r in uv.roots(uv.trim(coeffs)):
            seeds.append(normalize_point([r * x + y for x, y in zip(p, q)]))
    uniq = []
    for s in seeds:
        if not any(projectively_equal(s, u) for u in uniq):
            uniq.append(s)
    return uniq


# -- extension fitting --------------------------------------------------------------

@dataclass
class ProjectiveExtension:
    point_matrix: list        # T with T p ~ sigma(p) on column vectors

    def twist_map(self):
        """Generator map whose twist turns the algebra into a polynomial ring."""
        from .quadalg import GradedLinearMap
        field = self.point_matrix[0][0].field
        return GradedLinearMap(field, inverse(self.point_matrix))


def _collinear_quadruple(samples):
    from itertools import combinations
    return any(all(not det([list(v) for v in trio]) for trio in combinations(quad, 3))
               for quad in combinations(samples, 4))


def fit_projective_extension(system: BilinearSystem, samples, validation=3, rng=None):
    """A 3x3 matrix T with T p proportional to sigma(p) on every sample, or None."""
    if len(samples) < 5:
        raise DegenerateSampleSet("need at least 5 sample points")
    if _collinear_quadruple(samples):
        raise DegenerateSampleSet("four of the sample points are collinear")
    field = system.field
    images = [sigma_eval(system, p) for p in samples]
    T = _solve_point_map(field, samples, images)
    if T is None:
        return None
    fresh = _fresh_points(system, samples, validation, rng or random.Random(11))
    for p in fresh:
        q = sigma_eval(system, p)
        if any(cross(matvec(T, p), q)):
            return None
    return ProjectiveExtension(T)


def _solve_point_map(field, points, images):
    rows = []
    zero = field.zero()
    for p, q in zip(points, images):
        # cross(T p, q) = 0; unknown T[i][j] at index 3 i + j
        for a, b, c in ((1, 2, 0), (2, 0, 1), (0, 1, 2)):
            row = [zero] * 9
            for j in range(3):
                row[3 * a + j] = row[3 * a + j] + p[j] * q[b]
                row[3 * b + j] = row[3 * b + j] - p[j] * q[a]
            rows.append(row)
    sols = nullspace(rows, 9, field)
    if len(sols) != 1:
        return None
    v = sols[0]
    T = [v[0:3], v[3:6], v[6:9]]
    if not det(T):
        return None
    return T


def _fresh_points(system, samples, count, rng):
    f = pointscheme_cubic(system)
    field = system.field
    out = []
    tries = 0
    while len(out) < count and tries < 200:
        tries += 1
        if not f:
            p = [field(rng.randint(-7, 7)) for _ in range(3)]
            if not any(p):
                continue
            p = normalize_point(p)
        else:
            a, b = rng.sample(samples, 2)
            p = chord_point(f, a, b)
            if p is None:
                q = [field(rng.randint(-5, 5)) for _ in range(3)]
                p = chord_point(f, a, q) if any(q) else None
            if p is None:
                continue
        if any(projectively_equal(p, s) for s in samples + out):
            continue
        if rank(system.evaluate(p)) != 2:
            continue
        out.append(p)
    return out


# -- cubic classification --------------------------------------------------------------

TAGS = ("IdenticallyZero", "Elliptic", "Nodal", "Cuspidal", "Triangle", "ConcurrentLines",
        "ConicPlusSecantLine", "ConicPlusTangentLine", "DoubleLinePlusLine", "TripleLine",
        "NeedsExtension")


@dataclass
class CubicClass:
    tag: str
    singular_points: list = dc_field(default_factory=list)
    field: object = None
    factors: list = dc_field(default_factory=list)
    note: str = ""

    def __str__(self):
        return self.tag


def _complete_basis(field, p):
    """Invertible matrix with third column p."""
    for a, b in ((0, 1), (0, 2), (1, 2)):
        e1 = [field.one() if k == a else field.zero() for k in range(3)]
        e2 = [field.one() if k == b else field.zero() for k in range(3)]
        m = [[e1[k], e2[k], p[k]] for k in range(3)]
        if det(m):
            return m
    raise ValueError("zero point")  # pragma: no cover


def line_through(p, q):
    """Linear form (as a coefficient vector) vanishing at p and q."""
    return cross(p, q)


def linear_form(field, coeffs):
    """Linear form with the given coefficients, scaled so the first nonzero one is 1."""
    lead = next(c for c in coeffs if c)
    coeffs = [c / lead for c in coeffs]
    terms = {}
    for k, c in enumerate(coeffs):
        e = [0, 0, 0]
        e[k] = 1
        terms[tuple(e)] = field(c)
    return CommPoly(field, terms)


def divide_by_linear(f: CommPoly, coeffs):
    """Exact quotient f / l for the linear form l with the given coefficients."""
    field = coeffs[0].field if hasattr(coeffs[0], "field") else f.field
    f = f.with_field(field) if field != f.field and field.degree > 1 else f
    k = next(i for i, c in enumerate(coeffs) if c)
    # new coordinates: u_k = l(x), other u_j = x_j
    m_inv = identity(field, 3)
    m_inv[k] = [field(c) for c in coeffs]
    m = inverse(m_inv)                  # x = m u
    g = substitute_linear(f, m)
    out = {}
    for e, c in g.terms.items():
        if e[k] == 0:
            raise ValueError("linear form does not divide the polynomial")
        e2 = list(e)
        e2[k] -= 1
        out[tuple(e2)] = c
    return substitute_linear(CommPoly(field, out), m_inv)


def _is_proportional(u, v):
    return not any(cross(u, v))


def _repeated_line(f, rng):
    """The line l with l^2 | f, found from repeated roots on random lines."""
    field = f.field
    pts = []
    for _ in range(40):
        p = [field(rng.randint(-6, 6)) for _ in range(3)]
        q = [field(rng.randint(-6, 6)) for _ in range(3)]
        if not any(cross(p, q)):
            continue
        coeffs = _restrict_to_line(f, p, q)
        if not coeffs[3] or not any(coeffs):
            continue                      # need the point p itself off the curve
        rts, _ = uv.roots_and_residue(uv.trim(coeffs))
        for r, mult in rts:
            if mult >= 2:
                pt = normalize_point([r * x + y for x, y in zip(p, q)])
                if not any(_is_proportional(pt, o) for o in pts):
                    pts.append(pt)
        if len(pts) >= 2:
            return line_through(pts[0], pts[1])
    raise NeedsExtension("could not locate the repeated line")


def _tangent_cone(f, p):
    """Move p to (0:0:1); return (Q2, C3) binary forms in the new x, y."""
    field = p[0].field
    m = _complete_basis(field, p)
    g = substitute_linear(f.with_field(field), m)
    q2, c3 = {}, {}
    for e, c in g.terms.items():
        if e[2] == 1:
            q2[(e[0], e[1], 0)] = c
        elif e[2] == 0:
            c3[e] = c
        else:  # pragma: no cover - p is singular
            raise ValueError("point is not singular")
    q2p, c3p = CommPoly(field, q2), CommPoly(field, c3)
    Q = BinaryForm(field, 2, [q2p.coeff((k, 2 - k, 0)) for k in range(3)])
    C = BinaryForm(field, 3, [c3p.coeff((k, 3 - k, 0)) for k in range(4)])
    return Q, C


def _is_square_form(Q: BinaryForm):
    c0, c1, c2 = Q.coeffs            # c0 y^2 + c1 x y + c2 x^2
    if Q.field.characteristic == 2:
        return not c1
    return not (c1 * c1 - c0 * c2 * 4)


def classify_cubic(f: CommPoly, rng=None) -> CubicClass:
    rng = rng or random.Random(3)
    if not f:
        return CubicClass("IdenticallyZero", field=f.field)
    if not f.is_homogeneous() or f.homogeneous_degree() != 3:
        raise WrongDegree("classify_cubic expects a homogeneous cubic")
    try:
        loc = singular_locus(f)
    except NeedsExtension as exc:
        return CubicClass("NeedsExtension", field=f.field, note=str(exc))
    if loc.kind == "Smooth":
        return CubicClass("Elliptic", field=f.field)
    if loc.kind == "PositiveDimensional":
        l = _repeated_line(f, rng)
        q = divide_by_linear(f, l)
        q = divide_by_linear(q, l)
        lin = [q.coeff(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
        tag = "TripleLine" if _is_proportional(lin, l) else "DoubleLinePlusLine"
        lf = linear_form(f.field, l)
        return CubicClass(tag, field=f.field, factors=[lf, lf, q.monic()])
    pts, K = loc.points, loc.field
    if len(pts) == 1:
        p = pts[0]
        Q, C = _tangent_cone(f, p)
        if Q.is_zero():
            return CubicClass("ConcurrentLines", pts, K)
        g = binary_gcd(Q, C)
        if g.degree >= 1:
            return CubicClass("ConicPlusTangentLine", pts, K,
                              note="tangent cone shares a line with the cubic part")
        tag = "Cuspidal" if _is_square_form(Q) else "Nodal"
        return CubicClass(tag, pts, K)
    if len(pts) == 2:
        l = line_through(*pts)
        conic = divide_by_linear(f.with_field(K), l)
        return CubicClass("ConicPlusSecantLine", pts, K, [linear_form(K, l), conic.monic()])
    if len(pts) == 3:
        lines = [line_through(pts[i], pts[j]) for i, j in ((0, 1), (1, 2), (0, 2))]
        return CubicClass("Triangle", pts, K, [linear_form(K, l) for l in lines])
    raise ValueError(f"a reduced cubic cannot have {len(pts)} isolated singular points")
