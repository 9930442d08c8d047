"""Graded skew Clifford algebras and the two-stage regularity test.

The test takes a skew polynomial ring ``S`` and degree-2 elements ``q_1..q_k``:
the ``q``'s must form a normalizing sequence in ``S``, and the bilinear forms
of ``relations(S) + q's`` must have no common zero on P^2 x P^2. When both
hold, the Koszul dual of ``S / (q's)`` is returned.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .commalg import projective_empty
from .errors import (CharTwoUnsupported, DiagonalSystemSingular, InvalidMuMatrix,
                     NotMuSymmetric, SingularMatrix, ZeroInAlgebra)
from .linalg import as_matrix, inverse, nullspace
from .ncgroebner import NormalizingVerdict, is_normalizing_sequence
from .ncpoly import FreeAlgebra
from .pointscheme import multilinearize
from .quadalg import QuadraticAlgebra, koszul_dual


class MuMatrix:
    """Matrix of nonzero constants with mu_ii = 1 and mu_ij mu_ji = 1."""

    __slots__ = ("field", "matrix")

    def __init__(self, field, matrix):
        m = as_matrix(field, matrix)
        n = len(m)
        if any(len(row) != n for row in m):
            raise InvalidMuMatrix("mu must be square")
        for i in range(n):
            if m[i][i] != 1:
                raise InvalidMuMatrix(f"mu[{i + 1}][{i + 1}] must be 1")
            for j in range(n):
                if not m[i][j]:
                    raise InvalidMuMatrix(f"mu[{i + 1}][{j + 1}] is zero")
                if m[i][j] * m[j][i] != 1:
                    raise InvalidMuMatrix(f"mu[{i + 1}][{j + 1}] * mu[{j + 1}][{i + 1}] != 1")
        self.field = field
        self.matrix = m

    @classmethod
    def from_upper(cls, field, n, upper):
        """Build from {(i, j): value} for i < j (1-based); the rest is forced."""
        m = [[field.one()] * n for _ in range(n)]
        for (i, j), v in upper.items():
            v = field(v)
            m[i - 1][j - 1] = v
            m[j - 1][i - 1] = v.inverse()
        return cls(field, m)

    @property
    def n(self):
        return len(self.matrix)

    def __getitem__(self, ij):
        i, j = ij
        return self.matrix[i][j]


class MuSymmetricForm:
    """Matrix M with M_ij = mu_ij M_ji."""

    __slots__ = ("matrix", "mu")

    def __init__(self, matrix, mu: MuMatrix):
        m = as_matrix(mu.field, matrix)
        n = mu.n
        if len(m) != n or any(len(row) != n for row in m):
            raise NotMuSymmetric("form has the wrong size")
        for i in range(n):
            for j in range(n):
                if m[i][j] != mu[i, j] * m[j][i]:
                    raise NotMuSymmetric(f"entry ({i + 1},{j + 1}) breaks mu-symmetry")
        self.matrix = m
        self.mu = mu


@dataclass
class GscaSpec:
    mu: MuMatrix
    forms: list

    def __post_init__(self):
        self.forms = [f if isinstance(f, MuSymmetricForm) else MuSymmetricForm(f, self.mu)
                      for f in self.forms]
        if len(self.forms) != self.mu.n:
            raise InvalidMuMatrix("need one mu-symmetric form per generator")


def skew_poly_ring(mu: MuMatrix, names=None, name="skew polynomial ring") -> QuadraticAlgebra:
    """Relations z_i z_j - mu_ji z_j z_i for i < j."""
    n = mu.n
    names = names or tuple(f"z{k + 1}" for k in range(n))
    ctx = FreeAlgebra(mu.field, names)
    g = ctx.gens()
    rels = [g[i] * g[j] - (g[j] * g[i]).scale(mu[j, i])
            for i in range(n) for j in range(i + 1, n)]
    return QuadraticAlgebra.from_relations(ctx, rels, name)


@dataclass
class GscaResult:
    algebra: QuadraticAlgebra
    y: list
    normalizing: NormalizingVerdict
    warning: str = ""

    @property
    def ok(self):
        return not self.warning


def gsca_from_definition(spec: GscaSpec, names=None, name="graded skew Clifford algebra"):
    """Quadratic algebra obtained by eliminating the degree-2 generators y_k."""
    mu = spec.mu
    field = mu.field
    if field.characteristic == 2:
        raise CharTwoUnsupported("graded skew Clifford algebras need characteristic != 2")
    n = mu.n
    ctx = FreeAlgebra(field, names or tuple(f"x{k + 1}" for k in range(n)))
    x = ctx.gens()
    forms = [f.matrix for f in spec.forms]
    diag = [[forms[k][i][i] for k in range(n)] for i in range(n)]
    try:
        dinv = inverse(diag)
    except SingularMatrix:
        raise DiagonalSystemSingular(
            "the diagonal relations do not determine the degree-2 generators") from None
    squares = [(x[i] * x[i]).scale(2) for i in range(n)]
    y = [sum((squares[i].scale(dinv[k][i]) for i in range(n) if dinv[k][i]), ctx.zero())
         for k in range(n)]
    rels = []
    for i in range(n):
        for j in range(i + 1, n):
            lhs = x[i] * x[j] + (x[j] * x[i]).scale(mu[i, j])
            rhs = sum((y[k].scale(forms[k][i][j]) for k in range(n) if forms[k][i][j]),
                      ctx.zero())
            rels.append(lhs - rhs)
    A = QuadraticAlgebra.from_relations(ctx, rels, name)
    warning = ""
    try:
        verdict = is_normalizing_sequence(A, y)
        if not verdict.ok:
            warning = f"y_{verdict.failed_index + 1} is not normal modulo its predecessors"
    except ZeroInAlgebra as exc:
        verdict = NormalizingVerdict(False, None, [])
        warning = f"a degree-2 generator vanishes in the algebra ({exc})"
    return GscaResult(A, y, verdict, warning)


# -- regularity test -----------------------------------------------------------------

@dataclass
class RegularityResult:
    passed: bool
    stage: int = None                  # 1 = normalizing sequence, 2 = empty zero locus
    dual: QuadraticAlgebra = None
    witness: object = None
    detail: str = ""
    thetas: list = dc_field(default_factory=list)
    certificate: dict = dc_field(default_factory=dict)

    def __bool__(self):
        return self.passed


def zero_locus_minors(algebra_relations_system):
    from .commalg import minors
    return [m for m in minors(algebra_relations_system.matrix(), 3) if m]


def cv_regularity_check(S: QuadraticAlgebra, quadrics, power_bound=12) -> RegularityResult:
    quadrics = [q if not isinstance(q, str) else S.parse(q) for q in quadrics]
    try:
        verdict = is_normalizing_sequence(S, quadrics)
    except ZeroInAlgebra as exc:
        return RegularityResult(False, 1, detail=f"quadric is zero in the quotient: {exc}")
    if not verdict.ok:
        return RegularityResult(False, 1, witness=verdict.failed_index,
                                detail=f"element {verdict.failed_index + 1} is not normal "
                                       "modulo its predecessors", thetas=verdict.thetas)
    full = QuadraticAlgebra.from_relations(S.ctx, list(S.relations) + quadrics)
    system = multilinearize(full)
    polys = zero_locus_minors(system)
    if not polys:
        return RegularityResult(False, 2, detail="every 3x3 minor vanishes identically",
                                thetas=verdict.thetas)
    res = projective_empty(polys, power_bound)
    if res.status == "Empty":
        return RegularityResult(True, dual=koszul_dual(full), thetas=verdict.thetas,
                                certificate=res.certificate)
    if res.status == "Inconclusive":
        return RegularityResult(False, 2, detail=res.note, thetas=verdict.thetas,
                                certificate=res.certificate)
    witness = None
    if res.witness:
        u = res.witness[0]
        mu = system.evaluate(u)
        v = nullspace(mu)[0]
        from .commalg import normalize_point
        witness = (u, normalize_point(v))
    return RegularityResult(False, 2, witness=witness, thetas=verdict.thetas,
                            detail="the relations have a common zero in P^2 x P^2"
                                   + ("" if witness else f" ({res.note})"),
                            certificate=res.certificate)
