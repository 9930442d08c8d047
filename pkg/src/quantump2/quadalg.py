"""Quadratic algebras and the constructions that act on them.

A quadratic algebra is stored as the reduced echelon basis of its relation
space ``W`` inside the degree-2 part of the free algebra, so two algebras on
the same generators are equal exactly when their stored bases agree.

Linear maps on generators follow the row convention
``phi(x_i) = sum_j m[i][j] x_j`` everywhere.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import (DimensionMismatch, InhomogeneousInput, InvalidOreData,
                     SingularMatrix, WrongDegree)
from .exactfield import Field
from .linalg import as_matrix, det, identity, inverse, matmul, nullspace
from .ncpoly import Echelon, FreeAlgebra, NcPoly, apply_linear_map, span_basis


@dataclass(frozen=True)
class QuadraticAlgebra:
    ctx: FreeAlgebra
    relations: tuple
    name: str = ""

    @classmethod
    def from_relations(cls, ctx, relations, name=""):
        rels = [r if isinstance(r, NcPoly) else _parse(r, ctx) for r in relations]
        for r in rels:
            if r.ctx != ctx:
                r = r.with_context(ctx)
            if r and r.homogeneous_degree() != 2:
                raise WrongDegree(f"relation {r} is not of degree 2")
        basis, _ = span_basis([r.with_context(ctx) for r in rels if r], 2)
        return cls(ctx, tuple(basis), name)

    @classmethod
    def create(cls, field, names, relations, name=""):
        return cls.from_relations(FreeAlgebra(field, names), relations, name)

    @property
    def field(self) -> Field:
        return self.ctx.field

    @property
    def names(self):
        return self.ctx.names

    @property
    def ngens(self):
        return self.ctx.ngens

    @property
    def nrelations(self):
        return len(self.relations)

    def is_p2_candidate(self):
        """Three generators and three independent relations."""
        return self.ngens == 3 and self.nrelations == 3

    def gens(self):
        return self.ctx.gens()

    def parse(self, text):
        return _parse(text, self.ctx)

    def contains_relation(self, p: NcPoly) -> bool:
        """True when the degree-2 element p lies in the relation space."""
        ech = Echelon()
        for r in self.relations:
            ech.add(r.terms)
        return not ech.reduce(p.with_context(self.ctx).terms)

    def same_relations(self, other) -> bool:
        """Relation-space equality, ignoring generator names."""
        return (self.ngens == other.ngens and self.field == other.field
                and [r.terms for r in self.relations] == [r.terms for r in other.relations])

    def renamed(self, names, name=None):
        ctx = self.ctx.renamed(names)
        return QuadraticAlgebra(ctx, tuple(r.with_context(ctx) for r in self.relations),
                                self.name if name is None else name)

    def with_name(self, name):
        return QuadraticAlgebra(self.ctx, self.relations, name)

    def hilbert(self, D=6):
        from .ncgroebner import hilbert_function
        return hilbert_function(self, D)

    def groebner(self, D=6):
        from .ncgroebner import buchberger_truncated
        return buchberger_truncated(self, D)

    def relation_strings(self):
        return [str(r) for r in self.relations]

    def __str__(self):
        rels = ", ".join(self.relation_strings()) or "(none)"
        head = f"{self.name}: " if self.name else ""
        return f"{head}<{', '.join(self.names)}> over {self.field.describe()} / ({rels})"


def _parse(text, ctx):
    from .parser import parse_ncpoly
    return parse_ncpoly(text, ctx)


def free_algebra(field, names=("x1", "x2", "x3"), name="free"):
    return QuadraticAlgebra.create(field, names, [], name)


def polynomial_ring(field, names=("x1", "x2", "x3"), name="polynomial ring"):
    ctx = FreeAlgebra(field, names)
    g = ctx.gens()
    rels = [g[i] * g[j] - g[j] * g[i] for i in range(len(g)) for j in range(i + 1, len(g))]
    return QuadraticAlgebra.from_relations(ctx, rels, name)


# -- linear maps on generators -------------------------------------------------------

class GradedLinearMap:
    """Invertible linear map on degree 1, row convention."""

    __slots__ = ("field", "matrix")

    def __init__(self, field, matrix):
        m = as_matrix(field, matrix)
        n = len(m)
        if any(len(row) != n for row in m):
            raise DimensionMismatch("graded linear map must be square")
        if not det(m):
            raise SingularMatrix("graded linear map is not invertible")
        self.field = field
        self.matrix = m

    @classmethod
    def identity(cls, field, n):
        return cls(field, identity(field, n))

    @classmethod
    def diagonal(cls, field, values):
        n = len(values)
        return cls(field, [[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def permutation(cls, field, images):
        """x_i -> x_{images[i]}."""
        n = len(images)
        return cls(field, [[1 if j == images[i] else 0 for j in range(n)] for i in range(n)])

    @property
    def size(self):
        return len(self.matrix)

    def inverse(self):
        return GradedLinearMap(self.field, inverse(self.matrix))

    def then(self, other):
        """Composite 'self first, then other' on generators."""
        # x_i -> sum_j a_ij x_j -> sum_j a_ij sum_k b_jk x_k
        return GradedLinearMap(self.field, matmul(self.matrix, other.matrix))

    def apply(self, p: NcPoly, mode="all") -> NcPoly:
        return apply_linear_map(p, self.matrix, mode)

    def __eq__(self, other):
        return isinstance(other, GradedLinearMap) and self.matrix == other.matrix

    def __repr__(self):
        rows = "; ".join(", ".join(str(c) for c in row) for row in self.matrix)
        return f"GradedLinearMap({rows})"


def _as_map(field, phi):
    return phi if isinstance(phi, GradedLinearMap) else GradedLinearMap(field, phi)


# -- the three constructions ---------------------------------------------------------

def koszul_dual(A: QuadraticAlgebra, names=None, name=None) -> QuadraticAlgebra:
    """Quadratic dual: relation space is the annihilator of W under <z_iz_j, x_kx_l>."""
    ctx = A.ctx if names is None else A.ctx.renamed(names)
    words = ctx.words(2)
    field = A.field
    rows = [[r.terms.get(w, field.zero()) for w in words] for r in A.relations]
    perp = nullspace(rows, len(words), field)
    rels = [NcPoly(ctx, {w: c for w, c in zip(words, v) if c}) for v in perp]
    label = name if name is not None else (f"dual of {A.name}" if A.name else "")
    return QuadraticAlgebra.from_relations(ctx, rels, label)


def twist(A: QuadraticAlgebra, phi, name=None) -> QuadraticAlgebra:
    """Twist by a graded automorphism: a * b = a phi(b), so W becomes (id x phi^-1) W."""
    phi = _as_map(A.field, phi)
    if phi.size != A.ngens:
        raise DimensionMismatch("twisting map has the wrong size")
    inv = phi.inverse()
    rels = [inv.apply(r, "second_tensor_factor") for r in A.relations]
    return QuadraticAlgebra.from_relations(A.ctx, rels, A.name if name is None else name)


def substitute_generators(A: QuadraticAlgebra, m, name=None) -> QuadraticAlgebra:
    """Change of generators x_i -> sum_j m[i][j] x_j in every relation."""
    phi = _as_map(A.field, m)
    if phi.size != A.ngens:
        raise DimensionMismatch("substitution matrix has the wrong size")
    rels = [phi.apply(r, "all") for r in A.relations]
    return QuadraticAlgebra.from_relations(A.ctx, rels, A.name if name is None else name)


def is_graded_automorphism(A: QuadraticAlgebra, m) -> bool:
    """Whether m (row convention) preserves the relation space."""
    try:
        phi = _as_map(A.field, m)
    except SingularMatrix:
        return False
    return all(A.contains_relation(phi.apply(r, "all")) for r in A.relations)


# -- Ore extensions -----------------------------------------------------------------

@dataclass
class OreData:
    base: QuadraticAlgebra
    phi: GradedLinearMap
    delta: list                      # delta[i] = image of generator i, degree 2 in base
    new_name: str = "x3"

    def __post_init__(self):
        if not isinstance(self.phi, GradedLinearMap):
            self.phi = GradedLinearMap(self.base.field, self.phi)
        self.delta = [d if isinstance(d, NcPoly) else self.base.parse(d) for d in self.delta]


@dataclass
class OreCheck:
    ok: bool
    reason: str = ""
    failing_relation: str = None

    def __bool__(self):
        return self.ok


def extend_derivation(data: OreData, p: NcPoly) -> NcPoly:
    """delta on a degree-2 element via delta(ab) = phi(a) delta(b) + delta(a) b."""
    ctx = data.base.ctx
    gens = ctx.gens()
    images = [data.phi.apply(g) for g in gens]
    out = ctx.zero()
    for (a, b), c in p.terms.items():
        out = out + (images[a] * data.delta[b] + data.delta[a] * gens[b]).scale(c)
    return out


def validate_ore(data: OreData) -> OreCheck:
    B = data.base
    n = B.ngens
    if data.phi.size != n:
        return OreCheck(False, "phi has the wrong size")
    if len(data.delta) != n:
        return OreCheck(False, "delta must be given on every generator")
    for k, d in enumerate(data.delta):
        if d.ctx != B.ctx:
            return OreCheck(False, f"delta({B.names[k]}) lives in another context")
        if d and d.homogeneous_degree() != 2:
            return OreCheck(False, f"delta({B.names[k]}) is not of degree 2")
    for r in B.relations:
        if not B.contains_relation(data.phi.apply(r)):
            return OreCheck(False, "phi does not preserve the relations", str(r))
    from .ncgroebner import buchberger_truncated
    gb = buchberger_truncated(B, 3)
    for r in B.relations:
        if not gb.normal_form(extend_derivation(data, r)).is_zero():
            return OreCheck(False, "delta is not compatible with the relations", str(r))
    return OreCheck(True)


def ore_extension(data: OreData, new_name=None, name="") -> QuadraticAlgebra:
    """B[z; phi, delta] with relations z x_i - phi(x_i) z - delta(x_i)."""
    check = validate_ore(data)
    if not check:
        detail = f" (relation {check.failing_relation})" if check.failing_relation else ""
        raise InvalidOreData(check.reason + detail)
    B = data.base
    new_name = new_name or data.new_name
    ctx = FreeAlgebra(B.field, B.names + (new_name,))
    n = B.ngens

    def lift(p):
        return NcPoly(ctx, dict(p.terms))

    z = ctx.gen(n)
    rels = [lift(r) for r in B.relations]
    for i in range(n):
        phi_i = lift(data.phi.apply(B.ctx.gen(i)))
        rels.append(z * ctx.gen(i) - phi_i * z - lift(data.delta[i]))
    return QuadraticAlgebra.from_relations(ctx, rels, name)
