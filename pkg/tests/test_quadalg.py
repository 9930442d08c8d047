import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cases import CATALOG_CASES, build_case, case_id
from quantump2.catalog import build, cyclic_skew_twist, skew_constant
from quantump2.errors import InvalidOreData, SingularMatrix
from quantump2.exactfield import Field
from quantump2.ncgroebner import hilbert_function
from quantump2.quadalg import (GradedLinearMap, OreData, QuadraticAlgebra, is_graded_automorphism,
                               koszul_dual, ore_extension, polynomial_ring, substitute_generators,
                               twist, validate_ore)

from strategies import fields, invertible_matrices, ncpolys

Q = Field(0)
QI = Field(0, (1, 0, 1))
EYE = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
CYCLE = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]


def alg(field, names, rels):
    return QuadraticAlgebra.create(field, names, rels)


def random_invertible(field, rng, n=3):
    from quantump2.linalg import is_invertible
    while True:
        m = [[field(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        if is_invertible(m):
            return m


class TestKoszulDual:
    def test_polynomial_ring(self):
        D = koszul_dual(polynomial_ring(Q, ("z1", "z2", "z3")))
        want = alg(Q, ("z1", "z2", "z3"), ["z1^2", "z2^2", "z3^2", "z1*z2 + z2*z1",
                                           "z1*z3 + z3*z1", "z2*z3 + z3*z2"])
        assert D.same_relations(want)

    def test_nodal(self):
        raw = build("nodal", {"lambda": "2", "normalized": "0"}).algebra
        D = koszul_dual(raw, ("z1", "z2", "z3"))
        want = alg(Q, ("z1", "z2", "z3"), ["z3^2", "z1*z2 + 2*z2*z1", "2*z2^2 + 7*z1*z3",
                                           "z2*z3 + 2*z3*z2", "2*z1^2 + 7*z3*z2",
                                           "z3*z1 + 2*z1*z3"])
        assert D.same_relations(want)

    def test_type_h(self):
        b = build("typeH")
        quotient = QuadraticAlgebra.from_relations(
            b.skew_ring.ctx, list(b.skew_ring.relations) + list(b.quadrics))
        assert quotient.nrelations == 6
        assert koszul_dual(quotient).renamed(b.algebra.names).same_relations(b.algebra)

    @pytest.mark.parametrize("case", CATALOG_CASES, ids=case_id)
    def test_involution(self, case):
        A = build_case(case).algebra
        D = koszul_dual(A)
        assert A.nrelations + D.nrelations == A.ngens ** 2
        assert koszul_dual(D).same_relations(A)

    @given(fields.flatmap(lambda f: st.lists(
        ncpolys(polynomial_ring(f).ctx, degree=2), max_size=9)))
    def test_involution_random(self, rels):
        if not rels:
            return
        A = QuadraticAlgebra.from_relations(rels[0].ctx, rels)
        assert koszul_dual(koszul_dual(A)).same_relations(A)


class TestTwist:
    def test_identity(self):
        A = build("nodal").algebra
        assert twist(A, EYE).same_relations(A)

    def test_cyclic_lines_cycle_gives_skew_ring(self):
        A = build("lemma16", {"d": "1", "e": "1", "f": "1"}).algebra
        tau = cyclic_skew_twist(Q, Q(1), Q(1), Q(1))
        assert tau.matrix == [[Q(v) for v in row] for row in CYCLE]
        T = twist(A, tau)
        c = skew_constant(T)
        assert c is not None
        assert T.same_relations(build("skew3", {"c": str(c)}).algebra)
        # convention check: (id x tau^-1) sends y*x - z*z to y*z - z*y, so c = -1
        assert c == -1

    def test_cyclic_lines_default_constant(self):
        b = build("lemma16")
        tau = cyclic_skew_twist(Q, Q(2), Q(1), Q(4))
        assert is_graded_automorphism(b.algebra, tau)
        assert b.extras["skew_constant"] == skew_constant(twist(b.algebra, tau))

    def test_singular(self):
        with pytest.raises(SingularMatrix):
            twist(build("nodal").algebra, [[1, 0, 0], [0, 1, 0], [1, 0, 0]])

    @pytest.mark.parametrize("case", CATALOG_CASES, ids=case_id)
    def test_double_twist(self, case):
        A = build_case(case).algebra
        rng = random.Random(case_id(case))
        for _ in range(50):
            phi = GradedLinearMap(A.field, random_invertible(A.field, rng))
            assert twist(twist(A, phi), phi.inverse()).same_relations(A)

    @pytest.mark.parametrize("case", CATALOG_CASES, ids=case_id)
    def test_hilbert_invariance(self, case):
        A = build_case(case).algebra
        h = hilbert_function(A, 4)
        rng = random.Random(1)
        for k in range(40):
            if k % 2:
                m = random_invertible(A.field, rng)
            else:
                m = [[A.field.zero()] * 3 for _ in range(3)]
                perm = rng.sample(range(3), 3)
                for i in range(3):
                    m[i][perm[i]] = A.field.random_nonzero(rng)
            if is_graded_automorphism(A, m):
                assert hilbert_function(twist(A, m), 4) == h
        scalar = [[A.field(3) if i == j else A.field.zero() for j in range(3)] for i in range(3)]
        if A.field.characteristic != 3:
            assert hilbert_function(twist(A, scalar), 4) == h

    @given(fields.flatmap(lambda f: invertible_matrices(f)))
    def test_polynomial_ring_twists(self, m):
        A = polynomial_ring(m[0][0].field)
        assert hilbert_function(twist(A, m), 4) == [1, 3, 6, 10, 15]


class TestSubstitution:
    def test_identity(self):
        A = build("typeH").algebra
        assert substitute_generators(A, EYE).same_relations(A)

    def test_normalizing_nodal(self):
        raw = build("nodal", {"lambda": "2", "normalized": "0"}).algebra
        m = [[1, 0, 0], [0, 1, 0], [0, 0, Q(7) / 2]]
        assert substitute_generators(raw, m).same_relations(build("nodal").algebra)

    def test_permutation_moves_constants(self):
        S = alg(Q, ("z1", "z2", "z3"), ["z2*z1 - 2*z1*z2", "z3*z2 - 3*z2*z3", "z3*z1 - 5*z1*z3"])
        swapped = substitute_generators(S, GradedLinearMap.permutation(Q, (1, 0, 2)))
        want = alg(Q, ("z1", "z2", "z3"), ["z1*z2 - 2*z2*z1", "z3*z1 - 3*z1*z3",
                                           "z3*z2 - 5*z2*z3"])
        assert swapped.same_relations(want)

    def test_singular(self):
        with pytest.raises(SingularMatrix):
            substitute_generators(build("nodal").algebra, [[0] * 3] * 3)

    @pytest.mark.parametrize("case", CATALOG_CASES[::2], ids=case_id)
    def test_hilbert_invariance(self, case):
        A = build_case(case).algebra
        m = random_invertible(A.field, random.Random(5))
        assert hilbert_function(substitute_generators(A, m), 4) == hilbert_function(A, 4)


def _cumulative(xs):
    return [sum(xs[:d + 1]) for d in range(len(xs))]


class TestOre:
    def test_trivial_data(self):
        B = polynomial_ring(Q, ("x", "y"))
        data = OreData(B, [[1, 0], [0, 1]], ["0", "0"], "z")
        assert validate_ore(data)
        E = ore_extension(data)
        assert E.same_relations(polynomial_ring(Q, ("x", "y", "z")))

    def test_central_ore_case_ii(self):
        E = ore_extension(build("prop12").ore)
        assert E.contains_relation(E.parse("x*y - y*x"))
        assert E.contains_relation(E.parse("z*y - 2*y*z + x*(x + y + z)"))

    def test_nodal(self):
        E = ore_extension(build("nodal").ore)
        want = alg(Q, ("x1", "x2", "x3"), ["2*x1*x2 - x2*x1", "2*x2*x3 - x3*x2 + x1^2",
                                           "2*x3*x1 - x1*x3 + x2^2"])
        assert E.same_relations(want)

    def test_cuspidal(self):
        b = build("cuspidal")
        assert ore_extension(b.ore).same_relations(b.algebra)

    def test_corrupted_delta(self):
        good = build("nodal").ore
        bad = OreData(good.base, good.phi, [good.delta[0], good.base.parse("x2^2")], "x3")
        check = validate_ore(bad)
        assert not check and check.failing_relation is not None
        with pytest.raises(InvalidOreData):
            ore_extension(bad)

    def test_phi_must_preserve_relations(self):
        good = build("nodal").ore
        bad = OreData(good.base, [[1, 0], [0, 1]], good.delta, "x3")
        assert not validate_ore(bad)

    @pytest.mark.parametrize("name, params, field", [
        ("prop12", {}, None), ("prop12", {"case": "i"}, None), ("nodal", {}, None),
        ("nodal", {"lambda": "-1"}, None), ("cuspidal", {}, None), ("cuspidal", {}, Field(5)),
        ("prop2_star", {}, None)])
    def test_hilbert_additivity(self, name, params, field):
        data = build(name, params, field).ore
        assert validate_ore(data)
        base = hilbert_function(data.base, 4)
        assert hilbert_function(ore_extension(data), 4) == _cumulative(base)
