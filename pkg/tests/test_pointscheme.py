import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cases import CATALOG_CASES, build_case, case_id
from quantump2.catalog import build
from quantump2.commalg import CommPoly, substitute_linear
from quantump2.errors import (ConstraintViolation, DegenerateSampleSet, DivisionByZero, NotOnScheme, NotSquare, RankDeficient,
                              WrongDegree)
from quantump2.exactfield import Field
from quantump2.linalg import is_invertible
from quantump2.parser import parse_commpoly
from quantump2.pointscheme import (BilinearSystem, classify_cubic, fit_projective_extension,
                                   multilinearize, pointscheme_cubic, projectively_equal,
                                   sample_points, sigma_eval, verify_graph)
from quantump2.quadalg import (QuadraticAlgebra, koszul_dual, polynomial_ring, twist)

Q = Field(0)
F3 = Field(3)
F11 = Field(11)
QW = Field(0, (1, 1, 1))      # t^2 + t + 1


def C(text, field=Q):
    return parse_commpoly(text, field)


def proportional(f, g):
    """f = c g for a nonzero scalar c."""
    if not f or not g:
        return not f and not g
    e = next(iter(g.terms))
    c = f.coeff(e) / g.coeff(e)
    return bool(c) and f == g * c


def pt(*coords, field=Q):
    return [field(c) for c in coords]


def unnormalized_nodal(lam="2"):
    return build("nodal", {"lambda": lam, "normalized": "0"}).algebra


class TestMultilinearize:
    def test_commutators_have_zero_determinant(self):
        s = multilinearize(polynomial_ring(Q))
        assert s.m == 3 and s.n == 3
        assert not pointscheme_cubic(s)
        u = CommPoly.variables(Q)
        for row in s.matrix():
            # each row is a commutator linearization, so M(u) u = 0
            assert not sum((a * b for a, b in zip(row, u)), CommPoly.constant(Q, 0))

    def test_nodal_form(self):
        A = QuadraticAlgebra.create(Q, ("x1", "x2", "x3"), ["2*x2*x3 - x3*x2 + x1^2"])
        (c,) = multilinearize(A).coeffs
        # the stored relation is rescaled by the reduced basis
        k = c[0][0]
        assert k and c[1][2] == 2 * k and c[2][1] == -k
        assert sum(1 for row in c for v in row if v) == 3

    def test_type_a_forms(self):
        A = QuadraticAlgebra.create(Q, ("x", "y", "z"), ["2*x*y + 3*y*x + 5*z^2",
                                                         "2*y*z + 3*z*y + 5*x^2",
                                                         "2*z*x + 3*x*z + 5*y^2"])
        s = multilinearize(A)
        p, q = pt(1, 2, 3), pt(-1, 4, 2)
        for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            want = [[Q(0)] * 3 for _ in range(3)]
            want[i][j], want[j][i], want[k][k] = Q(2), Q(3), Q(5)
            assert any(_proportional_tensors(c, want) for c in s.coeffs)

    @given(st.integers(0, 10 ** 6))
    def test_matrix_realizes_forms(self, seed):
        rng = random.Random(seed)
        A = build_case(CATALOG_CASES[rng.randrange(len(CATALOG_CASES))]).algebra
        s = multilinearize(A)
        F = A.field
        p = [F(rng.randint(-4, 4)) for _ in range(3)]
        q = [F(rng.randint(-4, 4)) for _ in range(3)]
        direct = [sum((c[i][j] * p[i] * q[j] for i in range(3) for j in range(3)), F.zero())
                  for c in s.coeffs]
        assert s.form_values(p, q) == direct
        M = s.matrix()
        assert [[e.evaluate(p) for e in row] for row in M] == s.evaluate(p)


def _proportional_tensors(a, b):
    flat_a = [v for row in a for v in row]
    flat_b = [v for row in b for v in row]
    k = next(i for i, v in enumerate(flat_b) if v)
    if not flat_a[k]:
        return False
    c = flat_a[k] / flat_b[k]
    return all(x == c * y for x, y in zip(flat_a, flat_b))


class TestCubic:
    def test_nodal(self):
        f = pointscheme_cubic(multilinearize(build("nodal", {"lambda": "2"}).algebra))
        assert proportional(f, C("2*x^3 + 2*y^3 + 7*x*y*z"))
        g = pointscheme_cubic(multilinearize(unnormalized_nodal()))
        assert proportional(g, C("x^3 + y^3 + x*y*z"))

    def test_cuspidal(self):
        f = pointscheme_cubic(multilinearize(build("cuspidal").algebra))
        assert proportional(f, C("3*y^3 + 3*x^2*z"))

    def test_cuspidal_char_three(self):
        A = build("cuspidal", field=F3, check_constraints=False).algebra
        assert not pointscheme_cubic(multilinearize(A))

    def test_not_square(self):
        with pytest.raises(NotSquare):
            pointscheme_cubic(multilinearize(build("nodal_dual").algebra))
        with pytest.raises(NotSquare):
            sigma_eval(multilinearize(build("nodal_dual").algebra), pt(0, 0, 1))


class TestSigma:
    def test_nodal(self):
        s = multilinearize(unnormalized_nodal())
        assert projectively_equal(sigma_eval(s, pt(1, 1, -2)), pt(4, 2, -9))

    def test_nodal_parametrized(self):
        # curve points (a^2, a, -a^3 - 1) move to (lam^2 a^2, lam a, -lam^3 a^3 - 1)
        s = multilinearize(unnormalized_nodal())
        lam = Q(2)
        for a in (1, -1, 3, Q(1) / 2):
            a = Q(a)
            p = [a * a, a, -(a ** 3) - 1]
            assert not pointscheme_cubic(s).evaluate(p)
            want = [lam * lam * a * a, lam * a, -(lam ** 3) * a ** 3 - 1]
            assert projectively_equal(sigma_eval(s, p), want)

    def test_cuspidal(self):
        s = multilinearize(build("cuspidal").algebra)
        assert projectively_equal(sigma_eval(s, pt(1, 1, -1)), pt(1, 2, -8))

    def test_commutative_is_identity(self):
        # M(p) is the cross-product matrix of p: rank 2 with kernel spanned by p
        s = multilinearize(polynomial_ring(Q))
        for p in (pt(1, 0, 0), pt(1, 2, 3), pt(0, -1, 5)):
            assert projectively_equal(sigma_eval(s, p), p)

    def test_rank_deficient(self):
        A = QuadraticAlgebra.create(Q, ("x1", "x2", "x3"), ["x1*x1", "x1*x2", "x1*x3"])
        with pytest.raises(RankDeficient):
            sigma_eval(multilinearize(A), pt(0, 1, 2))

    def test_off_curve(self):
        with pytest.raises(NotOnScheme):
            sigma_eval(multilinearize(unnormalized_nodal()), pt(1, 1, 1))


def _nodal_points(values):
    return [[Q(a) ** 2, Q(a), -Q(a) ** 3 - 1] for a in values]


class TestVerifyGraph:
    def test_nodal(self):
        s = multilinearize(unnormalized_nodal())
        assert verify_graph(s, _nodal_points([1, -1, 3]))

    def test_type_b_finite_field(self):
        b = build("typeB", {"a": "2"}, F11)
        s = multilinearize(b.algebra)
        samples = sample_points(s, 6)
        assert samples
        assert verify_graph(s, samples)

    def test_perturbed(self):
        s = multilinearize(unnormalized_nodal())
        coeffs = [[row[:] for row in c] for c in s.coeffs]
        coeffs[0][0][0] = coeffs[0][0][0] + 1
        bad = BilinearSystem(Q, 3, coeffs)
        f = pointscheme_cubic(bad)
        samples = sample_points(bad, 3)
        assert samples and all(not f.evaluate(p) for p in samples)
        # sigma of the perturbed system is consistent with itself, so compare against the original
        original = multilinearize(unnormalized_nodal())
        assert not all(not any(original.form_values(p, sigma_eval(bad, p))) for p in samples)


class TestFitExtension:
    def test_nodal_cube_root_of_unity(self):
        A = build("nodal", {"lambda": "t", "normalized": "0"}, QW,
                  check_constraints=False).algebra
        s = multilinearize(A)
        ext = fit_projective_extension(s, sample_points(s, 6))
        assert ext is not None
        T = twist(A, ext.twist_map())
        assert T.same_relations(polynomial_ring(QW, A.names))

    def test_nodal_generic(self):
        s = multilinearize(build("nodal", {"lambda": "2"}).algebra)
        assert fit_projective_extension(s, sample_points(s, 6)) is None

    def test_cuspidal_family_without_shift(self):
        # lambda2 = 0 makes the family a skew polynomial ring
        dual = build("cusp_dual_family", {"lambda1": "2", "lambda2": "0"},
                     check_constraints=False).algebra
        A = koszul_dual(dual, ("x1", "x2", "x3"))
        s = multilinearize(A)
        samples = sample_points(s, 6)
        ext = fit_projective_extension(s, samples)
        assert ext is not None
        for p in samples:
            assert projectively_equal([sum(a * b for a, b in zip(row, p))
                                       for row in ext.point_matrix], sigma_eval(s, p))

    def test_cuspidal_family_with_shift(self):
        dual = build("cusp_dual_family", {"lambda1": "2", "lambda2": "1"},
                     check_constraints=False).algebra
        s = multilinearize(koszul_dual(dual, ("x1", "x2", "x3")))
        assert fit_projective_extension(s, sample_points(s, 6)) is None

    def test_degenerate_samples(self):
        s = multilinearize(unnormalized_nodal())
        pts = _nodal_points([1, -1, 3])
        with pytest.raises(DegenerateSampleSet):
            fit_projective_extension(s, pts)
        line = [pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0), pt(1, 2, 0), pt(0, 0, 1)]
        with pytest.raises(DegenerateSampleSet):
            fit_projective_extension(s, line)


class TestClassify:
    @pytest.mark.parametrize("text, field, tag", [
        ("x^3 + y^3 + x*y*z", Q, "Nodal"),
        ("y^3 + x^2*z", Q, "Cuspidal"),
        ("y^3 + x^2*z + x*y^2", F3, "Cuspidal"),
        ("x*y*z", Q, "Triangle"),
        ("z^3", Q, "TripleLine"),
        ("x^3 + y^3 + z^3 + x*y*z", Q, "Elliptic"),
        ("x^3 + y^3 + z^3 - 3*x*y*z", Q, "Triangle"),
        ("x*y*(x + y)", Q, "ConcurrentLines"),
        ("x^2*y", Q, "DoubleLinePlusLine"),
        ("z*(y^2 - x*z)", Q, "ConicPlusTangentLine"),
        ("y*(y^2 - x*z)", Q, "ConicPlusSecantLine"),
        ("0", Q, "IdenticallyZero"),
    ])
    def test_examples(self, text, field, tag):
        assert classify_cubic(C(text, field)).tag == tag

    def test_nodal_witness(self):
        cls = classify_cubic(C("x^3 + y^3 + x*y*z"))
        (p,) = cls.singular_points
        assert projectively_equal(p, pt(0, 0, 1))

    def test_triangle_witness(self):
        f = C("x^3 + y^3 + z^3 - 3*x*y*z")
        cls = classify_cubic(f)
        assert len(cls.factors) == 3 and len(cls.singular_points) == 3
        K = cls.field
        prod = cls.factors[0] * cls.factors[1] * cls.factors[2]
        assert proportional(prod, f.with_field(K))
        for p in cls.singular_points:
            assert all(not g.evaluate(p) for g in f.with_field(K).gradient())

    def test_wrong_degree(self):
        with pytest.raises(WrongDegree):
            classify_cubic(C("x^2"))

    @settings(max_examples=10)
    @given(st.sampled_from(["x^3 + y^3 + x*y*z", "y^3 + x^2*z", "x*y*z", "z^3",
                            "x^3 + y^3 + z^3 + x*y*z", "x*y*(x + y)", "x^2*y",
                            "z*(y^2 - x*z)", "y*(y^2 - x*z)"]), st.integers(0, 10 ** 6))
    def test_substitution_invariance(self, text, seed):
        f = C(text)
        tag = classify_cubic(f).tag
        rng = random.Random(seed)
        done = 0
        while done < 30:
            m = [[Q(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)]
            if not is_invertible(m):
                continue
            assert classify_cubic(substitute_linear(f, m)).tag == tag
            done += 1


SQUARE_CASES = [c for c in CATALOG_CASES if build_case(c).algebra.nrelations == 3]


@pytest.mark.parametrize("case", SQUARE_CASES, ids=case_id)
@pytest.mark.parametrize("K", [Field(3), Field(3, (1, 0, 1)), Field(5), Field(7), Field(11),
                               Field(5, (2, 0, 1)), Field(7, (1, 0, 1))], ids=str)
def test_graph_over_finite_fields(case, K):
    name, params, _ = case
    try:
        A = build(name, params, K).algebra
    except (ConstraintViolation, DivisionByZero):
        pytest.skip(f"{name} does not specialize to {K}")
    s = multilinearize(A)
    f = pointscheme_cubic(s)
    samples = sample_points(s, 12, rng=random.Random(K.order))
    assert samples
    for p in samples:
        image = sigma_eval(s, p)
        assert not any(s.form_values(p, image))
        assert not f.evaluate(image)
