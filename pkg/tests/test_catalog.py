import pytest

from cases import CATALOG_CASES, build_case, case_id
from quantump2.catalog import (build, build_algebra, default_field, entry_names, get_entry,
                               cyclic_skew_twist, skew_constant)
from quantump2.errors import ConstraintViolation
from quantump2.exactfield import Field
from quantump2.ncgroebner import hilbert_function
from quantump2.pointscheme import classify_cubic, multilinearize, pointscheme_cubic
from quantump2.quadalg import QuadraticAlgebra, is_graded_automorphism, koszul_dual, twist

Q = Field(0)
F3 = Field(3)
QI = Field(0, (1, 0, 1))


def proportional(f, g):
    if not f or not g:
        return not f and not g
    e = next(iter(g.terms))
    c = f.coeff(e) / g.coeff(e)
    return bool(c) and f == g * c


def alg(field, names, rels):
    return QuadraticAlgebra.create(field, names, rels)


@pytest.mark.parametrize("case", CATALOG_CASES, ids=case_id)
class TestGoldens:
    def test_cubic(self, case):
        b = build_case(case)
        if b.expected_cubic is None:
            pytest.skip("no stated cubic")
        assert b.expected_cubic.provenance in ("quoted", "derived")
        assert proportional(pointscheme_cubic(multilinearize(b.algebra)), b.expected_cubic.value)

    def test_class(self, case):
        b = build_case(case)
        if b.expected_class is None:
            pytest.skip("no stated class")
        f = pointscheme_cubic(multilinearize(b.algebra))
        assert classify_cubic(f).tag == b.expected_class.value

    def test_hilbert(self, case):
        b = build_case(case)
        if b.expected_hilbert is None:
            pytest.skip("no stated Hilbert prefix for these parameters")
        want = list(b.expected_hilbert.value)[:5]
        assert hilbert_function(b.algebra, len(want) - 1) == want


def test_every_entry_is_covered():
    assert {name for name, _, _ in CATALOG_CASES} == set(entry_names())


class TestRelations:
    def test_nodal(self):
        A = build_algebra("nodal", {"lambda": "2"})
        want = alg(Q, A.names, ["2*x1*x2 - x2*x1", "2*x2*x3 - x3*x2 + x1^2",
                                "2*x3*x1 - x1*x3 + x2^2"])
        assert A.same_relations(want)

    def test_type_h(self):
        A = build_algebra("typeH")
        assert A.field == QI
        want = alg(QI, ("x", "y", "z"), ["y^2 - x^2", "z*y + t*y*z", "y*x - x*y - t*z^2"])
        assert A.same_relations(want)

    def test_char3_concurrent(self):
        A = build_algebra("prop2_star", {"a": "1", "c": "1", "e": "1"}, F3)
        want = alg(F3, ("x", "y", "z"), ["x*y - x^2 - y^2", "z*y + x*z - x^2 - y^2",
                                         "z*x - (y - x)*z + y*x - x^2"])
        assert A.same_relations(want)

    def test_skew3(self):
        A = build_algebra("skew3", {"c": "5"})
        want = alg(Q, ("x", "y", "z"), ["y*z + 5*z*y", "z*x + 5*x*z", "x*y + 5*y*x"])
        assert A.same_relations(want)

    def test_cyclic_lines_constant_is_consistent(self):
        b = build("lemma16", {"d": "3", "e": "3", "f": "3"})
        c = b.extras["skew_constant"]
        tau = cyclic_skew_twist(Q, Q(3), Q(3), Q(3))
        assert is_graded_automorphism(b.algebra, tau)
        assert skew_constant(twist(b.algebra, tau)) == c

    @pytest.mark.parametrize("lam", ["2", "-1", "3"])
    def test_nodal_dual(self, lam):
        A = build_algebra("nodal", {"lambda": lam, "normalized": "0"})
        D = build_algebra("nodal_dual", {"lambda": lam})
        assert koszul_dual(A, D.names).same_relations(D)

    def test_nodal_normalizer(self):
        from quantump2.quadalg import substitute_generators
        b = build("nodal", {"lambda": "3", "normalized": "0"})
        moved = substitute_generators(b.algebra, b.extras["normalizer"])
        assert moved.same_relations(build_algebra("nodal", {"lambda": "3"}))


class TestConstraints:
    @pytest.mark.parametrize("name, params, field, label", [
        ("nodal", {"lambda": "1"}, None, "lambda*(lambda^3 - 1) != 0"),
        ("nodal", {"lambda": "0"}, None, "lambda*(lambda^3 - 1) != 0"),
        ("typeB", {"a": "1"}, None, "a*(a - 1) != 0"),
        ("typeB", {"a": "3"}, Field(7), "a^2 - a + 1 != 0"),
        ("typeA", {"a": "1", "b": "1", "c": "1"}, None, "(3abc)^3 != (a^3 + b^3 + c^3)^3"),
        ("typeA", {"a": "0"}, None, "a * b * c != 0"),
        ("example_gsca", {"case": "vi", "alpha1": "0"}, None, "alpha1*alpha2*alpha3 != 0"),
    ])
    def test_violation_is_named(self, name, params, field, label):
        with pytest.raises(ConstraintViolation) as info:
            build(name, params, field)
        assert label in str(info.value)
        b = build(name, params, field, check_constraints=False)
        assert label in b.violations
        assert b.expected_cubic is None and b.expected_hilbert is None

    @pytest.mark.parametrize("name, field", [
        ("prop2_star", Q), ("cusp_char3_candidate", Field(5)), ("typeH", Q),
        ("cusp_dual_family", F3), ("example_gsca", Field(2)), ("typeB", Field(2))])
    def test_field_guards(self, name, field):
        with pytest.raises(ConstraintViolation):
            build(name, field=field)
        with pytest.raises(ConstraintViolation):
            build(name, field=field, check_constraints=False)

    def test_unknown_names(self):
        with pytest.raises(KeyError):
            get_entry("typeE")
        with pytest.raises(ValueError):
            build("nodal", {"mu": "1"})
        with pytest.raises(ValueError):
            build("prop12", {"case": "iii"})

    def test_default_fields(self):
        assert default_field("typeH") == QI
        assert default_field("prop2_star") == F3
        assert default_field("nodal") == Q


def test_sources_are_present():
    for name in entry_names():
        e = get_entry(name)
        assert e.source and e.summary
