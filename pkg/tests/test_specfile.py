import textwrap

import pytest

from quantump2.catalog import build
from quantump2.errors import ConstraintViolation, ExprSyntaxError, InvalidMuMatrix
from quantump2.exactfield import Field
from quantump2.specfile import (SpecFormatError, dump_algebra_spec, dump_catalog_spec,
                                field_text, load_spec, parse_field_text, parse_spec_text)

QI = Field(0, (1, 0, 1))

TYPE_H = textwrap.dedent("""\
    [meta]
    format_version = 1

    [field]
    char = 0
    minpoly = t^2 + 1

    [algebra]
    generators = x, y, z
    relations =
        y*y - x*x
        z*y + t*y*z
        y*x - x*y - t*z*z

    [options]
    max_degree = 5
    power_bound = 9
    """)


class TestFieldText:
    @pytest.mark.parametrize("text, field", [
        ("Q", Field(0)), ("F7", Field(7)), ("F_5", Field(5)), ("Q[t]/(t^2+1)", QI),
        ("Q[t]/(t^2 + t + 1)", Field(0, (1, 1, 1))), ("F3[t]/(t^2+1)", Field(3, (1, 0, 1)))])
    def test_parse(self, text, field):
        assert parse_field_text(text) == field

    @pytest.mark.parametrize("field", [Field(0), Field(11), QI, Field(7, (1, 0, 1))])
    def test_round_trip(self, field):
        assert parse_field_text(field_text(field)) == field

    @pytest.mark.parametrize("text", ["R", "F", "Q[x]/(x^2+1)", "C"])
    def test_rejects(self, text):
        with pytest.raises(SpecFormatError):
            parse_field_text(text)


class TestAlgebraSection:
    def test_type_h(self):
        spec = parse_spec_text(TYPE_H)
        assert spec.field == QI
        assert spec.algebra.same_relations(build("typeH").algebra)
        assert (spec.max_degree, spec.power_bound) == (5, 9)

    def test_semicolons(self):
        spec = parse_spec_text("[algebra]\ngenerators = a b\nrelations = a*b - b*a; a^2\n")
        assert spec.algebra.nrelations == 2 and spec.algebra.names == ("a", "b")
        assert spec.field == Field(0)

    def test_round_trip(self):
        A = build("cuspidal").algebra
        again = parse_spec_text(dump_algebra_spec(A)).algebra
        assert again.same_relations(A) and again.names == A.names

    def test_load_from_disk(self, tmp_path):
        path = tmp_path / "h.ini"
        path.write_text(TYPE_H)
        assert load_spec(path).algebra.nrelations == 3

    def test_missing_file(self, tmp_path):
        with pytest.raises(SpecFormatError):
            load_spec(tmp_path / "absent.ini")


class TestCatalogSection:
    def test_build(self):
        spec = parse_spec_text("[catalog]\nname = nodal\nlambda = 3\n")
        assert spec.built.entry.name == "nodal"
        assert spec.algebra.same_relations(build("nodal", {"lambda": "3"}).algebra)

    def test_field_override(self):
        spec = parse_spec_text("[field]\nchar = 7\n\n[catalog]\nname = typeB\na = 2\n")
        assert spec.field == Field(7)

    def test_constraints(self):
        text = "[field]\nchar = 7\n\n[catalog]\nname = typeB\na = 3\n"
        with pytest.raises(ConstraintViolation):
            parse_spec_text(text)
        spec = parse_spec_text(text + "check_constraints = false\n")
        assert spec.built.violations

    @pytest.mark.parametrize("name, params, field", [
        ("typeB", {"a": "3"}, Field(7)), ("nodal", {"lambda": "t"}, Field(0, (1, 1, 1))),
        ("prop2_star", {}, Field(3))])
    def test_dump_round_trip(self, name, params, field):
        check = name != "typeB" and name != "nodal"
        spec = parse_spec_text(dump_catalog_spec(name, params, field, check))
        assert spec.field == field
        want = build(name, params, field, check_constraints=check).algebra
        assert spec.algebra.same_relations(want)


class TestGscaSection:
    def test_clifford(self):
        text = textwrap.dedent("""\
            [gsca]
            mu = 1,1,1; 1,1,1; 1,1,1
            M1 = 2,0,0; 0,0,1; 0,1,0
            M2 = 0,0,1; 0,2,0; 1,0,0
            M3 = 0,1,0; 1,0,0; 0,0,2
            """)
        spec = parse_spec_text(text)
        assert spec.gsca is not None and spec.gsca.ok
        assert spec.algebra.same_relations(build("example_gsca").algebra)

    def test_bad_mu(self):
        with pytest.raises(InvalidMuMatrix):
            parse_spec_text("[gsca]\nmu = 1,2; 2,1\nM1 = 2,0; 0,0\nM2 = 0,0; 0,2\n")

    def test_missing_form(self):
        with pytest.raises(SpecFormatError):
            parse_spec_text("[gsca]\nmu = 1,1; 1,1\nM1 = 2,0; 0,0\n")


class TestErrors:
    @pytest.mark.parametrize("text", [
        "",
        "[algebra]\nrelations = x*y\n",
        "[catalog]\nlambda = 2\n",
        "[catalog]\nname = typeE\n",
        "[algebra]\ngenerators = x\n[catalog]\nname = nodal\n",
        "[meta]\nformat_version = 2\n[algebra]\ngenerators = x\n",
        "[gsca]\nM1 = 1\n",
        "not an ini file",
    ])
    def test_format_errors(self, text):
        with pytest.raises(SpecFormatError):
            parse_spec_text(text)

    def test_relation_syntax(self):
        with pytest.raises(ExprSyntaxError):
            parse_spec_text("[algebra]\ngenerators = x, y\nrelations = x y\n")
