"""Algebra spec files: a small INI document describing a field and an algebra.

Example::

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
    max_degree = 6
    power_bound = 12

Instead of ``[algebra]`` a file may name a ``[catalog]`` entry (key ``name``
plus one key per parameter) or give a ``[gsca]`` section with ``mu`` and
``M1..Mn`` matrices in the ``a,b;c,d`` syntax.
"""
from __future__ import annotations

import configparser
import re
from dataclasses import dataclass

from .catalog import BuiltEntry, build, get_entry
from .errors import ParseError
from .exactfield import Field
from .parser import parse_matrix, parse_univariate
from .quadalg import QuadraticAlgebra

FORMAT_VERSION = 1

_FIELD_RE = re.compile(r"^(?:(Q)|F_?(\d+))(?:\[t\]/\((.+)\))?$")


class SpecFormatError(ParseError):
    pass


@dataclass
class AlgebraSpec:
    field: Field
    algebra: QuadraticAlgebra
    built: BuiltEntry = None
    gsca: object = None             # GscaResult when the file has a [gsca] section
    max_degree: int = 6
    power_bound: int = 12


def make_field(char=0, minpoly=None) -> Field:
    """Field from a characteristic and an optional minpoly written in t."""
    char = int(char)
    if minpoly is None or not str(minpoly).strip():
        return Field(char)
    coeffs = parse_univariate(str(minpoly), char)
    return Field(char, coeffs)


def parse_field_text(text) -> Field:
    """'Q', 'F7', 'Q[t]/(t^2+1)' or 'F3[t]/(t^2+1)'."""
    compact = re.sub(r"\s+", "", text)
    m = _FIELD_RE.match(compact)
    if not m:
        raise SpecFormatError(f"cannot read field {text!r}; use Q, F7 or Q[t]/(t^2+1)")
    char = 0 if m.group(1) else int(m.group(2))
    return make_field(char, m.group(3))


def field_text(field: Field) -> str:
    return field.describe().replace("F_", "F")


def _split_list(value):
    return [v for v in re.split(r"[,\s]+", value.strip()) if v]


def _split_relations(value):
    parts = []
    for line in value.replace(";", "\n").splitlines():
        if line.strip():
            parts.append(line.strip())
    return parts


def parse_spec_text(text) -> AlgebraSpec:
    cp = configparser.ConfigParser(interpolation=None)
    cp.optionxform = str
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise SpecFormatError(f"malformed spec file: {exc}") from None
    if cp.has_section("meta"):
        version = cp.get("meta", "format_version", fallback=str(FORMAT_VERSION))
        if version.strip() != str(FORMAT_VERSION):
            raise SpecFormatError(f"unsupported format_version {version}")
    options = cp["options"] if cp.has_section("options") else {}
    max_degree = int(options.get("max_degree", 6))
    power_bound = int(options.get("power_bound", 12))

    field = None
    if cp.has_section("field"):
        sec = cp["field"]
        field = make_field(sec.get("char", "0"), sec.get("minpoly"))

    kinds = [s for s in ("algebra", "catalog", "gsca") if cp.has_section(s)]
    if len(kinds) != 1:
        raise SpecFormatError("a spec file needs exactly one of [algebra], [catalog], [gsca]")
    kind = kinds[0]

    if kind == "catalog":
        sec = dict(cp["catalog"])
        name = sec.pop("name", None)
        if not name:
            raise SpecFormatError("[catalog] needs a name")
        check = sec.pop("check_constraints", "true").strip().lower() not in ("0", "false", "no")
        try:
            get_entry(name)
        except KeyError as exc:
            raise SpecFormatError(str(exc.args[0])) from None
        built = build(name, sec, field, check_constraints=check)
        return AlgebraSpec(built.field, built.algebra, built=built,
                           max_degree=max_degree, power_bound=power_bound)

    field = field or Field(0)
    if kind == "algebra":
        sec = cp["algebra"]
        if "generators" not in sec:
            raise SpecFormatError("[algebra] needs generators")
        names = _split_list(sec["generators"])
        rels = _split_relations(sec.get("relations", ""))
        name = sec.get("name", "")
        A = QuadraticAlgebra.create(field, names, rels, name)
        return AlgebraSpec(field, A, max_degree=max_degree, power_bound=power_bound)

    from .gsca import GscaSpec, MuMatrix, gsca_from_definition
    sec = cp["gsca"]
    if "mu" not in sec:
        raise SpecFormatError("[gsca] needs mu")
    mu = MuMatrix(field, parse_matrix(sec["mu"], field))
    forms = []
    for k in range(mu.n):
        key = f"M{k + 1}"
        if key not in sec:
            raise SpecFormatError(f"[gsca] needs {key}")
        forms.append(parse_matrix(sec[key], field))
    names = _split_list(sec["generators"]) if "generators" in sec else None
    res = gsca_from_definition(GscaSpec(mu, forms), names)
    return AlgebraSpec(field, res.algebra, gsca=res, max_degree=max_degree,
                       power_bound=power_bound)


def load_spec(path) -> AlgebraSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecFormatError(f"cannot read {path}: {exc.strerror}") from None
    return parse_spec_text(text)


def _field_lines(field):
    lines = ["[field]", f"char = {field.characteristic}"]
    if field.minpoly is not None:
        from .univariate import format_univariate
        lines.append(f"minpoly = {format_univariate(field.minpoly)}")
    return lines


def dump_catalog_spec(name, params, field: Field, check_constraints=True) -> str:
    lines = ["[meta]", f"format_version = {FORMAT_VERSION}", ""] + _field_lines(field)
    lines += ["", "[catalog]", f"name = {name}"]
    for k, v in sorted(params.items()):
        lines.append(f"{k} = {v}")
    if not check_constraints:
        lines.append("check_constraints = false")
    return "\n".join(lines) + "\n"


def dump_algebra_spec(A: QuadraticAlgebra, max_degree=6, power_bound=12) -> str:
    lines = ["[meta]", f"format_version = {FORMAT_VERSION}", ""] + _field_lines(A.field)
    lines += ["", "[algebra]", f"generators = {', '.join(A.names)}"]
    if A.name:
        lines.append(f"name = {A.name}")
    lines.append("relations =")
    lines += [f"    {r}" for r in A.relation_strings()]
    lines += ["", "[options]", f"max_degree = {max_degree}", f"power_bound = {power_bound}"]
    return "\n".join(lines) + "\n"
