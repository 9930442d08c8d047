"""Command-line front end.

Exit codes: 0 on success, 1 when a mathematical check fails (the verdict and
any witness are printed), 2 for usage, parse and input-domain errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import catalog
from .errors import AlgebraError, ConstraintViolation, DimensionMismatch, ParseError
from .exactfield import Scalar, format_scalar
from .parser import parse_commpoly, parse_matrix, parse_ncpoly, parse_point
from .specfile import (FORMAT_VERSION, AlgebraSpec, dump_catalog_spec, field_text,
                       load_spec, parse_field_text)

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- rendering helpers ----------------------------------------------------------------

def _s(x):
    if isinstance(x, Scalar):
        return format_scalar(x)
    return str(x)


def _point(p):
    return "(" + ", ".join(_s(c) for c in p) + ")"


def _matrix(m):
    return "; ".join(", ".join(_s(c) for c in row) for row in m)


def _algebra_doc(A):
    return {"generators": list(A.names), "relations": A.relation_strings(),
            "dim_relations": A.nrelations, "field": field_text(A.field), "name": A.name}


def _algebra_text(A):
    lines = [f"field: {field_text(A.field)}", f"generators: {', '.join(A.names)}",
             f"relations ({A.nrelations}):"]
    lines += [f"  {r}" for r in A.relation_strings()] or ["  (none)"]
    return lines


def _expected_doc(built):
    out = {}
    for key, exp in (("cubic", built.expected_cubic), ("class", built.expected_class),
                     ("hilbert", built.expected_hilbert)):
        if exp is None:
            continue
        value = exp.value
        value = list(value) if isinstance(value, tuple) else str(value)
        out[key] = {"value": value, "provenance": exp.provenance}
    return out


class Result:
    def __init__(self, command):
        self.code = OK
        self.doc = {"command": command, "format_version": FORMAT_VERSION}
        self.lines = []

    def fail(self, verdict):
        self.code = FAIL
        self.doc["verdict"] = verdict


# -- loading ------------------------------------------------------------------------

def _parse_params(items):
    params = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError(f"--param expects key=value, got {item!r}")
        k, v = item.split("=", 1)
        params[k.strip()] = v.strip()
    return params


def _load(args) -> AlgebraSpec:
    if getattr(args, "spec", None) and getattr(args, "catalog", None):
        raise UsageError("give either --spec or --catalog, not both")
    if getattr(args, "spec", None):
        return load_spec(args.spec)
    if getattr(args, "catalog", None):
        field = parse_field_text(args.field) if args.field else None
        try:
            built = catalog.build(args.catalog, _parse_params(args.param), field,
                                  check_constraints=not args.no_check)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        return AlgebraSpec(built.field, built.algebra, built=built)
    raise UsageError("an algebra is needed: pass --spec FILE or --catalog NAME")


# -- commands -----------------------------------------------------------------------

def cmd_describe(args, res):
    spec = _load(args)
    A = spec.algebra
    res.doc["algebra"] = _algebra_doc(A)
    res.lines += _algebra_text(A)
    if spec.built is not None:
        b = spec.built
        res.doc["catalog"] = {"name": b.entry.name, "source": b.entry.source,
                              "params": {k: _s(v) for k, v in b.params.items()},
                              "expected": _expected_doc(b), "violations": b.violations}
        res.lines.append(f"catalog entry: {b.entry.name} ({b.entry.source})")
        for k, v in res.doc["catalog"]["expected"].items():
            res.lines.append(f"expected {k}: {v['value']} [{v['provenance']}]")
        for v in b.violations:
            res.lines.append(f"constraint bypassed: {v}")
    if spec.gsca is not None:
        res.doc["gsca"] = {"y": [str(y) for y in spec.gsca.y], "warning": spec.gsca.warning}
        if spec.gsca.warning:
            res.lines.append(f"warning: {spec.gsca.warning}")


def cmd_hilbert(args, res):
    spec = _load(args)
    D = args.max_degree if args.max_degree is not None else spec.max_degree
    h = spec.algebra.hilbert(D)
    res.doc["hilbert"] = h
    res.doc["max_degree"] = D
    res.lines.append(" ".join(map(str, h)))
    b = spec.built
    if b is not None and b.expected_hilbert is not None:
        exp = list(b.expected_hilbert.value)
        k = min(len(exp), len(h))
        match = exp[:k] == h[:k]
        res.doc["expected"] = exp
        res.doc["matches_expected"] = match
        res.lines.append(f"expected prefix {' '.join(map(str, exp))}: "
                         f"{'match' if match else 'MISMATCH'}")


def cmd_dual(args, res):
    from .quadalg import koszul_dual
    A = _load(args).algebra
    names = [n.strip() for n in args.names.split(",")] if args.names else None
    D = koszul_dual(A, names)
    res.doc["algebra"] = _algebra_doc(D)
    res.lines += _algebra_text(D)


def _map_command(args, res, op):
    A = _load(args).algebra
    m = parse_matrix(args.matrix, A.field)
    B = op(A, m)
    res.doc["matrix"] = _matrix(m)
    res.doc["algebra"] = _algebra_doc(B)
    res.lines += _algebra_text(B)


def cmd_twist(args, res):
    from .quadalg import is_graded_automorphism, twist
    _map_command(args, res, twist)
    A = _load(args).algebra
    auto = is_graded_automorphism(A, parse_matrix(args.matrix, A.field))
    res.doc["automorphism"] = auto
    if not auto:
        res.lines.append("note: the matrix does not preserve the relations, so this is a "
                         "formal transform of the relation space rather than a twist")


def cmd_subst(args, res):
    from .quadalg import substitute_generators
    _map_command(args, res, substitute_generators)


def _parse_delta(text, base):
    out = {}
    for item in text.split(","):
        if not item.strip():
            continue
        if "=" not in item:
            raise UsageError(f"--delta expects gen=expr items, got {item!r}")
        g, expr = item.split("=", 1)
        g = g.strip()
        if g not in base.names:
            raise UsageError(f"--delta names unknown generator {g!r}")
        out[g] = parse_ncpoly(expr, base.ctx)
    return [out.get(g, base.ctx.zero()) for g in base.names]


def cmd_ore(args, res):
    from .quadalg import OreData, ore_extension, validate_ore
    spec = _load(args)
    if args.phi is None and args.delta is None:
        if spec.built is None or spec.built.ore is None:
            raise UsageError("pass --phi and --delta (this algebra carries no Ore data)")
        data = spec.built.ore
        if args.name:
            data = OreData(data.base, data.phi, data.delta, args.name)
    else:
        if args.phi is None or args.delta is None:
            raise UsageError("--phi and --delta go together")
        base = spec.algebra
        data = OreData(base, parse_matrix(args.phi, base.field), _parse_delta(args.delta, base),
                       args.name or "z")
    check = validate_ore(data)
    res.doc["base"] = _algebra_doc(data.base)
    res.doc["valid"] = check.ok
    if not check.ok:
        res.fail("InvalidOreData")
        res.doc["reason"] = check.reason
        res.doc["failing_relation"] = check.failing_relation
        res.lines.append(f"invalid Ore data: {check.reason}"
                         + (f" (relation {check.failing_relation})" if check.failing_relation else ""))
        return
    E = ore_extension(data)
    res.doc["algebra"] = _algebra_doc(E)
    res.lines.append("Ore data valid")
    res.lines += _algebra_text(E)
    if spec.built is not None and spec.built.ore is not None and args.phi is None:
        same = E.same_relations(spec.algebra)
        res.doc["reproduces_catalog"] = same
        res.lines.append(f"reproduces the catalog relations: {same}")


def cmd_point_scheme(args, res):
    from .errors import NotOnScheme, RankDeficient
    from .pointscheme import (classify_cubic, fit_projective_extension, multilinearize,
                              pointscheme_cubic, sample_points, sigma_eval, verify_graph)
    from .commalg import proportional
    spec = _load(args)
    A = spec.algebra
    system = multilinearize(A)
    f = pointscheme_cubic(system)
    res.doc["cubic"] = str(f.primitive())
    res.doc["determinant"] = str(f)
    res.lines.append(f"cubic: {f.primitive()}")
    b = spec.built
    if b is not None and b.expected_cubic is not None:
        match = proportional(f, b.expected_cubic.value)
        res.doc["cubic_matches_expected"] = match
        res.lines.append(f"expected cubic {b.expected_cubic.value.primitive()}: "
                         f"{'match' if match else 'MISMATCH'} (up to scalar)")
    rng = random.Random(args.seed)
    if args.classify:
        cls = classify_cubic(f, rng)
        res.doc["class"] = cls.tag
        res.doc["singular_points"] = [_point(p) for p in cls.singular_points]
        res.lines.append(f"class: {cls.tag}")
        if cls.singular_points:
            res.lines.append("singular points: " + ", ".join(_point(p) for p in cls.singular_points))
        if b is not None and b.expected_class is not None:
            match = cls.tag == b.expected_class.value
            res.doc["class_matches_expected"] = match
            res.lines.append(f"expected class {b.expected_class.value}: "
                             f"{'match' if match else 'MISMATCH'}")
    if args.sigma:
        p = parse_point(args.sigma, A.field)
        try:
            q = sigma_eval(system, p)
        except (NotOnScheme, RankDeficient) as exc:
            res.fail(type(exc).__name__)
            res.doc["sigma"] = None
            res.lines.append(f"sigma{_point(p)}: {type(exc).__name__}: {exc}")
        else:
            res.doc["sigma"] = _point(q)
            res.lines.append(f"sigma{_point(p)} = {_point(q)}")
    if args.fit_extension:
        samples = sample_points(system, args.samples, rng)
        res.doc["graph_verified"] = verify_graph(system, samples)
        ext = fit_projective_extension(system, samples, rng=rng)
        if ext is None:
            res.fail("NoExtension")
            res.doc["extension"] = None
            res.lines.append(f"no projective extension of sigma (checked {len(samples)} points)")
        else:
            from .quadalg import twist
            tw = twist(A, ext.twist_map())
            res.doc["extension"] = _matrix(ext.point_matrix)
            res.doc["twist_map"] = _matrix(ext.twist_map().matrix)
            res.doc["twisted"] = _algebra_doc(tw)
            res.lines.append(f"extension T: {_matrix(ext.point_matrix)}")
            res.lines.append(f"twist by T^-1: {_matrix(ext.twist_map().matrix)}")
            res.lines += _algebra_text(tw)


def _split_elements(text, A):
    return [parse_ncpoly(e, A.ctx) for e in text.split(";") if e.strip()]


def cmd_normal(args, res):
    from .errors import ZeroInAlgebra
    from .ncgroebner import is_normalizing_sequence
    A = _load(args).algebra
    seq = _split_elements(args.elements, A)
    res.doc["elements"] = [str(e) for e in seq]
    try:
        verdict = is_normalizing_sequence(A, seq)
    except ZeroInAlgebra as exc:
        res.fail("ZeroInAlgebra")
        res.lines.append(f"not a normalizing sequence: {exc}")
        return
    res.doc["normalizing"] = verdict.ok
    res.doc["thetas"] = [_matrix(t) for t in verdict.thetas]
    if verdict.ok:
        res.lines.append("normalizing sequence")
        for k, t in enumerate(verdict.thetas):
            res.lines.append(f"  theta_{k + 1}: {_matrix(t)}")
    else:
        res.fail("NotNormalizing")
        res.doc["failed_index"] = verdict.failed_index
        res.lines.append(f"not normalizing: element {verdict.failed_index + 1} "
                         f"({seq[verdict.failed_index]}) is not normal modulo its predecessors")


def cmd_gsca(args, res):
    from .gsca import cv_regularity_check
    spec = _load(args)
    carried = spec.built.skew_ring if spec.built is not None else None
    if args.quadrics:
        # explicit quadrics live in the entry's skew ring when it has one
        S = carried if carried is not None else spec.algebra
        quadrics = _split_elements(args.quadrics, S)
    elif spec.built is not None and spec.built.skew_ring is not None:
        S, quadrics = spec.built.skew_ring, spec.built.quadrics
    elif spec.gsca is not None:
        g = spec.gsca
        res.doc["algebra"] = _algebra_doc(g.algebra)
        res.doc["y"] = [str(y) for y in g.y]
        res.doc["normalizing"] = g.normalizing.ok
        res.lines += _algebra_text(g.algebra)
        res.lines.append("degree-2 generators: " + ", ".join(str(y) for y in g.y))
        if g.warning:
            res.fail("NotNormalizing")
            res.doc["warning"] = g.warning
            res.lines.append(f"warning: {g.warning}")
        return
    else:
        raise UsageError("pass --quadrics, or use a catalog entry that carries a skew ring")
    pb = args.power_bound if args.power_bound is not None else spec.power_bound
    r = cv_regularity_check(S, quadrics, pb)
    res.doc["skew_ring"] = _algebra_doc(S)
    res.doc["quadrics"] = [str(q) for q in quadrics]
    res.doc["passed"] = r.passed
    if r.passed:
        res.doc["verdict"] = "Pass"
        res.doc["dual"] = _algebra_doc(r.dual)
        res.lines.append("Pass: normalizing sequence with empty zero locus")
        res.lines.append("Koszul dual of the quotient:")
        res.lines += _algebra_text(r.dual)
        if carried is not None:
            same = r.dual.renamed(spec.algebra.names).same_relations(spec.algebra)
            res.doc["dual_matches_algebra"] = same
            res.lines.append(f"dual equals the catalog algebra: {same}")
        return
    res.fail("Fail")
    res.doc["stage"] = r.stage
    res.doc["detail"] = r.detail
    res.lines.append(f"Fail at stage {r.stage} "
                     f"({'normalizing sequence' if r.stage == 1 else 'empty zero locus'}): {r.detail}")
    if r.stage == 2 and r.witness:
        u, v = r.witness
        fieldK = u[0].field
        res.doc["witness"] = {"u": _point(u), "v": _point(v), "field": field_text(fieldK)}
        res.lines.append(f"witness over {field_text(fieldK)}: u = {_point(u)}, v = {_point(v)}")
    elif r.stage == 1 and r.witness is not None:
        res.doc["witness"] = {"failed_index": r.witness}


def cmd_classify_cubic(args, res):
    from .pointscheme import classify_cubic
    field = parse_field_text(args.field) if args.field else parse_field_text("Q")
    f = parse_commpoly(args.poly, field)
    cls = classify_cubic(f, random.Random(args.seed))
    res.doc["cubic"] = str(f)
    res.doc["field"] = field_text(field)
    res.doc["class"] = cls.tag
    res.doc["singular_points"] = [_point(p) for p in cls.singular_points]
    res.lines.append(f"{f}: {cls.tag}")
    if cls.singular_points:
        res.lines.append("singular points: " + ", ".join(_point(p) for p in cls.singular_points))
    if cls.tag == "NeedsExtension":
        res.fail("NeedsExtension")
        res.lines.append(cls.note)


def cmd_catalog(args, res):
    if args.action == "list":
        entries = []
        for name in catalog.entry_names():
            e = catalog.get_entry(name)
            params = [f"{p.name}={p.default}" for p in e.params]
            entries.append({"name": name, "summary": e.summary, "source": e.source,
                            "params": params, "default_field": field_text(catalog.default_field(name))})
            res.lines.append(f"{name}({', '.join(params)}) over "
                             f"{field_text(catalog.default_field(name))}: {e.summary}")
        res.doc["entries"] = entries
        return
    if not args.name:
        raise UsageError("catalog build needs --name")
    field = parse_field_text(args.field) if args.field else None
    params = _parse_params(args.param)
    try:
        b = catalog.build(args.name, params, field, check_constraints=not args.no_check)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    res.doc["name"] = args.name
    res.doc["params"] = {k: _s(v) for k, v in b.params.items()}
    res.doc["algebra"] = _algebra_doc(b.algebra)
    res.doc["expected"] = _expected_doc(b)
    res.doc["violations"] = b.violations
    res.doc["source"] = b.entry.source
    res.lines += _algebra_text(b.algebra)
    for k, v in res.doc["expected"].items():
        res.lines.append(f"expected {k}: {v['value']} [{v['provenance']}]")
    for v in b.violations:
        res.lines.append(f"constraint bypassed: {v}")
    if args.write:
        text = dump_catalog_spec(args.name, params, b.field, not args.no_check)
        with open(args.write, "w", encoding="utf-8") as fh:
            fh.write(text)
        res.doc["written"] = args.write
        res.lines.append(f"spec written to {args.write}")


# -- parser -------------------------------------------------------------------------

def _source_options(p):
    p.add_argument("--spec", help="algebra spec file (INI)")
    p.add_argument("--catalog", metavar="NAME", help="build a catalog entry instead of --spec")
    p.add_argument("--param", action="append", metavar="K=V", help="catalog parameter")
    p.add_argument("--field", help="field such as Q, F7 or Q[t]/(t^2+1)")
    p.add_argument("--no-check", action="store_true", help="bypass catalog constraints")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    parser = argparse.ArgumentParser(prog="quantump2", description=__doc__.splitlines()[0],
                                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.set_defaults(func=fn)
        return p

    p = add("describe", cmd_describe, "generators, relation basis and dim W")
    _source_options(p)
    p = add("hilbert", cmd_hilbert, "Hilbert function through a degree")
    _source_options(p)
    p.add_argument("--max-degree", type=int)
    p = add("dual", cmd_dual, "Koszul dual")
    _source_options(p)
    p.add_argument("--names", help="comma-separated generator names for the dual")
    for name, fn in (("twist", cmd_twist), ("subst", cmd_subst)):
        p = add(name, fn, f"{name} by a generator matrix (row convention)")
        _source_options(p)
        p.add_argument("--matrix", required=True, help="rows 'a,b,c;d,e,f;g,h,i'")
    p = add("ore", cmd_ore, "validate Ore data and build the extension")
    _source_options(p)
    p.add_argument("--phi")
    p.add_argument("--delta", help="'g1=expr,g2=expr'")
    p.add_argument("--name", help="name of the new generator")
    p = add("point-scheme", cmd_point_scheme, "point-scheme cubic and sigma")
    _source_options(p)
    p.add_argument("--classify", action="store_true")
    p.add_argument("--sigma", metavar="a1,a2,a3")
    p.add_argument("--fit-extension", action="store_true")
    p.add_argument("--samples", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p = add("normal", cmd_normal, "normalizing-sequence check")
    _source_options(p)
    p.add_argument("--elements", required=True, help="'e1; e2; ...'")
    p = add("gsca", cmd_gsca, "two-stage regularity check or GSCA construction")
    _source_options(p)
    p.add_argument("--quadrics", help="'q1; q2; q3'")
    p.add_argument("--power-bound", type=int)
    p = add("classify-cubic", cmd_classify_cubic, "classify a plane cubic")
    p.add_argument("--poly", required=True)
    p.add_argument("--field")
    p.add_argument("--seed", type=int, default=0)
    p = add("catalog", cmd_catalog, "list or build catalog entries")
    p.add_argument("action", choices=("list", "build"))
    p.add_argument("--name")
    p.add_argument("--param", action="append", metavar="K=V")
    p.add_argument("--field")
    p.add_argument("--no-check", action="store_true")
    p.add_argument("--write", metavar="FILE", help="write a spec file for the built entry")
    return parser


def render(res, fmt):
    if fmt == "structured":
        res.doc.setdefault("verdict", "OK" if res.code == OK else "Fail")
        return json.dumps(res.doc, sort_keys=True, indent=2, ensure_ascii=False)
    return "\n".join(res.lines)


def run_command(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    res = Result(args.command)
    try:
        args.func(args, res)
    except (UsageError, ParseError, ConstraintViolation, DimensionMismatch, ValueError) as exc:
        kind = type(exc).__name__
        if args.format == "structured":
            res.doc.update({"error": kind, "message": str(exc), "verdict": "Error"})
            print(json.dumps(res.doc, sort_keys=True, indent=2), file=out)
        else:
            print(f"error ({kind}): {exc}", file=err)
        return USAGE
    except AlgebraError as exc:
        res.fail(type(exc).__name__)
        res.doc["message"] = str(exc)
        res.lines.append(f"{type(exc).__name__}: {exc}")
    print(render(res, args.format), file=out)
    return res.code


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
