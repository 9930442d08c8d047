"""Recompute every catalog golden and report which ones match.

    python3 scripts/reproduce.py                 # table on stdout
    python3 scripts/reproduce.py --json out.json # also write the rows
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from quantump2.catalog import build, entry_names, get_entry
from quantump2.ncgroebner import hilbert_function
from quantump2.pointscheme import classify_cubic, multilinearize, pointscheme_cubic
from quantump2.specfile import field_text, parse_field_text


@dataclass
class RunConfig:
    entries: list = field(default_factory=entry_names)
    field: str = ""              # empty: each entry's default field
    max_degree: int = 4


@dataclass
class Row:
    entry: str
    field: str
    cubic: str
    cubic_ok: object
    cls: str
    cls_ok: object
    hilbert: list
    hilbert_ok: object
    seconds: float


def proportional(f, g):
    if not f or not g:
        return not f and not g
    e = next(iter(g.terms))
    c = f.coeff(e) / g.coeff(e)
    return bool(c) and f == g * c


def check_entry(name, cfg: RunConfig) -> Row:
    start = time.perf_counter()
    b = build(name, field=parse_field_text(cfg.field) if cfg.field else None)
    A = b.algebra
    cubic, cubic_ok, cls, cls_ok = "-", None, "-", None
    if A.nrelations == A.ngens == 3:
        f = pointscheme_cubic(multilinearize(A))
        cubic = str(f.primitive()) if f else "0"
        cls = classify_cubic(f).tag
        if b.expected_cubic is not None:
            cubic_ok = proportional(f, b.expected_cubic.value)
        if b.expected_class is not None:
            cls_ok = cls == b.expected_class.value
    h = hilbert_function(A, cfg.max_degree)
    hilbert_ok = None
    if b.expected_hilbert is not None:
        want = list(b.expected_hilbert.value)
        k = min(len(want), len(h))
        hilbert_ok = want[:k] == h[:k]
    return Row(name, field_text(b.field), cubic, cubic_ok, cls, cls_ok, h, hilbert_ok,
               round(time.perf_counter() - start, 3))


def _mark(ok):
    return {True: "ok", False: "MISMATCH", None: "-"}[ok]


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--entry", action="append", help="restrict to these entries")
    p.add_argument("--field", default="")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--json", help="write rows to this file")
    args = p.parse_args(argv)
    cfg = RunConfig(entries=args.entry or entry_names(), field=args.field,
                    max_degree=args.max_degree)
    for name in cfg.entries:
        get_entry(name)

    rows = [check_entry(name, cfg) for name in cfg.entries]
    for r in rows:
        print(f"{r.entry:22s} {r.field:18s} cubic {_mark(r.cubic_ok):8s} "
              f"class {r.cls:20s} {_mark(r.cls_ok):8s} "
              f"hilbert {' '.join(map(str, r.hilbert))} {_mark(r.hilbert_ok)}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump({"config": asdict(cfg), "rows": [asdict(r) for r in rows]}, fh, indent=2)
    bad = [r.entry for r in rows if False in (r.cubic_ok, r.cls_ok, r.hilbert_ok)]
    if bad:
        print("mismatches: " + ", ".join(bad))
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
