"""Sparse noncommutative polynomials on named generators.

Words are tuples of 0-based generator indices and are ordered degree-
lexicographically with ``x1 < x2 < x3 < ...``; the leading word of a
polynomial is its deglex-largest word. The degree-2 component of the free
algebra doubles as ``V (x) V``: no separate tensor type exists.
"""
from __future__ import annotations

from itertools import product

from .errors import (ContextMismatch, DimensionMismatch, InhomogeneousInput,
                     WrongDegreeForMode)
from .exactfield import Field, Scalar, format_scalar, is_single_term


def word_key(word):
    return (len(word), word)


class FreeAlgebra:
    """Generator context: a field plus an ordered list of generator names."""

    __slots__ = ("field", "names", "index")

    def __init__(self, field: Field, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        for nm in names:
            if not nm.isidentifier():
                raise ValueError(f"bad generator name {nm!r}")
            if nm == "t":
                raise ValueError("'t' is reserved for the field extension generator")
        self.field = field
        self.names = names
        self.index = {nm: k for k, nm in enumerate(names)}

    @property
    def ngens(self):
        return len(self.names)

    def __eq__(self, other):
        return (isinstance(other, FreeAlgebra) and self.field == other.field
                and self.names == other.names)

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"FreeAlgebra({self.field!r}, {list(self.names)})"

    def gens(self):
        return [self.gen(k) for k in range(self.ngens)]

    def gen(self, k):
        if isinstance(k, str):
            k = self.index[k]
        return NcPoly(self, {(k,): self.field.one()})

    def word(self, *letters, coeff=1):
        w = tuple(self.index[l] if isinstance(l, str) else l for l in letters)
        c = self.field(coeff)
        return NcPoly(self, {w: c} if c else {})

    def zero(self):
        return NcPoly(self, {})

    def one(self):
        return NcPoly(self, {(): self.field.one()})

    def scalar(self, c):
        c = self.field(c)
        return NcPoly(self, {(): c} if c else {})

    def from_terms(self, terms):
        out = {}
        for w, c in terms.items():
            c = self.field(c)
            if c:
                out[tuple(w)] = c
        return NcPoly(self, out)

    def words(self, degree):
        return [tuple(w) for w in product(range(self.ngens), repeat=degree)]

    def with_field(self, field):
        return FreeAlgebra(field, self.names)

    def renamed(self, names):
        return FreeAlgebra(self.field, names)


class NcPoly:
    """Immutable sparse noncommutative polynomial."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: FreeAlgebra, terms: dict):
        self.ctx = ctx
        self.terms = terms

    # -- arithmetic --------------------------------------------------------
    def _check(self, other):
        if other.ctx != self.ctx:
            raise ContextMismatch(f"{self.ctx!r} vs {other.ctx!r}")

    def _lift(self, other):
        if isinstance(other, NcPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Scalar)) or hasattr(other, "numerator"):
            return self.ctx.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w)
            v = c if v is None else v + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return NcPoly(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly(self.ctx, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s):
        s = self.ctx.field(s)
        if not s:
            return self.ctx.zero()
        return NcPoly(self.ctx, {w: c * s for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            self._check(other)
            out = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    v = out.get(w)
                    v = c1 * c2 if v is None else v + c1 * c2
                    if v:
                        out[w] = v
                    else:
                        out.pop(w, None)
            return NcPoly(self.ctx, out)
        if isinstance(other, (int, Scalar)) or hasattr(other, "numerator"):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)) or hasattr(other, "numerator"):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        result = self.ctx.one()
        for _ in range(n):
            result = result * self
        return result

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.ctx == other.ctx and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- queries ---------------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def degree(self):
        if not self.terms:
            return None
        return max(len(w) for w in self.terms)

    def is_homogeneous(self):
        return len({len(w) for w in self.terms}) <= 1

    def homogeneous_degree(self):
        """Common degree of all terms; None for the zero polynomial."""
        degs = {len(w) for w in self.terms}
        if len(degs) > 1:
            raise InhomogeneousInput(f"{self} is not homogeneous")
        return degs.pop() if degs else None

    def leading_word(self):
        return max(self.terms, key=word_key) if self.terms else None

    def leading_coeff(self):
        return self.terms[self.leading_word()] if self.terms else self.ctx.field.zero()

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.leading_coeff().inverse())

    def coeff(self, *letters):
        if len(letters) == 1 and isinstance(letters[0], tuple):
            w = letters[0]
        else:
            w = tuple(self.ctx.index[l] if isinstance(l, str) else l for l in letters)
        return self.terms.get(w, self.ctx.field.zero())

    def sorted_terms(self):
        """Terms in descending deglex order."""
        return sorted(self.terms.items(), key=lambda kv: word_key(kv[0]), reverse=True)

    def with_context(self, ctx):
        """Same terms over another context with the same number of generators."""
        if ctx.ngens != self.ctx.ngens:
            raise ContextMismatch("generator counts differ")
        if ctx.field == self.ctx.field:
            return NcPoly(ctx, dict(self.terms))
        return NcPoly(ctx, {w: ctx.field(c) for w, c in self.terms.items()})

    # -- text ------------------------------------------------------------------
    def word_text(self, word):
        return "*".join(self.ctx.names[k] for k in word) if word else "1"

    def __str__(self):
        return format_ncpoly(self)

    def __repr__(self):
        return f"NcPoly({self})"


def format_terms(items, render_word):
    """Shared canonical rendering for (word, Scalar) pairs."""
    if not items:
        return "0"
    chunks = []
    for word, c in items:
        text = render_word(word)
        if is_single_term(c):
            s = format_scalar(c)
            neg = s.startswith("-")
            mag = s[1:] if neg else s
            if text == "1":
                body = mag
            elif mag == "1":
                body = text
            else:
                body = f"{mag}*{text}"
        else:
            neg = False
            body = f"({format_scalar(c)})" + ("" if text == "1" else f"*{text}")
        chunks.append((neg, body))
    out = ("-" if chunks[0][0] else "") + chunks[0][1]
    for neg, body in chunks[1:]:
        out += (" - " if neg else " + ") + body
    return out


def format_ncpoly(p: NcPoly) -> str:
    return format_terms(p.sorted_terms(), p.word_text)


class Echelon:
    """Incremental reduced row echelon form over sparse word-indexed vectors.

    Each stored row is monic in its pivot (its deglex-largest word) and no row
    contains another row's pivot.
    """

    def __init__(self):
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        vec = dict(vec)
        for pw in [w for w in vec if w in self.rows]:
            c = vec.get(pw)
            if not c:
                continue
            for w, rc in self.rows[pw].items():
                v = vec.get(w)
                v = -(c * rc) if v is None else v - c * rc
                if v:
                    vec[w] = v
                else:
                    vec.pop(w, None)
        return vec

    def add(self, vec: dict):
        """Insert vec; returns the new pivot word or None if vec was dependent."""
        r = self.reduce(vec)
        if not r:
            return None
        lw = max(r, key=word_key)
        inv = r[lw].inverse()
        r = {w: c * inv for w, c in r.items()}
        for pw, row in self.rows.items():
            c = row.get(lw)
            if c:
                for w, rc in r.items():
                    v = row.get(w)
                    v = -(c * rc) if v is None else v - c * rc
                    if v:
                        row[w] = v
                    else:
                        row.pop(w, None)
        self.rows[lw] = r
        return lw

    def basis(self):
        return [self.rows[w] for w in sorted(self.rows, key=word_key, reverse=True)]


def span_basis(elems, degree=None):
    """Reduced echelon basis of the span of homogeneous elements of one degree.

    Returns ``(basis, dimension)``; basis elements are monic in their leading
    words and listed by descending leading word.
    """
    elems = list(elems)
    for e in elems:
        d = e.homogeneous_degree()
        if d is None:
            continue
        if degree is None:
            degree = d
        elif d != degree:
            raise InhomogeneousInput(f"{e} has degree {d}, expected {degree}")
    if not elems:
        return [], 0
    ctx = elems[0].ctx
    ech = Echelon()
    for e in elems:
        if e.ctx != ctx:
            raise ContextMismatch("span_basis: mixed contexts")
        ech.add(e.terms)
    basis = [NcPoly(ctx, row) for row in ech.basis()]
    return basis, len(basis)


def _matrix_rows(m, field):
    if hasattr(m, "matrix"):
        m = m.matrix
    return [[field(v) for v in row] for row in m]


def linear_image(m, k, field):
    """Image of generator k under the row-convention map: sum_j m[k][j] x_j."""
    return [(j, m[k][j]) for j in range(len(m)) if m[k][j]]


def apply_linear_map(p: NcPoly, m, mode="all") -> NcPoly:
    """Apply a generator change of basis.

    Matrices use the row convention ``x_i -> sum_j m[i][j] x_j``. Mode ``all``
    substitutes in every letter; mode ``second_tensor_factor`` applies
    ``id (x) phi`` to a homogeneous degree-2 element.
    """
    field = p.ctx.field
    m = _matrix_rows(m, field)
    n = p.ctx.ngens
    if len(m) != n or any(len(row) != n for row in m):
        raise DimensionMismatch(f"matrix must be {n}x{n}")
    images = [linear_image(m, k, field) for k in range(n)]
    out = {}

    def acc(w, c):
        v = out.get(w)
        v = c if v is None else v + c
        if v:
            out[w] = v
        else:
            out.pop(w, None)

    if mode == "all":
        for w, c in p.terms.items():
            for choice in product(*(images[k] for k in w)):
                coeff = c
                for _, s in choice:
                    coeff = coeff * s
                acc(tuple(j for j, _ in choice), coeff)
    elif mode == "second_tensor_factor":
        if p.terms and p.homogeneous_degree() != 2:
            raise WrongDegreeForMode("second_tensor_factor needs degree-2 input")
        for (a, b), c in p.terms.items():
            for j, s in images[b]:
                acc((a, j), c * s)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return NcPoly(p.ctx, out)
