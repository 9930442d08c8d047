"""Truncated noncommutative Groebner bases for graded ideals of the free algebra.

The completion is the usual diamond-lemma procedure run degree by degree:
at degree ``d`` the candidates are the input relations of degree ``d`` and the
S-polynomials of all overlap ambiguities of length ``d``; they are reduced
against the (final) lower-degree part and row-reduced among themselves. The
result is the reduced Groebner basis truncated at the degree bound.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field as dc_field

from .errors import DegreeExceedsBound, InhomogeneousInput, ZeroInAlgebra
from .linalg import inverse, matmul, nullspace, rank, solve, transpose
from .ncpoly import Echelon, NcPoly, word_key

DEFAULT_BOUND = 6


def _axpy(out, c, vec):
    """out += c * vec for sparse dict vectors."""
    for w, v in vec.items():
        cur = out.get(w)
        cur = c * v if cur is None else cur + c * v
        if cur:
            out[w] = cur
        else:
            out.pop(w, None)


class TruncatedGB:
    """Reduced Groebner basis valid through degree ``bound``."""

    def __init__(self, ctx, bound):
        self.ctx = ctx
        self.bound = bound
        self.elements = {}            # leading word -> monic terms dict
        self.by_degree = defaultdict(list)
        self._lead_lengths = []
        self._memo = {}
        self._normal_words = {0: [()]}

    # -- construction helpers ---------------------------------------------
    def _insert(self, lw, terms):
        self.elements[lw] = terms
        self.by_degree[len(lw)].append(lw)
        if len(lw) not in self._lead_lengths:
            self._lead_lengths.append(len(lw))
            self._lead_lengths.sort()
        for w in [w for w in self._memo if len(w) >= len(lw)]:
            del self._memo[w]
        for d in [d for d in self._normal_words if d >= len(lw)]:
            del self._normal_words[d]

    def _find_reducible(self, word):
        # deglex-largest reducible subword first, leftmost on ties
        elements = self.elements
        n = len(word)
        best = None
        for length in reversed(self._lead_lengths):
            if length > n:
                continue
            for i in range(n - length + 1):
                sub = word[i:i + length]
                if sub in elements and (best is None or sub > best[1]):
                    best = (i, sub)
            if best is not None:
                return best
        return None

    def _word_nf(self, word):
        memo = self._memo
        if word in memo:
            return memo[word]
        one = self.ctx.field.one()
        stack = [word]
        while stack:
            u = stack[-1]
            if u in memo:
                stack.pop()
                continue
            hit = self._find_reducible(u)
            if hit is None:
                memo[u] = {u: one}
                stack.pop()
                continue
            i, lw = hit
            pre, post = u[:i], u[i + len(lw):]
            g = self.elements[lw]
            deps = [pre + tw + post for tw in g if tw != lw]
            missing = [x for x in deps if x not in memo]
            if missing:
                stack.extend(missing)
                continue
            result = {}
            for tw, tc in g.items():
                if tw != lw:
                    _axpy(result, -tc, memo[pre + tw + post])
            memo[u] = result
            stack.pop()
        return memo[word]

    def _reduce_terms(self, terms):
        out = {}
        for w, c in terms.items():
            _axpy(out, c, self._word_nf(w))
        return out

    # -- public API ----------------------------------------------------------
    def normal_form(self, p: NcPoly) -> NcPoly:
        """Canonical representative of p modulo the ideal (through the bound)."""
        d = p.degree()
        if d is not None and d > self.bound:
            raise DegreeExceedsBound(f"degree {d} exceeds Groebner bound {self.bound}")
        return NcPoly(self.ctx, self._reduce_terms(p.terms))

    def reduces_to_zero(self, p: NcPoly) -> bool:
        return self.normal_form(p).is_zero()

    def leading_words(self):
        return sorted(self.elements, key=word_key)

    def polys(self, degree=None):
        words = self.by_degree[degree] if degree is not None else self.leading_words()
        return [NcPoly(self.ctx, dict(self.elements[w])) for w in sorted(words, key=word_key)]

    def normal_words(self, d):
        if d > self.bound:
            raise DegreeExceedsBound(f"degree {d} exceeds Groebner bound {self.bound}")
        if d in self._normal_words:
            return self._normal_words[d]
        prev = self.normal_words(d - 1)
        leads = self.elements
        lengths = self._lead_lengths
        out = []
        for w in prev:
            for a in range(self.ctx.ngens):
                u = w + (a,)
                if not any(u[len(u) - L:] in leads for L in lengths if L <= len(u)):
                    out.append(u)
        self._normal_words[d] = out
        return out

    def hilbert(self, D=None):
        D = self.bound if D is None else D
        return [len(self.normal_words(d)) for d in range(D + 1)]

    def check_overlaps(self):
        """True when every overlap of combined length <= bound resolves to 0."""
        for lw1, g in self.elements.items():
            for lw2, h in self.elements.items():
                for s in _overlap_spolys(lw1, g, lw2, h, self.bound):
                    if self._reduce_terms(s):
                        return False
        return True


def _overlap_spolys(a, g, b, h, bound):
    """S-polynomials of the overlaps lm(g) = A B, lm(h) = B C."""
    la, lb = len(a), len(b)
    for k in range(1, min(la, lb)):
        if la + lb - k > bound:
            continue
        if a[la - k:] == b[:k]:
            right = b[k:]
            left = a[:la - k]
            s = {}
            for w, c in g.items():
                _axpy(s, c, {w + right: 1})
            for w, c in h.items():
                _axpy(s, -c, {left + w: 1})
            yield s


def groebner_truncated(ctx, relations, bound=DEFAULT_BOUND) -> TruncatedGB:
    """Truncated reduced Groebner basis of the two-sided ideal of ``relations``."""
    gb = TruncatedGB(ctx, bound)
    by_deg = defaultdict(list)
    for r in relations:
        if r.is_zero():
            continue
        if not r.is_homogeneous():
            raise InhomogeneousInput(f"relation {r} is not homogeneous")
        d = r.homogeneous_degree()
        if d <= bound:
            by_deg[d].append(r.terms)
    spolys = defaultdict(list)
    for d in range(1, bound + 1):
        ech = Echelon()
        for cand in by_deg[d] + spolys.pop(d, []):
            ech.add(gb._reduce_terms(cand))
        new = [(lw, ech.rows[lw]) for lw in sorted(ech.rows, key=word_key)]
        for lw, terms in new:
            gb._insert(lw, terms)
        for lw, terms in new:
            for lw2 in list(gb.elements):
                other = gb.elements[lw2]
                for s in _overlap_spolys(lw, terms, lw2, other, bound):
                    spolys[len(next(iter(s))) if s else 0].append(s)
                if lw2 != lw:
                    for s in _overlap_spolys(lw2, other, lw, terms, bound):
                        spolys[len(next(iter(s))) if s else 0].append(s)
    return gb


def buchberger_truncated(A, D=DEFAULT_BOUND) -> TruncatedGB:
    """Truncated Groebner basis of a quadratic algebra's defining ideal."""
    if D < 2:
        raise ValueError("degree bound must be at least 2")
    return groebner_truncated(A.ctx, A.relations, D)


def normal_form(p: NcPoly, gb: TruncatedGB) -> NcPoly:
    return gb.normal_form(p)


def hilbert_function(A, D=DEFAULT_BOUND):
    """Dimensions of A_0, ..., A_D counted as normal words."""
    if D < 2:
        raise ValueError("degree bound must be at least 2")
    return buchberger_truncated(A, D).hilbert(D)


def hilbert_bruteforce(ctx, relations, D):
    """Oracle: dim(free_d) - dim span{u r v} by plain linear algebra."""
    from itertools import product
    n = ctx.ngens
    dims = []
    for d in range(D + 1):
        ech = Echelon()
        for r in relations:
            dr = r.homogeneous_degree()
            if dr is None or dr > d:
                continue
            for k in range(d - dr + 1):
                for u in product(range(n), repeat=k):
                    for v in product(range(n), repeat=d - dr - k):
                        ech.add({u + w + v: c for w, c in r.terms.items()})
        dims.append(n ** d - len(ech))
    return dims


# -- normal elements -----------------------------------------------------------

def _vectors(polys):
    words = sorted({w for p in polys for w in p.terms}, key=word_key)
    return words, [[p.terms.get(w, None) for w in words] for p in polys]


def _as_rows(polys, field):
    words = sorted({w for p in polys for w in p.terms}, key=word_key)
    zero = field.zero()
    return [[p.terms.get(w, zero) for w in words] for p in polys]


def is_normal_element(A, r: NcPoly, gb: TruncatedGB = None):
    """Matrix theta with r*x_i = sum_j theta[i][j] x_j*r in A_3, or None.

    A returned theta is invertible and certifies span(r A_1) = span(A_1 r).
    """
    if r.homogeneous_degree() != 2:
        raise InhomogeneousInput("normal-element check expects a degree-2 element")
    ctx = A.ctx
    field = ctx.field
    n = ctx.ngens
    if gb is None or gb.bound < 3:
        gb = buchberger_truncated(A, 3)
    if gb.normal_form(r).is_zero():
        raise ZeroInAlgebra(f"{r} is zero in the algebra")
    gens = ctx.gens()
    left = [gb.normal_form(r * x) for x in gens]     # r x_i
    right = [gb.normal_form(x * r) for x in gens]    # x_j r
    rows = _as_rows(left + right, field)
    if not rows[0]:
        # r A_1 = 0 = A_1 r: any invertible theta works
        from .linalg import identity
        return identity(field, n)
    L, R = rows[:n], rows[n:]
    rk_l, rk_r, rk_all = rank(L), rank(R), rank(L + R)
    if not (rk_l == rk_r == rk_all):
        return None
    # Theta (acting on coefficient columns) with rho_R o Theta = rho_L
    LT, RT = transpose(L), transpose(R)
    ker_l = nullspace(LT, n, field) if rk_l < n else []
    ker_r = nullspace(RT, n, field) if rk_r < n else []
    basis = list(ker_l)
    comp = []
    for k in range(n):
        e = [field.one() if j == k else field.zero() for j in range(n)]
        if rank(basis + comp + [e]) > len(basis) + len(comp):
            comp.append(e)
    images = []
    for c in comp:
        target = [sum((LT[w][i] * c[i] for i in range(n)), field.zero())
                  for w in range(len(LT))]
        d = solve(RT, target)
        if d is None:  # pragma: no cover - excluded by the rank test
            return None
        images.append(d)
    src = transpose(comp + ker_l)
    dst = transpose(images + ker_r)
    Theta = matmul(dst, inverse(src))
    return transpose(Theta)


@dataclass
class NormalizingVerdict:
    ok: bool
    failed_index: int = None
    thetas: list = dc_field(default_factory=list)

    def __bool__(self):
        return self.ok


def is_normalizing_sequence(A, seq, bound=3) -> NormalizingVerdict:
    """Check that seq[k] is normal in A / <seq[0..k-1]> for every k."""
    from types import SimpleNamespace
    thetas = []
    relations = list(A.relations)
    for k, r in enumerate(seq):
        if r.homogeneous_degree() != 2:
            raise InhomogeneousInput("normalizing sequences must be of degree 2")
        quotient = SimpleNamespace(ctx=A.ctx, relations=relations)
        gb = groebner_truncated(A.ctx, relations, max(bound, 3))
        theta = is_normal_element(quotient, r, gb)
        if theta is None:
            return NormalizingVerdict(False, k, thetas)
        thetas.append(theta)
        relations = relations + [r]
    return NormalizingVerdict(True, None, thetas)
