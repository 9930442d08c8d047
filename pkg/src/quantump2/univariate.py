"""Dense univariate polynomials over a :class:`~quantump2.exactfield.Field`.

Polynomials are plain lists of Scalars, lowest degree first, with no trailing
zeros (the zero polynomial is ``[]``). Factorization over Q and F_p is
delegated to sympy; over Q(alpha) it goes through Trager's norm method and
over F_{p^k} only linear factors are split off.
"""
from __future__ import annotations

import random
from fractions import Fraction

import sympy

from .errors import DivisionByZero
from .exactfield import Field, Scalar

_X = sympy.Symbol("x")
_T = sympy.Symbol("t")


def trim(f):
    f = list(f)
    while f and not f[-1]:
        f.pop()
    return f


def degree(f):
    return len(f) - 1


def padd(f, g):
    n = max(len(f), len(g))
    out = []
    for k in range(n):
        if k < len(f) and k < len(g):
            out.append(f[k] + g[k])
        else:
            out.append(f[k] if k < len(f) else g[k])
    return trim(out)


def pneg(f):
    return [-c for c in f]


def psub(f, g):
    return padd(f, pneg(g))


def pscale(f, s):
    return trim([c * s for c in f])


def pmul(f, g):
    if not f or not g:
        return []
    zero = f[0].field.zero()
    out = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = out[i + j] + a * b
    return trim(out)


def pmonic(f):
    if not f:
        return []
    inv = f[-1].inverse()
    return [c * inv for c in f]


def pdivmod(f, g):
    if not g:
        raise DivisionByZero("polynomial division by zero")
    f = list(f)
    field = g[0].field
    if len(f) < len(g):
        return [], trim(f)
    inv = g[-1].inverse()
    q = [field.zero()] * (len(f) - len(g) + 1)
    for k in range(len(f) - len(g), -1, -1):
        c = f[k + len(g) - 1] * inv
        q[k] = c
        if c:
            for j, b in enumerate(g):
                f[k + j] = f[k + j] - c * b
    return trim(q), trim(f[:len(g) - 1])


def pmod(f, g):
    return pdivmod(f, g)[1]


def pgcd(f, g):
    f, g = trim(f), trim(g)
    while g:
        f, g = g, pmod(f, g)
    return pmonic(f)


def pxgcd(f, g):
    """Return (d, s, t) with s*f + t*g = d and d monic."""
    field = (f or g)[0].field
    r0, r1 = trim(f), trim(g)
    s0, s1 = [field.one()], []
    t0, t1 = [], [field.one()]
    while r1:
        q, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1))
        t0, t1 = t1, psub(t0, pmul(q, t1))
    if not r0:
        return [], s0, t0
    inv = r0[-1].inverse()
    return pscale(r0, inv), pscale(s0, inv), pscale(t0, inv)


def pderiv(f):
    return trim([c * k for k, c in enumerate(f)][1:])


def peval(f, x):
    acc = x.field.zero() if isinstance(x, Scalar) else 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def ppowmod(f, n, m):
    result = [m[0].field.one()]
    base = pmod(f, m)
    while n:
        if n & 1:
            result = pmod(pmul(result, base), m)
        base = pmod(pmul(base, base), m)
        n >>= 1
    return result


def pcompose_linear(f, a, b):
    """f(a*x + b)."""
    field = a.field
    out = []
    power = [field.one()]
    lin = trim([b, a])
    for c in f:
        out = padd(out, pscale(power, c))
        power = pmul(power, lin)
    return out


def from_ints(field, coeffs):
    return trim([field(c) for c in coeffs])


def format_univariate(coeffs, var="t"):
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        c = Fraction(c) if not isinstance(c, Scalar) else c
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        cs = str(c)
        if mono:
            if cs == "1":
                body = mono
            elif cs == "-1":
                body = "-" + mono
            else:
                body = f"{cs}*{mono}"
        else:
            body = cs
        terms.append(body)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


# -- extension-field inversion ----------------------------------------------

def base_poly_inverse(coeffs, field: Field):
    """Inverse of the element ``sum coeffs[k] t^k`` modulo the field minpoly."""
    prime = field.prime_field()
    a = trim([prime(c) for c in coeffs])
    m = [prime(c) for c in field.minpoly]
    d, s, _ = pxgcd(a, m)
    if len(d) != 1:
        raise DivisionByZero("element is not invertible (minpoly reducible?)")
    return [c.c[0] for c in s]


# -- root finding -------------------------------------------------------------

def has_root_in_prime_field(raw_coeffs, characteristic):
    field = Field(characteristic)
    f = trim([field(c) for c in raw_coeffs])
    roots, _ = roots_and_residue(f)
    return bool(roots)


def _to_sympy_poly(f, modulus=None):
    coeffs = [c.c[0] for c in reversed(f)]
    if modulus:
        return sympy.Poly([int(c) for c in coeffs], _X, modulus=modulus)
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in coeffs],
                      _X, domain=sympy.QQ)


def _from_sympy_poly(poly, field):
    p = field.characteristic
    out = []
    for c in reversed(poly.all_coeffs()):
        if p:
            out.append(field(int(c) % p))
        else:
            c = sympy.Rational(c)
            out.append(field(Fraction(int(c.p), int(c.q))))
    return trim(out)


def factor(f):
    """Factor f into monic irreducibles: list of (factor, multiplicity).

    Complete over Q, F_p and Q(alpha). Over F_{p^k} the linear factors are
    complete and any remaining cofactor is returned as a single entry whose
    irreducibility is only guaranteed when its degree is <= 3.
    """
    f = trim(f)
    if len(f) <= 1:
        return []
    field = f[0].field
    if field.minpoly is None:
        p = field.characteristic
        _, facs = _to_sympy_poly(f, p or None).factor_list()
        return [(pmonic(_from_sympy_poly(g, field)), m) for g, m in facs]
    if field.characteristic == 0:
        return _factor_number_field(f)
    return _factor_finite_extension(f)


def roots_and_residue(f):
    """Split f into its roots in the field and the root-free cofactors.

    Returns ``(roots, residue)`` with ``roots`` a list of ``(root, mult)`` and
    ``residue`` a list of ``(factor, mult)`` having no root in the field.
    """
    roots, residue = [], []
    for g, m in factor(f):
        if len(g) == 2:
            roots.append((-g[0] / g[1], m))
        else:
            residue.append((g, m))
    return roots, residue


def roots(f):
    return [r for r, _ in roots_and_residue(f)[0]]


def squarefree_decomposition(f):
    """Yun's algorithm (characteristic 0 only): list of (factor, mult)."""
    out = []
    f = pmonic(trim(f))
    df = pderiv(f)
    a = pgcd(f, df)
    b = pdivmod(f, a)[0]
    c = pdivmod(df, a)[0]
    d = psub(c, pderiv(b))
    k = 1
    while len(b) > 1:
        a = pgcd(b, d)
        if len(a) > 1:
            out.append((a, k))
        b = pdivmod(b, a)[0]
        c = pdivmod(d, a)[0]
        d = psub(c, pderiv(b))
        k += 1
    return out


def _norm(h, field):
    """Norm of h in K[x] down to Q[x], as a sympy Poly."""
    m_expr = sum(sympy.Rational(c.numerator, c.denominator) * _T ** k
                 for k, c in enumerate(field.minpoly))
    h_expr = 0
    for j, c in enumerate(h):
        coeff = sum(sympy.Rational(v.numerator, v.denominator) * _T ** k
                    for k, v in enumerate(c.c))
        h_expr += coeff * _X ** j
    res = sympy.resultant(sympy.Poly(m_expr, _T), sympy.Poly(h_expr, _T, _X))
    return sympy.Poly(res, _X, domain=sympy.QQ)


def _factor_number_field(f):
    field = f[0].field
    alpha = field.gen()
    out = []
    for g, mult in squarefree_decomposition(f):
        if len(g) == 2:
            out.append((g, mult))
            continue
        for s in (0, 1, -1, 2, -2, 3, -3, 4, 5, 7):
            shift = alpha * s
            h = pcompose_linear(g, field.one(), -shift)
            norm = _norm(h, field)
            if sympy.degree(sympy.gcd(norm, norm.diff(_X)), _X) == 0:
                break
        else:  # pragma: no cover - every squarefree g has a good shift
            raise RuntimeError("no squarefree norm found")
        _, facs = norm.factor_list()
        for n_i, _ in facs:
            g_i = pgcd(h, _from_sympy_poly(n_i, field))
            if len(g_i) > 1:
                out.append((pmonic(pcompose_linear(g_i, field.one(), shift)), mult))
    return out


def _split_linear(g, field, rng):
    """Roots of a squarefree product of distinct linear factors over F_q."""
    if len(g) <= 1:
        return []
    if len(g) == 2:
        return [-g[0] / g[1]]
    q = field.order
    if q <= 4096:
        return [a for a in field.elements() if not peval(g, a)]
    x = [field.zero(), field.one()]
    while True:
        a = field.random(rng)
        if field.characteristic == 2:
            k = q.bit_length() - 1
            term = pmod(pscale(x, field.random_nonzero(rng)), g)
            acc = list(term)
            for _ in range(k - 1):
                term = pmod(pmul(term, term), g)
                acc = padd(acc, term)
            h = pgcd(g, acc)
        else:
            h = pgcd(g, psub(ppowmod(padd(x, [a]), (q - 1) // 2, g), [field.one()]))
        if 1 < len(h) < len(g):
            return _split_linear(h, field, rng) + _split_linear(pdivmod(g, h)[0], field, rng)


def _factor_finite_extension(f):
    field = f[0].field
    q = field.order
    rng = random.Random(12345)
    f = pmonic(trim(f))
    x = [field.zero(), field.one()]
    g = pgcd(f, psub(ppowmod(x, q, f), x))
    out = []
    rest = f
    for r in _split_linear(g, field, rng):
        lin = [-r, field.one()]
        m = 0
        while True:
            qt, rem = pdivmod(rest, lin)
            if rem:
                break
            rest = qt
            m += 1
        out.append((lin, m))
    if len(rest) > 1:
        out.append((pmonic(rest), 1))
    return out
