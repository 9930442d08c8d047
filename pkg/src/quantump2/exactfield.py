"""Exact scalar fields: Q, F_p, and one simple extension K[t]/(m(t)) of either.

A :class:`Field` is an immutable descriptor; :class:`Scalar` values carry a
reference to their field and a tuple of base-field coefficients
``c0 + c1*t + ... + c_{d-1}*t^{d-1}``, always reduced modulo the minimal
polynomial (and modulo p in positive characteristic).
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import product
from numbers import Rational

from .errors import (DivisionByZero, FieldMismatch, NonPrimeCharacteristic,
                     ReducibleMinpoly, UnverifiableMinpoly)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """Descriptor of an exact field.

    ``minpoly`` is given low-to-high (``(1, 0, 1)`` is ``t^2 + 1``) and must be
    monic of degree >= 2.
    """

    __slots__ = ("characteristic", "minpoly", "degree", "_hash")

    def __init__(self, characteristic=0, minpoly=None, trusted=False):
        characteristic = int(characteristic)
        if characteristic != 0 and not is_prime(characteristic):
            raise NonPrimeCharacteristic(
                f"characteristic {characteristic} is neither 0 nor prime")
        self.characteristic = characteristic
        if minpoly is None:
            self.minpoly = None
            self.degree = 1
        else:
            coeffs = [self._base(c) for c in minpoly]
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
            if len(coeffs) < 3:
                raise ValueError("extension minpoly must have degree >= 2")
            if coeffs[-1] != 1:
                raise ValueError("extension minpoly must be monic")
            self.minpoly = tuple(coeffs)
            self.degree = len(coeffs) - 1
            self._check_irreducible(trusted)
        self._hash = hash((self.characteristic, self.minpoly))

    # -- base-field helpers ------------------------------------------------
    def _base(self, value):
        p = self.characteristic
        if p:
            if isinstance(value, Fraction):
                num, den = value.numerator % p, value.denominator % p
                if den == 0:
                    raise DivisionByZero(f"{value} is undefined mod {p}")
                return num * pow(den, p - 2, p) % p
            return int(value) % p
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, Rational):
            return Fraction(value.numerator, value.denominator)
        raise TypeError(f"cannot interpret {value!r} as a rational number")

    def _base_inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero")
        p = self.characteristic
        return pow(a, p - 2, p) if p else 1 / a

    def _check_irreducible(self, trusted):
        if self.degree > 3:
            if not trusted:
                raise UnverifiableMinpoly(
                    "irreducibility of minpoly of degree >= 4 is not checked; "
                    "pass trusted=True to accept it")
            return
        from .univariate import has_root_in_prime_field
        if has_root_in_prime_field(self.minpoly, self.characteristic):
            raise ReducibleMinpoly(
                f"minpoly {self.minpoly} has a root in the prime field")

    # -- identity ------------------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, Field)
                and self.characteristic == other.characteristic
                and self.minpoly == other.minpoly)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.minpoly is None:
            return f"Field({self.characteristic})"
        return f"Field({self.characteristic}, {list(map(str, self.minpoly))})"

    def describe(self):
        base = "Q" if self.characteristic == 0 else f"F_{self.characteristic}"
        if self.minpoly is None:
            return base
        from .univariate import format_univariate
        return f"{base}[t]/({format_univariate(self.minpoly)})"

    @property
    def is_prime_field(self):
        return self.minpoly is None

    @property
    def order(self):
        """Number of elements, or None in characteristic 0."""
        if not self.characteristic:
            return None
        return self.characteristic ** self.degree

    def prime_field(self):
        return Field(self.characteristic)

    # -- element construction ----------------------------------------------
    def __call__(self, value=0) -> Scalar:
        if isinstance(value, Scalar):
            if value.field == self:
                return value
            return self.embed(value)
        c = [self._base(value)] + [self._base(0)] * (self.degree - 1)
        return Scalar(self, tuple(c))

    def from_coeffs(self, coeffs) -> Scalar:
        coeffs = [self._base(c) for c in coeffs]
        return Scalar(self, self._reduce(coeffs))

    def zero(self) -> Scalar:
        return self(0)

    def one(self) -> Scalar:
        return self(1)

    def gen(self) -> Scalar:
        """The adjoined root ``t`` (only for extension fields)."""
        if self.minpoly is None:
            raise ValueError(f"{self!r} has no extension generator")
        return self.from_coeffs([0, 1])

    def embed(self, s: Scalar) -> Scalar:
        """Coerce a scalar of the prime subfield (or of this field) into self."""
        if s.field == self:
            return s
        if (s.field.characteristic == self.characteristic
                and s.field.minpoly is None):
            return self(s.c[0])
        raise FieldMismatch(f"cannot embed {s.field!r} into {self!r}")

    def restrict(self, s: Scalar):
        """Return ``s`` as an element of the prime field, or None if not there."""
        if any(c != 0 for c in s.c[1:]):
            return None
        return self.prime_field()(s.c[0])

    def _reduce(self, coeffs):
        p = self.characteristic
        if p:
            coeffs = [c % p for c in coeffs]
        m = self.minpoly
        d = self.degree
        if m is not None and len(coeffs) > d:
            coeffs = list(coeffs)
            for k in range(len(coeffs) - 1, d - 1, -1):
                top = coeffs[k]
                if top:
                    for j in range(d):
                        coeffs[k - d + j] -= top * m[j]
                    if p:
                        for j in range(d):
                            coeffs[k - d + j] %= p
                coeffs[k] = 0
            coeffs = coeffs[:d]
        zero = 0 if p else Fraction(0)
        if len(coeffs) < d:
            coeffs = list(coeffs) + [zero] * (d - len(coeffs))
        return tuple(coeffs[:d])

    # -- enumeration and sampling -------------------------------------------
    def elements(self):
        """Iterate over all elements of a finite field."""
        p = self.characteristic
        if not p:
            raise ValueError("cannot enumerate a field of characteristic 0")
        for c in product(range(p), repeat=self.degree):
            yield Scalar(self, tuple(reversed(c)))

    def random(self, rng=None, bound=5) -> Scalar:
        rng = rng or random
        p = self.characteristic
        if p:
            return Scalar(self, tuple(rng.randrange(p) for _ in range(self.degree)))
        coeffs = [Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
                  for _ in range(self.degree)]
        return Scalar(self, tuple(coeffs))

    def random_nonzero(self, rng=None, bound=5) -> Scalar:
        while True:
            s = self.random(rng, bound)
            if s:
                return s


class Scalar:
    """Immutable exact field element."""

    __slots__ = ("field", "c")

    def __init__(self, field: Field, c: tuple):
        self.field = field
        self.c = c

    def _coerce(self, other):
        """Bring ``other`` into a common field with self: returns (lhs, rhs)."""
        if isinstance(other, Scalar):
            if other.field != self.field:
                if other.field.characteristic == self.field.characteristic:
                    if other.field.minpoly is None:
                        return self, self.field.embed(other)
                    if self.field.minpoly is None:
                        return other.field.embed(self), other
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return self, other
        if isinstance(other, (int, Fraction)):
            return self, self.field(other)
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        p = a.field.characteristic
        if p:
            return Scalar(a.field, tuple((x + y) % p for x, y in zip(a.c, b.c)))
        return Scalar(a.field, tuple(x + y for x, y in zip(a.c, b.c)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.characteristic
        if p:
            return Scalar(self.field, tuple(-a % p for a in self.c))
        return Scalar(self.field, tuple(-a for a in self.c))

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        p = a.field.characteristic
        if p:
            return Scalar(a.field, tuple((x - y) % p for x, y in zip(a.c, b.c)))
        return Scalar(a.field, tuple(x - y for x, y in zip(a.c, b.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        f = a.field
        if f.degree == 1:
            v = a.c[0] * b.c[0]
            return Scalar(f, (v % f.characteristic if f.characteristic else v,))
        prod = [0] * (2 * f.degree - 1)
        for i, ai in enumerate(a.c):
            if ai:
                for j, bj in enumerate(b.c):
                    prod[i + j] += ai * bj
        return Scalar(f, f._reduce(prod))

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        f = self.field
        if f.degree == 1:
            return Scalar(f, (f._base_inv(self.c[0]),))
        if not self:
            raise DivisionByZero("division by zero")
        from .univariate import base_poly_inverse
        return Scalar(f, f._reduce(base_poly_inverse(list(self.c), f)))

    def __truediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c == self.field(other).c
        return NotImplemented

    def __hash__(self):
        if self.field.degree == 1 or all(c == 0 for c in self.c[1:]):
            return hash(self.c[0])
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def is_zero(self):
        return not any(self.c)

    def is_one(self):
        return self.c[0] == 1 and not any(self.c[1:])

    def is_rational(self):
        """True when the value lies in the prime field."""
        return not any(self.c[1:])

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        return format_scalar(self)

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not in the prime field")
        return Fraction(self.c[0])


def make_field(characteristic=0, minpoly=None, trusted=False) -> Field:
    """Validated field descriptor; see :class:`Field`."""
    return Field(characteristic, minpoly, trusted)


def scalar_arith(op, lhs, rhs=None):
    """Dispatch table form of scalar arithmetic, mainly for the CLI and tests."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        return lhs / rhs
    if op == "neg":
        return -lhs
    if op == "inv":
        return lhs.inverse()
    if op == "eq":
        if isinstance(rhs, Scalar) and rhs.field != lhs.field:
            raise FieldMismatch(f"{lhs.field!r} vs {rhs.field!r}")
        return lhs == rhs
    raise ValueError(f"unknown scalar operation {op!r}")


def _format_base(c):
    if isinstance(c, Fraction):
        return str(c)
    return str(int(c))


def format_scalar(s: Scalar) -> str:
    """Canonical text ``c0 + c1*t + c2*t^2`` with reduced fractions."""
    parts = []
    for k, c in enumerate(s.c):
        if c == 0:
            continue
        mag = -c if (not s.field.characteristic and c < 0) else c
        neg = mag != c
        if k == 0:
            body = _format_base(mag)
        else:
            mono = "t" if k == 1 else f"t^{k}"
            body = mono if mag == 1 else f"{_format_base(mag)}*{mono}"
        parts.append((neg, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def is_single_term(s: Scalar) -> bool:
    return sum(1 for c in s.c if c != 0) <= 1
