"""Scalar fields: exact cyclotomic fields Q(zeta_n) and an approximate complex field.

Exact scalars are :class:`Cyc` values, coordinate vectors over the power basis
``1, z, ..., z^(d-1)`` of Q(zeta_n) where ``d = phi(n)``.  All arithmetic is
reduced modulo the n-th cyclotomic polynomial, so equality is decidable.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Any


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists, lowest degree first; den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    assert not any(num), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic order must be >= 1")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


class Field:
    """Common interface of the scalar backends."""

    exact: bool = True

    def coerce(self, v: Any) -> Any:
        raise NotImplementedError

    def is_zero(self, x: Any) -> bool:
        raise NotImplementedError

    def eq(self, x: Any, y: Any) -> bool:
        return self.is_zero(x - y)


class CyclotomicField(Field):
    """Q(zeta_n) with exact arithmetic in the power basis."""

    exact = True
    _instances: dict[int, "CyclotomicField"] = {}

    def __new__(cls, n: int = 1):
        if n in cls._instances:
            return cls._instances[n]
        self = super().__new__(cls)
        self._setup(n)
        cls._instances[n] = self
        return self

    def _setup(self, n: int) -> None:
        if n < 1:
            raise ValueError("cyclotomic order must be >= 1")
        self.n = n
        self.poly = cyclotomic_poly(n)
        self.deg = len(self.poly) - 1
        # zeta^m in the power basis, m = 0..n-1
        powers = []
        for m in range(n):
            powers.append(self._reduce_monomial(m))
        self._powers = tuple(powers)
        self.zero = Cyc(self, (Fraction(0),) * self.deg)
        self.one = Cyc(self, (Fraction(1),) + (Fraction(0),) * (self.deg - 1))
        self._units = [k for k in range(1, n + 1) if math.gcd(k, n) == 1]

    def _reduce_monomial(self, m: int) -> tuple[Fraction, ...]:
        vec = [0] * max(m + 1, self.deg)
        vec[m] = 1
        for top in range(len(vec) - 1, self.deg - 1, -1):
            c = vec[top]
            if c:
                vec[top] = 0
                for i in range(self.deg):
                    vec[top - self.deg + i] -= c * self.poly[i]
        return tuple(Fraction(v) for v in vec[: self.deg])

    def __repr__(self) -> str:
        return f"CyclotomicField({self.n})"

    def __reduce__(self):
        return (CyclotomicField, (self.n,))

    @property
    def descriptor(self) -> dict:
        return {"backend": "exact", "cyclotomic_order": self.n}

    def zeta(self, k: int = 1) -> "Cyc":
        return Cyc(self, self._powers[k % self.n])

    def coerce(self, v: Any) -> "Cyc":
        if isinstance(v, Cyc):
            if v.field is not self:
                raise ValueError(f"scalar from {v.field} used in {self}")
            return v
        if isinstance(v, (int, Fraction)):
            return Cyc(self, (Fraction(v),) + (Fraction(0),) * (self.deg - 1))
        if isinstance(v, str):
            return self.parse(v)
        if isinstance(v, (list, tuple)):
            return self.from_coords(v)
        raise TypeError(f"cannot coerce {v!r} into {self}")

    def from_coords(self, coords) -> "Cyc":
        coords = [Fraction(c) for c in coords]
        if len(coords) > self.deg:
            # interpret as polynomial in zeta, reduce
            out = self.zero
            for m, c in enumerate(coords):
                if c:
                    out = out + Cyc(self, self._powers[m % self.n]) * c
            return out
        coords += [Fraction(0)] * (self.deg - len(coords))
        return Cyc(self, tuple(coords))

    def parse(self, s: str) -> "Cyc":
        s = s.strip()
        if s.startswith("["):
            inner = s[1:-1].strip()
            parts = [p for p in inner.split(",") if p.strip()] if inner else []
            return self.from_coords([Fraction(p.strip()) for p in parts])
        return self.coerce(Fraction(s))

    def is_zero(self, x: "Cyc") -> bool:
        return not any(x.c)

    def to_json(self, x: "Cyc") -> Any:
        if self.deg == 1:
            return str(x.c[0])
        return [str(c) for c in x.c]

    def from_json(self, v: Any) -> "Cyc":
        if isinstance(v, list):
            return self.from_coords(v)
        return self.coerce(Fraction(str(v)) if not isinstance(v, int) else v)


class Cyc:
    """An exact element of Q(zeta_n)."""

    __slots__ = ("field", "c")

    def __init__(self, field: CyclotomicField, coords: tuple):
        self.field = field
        self.c = coords

    def _other(self, o):
        if isinstance(o, Cyc):
            if o.field is not self.field:
                raise ValueError("mixed cyclotomic fields")
            return o
        if isinstance(o, (int, Fraction)):
            return self.field.coerce(o)
        return NotImplemented

    def __add__(self, o):
        o = self._other(o)
        if o is NotImplemented:
            return o
        return Cyc(self.field, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, o):
        o = self._other(o)
        if o is NotImplemented:
            return o
        return Cyc(self.field, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, o):
        o = self._other(o)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return Cyc(self.field, tuple(-a for a in self.c))

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return Cyc(self.field, tuple(a * o for a in self.c))
        o = self._other(o)
        if o is NotImplemented:
            return o
        f = self.field
        if f.deg == 1:
            return Cyc(f, (self.c[0] * o.c[0],))
        if not any(o.c[1:]):
            r = o.c[0]
            if r == 1:
                return self
            return Cyc(f, tuple(a * r for a in self.c) if r else f.zero.c)
        if not any(self.c[1:]):
            r = self.c[0]
            if r == 1:
                return o
            return Cyc(f, tuple(b * r for b in o.c) if r else f.zero.c)
        acc = [Fraction(0)] * f.deg
        powers = f._powers
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j, b in enumerate(o.c):
                if not b:
                    continue
                ab = a * b
                for k, p in enumerate(powers[(i + j) % f.n]):
                    if p:
                        acc[k] += ab * p
        return Cyc(f, tuple(acc))

    __rmul__ = __mul__

    def conjugate_by(self, k: int) -> "Cyc":
        """Image under the Galois automorphism zeta -> zeta^k."""
        f = self.field
        out = f.zero
        for i, a in enumerate(self.c):
            if a:
                out = out + Cyc(f, f._powers[(i * k) % f.n]) * a
        return out

    def inverse(self) -> "Cyc":
        f = self.field
        if f.is_zero(self):
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if f.deg == 1:
            return Cyc(f, (1 / self.c[0],))
        prod = f.one
        for k in f._units:
            if k != 1:
                prod = prod * self.conjugate_by(k)
        norm = (self * prod).c
        assert not any(norm[1:]), "field norm is not rational"
        return prod * (1 / norm[0])

    def __truediv__(self, o):
        if isinstance(o, (int, Fraction)):
            return Cyc(self.field, tuple(a / o for a in self.c))
        o = self._other(o)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, o):
        o = self._other(o)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, o):
        if isinstance(o, Cyc):
            return self.field is o.field and self.c == o.c
        if isinstance(o, (int, Fraction)):
            return self.c[0] == o and not any(self.c[1:])
        return NotImplemented

    def __hash__(self):
        if not any(self.c[1:]):
            return hash(self.c[0])
        return hash((self.field.n, self.c))

    def __bool__(self):
        return any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.field.n)
        return sum(complex(float(a)) * z**i for i, a in enumerate(self.c))

    def __repr__(self):
        return f"Cyc({self})"

    def __str__(self):
        terms = []
        for i, a in enumerate(self.c):
            if not a:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                terms.append(str(a))
            elif a == 1:
                terms.append(mono)
            elif a == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{a}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


class ComplexField(Field):
    """Approximate backend: complex doubles, equality up to ``eps``."""

    exact = False

    def __init__(self, eps: float = 1e-9, n: int = 1):
        self.eps = eps
        self.n = n
        self.zero = 0j
        self.one = 1 + 0j

    def __repr__(self) -> str:
        return f"ComplexField(eps={self.eps})"

    def __eq__(self, other):
        return (isinstance(other, ComplexField) and other.eps == self.eps
                and other.n == self.n)

    def __hash__(self):
        return hash(("complex", self.eps, self.n))

    @property
    def descriptor(self) -> dict:
        return {"backend": "approximate", "eps": self.eps, "cyclotomic_order": self.n}

    def zeta(self, k: int = 1) -> complex:
        return cmath.exp(2j * cmath.pi * k / self.n)

    def coerce(self, v: Any) -> complex:
        if isinstance(v, Cyc):
            return complex(v)
        if isinstance(v, str):
            return complex(Fraction(v))
        if isinstance(v, (list, tuple)):
            return sum(complex(Fraction(c)) * self.zeta(i) for i, c in enumerate(v))
        return complex(v)

    def is_zero(self, x: complex) -> bool:
        return abs(x) <= self.eps

    def to_json(self, x: complex) -> Any:
        return {"re": x.real, "im": x.imag}

    def from_json(self, v: Any) -> complex:
        if isinstance(v, dict):
            return complex(v["re"], v["im"])
        return self.coerce(v)


def inv(field: Field, x):
    if isinstance(x, Cyc):
        return x.inverse()
    if field.is_zero(x):
        raise ZeroDivisionError("inverse of (numerically) zero scalar")
    return 1 / x


def fmt(x) -> str:
    if isinstance(x, complex):
        return f"{x.real:.12g}{x.imag:+.12g}j"
    return str(x)
