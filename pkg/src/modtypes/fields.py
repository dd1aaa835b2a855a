"""
Exact scalar fields: the rationals and prime fields F_p.

A field object is callable and coerces ints (and Fractions, for QQ) into its
elements. Elements support the usual arithmetic operators and compare
exactly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering

from .arith import is_prime

__all__ = ["Field", "RationalField", "PrimeField", "GF", "QQ", "parse_field"]


class Field:
    characteristic: int
    name: str

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


class RationalField(Field):
    characteristic = 0
    name = "QQ"

    def __call__(self, x) -> Fraction:
        if isinstance(x, GFElem):
            raise TypeError("cannot coerce a prime-field element into QQ")
        return Fraction(x)

    def to_str(self, x) -> str:
        return str(x)


QQ = RationalField()


@total_ordering
class GFElem:
    """An element of F_p, stored as its residue in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other) -> int:
        if isinstance(other, GFElem):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElem(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElem(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElem(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElem(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return GFElem(-self.v, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "GFElem":
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return GFElem(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * GFElem(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElem(o, self.p) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return GFElem(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, GFElem):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __lt__(self, other):
        # only used for deterministic sorting
        if isinstance(other, GFElem):
            return self.v < other.v
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v}"


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.characteristic = p
        self.name = f"F{p}"

    def __call__(self, x) -> GFElem:
        if isinstance(x, GFElem):
            if x.p != self.characteristic:
                raise ValueError(f"element of F_{x.p} given to {self.name}")
            return x
        if isinstance(x, Fraction):
            return GFElem(x.numerator, self.characteristic) / x.denominator
        return GFElem(int(x), self.characteristic)

    def elements(self):
        return [GFElem(v, self.characteristic) for v in range(self.characteristic)]

    def units(self):
        return self.elements()[1:]


_GF_CACHE: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _GF_CACHE:
        _GF_CACHE[p] = PrimeField(p)
    return _GF_CACHE[p]


def parse_field(spec: str) -> Field:
    """``"Q"``/``"QQ"`` for the rationals, ``"F7"``/``"GF7"`` for a prime field."""
    s = spec.strip().upper()
    if s in ("Q", "QQ"):
        return QQ
    for prefix in ("GF", "F"):
        if s.startswith(prefix) and s[len(prefix):].isdigit():
            return GF(int(s[len(prefix):]))
    raise ValueError(f"unknown field {spec!r}")
