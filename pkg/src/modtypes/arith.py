"""
Elementary modular arithmetic: multiplicative orders, splitting an integer
into its prime-to-ell and ell-power parts, and a gcd identity used when
counting unramified twist orbits.

All integers are Python ints, so moduli such as ``Q**n - 1`` never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

__all__ = [
    "EllAdicSplit",
    "is_prime",
    "ell_adic_split",
    "prime_to_part",
    "mult_order",
    "ell_power_exponent",
    "check_gcd_identity",
]


def is_prime(n: int) -> bool:
    """Trial division; fine for the small primes used here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class EllAdicSplit:
    """``total == prime_to_ell * ell**exponent`` with ``ell`` not dividing ``prime_to_ell``."""

    total: int
    prime_to_ell: int
    exponent: int
    ell: int

    def __post_init__(self):
        if self.prime_to_ell * self.ell**self.exponent != self.total:
            raise ValueError("split does not recompose")
        if self.prime_to_ell % self.ell == 0:
            raise ValueError("prime_to_ell is divisible by ell")

    @property
    def ell_part(self) -> int:
        return self.ell**self.exponent


def ell_adic_split(N: int, ell: int) -> EllAdicSplit:
    """
    Write ``N = M * ell**v`` with ``gcd(M, ell) = 1``.

    >>> ell_adic_split(63, 3)
    EllAdicSplit(total=63, prime_to_ell=7, exponent=2, ell=3)
    """
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    if not is_prime(ell):
        raise ValueError(f"ell must be prime, got {ell}")
    M, v = N, 0
    while M % ell == 0:
        M //= ell
        v += 1
    return EllAdicSplit(total=N, prime_to_ell=M, exponent=v, ell=ell)


def prime_to_part(N: int, ell: int) -> int:
    """Largest divisor of N prime to ell (N itself when ell is 1)."""
    if ell == 1:
        return N
    return ell_adic_split(N, ell).prime_to_ell


def ell_power_exponent(N: int, ell: int) -> int | None:
    """Return u with ``N == ell**u``, or None if N is not a power of ell."""
    if N < 1:
        return None
    u = 0
    while N % ell == 0:
        N //= ell
        u += 1
    return u if N == 1 else None


def mult_order(k: int, ell: int) -> int:
    """
    Order of k in the multiplicative group mod ell (the modulus need not be
    prime, but k must be a unit). Direct powering.

    >>> mult_order(4, 17)
    4
    """
    if ell < 1:
        raise ValueError("modulus must be positive")
    if ell == 1:
        return 1
    k %= ell
    if gcd(k, ell) != 1:
        raise ValueError(f"{k} is not a unit mod {ell}")
    t, x = 1, k
    while x != 1:
        x = x * k % ell
        t += 1
    return t


def check_gcd_identity(e: int, n: int, s: int) -> bool:
    """``gcd(e, n*gcd(e, s)) == gcd(e, n*s)``; always true, kept as a regression oracle."""
    if min(e, n, s) < 1:
        raise ValueError("arguments must be positive")
    return gcd(e, n * gcd(e, s)) == gcd(e, n * s)
