"""
Characters of the multiplicative group of a finite field, encoded as residues.

Fix an (abstract) generator of ``F_{Q^n}^x``. A character is then determined
by an index ``k`` mod ``Q^n - 1`` and the Frobenius acts by ``k -> k*Q``.
No field arithmetic is ever performed: every quantity computed here (orbit
sizes, orders, regularity) depends only on residues and is independent of
the generator chosen.

Reduction mod ell is the projection of ``Z/(M*ell^v)`` onto its prime-to-ell
component ``Z/M``; its kernel is exactly the set of characters of ell-power
order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .arith import ell_adic_split, ell_power_exponent, is_prime, mult_order

__all__ = [
    "CharCtx",
    "CharIndex",
    "OrbitReport",
    "OrbitReductionReport",
    "IdentityViolation",
    "frobenius_orbit",
    "orbit_size",
    "is_regular",
    "reduce_mod_ell",
    "check_orbit_reduction",
    "is_supercuspidal_param",
    "delta_param",
    "lifts",
    "prime_to_ell_lift",
]


class IdentityViolation(AssertionError):
    """A computed identity that must always hold did not. Indicates a bug."""


@dataclass(frozen=True)
class CharCtx:
    """
    Index set of characters of ``F_{Q^n}^x``.

    ``modulus`` defaults to ``Q**n - 1``. A reduced context keeps ``Q`` and
    ``n`` (Frobenius still acts by ``*Q``) but overrides the modulus with a
    divisor of ``Q**n - 1``.
    """

    base_card: int
    degree: int
    modulus: int = field(default=0)

    def __post_init__(self):
        if self.base_card < 2:
            raise ValueError("base_card must be at least 2")
        if self.degree < 1:
            raise ValueError("degree must be positive")
        full = self.base_card**self.degree - 1
        if self.modulus == 0:
            object.__setattr__(self, "modulus", full)
        elif full % self.modulus != 0:
            raise ValueError(f"modulus {self.modulus} does not divide {full}")

    @property
    def is_reduced(self) -> bool:
        return self.modulus != self.base_card**self.degree - 1

    def char(self, k: int) -> "CharIndex":
        return CharIndex(self, k % self.modulus)

    def all_chars(self):
        return [CharIndex(self, k) for k in range(self.modulus)]


@dataclass(frozen=True)
class CharIndex:
    ctx: CharCtx
    k: int

    def __post_init__(self):
        if not 0 <= self.k < self.ctx.modulus:
            raise ValueError(f"index {self.k} out of range mod {self.ctx.modulus}")

    @property
    def order(self) -> int:
        """Order of the character as an element of the dual group."""
        return self.ctx.modulus // gcd(self.k, self.ctx.modulus)

    def frobenius(self, power: int = 1) -> "CharIndex":
        return CharIndex(self.ctx, self.k * pow(self.ctx.base_card, power, self.ctx.modulus) % self.ctx.modulus)

    def __str__(self):
        return f"{self.k} mod {self.ctx.modulus}"


@dataclass(frozen=True)
class OrbitReport:
    orbit: tuple[int, ...]
    size: int
    char_order: int


def frobenius_orbit(chi: CharIndex, frob: int | None = None) -> OrbitReport:
    """
    Orbit of ``chi`` under multiplication by ``frob`` (default ``Q``).

    Passing a power of Q computes the orbit under a subgroup of the Galois
    group, e.g. ``frob = Q**d`` for the degree-d subfield.
    """
    N = chi.ctx.modulus
    m = (chi.ctx.base_card if frob is None else frob) % N if N > 1 else 0
    seen = [chi.k]
    x = chi.k * m % N if N > 1 else 0
    while x != chi.k:
        seen.append(x)
        x = x * m % N
    return OrbitReport(orbit=tuple(sorted(seen)), size=len(seen), char_order=chi.order)


def orbit_size(chi: CharIndex, frob: int | None = None) -> int:
    """Orbit size as the order of ``frob`` modulo the order of chi."""
    m = chi.ctx.base_card if frob is None else frob
    return mult_order(m, chi.order)


def is_regular(chi: CharIndex) -> bool:
    return frobenius_orbit(chi).size == chi.ctx.degree


def _check_ell(ctx: CharCtx, ell: int) -> None:
    if not is_prime(ell):
        raise ValueError(f"ell must be prime, got {ell}")
    if ctx.base_card % ell == 0:
        raise ValueError(f"ell={ell} divides the field cardinality {ctx.base_card}")


def reduce_mod_ell(chi: CharIndex, ell: int) -> CharIndex:
    """
    Prime-to-ell component of ``chi``, as an index mod ``M`` where
    ``modulus = M * ell**v``.

    >>> reduce_mod_ell(CharCtx(8, 2).char(9), 3)
    CharIndex(ctx=CharCtx(base_card=8, degree=2, modulus=7), k=2)
    """
    _check_ell(chi.ctx, ell)
    split = ell_adic_split(chi.ctx.modulus, ell)
    M = split.prime_to_ell
    ctx = CharCtx(chi.ctx.base_card, chi.ctx.degree, M)
    return CharIndex(ctx, chi.k % M)


@dataclass(frozen=True)
class OrbitReductionReport:
    f_tilde: int
    f_red: int
    case: int
    u: int | None
    order_factor: int  # o_ell(Q^f_red), 1 in case 1


def check_orbit_reduction(chi: CharIndex, ell: int) -> OrbitReductionReport:
    """
    Compare the Frobenius orbit of ``chi`` with the orbit of its reduction.

    If ell does not divide the order of chi the two sizes agree (case 1);
    otherwise ``f_tilde = f_red * o_ell(Q^f_red) * ell^u`` for some ``u >= 0``
    (case 2). Raises IdentityViolation if neither holds.
    """
    red = reduce_mod_ell(chi, ell)
    f_tilde = frobenius_orbit(chi).size
    f_red = frobenius_orbit(red).size
    Q = chi.ctx.base_card
    if chi.order % ell != 0:
        if f_tilde != f_red:
            raise IdentityViolation(f"{chi}: ell={ell} prime to order but {f_tilde} != {f_red}")
        return OrbitReductionReport(f_tilde, f_red, 1, 0, 1)
    o = mult_order(pow(Q, f_red, ell), ell)
    base = f_red * o
    if f_tilde % base != 0:
        raise IdentityViolation(f"{chi}: {f_tilde} not divisible by {f_red}*{o}")
    u = ell_power_exponent(f_tilde // base, ell)
    if u is None:
        raise IdentityViolation(f"{chi}: {f_tilde}/({f_red}*{o}) is not a power of {ell}")
    return OrbitReductionReport(f_tilde, f_red, 2, u, o)


def is_supercuspidal_param(chi: CharIndex, ell: int) -> bool:
    """A regular chi whose reduction mod ell is still regular."""
    if not is_regular(chi):
        raise ValueError(f"{chi} is not regular over {chi.ctx}")
    return is_regular(reduce_mod_ell(chi, ell))


def delta_param(chi: CharIndex, ell: int) -> int:
    """
    ``n / f'`` with ``f'`` the orbit size of the reduction of a regular chi.

    Checks that the result is 1 or ``o_ell(Q^f') * ell^u``.
    """
    if not is_regular(chi):
        raise ValueError(f"{chi} is not regular over {chi.ctx}")
    f_red = frobenius_orbit(reduce_mod_ell(chi, ell)).size
    n = chi.ctx.degree
    if n % f_red != 0:
        raise IdentityViolation(f"reduced orbit size {f_red} does not divide {n}")
    delta = n // f_red
    if delta != 1:
        o = mult_order(pow(chi.ctx.base_card, f_red, ell), ell)
        if delta % o != 0 or ell_power_exponent(delta // o, ell) is None:
            raise IdentityViolation(f"{chi}: delta={delta} not of the form {o}*{ell}^u")
    return delta


def lifts(reduced: CharIndex, ell: int, original_ctx: CharCtx) -> list[CharIndex]:
    """All indices mod ``original_ctx.modulus`` reducing to ``reduced``, sorted."""
    _check_ell(original_ctx, ell)
    split = ell_adic_split(original_ctx.modulus, ell)
    M = split.prime_to_ell
    if reduced.ctx.modulus != M or reduced.ctx.base_card != original_ctx.base_card:
        raise ValueError(
            f"reduced context {reduced.ctx} does not match prime-to-{ell} part of {original_ctx}"
        )
    return [CharIndex(original_ctx, reduced.k + M * j) for j in range(split.ell_part)]


def prime_to_ell_lift(reduced: CharIndex, ell: int, original_ctx: CharCtx) -> CharIndex:
    """The unique lift of prime-to-ell order (its ell-power component is zero)."""
    found = [c for c in lifts(reduced, ell, original_ctx) if c.order % ell != 0]
    if len(found) != 1:
        raise IdentityViolation(f"expected one prime-to-{ell} lift, found {len(found)}")
    return found[0]
