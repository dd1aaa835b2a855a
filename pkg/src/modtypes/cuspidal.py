"""
Numeric invariants of a cuspidal representation of GL_m(D) read off from
the parameters of a maximal simple type.

A type is summarized by integers ``(m, d, q, e, f, m', d')`` with
``m' d' = m d / (e f)`` and a character chi of ``F_{Q^m'}^x`` where
``Q = q^(f d')`` is the residue cardinality of the division algebra D'.
Everything is computed from Frobenius orbit sizes:

* ``f(chi)``: orbit size under ``x -> x^(q^f)`` (Galois group over k_E),
* ``f'(chi)``: orbit size under ``x -> x^Q`` (Galois group over k_D'),
* ``b = f(chi) / f'(chi)``, ``s = d' / b``,
* ``f_rho = f m' d'``, ``n_rho`` = prime-to-ell part of ``f_rho / s``,
* ``q_rho = q^f_rho``.

The ell-modular invariants are those of the reduction of chi mod ell.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd

from .arith import check_gcd_identity, ell_power_exponent, is_prime, mult_order, prime_to_part
from .charorbits import (
    CharCtx,
    CharIndex,
    IdentityViolation,
    is_regular,
    lifts,
    prime_to_ell_lift,
    reduce_mod_ell,
)
from .fields import GF, QQ, Field

__all__ = [
    "CHAR_ZERO",
    "TypeDatum",
    "CuspInvariants",
    "ReductionShape",
    "ZetaReport",
    "SweepRecord",
    "invariants",
    "reduction_length",
    "reduction_shape",
    "is_banal",
    "check_reducible_reduction_order",
    "zeta_identities",
    "reducibility_points",
    "liftability_search",
    "admissible_data",
    "order_representatives",
    "sweep",
    "check_sweep_record",
]

CHAR_ZERO = 0


@dataclass(frozen=True)
class TypeDatum:
    m: int
    d: int
    q: int
    e: int
    f: int
    m_prime: int
    d_prime: int
    chi: CharIndex

    def __post_init__(self):
        for name in ("m", "d", "e", "f", "m_prime", "d_prime"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.q < 2:
            raise ValueError("q must be a prime power >= 2")
        ef, md = self.e * self.f, self.m * self.d
        if md % ef:
            raise ValueError(f"e*f={ef} does not divide m*d={md}")
        if self.m_prime * self.d_prime != md // ef:
            raise ValueError(f"m'*d'={self.m_prime * self.d_prime} != m*d/(e*f)={md // ef}")
        Q = self.residue_card
        if self.chi.ctx.base_card != Q or self.chi.ctx.degree != self.m_prime:
            raise ValueError(f"chi must live over F_{{{Q}^{self.m_prime}}}, got {self.chi.ctx}")

    @property
    def residue_card(self) -> int:
        """``|k_D'| = q^(f d')``."""
        return self.q ** (self.f * self.d_prime)

    @classmethod
    def build(cls, m, d, q, e, f, k, m_prime=None, d_prime=None) -> "TypeDatum":
        """``d' = d / gcd(d, e f)`` and ``m' = m d / (e f d')`` unless given."""
        if d_prime is None:
            d_prime = d // gcd(d, e * f)
        if m_prime is None:
            if (m * d) % (e * f * d_prime):
                raise ValueError("inconsistent (m, d, e, f)")
            m_prime = m * d // (e * f * d_prime)
        ctx = CharCtx(q ** (f * d_prime), m_prime)
        return cls(m, d, q, e, f, m_prime, d_prime, ctx.char(k))

    def with_chi(self, chi: CharIndex) -> "TypeDatum":
        return replace(self, chi=chi)

    def as_dict(self) -> dict:
        return {
            "m": self.m, "d": self.d, "q": self.q, "e": self.e, "f": self.f,
            "m_prime": self.m_prime, "d_prime": self.d_prime,
            "chi": self.chi.k, "chi_modulus": self.chi.ctx.modulus,
        }


@dataclass(frozen=True)
class CuspInvariants:
    f_chi: int
    f_prime_chi: int
    b_rho: int
    s_rho: int
    f_rho: int
    n_rho: int
    q_rho: int
    wpl_valuation: int
    ell: int
    ell_exponent: int  # u with f_rho = n s ell^u

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def _check_ell(q: int, ell: int) -> None:
    if ell == CHAR_ZERO:
        return
    if not is_prime(ell):
        raise ValueError(f"ell must be prime or CHAR_ZERO, got {ell}")
    if q % ell == 0:
        raise ValueError(f"ell={ell} divides q={q}")


def _side_chi(datum: TypeDatum, ell: int) -> CharIndex:
    return datum.chi if ell == CHAR_ZERO else reduce_mod_ell(datum.chi, ell)


def invariants(datum: TypeDatum, ell: int = CHAR_ZERO) -> CuspInvariants:
    """Invariants of rho~ (``ell = CHAR_ZERO``) or of its reduction mod ell."""
    _check_ell(datum.q, ell)
    chi = _side_chi(datum, ell)
    f_chi = mult_order(datum.q**datum.f, chi.order)
    fp_chi = mult_order(datum.residue_card, chi.order)
    if f_chi % fp_chi:
        raise IdentityViolation(f"f'(chi)={fp_chi} does not divide f(chi)={f_chi}")
    b = f_chi // fp_chi
    if datum.d_prime % b:
        raise ValueError(f"b={b} does not divide d'={datum.d_prime}: inconsistent datum")
    s = datum.d_prime // b
    f_rho = datum.f * datum.m_prime * datum.d_prime
    if f_rho % s:
        raise IdentityViolation(f"s={s} does not divide f_rho={f_rho}")
    n = f_rho // s if ell == CHAR_ZERO else prime_to_part(f_rho // s, ell)
    u = 0 if ell == CHAR_ZERO else ell_power_exponent(f_rho // (n * s), ell)
    if u is None or f_rho != n * s * (ell**u if ell else 1):
        raise IdentityViolation(f"f_rho={f_rho} is not n*s*ell^u with n={n}, s={s}")
    return CuspInvariants(
        f_chi=f_chi,
        f_prime_chi=fp_chi,
        b_rho=b,
        s_rho=s,
        f_rho=f_rho,
        n_rho=n,
        q_rho=datum.q**f_rho,
        wpl_valuation=f_rho // s,
        ell=ell,
        ell_exponent=u,
    )


def _require_regular(datum: TypeDatum) -> None:
    if not is_regular(datum.chi):
        raise ValueError(f"chi={datum.chi} is not regular over F_{{{datum.residue_card}^{datum.m_prime}}}")


def reduction_length(datum: TypeDatum, ell: int) -> int:
    """
    ``a = b(rho~) / b(rho)``; checks that a is 1 or
    ``o_ell(q^n(rho)) * ell^u``.
    """
    _require_regular(datum)
    if ell == CHAR_ZERO:
        raise ValueError("reduction needs a prime ell")
    top = invariants(datum, CHAR_ZERO)
    red = invariants(datum, ell)
    if top.b_rho % red.b_rho:
        raise IdentityViolation(f"b(rho)={red.b_rho} does not divide b(rho~)={top.b_rho}")
    a = top.b_rho // red.b_rho
    if Fraction(red.s_rho, top.s_rho) != a:
        raise IdentityViolation(f"a={a} differs from s(rho)/s(rho~)={red.s_rho}/{top.s_rho}")
    if a != 1:
        o = mult_order(pow(datum.q, red.n_rho, ell), ell)
        if a % o or ell_power_exponent(a // o, ell) is None:
            raise IdentityViolation(f"a={a} is not o_ell(q^n)={o} times a power of {ell}")
    return a


@dataclass(frozen=True)
class ReductionShape:
    a: int
    a_prime_to_ell: int
    twists: tuple[int, ...]  # exponents k of the summands rho nu^k
    nu_order: int  # o_ell(q^n(rho))

    def symbolic(self) -> list[str]:
        return ["rho" if k == 0 else ("rho*nu" if k == 1 else f"rho*nu^{k}") for k in self.twists]


def reduction_shape(datum: TypeDatum, ell: int) -> ReductionShape:
    """The reduction is ``rho + rho nu + ... + rho nu^(a-1)``."""
    a = reduction_length(datum, ell)
    red = invariants(datum, ell)
    o = mult_order(pow(datum.q, red.n_rho, ell), ell)
    return ReductionShape(a, prime_to_part(a, ell), tuple(range(a)), o)


def is_banal(m: int, d: int, q: int, ell: int) -> bool:
    """``o_ell(q^d) > m``."""
    _check_ell(q, ell)
    return mult_order(pow(q, d, ell), ell) > m


def check_reducible_reduction_order(datum: TypeDatum, ell: int) -> bool:
    """``a <= 1`` or ``q^f_rho == 1 mod ell``."""
    a = reduction_length(datum, ell)
    f_rho = invariants(datum, ell).f_rho
    return a <= 1 or pow(datum.q, f_rho, ell) == 1


@dataclass(frozen=True)
class ZetaReport:
    e_star: int
    card_Z: int
    card_Z_orbit_count: int
    o_rho: int
    o_rho_direct: int
    gcd_identity: bool

    @property
    def consistent(self) -> bool:
        return (
            self.card_Z == self.card_Z_orbit_count == self.o_rho == self.o_rho_direct
            and self.gcd_identity
        )

    def as_dict(self) -> dict:
        return {**self.__dict__, "consistent": self.consistent}


def zeta_identities(datum: TypeDatum, ell: int) -> ZetaReport:
    """
    Size of the nu_rho-twist orbit against the order of q(rho) in F_ell,
    each by two routes. Raises IdentityViolation on mismatch.
    """
    if ell == CHAR_ZERO:
        raise ValueError("needs a prime ell")
    inv = invariants(datum, ell)
    e = mult_order(datum.q % ell, ell)
    n, s, f = inv.n_rho, inv.s_rho, inv.f_rho
    card = e // gcd(e, n * s)
    cyc = e // gcd(e, s)
    card_orbits = cyc // gcd(n, cyc)
    o = e // gcd(e, f)
    o_direct = mult_order(inv.q_rho % ell, ell)
    rep = ZetaReport(e, card, card_orbits, o, o_direct, check_gcd_identity(e, n, s))
    if not rep.consistent:
        raise IdentityViolation(f"twist-orbit identities fail: {rep}")
    return rep


def reducibility_points(datum: TypeDatum, F: Field = QQ, ell: int = CHAR_ZERO) -> tuple:
    """``(q_rho, q_rho^-1)`` in F, for the invariants on the given side."""
    if F.is_finite and ell == CHAR_ZERO:
        ell = F.characteristic
    q_rho = invariants(datum, ell).q_rho
    z = F(q_rho)
    if not z:
        raise ValueError(f"q_rho={q_rho} vanishes in {F}")
    return (z, F.one / z)


def liftability_search(datum: TypeDatum, ell: int) -> TypeDatum | None:
    """
    A regular lift of the reduction of ``datum.chi`` (or of ``datum.chi``
    itself when it is already a reduced index) with ``b(rho~) = b(rho)``, or
    None. A regular reduction lifts to its prime-to-ell lift.
    """
    _check_ell(datum.q, ell)
    full = CharCtx(datum.residue_card, datum.m_prime)
    red = datum.chi if datum.chi.ctx.is_reduced else reduce_mod_ell(datum.chi, ell)
    base = datum.with_chi(prime_to_ell_lift(red, ell, full))
    if is_regular(red):
        return base
    b_red = invariants(base, ell).b_rho
    for cand in lifts(red, ell, full):
        if not is_regular(cand):
            continue
        if invariants(datum.with_chi(cand), CHAR_ZERO).b_rho == b_red:
            return datum.with_chi(cand)
    return None


def admissible_data(qs, ds, ms):
    """
    Every ``(m, d, q, e, f, m', d')`` with ``e f | m d``,
    ``d' = d / gcd(d, e f)`` and ``m' = m d / (e f d')``.
    """
    out = []
    for q in qs:
        for d in ds:
            for m in ms:
                md = m * d
                for ef in range(1, md + 1):
                    if md % ef:
                        continue
                    dp = d // gcd(d, ef)
                    if (md // ef) % dp:
                        continue
                    mp = md // (ef * dp)
                    for e in range(1, ef + 1):
                        if ef % e == 0:
                            out.append((m, d, q, e, ef // e, mp, dp))
    return out


def order_representatives(ctx: CharCtx) -> list[CharIndex]:
    """One character per order: the index ``N / o`` for each divisor o of N."""
    N = ctx.modulus
    return [ctx.char(g) for g in range(1, N + 1) if N % g == 0]


@dataclass(frozen=True)
class SweepRecord:
    datum: TypeDatum
    ell: int
    top: CuspInvariants
    red: CuspInvariants
    a: int
    banal: bool
    zeta: ZetaReport
    checks: dict = field(default_factory=dict)


def check_sweep_record(datum: TypeDatum, ell: int) -> SweepRecord:
    """All identities for one regular datum and one ell; values in ``checks`` are bools."""
    top = invariants(datum, CHAR_ZERO)
    red = invariants(datum, ell)
    a = reduction_length(datum, ell)
    banal = is_banal(datum.m, datum.d, datum.q, ell)
    zeta = zeta_identities(datum, ell)
    ratio = Fraction(top.n_rho, red.n_rho)
    checks = {
        "f_rho_factorization": red.f_rho == red.n_rho * red.s_rho * ell**red.ell_exponent
        and top.f_rho == top.n_rho * top.s_rho,
        "s_times_b": top.s_rho * top.b_rho == datum.d_prime and red.s_rho * red.b_rho == datum.d_prime,
        "a_shape": a == 1
        or (a % mult_order(pow(datum.q, red.n_rho, ell), ell) == 0
            and ell_power_exponent(a // mult_order(pow(datum.q, red.n_rho, ell), ell), ell) is not None),
        "banal_implies_irreducible": (not banal) or a == 1,
        "reducible_reduction_order": check_reducible_reduction_order(datum, ell),
        "twist_orbit_equals_order": zeta.consistent,
        "gcd_identity": zeta.gcd_identity,
        "n_ratio_matches_a": ratio.denominator == 1
        and prime_to_part(ratio.numerator, ell) == prime_to_part(a, ell),
        "split_case_trivial": datum.d != 1 or (datum.d_prime == 1 and top.b_rho == 1 and a == 1),
    }
    return SweepRecord(datum, ell, top, red, a, banal, zeta, checks)


SWEEP_QS = (2, 3, 4, 5, 8)
SWEEP_DS = (1, 2)
SWEEP_MS = (1, 2, 3)
SWEEP_ELLS = (2, 3, 5, 17)


def sweep(qs=SWEEP_QS, ds=SWEEP_DS, ms=SWEEP_MS, ells=SWEEP_ELLS):
    """Yield a SweepRecord for every admissible datum, regular chi class, and ell."""
    for m, d, q, e, f, mp, dp in admissible_data(qs, ds, ms):
        ctx = CharCtx(q ** (f * dp), mp)
        for chi in order_representatives(ctx):
            if not is_regular(chi):
                continue
            datum = TypeDatum(m, d, q, e, f, mp, dp, chi)
            for ell in ells:
                if q % ell == 0:
                    continue
                yield check_sweep_record(datum, ell)
