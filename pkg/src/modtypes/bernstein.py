"""
Bernstein presentation of H(r, q).

The commuting invertible elements are

    X_1 = S_1^-1 S_2^-1 ... S_{r-1}^-1 Pi      (so X_1^-1 = S_{t(-e_1)})
    X_{i+1} = q^-1 S_i X_i S_i,

and every element is uniquely ``sum c S_u X^lam`` with ``u`` in S_r and
``lam`` in Z^r. Moving a monomial past ``S_i`` uses

    f S_i = S_i (s_i f) + (q - 1) X_{i+1} (f - s_i f) / (X_{i+1} - X_i).

With this normalization ``X_1 ... X_r = q^(-r(r-1)/2) Pi^r``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .hecke import HeckeAlgebra, HeckeElem
from .weyl import (
    Composition,
    ExtAffineWeylElem,
    coset_factor,
    identity,
    min_coset_reps,
    reduced_word,
    simple_reflection,
    translation,
)

__all__ = [
    "BernsteinElem",
    "bernstein_X",
    "bernstein_X_inverse",
    "x_monomial",
    "to_bernstein",
    "from_bernstein",
    "decompose_over_subalgebra",
    "recompose",
    "check_bernstein_relations",
]


def _cache(alg: HeckeAlgebra) -> dict:
    c = getattr(alg, "_bernstein_cache", None)
    if c is None:
        c = {}
        alg._bernstein_cache = c
    return c


def bernstein_X(alg: HeckeAlgebra, i: int) -> HeckeElem:
    """X_i in the Coxeter basis, 1 <= i <= r."""
    r = alg.rank
    if not 1 <= i <= r:
        raise ValueError(f"index {i} out of range 1..{r}")
    cache = _cache(alg)
    key = ("X", i)
    if key not in cache:
        if i == 1:
            cache[key] = alg.basis(translation([-1] + [0] * (r - 1))).inverse()
        else:
            Si = alg.S(i - 1)
            cache[key] = Si * bernstein_X(alg, i - 1) * Si * (alg.field.one / alg.param)
    return cache[key]


def bernstein_X_inverse(alg: HeckeAlgebra, i: int) -> HeckeElem:
    r = alg.rank
    if not 1 <= i <= r:
        raise ValueError(f"index {i} out of range 1..{r}")
    cache = _cache(alg)
    key = ("Xinv", i)
    if key not in cache:
        if i == 1:
            cache[key] = alg.basis(translation([-1] + [0] * (r - 1)))
        else:
            Sinv = alg.S_inverse(i - 1)
            cache[key] = Sinv * bernstein_X_inverse(alg, i - 1) * Sinv * alg.param
    return cache[key]


def x_monomial(alg: HeckeAlgebra, lam) -> HeckeElem:
    """X^lam = prod X_i^lam_i in the Coxeter basis."""
    lam = tuple(lam)
    cache = _cache(alg)
    key = ("Xmono", lam)
    if key not in cache:
        out = alg.one()
        for i, k in enumerate(lam, start=1):
            g = bernstein_X(alg, i) if k > 0 else bernstein_X_inverse(alg, i)
            for _ in range(abs(k)):
                out = out * g
        cache[key] = out
    return cache[key]


@dataclass(frozen=True, eq=False)
class BernsteinElem:
    """``sum c S_u X^lam`` keyed by ``(u, lam)`` with ``u`` a finite permutation."""

    algebra: HeckeAlgebra
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        F = self.algebra.field
        object.__setattr__(self, "terms", {k: F(c) for k, c in self.terms.items() if c})

    def __eq__(self, other):
        return (
            isinstance(other, BernsteinElem)
            and self.algebra == other.algebra
            and self.terms == other.terms
        )

    def __add__(self, other: "BernsteinElem") -> "BernsteinElem":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BernsteinElem(self.algebra, out)

    def scale(self, c) -> "BernsteinElem":
        c = self.algebra.field(c)
        return BernsteinElem(self.algebra, {k: x * c for k, x in self.terms.items()})

    def times_S(self, i: int) -> "BernsteinElem":
        return BernsteinElem(self.algebra, _times_S(self.algebra, self.terms, i))

    def times_S_inverse(self, i: int) -> "BernsteinElem":
        alg = self.algebra
        qi = alg.field.one / alg.param
        return self.times_S(i).scale(qi) + self.scale(qi - 1)

    def times_X(self, mu) -> "BernsteinElem":
        mu = tuple(mu)
        return BernsteinElem(
            self.algebra,
            {(u, tuple(a + b for a, b in zip(lam, mu))): c for (u, lam), c in self.terms.items()},
        )

    def times_Pi(self, a: int) -> "BernsteinElem":
        r = self.algebra.rank
        out = self
        e1 = (1,) + (0,) * (r - 1)
        me1 = tuple(-x for x in e1)
        for _ in range(abs(a)):
            if a > 0:
                for i in range(r - 1, 0, -1):
                    out = out.times_S(i)
                out = out.times_X(e1)
            else:
                out = out.times_X(me1)
                for i in range(1, r):
                    out = out.times_S_inverse(i)
        return out


def _straighten(lam: tuple, i: int) -> list[tuple[tuple, int]]:
    """
    ``(X_{i+1}(f - s_i f) / (X_{i+1} - X_i))`` for ``f = X^lam`` as a list of
    ``(monomial, integer coefficient)``; ``i`` is 1-based.
    """
    a, b = lam[i - 1], lam[i]
    out = []
    if a > b:
        for k in range(a - b):
            mu = list(lam)
            mu[i - 1], mu[i] = b + k, a - k
            out.append((tuple(mu), -1))
    elif a < b:
        for k in range(b - a):
            mu = list(lam)
            mu[i - 1], mu[i] = a + k, b - k
            out.append((tuple(mu), 1))
    return out


def _times_S(alg: HeckeAlgebra, terms: dict, i: int) -> dict:
    if not 1 <= i < alg.rank:
        raise ValueError(f"S_{i} is not a finite generator in rank {alg.rank}")
    q = alg.param
    s = simple_reflection(alg.rank, i)
    out: dict = {}

    def add(u, lam, c):
        key = (u, lam)
        out[key] = out.get(key, 0) + c

    for (u, lam), c in terms.items():
        slam = list(lam)
        slam[i - 1], slam[i] = slam[i], slam[i - 1]
        slam = tuple(slam)
        # S_u S_i X^{s_i lam}
        us = u * s
        if not u.has_right_descent(i):
            add(us, slam, c)
        else:
            add(u, slam, (q - 1) * c)
            add(us, slam, q * c)
        # (q - 1) S_u D_i(X^lam)
        for mu, k in _straighten(lam, i):
            add(u, mu, (q - 1) * c * k)
    return {k: c for k, c in out.items() if c}


def to_bernstein(T: HeckeElem) -> BernsteinElem:
    """Rewrite a Coxeter-basis element in the ``S_u X^lam`` basis."""
    alg = T.algebra
    r = alg.rank
    cache = _cache(alg)
    out = BernsteinElem(alg, {})
    zero = (0,) * r
    for w, c in T.coeffs.items():
        key = ("toB", w)
        if key not in cache:
            rw = reduced_word(w)
            b = BernsteinElem(alg, {(identity(r), zero): 1}).times_Pi(rw.pi_power)
            for i in rw.letters:
                if i == 0:
                    b = b.times_Pi(1).times_S(1).times_Pi(-1)
                else:
                    b = b.times_S(i)
            cache[key] = b
        out = out + cache[key].scale(c)
    return out


def from_bernstein(B: BernsteinElem) -> HeckeElem:
    alg = B.algebra
    out = alg.zero()
    for (u, lam), c in B.terms.items():
        out = out + alg.basis(u) * x_monomial(alg, lam) * c
    return out


def decompose_over_subalgebra(T: HeckeElem, alpha: Composition) -> dict[ExtAffineWeylElem, BernsteinElem]:
    """
    The unique ``{w: h_w}`` with ``T = sum_{w in D_alpha} S_w h_w`` and each
    ``h_w`` in the parabolic subalgebra spanned by ``S_z X^lam``, ``z`` in
    W_alpha. Only nonzero components are returned.
    """
    alg = T.algebra
    if alpha.total != alg.rank:
        raise ValueError(f"composition {alpha} does not sum to rank {alg.rank}")
    reps, _ = min_coset_reps(alpha)
    parts: dict = {}
    for (u, lam), c in to_bernstein(T).terms.items():
        w, z = coset_factor(u, alpha)
        parts.setdefault(w, {})[(z, lam)] = c
    out = {w: BernsteinElem(alg, d) for w, d in parts.items()}
    if not set(out) <= set(reps):
        raise AssertionError("coset factor outside D_alpha")
    return {w: out[w] for w in reps if w in out and out[w].terms}


def recompose(parts: dict[ExtAffineWeylElem, BernsteinElem], alg: HeckeAlgebra) -> HeckeElem:
    """``sum S_w h_w`` evaluated by Coxeter-basis multiplication."""
    out = alg.zero()
    for w, h in parts.items():
        out = out + alg.basis(w) * from_bernstein(h)
    return out


def check_bernstein_relations(alg: HeckeAlgebra):
    """Commutation, far commutation with S_i, the S_i X_i S_i = q X_{i+1} rule,
    invertibility, and the product of all X_i against Pi^r."""
    from .hecke import RelationCheck

    r, q = alg.rank, alg.param
    X = [None] + [bernstein_X(alg, i) for i in range(1, r + 1)]
    Xi = [None] + [bernstein_X_inverse(alg, i) for i in range(1, r + 1)]
    one = alg.one()
    checks = []
    for i in range(1, r + 1):
        checks.append(RelationCheck(f"x_inverse[{i}]", X[i] * Xi[i] == one and Xi[i] * X[i] == one))
        for j in range(i + 1, r + 1):
            checks.append(RelationCheck(f"x_commute[{i},{j}]", X[i] * X[j] == X[j] * X[i]))
    for j in range(1, r + 1):
        for i in range(1, r):
            if i in (j, j - 1):
                continue
            checks.append(RelationCheck(f"x_s_commute[X{j},S{i}]", X[j] * alg.S(i) == alg.S(i) * X[j]))
    for i in range(1, r):
        checks.append(RelationCheck(f"x_conjugation[{i}]", alg.S(i) * X[i] * alg.S(i) == X[i + 1] * q))
    prod_x = one
    for i in range(1, r + 1):
        prod_x = prod_x * X[i]
    norm = alg.param ** (r * (r - 1) // 2)
    checks.append(RelationCheck("x_product_is_scaled_pi_power", prod_x * norm == alg.Pi(r)))
    gens = [alg.Pi(1)] + [alg.S(i) for i in range(r)] if r >= 2 else [alg.Pi(1)]
    checks.append(RelationCheck("x_product_central", all(prod_x * g == g * prod_x for g in gens)))
    return checks
