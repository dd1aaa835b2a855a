"""
Finite-dimensional right modules over H(r, q).

A module is given by matrices for ``S_1 .. S_{r-1}``, ``Pi`` and ``Pi^-1``
acting on row vectors, so ``v . (g h) = (v M_g) M_h``. ``S_0`` acts by
``M_Pi M_S1 M_Pi^-1``.

Induced modules ``Hom_{H_alpha}(H, chi)`` for a one-dimensional character
chi of the parabolic subalgebra H_alpha use the dual basis ``f_w``
(``w`` in D_alpha) of the free basis ``S_w``; the matrix of T is

    M_T[w][w'] = chi( h_w(T S_{w'}) )

where ``T S_{w'} = sum_w S_w h_w(T S_{w'})``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import factorial

from . import linalg as la
from .bernstein import BernsteinElem, bernstein_X, decompose_over_subalgebra
from .fields import Field
from .hecke import HeckeAlgebra, HeckeElem, RelationCheck
from .weyl import (
    Composition,
    ExtAffineWeylElem,
    coset_factor,
    finite_weyl_group,
    length,
    min_coset_reps,
    parabolic_subgroup,
    reduced_word,
)

__all__ = [
    "FinModule",
    "LaurentChar",
    "BlockChar",
    "Y1Report",
    "induce",
    "induce_from_laurent_char",
    "is_reducible_rank2",
    "reducibility_locus_rank2",
    "find_simple_submodules",
    "spin",
    "verify_Y1_bijection",
    "MAX_SPIN_DIM",
]

MAX_SPIN_DIM = 24


@dataclass
class FinModule:
    algebra: HeckeAlgebra
    dim: int
    action: dict  # "S1".."S{r-1}", "Pi", "Pi_inv" -> matrix
    x_eigenvalue_hint: tuple = ()
    label: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        bad = [c for c in self.relation_checks() if not c.passed]
        if bad:
            raise ValueError(f"action violates relations: {[c.name for c in bad]}")

    @property
    def field(self) -> Field:
        return self.algebra.field

    def gen(self, i: int):
        """Matrix of S_i, i in Z/r."""
        r = self.algebra.rank
        i %= r
        if i == 0:
            key = "S0"
            if key not in self._cache:
                self._cache[key] = la.matmul(la.matmul(self.action["Pi"], self.action["S1"]), self.action["Pi_inv"])
            return self._cache[key]
        return self.action[f"S{i}"]

    def pi(self, a: int = 1):
        M = la.eye(self.field, self.dim)
        g = self.action["Pi"] if a >= 0 else self.action["Pi_inv"]
        for _ in range(abs(a)):
            M = la.matmul(M, g)
        return M

    def basis_matrix(self, w: ExtAffineWeylElem):
        key = ("basis", w)
        if key not in self._cache:
            rw = reduced_word(w)
            M = self.pi(rw.pi_power)
            for i in rw.letters:
                M = la.matmul(M, self.gen(i))
            self._cache[key] = M
        return self._cache[key]

    def matrix(self, T: HeckeElem):
        M = la.zeros(self.field, self.dim)
        for w, c in T.coeffs.items():
            M = la.mat_add(M, la.mat_scale(self.basis_matrix(w), c))
        return M

    def x_matrices(self):
        return [self.matrix(bernstein_X(self.algebra, i)) for i in range(1, self.algebra.rank + 1)]

    def generator_matrices(self):
        return [self.action[k] for k in sorted(self.action)]

    def relation_checks(self) -> list[RelationCheck]:
        r, q, F, n = self.algebra.rank, self.algebra.param, self.field, self.dim
        I = la.eye(F, n)
        mm = la.matmul
        checks = [
            RelationCheck("pi_inverse", la.mat_eq(mm(self.action["Pi"], self.action["Pi_inv"]), I)
                          and la.mat_eq(mm(self.action["Pi_inv"], self.action["Pi"]), I))
        ]
        if r == 1:
            return checks
        P = self.action["Pi"]
        for i in range(r):
            S = self.gen(i)
            quad = mm(la.mat_add(S, I), la.mat_add(S, la.mat_scale(I, -q)))
            checks.append(RelationCheck(f"quadratic[{i}]", la.mat_eq(quad, la.zeros(F, n))))
            # Pi S_i = S_{i-1} Pi, as right actions
            checks.append(RelationCheck(f"pi_conjugation[{i}]", la.mat_eq(mm(P, S), mm(self.gen(i - 1), P))))
            for j in range(r):
                if j in ((i - 1) % r, (i + 1) % r, i):
                    continue
                Sj = self.gen(j)
                checks.append(RelationCheck(f"commute[{i},{j}]", la.mat_eq(mm(S, Sj), mm(Sj, S))))
            if r >= 3:
                Sn = self.gen(i + 1)
                checks.append(RelationCheck(f"braid[{i}]", la.mat_eq(mm(mm(S, Sn), S), mm(mm(Sn, S), Sn))))
        return checks


@dataclass(frozen=True)
class BlockChar:
    """
    One-dimensional character of H_alpha: ``X_i -> z_i`` and each block
    ``S_i -> q`` (``sign="q"``) or ``S_i -> -1`` (``sign="-1"``).
    """

    alpha: Composition
    values: tuple
    sign: str = "q"

    def __post_init__(self):
        if len(self.values) != self.alpha.total:
            raise ValueError("need one value per X_i")
        if any(not z for z in self.values):
            raise ValueError("character values must be nonzero")
        if self.sign not in ("q", "-1"):
            raise ValueError("sign must be 'q' or '-1'")

    def check_compatible(self, q) -> None:
        for i in self.alpha.block_generators():
            zi, zn = self.values[i - 1], self.values[i]
            ok = zn == q * zi if self.sign == "q" else zn * q == zi
            if not ok:
                raise ValueError(
                    f"values z_{i}={zi}, z_{i + 1}={zn} are not compatible with S_{i} -> {self.sign}"
                )

    def evaluate(self, h: BernsteinElem, q):
        eps = q if self.sign == "q" else -1
        total = h.algebra.field.zero
        for (z, lam), c in h.terms.items():
            v = c * eps ** length(z)
            for zi, k in zip(self.values, lam):
                v = v * zi**k
            total = total + v
        return total


def LaurentChar(values) -> BlockChar:
    """Character of the commutative subalgebra generated by the X_i^{+-1}."""
    values = tuple(values)
    return BlockChar(Composition((1,) * len(values)), values)


def induce(alg: HeckeAlgebra, chi: BlockChar) -> FinModule:
    """``Hom_{H_alpha}(H, chi)`` of dimension ``|D_alpha|``."""
    F = alg.field
    values = tuple(F(z) for z in chi.values)
    chi = BlockChar(chi.alpha, values, chi.sign)
    if chi.alpha.total != alg.rank:
        raise ValueError(f"character of rank {chi.alpha.total} for algebra of rank {alg.rank}")
    chi.check_compatible(alg.param)
    reps, _ = min_coset_reps(chi.alpha)
    n = len(reps)
    index = {w: k for k, w in enumerate(reps)}

    def mat(T: HeckeElem):
        M = la.zeros(F, n)
        for col, w2 in enumerate(reps):
            parts = decompose_over_subalgebra(T * alg.basis(w2), chi.alpha)
            for w, h in parts.items():
                M[index[w]][col] = chi.evaluate(h, alg.param)
        return M

    action = {"Pi": mat(alg.Pi(1)), "Pi_inv": mat(alg.Pi(-1))}
    for i in range(1, alg.rank):
        action[f"S{i}"] = mat(alg.S(i))
    return FinModule(alg, n, action, x_eigenvalue_hint=tuple(sorted(set(values))), label=f"Ind({chi})")


def induce_from_laurent_char(alg: HeckeAlgebra, chi) -> FinModule:
    if not isinstance(chi, BlockChar):
        chi = LaurentChar(chi)
    if chi.alpha.parts != (1,) * alg.rank:
        raise ValueError("a Laurent character has all blocks of size 1")
    mod = induce(alg, chi)
    if mod.dim != factorial(alg.rank):
        raise AssertionError("induced module has the wrong dimension")
    return mod


def _is_line_stable(v, mats) -> bool:
    return all(la.rank([v, la.vecmat(v, M)]) == 1 for M in mats)


def is_reducible_rank2(alg: HeckeAlgebra, z) -> bool:
    """
    Whether Ind(1, z) for r = 2 has a one-dimensional submodule. Over a
    prime field every line is tested; over QQ the eigenlines of S_1 are.
    """
    if alg.rank != 2:
        raise ValueError("rank-2 algebra required")
    F = alg.field
    z = F(z)
    if not z:
        raise ValueError("z must be nonzero")
    mod = induce_from_laurent_char(alg, (F.one, z))
    mats = [mod.action["S1"], mod.action["Pi"]]
    if F.is_finite:
        lines = [[F.one, t] for t in F.elements()] + [[F.zero, F.one]]
    else:
        lines = []
        for lam in (alg.param, F(-1)):
            shifted = la.mat_add(mats[0], la.mat_scale(la.eye(F, 2), -lam))
            lines += la.left_nullspace(shifted, F)
        if any(len(_eig_space_dim(mats[0], lam, F)) == 2 for lam in (alg.param, F(-1))):
            # S_1 is scalar; Pi must then have a rational eigenline
            lines = _rational_eigenlines_2x2(mats[1], F)
    return any(_is_line_stable(v, mats) for v in lines)


def _eig_space_dim(M, lam, F):
    return la.left_nullspace(la.mat_add(M, la.mat_scale(la.eye(F, len(M)), -lam)), F)


def _rational_eigenlines_2x2(M, F):
    from fractions import Fraction

    tr = M[0][0] + M[1][1]
    det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    disc = Fraction(tr * tr - 4 * det)
    if disc < 0:
        return []
    num, den = disc.numerator, disc.denominator
    rn, rd = _isqrt_exact(num), _isqrt_exact(den)
    if rn is None or rd is None:
        return []
    out = []
    for sgn in (1, -1):
        lam = (tr + sgn * Fraction(rn, rd)) / 2
        out += _eig_space_dim(M, lam, F)
    return out


def _isqrt_exact(n: int):
    from math import isqrt

    s = isqrt(n)
    return s if s * s == n else None


def reducibility_locus_rank2(alg: HeckeAlgebra) -> list:
    """All z in F_ell^x with Ind(1, z) reducible."""
    F = alg.field
    if not F.is_finite:
        raise ValueError("exhaustive locus needs a finite field")
    return [z for z in F.units() if is_reducible_rank2(alg, z)]


def spin(mod: FinModule, v) -> list:
    """Row-reduced basis of the submodule generated by v."""
    gens = [mod.action[k] for k in sorted(mod.action)]
    ech = la.Echelon()
    frontier = [ech.add(v)] if any(v) else []
    while frontier:
        new = []
        for u in frontier:
            for M in gens:
                w = ech.add(la.vecmat(u, M))
                if w is not None:
                    new.append(w)
        frontier = new
    return ech.basis()


def _common_eigenspaces(mats, candidates, F, n):
    """Joint eigenspaces of commuting matrices, as lists of basis rows."""
    spaces = [la.eye(F, n)]
    for M in mats:
        refined = []
        for B in spaces:
            BM = la.matmul(B, M)
            found = 0
            for lam in candidates:
                # v = x B with x (B M - lam B) = 0
                A = [[a - lam * b for a, b in zip(ra, rb)] for ra, rb in zip(BM, B)]
                xs = la.left_nullspace(A, F)
                if xs:
                    refined.append(la.row_space_basis([la.vecmat(x, B) for x in xs]))
                    found += len(xs)
                    if found == len(B):
                        break
        spaces = refined
    return spaces


def _lines(B, F, limit: int = 4096):
    """All lines of span(B) over a finite field when few enough, else B."""
    k = len(B)
    if k == 1 or not F.is_finite or (F.characteristic**k - 1) // (F.characteristic - 1) > limit:
        return list(B)
    out = []
    for coeffs in itertools.product(F.elements(), repeat=k):
        first = next((c for c in coeffs if c), None)
        if first is None or first != F.one:
            continue
        v = [F.zero] * len(B[0])
        for c, row in zip(coeffs, B):
            v = [a + c * b for a, b in zip(v, row)]
        out.append(v)
    return out


def find_simple_submodules(mod: FinModule) -> list:
    """
    Inclusion-minimal submodules among those spun from the standard basis and
    the common eigenvectors of the X_i. Each is a row-reduced basis matrix.
    """
    if mod.dim > MAX_SPIN_DIM:
        raise ValueError(f"dimension {mod.dim} exceeds the guard {MAX_SPIN_DIM}")
    F = mod.field
    if F.is_finite:
        candidates = F.units()
    elif mod.x_eigenvalue_hint:
        q = mod.algebra.param
        # X-eigenvalues of an induced module are q-power multiples of the character values
        span = range(-mod.algebra.rank, mod.algebra.rank + 1)
        candidates = sorted({z * q**k for z in mod.x_eigenvalue_hint for k in span})
    else:
        raise ValueError("over QQ an X-eigenvalue hint is required")
    vectors = [row for row in la.eye(F, mod.dim)]
    for B in _common_eigenspaces(mod.x_matrices(), candidates, F, mod.dim):
        vectors += _lines(B, F)
    subs = []
    for v in vectors:
        S = spin(mod, v)
        if not any(la.mat_eq(S, T) for T in subs):
            subs.append(S)
    minimal = [S for S in subs if not any(len(T) < len(S) and all(la.in_row_space(t, S) for t in T) for T in subs)]
    return sorted(minimal, key=lambda S: (len(S), [[int(x) if F.is_finite else x for x in row] for row in S]))


@dataclass(frozen=True)
class Y1Report:
    alpha: Composition
    dim: int
    rank_y1: int
    rank_ydelta: int
    solvable: dict  # w (as perm tuple) -> bool

    @property
    def passed(self) -> bool:
        return self.rank_y1 == self.dim and self.rank_ydelta == self.dim and all(self.solvable.values())


def verify_Y1_bijection(alpha: Composition, q, F: Field) -> Y1Report:
    """
    Finite Hecke algebra H0 of S_r over its parabolic H0_alpha. The matrix of
    ``T -> Y_w T`` has rows ``S_u`` (u in S_r) and columns ``(w', z)``
    (w' in D_alpha, z in W_alpha): the S_z-coefficient of the w-component
    of ``S_u S_{w'}``. Y_1 and Y_delta must both be bijective, and each
    ``Y_w`` must equal ``Y_1 T_w`` for some T_w.
    """
    r = alpha.total
    alg = HeckeAlgebra(r, q, F)
    W0 = finite_weyl_group(r)
    Walpha = parabolic_subgroup(alpha)
    reps, delta = min_coset_reps(alpha)
    cols = [(w2, z) for w2 in reps for z in Walpha]
    col_index = {c: k for k, c in enumerate(cols)}
    n = len(W0)
    if len(cols) != n:
        raise AssertionError("|D_alpha| * |W_alpha| != r!")

    products = {}
    for u in W0:
        for w2 in reps:
            products[(u, w2)] = alg.basis_product(u, w2)

    def y_matrix(w):
        M = la.zeros(F, n, n)
        for i, u in enumerate(W0):
            for w2 in reps:
                for v, c in products[(u, w2)].items():
                    wv, z = coset_factor(v, alpha)
                    if wv == w:
                        M[i][col_index[(w2, z)]] += c
        return M

    e = W0[0]
    M1 = y_matrix(e)
    Md = y_matrix(delta)
    solvable = {}
    for w in reps:
        target = [F.zero] * n
        target[col_index[(w, e)]] = F.one
        solvable[w.perm] = la.solve_left(M1, target, F) is not None
    return Y1Report(alpha, n, la.rank(M1), la.rank(Md), solvable)
