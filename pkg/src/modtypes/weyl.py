"""
The extended affine Weyl group of type A, ``Z^r x| S_r``.

Model
-----
An element is a pair ``(perm, trans)``: ``perm`` is a permutation of
``1..r`` in one-line notation and ``trans`` an integer vector. Think of the
monomial matrix whose column ``i`` has the entry ``varpi**trans[i]`` in row
``perm[i]``. Labelling the lattice vector ``varpi**k * e_i`` by the integer
``i - r*k`` turns each element into a periodic bijection of Z ("window"
notation)::

    w(i + r*k) = perm[i] - r*trans[i] + r*k

and the group law is composition of these bijections, which gives

    (perm, t) * (perm', t') = (perm o perm', t' + t o perm').

Generators: ``s_i`` (``1 <= i < r``) swaps ``i`` and ``i+1``, ``s_0`` swaps
``0`` and ``1`` (that is ``r`` and ``r+1``), and ``Pi`` is the shift
``x -> x - 1``. These satisfy ``Pi s_i Pi^-1 = s_{i-1}`` and
``Pi^r = t_(1,...,1)``, and ``Pi`` is the monomial matrix with the identity
block above the diagonal and ``varpi`` in the bottom-left corner.

Length is computed from the window by the closed formula
``sum_{i<j} |floor((w(j) - w(i)) / r)|``; :func:`bfs_lengths` is an
independent breadth-first word search used to validate it.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import factorial, prod

__all__ = [
    "Composition",
    "compositions",
    "ExtAffineWeylElem",
    "ReducedWord",
    "identity",
    "simple_reflection",
    "pi_power",
    "translation",
    "generators",
    "length",
    "reduced_word",
    "evaluate_word",
    "finite_weyl_group",
    "parabolic_subgroup",
    "min_coset_reps",
    "coset_factor",
    "bfs_lengths",
]


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def boundaries(self) -> frozenset[int]:
        """Indices i (1 <= i < total) with s_i not in the block subgroup."""
        return frozenset(itertools.accumulate(self.parts[:-1]))

    def block_generators(self) -> list[int]:
        return [i for i in range(1, self.total) if i not in self.boundaries]

    @classmethod
    def parse(cls, text: str) -> "Composition":
        return cls(tuple(int(x) for x in text.replace(" ", "").split(",") if x))

    def __str__(self):
        return ",".join(map(str, self.parts))


def compositions(n: int):
    """All compositions of n, in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first, *rest)


@dataclass(frozen=True)
class ExtAffineWeylElem:
    perm: tuple[int, ...]
    trans: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(self, "trans", tuple(self.trans))
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ValueError(f"not a permutation of 1..r: {self.perm}")
        if len(self.trans) != len(self.perm):
            raise ValueError("perm and trans lengths differ")

    @property
    def rank(self) -> int:
        return len(self.perm)

    @cached_property
    def window(self) -> tuple[int, ...]:
        r = self.rank
        return tuple(p - r * t for p, t in zip(self.perm, self.trans))

    @classmethod
    def from_window(cls, window) -> "ExtAffineWeylElem":
        r = len(window)
        perm, trans = [], []
        for x in window:
            p = (x - 1) % r + 1
            perm.append(p)
            trans.append((p - x) // r)
        return cls(tuple(perm), tuple(trans))

    def __call__(self, x: int) -> int:
        """Action on Z."""
        r = self.rank
        i, k = (x - 1) % r, (x - 1) // r
        return self.window[i] + r * k

    def __mul__(self, other: "ExtAffineWeylElem") -> "ExtAffineWeylElem":
        if other.rank != self.rank:
            raise ValueError("rank mismatch")
        perm = tuple(self.perm[p - 1] for p in other.perm)
        trans = tuple(t2 + self.trans[p - 1] for p, t2 in zip(other.perm, other.trans))
        return ExtAffineWeylElem(perm, trans)

    def inverse(self) -> "ExtAffineWeylElem":
        r = self.rank
        inv = [0] * r
        for i, x in enumerate(self.window, start=1):
            # w(i) = x  =>  w^-1(x) = i, and w^-1(x mod-window + r k) shifts
            j = (x - 1) % r + 1
            inv[j - 1] = i - (x - j)
        return ExtAffineWeylElem.from_window(inv)

    def __pow__(self, n: int) -> "ExtAffineWeylElem":
        base = self if n >= 0 else self.inverse()
        out = identity(self.rank)
        for _ in range(abs(n)):
            out = out * base
        return out

    @property
    def is_finite(self) -> bool:
        return not any(self.trans)

    @property
    def is_translation(self) -> bool:
        return self.perm == tuple(range(1, self.rank + 1))

    @property
    def pi_exponent(self) -> int:
        """The a with w in Pi^a * (affine Weyl group)."""
        return -sum(x - i for i, x in enumerate(self.window, start=1)) // self.rank

    def has_right_descent(self, i: int) -> bool:
        """length(w s_i) < length(w), for i in Z/r."""
        i %= self.rank
        return self(i) > self(i + 1)

    def has_left_descent(self, i: int) -> bool:
        return self.inverse().has_right_descent(i)

    def __repr__(self):
        return f"W(perm={self.perm}, trans={self.trans})"


@dataclass(frozen=True)
class ReducedWord:
    pi_power: int
    letters: tuple[int, ...]

    def __str__(self):
        return f"Pi^{self.pi_power} * s{list(self.letters)}"


def identity(r: int) -> ExtAffineWeylElem:
    return ExtAffineWeylElem(tuple(range(1, r + 1)), (0,) * r)


def translation(vec) -> ExtAffineWeylElem:
    vec = tuple(vec)
    return ExtAffineWeylElem(tuple(range(1, len(vec) + 1)), vec)


def simple_reflection(r: int, i: int) -> ExtAffineWeylElem:
    """s_i for i in Z/r; requires r >= 2."""
    if r < 2:
        raise ValueError("no simple reflections when r = 1")
    i %= r
    window = list(range(1, r + 1))
    if i == 0:
        window[0], window[r - 1] = 0, r + 1
    else:
        window[i - 1], window[i] = i + 1, i
    return ExtAffineWeylElem.from_window(window)


def pi_power(r: int, a: int = 1) -> ExtAffineWeylElem:
    return ExtAffineWeylElem.from_window([i - a for i in range(1, r + 1)])


def generators(r: int) -> dict[str, ExtAffineWeylElem]:
    """``{"s0": ..., "s{r-1}": ..., "pi": ..., "pi_inverse": ...}``."""
    if r < 1:
        raise ValueError("r must be positive")
    gens = {}
    if r >= 2:
        for i in range(r):
            gens[f"s{i}"] = simple_reflection(r, i)
    gens["pi"] = pi_power(r, 1)
    gens["pi_inverse"] = pi_power(r, -1)
    return gens


def length(w: ExtAffineWeylElem) -> int:
    """Closed form on the window: sum over i<j of |floor((w(j)-w(i))/r)|."""
    r = w.rank
    win = w.window
    return sum(abs((win[j] - win[i]) // r) for i in range(r) for j in range(i + 1, r))


def reduced_word(w: ExtAffineWeylElem) -> ReducedWord:
    """
    ``w = Pi^a s_{i1} ... s_{il}`` with l = length(w); the letters are the
    lexicographically smallest reduced word (greedy on left descents).
    """
    a = w.pi_exponent
    u = pi_power(w.rank, -a) * w
    letters = []
    while True:
        for i in range(w.rank if w.rank > 1 else 0):
            if u.has_left_descent(i):
                letters.append(i)
                u = simple_reflection(w.rank, i) * u
                break
        else:
            break
    if u != identity(w.rank):
        raise AssertionError(f"reduced word stripping ended at {u}")
    return ReducedWord(a, tuple(letters))


def evaluate_word(r: int, word: ReducedWord) -> ExtAffineWeylElem:
    out = pi_power(r, word.pi_power)
    for i in word.letters:
        out = out * simple_reflection(r, i)
    return out


def finite_weyl_group(r: int) -> list[ExtAffineWeylElem]:
    """S_r sorted by (length, perm)."""
    elems = [ExtAffineWeylElem(p, (0,) * r) for p in itertools.permutations(range(1, r + 1))]
    return sorted(elems, key=lambda w: (length(w), w.perm))


def parabolic_subgroup(alpha: Composition) -> list[ExtAffineWeylElem]:
    """Block permutations W_alpha, sorted by (length, perm)."""
    r = alpha.total
    blocks, start = [], 1
    for n in alpha.parts:
        blocks.append(list(range(start, start + n)))
        start += n
    elems = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm = tuple(x for block in choice for x in block)
        elems.append(ExtAffineWeylElem(perm, (0,) * r))
    return sorted(elems, key=lambda w: (length(w), w.perm))


def min_coset_reps(alpha: Composition, r: int | None = None) -> tuple[list[ExtAffineWeylElem], ExtAffineWeylElem]:
    """
    Minimal-length representatives D_alpha of the left cosets w W_alpha in
    S_r, sorted by (length, perm), together with the longest one.
    """
    if r is not None and r != alpha.total:
        raise ValueError(f"composition {alpha} does not sum to r={r}")
    r = alpha.total
    gens = alpha.block_generators()
    reps = [w for w in finite_weyl_group(r) if not any(w.has_right_descent(i) for i in gens)]
    expected = factorial(r) // prod(factorial(n) for n in alpha.parts)
    if len(reps) != expected:
        raise AssertionError(f"found {len(reps)} coset reps, expected {expected}")
    top = max(length(w) for w in reps)
    longest = [w for w in reps if length(w) == top]
    if len(longest) != 1:
        raise AssertionError("longest coset representative is not unique")
    return reps, longest[0]


def coset_factor(u: ExtAffineWeylElem, alpha: Composition) -> tuple[ExtAffineWeylElem, ExtAffineWeylElem]:
    """Write a finite u as w*z with w in D_alpha, z in W_alpha; lengths add."""
    if not u.is_finite:
        raise ValueError("coset_factor expects a finite permutation")
    z = identity(u.rank)
    w = u
    gens = alpha.block_generators()
    while True:
        for i in gens:
            if w.has_right_descent(i):
                s = simple_reflection(u.rank, i)
                w = w * s
                z = s * z
                break
        else:
            return w, z


def bfs_lengths(targets, r: int) -> dict[ExtAffineWeylElem, int]:
    """
    Word length of each target with respect to s_0..s_{r-1}, Pi^{+-1} (Pi of
    weight zero), by breadth-first search in the Cayley graph. Independent of
    :func:`length`.
    """
    targets = set(targets)
    need: dict[int, set] = {}
    for w in targets:
        need.setdefault(w.pi_exponent, set()).add(pi_power(r, -w.pi_exponent) * w)
    remaining = {u for us in need.values() for u in us}
    gens = [simple_reflection(r, i) for i in range(r)] if r >= 2 else []
    dist = {identity(r): 0}
    queue = deque([identity(r)])
    remaining.discard(identity(r))
    while remaining and queue:
        x = queue.popleft()
        for s in gens:
            y = x * s
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
                remaining.discard(y)
    if remaining:
        raise RuntimeError("BFS exhausted without reaching every target")
    return {w: dist[pi_power(r, -w.pi_exponent) * w] for w in targets}
