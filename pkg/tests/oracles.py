"""
Independent reference implementations used only by the tests.

None of these import the code under test's algorithms: they work from
first principles (literal matrix products, brute-force enumeration).
"""

from __future__ import annotations

from math import gcd


# monomial matrices with entries varpi^k

def monomial_matrix(perm, trans):
    """r x r matrix, entry None for zero, else the exponent of varpi."""
    r = len(perm)
    M = [[None] * r for _ in range(r)]
    for col in range(r):
        M[perm[col] - 1][col] = trans[col]
    return M


def monomial_product(A, B):
    r = len(A)
    out = [[None] * r for _ in range(r)]
    for i in range(r):
        for j in range(r):
            terms = [A[i][k] + B[k][j] for k in range(r) if A[i][k] is not None and B[k][j] is not None]
            assert len(terms) <= 1
            out[i][j] = terms[0] if terms else None
    return out


def shift_matrix(r):
    """Identity block above the diagonal, varpi in the bottom-left corner."""
    M = [[None] * r for _ in range(r)]
    for i in range(r - 1):
        M[i][i + 1] = 0
    M[r - 1][0] = 1
    return M


def transposition_matrix(r, i):
    perm = list(range(1, r + 1))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return monomial_matrix(perm, [0] * r)


# characters

def brute_orbit(k, N, mult):
    seen = []
    x = k % N if N else 0
    while x not in seen:
        seen.append(x)
        x = x * mult % N
    return sorted(seen)


def brute_order(k, N):
    """Order of k in Z/N by repeated addition."""
    t, x = 1, k % N
    while x != 0:
        x = (x + k) % N
        t += 1
    return t


def brute_mult_order(a, n):
    if n == 1:
        return 1
    for t in range(1, n + 1):
        if pow(a, t, n) == 1:
            return t
    raise ValueError("not a unit")


def crt_component(k, M, P):
    """Residue of k mod M where Z/(M P) = Z/M x Z/P, gcd(M, P) = 1."""
    assert gcd(M, P) == 1
    return k % M


# fields

def rational_roots_of_quadratic_char(M):
    """Eigenvalues of a 2x2 rational matrix that are rational (for cross-checks)."""
    from fractions import Fraction
    from math import isqrt

    tr = M[0][0] + M[1][1]
    det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    disc = Fraction(tr * tr - 4 * det)
    if disc < 0:
        return []
    n, d = disc.numerator, disc.denominator
    if isqrt(n) ** 2 != n or isqrt(d) ** 2 != d:
        return []
    root = Fraction(isqrt(n), isqrt(d))
    return sorted({(tr + root) / 2, (tr - root) / 2})
