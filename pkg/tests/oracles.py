"""Slow, independent reference implementations used only by the tests.

Nothing here imports the package's arithmetic: polynomials are lists of
ints, codes are lists of tuples.
"""

from __future__ import annotations

import itertools


def digits(x: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        x, c = divmod(x, p)
        out.append(c)
    return out


def undigits(cs, p: int) -> int:
    return sum(c * p**j for j, c in enumerate(cs))


def poly_mulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    m = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for top in range(len(prod) - 1, m - 1, -1):
        c = prod[top]
        if c:
            for j in range(m + 1):
                prod[top - m + j] = (prod[top - m + j] - c * modulus[j]) % p
    return (prod + [0] * m)[:m]


class NaiveField:
    """GF(p^m) by schoolbook polynomial arithmetic on index digits."""

    def __init__(self, p: int, m: int, modulus):
        self.p, self.m, self.modulus = p, m, list(modulus)
        self.q = p**m

    def add(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        return undigits([(x + y) % p for x, y in zip(digits(a, p, m), digits(b, p, m))], p)

    def mul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        return undigits(poly_mulmod(digits(a, p, m), digits(b, p, m), self.modulus, p), p)

    def pow(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r


def irreducible_by_roots_or_products(coeffs, p: int) -> bool:
    """Degree <= 3: no root in GF(p).  Degree 4: also not a product of two
    monic quadratics (checked by multiplying all pairs)."""
    m = len(coeffs) - 1
    if any(sum(c * x**j for j, c in enumerate(coeffs)) % p == 0 for x in range(p)):
        return False
    if m <= 3:
        return True
    assert m == 4
    quads = [[a, b, 1] for a in range(p) for b in range(p)]
    for u, v in itertools.product(quads, repeat=2):
        prod = [0] * 5
        for i, x in enumerate(u):
            for j, y in enumerate(v):
                prod[i + j] = (prod[i + j] + x * y) % p
        if prod == [c % p for c in coeffs]:
            return False
    return True


def all_codewords(G: list[list[int]], F: NaiveField) -> set[tuple[int, ...]]:
    k, n = len(G), len(G[0])
    words = set()
    for coeffs in itertools.product(range(F.q), repeat=k):
        w = [0] * n
        for c, row in zip(coeffs, G):
            if c:
                for j in range(n):
                    w[j] = F.add(w[j], F.mul(c, row[j]))
        words.add(tuple(w))
    return words


def log_q(count: int, q: int) -> int:
    e = 0
    while q**e < count:
        e += 1
    assert q**e == count
    return e


def profile_by_enumeration(G, F: NaiveField) -> tuple[list[int], list[int], list[int]]:
    """(p, f, s) from counting codewords supported on prefixes/suffixes."""
    words = all_codewords(G, F)
    n, k = len(G[0]), len(G)
    p = [log_q(sum(1 for w in words if not any(w[i:])), F.q) for i in range(n + 1)]
    f = [log_q(sum(1 for w in words if not any(w[:i])), F.q) for i in range(n + 1)]
    return p, f, [k - a - b for a, b in zip(p, f)]


def min_distance_by_enumeration(G, F: NaiveField) -> int:
    return min(sum(1 for x in w if x) for w in all_codewords(G, F) if any(w))


def split_min_direct(gammas: list[int], g: int, N: int) -> int:
    """min over all a of count(a) + count(N - a), count taken literally."""
    def count(a: int) -> int:
        if a < 0:
            return 0
        return sum(1 for x in gammas if x <= a) + max(0, a - 2 * g + 1)
    return min(count(a) + count(N - a) for a in range(-2 * g - 5, N + 2 * g + 6))
