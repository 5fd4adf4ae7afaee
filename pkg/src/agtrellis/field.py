"""Arithmetic in GF(p^m).

An element is stored as its index: the coefficient vector of the residue
polynomial read as a base-p number (coefficient of x^j is digit j).  All
arithmetic methods accept ints or integer numpy arrays of indices.
"""

from __future__ import annotations

import functools
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from agtrellis.errors import (
    DivisionByZero,
    FieldTooLarge,
    MixedFields,
    NotPrime,
    ReducibleModulus,
)

MAX_ORDER = 1 << 16
# full q x q tables up to this order, log/antilog above
TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_mod(num: Sequence[int], den: Sequence[int], p: int) -> list[int]:
    """Remainder of num / den over GF(p); both low-to-high, den monic."""
    rem = list(num)
    dd = len(den) - 1
    for shift in range(len(rem) - 1 - dd, -1, -1):
        c = rem[shift + dd] % p
        if c:
            for j, dc in enumerate(den):
                rem[shift + j] = (rem[shift + j] - c * dc) % p
    return [c % p for c in rem[:dd]]


def _monic(p: int, degree: int):
    """Monic polynomials of a given degree, ordered by sum(c_j p^j)."""
    for v in range(p**degree):
        coeffs = []
        for _ in range(degree):
            v, c = divmod(v, p)
            coeffs.append(c)
        yield coeffs + [1]


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = len(coeffs) - 1
    if m < 1:
        return False
    for d in range(1, m // 2 + 1):
        for div in _monic(p, d):
            if not any(_poly_mod(coeffs, div, p)):
                return False
    return True


def canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    """Least monic irreducible of degree m, ordered as polynomials are written.

    Comparison is on (c_{m-1}, ..., c_0), i.e. by the integer sum(c_j p^j),
    so GF(8) gets x^3+x+1 and GF(16) gets x^4+x+1.
    """
    for coeffs in _monic(p, m):
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("an irreducible polynomial exists in every degree")


class Field:
    """The finite field GF(p^m) for p^m <= 65536.

    Instances are immutable; use :func:`get_field` to share one instance per
    (p, m, modulus).
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if p**m > MAX_ORDER:
            raise FieldTooLarge(f"{p}^{m} exceeds {MAX_ORDER}")
        if modulus is None:
            modulus = canonical_modulus(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ReducibleModulus(f"modulus must be monic of degree {m}")
            if not is_irreducible(modulus, p):
                raise ReducibleModulus(f"{list(modulus)} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus: tuple[int, ...] = tuple(modulus)
        self._build()

    def _build(self) -> None:
        p, m, q = self.p, self.m, self.q
        weights = p ** np.arange(m, dtype=np.int64)
        digits = (np.arange(q, dtype=np.int64)[:, None] // weights) % p
        self._weights = weights
        self._digits = digits

        def times(c: int) -> np.ndarray:
            # multiplication by c is GF(p)-linear; column j is c * x^j
            vec = [int(d) for d in digits[c]]
            cols = []
            for _ in range(m):
                cols.append(vec)
                top = vec[-1]
                vec = [0] + vec[:-1]
                vec = [(v - top * self.modulus[j]) % p for j, v in enumerate(vec)]
            mat = np.array(cols, dtype=np.int64).T
            return ((digits @ mat.T) % p) @ weights

        exp = None
        for c in range(1, q):
            step = times(c).tolist()
            seq = [1]
            cur = step[1]
            while cur != 1:
                seq.append(cur)
                cur = step[cur]
            if len(seq) == q - 1:
                exp = seq
                break
        assert exp is not None
        self.primitive = exp[1] if q > 2 else 1
        self._exp = np.array(exp + exp, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        log[np.array(exp, dtype=np.int64)] = np.arange(q - 1, dtype=np.int64)
        self._log = log
        self._neg = (((-digits) % p) @ weights).astype(np.int64)
        inv = np.zeros(q, dtype=np.int64)
        nz = np.arange(1, q)
        inv[nz] = self._exp[(q - 1 - log[nz]) % (q - 1)]
        self._inv = inv
        if q <= TABLE_LIMIT:
            idx = np.arange(q)
            self._add_t = self._add_digits(idx[:, None], idx[None, :])
            self._mul_t = self._mul_log(idx[:, None], idx[None, :])
        else:
            self._add_t = None
            self._mul_t = None

    # -- raw vectorised kernels -------------------------------------------
    def _add_digits(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._weights

    def _mul_log(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    @staticmethod
    def _wrap(r):
        r = np.asarray(r)
        return int(r) if r.ndim == 0 else r

    # -- public arithmetic ------------------------------------------------
    def add(self, a, b):
        a, b = np.asarray(a), np.asarray(b)
        if self._add_t is not None:
            return self._wrap(self._add_t[a, b])
        return self._wrap(self._add_digits(a, b))

    def neg(self, a):
        return self._wrap(self._neg[np.asarray(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a, b = np.asarray(a), np.asarray(b)
        if self._mul_t is not None:
            return self._wrap(self._mul_t[a, b])
        return self._wrap(self._mul_log(a, b))

    def inv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise DivisionByZero("zero has no multiplicative inverse")
        return self._wrap(self._inv[a])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        a = np.asarray(a)
        out = self._exp[(self._log[a] * (e % (self.q - 1))) % (self.q - 1)]
        if e == 0:
            out = np.ones_like(a)
        else:
            out = np.where(a == 0, 0, out)
        return self._wrap(out)

    def dot(self, u, v) -> int:
        """Sum of coordinate products of two equal-length vectors."""
        acc = 0
        for t in np.atleast_1d(self.mul(np.asarray(u), np.asarray(v))).tolist():
            acc = self.add(acc, t)
        return int(acc)

    def sum(self, arr, axis: int = 0):
        """Field sum of an index array along one axis."""
        arr = np.moveaxis(np.asarray(arr), axis, 0)
        if arr.shape[0] == 0:
            return self._wrap(np.zeros(arr.shape[1:], dtype=np.int64))
        if self.p == 2:
            return self._wrap(np.bitwise_xor.reduce(arr, axis=0))
        if self.m == 1:
            return self._wrap(arr.sum(axis=0) % self.p)
        acc = arr[0]
        for row in arr[1:]:
            acc = self.add(acc, row)
        return self._wrap(acc)

    # -- elements ---------------------------------------------------------
    def __call__(self, index: int) -> FieldElement:
        index = int(index)
        if not 0 <= index < self.q:
            raise ValueError(f"index {index} outside GF({self.q})")
        return FieldElement(self, index)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, i) for i in range(self.q)]

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    # -- identity ---------------------------------------------------------
    @property
    def key(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.p, self.m, self.modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __reduce__(self):
        return (get_field, self.key)

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"


@functools.lru_cache(maxsize=None)
def _cached(p: int, m: int, modulus: tuple[int, ...] | None) -> Field:
    return Field(p, m, modulus)


def get_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> Field:
    """Shared :class:`Field` instance; the canonical modulus is used if none given."""
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
    f = _cached(p, m, modulus)
    if modulus is None:
        # same object whether or not the canonical modulus was spelled out
        return _cached(p, m, f.modulus)
    return f


def field_new(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> Field:
    return get_field(p, m, modulus)


def enumerate_elements(field: Field) -> list[int]:
    return list(range(field.q))


@dataclass(frozen=True)
class FieldElement:
    field: Field
    index: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields(f"{self.field!r} vs {other.field!r}")
            return other.index
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p if self.field.m == 1 else self.field(other).index
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.add(self.index, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.sub(self.index, o))

    def __rsub__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.sub(o, self.index))

    def __mul__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.mul(self.index, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.div(self.index, o))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.index, int(e)))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.index))

    def __int__(self) -> int:
        return self.index

    def __bool__(self) -> bool:
        return self.index != 0

    def __repr__(self) -> str:
        return f"{self.field!r}({self.index})"
