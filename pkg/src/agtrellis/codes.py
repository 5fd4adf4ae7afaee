"""Linear codes and their minimal-trellis state complexity profiles.

Past and future dimensions come from column ranks of the generator::

    p_i = k - rank(columns i+1..n)      f_i = k - rank(columns 1..i)

and one greedy elimination in a given column order yields the rank of every
prefix of that order, so a full profile costs two eliminations.
"""

from __future__ import annotations

import itertools
import math
import os
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from agtrellis.errors import (
    BudgetZero,
    DegenerateDual,
    EnumerationTooLarge,
    ExhaustiveTooLarge,
    IndexOutOfRange,
    NotAPermutation,
    ZeroMatrix,
    ZeroWeightEntry,
)
from agtrellis.field import Field
from agtrellis.matrix import Matrix, kernel_basis, mat_mul, pivot_columns, rank_of_columns

DEFAULT_ENUM_CAP = 1 << 22
EXHAUSTIVE_MAX_N = 8
STRATEGIES = ("exhaustive", "random", "greedy")


def enum_cap() -> int:
    return int(os.environ.get("AGTRELLIS_ENUM_CAP", DEFAULT_ENUM_CAP))


class LinearCode:
    """A linear [n, k] code over a finite field, held as its RREF basis.

    The code is the object: two generators of the same row space give equal
    codes.
    """

    __slots__ = ("field", "G", "n", "k")

    def __init__(self, field: Field, generator):
        M = generator if isinstance(generator, Matrix) else Matrix(field, generator)
        if M.field != field:
            raise ValueError("generator matrix lives over a different field")
        if M.is_zero():
            raise ZeroMatrix("generator matrix is zero")
        R, rk, _ = M.rref()
        self.field = field
        self.G = Matrix(field, R.data[:rk])
        self.n = M.cols
        self.k = rk

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinearCode) and self.G == other.G

    def __hash__(self) -> int:
        return hash(self.G)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] over {self.field!r})"

    def encode(self, message: Sequence[int]) -> np.ndarray:
        msg = np.asarray(message, dtype=np.int64)
        return np.asarray(self.field.sum(self.field.mul(msg[:, None], self.G.data), axis=0))


def code_new(field: Field, G) -> LinearCode:
    return LinearCode(field, G)


# ---------------------------------------------------------------------------
# profiles


@dataclass(frozen=True)
class StateProfile:
    p: tuple[int, ...]
    f: tuple[int, ...]
    delta: tuple[int, ...]
    s: tuple[int, ...]
    s_max: int
    delta_min: int
    argmax_indices: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.p) - 1

    @property
    def k(self) -> int:
        return self.p[-1]

    @classmethod
    def from_dims(cls, p: Sequence[int], f: Sequence[int]) -> StateProfile:
        k = p[-1]
        delta = tuple(int(a + b) for a, b in zip(p, f))
        s = tuple(k - d for d in delta)
        s_max = max(s)
        return cls(
            p=tuple(int(x) for x in p),
            f=tuple(int(x) for x in f),
            delta=delta,
            s=s,
            s_max=s_max,
            delta_min=k - s_max,
            argmax_indices=tuple(i for i, v in enumerate(s) if v == s_max),
        )

    def to_dict(self) -> dict:
        return {
            "p": list(self.p),
            "f": list(self.f),
            "delta": list(self.delta),
            "s": list(self.s),
            "s_max": self.s_max,
            "delta_min": self.delta_min,
            "argmax_indices": list(self.argmax_indices),
        }


def _prefix_ranks(field: Field, G: np.ndarray, order: Sequence[int]) -> np.ndarray:
    """ranks[t] = rank of the first t columns of ``order``, t = 0..n."""
    hit = np.zeros(len(order) + 1, dtype=np.int64)
    pos = {c: t for t, c in enumerate(order)}
    for c in pivot_columns(field, G, order):
        hit[pos[c] + 1] = 1
    return np.cumsum(hit)


def _dims(field: Field, G: np.ndarray, order: Sequence[int] | None = None) -> tuple[np.ndarray, np.ndarray]:
    k, n = G.shape
    order = list(range(n)) if order is None else list(order)
    fwd = _prefix_ranks(field, G, order)
    bwd = _prefix_ranks(field, G, order[::-1])
    f = k - fwd
    p = k - bwd[::-1]
    return p, f


def _s_max(field: Field, G: np.ndarray, order: Sequence[int]) -> int:
    p, f = _dims(field, G, order)
    return int(G.shape[0] - (p + f).min())


def _check_index(code: LinearCode, i: int) -> None:
    if not 0 <= i <= code.n:
        raise IndexOutOfRange(f"index {i} outside 0..{code.n}")


def past_dim(code: LinearCode, i: int) -> int:
    """dim of {c in C : c_{i+1} = ... = c_n = 0}."""
    _check_index(code, i)
    return code.k - rank_of_columns(code.G, range(i, code.n))


def future_dim(code: LinearCode, i: int) -> int:
    """dim of {c in C : c_1 = ... = c_i = 0}."""
    _check_index(code, i)
    return code.k - rank_of_columns(code.G, range(i))


def state_profile(code: LinearCode) -> StateProfile:
    p, f = _dims(code.field, code.G.data)
    return StateProfile.from_dims(p.tolist(), f.tolist())


def dual_code(code: LinearCode) -> LinearCode:
    if code.k == code.n:
        raise DegenerateDual("the dual of the full space is the zero code")
    return LinearCode(code.field, kernel_basis(code.G))


# ---------------------------------------------------------------------------
# distance


def _codewords_chunks(code: LinearCode, block_bits: int = 16):
    """Yield arrays of codewords covering all q^k messages exactly once."""
    field, G = code.field, code.G.data
    q, k = field.q, code.k
    t = 0
    while t < k and q ** (t + 1) <= (1 << block_bits):
        t += 1
    # block: every combination of the last t rows
    block = np.zeros((1, code.n), dtype=np.int64)
    for row in G[k - t:]:
        scaled = field.mul(np.arange(q)[:, None], row[None, :])
        block = field.add(block[:, None, :], scaled[None, :, :]).reshape(-1, code.n)
    head = G[: k - t]
    for coeffs in itertools.product(range(q), repeat=k - t):
        if head.shape[0]:
            base = field.sum(field.mul(np.asarray(coeffs)[:, None], head), axis=0)
        else:
            base = np.zeros(code.n, dtype=np.int64)
        yield field.add(block, np.asarray(base)[None, :])


def min_distance(code: LinearCode, cap: int | None = None) -> int:
    """Exact minimum distance by enumerating all q^k messages."""
    cap = enum_cap() if cap is None else cap
    if code.field.q ** code.k > cap:
        raise EnumerationTooLarge(f"q^k = {code.field.q}^{code.k} exceeds cap {cap}")
    best = code.n
    for words in _codewords_chunks(code):
        w = np.count_nonzero(words, axis=1)
        w = w[w > 0]
        if w.size:
            best = min(best, int(w.min()))
    return best


def weight_distribution(code: LinearCode, cap: int | None = None) -> list[int]:
    cap = enum_cap() if cap is None else cap
    if code.field.q ** code.k > cap:
        raise EnumerationTooLarge(f"q^k = {code.field.q}^{code.k} exceeds cap {cap}")
    counts = np.zeros(code.n + 1, dtype=np.int64)
    for words in _codewords_chunks(code):
        counts += np.bincount(np.count_nonzero(words, axis=1), minlength=code.n + 1)
    return counts.tolist()


def min_distance_by_parity_check(code: LinearCode) -> int:
    """Exact minimum distance as the size of the smallest dependent set of
    parity-check columns.  Cheap when d is small, whatever q^k is."""
    if code.k == code.n:
        return 1
    H = kernel_basis(code.G).data
    for t in range(1, code.n - code.k + 2):
        for cols in itertools.combinations(range(code.n), t):
            if len(pivot_columns(code.field, H[:, cols])) < t:
                return t
    raise AssertionError("Singleton bound guarantees a dependent set")


# ---------------------------------------------------------------------------
# permutations and absolute state complexity


def _check_perm(perm: Sequence[int], n: int) -> list[int]:
    perm = [int(x) for x in perm]
    if sorted(perm) != list(range(n)):
        raise NotAPermutation(f"{perm} is not a permutation of 0..{n - 1}")
    return perm


def permute_coordinates(code: LinearCode, perm: Sequence[int]) -> LinearCode:
    """Column j of the result is column perm[j] of the input (0-based)."""
    perm = _check_perm(perm, code.n)
    return LinearCode(code.field, code.G.submatrix(perm))


@dataclass(frozen=True)
class SearchResult:
    best_s: int
    best_permutation: tuple[int, ...]
    evaluations: int
    strategy: str
    exhaustive: bool = False
    seed: int | None = None

    def to_dict(self) -> dict:
        return {
            "best_s": self.best_s,
            "best_permutation": [i + 1 for i in self.best_permutation],
            "evaluations": self.evaluations,
            "strategy": self.strategy,
            "exhaustive": self.exhaustive,
            "seed": self.seed,
        }


def _eval_chunk(args) -> list[int]:
    field, G, perms = args
    return [_s_max(field, G, perm) for perm in perms]


def evaluate_permutations(code: LinearCode, perms: Sequence[Sequence[int]], workers: int = 1) -> list[int]:
    """s(C') for each permuted code, in input order whatever ``workers`` is."""
    G = code.G.data
    perms = [list(p) for p in perms]
    if workers <= 1 or len(perms) < 2 * workers:
        return _eval_chunk((code.field, G, perms))
    size = math.ceil(len(perms) / workers)
    chunks = [(code.field, G, perms[i:i + size]) for i in range(0, len(perms), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        out: list[int] = []
        for part in pool.map(_eval_chunk, chunks):
            out.extend(part)
    return out


def _objective(field: Field, G: np.ndarray, perm: Sequence[int]) -> tuple[int, int]:
    p, f = _dims(field, G, perm)
    s = G.shape[0] - (p + f)
    return int(s.max()), int(s.sum())


def absolute_complexity_search(
    code: LinearCode,
    strategy: str = "random",
    budget: int = 1000,
    seed: int = 0,
    workers: int = 1,
) -> SearchResult:
    """Estimate s[C] = min over coordinate orders of s(C').

    ``exhaustive`` tries all n! orders (n <= 8) and is exact; ``random``
    draws ``budget`` orders; ``greedy`` spends half the budget on random
    draws and the rest hill-climbing by adjacent transpositions from the best
    draw.  Random orders are drawn up front from ``seed``, so the result does
    not depend on ``workers``.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if budget <= 0:
        raise BudgetZero("search budget must be positive")
    n = code.n
    if strategy == "exhaustive":
        if n > EXHAUSTIVE_MAX_N:
            raise ExhaustiveTooLarge(f"exhaustive search needs n <= {EXHAUSTIVE_MAX_N}, got {n}")
        perms = list(itertools.permutations(range(n)))
        values = evaluate_permutations(code, perms, workers)
        best = int(np.argmin(values))
        return SearchResult(values[best], tuple(perms[best]), len(perms), strategy, True, None)

    rng = np.random.default_rng(seed)
    n_random = budget if strategy == "random" else max(1, budget // 2)
    perms = [tuple(int(x) for x in rng.permutation(n)) for _ in range(n_random)]
    values = evaluate_permutations(code, perms, workers)
    best = int(np.argmin(values))
    best_perm, best_s, used = list(perms[best]), values[best], n_random
    if strategy == "greedy":
        field, G = code.field, code.G.data
        current = _objective(field, G, best_perm)
        improved = True
        while improved and used < budget:
            improved = False
            for j in range(n - 1):
                if used >= budget:
                    break
                cand = best_perm.copy()
                cand[j], cand[j + 1] = cand[j + 1], cand[j]
                score = _objective(field, G, cand)
                used += 1
                if score < current:
                    best_perm, current, improved = cand, score, True
        best_s = min(best_s, current[0])
    return SearchResult(int(best_s), tuple(best_perm), used, strategy, False, seed)


# ---------------------------------------------------------------------------
# self-orthogonality


def is_self_orthogonal(code: LinearCode) -> bool:
    return mat_mul(code.G, code.G.T).is_zero()


def is_formally_self_orthogonal(code: LinearCode, x: Sequence[int]) -> bool:
    """True iff sum_i x_i g_i g'_i = 0 for every pair of generator rows."""
    x = np.asarray(x, dtype=np.int64)
    if x.shape != (code.n,):
        raise ValueError(f"weight vector must have length {code.n}")
    if np.any(x == 0):
        raise ZeroWeightEntry("weights must all be nonzero")
    field = code.field
    scaled = Matrix(field, field.mul(code.G.data, x[None, :]).reshape(code.k, code.n))
    return mat_mul(scaled, code.G.T).is_zero()


def find_fso_witness(code: LinearCode, cap: int = 1 << 20) -> tuple[int, ...] | None:
    """A nowhere-zero weight vector x certifying formal self-orthogonality.

    The condition is linear in x, so only the kernel of the pairwise-product
    system is searched; returns None when no witness exists.
    """
    field, G = code.field, code.G.data
    pairs = [field.mul(G[a], G[b]) for a in range(code.k) for b in range(a, code.k)]
    A = Matrix(field, np.array(pairs, dtype=np.int64).reshape(len(pairs), code.n))
    K = kernel_basis(A).data
    t = K.shape[0]
    if t == 0:
        return None
    if field.q ** t > cap:
        raise EnumerationTooLarge(f"witness search over q^{t} combinations exceeds cap {cap}")
    for coeffs in itertools.product(range(field.q), repeat=t):
        x = np.asarray(field.sum(field.mul(np.asarray(coeffs)[:, None], K), axis=0))
        if np.all(x != 0):
            return tuple(int(v) for v in x)
    return None


def fso_step_report(code: LinearCode, profile: StateProfile | None = None) -> list[int]:
    """Indices i in 1..n where both p and f change between i-1 and i."""
    prof = state_profile(code) if profile is None else profile
    return [
        i
        for i in range(1, prof.n + 1)
        if prof.p[i - 1] != prof.p[i] and prof.f[i - 1] != prof.f[i]
    ]
