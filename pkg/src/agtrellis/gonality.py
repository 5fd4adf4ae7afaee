"""Gonality sequences and the numerical functions built on them.

A gonality sequence is held by its genus g and first g terms; every later
term follows the affine tail gamma_i = g + i - 1.  The argument domain
{-1, 0, 1, ...} is plain integers with -1 admitted.

The definitions used throughout::

    gonality_count(-1) = 0,   gonality_count(a) = #{i : gamma_i <= a}
    split_min(N) = min{gonality_count(a) + gonality_count(N - a) : a, N - a >= -1},  -1 <= N <= 2g-2

Brute-force minimisation of split_min is the ground truth; every shortcut here is
checked against it when an :class:`SplitMinTable` is built.
"""

from __future__ import annotations

import bisect
from collections.abc import Sequence
from dataclasses import dataclass, field

from agtrellis.errors import (
    BelowDomain,
    BoundsViolated,
    DegreeTooSmall,
    GenusTooSmall,
    NotIncreasing,
    OracleMismatch,
    OutOfDomain,
    SymmetryViolated,
)


@dataclass(frozen=True)
class GonalitySequence:
    g: int
    gammas: tuple[int, ...]
    origin: str = "explicit"
    # plane curves of degree r + 1 carry r for the closed forms
    r: int | None = None
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.gammas))

    @property
    def gaps(self) -> tuple[int, ...]:
        """The g + 1 non-members of GS in {-1, 0, ..., 2g - 1}."""
        return (-1,) + tuple(a for a in range(2 * self.g) if a not in self._members)

    @property
    def gamma2(self) -> int:
        return self.gamma(2)

    @property
    def tag(self) -> str:
        if self.origin == "plane":
            return f"plane({self.r})"
        return self.origin

    def gamma(self, i: int) -> int:
        if i < 1:
            raise ValueError("gonality numbers are indexed from 1")
        if i <= self.g:
            return self.gammas[i - 1]
        return self.g + i - 1

    def contains(self, a: int) -> bool:
        """Membership of a in GS, as a subset of {-1} and the naturals."""
        if a < 0:
            return False
        if a >= 2 * self.g:
            return True
        return a in self._members

    def gonality_count(self, a: int) -> int:
        return gonality_count(self, a)

    def to_record(self) -> dict:
        return {"genus": self.g, "origin": self.tag, "gammas": list(self.gammas)}


def _validate(g: int, gammas: Sequence[int]) -> None:
    if len(gammas) != g:
        raise BoundsViolated(f"expected {g} gonality numbers, got {len(gammas)}")
    for i in range(1, g):
        if gammas[i] <= gammas[i - 1]:
            raise NotIncreasing(f"gamma_{i + 1} = {gammas[i]} <= gamma_{i} = {gammas[i - 1]}")
    if gammas[0] != 0:
        raise BoundsViolated(f"gamma_1 must be 0, got {gammas[0]}")
    for i in range(2, g + 1):
        gi = gammas[i - 1]
        if not 2 * i - 2 <= gi <= g + i - 2:
            raise BoundsViolated(f"gamma_{i} = {gi} outside [{2 * i - 2}, {g + i - 2}]")
    if gammas[-1] != 2 * g - 2:
        raise BoundsViolated(f"gamma_g must equal 2g-2 = {2 * g - 2}, got {gammas[-1]}")
    members = set(gammas)
    for a in range(g):
        b = 2 * g - 1 - a
        if (a in members) == (b in members):
            state = "both in" if a in members else "both outside"
            raise SymmetryViolated(f"{a} and {b} are {state} GS; exactly one must belong")


def gs_explicit(g: int, gammas: Sequence[int], origin: str = "explicit", r: int | None = None) -> GonalitySequence:
    """Validate and wrap (gamma_1, ..., gamma_g)."""
    if g < 1:
        raise GenusTooSmall("genus must be at least 1")
    gammas = tuple(int(x) for x in gammas)
    _validate(g, gammas)
    return GonalitySequence(g, gammas, origin, r)


def semigroup_elements(generators: Sequence[int], upto: int) -> list[int]:
    """Elements of the numerical semigroup spanned by ``generators`` in [0, upto]."""
    reach = [False] * (upto + 1)
    reach[0] = True
    for a in range(1, upto + 1):
        reach[a] = any(a >= s and reach[a - s] for s in generators)
    return [a for a in range(upto + 1) if reach[a]]


def gs_plane_curve(r: int) -> GonalitySequence:
    """Nonsingular plane curve of degree r + 1: GS is the semigroup <r, r+1>."""
    if r < 2:
        raise DegreeTooSmall("plane curves need r >= 2")
    g = r * (r - 1) // 2
    gammas = semigroup_elements((r, r + 1), 2 * g)[:g]
    return gs_explicit(g, gammas, "plane", r)


def gs_hyperelliptic(g: int) -> GonalitySequence:
    if g < 2:
        raise GenusTooSmall("hyperelliptic curves have genus >= 2")
    return gs_explicit(g, [2 * i for i in range(g)], "hyperelliptic")


def gs_from_record(record: dict) -> GonalitySequence:
    origin = str(record.get("origin", "explicit"))
    g = int(record["genus"])
    gammas = [int(x) for x in record["gammas"]]
    r = None
    if origin.startswith("plane(") and origin.endswith(")"):
        r = int(origin[6:-1])
        origin = "plane"
    return gs_explicit(g, gammas, origin, r)


def hyperelliptic_certified(gs: GonalitySequence) -> bool:
    """True iff gamma_i = 2i - 2 for some 2 <= i <= g - 1."""
    return any(gs.gamma(i) == 2 * i - 2 for i in range(2, gs.g))


# ---------------------------------------------------------------------------
# gonality_count and R


def gonality_count(gs: GonalitySequence, a: int) -> int:
    if a < -1:
        raise BelowDomain(f"gonality_count is defined for a >= -1, got {a}")
    if a == -1:
        return 0
    if a >= 2 * gs.g - 1:
        return gs.g + a - (2 * gs.g - 1)
    return bisect.bisect_right(gs.gammas, a)


def gonality_count_plane(r: int, a: int) -> int:
    """Closed form for <r, r+1> with a = alpha r + beta, 0 <= a <= r(r-1)."""
    if a == -1:
        return 0
    alpha, beta = divmod(a, r)
    return alpha * (alpha + 1) // 2 + min(alpha, beta) + 1


def _check_domain(gs: GonalitySequence, N: int) -> None:
    if not -1 <= N <= 2 * gs.g - 2:
        raise OutOfDomain(f"split_min is defined on [-1, {2 * gs.g - 2}], got {N}")


def split_min_bruteforce(gs: GonalitySequence, N: int) -> tuple[int, tuple[int, int]]:
    """split_min(N) by exhausting every split a + b = N; witness is the least minimising a."""
    _check_domain(gs, N)
    best = None
    for a in range(-1, N + 2):
        v = gonality_count(gs, a) + gonality_count(gs, N - a)
        if best is None or v < best[0]:
            best = (v, (a, N - a))
    return best


def normalized_witness(gs: GonalitySequence, N: int) -> tuple[int, int] | None:
    """A minimising split whose first part is a gap a <= N/2, if one exists."""
    value, _ = split_min_bruteforce(gs, N)
    for a in range(-1, N // 2 + 1):
        if not gs.contains(a) and gonality_count(gs, a) + gonality_count(gs, N - a) == value:
            return (a, N - a)
    return None


def restricted_candidates(gs: GonalitySequence, N: int) -> list[int]:
    """floor(N/2) together with gaps a <= N/2 whose successor lies in GS."""
    half = N // 2
    cands = {half}
    for a in range(-1, half + 1):
        if not gs.contains(a) and gs.contains(a + 1):
            cands.add(a)
    return sorted(cands)


def split_min_restricted(gs: GonalitySequence, N: int) -> int:
    _check_domain(gs, N)
    return min(gonality_count(gs, a) + gonality_count(gs, N - a) for a in restricted_candidates(gs, N))


def max_gamma_excess(gs: GonalitySequence) -> int:
    """max over i = 1..g of gamma_i - (2i - 2)."""
    return max(gs.gamma(i) - (2 * i - 2) for i in range(1, gs.g + 1))


def split_min_top(gs: GonalitySequence) -> int:
    """split_min(2g-2) = min{2 gonality_count(g-1), g - max_i(gamma_i - (2i-2))}.

    The first term is the balanced split a = b = g - 1.
    """
    return min(2 * gonality_count(gs, gs.g - 1), gs.g - max_gamma_excess(gs))


def split_min_top_literal(gs: GonalitySequence) -> int:
    """Same expression with 2 split_min(g-1) as the first term, for diagnostics only."""
    return min(2 * split_min_bruteforce(gs, gs.g - 1)[0], gs.g - max_gamma_excess(gs))


# ---------------------------------------------------------------------------
# plane curves


def jumps_plane(r: int) -> list[int]:
    """Jump set of a plane curve of degree r + 1, from its lattice description.

    {alpha r + beta : -1 <= alpha <= r-1, 0 <= beta <= r-1, 2 beta + 2 <= alpha
    or beta = r - 1}, minus 2g - 1, cut to [-1, 2g - 2].
    """
    if r < 2:
        raise DegreeTooSmall("plane curves need r >= 2")
    g = r * (r - 1) // 2
    out = set()
    for alpha in range(-1, r):
        for beta in range(r):
            if 2 * beta + 2 <= alpha or beta == r - 1:
                N = alpha * r + beta
                if N != 2 * g - 1 and -1 <= N <= 2 * g - 2:
                    out.add(N)
    return sorted(out)


def jump_count_plane(r: int) -> int:
    return r * r // 4 if r % 2 == 0 else (r * r - 1) // 4


def split_min_plane(r: int, N: int) -> int:
    """split_min(N) for a plane curve as the number of jumps not exceeding N."""
    g = r * (r - 1) // 2
    if not -1 <= N <= 2 * g - 2:
        raise OutOfDomain(f"split_min is defined on [-1, {2 * g - 2}], got {N}")
    return bisect.bisect_right(jumps_plane(r), N)


def split_min_plane_balanced(r: int, N: int, gs: GonalitySequence | None = None) -> int | None:
    """Split-at-a-multiple-of-r expression for split_min(N); None unless N >= 0 and
    floor(N/2) >= r."""
    gs = gs_plane_curve(r) if gs is None else gs
    if N < 0:
        return None
    half = N // 2
    alpha = half // r
    if alpha < 1:
        return None
    shifted = gonality_count(gs, alpha * r - 1) + gonality_count(gs, N - alpha * r + 1)
    if gs.contains(half):
        return shifted
    return min(gonality_count(gs, half) + gonality_count(gs, N - half), shifted)


def _row_col(r: int, N: int) -> tuple[int, int]:
    # N = alpha r + beta with -1 <= beta <= r - 2
    alpha, rest = divmod(N + 1, r)
    return alpha, rest - 1


def split_min_plane_rows_offbyone(r: int, N: int) -> int | None:
    """Row-counting formula with constant +1, one less than the jump count.

    Kept for diagnostics only; None when N is outside the lower-left region
    beta <= floor(alpha/2) - 1 where the formula is stated.
    """
    alpha, beta = _row_col(r, N)
    if beta > alpha // 2 - 1:
        return None
    if alpha % 2 == 0:
        return alpha * (alpha + 2) // 4 + beta + 1
    return (alpha + 1) ** 2 // 4 + beta + 1


def split_min_plane_rows(r: int, N: int) -> int:
    """Row-counting closed form with the constant that matches jump counts.

    In the array with rows alpha and columns beta in -1..r-2, row j holds
    floor(j/2) + 1 jumps in its leftmost columns; beyond them split_min is constant
    along the row.
    """
    alpha, beta = _row_col(r, N)
    beta = min(beta, alpha // 2 - 1)
    full_rows = alpha * (alpha + 2) // 4 if alpha % 2 == 0 else (alpha + 1) ** 2 // 4
    return full_rows + beta + 2


# ---------------------------------------------------------------------------
# tables


@dataclass(frozen=True)
class SplitMinTable:
    gs: GonalitySequence
    values: dict[int, int]
    witnesses: dict[int, tuple[int, int]]
    jumps: tuple[int, ...]

    @property
    def top(self) -> int:
        return self.values[2 * self.gs.g - 2]

    def __call__(self, N: int) -> int:
        _check_domain(self.gs, N)
        return self.values[N]

    def to_rows(self) -> list[dict]:
        js = set(self.jumps)
        return [
            {"N": N, "split_min": v, "a": self.witnesses[N][0], "b": self.witnesses[N][1], "jump": N in js}
            for N, v in sorted(self.values.items())
        ]


def split_min_table(gs: GonalitySequence, check: bool = True) -> SplitMinTable:
    """split_min over its whole domain with witnesses and the jump set.

    With ``check`` every closed form that applies to ``gs`` is compared to
    the brute-force value and :class:`OracleMismatch` is raised on any
    disagreement.
    """
    values: dict[int, int] = {}
    witnesses: dict[int, tuple[int, int]] = {}
    for N in range(-1, 2 * gs.g - 1):
        values[N], witnesses[N] = split_min_bruteforce(gs, N)
    jumps = tuple(N for N in values if N == -1 or values[N] > values[N - 1])
    if check:
        _cross_check(gs, values, jumps)
    return SplitMinTable(gs, values, witnesses, jumps)


def _cross_check(gs: GonalitySequence, values: dict[int, int], jumps: tuple[int, ...]) -> None:
    def expect(name: str, got, want) -> None:
        if got != want:
            raise OracleMismatch(f"{gs.tag}: {name} gave {got}, brute force {want}")

    for N, v in values.items():
        expect(f"restricted split_min({N})", split_min_restricted(gs, N), v)
    top = values[2 * gs.g - 2]
    expect("split_min(2g-2) formula", split_min_top(gs), top)
    expect("jump count", len(jumps), top)
    if gs.origin == "hyperelliptic":
        for N, v in values.items():
            expect(f"hyperelliptic split_min({N})", (N + 1) // 2 + 1, v)
    if gs.origin == "plane" and gs.r is not None:
        r = gs.r
        expect("plane jump set", tuple(jumps_plane(r)), jumps)
        for N, v in values.items():
            expect(f"jump-count split_min({N})", split_min_plane(r, N), v)
            expect(f"row-count split_min({N})", split_min_plane_rows(r, N), v)
            bal = split_min_plane_balanced(r, N, gs)
            if bal is not None:
                expect(f"balanced-split split_min({N})", bal, v)
