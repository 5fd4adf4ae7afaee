from __future__ import annotations

import pytest

from agtrellis import gonality as gon
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
from agtrellis.verify import KNOWN_JUMPS_R7, all_valid_sequences
from oracles import split_min_direct


def semigroup_oracle(r: int, upto: int) -> list[int]:
    return sorted({a * r + b * (r + 1) for a in range(upto + 1) for b in range(upto + 1)
                   if a * r + b * (r + 1) <= upto})


@pytest.mark.parametrize("r", range(2, 11))
def test_plane_sequence_is_semigroup_prefix(r):
    gs = gon.gs_plane_curve(r)
    g = r * (r - 1) // 2
    assert gs.g == g
    assert list(gs.gammas) == semigroup_oracle(r, 2 * g)[:g]


@pytest.mark.parametrize("gs", [gon.gs_plane_curve(r) for r in range(2, 10)]
                         + [gon.gs_hyperelliptic(g) for g in (2, 3, 5, 9)],
                         ids=lambda gs: f"{gs.tag}-g{gs.g}")
def test_split_min_matches_direct_oracle(gs):
    T = gon.split_min_table(gs)
    for N in range(-1, 2 * gs.g - 1):
        assert T(N) == split_min_direct(list(gs.gammas), gs.g, N)
        a, b = T.witnesses[N]
        assert a + b == N and gon.gonality_count(gs, a) + gon.gonality_count(gs, b) == T(N)


def test_all_small_explicit_sequences_against_oracle():
    for g in range(1, 7):
        for gs in all_valid_sequences(g):
            for N in range(-1, 2 * g - 1):
                assert gon.split_min_restricted(gs, N) == split_min_direct(list(gs.gammas), g, N)
            assert gon.split_min_top(gs) == split_min_direct(list(gs.gammas), g, 2 * g - 2)


def test_r3_table():
    T = gon.split_min_table(gon.gs_plane_curve(3))
    assert [T(N) for N in range(-1, 5)] == [1, 1, 1, 2, 2, 2]
    assert T.witnesses[4] == (2, 2)
    assert gon.gs_plane_curve(3).gaps == (-1, 1, 2, 5)


def test_r7_values_and_jumps():
    gs = gon.gs_plane_curve(7)
    T = gon.split_min_table(gs)
    assert T.jumps == KNOWN_JUMPS_R7
    assert T.top == 12 == gon.jump_count_plane(7)
    assert T(20) == 5 and T(14) == 4
    assert gon.split_min_top_literal(gs) == 10
    assert gon.split_min_plane_rows_offbyone(7, 14) == 3
    assert gon.split_min_plane_rows(7, 14) == 4


def test_r4_jumps():
    assert gon.split_min_table(gon.gs_plane_curve(4)).jumps == (-1, 3, 7, 8)


def test_hyperelliptic_g5():
    T = gon.split_min_table(gon.gs_hyperelliptic(5))
    assert all(v == (N + 1) // 2 + 1 for N, v in T.values.items())
    assert gon.hyperelliptic_certified(gon.gs_hyperelliptic(5))
    assert not gon.hyperelliptic_certified(gon.gs_plane_curve(4))


@pytest.mark.parametrize("g,gammas,exc", [
    (3, (0, 2, 5), BoundsViolated),
    (2, (0, 4), BoundsViolated),
    (3, (0, 3, 3), NotIncreasing),
    (4, (0, 2, 5, 6), SymmetryViolated),
    (3, (0, 2), BoundsViolated),
])
def test_invalid_sequences(g, gammas, exc):
    with pytest.raises(exc):
        gon.gs_explicit(g, gammas)


def test_domain_errors():
    gs = gon.gs_plane_curve(4)
    with pytest.raises(DegreeTooSmall):
        gon.gs_plane_curve(1)
    with pytest.raises(GenusTooSmall):
        gon.gs_explicit(0, ())
    with pytest.raises(BelowDomain):
        gon.gonality_count(gs, -2)
    with pytest.raises(OutOfDomain):
        gon.split_min_bruteforce(gs, 2 * gs.g - 1)
    with pytest.raises(OutOfDomain):
        gon.split_min_table(gs)(-2)


def test_gonality_count_tail():
    gs = gon.gs_plane_curve(5)
    g = gs.g
    assert gon.gonality_count(gs, 2 * g - 2) == g
    assert gon.gonality_count(gs, 2 * g - 1) == g
    assert gon.gonality_count(gs, 2 * g + 3) == g + 4


def test_record_round_trip():
    for gs in (gon.gs_plane_curve(6), gon.gs_hyperelliptic(4), gon.gs_explicit(3, (0, 3, 4))):
        assert gon.gs_from_record(gs.to_record()) == gs


def test_cross_check_raises_on_mismatch(monkeypatch):
    monkeypatch.setattr(gon, "split_min_top", lambda gs: -1)
    with pytest.raises(OracleMismatch):
        gon.split_min_table(gon.gs_plane_curve(4))
