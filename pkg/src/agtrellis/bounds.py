"""Upper and lower bounds on the (absolute) state complexity of AG codes.

Every bound is a total function of a few integers plus, where needed, the
gonality sequence of the curve, so bounds can be queried for curves whose
codes are never built.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import NamedTuple

from agtrellis.codes import (
    LinearCode,
    absolute_complexity_search,
    is_self_orthogonal,
    state_profile,
)
from agtrellis.errors import HypothesisViolated
from agtrellis.gonality import GonalitySequence, split_min_bruteforce
from agtrellis.hermitian import AGParams


def wolf_bound(n: int, k: int) -> int:
    if not 1 <= k <= n:
        raise HypothesisViolated(f"need 1 <= k <= n, got k = {k}, n = {n}")
    return min(k, n - k)


def equality_region(n: int, m: int, g: int) -> bool:
    """True when deg G is far enough from n/2 that s(C) = w(C)."""
    return m < n // 2 or m > -(-n // 2) + 2 * g - 2


def middle_region(n: int, m: int, g: int) -> bool:
    return not equality_region(n, m, g)


def clifford_bound(n: int, g: int) -> int:
    return -(-n // 2) - g - 1


def goppa_like_bound(n: int, k: int, g: int, abundance: int = 0) -> int:
    return min(k, n - k) - (g - abundance)


def _check_gonality_hypotheses(n: int, k: int, g: int) -> None:
    if 2 * k > n:
        raise HypothesisViolated(f"need 2k <= n, got k = {k}, n = {n}")
    if n <= 2 * g:
        raise HypothesisViolated(f"need n > 2g, got n = {n}, g = {g}")


class GonalityBound(NamedTuple):
    value: int
    chained: int
    argument: int
    equality_region: bool


def gonality_bound(gs: GonalitySequence, n: int, m: int, k: int) -> GonalityBound:
    """s[C] >= w - split_min(2m - n), together with the weaker w - split_min(2g - 2).

    When 2m - n < -1 the designed distance already forces 2d >= n + 2, so
    s[C] = w and ``value`` is w itself.
    """
    _check_gonality_hypotheses(n, k, gs.g)
    w = wolf_bound(n, k)
    N = 2 * m - n
    top = split_min_bruteforce(gs, 2 * gs.g - 2)[0]
    if N < -1:
        return GonalityBound(w, w - top, N, True)
    if N > 2 * gs.g - 2:
        raise HypothesisViolated(f"2m - n = {N} exceeds 2g - 2 = {2 * gs.g - 2}")
    return GonalityBound(w - split_min_bruteforce(gs, N)[0], w - top, N, False)


def gamma2_bound(n: int, k: int, g: int, gamma2: int) -> int:
    _check_gonality_hypotheses(n, k, g)
    return min(k, n - k) - g + gamma2 - 2


def fso_delta_bound(n: int, k: int, d: int) -> int:
    """Lower bound k - floor((n - 2d + 2)/2) on s[C] for a formally
    self-orthogonal [n, k, d] code with 2d <= n + 1."""
    if 2 * d > n + 1:
        raise HypothesisViolated(f"need 2d <= n + 1, got d = {d}, n = {n}")
    return k - (n - 2 * d + 2) // 2


@dataclass(frozen=True)
class Applicability:
    applicable: bool
    reason: str


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    m: int
    g: int
    gamma2: int
    w: int
    equality_region: bool
    clifford: int
    goppa_like: int
    gonality: int | None
    gonality_chained: int | None
    gamma2_lb: int | None
    fso_bound: int | None = None
    distance: int | None = None
    exact_s: int | None = None
    searched_s: int | None = None
    search: dict | None = None
    applicability: dict[str, Applicability] = field(default_factory=dict)

    LOWER = ("clifford", "goppa_like", "gonality", "gamma2_lb", "fso_bound")

    def applicable_lower_bounds(self) -> dict[str, int]:
        return {
            name: getattr(self, name)
            for name in self.LOWER
            if self.applicability.get(name, Applicability(False, "")).applicable
            and getattr(self, name) is not None
        }

    def violations(self) -> list[str]:
        """Broken report invariants; empty for every sound report."""
        out = []
        for name, v in self.applicable_lower_bounds().items():
            if v > self.w:
                out.append(f"{name} = {v} exceeds w = {self.w}")
            if self.exact_s is not None and v > self.exact_s:
                out.append(f"{name} = {v} exceeds exact s = {self.exact_s}")
            # the clifford bound is only claimed for the given coordinate order
            if self.searched_s is not None and name != "clifford" and v > self.searched_s:
                out.append(f"{name} = {v} exceeds searched s = {self.searched_s}")
        if self.exact_s is not None:
            if self.exact_s > self.w:
                out.append(f"exact s = {self.exact_s} exceeds w = {self.w}")
            if self.equality_region and self.exact_s != self.w:
                out.append(f"equality region but exact s = {self.exact_s} != w = {self.w}")
        return out

    def to_dict(self) -> dict:
        d = asdict(self)
        d["applicability"] = {k: asdict(v) for k, v in sorted(self.applicability.items())}
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        rows = [
            ("n", self.n), ("k", self.k), ("m", self.m), ("g", self.g),
            ("gamma2", self.gamma2), ("w (Wolf)", self.w),
            ("equality region", self.equality_region),
        ]
        for name in ("clifford", "goppa_like", "gonality", "gonality_chained", "gamma2_lb", "fso_bound"):
            val = getattr(self, name)
            a = self.applicability.get(name)
            note = "" if a is None else ("" if a.applicable else "[n/a] ") + a.reason
            rows.append((name, f"{val if val is not None else '-'}  {note}".rstrip()))
        for name in ("distance", "exact_s", "searched_s"):
            val = getattr(self, name)
            if val is not None:
                rows.append((name, val))
        width = max(len(r[0]) for r in rows)
        return "\n".join(f"{name:<{width}}  {val}" for name, val in rows)


def bound_report(
    params: AGParams,
    code: LinearCode | None = None,
    *,
    exact: bool = True,
    distance: int | None = None,
    formally_self_orthogonal: bool | None = None,
    search_budget: int = 0,
    search_strategy: str = "random",
    seed: int = 0,
    workers: int = 1,
) -> BoundReport:
    """Evaluate every bound for ``params``; with a concrete ``code`` also the
    exact s(C) and, if ``search_budget`` > 0, a searched upper bound on s[C]."""
    n, k, m, g = params.n, params.k, params.m, params.g
    gs = params.gs
    w = wolf_bound(n, k)
    app: dict[str, Applicability] = {}
    eq = equality_region(n, m, g)

    app["clifford"] = Applicability(
        not eq, "middle region only" if not eq else "outside middle region (s = w there)"
    )
    app["goppa_like"] = Applicability(True, f"abundance {params.abundance}")

    gon_ok = 2 * k <= n and n > 2 * g
    reason = "2k <= n and n > 2g" if gon_ok else "needs 2k <= n and n > 2g"
    gonality = gon_chained = gamma2_lb = None
    if gon_ok:
        b = gonality_bound(gs, n, m, k)
        gonality, gon_chained = b.value, b.chained
        gamma2_lb = gamma2_bound(n, k, g, gs.gamma2)
        if b.equality_region:
            reason += "; 2m - n < -1 so s[C] = w"
    app["gonality"] = Applicability(gon_ok, reason)
    app["gonality_chained"] = Applicability(gon_ok, reason)
    app["gamma2_lb"] = Applicability(gon_ok, reason)

    exact_s = searched_s = None
    search = None
    fso = None
    if code is not None:
        if (code.n, code.k) != (n, k):
            raise HypothesisViolated(f"code is [{code.n}, {code.k}] but params say [{n}, {k}]")
        if exact:
            exact_s = state_profile(code).s_max
        if search_budget > 0:
            res = absolute_complexity_search(code, search_strategy, search_budget, seed, workers)
            searched_s, search = res.best_s, res.to_dict()
        if formally_self_orthogonal is None:
            formally_self_orthogonal = is_self_orthogonal(code)
    if distance is not None and formally_self_orthogonal:
        if 2 * distance <= n + 1:
            fso = fso_delta_bound(n, k, distance)
            app["fso_bound"] = Applicability(True, "formally self-orthogonal, 2d <= n + 1")
        else:
            app["fso_bound"] = Applicability(False, "2d > n + 1 (s[C] = k already)")
    else:
        why = "minimum distance unknown" if distance is None else "not known formally self-orthogonal"
        app["fso_bound"] = Applicability(False, why)

    report = BoundReport(
        n=n, k=k, m=m, g=g, gamma2=gs.gamma2, w=w, equality_region=eq,
        clifford=clifford_bound(n, g), goppa_like=goppa_like_bound(n, k, g, params.abundance),
        gonality=gonality, gonality_chained=gon_chained, gamma2_lb=gamma2_lb, fso_bound=fso, distance=distance,
        exact_s=exact_s, searched_s=searched_s, search=search, applicability=app,
    )
    bad = report.violations()
    if bad:
        raise AssertionError("bound report invariant broken: " + "; ".join(bad))
    return report
