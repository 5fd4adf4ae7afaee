"""One-point Hermitian codes and abstract AG-code parameter records.

The Hermitian curve y^q + y = x^(q+1) over GF(q^2) has genus q(q-1)/2,
q^3 affine rational points and one point Q at infinity whose Weierstrass
semigroup is <q, q+1>.  The code for G = mQ evaluates the monomials
x^a y^b (b < q, aq + b(q+1) <= m) at the affine points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from agtrellis.codes import LinearCode
from agtrellis.errors import AbundantRegime, HypothesisViolated, UnsupportedQ
from agtrellis.field import Field, get_field
from agtrellis.gonality import GonalitySequence, gs_plane_curve
from agtrellis.matrix import Matrix

SUPPORTED_Q = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1)}


def hermitian_field(q: int) -> Field:
    if q not in SUPPORTED_Q:
        raise UnsupportedQ(f"q must be one of {sorted(SUPPORTED_Q)}, got {q}")
    p, e = SUPPORTED_Q[q]
    return get_field(p, 2 * e)


def hermitian_points(q: int) -> list[tuple[int, int]]:
    """Affine points (x, y) in lexicographic order of element indices."""
    F = hermitian_field(q)
    elems = np.arange(F.q)
    lhs = F.add(F.pow(elems, q), elems)
    rhs = F.pow(elems, q + 1)
    return [(int(x), int(y)) for x in elems for y in elems if lhs[y] == rhs[x]]


def monomial_exponents(q: int, m: int) -> list[tuple[int, int]]:
    """Pairs (a, b) with 0 <= b <= q-1 and aq + b(q+1) <= m, ordered by pole order."""
    out = []
    for b in range(q):
        a = 0
        while a * q + b * (q + 1) <= m:
            out.append((a, b))
            a += 1
    return sorted(out, key=lambda ab: (ab[0] * q + ab[1] * (q + 1), ab))


def riemann_roch_dim_one_point(q: int, m: int) -> int:
    """ell(mQ) = #(<q, q+1> intersected with [0, m])."""
    if m < 0:
        return 0
    return len(monomial_exponents(q, m))


@dataclass(frozen=True)
class AGParams:
    n: int
    m: int
    g: int
    gs: GonalitySequence
    k: int
    abundance: int = 0

    @property
    def two_k_le_n(self) -> bool:
        return 2 * self.k <= self.n

    @property
    def ell_G(self) -> int:
        return self.k + self.abundance


@dataclass(frozen=True)
class HermitianParams:
    q: int
    field: Field
    m: int
    n: int
    g: int
    points: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class HermitianCode:
    code: LinearCode
    params: HermitianParams
    ag: AGParams
    monomials: tuple[tuple[int, int], ...]
    evaluation: Matrix

    @property
    def goppa_floor(self) -> int:
        """Designed distance n - m."""
        return self.params.n - self.params.m


def hermitian_code(q: int, m: int) -> HermitianCode:
    F = hermitian_field(q)
    n, g = q**3, q * (q - 1) // 2
    if m < 0:
        raise HypothesisViolated("m must be non-negative")
    if m >= n:
        raise AbundantRegime(f"m = {m} >= n = {n}: evaluation map has a kernel")
    pts = hermitian_points(q)
    xs = np.array([x for x, _ in pts], dtype=np.int64)
    ys = np.array([y for _, y in pts], dtype=np.int64)
    mons = monomial_exponents(q, m)
    rows = [F.mul(F.pow(xs, a), F.pow(ys, b)) for a, b in mons]
    ev = Matrix(F, np.array(rows, dtype=np.int64).reshape(len(rows), n))
    code = LinearCode(F, ev)
    if code.k != len(mons):
        raise AssertionError(f"evaluation map not injective: rank {code.k} < {len(mons)}")
    params = HermitianParams(q, F, m, n, g, tuple(pts))
    ag = AGParams(n=n, m=m, g=g, gs=gs_plane_curve(q), k=code.k, abundance=0)
    return HermitianCode(code, params, ag, tuple(mons), ev)


def ag_params_abstract(n: int, m: int, gs: GonalitySequence, k: int | None = None) -> AGParams:
    """Parameters of a non-abundant AG code C(X, D, mP) with deg D = n.

    k is m + 1 - g when 2g - 2 < m < n; outside that range Riemann-Roch only
    bounds it and the caller must supply k.
    """
    g = gs.g
    if n <= 2 * g:
        raise HypothesisViolated(f"need n > 2g, got n = {n}, g = {g}")
    if not 0 <= m < n:
        raise HypothesisViolated(f"need 0 <= m < n, got m = {m}")
    if m > 2 * g - 2:
        exact = m + 1 - g
        if k is not None and k != exact:
            raise HypothesisViolated(f"k = {k} contradicts Riemann-Roch value {exact}")
        k = exact
    elif k is None:
        raise HypothesisViolated(f"m = {m} <= 2g-2 = {2 * g - 2}: supply k explicitly")
    elif not 1 <= k <= min(n, m + 1):
        raise HypothesisViolated(f"k = {k} impossible for m = {m}")
    return AGParams(n=n, m=m, g=g, gs=gs, k=k, abundance=0)
