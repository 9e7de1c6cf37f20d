"""Guruswami-Sudan list decoding of generalized Reed-Solomon codes.

Pipeline: divide out the column multipliers, interpolate a bivariate Q with
multiplicity s at every (alpha_i, r_i), collect the y-roots of Q of degree < k
by Roth-Ruckenstein, and keep the ones whose codeword is within tau.
"""

from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass, field as dc_field
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .algebra import BiPoly, Field, Poly, univariate_roots
from .algebra.poly import multipoint_eval
from .errors import InfeasibleRadius, SpecError

S_MAX = 64

# callables run as hook(Q, points, params) after every interpolation; the test
# suite installs a contract checker here
INTERPOLATION_HOOKS: list = []


def _as_symbols(F: Field, values, what: str) -> tuple[int, ...]:
    try:
        return tuple(F.coerce(v) for v in values)
    except (TypeError, ValueError) as exc:
        raise SpecError(f"{what}: {exc}") from None


def hamming(a, b) -> int:
    return int(np.count_nonzero(np.asarray(a, dtype=np.int64) != np.asarray(b, dtype=np.int64)))


@dataclass(frozen=True)
class GrsSpec:
    field: Field
    alphas: tuple[int, ...]
    vs: tuple[int, ...]
    k: int

    def __post_init__(self):
        F = self.field
        object.__setattr__(self, "alphas", _as_symbols(F, self.alphas, "alphas"))
        object.__setattr__(self, "vs", _as_symbols(F, self.vs, "vs"))
        n = len(self.alphas)
        if len(self.vs) != n:
            raise SpecError(f"{len(self.vs)} column multipliers for {n} evaluation points")
        if len(set(self.alphas)) != n:
            raise SpecError("evaluation points must be pairwise distinct")
        if any(v == 0 for v in self.vs):
            raise SpecError("column multipliers must be nonzero")
        if not 1 <= self.k <= n:
            raise SpecError(f"dimension k={self.k} outside 1..n={n}")
        if n > F.q:
            raise SpecError(f"length {n} exceeds field size {F.q}")

    @property
    def n(self) -> int:
        return len(self.alphas)

    def encode(self, coeffs) -> np.ndarray:
        return grs_encode(self, coeffs)

    def encode_poly(self, f: Poly) -> np.ndarray:
        F = self.field
        values = multipoint_eval(f, np.asarray(self.alphas, dtype=np.int64))
        return F.vmul(values, np.asarray(self.vs, dtype=np.int64))


def grs_encode(spec: GrsSpec, coeffs: Sequence[int]) -> np.ndarray:
    """(v_1 f(alpha_1), ..., v_n f(alpha_n)) for f = sum coeffs[i] x^i."""
    if len(coeffs) != spec.k:
        raise SpecError(f"message has {len(coeffs)} symbols, expected k={spec.k}")
    return spec.encode_poly(Poly(spec.field, coeffs))


# -- parameters --------------------------------------------------------------


def radius_ok(n: int, k: int, tau: int) -> bool:
    """tau < n - sqrt(n k), in exact integer arithmetic; tau = 0 always passes."""
    return tau == 0 or (0 <= tau < n and (n - tau) ** 2 > n * k)


def _lattice_count(D: int, w: int) -> int:
    # pairs (i, j >= 0) with i + w j < D, for w >= 1
    return sum(D - w * j for j in range((D - 1) // w + 1)) if D > 0 else 0


def _multiplicity_or_none(n: int, k: int, tau: int, s_max: int) -> int | None:
    if not radius_ok(n, k, tau):
        return None
    for s in range(1, s_max + 1):
        need = n * s * (s + 1) // 2
        D = s * (n - tau)
        if k == 1 or _lattice_count(D, k - 1) > need:
            return s
    return None


def max_feasible_tau(n: int, k: int, s_max: int = S_MAX) -> int | None:
    for tau in range(n - 1, -1, -1):
        if _multiplicity_or_none(n, k, tau, s_max) is not None:
            return tau
    return None


def select_multiplicity(n: int, k: int, tau: int, s_max: int = S_MAX) -> int:
    """Smallest s whose monomial budget exceeds the n*s(s+1)/2 constraints.

    Radii at or beyond n - sqrt(n k) are rejected outright, even where exact
    lattice counting with the (1, k-1) weight would admit them.
    """
    if not 1 <= k <= n:
        raise SpecError(f"need 1 <= k <= n, got k={k}, n={n}")
    s = _multiplicity_or_none(n, k, tau, s_max)
    if s is None:
        reason = "tau >= n - sqrt(nk)" if not radius_ok(n, k, tau) else f"no s <= {s_max}"
        raise InfeasibleRadius(n, k, tau, max_feasible_tau(n, k, s_max), reason)
    return s


@dataclass(frozen=True)
class GsParams:
    n: int
    k: int
    tau: int
    s: int
    D: int
    monomials: tuple[tuple[int, int], ...]

    @property
    def weight(self) -> int:
        return self.k - 1

    @property
    def n_constraints(self) -> int:
        return self.n * self.s * (self.s + 1) // 2

    @property
    def list_bound(self) -> float:
        """s * sqrt(n/k), the list-size bound quoted for this multiplicity."""
        return self.s * math.sqrt(self.n / self.k)


@lru_cache(maxsize=256)
def gs_params(n: int, k: int, tau: int, s_max: int = S_MAX) -> GsParams:
    s = select_multiplicity(n, k, tau, s_max)
    D = s * (n - tau)
    w = k - 1
    if w >= 1:
        monos = [(i, j) for j in range((D - 1) // w + 1) for i in range(D - w * j)]
        monos.sort(key=lambda m: (m[0] + w * m[1], m[1]))
    else:
        # weight 0: cap the y-degree so that the count still exceeds the constraints
        L = (n * s * (s + 1) // 2) // D
        monos = [(i, j) for i in range(D) for j in range(L + 1)]
    return GsParams(n, k, tau, s, D, tuple(monos))


# -- interpolation -------------------------------------------------------------


def interpolate(points: Sequence[tuple[int, int]], params: GsParams, field: Field) -> BiPoly:
    """Nonzero Q with multiplicity >= s at every point and wdeg_{1,k-1} Q < D.

    Gauss-Jordan on the Hasse-derivative system; the first column without a
    pivot becomes the free variable set to one.  Any R+1 columns are dependent,
    so only the first R+1 monomials in the (weighted degree, y-degree) order
    are ever needed.
    """
    F = field
    n, s = params.n, params.s
    if len(points) != n:
        raise ValueError(f"expected {n} points, got {len(points)}")
    xs = np.array([F.coerce(a) for a, _ in points], dtype=np.int64)
    ys = np.array([F.coerce(b) for _, b in points], dtype=np.int64)
    if len(set(xs.tolist())) != n:
        raise ValueError("interpolation points need distinct x-coordinates")
    ncols = min(len(params.monomials), params.n_constraints + 1)
    monos = np.array(params.monomials[:ncols], dtype=np.int64)
    mono_i = np.ascontiguousarray(monos[:, 0])
    mono_j = np.ascontiguousarray(monos[:, 1])
    max_i, max_j = int(mono_i.max()), int(mono_j.max())
    xpow = _power_table(F, xs, max_i)
    ypow = _power_table(F, ys, max_j)
    binom = _binomials(max(max_i, max_j, s), F.p)
    M = kernels.interp_matrix(F, xpow, ypow, s, mono_i, mono_j, binom)
    vec = kernels.first_kernel_vector(F, M)
    if vec.size == 0:  # pragma: no cover - excluded by the column count
        raise RuntimeError("interpolation system has a trivial kernel")
    nz = np.flatnonzero(vec)
    return BiPoly(F, {(int(mono_i[c]), int(mono_j[c])): int(vec[c]) for c in nz})


@lru_cache(maxsize=64)
def _binomials(n: int, p: int) -> np.ndarray:
    out = kernels.binomials_mod(n, p)
    out.flags.writeable = False
    return out


def _power_table(F: Field, xs: np.ndarray, top: int) -> np.ndarray:
    out = np.ones((len(xs), top + 1), dtype=np.int64)
    for e in range(1, top + 1):
        out[:, e] = F.vmul(out[:, e - 1], xs)
    return out


def multiplicity_at(Q: BiPoly, a: int, r: int) -> float:
    """Minimal total degree of Q(x + a, y + r); inf for Q = 0."""
    if Q.is_zero():
        return math.inf
    T = kernels.translate(Q.field, Q.to_dense(), a, r)
    ii, jj = np.nonzero(T)
    return int((ii + jj).min())


def interpolation_violations(Q: BiPoly, points, params: GsParams) -> list[str]:
    """Contract failures of an interpolant (empty list when all hold)."""
    problems = []
    if Q.is_zero():
        return ["Q is the zero polynomial"]
    wd = Q.wdeg(params.weight)
    if not wd < params.D:
        problems.append(f"wdeg_(1,{params.weight}) Q = {wd} >= D = {params.D}")
    for a, r in points:
        m = multiplicity_at(Q, a, r)
        if m < params.s:
            problems.append(f"multiplicity {m} < s = {params.s} at ({a}, {r})")
    return problems


# -- root finding --------------------------------------------------------------


def rr_roots(Q: BiPoly, k: int) -> list[Poly]:
    """All f with deg f < k and Q(x, f(x)) = 0, by Roth-Ruckenstein.

    Q_{t+1}(x, y) = Q_t(x, x y + f_t) / x^m; a depth-k path is a root exactly
    when the final Q_k(x, 0) vanishes.
    """
    F = Q.field
    if Q.is_zero():
        raise ValueError("every polynomial is a root of Q = 0")
    start = kernels.strip(Q.to_dense())
    found: set[tuple[int, ...]] = set()
    stack = [(start, ())]
    while stack:
        A, prefix = stack.pop()
        if len(prefix) == k:
            if not A[:, 0].any():
                found.add(prefix)
            continue
        row0 = Poly._raw(F, A[0].tolist())
        if row0.degree < 1:
            continue
        for g in univariate_roots(row0):
            stack.append((kernels.rr_step(F, A, g), prefix + (g,)))
    return sorted((Poly._raw(F, pre) for pre in found), key=lambda f: f.padded(k))


# -- decoding --------------------------------------------------------------------


@dataclass(frozen=True)
class DecodeList:
    """Candidates (polynomial, distance) sorted by distance then coefficients."""

    candidates: tuple[tuple[Poly, int], ...]
    k: int
    tau: int
    params: GsParams
    interpolant: BiPoly = dc_field(repr=False)
    points: tuple[tuple[int, int], ...] = dc_field(repr=False, default=())

    def __len__(self) -> int:
        return len(self.candidates)

    def __iter__(self) -> Iterator[tuple[Poly, int]]:
        return iter(self.candidates)

    @property
    def s(self) -> int:
        return self.params.s

    @property
    def polys(self) -> list[Poly]:
        return [f for f, _ in self.candidates]

    @property
    def messages(self) -> list[tuple[int, ...]]:
        """The k low-order coefficients of each candidate."""
        return [f.padded(self.k) for f, _ in self.candidates]

    @property
    def distances(self) -> list[int]:
        return [d for _, d in self.candidates]

    def filtered(self, keep, k: int | None = None) -> "DecodeList":
        kept = tuple(c for c in self.candidates if keep(c[0]))
        return DecodeList(kept, self.k if k is None else k, self.tau, self.params, self.interpolant, self.points)


def _sorted_candidates(cands, k: int):
    return tuple(sorted(cands, key=lambda c: (c[1], c[0].padded(k))))


def gs_list_decode(spec: GrsSpec, r, tau: int, s_max: int = S_MAX) -> DecodeList:
    """Every f of degree < k with d(ev(f), r) <= tau."""
    F = spec.field
    r = np.array([F.coerce(x) for x in r], dtype=np.int64)
    if r.shape != (spec.n,):
        raise ValueError(f"received word has length {r.size}, expected n={spec.n}")
    params = gs_params(spec.n, spec.k, tau, s_max)
    ys = F.vmul(r, F.vinv(np.asarray(spec.vs, dtype=np.int64)))
    points = tuple(zip(spec.alphas, ys.tolist()))
    Q = interpolate(points, params, F)
    for hook in INTERPOLATION_HOOKS:
        hook(Q, points, params)
    cands = []
    for f in rr_roots(Q, spec.k):
        d = hamming(spec.encode_poly(f), r)
        if d <= tau:
            cands.append((f, d))
    return DecodeList(_sorted_candidates(cands, spec.k), spec.k, tau, params, Q, points)
