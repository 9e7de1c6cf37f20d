"""Roth-Lempel codes.

The first n-1 coordinates are GRS evaluations of f = sum m_i x^i and the last
one is v_n (m_{k-2} + delta m_{k-1}).  Deleting that last coordinate gives
GRS(alpha, v', k), so list decoding punctures, runs GS, then re-encodes every
candidate against the full word.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .algebra import Field, Poly
from .errors import InfeasibleRadius, NotMdsEvidence, SpecError
from .gscore import S_MAX, DecodeList, GrsSpec, gs_list_decode, hamming, max_feasible_tau
from .twisted import DecodeOutcome


@dataclass(frozen=True)
class RlSpec:
    field: Field
    alphas: tuple[int, ...]
    vs: tuple[int, ...]
    k: int
    delta: int

    def __post_init__(self):
        F = self.field
        n = len(self.vs)
        if len(self.alphas) != n - 1:
            raise SpecError(f"need n-1 = {n - 1} evaluation points for {n} multipliers, got {len(self.alphas)}")
        if self.k < 3:
            raise SpecError(f"Roth-Lempel codes need k >= 3, got {self.k}")
        if not self.k + 3 <= n <= F.q + 1:
            raise SpecError(f"need k+3 <= n <= q+1, got k={self.k}, n={n}, q={F.q}")
        # validates alphas/vs and normalises them to int encodings
        grs = GrsSpec(F, self.alphas, self.vs[:-1], self.k)
        last = F.coerce(self.vs[-1])
        if last == 0:
            raise SpecError("column multipliers must be nonzero")
        object.__setattr__(self, "alphas", grs.alphas)
        object.__setattr__(self, "vs", grs.vs + (last,))
        object.__setattr__(self, "delta", F.coerce(self.delta))

    @property
    def n(self) -> int:
        return len(self.vs)

    @cached_property
    def _punctured(self) -> GrsSpec:
        return GrsSpec(self.field, self.alphas, self.vs[:-1], self.k)


def puncture_spec(spec: RlSpec) -> GrsSpec:
    return spec._punctured


def puncture_word(w) -> np.ndarray:
    return np.asarray(w, dtype=np.int64)[:-1].copy()


def _last_symbol(spec: RlSpec, m: Sequence[int]) -> int:
    F = spec.field
    return F.mul(spec.vs[-1], F.add(m[spec.k - 2], F.mul(spec.delta, m[spec.k - 1])))


def rl_encode(spec: RlSpec, message: Sequence[int]) -> np.ndarray:
    F = spec.field
    if len(message) != spec.k:
        raise SpecError(f"message has {len(message)} symbols, expected k={spec.k}")
    m = [F.coerce(x) for x in message]
    head = puncture_spec(spec).encode_poly(Poly(F, m))
    return np.append(head, _last_symbol(spec, m)).astype(np.int64)


def rl_list_decode(spec: RlSpec, r, tau: int, s_max: int = S_MAX) -> DecodeList:
    F = spec.field
    r = np.array([F.coerce(x) for x in r], dtype=np.int64)
    if r.shape != (spec.n,):
        raise ValueError(f"received word has length {r.size}, expected n={spec.n}")
    inner = gs_list_decode(puncture_spec(spec), r[:-1], tau, s_max)
    kept = []
    for f, d in inner:
        m = f.padded(spec.k)
        if r[-1] != _last_symbol(spec, m):
            d += 1
        if d <= tau:
            kept.append((f, d))
    kept.sort(key=lambda c: (c[1], c[0].padded(spec.k)))
    return DecodeList(tuple(kept), spec.k, tau, inner.params, inner.interpolant, inner.points)


def unique_condition_ok(n: int, k: int) -> bool:
    """sqrt(n-1) - sqrt(k) > 1, i.e. (n+k-2)^2 > 4(n-1)k with n-1 > k+1."""
    return n - 1 > k + 1 and (n + k - 2) ** 2 > 4 * (n - 1) * k


def rl_unique_decode(spec: RlSpec, r, s_max: int = S_MAX) -> DecodeOutcome:
    n, k = spec.n, spec.k
    tau = (n - k) // 2
    if not unique_condition_ok(n, k):
        raise InfeasibleRadius(
            n - 1, k, tau, max_feasible_tau(n - 1, k, s_max),
            f"sqrt(n-1) - sqrt(k) = {math.sqrt(n - 1) - math.sqrt(k):.4f} <= 1",
        )
    L = rl_list_decode(spec, r, tau, s_max)
    if len(L) >= 2:
        raise NotMdsEvidence(L.messages)
    return DecodeOutcome(L.messages[0] if len(L) else None, tau, L)


def rl_distance(spec: RlSpec, message, r) -> int:
    return hamming(rl_encode(spec, message), r)
