"""Twisted GRS codes.

A twist (t, h, eta) adds eta * f_h * x^(k-1+t) to the message polynomial
f = f_0 + ... + f_{k-1} x^(k-1).  Every such polynomial has degree below
k' = k + max t, so the code sits inside GRS(k') and the GS decoder for that
super code does the heavy lifting; we only throw away roots that are not
twist polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .algebra import Field, Poly
from .errors import InfeasibleRadius, NotMdsEvidence, SpecError
from .gscore import S_MAX, DecodeList, GrsSpec, gs_list_decode, gs_params, max_feasible_tau


@dataclass(frozen=True)
class TwistTriple:
    t: int
    h: int
    eta: int


@dataclass(frozen=True)
class TgrsSpec:
    field: Field
    alphas: tuple[int, ...]
    vs: tuple[int, ...]
    k: int
    twists: tuple[TwistTriple, ...]

    def __post_init__(self):
        base = GrsSpec(self.field, self.alphas, self.vs, self.k)
        object.__setattr__(self, "alphas", base.alphas)
        object.__setattr__(self, "vs", base.vs)
        n, k = base.n, self.k
        twists = []
        for tw in self.twists:
            if not isinstance(tw, TwistTriple):
                tw = TwistTriple(*tw)
            eta = self.field.coerce(tw.eta)
            if not 1 <= tw.t <= n - k:
                raise SpecError(f"twist hook t={tw.t} outside 1..n-k={n - k}")
            if not 0 <= tw.h < k:
                raise SpecError(f"twist position h={tw.h} outside 0..k-1={k - 1}")
            if eta == 0:
                raise SpecError("twist coefficient eta must be nonzero")
            twists.append(TwistTriple(tw.t, tw.h, eta))
        if not twists:
            raise SpecError("a TGRS code needs at least one twist")
        if len({(tw.t, tw.h) for tw in twists}) != len(twists):
            raise SpecError("twist pairs (t, h) must be pairwise distinct")
        excess = max(tw.t for tw in twists)
        if len(twists) > max_twists(n, k, excess):
            raise SpecError(f"{len(twists)} twists exceed the cap k*(k'-k) = {k * excess}")
        object.__setattr__(self, "twists", tuple(twists))

    @property
    def n(self) -> int:
        return len(self.alphas)

    @cached_property
    def k_prime(self) -> int:
        return pseudo_dimension(self)

    @cached_property
    def _super(self) -> GrsSpec:
        return GrsSpec(self.field, self.alphas, self.vs, self.k_prime)

    def super_code(self) -> GrsSpec:
        """The GRS code of dimension k' that contains this code."""
        return self._super


def pseudo_dimension(spec: TgrsSpec) -> int:
    return spec.k + max(tw.t for tw in spec.twists)


def max_twists(n: int, k: int, k_prime_excess: int) -> int:
    if k < 1 or k_prime_excess < 0 or k + k_prime_excess > n:
        raise SpecError(f"invalid (n, k, excess) = ({n}, {k}, {k_prime_excess})")
    return k * k_prime_excess


def twist_coeffs(spec: TgrsSpec, message: Sequence[int]) -> list[int]:
    F = spec.field
    if len(message) != spec.k:
        raise SpecError(f"message has {len(message)} symbols, expected k={spec.k}")
    out = [F.coerce(m) for m in message] + [0] * (spec.k_prime - spec.k)
    for tw in spec.twists:
        e = spec.k - 1 + tw.t
        out[e] = F.add(out[e], F.mul(tw.eta, out[tw.h]))
    return out


def twist_poly(spec: TgrsSpec, message: Sequence[int]) -> Poly:
    return Poly(spec.field, twist_coeffs(spec, message))


def tgrs_encode(spec: TgrsSpec, message: Sequence[int]) -> np.ndarray:
    return spec.super_code().encode_poly(twist_poly(spec, message))


def is_twist_polynomial(spec: TgrsSpec, f: Poly) -> bool:
    if f.degree >= spec.k_prime:
        raise ValueError(f"deg f = {f.degree} is not below k' = {spec.k_prime}")
    return twist_poly(spec, f.padded(spec.k)) == f


def tgrs_list_decode(spec: TgrsSpec, r, tau: int, s_max: int = S_MAX) -> DecodeList:
    """Every twist polynomial whose codeword lies within tau of r."""
    full = gs_list_decode(spec.super_code(), r, tau, s_max)
    return full.filtered(lambda f: is_twist_polynomial(spec, f), k=spec.k)


@dataclass(frozen=True)
class DecodeOutcome:
    message: tuple[int, ...] | None
    tau: int
    decoded: DecodeList

    @property
    def ok(self) -> bool:
        return self.message is not None


def unique_radius_ok(n: int, k: int, k_prime: int) -> bool:
    """k' < (n + k)^2 / (4n), exactly."""
    return 4 * n * k_prime < (n + k) ** 2


def tgrs_unique_decode(spec: TgrsSpec, r, s_max: int = S_MAX) -> DecodeOutcome:
    """Decode up to floor((n-k)/2) errors, assuming the code is MDS.

    An empty list is a plain failure (message None).  Two or more candidates
    cannot happen for an MDS code and raise NotMdsEvidence.
    """
    n, k, kp = spec.n, spec.k, spec.k_prime
    tau = (n - k) // 2
    if not unique_radius_ok(n, k, kp):
        raise InfeasibleRadius(n, kp, tau, max_feasible_tau(n, kp, s_max), "k' >= (n+k)^2/(4n)")
    gs_params(n, kp, tau, s_max)
    L = tgrs_list_decode(spec, r, tau, s_max)
    if len(L) >= 2:
        raise NotMdsEvidence(L.messages)
    return DecodeOutcome(L.messages[0] if len(L) else None, tau, L)
