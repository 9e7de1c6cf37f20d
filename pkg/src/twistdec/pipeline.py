"""AMD-assisted encoding and decoding on top of a TGRS or Roth-Lempel code.

The outer code has dimension k + 2b and carries (m || x || t).  Decoding
list-decodes the outer code and keeps the candidates whose tag verifies; the
message is returned only when exactly one survives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .amd import AmdParams, ErrorBound, amd_encode, amd_error_bound, amd_verify
from .errors import SpecError
from .gscore import S_MAX, DecodeList, gs_params
from .rothlempel import RlSpec, rl_encode, rl_list_decode
from .twisted import TgrsSpec, tgrs_encode, tgrs_list_decode

OuterSpec = Union[TgrsSpec, RlSpec]


@dataclass(frozen=True)
class AmdCodec:
    outer: OuterSpec
    amd: AmdParams

    def __post_init__(self):
        if not isinstance(self.outer, (TgrsSpec, RlSpec)):
            raise SpecError(f"outer code must be TGRS or Roth-Lempel, got {type(self.outer).__name__}")
        if self.outer.field != self.amd.base:
            raise SpecError("outer code and AMD layer use different base fields")
        if self.outer.k != self.amd.length:
            raise SpecError(f"outer dimension {self.outer.k} != k + 2b = {self.amd.length}")

    @classmethod
    def build(cls, outer: OuterSpec, b: int) -> "AmdCodec":
        return cls(outer, AmdParams(outer.field, b, outer.k - 2 * b))

    @property
    def k(self) -> int:
        return self.amd.k

    @property
    def n(self) -> int:
        return self.outer.n

    @property
    def is_rl(self) -> bool:
        return isinstance(self.outer, RlSpec)

    def gs_shape(self) -> tuple[int, int]:
        """(length, dimension) of the GRS code the GS decoder actually runs on."""
        if self.is_rl:
            return self.outer.n - 1, self.outer.k
        return self.outer.n, self.outer.k_prime

    def outer_encode(self, g) -> np.ndarray:
        return rl_encode(self.outer, g) if self.is_rl else tgrs_encode(self.outer, g)

    def outer_list_decode(self, r, tau: int, s_max: int = S_MAX) -> DecodeList:
        if self.is_rl:
            return rl_list_decode(self.outer, r, tau, s_max)
        return tgrs_list_decode(self.outer, r, tau, s_max)

    def error_bound(self, tau: int, s_max: int = S_MAX) -> ErrorBound:
        n, kd = self.gs_shape()
        return amd_error_bound(self.amd, n, kd, gs_params(n, kd, tau, s_max).s)


def amd_assisted_encode(codec: AmdCodec, m, seed=None) -> np.ndarray:
    if len(m) != codec.k:
        raise SpecError(f"message has {len(m)} symbols, expected k={codec.k}")
    return codec.outer_encode(amd_encode(m, codec.amd, seed).flat())


@dataclass(frozen=True)
class PipelineResult:
    status: str  # "ok", "fail" or "ambiguous"
    message: tuple[int, ...] | None
    candidates: DecodeList
    verdicts: tuple[bool, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    @property
    def accepted(self) -> list[tuple[int, ...]]:
        return [m for m, v in zip(self.candidates.messages, self.verdicts) if v]


def amd_assisted_decode(codec: AmdCodec, r, tau: int, s_max: int = S_MAX) -> PipelineResult:
    L = codec.outer_list_decode(r, tau, s_max)
    verdicts = tuple(amd_verify(g, codec.amd) is not None for g in L.messages)
    passed = [g[: codec.k] for g, v in zip(L.messages, verdicts) if v]
    if len(passed) == 1:
        return PipelineResult("ok", passed[0], L, verdicts)
    return PipelineResult("fail" if not passed else "ambiguous", None, L, verdicts)
