"""Systematic algebraic manipulation detection over GF(q^b).

The message m (k symbols of GF(q)) is cut into r blocks of b symbols, each
read as one element of GF(q^b).  With a uniform seed x the tag is

    t = x^(r+2) + sum_{i=1..r} m_{i-1} x^i

An additive manipulation of (m, x, t) survives verification only if x is a
root of a nonzero polynomial of degree <= r+1, which needs p not dividing r+2;
when it does, one zero block is appended.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebra import Field, extension_field, pack, unpack
from .errors import SpecError


@dataclass(frozen=True)
class AmdParams:
    base: Field
    b: int
    k: int

    def __post_init__(self):
        if self.b < 1:
            raise SpecError(f"block size b must be >= 1, got {self.b}")
        if self.k < 1:
            raise SpecError(f"message length k must be >= 1, got {self.k}")
        if self.b > 1 and self.base.q ** self.b > 2**16:
            raise SpecError("GF(q^b) too large for table arithmetic")

    @property
    def ext(self) -> Field:
        return extension_field(self.base, self.b)

    @property
    def r0(self) -> int:
        return -(-self.k // self.b)

    @property
    def r(self) -> int:
        return self.r0 + 1 if (self.r0 + 2) % self.base.p == 0 else self.r0

    @property
    def length(self) -> int:
        """Symbols in an augmented vector (m || x || t)."""
        return self.k + 2 * self.b


@dataclass(frozen=True)
class AmdAugmented:
    m: tuple[int, ...]
    x: tuple[int, ...]
    t: tuple[int, ...]

    def flat(self) -> tuple[int, ...]:
        return self.m + self.x + self.t

    @classmethod
    def split(cls, g: Sequence[int], params: AmdParams) -> "AmdAugmented":
        if len(g) != params.length:
            raise SpecError(f"augmented vector has {len(g)} symbols, expected k+2b={params.length}")
        k, b = params.k, params.b
        g = tuple(int(v) for v in g)
        return cls(g[:k], g[k : k + b], g[k + b :])


def _blocks(params: AmdParams, m: Sequence[int]) -> list[int]:
    F, b = params.base, params.b
    padded = [F.coerce(v) for v in m] + [0] * (params.r0 * b - len(m))
    out = [pack(F, params.ext, padded[i * b : (i + 1) * b]) for i in range(params.r0)]
    return out + [0] * (params.r - params.r0)


def amd_tag(m: Sequence[int], params: AmdParams, x: int) -> int:
    """t = x^(r+2) + sum m_{i-1} x^i over GF(q^b), Horner form."""
    if len(m) != params.k:
        raise SpecError(f"message has {len(m)} symbols, expected k={params.k}")
    E = params.ext
    x = E.coerce(x)
    acc = 1  # coefficient of x^(r+2), then x^(r+1) is zero
    coeffs = [0] + _blocks(params, m)[::-1]
    for c in coeffs:
        acc = E.add(E.mul(acc, x), c)
    # acc = x^(r+1) + sum m_{i-1} x^(i-1); one more multiply shifts everything up
    return E.mul(acc, x)


def amd_encode(m: Sequence[int], params: AmdParams, seed=None) -> AmdAugmented:
    """Augment m with a seed and its tag.

    ``seed`` is either an element of GF(q^b) (injected, deterministic), a
    numpy Generator, or None for a fresh default_rng draw.
    """
    E = params.ext
    if seed is None or isinstance(seed, np.random.Generator):
        rng = seed if seed is not None else np.random.default_rng()
        x = int(rng.integers(E.q))
    else:
        x = E.coerce(seed)
    t = amd_tag(m, params, x)
    F = params.base
    return AmdAugmented(
        tuple(F.coerce(v) for v in m),
        unpack(F, E, x),
        unpack(F, E, t),
    )


def amd_verify(candidate, params: AmdParams) -> tuple[int, ...] | None:
    """Return m if the tag checks out, else None."""
    if not isinstance(candidate, AmdAugmented):
        candidate = AmdAugmented.split(candidate, params)
    if len(candidate.m) != params.k or len(candidate.x) != params.b or len(candidate.t) != params.b:
        raise SpecError("augmented vector does not match (k, b)")
    x = pack(params.base, params.ext, candidate.x)
    t = pack(params.base, params.ext, candidate.t)
    return candidate.m if amd_tag(candidate.m, params, x) == t else None


@dataclass(frozen=True)
class ErrorBound:
    coefficient: Fraction  # (ceil(k/b) + 2) / q^b
    list_bound: float  # s * sqrt(n / k')
    coarse: Fraction  # 4 s / q^(b-1)

    @property
    def failure(self) -> float:
        """coefficient * (list_bound - 1), never negative."""
        return max(0.0, float(self.coefficient) * (self.list_bound - 1.0))


def amd_error_bound(params: AmdParams, n: int, k_dim: int, s: int) -> ErrorBound:
    """Decoder failure-probability bound for an outer code of length n.

    k_dim is k' for TGRS codes; Roth-Lempel callers pass n-1 and k+2b.
    """
    q = params.base.q
    coef = Fraction(params.r0 + 2, q**params.b)
    return ErrorBound(coef, s * math.sqrt(n / k_dim), Fraction(4 * s, q ** (params.b - 1)))


def acceptance_count(params: AmdParams, m: Sequence[int], delta: Sequence[int]) -> int:
    """Seeds x for which E(m; x) + delta still verifies, counted exhaustively."""
    F = params.base
    delta = [F.coerce(v) for v in delta]
    if len(delta) != params.length:
        raise SpecError(f"manipulation has {len(delta)} symbols, expected {params.length}")
    hits = 0
    for x in range(params.ext.q):
        g = amd_encode(m, params, x).flat()
        moved = [F.add(a, d) for a, d in zip(g, delta)]
        if amd_verify(moved, params) is not None:
            hits += 1
    return hits
