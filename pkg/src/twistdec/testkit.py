"""Brute-force oracles, the error channel and the Monte-Carlo trial harness.

The oracles never touch the decoders: codewords come from an explicit
generator matrix and a plain matrix product, so agreement with the list
decoders is meaningful evidence.
"""

from __future__ import annotations

import csv
import itertools
import os
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence, Union

import numpy as np

from .algebra import Field
from .errors import DecodingError, NotMdsEvidence, SpecError
from .gscore import GrsSpec, gs_list_decode
from .pipeline import AmdCodec, amd_assisted_decode, amd_assisted_encode
from .rothlempel import RlSpec, rl_list_decode, rl_unique_decode
from .twisted import TgrsSpec, tgrs_list_decode, tgrs_unique_decode

CodeSpec = Union[GrsSpec, TgrsSpec, RlSpec]
DEFAULT_ENUM_CAP = 2**20
CSV_COLUMNS = (
    "weight", "trials", "successes", "failures", "ambiguous",
    "mean_list", "max_list", "amd_false_accepts", "seconds",
)


def enum_cap() -> int:
    return int(os.environ.get("TWISTDEC_ENUM_CAP", DEFAULT_ENUM_CAP))


class EnumerationCapExceeded(SpecError):
    pass


def _check_cap(count: int, cap: int | None):
    cap = enum_cap() if cap is None else cap
    if count > cap:
        raise EnumerationCapExceeded(f"{count} codewords exceed the enumeration cap {cap}")


# -- generator matrices -----------------------------------------------------------


def generator_matrix(spec: CodeSpec) -> np.ndarray:
    """k x n generator matrix built directly from the code definition."""
    F = spec.field
    if isinstance(spec, RlSpec):
        n, k = spec.n, spec.k
        G = np.zeros((k, n), dtype=np.int64)
        for j, a in enumerate(spec.alphas):
            for i in range(k):
                G[i, j] = F.pow(a, i)
        G[k - 2, n - 1] = 1
        G[k - 1, n - 1] = spec.delta
        return F.vmul(G, np.asarray(spec.vs, dtype=np.int64)[None, :])
    k, n = spec.k, spec.n
    # basis polynomial for message coordinate i, as coefficients up to degree n-1
    basis = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        basis[i, i] = 1
    if isinstance(spec, TgrsSpec):
        for tw in spec.twists:
            e = k - 1 + tw.t
            basis[tw.h, e] = F.add(int(basis[tw.h, e]), tw.eta)
    V = np.array([[F.pow(a, d) for a in spec.alphas] for d in range(n)], dtype=np.int64)
    G = F.matmul(basis, V)
    return F.vmul(G, np.asarray(spec.vs, dtype=np.int64)[None, :])


def _messages(q: int, k: int, start: int, stop: int) -> np.ndarray:
    """Messages with lexicographic indices start..stop-1 (first symbol most significant)."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, k), dtype=np.int64)
    for col in range(k - 1, -1, -1):
        out[:, col] = idx % q
        idx //= q
    return out


def _chunks(spec: CodeSpec, cap: int | None, chunk: int = 1 << 14):
    F = spec.field
    q, k = F.q, spec.k
    total = q**k
    _check_cap(total, cap)
    G = generator_matrix(spec)
    for start in range(0, total, chunk):
        M = _messages(q, k, start, min(total, start + chunk))
        yield M, F.matmul(M, G)


def enumerate_codewords(spec: CodeSpec, cap: int | None = None) -> Iterator[tuple[tuple[int, ...], np.ndarray]]:
    for M, C in _chunks(spec, cap):
        for m, c in zip(M, C):
            yield tuple(int(v) for v in m), c


def nearest_list(spec: CodeSpec, r, tau: int, cap: int | None = None) -> set[tuple[int, ...]]:
    """Messages whose codeword is within Hamming distance tau of r."""
    r = np.asarray([spec.field.coerce(v) for v in r], dtype=np.int64)
    out = set()
    for M, C in _chunks(spec, cap):
        d = np.count_nonzero(C != r[None, :], axis=1)
        out.update(tuple(int(v) for v in m) for m in M[d <= tau])
    return out


def min_distance(spec: CodeSpec, cap: int | None = None) -> int:
    """Exact minimum distance.

    Scaling a codeword keeps its weight, so only messages whose first nonzero
    symbol is 1 are enumerated: (q^k - 1)/(q - 1) of them.
    """
    F = spec.field
    q, k = F.q, spec.k
    _check_cap((q**k - 1) // (q - 1), cap)
    G = generator_matrix(spec)
    best = spec.n
    for lead in range(k):
        tail = k - lead - 1
        total = q**tail
        for start in range(0, total, 1 << 14):
            M = np.zeros((min(total, start + (1 << 14)) - start, k), dtype=np.int64)
            M[:, lead] = 1
            if tail:
                M[:, lead + 1 :] = _messages(q, tail, start, start + M.shape[0])
            w = np.count_nonzero(F.matmul(M, G), axis=1)
            best = min(best, int(w.min()))
    return best


def classify(spec: CodeSpec, cap: int | None = None) -> str:
    d = min_distance(spec, cap)
    n, k = spec.n, spec.k
    if d == n - k + 1:
        return "MDS"
    if d == n - k:
        return "NMDS"
    return "other"


# -- channel ------------------------------------------------------------------------


def random_error(n: int, weight: int, rng: np.random.Generator, q: int) -> np.ndarray:
    """Uniform support of the given size, uniform nonzero values on it."""
    if not 0 <= weight <= n:
        raise ValueError(f"error weight {weight} outside 0..{n}")
    e = np.zeros(n, dtype=np.int64)
    pos = rng.choice(n, size=weight, replace=False)
    e[pos] = rng.integers(1, q, size=weight)
    return e


def trial_seed(master: int, index: int) -> int:
    return master ^ index


# -- trials ---------------------------------------------------------------------------


@dataclass
class TrialConfig:
    """mode: "list" (success = sent message in list), "unique" or "amd"."""

    code: Union[CodeSpec, AmdCodec]
    weights: Sequence[int]
    trials: int
    seed: int = 0
    tau: int | None = None
    mode: str = "list"
    out: str | Path | None = None

    def __post_init__(self):
        if not len(self.weights):
            raise SpecError("trial config needs at least one error weight")
        if self.trials < 1:
            raise SpecError("trial count must be positive")
        if self.mode not in ("list", "unique", "amd"):
            raise SpecError(f"unknown trial mode {self.mode!r}")
        if self.mode == "amd" and not isinstance(self.code, AmdCodec):
            raise SpecError("amd mode needs an AMD codec")
        if self.mode == "unique" and isinstance(self.code, (AmdCodec, GrsSpec)):
            raise SpecError("unique mode runs on a bare TGRS or Roth-Lempel spec")
        if self.mode in ("list", "amd") and self.tau is None:
            raise SpecError(f"{self.mode} mode needs tau")
        n = self.code.n
        for w in self.weights:
            if not 0 <= w <= n:
                raise SpecError(f"error weight {w} outside 0..{n}")


@dataclass
class WeightStats:
    weight: int
    trials: int = 0
    successes: int = 0
    failures: int = 0
    ambiguous: int = 0
    list_total: int = 0
    max_list: int = 0
    amd_false_accepts: int = 0
    errors: int = 0
    seconds: float = 0.0
    list_sizes: list[int] = field(default_factory=list, repr=False)

    @property
    def mean_list(self) -> float:
        return self.list_total / self.trials if self.trials else 0.0

    def row(self) -> dict:
        return {
            "weight": self.weight, "trials": self.trials, "successes": self.successes,
            "failures": self.failures, "ambiguous": self.ambiguous,
            "mean_list": f"{self.mean_list:.6f}", "max_list": self.max_list,
            "amd_false_accepts": self.amd_false_accepts, "seconds": f"{self.seconds:.3f}",
        }


@dataclass
class TrialStats:
    per_weight: list[WeightStats]

    def __iter__(self):
        return iter(self.per_weight)

    @property
    def total(self) -> WeightStats:
        t = WeightStats(-1)
        for w in self.per_weight:
            for name in ("trials", "successes", "failures", "ambiguous", "list_total",
                         "amd_false_accepts", "errors", "seconds"):
                setattr(t, name, getattr(t, name) + getattr(w, name))
            t.max_list = max(t.max_list, w.max_list)
        return t

    def write_csv(self, path, timings: bool = True):
        with open(path, "w", newline="") as fh:
            wr = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
            wr.writeheader()
            for w in self.per_weight:
                row = w.row()
                if not timings:
                    row["seconds"] = "0.000"
                wr.writerow(row)


def _one_trial(cfg: TrialConfig, weight: int, rng: np.random.Generator, st: WeightStats):
    code = cfg.code
    F = code.outer.field if isinstance(code, AmdCodec) else code.field
    q = F.q
    if cfg.mode == "amd":
        m = tuple(int(v) for v in rng.integers(q, size=code.k))
        c = amd_assisted_encode(code, m, rng)
        r = F.vadd(c, random_error(code.n, weight, rng, q))
        res = amd_assisted_decode(code, r, cfg.tau)
        size = len(res.candidates)
        if res.status == "ok" and res.message == m:
            st.successes += 1
        elif res.status == "ok":
            st.amd_false_accepts += 1
            st.failures += 1
        elif res.status == "ambiguous":
            st.ambiguous += 1
        else:
            st.failures += 1
        return size
    m = tuple(int(v) for v in rng.integers(q, size=code.k))
    c = _encode(code, m)
    r = F.vadd(c, random_error(code.n, weight, rng, q))
    if cfg.mode == "unique":
        try:
            out = (rl_unique_decode if isinstance(code, RlSpec) else tgrs_unique_decode)(code, r)
        except NotMdsEvidence as exc:
            st.ambiguous += 1
            return len(exc.candidates)
        if out.message == m:
            st.successes += 1
        else:
            st.failures += 1
        return len(out.decoded)
    L = _list_decode(code, r, cfg.tau)
    if m in L.messages:
        st.successes += 1
    else:
        st.failures += 1
    return len(L)


def _encode(code: CodeSpec, m):
    from .rothlempel import rl_encode
    from .twisted import tgrs_encode

    if isinstance(code, RlSpec):
        return rl_encode(code, m)
    if isinstance(code, TgrsSpec):
        return tgrs_encode(code, m)
    return code.encode(m)


def _list_decode(code: CodeSpec, r, tau: int):
    if isinstance(code, RlSpec):
        return rl_list_decode(code, r, tau)
    if isinstance(code, TgrsSpec):
        return tgrs_list_decode(code, r, tau)
    return gs_list_decode(code, r, tau)


def run_trials(cfg: TrialConfig) -> TrialStats:
    """Trial i (counted across all weights) draws from default_rng(seed ^ i).

    Decoder exceptions are counted as failures and never stop the batch.
    """
    out = []
    index = 0
    for weight in cfg.weights:
        st = WeightStats(weight)
        t0 = time.perf_counter()
        for _ in range(cfg.trials):
            rng = np.random.default_rng(trial_seed(cfg.seed, index))
            index += 1
            st.trials += 1
            try:
                size = _one_trial(cfg, weight, rng, st)
            except (DecodingError, ValueError):
                st.failures += 1
                st.errors += 1
                size = 0
            st.list_sizes.append(size)
            st.list_total += size
            st.max_list = max(st.max_list, size)
        st.seconds = time.perf_counter() - t0
        out.append(st)
    stats = TrialStats(out)
    if cfg.out is not None:
        stats.write_csv(cfg.out)
    return stats


def iter_grid(qs=(7, 11, 13), ks=(2, 3)) -> Iterator[tuple[int, int, int]]:
    for q, k in itertools.product(qs, ks):
        for n in (q - 1, q):
            yield q, n, k
