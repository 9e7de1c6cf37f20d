"""Time the numba kernels against the pure-numpy fallback.

    python3 benchmarks/bench_backends.py [--repeat 5]

Each case decodes the same received words with both backends (switched by
patching twistdec.kernels.BACKEND, the same switch TWISTDEC_BACKEND sets at
import) and checks that the outputs agree.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from twistdec import kernels
from twistdec.algebra import field_make
from twistdec.gscore import GrsSpec, gs_list_decode

CASES = [
    ("GF(23) n=23 k=6 tau=11", 23, 1, 23, 6, 11),
    ("GF(67) n=64 k=16 tau=29", 67, 1, 64, 16, 29),
    ("GF(2^6) n=64 k=16 tau=29", 2, 6, 64, 16, 29),
    ("GF(31) n=31 k=4 tau=19", 31, 1, 31, 4, 19),
]


def _words(F, spec, tau, count, rng):
    for _ in range(count):
        c = spec.encode(rng.integers(F.q, size=spec.k))
        e = np.zeros(spec.n, dtype=np.int64)
        e[rng.choice(spec.n, tau, replace=False)] = rng.integers(1, F.q, size=tau)
        yield F.vadd(c, e)


def _time(backend, spec, words, tau):
    kernels.BACKEND = backend
    gs_list_decode(spec, words[0], tau)  # warm-up, includes JIT compilation
    t0 = time.perf_counter()
    out = [gs_list_decode(spec, r, tau).messages for r in words]
    return (time.perf_counter() - t0) / len(words), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5, help="received words per case")
    args = ap.parse_args(argv)
    rng = np.random.default_rng(0)
    saved = kernels.BACKEND
    print(f"{'case':28s} {'numba ms':>10s} {'numpy ms':>10s} {'speedup':>8s}")
    try:
        for label, p, e, n, k, tau in CASES:
            F = field_make(p, e)
            spec = GrsSpec(F, tuple(range(n)), (1,) * n, k)
            words = list(_words(F, spec, tau, args.repeat, rng))
            t_nb, a = _time("numba", spec, words, tau)
            t_np, b = _time("numpy", spec, words, tau)
            if a != b:
                raise SystemExit(f"{label}: backends disagree")
            print(f"{label:28s} {1e3 * t_nb:10.2f} {1e3 * t_np:10.2f} {t_np / t_nb:8.1f}x")
    finally:
        kernels.BACKEND = saved


if __name__ == "__main__":
    main()
