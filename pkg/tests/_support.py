"""State shared across the test session: contract checks and acceptance verdicts."""

from __future__ import annotations

import numpy as np

from twistdec.gscore import interpolation_violations

CONTRACTS = {"checked": 0, "violations": []}
VERDICTS: dict[int, tuple[bool, str]] = {}


def contract_hook(Q, points, params):
    CONTRACTS["checked"] += 1
    problems = interpolation_violations(Q, points, params)
    if problems:
        CONTRACTS["violations"].append((params, problems[:3]))


def record(criterion: int, ok: bool, detail: str):
    VERDICTS[criterion] = (ok, detail)
    print(f"criterion {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")


def random_words(rng: np.random.Generator, F, n: int, k: int, encode, tau: int, count: int):
    """Received words mixing four shapes.

    codeword + error of weight 0..tau+1, uniform junk, and words spliced from
    two codewords (plus a little noise), which are the ones that produce lists
    of size two or more.
    """
    q = F.q
    for i in range(count):
        c = encode(rng.integers(q, size=k))
        kind = i % 4
        if kind < 2:
            w = int(rng.integers(0, min(n, tau + 1) + 1))
            yield F.vadd(c, _error(rng, n, w, q))
        elif kind == 2:
            yield rng.integers(q, size=n)
        else:
            c2 = encode(rng.integers(q, size=k))
            r = np.where(rng.random(n) < 0.5, c, c2)
            yield F.vadd(r, _error(rng, n, int(rng.integers(0, 3)), q))


def _error(rng, n, w, q):
    e = np.zeros(n, dtype=np.int64)
    e[rng.choice(n, size=w, replace=False)] = rng.integers(1, q, size=w)
    return e
