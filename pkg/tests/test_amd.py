from fractions import Fraction

import numpy as np
import pytest

from twistdec.algebra import field_make
from twistdec.amd import (
    AmdAugmented,
    AmdParams,
    acceptance_count,
    amd_encode,
    amd_error_bound,
    amd_tag,
    amd_verify,
)
from twistdec.errors import SpecError

F23 = field_make(23)


def test_tag_examples():
    assert amd_tag((4, 2, 10), AmdParams(F23, 1, 3), 11) == 8
    assert amd_tag((0, 0, 0), AmdParams(F23, 1, 3), 0) == 0
    assert amd_tag((18, 13, 14, 21), AmdParams(F23, 1, 4), 22) == 3


def test_tag_against_direct_sum():
    rng = np.random.default_rng(0)
    for k in range(1, 8):
        P = AmdParams(F23, 1, k)
        m = rng.integers(23, size=k)
        x = int(rng.integers(23))
        want = F23.pow(x, P.r + 2)
        for i, mi in enumerate(m, start=1):
            want = F23.add(want, F23.mul(int(mi), F23.pow(x, i)))
        assert amd_tag(m, P, x) == want


def test_encode_examples():
    assert amd_encode((4, 2, 10), AmdParams(F23, 1, 3), 11).flat() == (4, 2, 10, 11, 8)
    assert amd_encode((18, 13, 14, 21), AmdParams(F23, 1, 4), 22).flat() == (18, 13, 14, 21, 22, 3)


def test_verify_examples():
    assert amd_verify((22, 1, 9, 15, 12), AmdParams(F23, 1, 3)) is None
    assert amd_verify((22, 9, 7, 12, 0, 6), AmdParams(F23, 1, 4)) is None
    assert amd_verify((4, 2, 10, 11, 8), AmdParams(F23, 1, 3)) == (4, 2, 10)
    with pytest.raises(SpecError):
        amd_verify((1, 2, 3), AmdParams(F23, 1, 3))


@pytest.mark.parametrize("p,e,b,k", [(23, 1, 1, 3), (23, 1, 2, 5), (2, 1, 8, 11), (3, 1, 3, 4), (2, 2, 2, 3)])
def test_completeness(p, e, b, k):
    P = AmdParams(field_make(p, e), b, k)
    rng = np.random.default_rng(p + b + k)
    for _ in range(1000):
        m = tuple(int(v) for v in rng.integers(P.base.q, size=k))
        g = amd_encode(m, P, rng)
        assert len(g.flat()) == P.length
        assert amd_verify(g, P) == m
        assert amd_verify(g.flat(), P) == m


def test_divisibility_fix():
    for p in (2, 3, 5, 7):
        for b in (1, 2):
            for k in range(1, 12):
                P = AmdParams(field_make(p), b, k)
                if (P.r0 + 2) % p == 0:
                    assert P.r == P.r0 + 1
                else:
                    assert P.r == P.r0
                assert (P.r + 2) % p != 0


@pytest.mark.parametrize("p,b,k", [(3, 1, 1), (3, 2, 3), (5, 1, 3), (2, 3, 2), (7, 1, 5)])
def test_soundness_exhaustive(p, b, k):
    P = AmdParams(field_make(p), b, k)
    bound = Fraction(P.r + 1, P.ext.q)
    rng = np.random.default_rng(p * b + k)
    for _ in range(50):
        delta = np.zeros(P.length, dtype=np.int64)
        while not delta.any():
            delta = rng.integers(p, size=P.length)
        m = rng.integers(p, size=k)
        assert Fraction(acceptance_count(P, m, delta), P.ext.q) <= bound


def test_error_bound():
    P = AmdParams(F23, 1, 3)
    eb = amd_error_bound(P, 23, 6, 1)
    assert eb.coefficient == Fraction(5, 23)
    assert eb.failure == pytest.approx(5 / 23 * ((23 / 6) ** 0.5 - 1))
    assert amd_error_bound(P, 6, 6, 1).failure == 0
    assert amd_error_bound(AmdParams(F23, 2, 3), 23, 6, 3).coarse == Fraction(12, 23)
    fails = [amd_error_bound(AmdParams(F23, b, 6), 23, 10, 2).failure for b in (1, 2, 3)]
    assert fails[0] > fails[1] > fails[2]


def test_params_validation():
    with pytest.raises(SpecError):
        AmdParams(F23, 0, 3)
    with pytest.raises(SpecError):
        AmdParams(F23, 1, 0)
    with pytest.raises(SpecError):
        AmdParams(F23, 4, 3)
    with pytest.raises(SpecError):
        AmdAugmented.split((1, 2), AmdParams(F23, 1, 3))
