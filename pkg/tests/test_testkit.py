import csv

import numpy as np
import pytest

from twistdec.algebra import field_make
from twistdec.errors import SpecError
from twistdec.gscore import GrsSpec
from twistdec.rothlempel import RlSpec
from twistdec.testkit import (
    EnumerationCapExceeded,
    TrialConfig,
    classify,
    enumerate_codewords,
    generator_matrix,
    min_distance,
    nearest_list,
    random_error,
    run_trials,
    trial_seed,
)
from twistdec.twisted import TgrsSpec

F7 = field_make(7)
GRS7 = GrsSpec(F7, tuple(range(6)), (1,) * 6, 2)


def test_enumeration():
    words = list(enumerate_codewords(GrsSpec(F7, tuple(range(7)), (1,) * 7, 2)))
    assert len(words) == 49
    assert [m for m, _ in words] == sorted(m for m, _ in words)
    assert len({c.tobytes() for _, c in words}) == 49


def test_enumeration_cap(monkeypatch):
    spec = GrsSpec(field_make(23), tuple(range(23)), (1,) * 23, 5)
    with pytest.raises(EnumerationCapExceeded):
        next(enumerate_codewords(spec))
    monkeypatch.setenv("TWISTDEC_ENUM_CAP", "10")
    with pytest.raises(EnumerationCapExceeded):
        next(enumerate_codewords(GRS7))


def test_nearest_list_examples():
    c = GRS7.encode((3, 4))
    assert nearest_list(GRS7, c, 0) == {(3, 4)}
    assert len(nearest_list(GRS7, c, 6)) == 49


def test_min_distance_and_classify():
    assert min_distance(GRS7) == 5
    assert classify(GRS7) == "MDS"
    rl = RlSpec(F7, (0, 1, 2, 3, 4, 5), (1,) * 7, 3, 2)
    assert min_distance(rl) in (4, 5)
    assert classify(rl) in ("MDS", "NMDS")


def test_generator_matrix_rows_span_the_code():
    t = TgrsSpec(F7, tuple(range(7)), (1,) * 7, 2, ((1, 1, 3),))
    G = generator_matrix(t)
    enc = {c.tobytes() for _, c in enumerate_codewords(t)}
    rng = np.random.default_rng(0)
    for _ in range(40):
        m = rng.integers(7, size=2)
        assert F7.matmul(m[None, :], G)[0].astype(np.int64).tobytes() in enc


def test_random_error_examples():
    rng = np.random.default_rng(1)
    assert not random_error(10, 0, rng, 7).any()
    assert np.count_nonzero(random_error(10, 10, rng, 7)) == 10
    with pytest.raises(ValueError):
        random_error(10, 11, rng, 7)


def test_random_error_support_is_uniform():
    rng = np.random.default_rng(2)
    n, w, N = 12, 3, 10_000
    counts = np.zeros(n)
    values = np.zeros(7)
    for _ in range(N):
        e = random_error(n, w, rng, 7)
        counts += e != 0
        values += np.bincount(e[e != 0], minlength=7)
    exp = N * w / n
    chi2 = ((counts - exp) ** 2 / exp).sum()
    assert chi2 < 31.3  # 99.9% point of chi^2 with 11 degrees of freedom
    assert values[0] == 0
    v = values[1:]
    assert ((v - v.mean()) ** 2 / v.mean()).sum() < 20.5  # 5 degrees of freedom


def test_trial_seed_rule():
    assert trial_seed(12345, 7) == 12345 ^ 7


def test_trials_reproducible(tmp_path):
    spec = TgrsSpec(field_make(11), tuple(range(11)), (1,) * 11, 3, ((1, 0, 2),))
    cfg = dict(code=spec, weights=[0, 2, 3], trials=30, seed=99, tau=3)
    a = run_trials(TrialConfig(**cfg, out=tmp_path / "a.csv"))
    b = run_trials(TrialConfig(**cfg, out=tmp_path / "b.csv"))
    strip = lambda p: [r[:-1] for r in csv.reader(open(p))]
    assert strip(tmp_path / "a.csv") == strip(tmp_path / "b.csv")
    assert [w.list_sizes for w in a] == [w.list_sizes for w in b]
    header = next(csv.reader(open(tmp_path / "a.csv")))
    assert header == ["weight", "trials", "successes", "failures", "ambiguous", "mean_list",
                      "max_list", "amd_false_accepts", "seconds"]
    for w in a:
        assert w.successes + w.failures + w.ambiguous == w.trials
    assert a.per_weight[0].successes == 30


def test_decoder_errors_are_counted_not_raised():
    spec = TgrsSpec(field_make(11), tuple(range(11)), (1,) * 11, 3, ((1, 0, 2),))
    stats = run_trials(TrialConfig(spec, [1], 5, tau=10))
    w = stats.per_weight[0]
    assert w.errors == 5 and w.failures == 5


def test_config_validation():
    with pytest.raises(SpecError):
        TrialConfig(GRS7, [], 5, tau=1)
    with pytest.raises(SpecError):
        TrialConfig(GRS7, [7], 5, tau=1)
    with pytest.raises(SpecError):
        TrialConfig(GRS7, [1], 5, mode="unique")
    with pytest.raises(SpecError):
        TrialConfig(GRS7, [1], 5, mode="amd", tau=1)
    with pytest.raises(SpecError):
        TrialConfig(GRS7, [1], 5)
