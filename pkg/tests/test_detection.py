import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pearsoncodes import (
    Codebook,
    DegenerateInputError,
    DomainError,
    EuclideanDetector,
    PearsonDetector,
    detect_min_euclidean,
    detect_min_pearson,
    pearson_codebook,
    pearson_correlation,
    pearson_distance,
    vector_mean,
    vector_sigma,
)

from oracles import naive_pearson_distance


def test_mean_and_sigma():
    assert vector_mean([0, 1]) == 0.5
    assert vector_mean([3, 3, 3]) == 3
    assert vector_mean([0, 0, 1]) == pytest.approx(1 / 3)
    assert vector_sigma([3, 3, 3]) == 0
    assert vector_sigma([0, 1]) == pytest.approx(math.sqrt(0.5))
    assert vector_sigma([0, 0, 1]) == pytest.approx(math.sqrt(2 / 3))
    with pytest.raises(DomainError):
        vector_mean([])


def test_correlation_examples():
    assert pearson_correlation([0, 1], [5, 7]) == pytest.approx(1)
    assert pearson_correlation([0, 1], [1, 0]) == pytest.approx(-1)
    assert pearson_correlation([0, 0, 1], [0, 1, 1]) == pytest.approx(1 / 2)
    assert pearson_distance([0, 1], [0, 1]) == pytest.approx(0, abs=1e-15)
    assert pearson_distance([0, 1], [1, 0]) == pytest.approx(2)
    assert pearson_distance([0, 0, 1], [0, 1, 1]) == pytest.approx(1 / 2)
    assert pearson_distance([0, 0, 1], [0, 1, 1]) == pytest.approx(naive_pearson_distance([0, 0, 1], [0, 1, 1]))


def test_correlation_undefined():
    with pytest.raises(DomainError, match="undefined"):
        pearson_correlation([1, 1], [0, 1])
    with pytest.raises(DomainError):
        pearson_correlation([0, 1], [0, 1, 2])


vectors = st.lists(st.floats(-50, 50, allow_nan=False), min_size=3, max_size=3)


@given(vectors, vectors)
def test_distance_range_symmetry_and_oracle(x, y):
    if vector_sigma(x) < 1e-3 or vector_sigma(y) < 1e-3:
        return
    d = pearson_distance(x, y)
    assert -1e-9 <= d <= 2 + 1e-9
    assert d == pytest.approx(pearson_distance(y, x), abs=1e-12)
    assert d == pytest.approx(naive_pearson_distance(x, y), abs=1e-9)


@given(vectors)
def test_self_correlation(x):
    if vector_sigma(x) < 1e-3:
        return
    assert pearson_correlation(x, x) == pytest.approx(1, abs=1e-12)


def test_noiseless_and_affine_detection():
    cb = pearson_codebook(4, 4)
    det = PearsonDetector(cb)
    for i in range(0, len(cb), 7):
        x = cb.array[i]
        for r in (x, 3 * x + 7):
            res = det.detect(r)
            assert res.decided == cb[i] and res.index == i
            assert res.distance == pytest.approx(0, abs=1e-12)
            assert not res.tie


def test_detect_small_example_against_oracle():
    cb = pearson_codebook(3, 4)
    r = (0.1, 0.9, 2.1, 1.9)
    dists = [naive_pearson_distance(r, w.symbols) for w in cb]
    best = min(range(len(cb)), key=lambda i: (dists[i], cb[i].symbols))
    res = detect_min_pearson(r, cb)
    assert res.decided == cb[best] == cb[13]
    assert res.decided.symbols == (0, 1, 2, 2)
    assert res.distance == pytest.approx(dists[best], abs=1e-12)


def test_affine_invariance_of_distance_profile():
    rng = np.random.default_rng(3)
    cb = pearson_codebook(4, 5)
    det = PearsonDetector(cb)
    for _ in range(50):
        r = rng.normal(size=5) * 2
        a, b = rng.uniform(0.01, 50), rng.uniform(-100, 100)
        base, moved = det.distances(r), det.distances(a * r + b)
        assert np.max(np.abs(base - moved)) < 1e-9
        assert det.detect(r).decided == det.detect(a * r + b).decided


def test_confusable_pair_in_non_pearson_book():
    rng = np.random.default_rng(11)
    w, v = np.array([0, 1, 2, 2]), np.array([0, 2, 4, 4])
    for _ in range(100):
        r = rng.normal(size=4)
        assert pearson_distance(r, w) == pytest.approx(pearson_distance(r, v), abs=1e-12)


def test_tie_breaks_to_lexicographically_smallest():
    cb = Codebook(3, 2, [(1, 0), (0, 1)])
    res = detect_min_euclidean([0.5, 0.5], cb)
    assert res.tie and res.decided.symbols == (0, 1)


def test_degenerate_and_bad_inputs():
    cb = pearson_codebook(3, 3)
    with pytest.raises(DegenerateInputError):
        detect_min_pearson([0.7, 0.7, 0.7], cb)
    with pytest.raises(DegenerateInputError):
        detect_min_pearson([0.1 * 3, 0.3, 0.1 + 0.2], cb)
    with pytest.raises(DomainError):
        detect_min_pearson([0, 1], cb)
    with pytest.raises(DomainError, match="constant"):
        PearsonDetector(Codebook(3, 2, [(0, 1), (2, 2)]))
    with pytest.raises(DomainError):
        PearsonDetector(Codebook(3, 2, []))


def test_euclidean_examples():
    cb = Codebook(2, 2, [(0, 1), (1, 0)])
    assert detect_min_euclidean([0.4, 0.6], cb).decided.symbols == (0, 1)
    assert detect_min_euclidean([0.4, 0.6], cb).distance == pytest.approx(0.32)
    big = pearson_codebook(4, 4)
    x = big.array[20]
    assert detect_min_euclidean(x, big).decided == big[20]
    assert detect_min_euclidean(x + 100, big).decided != big[20]


def test_batch_matches_naive_full_scan():
    rng = np.random.default_rng(2024)
    cb = pearson_codebook(3, 4)
    words = [w.symbols for w in cb]
    det = PearsonDetector(cb)
    idx = rng.integers(0, len(cb), size=10_000)
    r = 1.7 * (cb.array[idx] + rng.normal(scale=0.4, size=(10_000, 4))) - 2.0
    decided, _, _ = det.decide(r)
    for k in range(0, 10_000):
        d = [naive_pearson_distance(r[k], w) for w in words]
        best = min(d)
        expect = min(i for i in range(len(words)) if d[i] <= best + 1e-12)
        assert decided[k] == expect
