"""Pearson distance and minimum-distance detectors."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Codebook, DomainError, Word

TIE_TOL = 1e-12
# sigma of a received vector below this fraction of its peak magnitude is treated as zero
DEGENERATE_RTOL = 1e-12


class DegenerateInputError(DomainError):
    """The received vector is (numerically) constant, so its Pearson distance is undefined."""


def _vec(v) -> np.ndarray:
    a = np.asarray(v, dtype=float)
    if a.ndim != 1 or a.size == 0:
        raise DomainError("expected a non-empty 1-d vector")
    return a


def vector_mean(v) -> float:
    return float(_vec(v).mean())


def vector_sigma(v) -> float:
    """Square root of the sum of squared deviations (not divided by n)."""
    a = _vec(v)
    d = a - a.mean()
    return float(np.sqrt(d @ d))


def pearson_correlation(x, y) -> float:
    x, y = _vec(x), _vec(y)
    if x.shape != y.shape:
        raise DomainError(f"length mismatch: {x.size} vs {y.size}")
    dx, dy = x - x.mean(), y - y.mean()
    sx, sy = np.sqrt(dx @ dx), np.sqrt(dy @ dy)
    if sx == 0 or sy == 0:
        raise DomainError("correlation undefined: a vector has sigma = 0")
    return float((dx / sx) @ (dy / sy))


def pearson_distance(x, y) -> float:
    return 1.0 - pearson_correlation(x, y)


@dataclass(frozen=True)
class DetectionResult:
    decided: Word
    distance: float
    tie: bool
    index: int


def _lex_rank(array: np.ndarray) -> np.ndarray:
    order = np.lexsort(array.T[::-1])
    rank = np.empty(len(order), dtype=np.int64)
    rank[order] = np.arange(len(order))
    return rank


class _Detector:
    chunk = 2048

    def __init__(self, cb: Codebook):
        if len(cb) == 0:
            raise DomainError("cannot detect over an empty codebook")
        self.codebook = cb
        self._rank = _lex_rank(cb.array)

    def _check_shape(self, r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        r = np.atleast_2d(r)
        if r.shape[1] != self.codebook.n:
            raise DomainError(f"received length {r.shape[1]} != codeword length {self.codebook.n}")
        return r

    def distances(self, r) -> np.ndarray:
        """Distance from each received row to every codeword, shape ``(rows, len(cb))``."""
        raise NotImplementedError

    def _pick(self, dist: np.ndarray):
        best = dist.min(axis=1, keepdims=True)
        near = dist <= best + TIE_TOL
        idx = np.where(near, self._rank, np.iinfo(np.int64).max).argmin(axis=1)
        ties = near.sum(axis=1) > 1
        return idx, dist[np.arange(len(idx)), idx], ties

    def decide(self, r):
        """Batch decisions for rows of ``r``: ``(indices, distances, ties)``."""
        r = self._check_shape(r)
        out = [self._pick(self.distances(r[i : i + self.chunk])) for i in range(0, len(r), self.chunk)]
        if not out:
            return np.empty(0, np.int64), np.empty(0), np.empty(0, bool)
        return tuple(np.concatenate(parts) for parts in zip(*out))

    def detect(self, r) -> DetectionResult:
        idx, dist, ties = self.decide(np.asarray(r, dtype=float)[None, :])
        i = int(idx[0])
        return DetectionResult(self.codebook[i], float(dist[0]), bool(ties[0]), i)


class PearsonDetector(_Detector):
    """Minimum Pearson distance detector over a fixed codebook.

    Normalized codeword deviations are computed once; each decision is a
    matrix product against the normalized received vector.
    """

    def __init__(self, cb: Codebook):
        super().__init__(cb)
        x = cb.array.astype(float)
        dev = x - x.mean(axis=1, keepdims=True)
        sig = np.sqrt((dev * dev).sum(axis=1))
        if np.any(sig == 0):
            bad = cb[int(np.flatnonzero(sig == 0)[0])]
            raise DomainError(f"codebook contains constant word {bad}; Pearson distance undefined")
        self._unit = dev / sig[:, None]

    def distances(self, r) -> np.ndarray:
        r = self._check_shape(r)
        dev = r - r.mean(axis=1, keepdims=True)
        sig = np.sqrt((dev * dev).sum(axis=1))
        peak = np.abs(r).max(axis=1)
        bad = ~(sig > DEGENERATE_RTOL * peak)
        if np.any(bad):
            raise DegenerateInputError("received vector has sigma = 0; Pearson distance undefined")
        return 1.0 - (dev / sig[:, None]) @ self._unit.T


class EuclideanDetector(_Detector):
    """Minimum squared Euclidean distance detector (gain/offset-unaware baseline)."""

    chunk = 256

    def __init__(self, cb: Codebook):
        super().__init__(cb)
        self._x = cb.array.astype(float)

    def distances(self, r) -> np.ndarray:
        r = self._check_shape(r)
        diff = r[:, None, :] - self._x[None, :, :]
        return np.einsum("ijk,ijk->ij", diff, diff)


def detect_min_pearson(r, cb: Codebook) -> DetectionResult:
    return PearsonDetector(cb).detect(r)


def detect_min_euclidean(r, cb: Codebook) -> DetectionResult:
    return EuclideanDetector(cb).detect(r)
