"""Gain/offset/Gaussian-noise channel and a Monte Carlo word-error harness.

The received vector is ``a * (x + noise) + b`` with one gain ``a > 0`` and
one offset ``b`` per word. Noise is added before the gain, so the noise
sequence for a given seed does not depend on ``(a, b)``; together with the
affine invariance of the Pearson distance this makes Pearson decisions
identical across gain/offset settings, trial by trial.

Reproducibility: trials are cut into fixed-size blocks. Block ``k`` draws
from ``numpy.random.Generator(PCG64(SeedSequence(seed, spawn_key=(k,))))``,
first the codeword indices (``Generator.integers``) and then the noise
(``Generator.standard_normal``, numpy's ziggurat sampler). Results do not
depend on how blocks are spread over worker threads.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .codebook import NotPearsonCodeError, verify_pearson
from .core import Codebook, DomainError
from .detection import EuclideanDetector, PearsonDetector

RNG_NAME = "numpy-PCG64/SeedSequence(seed,spawn_key=(block,))/standard_normal-ziggurat"
BLOCK_SIZE = 4096
DETECTORS = ("pearson", "euclidean")


@dataclass(frozen=True)
class ChannelParams:
    gain: float = 1.0
    offset: float = 0.0
    noise_sigma: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if not self.gain > 0:
            raise DomainError(f"gain must be positive, got {self.gain}")
        if not self.noise_sigma >= 0:
            raise DomainError(f"noise sigma must be >= 0, got {self.noise_sigma}")
        if not 0 <= self.seed < 2**64:
            raise DomainError("seed must be a 64-bit unsigned integer")


def block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(block,))))


def transmit(x, params: ChannelParams, rng: np.random.Generator | None = None) -> np.ndarray:
    """Send one word (or a batch of words, one per row) through the channel."""
    x = np.asarray(x, dtype=float)
    if params.noise_sigma > 0:
        if rng is None:
            rng = block_rng(params.seed, 0)
        noise = params.noise_sigma * rng.standard_normal(x.shape)
    else:
        noise = 0.0
    return params.gain * (x + noise) + params.offset


def wer_ci_halfwidth(errors: int, trials: int, z: float = 1.959963984540054) -> float:
    """95% normal-approximation half-width of a word error rate."""
    p = errors / trials
    return z * math.sqrt(p * (1 - p) / trials)


@dataclass(frozen=True)
class TrialRecord:
    """Per-trial outcome for one detector: sent and decided codebook indices."""

    sent: np.ndarray
    decided: np.ndarray
    ties: np.ndarray

    @property
    def errors(self) -> int:
        return int(np.count_nonzero(self.sent != self.decided))


def _detector(name: str, cb: Codebook):
    if name == "pearson":
        return PearsonDetector(cb)
    if name == "euclidean":
        return EuclideanDetector(cb)
    raise DomainError(f"unknown detector {name!r}; choose from {DETECTORS}")


def _run_block(cb, params, detectors, block, size):
    rng = block_rng(params.seed, block)
    sent = rng.integers(0, len(cb), size=size)
    r = transmit(cb.array[sent], params, rng)
    return sent, {name: det.decide(r) for name, det in detectors.items()}


def simulate(
    cb: Codebook,
    params: ChannelParams,
    trials: int,
    detectors=DETECTORS,
    workers: int = 1,
    block_size: int = BLOCK_SIZE,
) -> dict[str, TrialRecord]:
    """Run ``trials`` uniform-codeword transmissions and keep every decision."""
    if trials < 1:
        raise DomainError("need at least one trial")
    detectors = tuple(dict.fromkeys(detectors))
    if "pearson" in detectors:
        violation = verify_pearson(cb)
        if violation is not None:
            raise NotPearsonCodeError(violation)
    dets = {name: _detector(name, cb) for name in detectors}
    blocks = [(k, min(block_size, trials - k * block_size)) for k in range(math.ceil(trials / block_size))]
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda kb: _run_block(cb, params, dets, *kb), blocks))
    else:
        parts = [_run_block(cb, params, dets, *kb) for kb in blocks]
    sent = np.concatenate([p[0] for p in parts])
    out = {}
    for name in detectors:
        decided = np.concatenate([p[1][name][0] for p in parts])
        ties = np.concatenate([p[1][name][2] for p in parts])
        out[name] = TrialRecord(sent, decided, ties)
    return out


@dataclass(frozen=True)
class TrialStats:
    trials: int
    word_errors_pearson: int | None = None
    word_errors_euclidean: int | None = None
    ties_pearson: int | None = None
    seed: int = 0
    rng: str = field(default=RNG_NAME)

    @property
    def wer_pearson(self) -> float | None:
        if self.word_errors_pearson is None:
            return None
        return self.word_errors_pearson / self.trials

    @property
    def wer_euclidean(self) -> float | None:
        if self.word_errors_euclidean is None:
            return None
        return self.word_errors_euclidean / self.trials

    def ci_halfwidth(self, detector: str) -> float | None:
        errors = getattr(self, f"word_errors_{detector}")
        return None if errors is None else wer_ci_halfwidth(errors, self.trials)

    @property
    def wer_ci_halfwidth(self) -> float:
        """Largest 95% half-width among the detectors that ran."""
        widths = [w for w in (self.ci_halfwidth(d) for d in DETECTORS) if w is not None]
        return max(widths)


def run_experiment(
    cb: Codebook,
    params: ChannelParams,
    trials: int,
    detectors=DETECTORS,
    workers: int = 1,
) -> TrialStats:
    records = simulate(cb, params, trials, detectors, workers)
    pearson = records.get("pearson")
    euclid = records.get("euclidean")
    return TrialStats(
        trials=trials,
        word_errors_pearson=None if pearson is None else pearson.errors,
        word_errors_euclidean=None if euclid is None else euclid.errors,
        ties_pearson=None if pearson is None else int(pearson.ties.sum()),
        seed=params.seed,
    )


def two_proportion_z(errors_a: int, errors_b: int, trials: int) -> float:
    """z statistic for ``wer_a > wer_b`` with a pooled variance, equal trial counts."""
    pa, pb = errors_a / trials, errors_b / trials
    pooled = (errors_a + errors_b) / (2 * trials)
    se = math.sqrt(2 * pooled * (1 - pooled) / trials)
    if se == 0:
        return math.inf if pa > pb else 0.0
    return (pa - pb) / se
