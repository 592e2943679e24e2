"""Pearson and T-constrained codebooks: enumeration, canonical forms, checks."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

import numpy as np

from .core import (
    Codebook,
    DomainError,
    Word,
    WordLike,
    _symbols,
    check_budget,
)


def canonicalize(w: WordLike, q: int | None = None) -> Word:
    """Subtract the minimum, then divide by the gcd.

    The result has minimum 0, a positive maximum and symbol gcd 1, and is
    the same for every word ``c1 + c2*w`` with ``c2 > 0``.
    """
    s = _symbols(w)
    if q is None:
        q = w.q if isinstance(w, Word) else max(s) + 1
    lo, hi = min(s), max(s)
    if lo == hi:
        raise DomainError("no canonical form (Property B): word is constant")
    shifted = [x - lo for x in s]
    g = math.gcd(*shifted)
    return Word(tuple(x // g for x in shifted), max(q, 2))


def is_canonical(w: WordLike) -> bool:
    s = _symbols(w)
    return min(s) == 0 and max(s) > 0 and math.gcd(*s) == 1


def enumerate_pearson(q: int, n: int, budget: int | None = None) -> Iterator[Word]:
    """Yield the optimal Pearson code for (q, n) in lexicographic order.

    Depth-first over positions, carrying whether a 0 has been placed and
    the running gcd; only the last position is constrained, which keeps
    the walk close to ``q**(n-1)`` nodes.
    """
    if q < 2 or n < 2:
        raise DomainError(f"need q >= 2 and n >= 2, got q={q}, n={n}")
    check_budget(q, n, budget)
    prefix = [0] * n
    last = n - 1

    def walk(pos: int, has_zero: bool, g: int):
        if pos == last:
            for s in range(q):
                if (has_zero or s == 0) and math.gcd(g, s) == 1:
                    prefix[pos] = s
                    yield Word(tuple(prefix), q)
            return
        for s in range(q):
            prefix[pos] = s
            yield from walk(pos + 1, has_zero or s == 0, math.gcd(g, s))

    yield from walk(0, False, 0)


def enumerate_t_constrained(
    q: int, n: int, refs: Iterable[int], budget: int | None = None
) -> Iterator[Word]:
    """Yield every word containing each reference symbol, lexicographically."""
    refs = frozenset(int(a) for a in refs)
    if not refs:
        raise DomainError("at least one reference symbol is required")
    if any(not 0 <= a < q for a in refs):
        raise DomainError(f"reference symbols must lie in 0..{q - 1}")
    if n < len(refs):
        raise DomainError(f"no such words: n={n} < T={len(refs)}")
    check_budget(q, n, budget)
    prefix = [0] * n

    def walk(pos: int, missing: frozenset):
        if len(missing) > n - pos:
            return
        if pos == n:
            yield Word(tuple(prefix), q)
            return
        for s in range(q):
            prefix[pos] = s
            yield from walk(pos + 1, missing - {s})

    yield from walk(0, refs)


def pearson_codebook(q: int, n: int, budget: int | None = None) -> Codebook:
    return Codebook(q, n, enumerate_pearson(q, n, budget))


def t_constrained_codebook(q: int, n: int, refs: Iterable[int], budget: int | None = None) -> Codebook:
    return Codebook(q, n, enumerate_t_constrained(q, n, refs, budget))


class ViolationKind(enum.Enum):
    PROPERTY_A = "PropertyA"
    PROPERTY_B = "PropertyB"


@dataclass(frozen=True)
class PearsonViolation:
    """Why a codebook is not a Pearson code.

    For Property A, ``witness_b == shift_c1 + scale_c2 * witness_a``
    elementwise. For Property B, ``witness_a`` is the constant word.
    """

    kind: ViolationKind
    witness_a: Word
    witness_b: Word | None = None
    scale_c2: Fraction | None = None
    shift_c1: Fraction | None = None

    def __str__(self) -> str:
        if self.kind is ViolationKind.PROPERTY_B:
            return f"{self.kind.value}: constant word {self.witness_a}"
        return (
            f"{self.kind.value}: {self.witness_b} = {self.shift_c1} + {self.scale_c2} * {self.witness_a}"
        )


class NotPearsonCodeError(DomainError):
    def __init__(self, violation: PearsonViolation):
        self.violation = violation
        super().__init__(f"codebook is not a Pearson code: {violation}")


def _affine_relation(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[Fraction, Fraction]:
    mx, my = min(x), min(y)
    c2 = Fraction(math.gcd(*(v - my for v in y)), math.gcd(*(v - mx for v in x)))
    return c2, my - c2 * mx


def verify_pearson(cb: Codebook) -> PearsonViolation | None:
    """Return None if ``cb`` satisfies Properties A and B, else the first violation.

    Words are scanned in codebook order. Two non-constant words violate
    Property A exactly when their canonical forms coincide, so a single
    pass with a dict keyed by canonical form suffices.
    """
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    for row in cb.array.tolist():
        y = tuple(row)
        lo, hi = min(y), max(y)
        if lo == hi:
            return PearsonViolation(ViolationKind.PROPERTY_B, Word(y, cb.q))
        shifted = [v - lo for v in y]
        g = math.gcd(*shifted)
        key = tuple(v // g for v in shifted)
        x = seen.get(key)
        if x is not None:
            c2, c1 = _affine_relation(x, y)
            return PearsonViolation(ViolationKind.PROPERTY_A, Word(x, cb.q), Word(y, cb.q), c2, c1)
        seen[key] = y
    return None


def is_pearson_code(cb: Codebook) -> bool:
    return verify_pearson(cb) is None


def _all_words(q: int, n: int, start: int, stop: int, dtype=np.int64) -> np.ndarray:
    """Rows ``start..stop-1`` of Q^n in lexicographic order (base-q digits)."""
    codes = np.arange(start, stop, dtype=np.int64)
    out = np.empty((codes.size, n), dtype=dtype)
    for pos in range(n - 1, -1, -1):
        out[:, pos] = codes % q
        codes //= q
    return out


def canonical_class_count(q: int, n: int, budget: int | None = None, chunk: int = 1 << 20) -> int:
    """Count distinct canonical forms over all non-constant words of Q^n.

    Brute force over the whole space, independent of the counting formulas.
    """
    if q < 2 or n < 2:
        raise DomainError(f"need q >= 2 and n >= 2, got q={q}, n={n}")
    check_budget(q, n, budget)
    total = q**n
    hit = np.zeros(total, dtype=bool)
    weights = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    dtype = np.int16 if q <= 2**15 else np.int64
    for start in range(0, total, chunk):
        words = _all_words(q, n, start, min(start + chunk, total), dtype)
        words -= words.min(axis=1, keepdims=True)
        g = np.gcd.reduce(words, axis=1)
        keep = g > 0
        canon = words[keep] // g[keep, None]
        hit[canon.astype(np.int64) @ weights] = True
    return int(hit.sum())


def build_union_example(n: int) -> Codebook:
    """The q = 4 union of the (0,3)-constrained and ternary (0,1,2)-constrained codes."""
    if n < 3:
        raise DomainError(f"need n >= 3, got {n}")
    quaternary = enumerate_t_constrained(4, n, (0, 3))
    ternary = enumerate_t_constrained(3, n, (0, 1, 2))
    words = sorted({w.symbols for w in quaternary} | {w.symbols for w in ternary})
    return Codebook(4, n, words)
