"""Words, codebooks and the codebook text format.

Symbols are plain nonnegative integers drawn from {0, ..., q-1}. They are
never reduced modulo q: scaling and shifting a word is ordinary integer
arithmetic.

The codebook text format is line oriented::

    # optional comment lines
    q n
    s_1 s_2 ... s_n
    ...

The first non-comment line holds the alphabet size and word length, each
following non-comment line one word as space separated decimal symbols.
"""

from __future__ import annotations

import io
import math
import os
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence, TextIO, Union

import numpy as np


class PearsonError(Exception):
    """Base class for errors raised by this package."""


class DomainError(PearsonError, ValueError):
    """An argument lies outside the domain of an operation."""


class BudgetExceededError(PearsonError, RuntimeError):
    """An enumeration would visit more candidates than allowed."""


class CodebookFormatError(DomainError):
    """Malformed codebook file. ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


DEFAULT_BUDGET = 10**9


def check_budget(q: int, n: int, budget: int | None) -> None:
    budget = DEFAULT_BUDGET if budget is None else budget
    if q**n > budget:
        raise BudgetExceededError(
            f"enumerating {q}^{n} = {q**n} candidates exceeds the budget of {budget}"
        )


@dataclass(frozen=True)
class Word:
    """A q-ary word of length ``n = len(symbols)``."""

    symbols: tuple[int, ...]
    q: int

    def __post_init__(self):
        symbols = tuple(int(s) for s in self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if self.q < 2:
            raise DomainError(f"alphabet size must be >= 2, got {self.q}")
        if not symbols:
            raise DomainError("a word needs at least one symbol")
        for s in symbols:
            if not 0 <= s < self.q:
                raise DomainError(f"symbol {s} outside 0..{self.q - 1}")

    @property
    def n(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __lt__(self, other: Word) -> bool:
        return self.symbols < other.symbols

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.symbols)) + ")"


WordLike = Union[Word, Sequence[int]]


def _symbols(w: WordLike) -> tuple[int, ...]:
    if isinstance(w, Word):
        return w.symbols
    return tuple(int(s) for s in w)


def word_min(w: WordLike) -> int:
    return min(_symbols(w))


def word_max(w: WordLike) -> int:
    return max(_symbols(w))


def word_gcd(w: WordLike) -> int:
    """Greatest common divisor of the symbols; zeros do not contribute."""
    s = _symbols(w)
    g = reduce(math.gcd, s, 0)
    if g == 0:
        raise DomainError("gcd undefined for zero word")
    return g


def is_constant(w: WordLike) -> bool:
    s = _symbols(w)
    return min(s) == max(s)


class Codebook:
    """An ordered, duplicate-free, immutable collection of words sharing (q, n).

    Words are kept in the order given. The enumerators in
    :mod:`pearsoncodes.codebook` produce lexicographic order.
    """

    __slots__ = ("_q", "_n", "_array", "_index")

    def __init__(self, q: int, n: int, words: Iterable[WordLike] = ()):
        if q < 2:
            raise DomainError(f"alphabet size must be >= 2, got {q}")
        if n < 1:
            raise DomainError(f"word length must be >= 1, got {n}")
        rows = []
        index = {}
        for w in words:
            s = _symbols(w)
            if len(s) != n:
                raise DomainError(f"word {s} has length {len(s)}, expected {n}")
            if isinstance(w, Word) and w.q != q:
                raise DomainError(f"word {w} has alphabet size {w.q}, expected {q}")
            if any(not 0 <= x < q for x in s):
                raise DomainError(f"word {s} has a symbol outside 0..{q - 1}")
            if s in index:
                raise DomainError(f"duplicate word {s}")
            index[s] = len(rows)
            rows.append(s)
        arr = np.array(rows, dtype=np.int64).reshape(len(rows), n)
        arr.flags.writeable = False
        self._q, self._n, self._array, self._index = q, n, arr, index

    @classmethod
    def from_array(cls, q: int, array: np.ndarray) -> Codebook:
        array = np.asarray(array)
        return cls(q, array.shape[1], (tuple(row) for row in array.tolist()))

    @property
    def q(self) -> int:
        return self._q

    @property
    def n(self) -> int:
        return self._n

    @property
    def array(self) -> np.ndarray:
        """Read-only ``(len(self), n)`` integer array of the words."""
        return self._array

    def __len__(self) -> int:
        return self._array.shape[0]

    def __iter__(self) -> Iterator[Word]:
        for s in self._index:
            yield Word(s, self._q)

    def __getitem__(self, i: int) -> Word:
        return Word(tuple(self._array[i].tolist()), self._q)

    def __contains__(self, w) -> bool:
        return _symbols(w) in self._index

    def index(self, w: WordLike) -> int:
        return self._index[_symbols(w)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Codebook):
            return NotImplemented
        return (
            self._q == other._q
            and self._n == other._n
            and list(self._index) == list(other._index)
        )

    def __hash__(self):
        return hash((self._q, self._n, tuple(self._index)))

    def __repr__(self) -> str:
        return f"Codebook(q={self._q}, n={self._n}, size={len(self)})"

    def sorted(self) -> Codebook:
        return Codebook(self._q, self._n, sorted(self._index))

    def union(self, other: Codebook) -> Codebook:
        if (self._q, self._n) != (other._q, other._n):
            raise DomainError("codebooks differ in (q, n)")
        merged = set(self._index) | set(other._index)
        return Codebook(self._q, self._n, sorted(merged))


def write_codebook(cb: Codebook, dest: Union[str, os.PathLike, TextIO], comment: str | None = None) -> None:
    if isinstance(dest, (str, os.PathLike)):
        with open(dest, "w") as fh:
            write_codebook(cb, fh, comment)
        return
    if comment:
        for line in comment.splitlines():
            dest.write(f"# {line}\n")
    dest.write(f"{cb.q} {cb.n}\n")
    for row in cb.array.tolist():
        dest.write(" ".join(map(str, row)) + "\n")


def dumps_codebook(cb: Codebook, comment: str | None = None) -> str:
    buf = io.StringIO()
    write_codebook(cb, buf, comment)
    return buf.getvalue()


def read_codebook(src: Union[str, os.PathLike, TextIO]) -> Codebook:
    if isinstance(src, (str, os.PathLike)):
        with open(src) as fh:
            return read_codebook(fh)
    return loads_codebook(src.read())


def loads_codebook(text: str) -> Codebook:
    header = None
    words = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            fields = [int(tok) for tok in line.split()]
        except ValueError:
            raise CodebookFormatError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(fields) != 2:
                raise CodebookFormatError("header must be 'q n'", lineno)
            q, n = fields
            if q < 2 or n < 1:
                raise CodebookFormatError(f"invalid header q={q} n={n}", lineno)
            header = (q, n)
            continue
        q, n = header
        if len(fields) != n:
            raise CodebookFormatError(f"expected {n} symbols, got {len(fields)}", lineno)
        if any(not 0 <= s < q for s in fields):
            raise CodebookFormatError(f"symbol outside 0..{q - 1}", lineno)
        key = tuple(fields)
        if key in seen:
            raise CodebookFormatError(f"duplicate of the word on line {seen[key]}", lineno)
        seen[key] = lineno
        words.append(key)
    if header is None:
        raise CodebookFormatError("missing 'q n' header")
    return Codebook(header[0], header[1], words)
