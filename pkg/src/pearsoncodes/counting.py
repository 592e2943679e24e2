"""Exact cardinalities and redundancies.

All counts are Python integers, so nothing overflows. Redundancies are
floats computed from the exact counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import DomainError

FACTOR_CACHE_SIZE = 10**6


@lru_cache(maxsize=FACTOR_CACHE_SIZE)
def factorize(m: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``m >= 1`` as ``((p, e), ...)`` by trial division."""
    if m < 1:
        raise DomainError(f"cannot factor {m}")
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def mobius(d: int) -> int:
    if d < 1:
        raise DomainError(f"Mobius function needs d >= 1, got {d}")
    factors = factorize(d)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def totient(j: int) -> int:
    if j < 1:
        raise DomainError(f"totient needs j >= 1, got {j}")
    result = j
    for p, _ in factorize(j):
        result -= result // p
    return result


def _check_qn(q: int, n: int) -> None:
    if q < 2 or n < 2:
        raise DomainError(f"need q >= 2 and n >= 2, got q={q}, n={n}")


def count_t_constrained(q: int, n: int, t: int) -> int:
    """Number of q-ary length-n words containing each of ``t`` given symbols."""
    if t < 1 or t > q:
        raise DomainError(f"need 1 <= T <= q, got T={t}, q={q}")
    if n < t:
        raise DomainError(f"no such words: n={n} < T={t}")
    return sum((-1) ** i * math.comb(t, t - i) * (q - i) ** n for i in range(t + 1))


def count_1_constrained(q: int, n: int) -> int:
    return count_t_constrained(q, n, 1)


def count_2_constrained(q: int, n: int) -> int:
    return count_t_constrained(q, n, 2)


def count_pearson_closed(q: int, n: int) -> int:
    """Size of the optimal Pearson code via the Mobius sum over d = 1..q-1."""
    _check_qn(q, n)
    total = 0
    for d in range(1, q):
        mu = mobius(d)
        if mu:
            k = (q - 1) // d
            total += mu * ((k + 1) ** n - k**n - 1)
    return total


def count_pearson_recursive(q: int, n: int) -> int:
    """Size of the optimal Pearson code by climbing the divisor recursion in q.

    For each alphabet size ``s`` the increments ``P[i] - P[i-1]`` over all
    ``i`` in ``2..s`` with ``(i - 1) | (s - 1)`` add up to ``N_2(s, n)``. The
    ``i = s`` increment is the only unknown at step ``s``.
    """
    _check_qn(q, n)
    p = [0, 0]  # p[s] = P_{s,n}; P_{1,n} = 0
    for s in range(2, q + 1):
        known = 0
        for i in range(2, s):
            if (s - 1) % (i - 1) == 0:
                known += p[i] - p[i - 1]
        p.append(p[s - 1] + count_2_constrained(s, n) - known)
    return p[q]


def count_pearson_n2(q: int) -> int:
    if q < 2:
        raise DomainError(f"need q >= 2, got {q}")
    return 2


def count_pearson_n3(q: int) -> int:
    if q < 2:
        raise DomainError(f"need q >= 2, got {q}")
    return 6 * sum(totient(j) for j in range(1, q))


def pearson_polynomial(q: int) -> dict[int, int]:
    """``P_{q,n}`` as an exponential polynomial in n, ``{base: coefficient}``.

    ``P_{q,n} = sum(c * b**n for b, c in pearson_polynomial(q).items())``
    for every ``n >= 2``; base 1 carries the constant term.
    """
    if q < 2:
        raise DomainError(f"need q >= 2, got {q}")
    terms: dict[int, int] = {}
    for d in range(1, q):
        mu = mobius(d)
        if mu:
            k = (q - 1) // d
            for base, c in ((k + 1, mu), (k, -mu), (1, -mu)):
                terms[base] = terms.get(base, 0) + c
    return {b: c for b, c in sorted(terms.items(), reverse=True) if c and b}


def evaluate_polynomial(poly: dict[int, int], n: int) -> int:
    return sum(c * b**n for b, c in poly.items())


def format_polynomial(poly: dict[int, int]) -> str:
    """Render e.g. ``{4: 1, 3: -1, 2: -2, 1: 3}`` as ``4^n-3^n-2*2^n+3``."""
    parts = []
    for b, c in poly.items():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if b == 1:
            body = str(mag)
        else:
            body = f"{b}^n" if mag == 1 else f"{mag}*{b}^n"
        parts.append(sign + body)
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text or "0"


def pearson_asymptotic_gap(q: int, n: int) -> int:
    """``|P_{q,n} - (q**n - (q-1)**n)|``, exact."""
    _check_qn(q, n)
    return abs(count_pearson_closed(q, n) - (q**n - (q - 1) ** n))


def redundancy(q: int, n: int, size: int) -> float:
    """``n - log_q(size)`` without cancellation for sizes close to ``q**n``."""
    if size < 1:
        raise DomainError("redundancy of an empty code is undefined")
    total = q**n
    deficit = Fraction(total - size, total)
    if deficit < Fraction(1, 2):
        return -math.log1p(-float(deficit)) / math.log(q)
    return n - math.log(size) / math.log(q)


def r0_approx(q: int, n: int) -> float | None:
    """Redundancy estimate for balanced, equal-energy codes; None for q = 2."""
    if q < 3:
        return None
    lq = math.log(q)
    return (
        math.log(n) / lq
        + math.log((q * q - 1) * math.sqrt(q * q - 4)) / lq
        + math.log(math.pi / (12 * math.sqrt(15))) / lq
    )


@dataclass(frozen=True)
class RedundancyReport:
    q: int
    n: int
    r1: float
    r2: float
    rP: float
    r1_approx: float
    r2_approx: float
    rP_approx: float
    r0_approx: float | None


def redundancy_report(q: int, n: int) -> RedundancyReport:
    _check_qn(q, n)
    lq = math.log(q)
    rp = redundancy(q, n, count_pearson_closed(q, n))
    return RedundancyReport(
        q=q,
        n=n,
        r1=redundancy(q, n, count_1_constrained(q, n)),
        r2=redundancy(q, n, count_2_constrained(q, n)),
        rP=rp,
        r1_approx=((q - 1) / q) ** n / lq,
        r2_approx=(2 * ((q - 1) / q) ** n - ((q - 2) / q) ** n) / lq,
        rP_approx=rp,
        r0_approx=r0_approx(q, n),
    )
