"""q-integers, q-factorials, and Gaussian binomial coefficients.

The Gaussian binomial ``[N choose K]_q`` is computed three independent ways:
as an exact quotient of q-factorials, by the q-Pascal recurrence, and by a
dynamic program over partitions in a box.  The box form ``[n+k choose k]_q``
(coefficient i counts partitions of i with at most n parts, each at most k)
is the object whose coefficient sequence the rest of the package studies.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import InvalidArguments, NegativeCoefficient, ZeroPolynomial
from .exactnum import Polynomial


def q_integer(n: int) -> Polynomial:
    """[n]_q = 1 + q + ... + q^(n-1); the zero polynomial for n = 0."""
    if n < 0:
        raise InvalidArguments("q_integer needs n >= 0")
    return Polynomial((1,) * n)


@functools.lru_cache(maxsize=None)
def q_factorial(n: int) -> Polynomial:
    """[n]!_q = [n]_q [n-1]_q ... [1]_q; the empty product is 1."""
    if n < 0:
        raise InvalidArguments("q_factorial needs n >= 0")
    if n == 0:
        return Polynomial.one()
    return q_factorial(n - 1) * q_integer(n)


def q_binomial(n: int, k: int) -> Polynomial:
    """[n choose k]_q as the exact quotient [n]!_q / ([n-k]!_q [k]!_q).

    The quotient always divides exactly; a NonzeroRemainder here means a bug.
    """
    if k < 0 or n < 0 or k > n:
        raise InvalidArguments(f"q_binomial needs 0 <= k <= n, got n={n} k={k}")
    return q_factorial(n).exact_div(q_factorial(n - k) * q_factorial(k))


def q_binomial_box(n: int, k: int) -> Polynomial:
    """[n+k choose k]_q: the generating function of partitions in an n-by-k box."""
    if n < 0 or k < 0:
        raise InvalidArguments(f"q_binomial_box needs n, k >= 0, got n={n} k={k}")
    return q_binomial(n + k, k)


# Row N holds [N choose j]_q for j = 0..N.  Grown on demand; rows are only
# appended, never mutated, so concurrent readers stay deterministic.
_PASCAL_ROWS: list[list[Polynomial]] = [[Polynomial.one()]]


def q_binomial_pascal(n: int, k: int) -> Polynomial:
    """[n choose k]_q via the q-Pascal recurrence
    [N choose K]_q = [N-1 choose K-1]_q + q^K [N-1 choose K]_q,
    built bottom-up row by row with the rows memoized."""
    if k < 0 or n < 0 or k > n:
        raise InvalidArguments(f"q_binomial_pascal needs 0 <= k <= n, got n={n} k={k}")
    while len(_PASCAL_ROWS) <= n:
        prev = _PASCAL_ROWS[-1]
        row = [Polynomial.one()]
        for j in range(1, len(prev)):
            row.append(prev[j - 1] + prev[j] * Polynomial.monomial(j))
        row.append(Polynomial.one())
        _PASCAL_ROWS.append(row)
    return _PASCAL_ROWS[n][k]


def q_binomial_partition_dp(n: int, k: int) -> Polynomial:
    """[n+k choose k]_q by counting partitions directly.

    dp[c][j] is the number of partitions of j into exactly c parts with all
    parts at most s, updated as the allowed part size s grows from 1 to k.
    Coefficient j of the result sums dp[c][j] over c <= n.
    """
    if n < 0 or k < 0:
        raise InvalidArguments(f"needs n, k >= 0, got n={n} k={k}")
    top = n * k
    dp = [[0] * (top + 1) for _ in range(n + 1)]
    dp[0][0] = 1
    for s in range(1, k + 1):
        for c in range(1, n + 1):
            row, prev = dp[c], dp[c - 1]
            for j in range(s, top + 1):
                row[j] += prev[j - s]
    return Polynomial(tuple(sum(dp[c][j] for c in range(n + 1)) for j in range(top + 1)))


@dataclass(frozen=True)
class CoefficientReport:
    symmetric: bool
    unimodal: bool
    peak_index_range: tuple[int, int]
    total: int


def coefficient_report(p: Polynomial) -> CoefficientReport:
    """Symmetry, unimodality, peak plateau, and coefficient sum of p.

    Unimodality is weak: plateaus are allowed on the way up and down.
    """
    if p.is_zero():
        raise ZeroPolynomial("coefficient_report needs a nonzero polynomial")
    if any(c < 0 for c in p.coeffs):
        raise NegativeCoefficient("coefficient_report needs non-negative coefficients")
    cs = p.coeffs
    symmetric = cs == cs[::-1]
    rising = True
    unimodal = True
    for a, b in zip(cs, cs[1:]):
        if rising:
            if b < a:
                rising = False
        elif b > a:
            unimodal = False
            break
    peak = max(cs)
    first = cs.index(peak)
    last = len(cs) - 1 - cs[::-1].index(peak)
    return CoefficientReport(
        symmetric=symmetric,
        unimodal=unimodal,
        peak_index_range=(first, last),
        total=p.evaluate(1),
    )
