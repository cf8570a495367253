"""Exact limit shapes of normalized q-binomial coefficient bar graphs.

For fixed k the normalized coefficient measures of [n+k choose k]_q approach
a continuous density L_k on [0,1]: the k-fold convolution of the uniform
density on an interval, rescaled to [0,1].  Writing the convolution density
(Irwin-Hall) as

    IH_k(t) = 1/(k-1)! * sum_{j=0..floor(t)} (-1)^j C(k,j) (t-j)^(k-1)

gives L_k(x) = k * IH_k(k*x), one exact rational polynomial of degree k-1
per interval [i/k, (i+1)/k].  Geometrically sqrt(k) * IH_k(t) is the
(k-1)-volume of the slice of the unit k-cube by the hyperplane with
coordinate sum t.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidArguments, OutOfDomain
from .exactnum import Polynomial, Scalar


@dataclass(frozen=True)
class PiecewisePolynomial:
    """Continuous piecewise polynomial on [0,1]; piece i governs [i/k, (i+1)/k]."""

    k: int
    pieces: tuple[Polynomial, ...]

    def _piece_index(self, x: Fraction) -> int:
        if x < 0 or x > 1:
            raise OutOfDomain(f"x={x} outside [0, 1]")
        return min(int(x * self.k), self.k - 1)

    def evaluate(self, x: Scalar) -> Fraction:
        """Exact value at x; at a breakpoint both pieces agree."""
        x = Fraction(x)
        return Fraction(self.pieces[self._piece_index(x)].evaluate(x))

    def cdf(self, x: Scalar) -> Fraction:
        """Exact integral from 0 to x."""
        x = Fraction(x)
        i = self._piece_index(x)
        total = Fraction(0)
        for j in range(i):
            anti = self.pieces[j].antiderivative()
            total += anti.evaluate(Fraction(j + 1, self.k)) - anti.evaluate(Fraction(j, self.k))
        anti = self.pieces[i].antiderivative()
        total += anti.evaluate(x) - anti.evaluate(Fraction(i, self.k))
        return total


@functools.lru_cache(maxsize=None)
def limit_shape(k: int) -> PiecewisePolynomial:
    """The limit density L_k(x) = k * IH_k(k*x) with exact rational pieces."""
    if k < 1:
        raise InvalidArguments("needs k >= 1")
    scale = Fraction(k, math.factorial(k - 1))
    pieces = []
    for i in range(k):
        piece = Polynomial.zero()
        for j in range(i + 1):
            # (k*x - j)^(k-1), expanded over the integers
            term = Polynomial((-j, k)) ** (k - 1)
            piece = piece + term * ((-1) ** j * math.comb(k, j))
        pieces.append(piece * scale)
    return PiecewisePolynomial(k, tuple(pieces))


def irwin_hall_density(k: int, t: Scalar) -> Fraction:
    """Exact density of a sum of k independent uniforms on [0,1], at t in [0,k]."""
    t = Fraction(t)
    if t < 0 or t > k:
        raise OutOfDomain(f"t={t} outside [0, {k}]")
    return limit_shape(k).evaluate(t / k) / k


def cube_slice_volume(k: int, t: Scalar) -> float:
    """(k-1)-volume of the slice of [0,1]^k by the hyperplane x_1+...+x_k = t.

    Equals sqrt(k) * IH_k(t); the sqrt(k) factor makes this the one inexact
    result in the module.
    """
    return math.sqrt(k) * float(irwin_hall_density(k, t))
