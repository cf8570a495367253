"""Normalized coefficient measures and convergence diagnostics.

A polynomial with non-negative coefficients becomes a probability measure on
[0,1]: a point mass at i/deg with weight coeff(i) / (sum of coefficients).
Convergence to a limit shape is quantified by the Kolmogorov-Smirnov
distance, computed exactly at the atoms (where the supremum against a
continuous CDF is attained) and only then rounded to a float.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidArguments, NegativeCoefficient, ZeroPolynomial
from .exactnum import Polynomial
from .qcore import q_binomial_box
from .shape import PiecewisePolynomial, limit_shape


@dataclass(frozen=True)
class EmpiricalMeasure:
    """Point masses (location, mass); masses are exact and sum to 1."""

    atoms: tuple[tuple[Fraction, Fraction], ...]
    source_degree: int


def measure_from_polynomial(p: Polynomial) -> EmpiricalMeasure:
    """Atom i at i/deg(p) with mass coeff(i)/p(1).

    A degree-0 polynomial collapses to a single unit mass at 0.
    """
    if p.is_zero():
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    if any(c < 0 for c in p.coeffs):
        raise NegativeCoefficient("measure needs non-negative coefficients")
    d = p.degree
    if d == 0:
        return EmpiricalMeasure(((Fraction(0), Fraction(1)),), 0)
    total = p.evaluate(1)
    atoms = tuple(
        (Fraction(i, d), Fraction(c, total)) for i, c in enumerate(p.coeffs)
    )
    return EmpiricalMeasure(atoms, d)


def ks_distance(em: EmpiricalMeasure, shape: PiecewisePolynomial) -> float:
    """Kolmogorov-Smirnov distance between the measure and the shape.

    The shape CDF is continuous and the empirical CDF is a right-continuous
    step function, so the supremum of their difference is attained at an
    atom, approached either at the atom or from its left.  Both candidates
    are compared exactly; only the final maximum becomes a float.
    """
    best = Fraction(0)
    cumulative = Fraction(0)
    for x, mass in em.atoms:
        target = shape.cdf(x)
        below = abs(cumulative - target)
        cumulative += mass
        at = abs(cumulative - target)
        if below > best:
            best = below
        if at > best:
            best = at
    return float(best)


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    ks: float


def convergence_table(k: int, n_list: Sequence[int]) -> list[ConvergenceRow]:
    """KS distance of [n+k choose k]_q's coefficient measure to L_k, per n."""
    ns = list(n_list)
    if not ns:
        raise InvalidArguments("n_list must be non-empty")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise InvalidArguments("n_list must be strictly increasing")
    target = limit_shape(k)
    return [
        ConvergenceRow(n, ks_distance(measure_from_polynomial(q_binomial_box(n, k)), target))
        for n in ns
    ]
