"""Exact arithmetic substrate: dense univariate polynomials and a rational solver.

Arbitrary-precision integers are plain Python ``int``; exact rationals are
``fractions.Fraction`` (always reduced, denominator positive).  A polynomial
is a dense tuple of coefficients, ``coeffs[i]`` holding the coefficient of
the i-th power.  The zero polynomial is the empty tuple, so the degree is
always ``len(coeffs) - 1``.  Coefficients may be ``int`` or ``Fraction``;
all operations are exact and every value is immutable.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import NonzeroRemainder, SingularSystem

Scalar = Union[int, Fraction]


@dataclass(frozen=True, init=False)
class Polynomial:
    coeffs: tuple[Scalar, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls) -> Polynomial:
        return cls(())

    @classmethod
    def one(cls) -> Polynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: Scalar = 1) -> Polynomial:
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        return cls((0,) * exponent + (coefficient,))

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,))
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Polynomial:
        return Polynomial((other,)) - self

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, den: Polynomial) -> Polynomial:
        """Quotient of an exact division; raises NonzeroRemainder otherwise.

        Division runs over the fraction field, so an integer quotient comes
        out with integer coefficients whenever the inputs are integral and
        the division is exact.
        """
        if den.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return Polynomial(())
        num = list(self.coeffs)
        d = den.coeffs
        lead = d[-1]
        qdeg = len(num) - len(d)
        if qdeg < 0:
            raise NonzeroRemainder(f"degree {self.degree} < degree {den.degree}")
        quot = [0] * (qdeg + 1)
        for s in range(qdeg, -1, -1):
            top = num[s + len(d) - 1]
            if top == 0:
                continue
            t = Fraction(top, lead) if top % lead else top // lead
            quot[s] = t
            for j, dj in enumerate(d):
                num[s + j] -= t * dj
        if any(c != 0 for c in num[: len(d) - 1]):
            raise NonzeroRemainder("inputs are not exactly divisible")
        return Polynomial(quot)

    def evaluate(self, x: Scalar) -> Scalar:
        """Exact Horner evaluation; returns Fraction when x or coeffs are."""
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def antiderivative(self) -> Polynomial:
        """Antiderivative with zero constant term, exact over Fractions."""
        return Polynomial((0,) + tuple(Fraction(c, i + 1) for i, c in enumerate(self.coeffs)))

    def taylor_shift(self, h: Scalar) -> Polynomial:
        """The polynomial p(x + h), expanded exactly."""
        n = len(self.coeffs)
        if n == 0 or h == 0:
            return self
        out: list[Scalar] = [0] * n
        for j in range(n):
            binom = 1
            hp: Scalar = 1
            for i in range(j, n):
                out[j] += self.coeffs[i] * binom * hp
                binom = binom * (i + 1) // (i + 1 - j)
                hp = hp * h
        return Polynomial(out)

    def scale_arg(self, a: Scalar) -> Polynomial:
        """The polynomial p(a * x)."""
        out = []
        power: Scalar = 1
        for c in self.coeffs:
            out.append(c * power)
            power = power * a
        return Polynomial(out)

    def to_string(self, var: str = "q", descending: bool = False) -> str:
        """Human-readable rendering, rationals as num/den (e.g. "1/2 m + 1")."""
        if not self.coeffs:
            return "0"
        terms = []
        indices = range(len(self.coeffs))
        if descending:
            indices = reversed(indices)
        for i in indices:
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else f"{mag} "
                body = f"{head}{var}" if i == 1 else f"{head}{var}^{i}"
            terms.append(("-" if c < 0 else "+", body))
        sign, first = terms[0]
        text = first if sign == "+" else f"-{first}"
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def solve_linear_rational(
    matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]
) -> list[Fraction]:
    """Solve a square linear system exactly by rational Gaussian elimination.

    Raises SingularSystem when the matrix is not invertible.
    """
    n = len(rhs)
    if any(len(row) != n for row in matrix) or len(matrix) != n:
        raise ValueError("system must be square")
    a = [[Fraction(x) for x in row] for row in matrix]
    b = [Fraction(x) for x in rhs]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise SingularSystem(f"no pivot in column {col}")
        a[col], a[pivot] = a[pivot], a[col]
        b[col], b[pivot] = b[pivot], b[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        b[col] *= inv
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                b[r] -= f * b[col]
    return b
