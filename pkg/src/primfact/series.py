"""Exact univariate polynomials, truncated power series, and rational functions.

Coefficients are exact rationals: plain ``int`` or ``fractions.Fraction``
(both satisfy ``numbers.Rational``); no floating point anywhere.  The
indeterminate prints as ``z``.

``RationalFunction`` keeps a normalized form: numerator and denominator share
no polynomial factor (exact GCD), and the denominator is scaled so its
lowest-degree nonzero coefficient is 1.  Printing clears denominators so the
displayed coefficients are integers whenever possible, e.g.
``2*z^2 / (1 - 5*z^2 + 4*z^4)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Coef = Union[int, Fraction]

__all__ = ["Polynomial", "PowerSeries", "RationalFunction", "geometric_product_series"]


def _trim(coeffs: Sequence[Coef]) -> tuple[Coef, ...]:
    last = -1
    for i, c in enumerate(coeffs):
        if c != 0:
            last = i
    return tuple(coeffs[: last + 1])


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial; coeffs[i] is the coefficient of z^i, trailing zeros trimmed."""

    coeffs: tuple[Coef, ...]

    @staticmethod
    def of(*coeffs: Coef) -> "Polynomial":
        return Polynomial(_trim(coeffs))

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial(())

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial((1,))

    @staticmethod
    def monomial(coeff: Coef, power: int) -> "Polynomial":
        if coeff == 0:
            return Polynomial(())
        return Polynomial((0,) * power + (coeff,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(_trim([x + y for x, y in zip(a, b)]))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(_trim(out))

    def scale(self, factor: Coef) -> "Polynomial":
        return Polynomial(_trim([c * factor for c in self.coeffs]))

    def __call__(self, z: Coef) -> Coef:
        result: Coef = 0
        for c in reversed(self.coeffs):
            result = result * z + c
        return result

    def divmod(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [0] * max(len(rem) - len(divisor.coeffs) + 1, 0)
        dlead = Fraction(divisor.coeffs[-1])
        ddeg = divisor.degree
        for i in range(len(rem) - 1, ddeg - 1, -1):
            if rem[i] == 0:
                continue
            q = rem[i] / dlead
            quot[i - ddeg] = q
            for j, dc in enumerate(divisor.coeffs):
                rem[i - ddeg + j] -= q * dc
        return Polynomial(_trim(quot)), Polynomial(_trim(rem))

    def series(self, order: int) -> "PowerSeries":
        coeffs = self.coeffs[: order + 1]
        return PowerSeries(coeffs + (0,) * (order + 1 - len(coeffs)))

    def __str__(self) -> str:
        return format_polynomial(self.coeffs)


def polynomial_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic GCD by the Euclidean algorithm over the rationals."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    if a.is_zero():
        return a
    return a.scale(Fraction(1, 1) / Fraction(a.coeffs[-1]))


@dataclass(frozen=True)
class PowerSeries:
    """Truncated series; coeffs has length order+1 and arithmetic respects the cut."""

    coeffs: tuple[Coef, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant term")

    @staticmethod
    def of(coeffs: Sequence[Coef]) -> "PowerSeries":
        return PowerSeries(tuple(coeffs))

    @staticmethod
    def one(order: int) -> "PowerSeries":
        return PowerSeries((1,) + (0,) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Coef:
        return self.coeffs[k]

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        return PowerSeries(
            tuple(self.coeffs[k] + other.coeffs[k] for k in range(order + 1))
        )

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a == 0:
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return PowerSeries(tuple(out))

    def scale(self, factor: Coef) -> "PowerSeries":
        return PowerSeries(tuple(c * factor for c in self.coeffs))

    def power(self, exponent: int) -> "PowerSeries":
        result = PowerSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self) -> "PowerSeries":
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series has no inverse: zero constant term")
        lead = Fraction(1, 1) / Fraction(self.coeffs[0])
        out: list[Coef] = [lead if lead.denominator != 1 else int(lead)]
        for k in range(1, self.order + 1):
            acc = sum(self.coeffs[j] * out[k - j] for j in range(1, k + 1))
            out.append(-acc * out[0])
        return PowerSeries(tuple(out))


@dataclass(frozen=True)
class RationalFunction:
    """Quotient of polynomials, stored with GCD removed and the denominator's
    lowest-degree nonzero coefficient equal to 1."""

    num: Polynomial
    den: Polynomial

    @staticmethod
    def of(num: Polynomial, den: Polynomial) -> "RationalFunction":
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return RationalFunction(Polynomial.zero(), Polynomial.one())
        g = polynomial_gcd(num, den)
        num = num.divmod(g)[0]
        den = den.divmod(g)[0]
        anchor = next(c for c in den.coeffs if c != 0)
        scale = Fraction(1, 1) / Fraction(anchor)
        return RationalFunction(_intify(num.scale(scale)), _intify(den.scale(scale)))

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.of(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __call__(self, z: Coef) -> Fraction:
        den = self.den(z)
        if den == 0:
            raise ZeroDivisionError(f"pole at z = {z}")
        return Fraction(self.num(z)) / Fraction(den)

    def series(self, order: int) -> PowerSeries:
        return self.num.series(order) * self.den.series(order).inverse()

    def __str__(self) -> str:
        num, den = _integer_normalized(self.num, self.den)
        if den.degree == 0 and den.coeffs == (1,):
            return format_polynomial(num.coeffs)
        num_str = format_polynomial(num.coeffs)
        if sum(1 for c in num.coeffs if c != 0) > 1:
            num_str = f"({num_str})"
        return f"{num_str} / ({format_polynomial(den.coeffs)})"


def _intify(p: Polynomial) -> Polynomial:
    return Polynomial(
        tuple(int(c) if isinstance(c, Fraction) and c.denominator == 1 else c
              for c in p.coeffs)
    )


def _integer_normalized(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    denominators = [
        Fraction(c).denominator for c in (*num.coeffs, *den.coeffs) if c != 0
    ]
    lcm = 1
    for d in denominators:
        g = _gcd(lcm, d)
        lcm = lcm // g * d
    return _intify(num.scale(lcm)), _intify(den.scale(lcm))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def format_polynomial(coeffs: Sequence[Coef], var: str = "z") -> str:
    """Ascending-power rendering: ``1 - 5*z^2 + 4*z^4``."""
    terms = []
    for power, c in enumerate(coeffs):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if power == 0:
            body = str(mag)
        else:
            zpart = var if power == 1 else f"{var}^{power}"
            body = zpart if mag == 1 else f"{mag}*{zpart}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def geometric_product_series(values: Sequence[Coef], order: int) -> PowerSeries:
    """Series of the product of 1/(1 - x*z) over x in values, to the given order.

    Coefficient k is the complete homogeneous symmetric polynomial of degree k
    evaluated at the values.
    """
    coeffs: list[Coef] = [1] + [0] * order
    for x in values:
        if x == 0:
            continue
        for k in range(1, order + 1):
            coeffs[k] += x * coeffs[k - 1]
    return PowerSeries(tuple(coeffs))
