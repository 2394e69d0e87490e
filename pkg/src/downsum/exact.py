"""Exact rational, polynomial, and truncated power-series arithmetic.

Scalars are :class:`fractions.Fraction` (arbitrary precision, always kept in
lowest terms with a positive denominator, which is exactly the normalization
the rest of the package relies on).

A polynomial is a dense tuple of ascending coefficients: ``(c0, c1, c2)``
represents ``c0 + c1*t + c2*t**2``.  Trailing zeros are trimmed, so the zero
polynomial has an empty coefficient tuple and degree -1.

A power series is a finite list of polynomial coefficients in a second,
fully symbolic variable: ``coeffs[r]`` is a :class:`Polynomial` in ``x``
multiplying ``z**r``, truncated at an explicit order.  Mixing truncation
orders is an error, never a silent truncation.

Everything here is an immutable value; operations are pure.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

from .errors import (
    NonExactDivision,
    NonUnitConstantTerm,
    NonzeroConstantTerm,
    OrderMismatch,
)

Scalar = Union[int, Fraction]


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction.

    Tolerates surrounding whitespace and a unicode minus sign.
    """
    cleaned = text.strip().replace("−", "-")
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Render a Fraction as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Polynomial:
    """Dense univariate polynomial over exact rationals.

    >>> p = Polynomial([0, -1, 0, 1])   # t**3 - t
    >>> p(Fraction(2))
    Fraction(6, 1)
    >>> p.degree
    3
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        # The identity check skips Fraction's costly re-validation on the
        # hot path (arithmetic always feeds Fractions back in).
        cleaned = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        while cleaned and not cleaned[-1]:
            cleaned.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cleaned)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def variable(cls) -> "Polynomial":
        """The identity polynomial t."""
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "Polynomial":
        """c * t**degree."""
        return cls((0,) * degree + (c,))

    @classmethod
    def from_text(cls, text: str) -> "Polynomial":
        """Parse comma-separated ascending rational coefficients."""
        parts = text.split(",")
        return cls(parse_rational(part) for part in parts)

    # -- inspection ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    @property
    def constant_term(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[0]

    def coefficient(self, degree: int) -> Fraction:
        """Coefficient of t**degree (zero beyond the stored length)."""
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return Fraction(0)

    def text(self) -> str:
        """Comma-separated ascending coefficients; the CLI wire format."""
        if not self.coeffs:
            return "0"
        return ",".join(format_rational(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial('{self.pretty()}')"

    def pretty(self, var: str = "t") -> str:
        """Human-oriented rendering, highest degree first."""
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if i == 0:
                body = format_rational(mag)
            else:
                symbol = var if i == 1 else f"{var}^{i}"
                body = symbol if mag == 1 else f"{format_rational(mag)}*{symbol}"
            parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
        return " ".join(parts)

    # -- value semantics ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return Polynomial.zero()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "Polynomial":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Euclidean division over the rationals."""
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        quotient: list[Fraction] = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        dlead = other.leading_coefficient
        dd = other.degree
        while len(rem) - 1 >= dd and rem:
            shift = len(rem) - 1 - dd
            factor = rem[-1] / dlead
            quotient[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            while rem and rem[-1] == 0:
                rem.pop()
        return Polynomial(quotient), Polynomial(rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def divide_exactly(self, other: "Polynomial") -> "Polynomial":
        """Return q with q*other == self; raise NonExactDivision otherwise."""
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero:
            raise NonExactDivision(
                f"division of {self!r} by {other!r} leaves remainder {remainder!r}"
            )
        return quotient

    # -- evaluation and calculus ----------------------------------------

    def __call__(self, at: Scalar) -> Fraction:
        """Exact Horner evaluation."""
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * at + c
        return value

    def shift(self, step: Scalar) -> "Polynomial":
        """The polynomial q(t) = p(t + step), expanded exactly.

        Binomial expansion, accumulated row by row:
        q_j = sum_{i >= j} c_i * C(i, j) * step^(i-j).
        """
        step = Fraction(step)
        if not self.coeffs or step == 0:
            return self
        top = len(self.coeffs) - 1
        powers = [Fraction(1)]
        for _ in range(top):
            powers.append(powers[-1] * step)
        out = [Fraction(0)] * (top + 1)
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            for j in range(i + 1):
                out[j] += c * comb(i, j) * powers[i - j]
        return Polynomial(out)

    def scale_argument(self, factor: Scalar) -> "Polynomial":
        """The polynomial q(t) = p(factor * t)."""
        f = Fraction(factor)
        power = Fraction(1)
        out = []
        for c in self.coeffs:
            out.append(c * power)
            power *= f
        return Polynomial(out)

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def antiderivative(self) -> "Polynomial":
        """Antiderivative with zero constant term."""
        return Polynomial([Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)])


class PowerSeries:
    """Truncated formal power series whose coefficients are Polynomials.

    ``coeffs[r]`` is the polynomial (in x) multiplying z**r; the truncation
    order is ``len(coeffs) - 1`` and arithmetic never reads beyond it.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Polynomial]):
        if not coeffs:
            raise ValueError("a power series needs at least the z^0 coefficient")
        self.coeffs: tuple[Polynomial, ...] = tuple(coeffs)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([Polynomial.one()] + [Polynomial.zero()] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PowerSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        inner = ", ".join(p.pretty() for p in self.coeffs)
        return f"PowerSeries([{inner}])"

    def _check_order(self, other: "PowerSeries") -> None:
        if self.order != other.order:
            raise OrderMismatch(f"series orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check_order(other)
        return PowerSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check_order(other)
        return PowerSeries([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        """Cauchy product truncated to the common order."""
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check_order(other)
        out = []
        for n in range(self.order + 1):
            acc = Polynomial.zero()
            for k in range(n + 1):
                acc = acc + self.coeffs[k] * other.coeffs[n - k]
            out.append(acc)
        return PowerSeries(out)

    def reciprocal(self) -> "PowerSeries":
        """Series b with self * b == 1 up to the truncation order.

        Requires the constant coefficient to be the constant polynomial 1.
        """
        if self.coeffs[0] != Polynomial.one():
            raise NonUnitConstantTerm(
                f"constant coefficient is {self.coeffs[0]!r}, expected 1"
            )
        out = [Polynomial.one()]
        for n in range(1, self.order + 1):
            acc = Polynomial.zero()
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * out[n - k]
            out.append(-acc)
        return PowerSeries(out)

    def exp(self) -> "PowerSeries":
        """Exponential via the differential recurrence b' = a'b.

        Requires a zero constant coefficient.
        """
        if not self.coeffs[0].is_zero:
            raise NonzeroConstantTerm(
                f"constant coefficient is {self.coeffs[0]!r}, expected 0"
            )
        out = [Polynomial.one()]
        for n in range(self.order):
            acc = Polynomial.zero()
            for k in range(n + 1):
                acc = acc + (k + 1) * self.coeffs[k + 1] * out[n - k]
            out.append(acc / (n + 1))
        return PowerSeries(out)
