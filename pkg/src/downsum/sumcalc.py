"""Finite-difference calculus on polynomials and exact summation identities.

The central fact being exercised: for a polynomial f and any nonzero
rational step x,

    sum_{k=0}^{n-1} f(k)
        = x * sum_{k=0}^{n/x-1} f(kx)
          + sum_{r>=1} w_r(x)/r! * (D_x^{r-1} f(n) - D_x^{r-1} f(0)) / x^{r-1}

as an identity of polynomials in n, where D_x is the step-x forward
difference and w_r the correction weights of :mod:`downsum.family`.  The
series is finite: D_x^{r-1} f vanishes identically once r-1 > deg f.

Each ``*_residual`` function builds LHS - RHS as an explicit Polynomial and
reports it verbatim; checks are structural (all coefficients zero), never
sampled, so a pass cannot be a coincidence of evaluation points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import InsufficientOrder, ZeroStep
from .exact import Polynomial, Scalar
from .family import CorrectionFamily, classical_numbers, correction_family


@dataclass(frozen=True)
class SumIdentityReport:
    """Outcome of one identity check: the residual polynomial in n.

    terms_used is the truncation point of the correction series (deg f + 1);
    x_value records the step the identity was instantiated at.
    """

    residual: Polynomial
    terms_used: int
    x_value: Fraction

    @property
    def passed(self) -> bool:
        return self.residual.is_zero


def forward_difference(f: Polynomial, step: Scalar, order: int) -> Polynomial:
    """order-fold forward difference of f with the given step.

    D_x f(t) = f(t+x) - f(t); order 0 is the identity.  Each application
    drops the degree by one, so the result is zero once order > deg f.
    """
    if order < 0:
        raise ValueError("difference order must be >= 0")
    result = f
    for _ in range(order):
        result = result.shift(step) - result
    return result


def indefinite_sum(f: Polynomial) -> Polynomial:
    """The unique polynomial S with S(n+1) - S(n) = f(n) and S(0) = 0.

    At integer n >= 0 this is sum_{k=0}^{n-1} f(k).  Built by Newton's
    forward-difference formula: S(n) = sum_m D^m f(0) * binom(n, m+1),
    with the differences read off a value table of f at 0..deg f.
    """
    if f.is_zero:
        return Polynomial.zero()
    table = [f(Fraction(k)) for k in range(f.degree + 1)]
    result = Polynomial.zero()
    binomial = Polynomial.variable()  # binom(n, 1) = n
    for m in range(f.degree + 1):
        result = result + table[0] * binomial
        # binom(n, m+2) = binom(n, m+1) * (n - (m+1)) / (m+2)
        binomial = binomial * Polynomial((-(m + 1), 1)) / (m + 2)
        table = [b - a for a, b in zip(table, table[1:])]
    return result


def fractional_sum(f: Polynomial, n: Scalar) -> Fraction:
    """Evaluate the indefinite sum of f at an arbitrary rational n.

    For non-integer n this is the natural polynomial extension of the
    partial sum (the value every correct summation formula agrees on).
    """
    return indefinite_sum(f)(n)


def downsampled_sum(f: Polynomial, x: Scalar) -> Polynomial:
    """The polynomial in n equal to x * sum_{k=0}^{n/x-1} f(kx).

    Computed as x * S_g(n/x) where g(k) = f(xk); both the argument scaling
    and the n/x composition are exact.
    """
    x = Fraction(x)
    if x == 0:
        raise ZeroStep("downsampling step must be nonzero (the 0 limit is the derivative form)")
    coarse = indefinite_sum(f.scale_argument(x))
    return x * coarse.scale_argument(1 / x)


def _require_order(family: CorrectionFamily, needed: int) -> None:
    if family.max_order < needed:
        raise InsufficientOrder(
            f"family has max_order {family.max_order}, identity needs {needed}"
        )


def _difference_span(d: Polynomial) -> Polynomial:
    """d(n) - d(0) as a polynomial in n."""
    return d - Polynomial.constant(d(Fraction(0)))


def scaled_difference_residual(
    f: Polynomial, x: Scalar, family: CorrectionFamily
) -> SumIdentityReport:
    """Residual of the step-x summation identity (weights on x-step differences).

    LHS is the unit-step indefinite sum; RHS is the downsampled sum plus
    sum_{r=1}^{deg f + 1} w_r(x)/r! * (D_x^{r-1} f(n) - D_x^{r-1} f(0)) / x^{r-1}.
    """
    x = Fraction(x)
    if x == 0:
        raise ZeroStep("step must be nonzero; use euler_maclaurin_residual for the limit")
    terms = f.degree + 1
    _require_order(family, terms)
    residual = indefinite_sum(f) - downsampled_sum(f, x)
    diff = f  # D_x^{r-1} f, advanced incrementally
    step_power = Fraction(1)  # x^(r-1)
    for r in range(1, terms + 1):
        weight = family.weights[r](x) / (factorial(r) * step_power)
        residual = residual - weight * _difference_span(diff)
        diff = diff.shift(x) - diff
        step_power *= x
    return SumIdentityReport(residual, terms, x)


def unit_difference_residual(
    f: Polynomial, x: Scalar, family: CorrectionFamily
) -> SumIdentityReport:
    """Residual of the reversed identity (reversed weights on unit differences).

    x * sum_{k<n/x} f(kx) = sum_{k<n} f(k)
                            + sum_r u_r(x)/r! * (D^{r-1} f(n) - D^{r-1} f(0)).
    """
    x = Fraction(x)
    if x == 0:
        raise ZeroStep("step must be nonzero")
    terms = f.degree + 1
    _require_order(family, terms)
    residual = downsampled_sum(f, x) - indefinite_sum(f)
    diff = f  # D^{r-1} f with unit step, advanced incrementally
    for r in range(1, terms + 1):
        weight = family.unit_weights[r](x) / factorial(r)
        residual = residual - weight * _difference_span(diff)
        diff = diff.shift(1) - diff
    return SumIdentityReport(residual, terms, x)


def euler_maclaurin_residual(f: Polynomial) -> SumIdentityReport:
    """Residual of the x -> 0 limit: Bernoulli weights on derivatives.

    sum_{k<n} f(k) = integral_0^n f + sum_r B_r/r! * (f^(r-1)(n) - f^(r-1)(0)),
    with B_1 = -1/2 (the convention the weight family produces at 0).
    """
    terms = f.degree + 1
    family = correction_family(max(terms, 1))
    residual = indefinite_sum(f) - f.antiderivative()
    derivative = f
    for r in range(1, terms + 1):
        bernoulli = family.weights[r].constant_term
        residual = residual - bernoulli / factorial(r) * _difference_span(derivative)
        derivative = derivative.derivative()
    return SumIdentityReport(residual, terms, Fraction(0))


def gregory_residual(f: Polynomial) -> SumIdentityReport:
    """Residual of the quadrature form: Gregory weights on unit differences.

    integral_0^n f = sum_{k<n} f(k) + sum_r G_r * (D^{r-1} f(n) - D^{r-1} f(0)).
    """
    terms = f.degree + 1
    gregory = classical_numbers(correction_family(max(terms, 1))).gregory
    residual = f.antiderivative() - indefinite_sum(f)
    diff = f
    for r in range(1, terms + 1):
        residual = residual - gregory[r] * _difference_span(diff)
        diff = diff.shift(1) - diff
    return SumIdentityReport(residual, terms, Fraction(1))


def alternating_residual(f: Polynomial) -> SumIdentityReport:
    """Residual of the alternating form at even upper limits n = 2m.

    sum_{k<2m} (-1)^k f(k) = sum_{r>=0} (-1)^{r+1}/2^{r+1} (D^r f(2m) - D^r f(0))
    checked as an identity of polynomials in m.  The left side is built
    honestly as the indefinite sum of h(j) = f(2j) - f(2j+1), which equals
    the signed sum pairwise; the right side is the x = 2 instance of the
    reversed identity, whose weights collapse to u_r(2)/r! = (-1)^r/2^r.
    """
    terms = f.degree + 1
    paired = f.scale_argument(2) - f.shift(1).scale_argument(2)
    residual = indefinite_sum(paired)
    diff = f
    for r in range(0, terms + 1):
        span_at_2m = _difference_span(diff).scale_argument(2)
        residual = residual - Fraction((-1) ** (r + 1), 2 ** (r + 1)) * span_at_2m
        diff = diff.shift(1) - diff
    return SumIdentityReport(residual, terms, Fraction(2))


def random_polynomial(rng: random.Random, max_degree: int) -> Polynomial:
    """Draw a polynomial with rational coefficients from a seeded generator.

    Numerators in [-9, 9], denominators in [1, 9]; trailing zero draws may
    lower the degree, which is deliberate (identities must not depend on a
    full-degree leading term).
    """
    coeffs = [
        Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        for _ in range(max_degree + 1)
    ]
    return Polynomial(coeffs)
