"""Retardation weight of the two-atom dispersion integrand.

The weight multiplying k^4 e^{2ikR} alpha^2(k) in the interaction integral
is, with x = kR,

    u_factor(x) = 1 - 5/x^2 + 3/x^4 + i (2/x - 6/x^3)

On the positive imaginary axis (x -> i x) it collapses to the real, all-plus
combination

    imag_axis_weight(x) = 1 + 2/x + 5/x^2 + 6/x^3 + 3/x^4

whose numerator x^4 + 2x^3 + 5x^2 + 6x + 3 is the familiar quartic of
retarded dispersion forces; the far-zone 23/(4 pi) and the near-zone 3/4
coefficients both follow from it.  The sign-free coefficient pattern
{1,2,5,6,3} belongs to the imaginary axis only; placing it on the real axis
breaks the oscillatory cancellation at the origin and the far-zone law.

osc_imag_part / osc_real_part evaluate Im / Re of e^{2ix} u_factor(x)
without catastrophic cancellation (series branch below |x| = 1/2).
"""
from __future__ import annotations

import math
from math import factorial

from .errors import DomainError

SERIES_SWITCH = 0.5
_NTERMS = 42

# numerator polynomial of x^4 * u_factor(x): 3 - 6i x - 5 x^2 + 2i x^3 + x^4
_NUMER = {0: 3.0, 1: -6j, 2: -5.0, 3: 2j, 4: 1.0}


def _exp_numer_coeffs(n: int = _NTERMS) -> list[complex]:
    """Taylor coefficients of e^{2ix} (x^4 + 2i x^3 - 5x^2 - 6i x + 3)."""
    out = []
    for m in range(n):
        s = 0j
        for j, cj in _NUMER.items():
            if m >= j:
                s += cj * (2j) ** (m - j) / factorial(m - j)
        out.append(s)
    return out


_EXP_NUMER = _exp_numer_coeffs()
# e^{2ix} u(x) = 3/x^4 + 1/x^2 + 1 + (22/15) i x + ...; all coefficients of
# x^{-4}..x^{0} are real, so Im[e^{2ix} u(x)] = O(x) and Re = O(x^-4).
_SIGMA = [c.imag for c in _EXP_NUMER]
_RHO = [c.real for c in _EXP_NUMER]


def u_factor(x) -> complex:
    """Retardation weight at real or complex x (kR); x = 0 is excluded.

    For real x it satisfies u_factor(-x) = conj(u_factor(x)), and on the
    imaginary axis u_factor(i x) = imag_axis_weight(x) is real.
    """
    if x == 0:
        raise DomainError("u_factor is singular at x = 0")
    z = complex(x)
    inv = 1.0 / z
    # Horner on 3 - 6i x - 5 x^2 + 2i x^3 + x^4, then divide by x^4
    numer = (((z + 2j) * z - 5.0) * z - 6j) * z + 3.0
    return numer * inv**4


def imag_axis_weight(x: float) -> float:
    """u_factor continued to the imaginary axis: 1 + 2/x + 5/x^2 + 6/x^3 + 3/x^4."""
    if x == 0:
        raise DomainError("imag_axis_weight is singular at x = 0")
    return ((((x + 2.0) * x + 5.0) * x + 6.0) * x + 3.0) / x**4


def quartic_weight(x: float) -> float:
    """Numerator x^4 + 2x^3 + 5x^2 + 6x + 3 of the imaginary-axis weight."""
    return (((x + 2.0) * x + 5.0) * x + 6.0) * x + 3.0


def osc_imag_part(x: float) -> float:
    """Im[e^{2ix} u_factor(x)] for real x > 0, stable down to x -> 0.

    The closed trigonometric form loses all significance below x ~ 1e-3
    (terms ~ 6/x^3 cancel to O(x)); the series branch restores it.
    """
    if x > SERIES_SWITCH:
        A = 1.0 - 5.0 / (x * x) + 3.0 / x**4
        B = 2.0 / x - 6.0 / x**3
        return math.sin(2.0 * x) * A + math.cos(2.0 * x) * B
    s = 0.0
    for m in range(len(_SIGMA) - 1, 4, -1):
        s = s * x + _SIGMA[m]
    return s * x  # sum_{m >= 5} Im(c_m) x^{m-4}


def osc_real_part(x: float) -> float:
    """Re[e^{2ix} u_factor(x)] for real x > 0 (3/x^4 + 1/x^2 + 1 + O(x^2) as x->0)."""
    if x > SERIES_SWITCH:
        A = 1.0 - 5.0 / (x * x) + 3.0 / x**4
        B = 2.0 / x - 6.0 / x**3
        return math.cos(2.0 * x) * A - math.sin(2.0 * x) * B
    s = 0.0
    for m in range(len(_RHO) - 1, 4, -1):
        s = s * x + _RHO[m]
    return s * x + 1.0 + 1.0 / (x * x) + 3.0 / x**4


def osc_complex(x: float) -> complex:
    """e^{2ix} u_factor(x) for real x > 0 via the stable split."""
    return complex(osc_real_part(x), osc_imag_part(x))


def leading_imag_slope() -> float:
    """Coefficient of x in Im[e^{2ix} u_factor(x)] (equals 22/15)."""
    return _SIGMA[5]


__all__ = [
    "u_factor",
    "imag_axis_weight",
    "quartic_weight",
    "osc_imag_part",
    "osc_real_part",
    "osc_complex",
    "leading_imag_slope",
]


def _check_series():
    # The x^{-4}..x^0 Taylor data of e^{2ix}u(x) must be {3,0,1,0,1} + 0i.
    expect = [3.0, 0.0, 1.0, 0.0, 1.0]
    for m, want in enumerate(expect):
        c = _EXP_NUMER[m]
        if abs(c - want) > 1e-12:
            raise AssertionError(f"series coefficient {m} off: {c} != {want}")


_check_series()
