"""Mode occupation of the electromagnetic field seen by an accelerated atom.

The average field energy per mode divided by hbar*omega is

    <n(omega)>_a = 1/2 (1 + a^2/(c^2 omega^2)) (1 + 2/(e^{2 pi c omega / a} - 1))

The second factor alone would be an exactly thermal (Planck) occupation at
the temperature hbar a / (2 pi c k_B); the first factor is the non-thermal
part specific to the electromagnetic field.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import DomainError, InputError

EXP_OVERFLOW = 700.0  # beyond this the Bose factor underflows double precision
DEFAULT_POLE_CAP = 100_000  # shared with the potential evaluator's pole sum


@dataclass(frozen=True)
class OccupationValue:
    """Occupation with its additive thermal / non-thermal breakdown.

    value = 1/2 + thermal_part + nonthermal_part exactly, with
    thermal_part the bare Bose factor and nonthermal_part the
    acceleration-squared correction (including its Bose cross term).
    """

    value: float
    thermal_part: float
    nonthermal_part: float

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "thermal_part": self.thermal_part,
            "nonthermal_part": self.nonthermal_part,
            "vacuum_part": 0.5,
        }


def _bose(t: float) -> float:
    """1 / (e^t - 1) with the overflow branch for large arguments."""
    if t > EXP_OVERFLOW:
        return 0.0
    return 1.0 / math.expm1(t)


def mode_occupation(omega: float, a: float, c: float = 1.0) -> OccupationValue:
    """Exact mode occupation; 1/2 at a = 0 and continuous in both arguments."""
    if not omega > 0.0:
        raise DomainError(f"mode frequency must be > 0, got {omega}")
    if a < 0.0:
        raise DomainError(f"acceleration must be >= 0, got {a}")
    if a == 0.0:
        return OccupationValue(value=0.5, thermal_part=0.0, nonthermal_part=0.0)
    x2 = (a / (c * omega)) ** 2
    bose = _bose(2.0 * math.pi * c * omega / a)
    nonthermal = 0.5 * x2 * (1.0 + 2.0 * bose)
    return OccupationValue(value=0.5 + bose + nonthermal,
                           thermal_part=bose, nonthermal_part=nonthermal)


def occupation_highacc(omega: float, a: float, c: float = 1.0) -> float:
    """Leading resonant occupation a^3 / (2 pi c^3 omega^3), valid for a >> c*omega."""
    if not omega > 0.0:
        raise DomainError(f"mode frequency must be > 0, got {omega}")
    if a < 0.0:
        raise DomainError(f"acceleration must be >= 0, got {a}")
    if a == 0.0:
        warnings.warn("high-acceleration occupation requested at a = 0; "
                      "the approximation is invalid there", RuntimeWarning, stacklevel=2)
        return 0.0
    return a**3 / (2.0 * math.pi * (c * omega) ** 3)


def bose_poles(a: float, n_max: int = DEFAULT_POLE_CAP, c: float = 1.0) -> list[float]:
    """Imaginary-axis wavenumber magnitudes k_n = n a / c^2 of the Bose factor.

    These are the discrete points whose residues build the pole-sum part of
    the accelerated potential; their spacing times R is the regime
    parameter a R / c^2.  At a = 0 the pole ladder degenerates and the list
    is empty.
    """
    if a < 0.0:
        raise DomainError(f"acceleration must be >= 0, got {a}")
    if n_max < 1:
        raise InputError(f"n_max must be >= 1, got {n_max}")
    if a == 0.0:
        return []
    return [n * a / c**2 for n in range(1, n_max + 1)]
