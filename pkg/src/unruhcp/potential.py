"""Interatomic potential for two atoms sharing a uniform proper acceleration.

The potential is the oscillatory dispersion integral

    V(R) = -(2 hbar c / pi R^2) Im int_0^inf dk k^4 <n(ck)>_a e^{2ikR}
                                      u_factor(kR) alpha^2(k)

evaluated three ways:

* ``potential_inertial``  - the a = 0 integral rotated onto the imaginary
  axis, where it is a smooth exponentially damped quadrature.
* ``potential_numeric``   - the accelerated case.  The occupation factor is
  split as 1/2 + (1/2) a^2/(c^2 omega^2) + (1 + a^2/(c^2 omega^2)) * Bose.
  The first piece is the inertial integral; the second rotates onto the
  imaginary axis with a finite-part (Hadamard) regularization of its double
  pole at the origin; the third contributes the pole ladder of the Bose
  factor at k_n = n a / c^2 plus a closed-form origin term from the k^-1
  Laurent coefficient of the integrand.  When the pole ladder is too dense
  (a R / c^2 small) the third piece is instead evaluated as the exactly
  equivalent Bose-weighted real-axis integral of the imaginary part, which
  stays cheap for arbitrarily small a R.
* ``potential_oracle``    - an independent check: the raw integrand is
  integrated over a deformed first-quadrant path (real segment plus a
  tilted ray, exact by Cauchy's theorem), with the convergence factor
  e^{-eta k} and a polynomial extrapolation eta -> 0.  It shares no series,
  residue or finite-part algebra with the contour evaluator.

All evaluators are pure functions, deterministic for a fixed
QuadratureSpec, and safe for concurrent use.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad as _scipy_quad

from .atoms import AtomSpec, alpha_real, oscillator_weights
from .errors import DomainError, NumericalFailure, OracleUnreliableError, RegimeError
from .kinematics import Regime, classify_regime, validity_check
from .occupation import DEFAULT_POLE_CAP, mode_occupation
from .retardation import (
    osc_imag_part,
    osc_real_part,
    quartic_weight,
    u_factor,
)
from .units import UnitSystem, units_for

# contour evaluator mode switch: below both thresholds the pole ladder is
# replaced by the Bose-weighted real-axis integral
SWITCH_A = 0.125      # a / (omega0 c)
SWITCH_AR = 0.5       # a R / c^2
X_CUT = 40.0          # imaginary-axis quadratures switch to the tail at x = uR = 40
X_SMALL = 1e-6        # series branch of the subtracted origin integrand
ORACLE_MAX_A = 0.1    # enforced oracle domain a / (omega0 c)
ORACLE_K0 = 0.5       # reduced wavenumber where the oracle path leaves the real axis
ORACLE_TILT = math.pi / 4


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and truncation policy for the potential evaluators.

    rel_tol / abs_tol     target relative and absolute (reduced-unit) errors
    max_subdivisions      adaptive quadrature subdivision limit
    matsubara_rel_cutoff  stop the pole sum when a term falls below this
                          fraction of the partial sum
    matsubara_hard_cap    unconditional pole-count cap
    origin_cutoff         scale factor for the series branch of the
                          origin-subtracted integrand
    damping_schedule      decreasing e^{-eta k} factors (units c/omega0)
                          used by the oracle's eta -> 0 extrapolation
    """

    rel_tol: float = 1e-6
    abs_tol: float = 1e-30
    max_subdivisions: int = 200
    matsubara_rel_cutoff: float = 1e-12
    matsubara_hard_cap: int = DEFAULT_POLE_CAP
    origin_cutoff: float = 1e-3
    damping_schedule: tuple[float, ...] = (1e-2, 3e-3, 1e-3)

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("tolerances must be positive")
        if self.max_subdivisions < 10:
            raise DomainError("max_subdivisions must be >= 10")
        if not (self.matsubara_rel_cutoff > 0 and self.origin_cutoff > 0):
            raise DomainError("cutoffs must be positive")
        if self.matsubara_hard_cap < 10:
            raise DomainError("matsubara_hard_cap must be >= 10")
        sched = tuple(float(e) for e in self.damping_schedule)
        if len(sched) < 3 or any(b <= c for b, c in zip(sched, sched[1:])) or sched[-1] <= 0:
            raise DomainError("damping_schedule must be strictly decreasing, length >= 3, positive")
        object.__setattr__(self, "damping_schedule", sched)


DEFAULT_QUAD = QuadratureSpec()


@dataclass(frozen=True)
class PotentialResult:
    """Energy value with error estimate, additive decomposition and regime tag."""

    value: float
    error_estimate: float
    parts: dict[str, float]
    regime: Regime
    warnings: tuple[str, ...] = field(default_factory=tuple)

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "error_estimate": self.error_estimate,
            "parts": {
                "vacuum": self.parts["vacuum"],
                "nonthermal_a2": self.parts["nonthermal_a2"],
                "residue_sum": self.parts["residue_sum"],
            },
            "regime": self.regime.as_dict(),
            "warnings": list(self.warnings),
        }


# --------------------------------------------------------------------------
# reduced-unit atom and quadrature helpers
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class _ReducedAtom:
    omegas: tuple[float, ...]    # transition frequencies in omega0 (min = 1)
    weights: tuple[float, ...]   # oscillator strengths alpha_r in (c/omega0)^3
    alpha0: float                # static polarizability
    alpha_curv: float            # k^2 coefficient of alpha^2(k) about k = 0
    gamma: float                 # linewidth in omega0


def _reduce_atom(atom: AtomSpec, units: UnitSystem) -> _ReducedAtom:
    omegas = tuple(units.reduce_frequency(t.omega) for t in atom.transitions)
    weights = tuple(units.reduce_alpha(w)
                    for w in oscillator_weights(atom, hbar=units.hbar_atomic))
    alpha0 = sum(weights)
    curv = 2.0 * alpha0 * sum(w / o**2 for w, o in zip(weights, omegas))
    return _ReducedAtom(omegas=omegas, weights=weights, alpha0=alpha0,
                        alpha_curv=curv, gamma=units.reduce_frequency(atom.damping))


def _resolve_units(atom: AtomSpec, units) -> UnitSystem:
    if units is None:
        return units_for(atom, "natural")
    if isinstance(units, str):
        return units_for(atom, units)
    return units


def _alpha2_iu(u, ra: _ReducedAtom):
    s = 0.0
    for w, o in zip(ra.weights, ra.omegas):
        s += w * o * o / (o * o + u * u)
    return s * s


def _alpha2_real0(k: float, ra: _ReducedAtom) -> float:
    # gamma = 0 polarizability squared on the real axis (k below every resonance)
    s = 0.0
    for w, o in zip(ra.weights, ra.omegas):
        s += w * o * o / (o * o - k * k)
    return s * s


def _quad(f, a, b, quad: QuadratureSpec, points=None):
    eps = max(1e-13, min(1e-8, quad.rel_tol * 1e-2))
    val, err, info, *rest = _scipy_quad(
        f, a, b,
        epsabs=1e-300, epsrel=eps,
        limit=quad.max_subdivisions,
        points=points, full_output=1,
    )
    if rest:  # QUADPACK message present: inspect severity
        tol = max(quad.abs_tol, 10.0 * quad.rel_tol * abs(val))
        if err > tol:
            raise NumericalFailure(
                f"quadrature did not converge on [{a}, {b}]: {rest[0]}",
                partial=val, error_estimate=err)
    return val, err


# --------------------------------------------------------------------------
# contour-evaluator building blocks (reduced units)
# --------------------------------------------------------------------------
def _inertial_integral(Rt: float, ra: _ReducedAtom, quad: QuadratureSpec):
    """int_0^inf W(u) du with W(u) = u^4 P(uR) e^{-2uR} alpha^2(iu), via x = uR."""

    def g(x):
        return quartic_weight(x) * math.exp(-2.0 * x) * _alpha2_iu(x / Rt, ra)

    pts = sorted({o * Rt for o in ra.omegas if 0.0 < o * Rt < X_CUT} | {0.1, 1.0})
    val, err = _quad(g, 0.0, X_CUT, quad, points=pts)
    v2, e2 = _quad(g, X_CUT, np.inf, quad)
    return (val + v2) / Rt**5, (err + e2) / Rt**5


def _origin_subtracted_integral(Rt: float, ra: _ReducedAtom, quad: QuadratureSpec):
    """Finite part int_0^inf [W(u) - W(0)]/u^2 du (W as above, W(0) = 3 alpha0^2/R^4).

    W'(0) vanishes identically (the 6/x^3 term of the weight cancels the
    linear term of e^{-2x}), so subtracting the pure double pole leaves a
    convergent integral and the finite part carries no logarithm.
    """
    a0sq3 = 3.0 * ra.alpha0**2
    w2R2 = ra.alpha0**2 + 3.0 * ra.alpha_curv / Rt**2  # -g(0) in the x variable
    x_small = X_SMALL * min(1.0, quad.origin_cutoff / 1e-3)

    def g(x):
        if x < x_small:
            return -w2R2
        return (quartic_weight(x) * math.exp(-2.0 * x) * _alpha2_iu(x / Rt, ra)
                - a0sq3) / (x * x)

    pts = sorted({o * Rt for o in ra.omegas if 0.0 < o * Rt < X_CUT} | {0.1, 1.0})
    val, err = _quad(g, 0.0, X_CUT, quad, points=pts)
    v2, e2 = _quad(g, X_CUT, np.inf, quad)
    return (val + v2) / Rt**3, (err + e2) / Rt**3


def _origin_coefficient(Rt: float, at: float, ra: _ReducedAtom) -> float:
    """k^-1 Laurent coefficient c1 of the full integrand at the origin.

    c1 = W(0)*a*(pi/6 + 1/(2 pi)) + W2 * a^3/(2 pi) with W2 the k^2
    coefficient of k^4 e^{2ikR} u_factor(kR) alpha^2(k).  The quarter-arc
    around the origin leaves (pi/2) c1 in the imaginary part; the higher
    (double and triple) pole terms contribute only to the real part.
    """
    w0 = 3.0 * ra.alpha0**2 / Rt**4
    w2 = ra.alpha0**2 / Rt**2 + 3.0 * ra.alpha_curv / Rt**4
    return w0 * at * (math.pi / 6.0 + 0.5 / math.pi) + w2 * at**3 / (2.0 * math.pi)


def _pole_sum(Rt: float, at: float, ra: _ReducedAtom, quad: QuadratureSpec):
    """sum_{n>=2} (1 - 1/n^2) W(n a) over the Bose poles (n = 1 is killed
    by the zero of 1 + a^2/k^2 at k = i a)."""
    warnings: list[str] = []
    if at * Rt < 1e-3:
        warnings.append(
            f"dense pole ladder: aR/c^2 = {at * Rt:.3e} < 1e-3; "
            "the low-acceleration closed forms are better cross-checks here")
    total = 0.0
    tail = 0.0
    block = 16384
    n0 = 2
    ratio = math.exp(-2.0 * at * Rt)
    while n0 <= quad.matsubara_hard_cap:
        n = np.arange(n0, min(n0 + block, quad.matsubara_hard_cap + 1), dtype=float)
        u = n * at
        x = u * Rt
        poly = u**4 + 2.0 * u**3 / Rt + 5.0 * u**2 / Rt**2 + 6.0 * u / Rt**3 + 3.0 / Rt**4
        with np.errstate(under="ignore"):
            alpha = np.zeros_like(u)
            for w, o in zip(ra.weights, ra.omegas):
                alpha += w * o * o / (o * o + u * u)
            terms = (1.0 - 1.0 / n**2) * poly * np.exp(-2.0 * x) * alpha**2
        total += float(terms.sum())
        last = float(terms[-1])
        if last < quad.matsubara_rel_cutoff * max(abs(total), 1e-300):
            tail = last * ratio / max(1.0 - ratio, 1e-300)
            break
        n0 += block
    else:
        tail = float(terms[-1]) * ratio / max(1.0 - ratio, 1e-300)
        warnings.append(
            f"pole sum truncated at the hard cap {quad.matsubara_hard_cap}; "
            f"geometric tail estimate {tail:.3e}")
    return total, tail, warnings


def _bose_real_axis_integral(Rt: float, at: float, ra: _ReducedAtom,
                             quad: QuadratureSpec):
    """Bose piece as -(2a/pi R^2) int_0^T ImW(a t)(1 + 1/t^2)/(e^{2 pi t}-1) dt.

    Exactly equivalent to the pole sum plus its origin term minus the two
    imaginary-axis integrals (Abel-Plana), but costs O(1) independent of
    a R.  Requires a < omega_min so the Bose weight dies before the first
    polarizability resonance.
    """
    T = min(40.0, 0.85 / at)

    def f(t):
        if t <= 0.0:
            return 0.0
        k = at * t
        imw = k**4 * _alpha2_real0(k, ra) * osc_imag_part(k * Rt)
        return imw * (1.0 + 1.0 / (t * t)) / math.expm1(2.0 * math.pi * t)

    pts = [p for p in (0.5, 1.0, 2.0, 4.0, 8.0, 16.0) if p < T]
    val, err = _quad(f, 0.0, T, quad, points=pts or None)
    scale = 2.0 * at / (math.pi * Rt * Rt)
    return -scale * val, scale * err


# --------------------------------------------------------------------------
# public evaluators
# --------------------------------------------------------------------------
def integrand(k: float, R: float, a: float, atom: AtomSpec,
              units: UnitSystem | str | None = None) -> complex:
    """Raw integrand k^4 <n(ck)>_a e^{2ikR} u_factor(kR) alpha^2(k)."""
    u = _resolve_units(atom, units)
    if not k > 0.0:
        raise DomainError(f"wavenumber must be > 0, got {k}")
    if not R > 0.0:
        raise DomainError(f"separation must be > 0, got {R}")
    c = u.c
    occ = mode_occupation(c * k, a, c=c).value
    alpha = alpha_real(k, atom, c=c, hbar=u.hbar_atomic)
    return k**4 * occ * complex(math.cos(2 * k * R), math.sin(2 * k * R)) \
        * u_factor(k * R) * alpha * alpha


def potential_inertial(R: float, atom: AtomSpec, quad: QuadratureSpec = DEFAULT_QUAD,
                       units: UnitSystem | str | None = None) -> PotentialResult:
    """Ground-state dispersion potential of the inertial pair (a = 0)."""
    u = _resolve_units(atom, units)
    if not R > 0.0:
        raise DomainError(f"separation must be > 0, got {R}")
    ra = _reduce_atom(atom, u)
    Rt = u.reduce_length(R)
    integ, err = _inertial_integral(Rt, ra, quad)
    vt = -integ / (math.pi * Rt * Rt)
    et = err / (math.pi * Rt * Rt)
    value = u.restore_energy(vt)
    return PotentialResult(
        value=value,
        error_estimate=u.restore_energy(et),
        parts={"vacuum": value, "nonthermal_a2": 0.0, "residue_sum": 0.0},
        regime=classify_regime(R, 0.0, atom, c=u.c),
        warnings=(),
    )


def potential_numeric(R: float, a: float, atom: AtomSpec,
                      quad: QuadratureSpec = DEFAULT_QUAD,
                      units: UnitSystem | str | None = None) -> PotentialResult:
    """Accelerated-pair potential by the contour decomposition.

    Value and the additive parts {vacuum, nonthermal_a2, residue_sum}.
    Raises RegimeError when the validity check reports the spontaneously
    excited regime (use potential_high_acc there).
    """
    u = _resolve_units(atom, units)
    if not R > 0.0:
        raise DomainError(f"separation must be > 0, got {R}")
    if a < 0.0:
        raise DomainError(f"acceleration must be >= 0, got {a}")
    if a == 0.0:
        return potential_inertial(R, atom, quad, units=u)
    report = validity_check(a, atom, c=u.c)
    if report.excited:
        raise RegimeError(
            f"a/(omega0 c) = {1.0 / report.ratio:.3g} lies in the spontaneously "
            "excited regime; use potential_high_acc")

    ra = _reduce_atom(atom, u)
    Rt = u.reduce_length(R)
    at = u.reduce_acceleration(a)
    regime = classify_regime(R, a, atom, c=u.c)
    warnings: list[str] = []
    if report.status == "marginal":
        warnings.append(
            f"marginal validity window: omega0 c / a = {report.ratio:.3g}")

    v1, e1 = _inertial_integral(Rt, ra, quad)
    vac = -v1 / (math.pi * Rt * Rt)
    e_vac = e1 / (math.pi * Rt * Rt)
    m, em = _origin_subtracted_integral(Rt, ra, quad)
    nonth = at * at / (math.pi * Rt * Rt) * m
    e_nonth = at * at / (math.pi * Rt * Rt) * em

    if at <= SWITCH_A and at * Rt <= SWITCH_AR:
        res, e_res = _bose_real_axis_integral(Rt, at, ra, quad)
        vt = vac + nonth + res
    else:
        s, tail, sum_warnings = _pole_sum(Rt, at, ra, quad)
        warnings.extend(sum_warnings)
        bracket = (math.pi / 2.0) * _origin_coefficient(Rt, at, ra) + (at / 2.0) * s
        vt = -2.0 / (math.pi * Rt * Rt) * bracket
        e_res = 2.0 / (math.pi * Rt * Rt) * (at / 2.0) * tail
        res = vt - vac - nonth

    value = u.restore_energy(vt)
    return PotentialResult(
        value=value,
        error_estimate=u.restore_energy(e_vac + e_nonth + e_res),
        parts={
            "vacuum": u.restore_energy(vac),
            "nonthermal_a2": u.restore_energy(nonth),
            "residue_sum": u.restore_energy(res),
        },
        regime=regime,
        warnings=tuple(warnings),
    )


# --------------------------------------------------------------------------
# oracle: damped integral on a deformed first-quadrant path
# --------------------------------------------------------------------------
def _occupation_pieces_complex(k, at):
    """(vacuum, nonthermal, bose) occupation factors at complex wavenumber."""
    x2 = (at / k) ** 2
    t = 2.0 * math.pi * k / at
    bose = 1.0 / (np.exp(t) - 1.0) if t.real < 700.0 else 0.0
    return 0.5, 0.5 * x2, (1.0 + x2) * bose


def _oracle_piece(Rt: float, at: float, ra: _ReducedAtom, quad: QuadratureSpec,
                  eta: float, piece: str):
    """One occupation piece of the damped integral over the deformed path."""

    def occ_real(k):
        if piece == "vacuum":
            return 0.5
        if piece == "nonthermal_a2":
            return 0.5 * (at / k) ** 2
        t = 2.0 * math.pi * k / at
        bose = 1.0 / math.expm1(t) if t < 700.0 else 0.0
        return (1.0 + (at / k) ** 2) * bose

    def f_seg(k):
        if k <= 0.0:
            return 0.0
        return (occ_real(k) * k**4 * _alpha2_real0(k, ra)
                * osc_imag_part(k * Rt) * math.exp(-eta * k))

    pts = None
    if piece != "vacuum" and at > 0.0:
        pts = sorted(p for p in (at / (2.0 * math.pi), at, 4.0 * at)
                     if 0.0 < p < ORACLE_K0)
    seg, e_seg = _quad(f_seg, 0.0, ORACLE_K0, quad, points=pts or None)

    eith = complex(math.cos(ORACLE_TILT), math.sin(ORACLE_TILT))

    def f_ray(t):
        k = ORACLE_K0 + t * eith
        alpha = 0.0j
        for w, o in zip(ra.weights, ra.omegas):
            alpha += w * o * o / (o * o - k * k)
        x = k * Rt
        ufac = ((((x + 2j) * x - 5.0) * x - 6j) * x + 3.0) / x**4
        if piece == "vacuum":
            occ = 0.5
        else:
            vac, nonth, bose = _occupation_pieces_complex(k, at)
            occ = nonth if piece == "nonthermal_a2" else bose
        val = k**4 * occ * np.exp(2j * k * Rt) * ufac * alpha * alpha \
            * np.exp(-eta * k)
        return (eith * val).imag

    td = 1.0 / (2.0 * Rt * math.sin(ORACLE_TILT))
    ray, e_ray = _quad(f_ray, 0.0, 60.0 * td, quad,
                       points=[td, 2 * td, 4 * td, 8 * td, 16 * td, 32 * td])
    tail, e_tail = _quad(f_ray, 60.0 * td, np.inf, quad)
    scale = -2.0 / (math.pi * Rt * Rt)
    return scale * (seg + ray + tail), abs(scale) * (e_seg + e_ray + e_tail)


def _extrapolate_eta(etas, values):
    """Polynomial (Richardson-style) extrapolation to eta = 0.

    Returns (value, spread) where spread compares the quadratic and linear
    extrapolations through the smallest damping values.
    """
    e = list(etas)[-3:]
    v = list(values)[-3:]
    quad_fit = np.polyfit(e, v, 2)
    lin_fit = np.polyfit(e[-2:], v[-2:], 1)
    v_quad = float(np.polyval(quad_fit, 0.0))
    v_lin = float(np.polyval(lin_fit, 0.0))
    return v_quad, abs(v_quad - v_lin)


def potential_oracle(R: float, a: float, atom: AtomSpec,
                     quad: QuadratureSpec = DEFAULT_QUAD,
                     units: UnitSystem | str | None = None) -> PotentialResult:
    """Independent evaluation of the accelerated-pair potential.

    Deformed-path damped integral, extrapolated to zero damping over
    quad.damping_schedule.  Supported for a/(omega0 c) <= 0.1; the
    extrapolation spread is reported as the error estimate and the call
    fails with OracleUnreliableError when the spread exceeds ten times the
    requested relative tolerance.
    """
    u = _resolve_units(atom, units)
    if not R > 0.0:
        raise DomainError(f"separation must be > 0, got {R}")
    if a < 0.0:
        raise DomainError(f"acceleration must be >= 0, got {a}")
    ra = _reduce_atom(atom, u)
    Rt = u.reduce_length(R)
    at = u.reduce_acceleration(a)
    if at > ORACLE_MAX_A:
        raise DomainError(
            f"oracle supports a/(omega0 c) <= {ORACLE_MAX_A}; got {at:.3g}")

    pieces = ("vacuum", "nonthermal_a2", "residue_sum")
    piece_names = {"vacuum": "vacuum", "nonthermal_a2": "nonthermal_a2",
                   "residue_sum": "bose"}
    etas = quad.damping_schedule
    per_piece: dict[str, float] = {}
    quad_err = 0.0
    totals = []
    piece_values = {p: [] for p in pieces}
    for eta in etas:
        tot = 0.0
        for p in pieces:
            if at == 0.0 and p != "vacuum":
                piece_values[p].append(0.0)
                continue
            val, err = _oracle_piece(Rt, at, ra, quad, eta, piece_names[p])
            piece_values[p].append(val)
            quad_err = max(quad_err, err)
            tot += val
        totals.append(tot)

    vt, spread = _extrapolate_eta(etas, totals)
    for p in pieces:
        per_piece[p], _ = _extrapolate_eta(etas, piece_values[p]) \
            if any(piece_values[p]) else (0.0, 0.0)
    # keep the decomposition summing exactly to the extrapolated value
    per_piece["residue_sum"] = vt - per_piece["vacuum"] - per_piece["nonthermal_a2"]

    err_est = spread + quad_err
    if spread > 10.0 * quad.rel_tol * max(abs(vt), quad.abs_tol):
        raise OracleUnreliableError(
            f"damping extrapolation spread {spread:.3e} exceeds "
            f"10 * rel_tol * |value| = {10 * quad.rel_tol * abs(vt):.3e}",
            partial=u.restore_energy(vt), error_estimate=u.restore_energy(err_est))

    return PotentialResult(
        value=u.restore_energy(vt),
        error_estimate=u.restore_energy(err_est),
        parts={k: u.restore_energy(v) for k, v in per_piece.items()},
        regime=classify_regime(R, a, atom, c=u.c),
        warnings=(),
    )


__all__ = [
    "QuadratureSpec",
    "PotentialResult",
    "DEFAULT_QUAD",
    "integrand",
    "potential_inertial",
    "potential_numeric",
    "potential_oracle",
    "u_factor",
    "osc_imag_part",
    "osc_real_part",
]
