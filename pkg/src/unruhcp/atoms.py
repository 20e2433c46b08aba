"""Atomic transition data and dynamic polarizability models.

An atom is a list of electric-dipole transitions (omega_r, mu_r^2) in
Gaussian-cgs conventions.  The polarizability attached to them is the
standard oscillator sum

    alpha(k)   = sum_r alpha_r * omega_r^2 / (omega_r^2 - c^2 k^2 - i gamma c k)
    alpha(i u) = sum_r alpha_r * omega_r^2 / (omega_r^2 + c^2 u^2)
    alpha_r    = 2 mu_r^2 / (3 hbar omega_r)

The damping gamma regularizes the resonance poles and is used only by
real-axis evaluation; imaginary-axis quantities and closed forms take
gamma = 0.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import DomainError, InputError

DEFAULT_DAMPING_FRACTION = 1e-6  # gamma = fraction * lowest transition frequency
MAX_DAMPING_FRACTION = 1e-3


@dataclass(frozen=True)
class Transition:
    """One dipole transition: angular frequency and squared matrix element."""

    omega: float
    mu_sq: float

    def __post_init__(self):
        if not self.omega > 0.0:
            raise InputError(f"transition frequency must be positive, got {self.omega}")
        if self.mu_sq < 0.0:
            raise InputError(f"squared dipole element must be >= 0, got {self.mu_sq}")


@dataclass(frozen=True)
class AtomSpec:
    """Ordered transitions plus the linewidth used for real-axis evaluation."""

    transitions: tuple[Transition, ...]
    damping: float = field(default=-1.0)  # sentinel: default to fraction of omega0

    def __post_init__(self):
        if not self.transitions:
            raise InputError("an atom needs at least one transition")
        transitions = tuple(self.transitions)
        object.__setattr__(self, "transitions", transitions)
        omega0 = min(t.omega for t in transitions)
        if self.damping < 0.0:
            object.__setattr__(self, "damping", DEFAULT_DAMPING_FRACTION * omega0)
        if not 0.0 < self.damping <= MAX_DAMPING_FRACTION * omega0:
            raise InputError(
                f"damping must lie in (0, {MAX_DAMPING_FRACTION} * omega0]; "
                f"got {self.damping} with omega0 = {omega0}"
            )
        if not alpha_static(self) > 0.0:
            raise InputError("static polarizability must be strictly positive")

    @property
    def omega0(self) -> float:
        """Lowest transition frequency; anchors natural units and the zones."""
        return min(t.omega for t in self.transitions)

    @property
    def mu_sq_dominant(self) -> float:
        """Squared dipole element of the lowest-frequency transition."""
        return min(self.transitions, key=lambda t: t.omega).mu_sq


def two_level(omega0: float = 1.0, alpha0: float = 1.0, hbar: float = 1.0,
              damping: float = -1.0) -> AtomSpec:
    """Single-transition atom with prescribed static polarizability."""
    mu_sq = 1.5 * hbar * omega0 * alpha0
    return AtomSpec(transitions=(Transition(omega=omega0, mu_sq=mu_sq),), damping=damping)


def oscillator_weights(atom: AtomSpec, hbar: float = 1.0) -> list[float]:
    """Per-transition static polarizability contributions alpha_r."""
    return [2.0 * t.mu_sq / (3.0 * hbar * t.omega) for t in atom.transitions]


def alpha_static(atom: AtomSpec, hbar: float = 1.0) -> float:
    """Static polarizability alpha(0) = (2/3 hbar) sum_r mu_r^2 / omega_r."""
    return sum(2.0 * t.mu_sq / (3.0 * hbar * t.omega) for t in atom.transitions)


def alpha_imag(xi: float, atom: AtomSpec, c: float = 1.0, hbar: float = 1.0) -> float:
    """Polarizability at imaginary wavenumber, alpha(i xi).

    Real, positive and strictly decreasing in xi; equals alpha_static at
    xi = 0.  Raises DomainError for negative xi.
    """
    if xi < 0.0:
        raise DomainError(f"imaginary-axis wavenumber must be >= 0, got {xi}")
    s = 0.0
    for t in atom.transitions:
        w2 = t.omega * t.omega
        s += (2.0 * t.mu_sq / (3.0 * hbar * t.omega)) * w2 / (w2 + (c * xi) ** 2)
    return s


def alpha_real(k: float, atom: AtomSpec, c: float = 1.0, hbar: float = 1.0,
               damping: float | None = None) -> complex:
    """Complex dynamic polarizability at real wavenumber k.

    The linewidth shifts the resonance poles below the real axis; pass
    damping=0.0 only when k is known to be away from every resonance.
    """
    if k < 0.0:
        raise DomainError(f"wavenumber must be >= 0, got {k}")
    gamma = atom.damping if damping is None else damping
    s = 0j
    for t in atom.transitions:
        w2 = t.omega * t.omega
        s += (2.0 * t.mu_sq / (3.0 * hbar * t.omega)) * w2 / (w2 - (c * k) ** 2 - 1j * gamma * c * k)
    return s


def alpha_curvature(atom: AtomSpec, hbar: float = 1.0) -> float:
    """Coefficient of k^2 in alpha^2(k) about k = 0 (gamma = 0, c = 1).

    alpha^2(k) = alpha(0)^2 + alpha_curvature * k^2 + O(k^4); feeds the
    origin expansion of the contour evaluator.
    """
    a0 = alpha_static(atom, hbar)
    s2 = sum(2.0 * t.mu_sq / (3.0 * hbar * t.omega ** 3) for t in atom.transitions)
    return 2.0 * a0 * s2


def load_atom(source) -> AtomSpec:
    """Build an AtomSpec from a JSON file path, file object or dict.

    Accepts either the explicit form
        {"transitions": [{"omega": ..., "mu_sq": ...}, ...], "damping": ...}
    or the two-level shorthand
        {"two_level": {"omega0": ..., "alpha0": ...}, "damping": ...}
    which expands to one transition with mu^2 = 3 hbar omega0 alpha0 / 2.
    """
    if isinstance(source, dict):
        doc = source
    elif hasattr(source, "read"):
        doc = json.load(source)
    else:
        try:
            with open(source, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read atom file {source!r}: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("atom document must be a JSON object")
    damping = float(doc.get("damping", -1.0))
    if "two_level" in doc:
        tl = doc["two_level"]
        try:
            return two_level(float(tl["omega0"]), float(tl["alpha0"]), damping=damping)
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad two_level shorthand: {exc}") from exc
    try:
        transitions = tuple(
            Transition(omega=float(t["omega"]), mu_sq=float(t["mu_sq"]))
            for t in doc["transitions"]
        )
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad transitions list: {exc}") from exc
    return AtomSpec(transitions=transitions, damping=damping)
