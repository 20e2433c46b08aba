"""Physical constants (CODATA 2018) and unit conventions.

Internally all evaluators work in reduced natural units: hbar = c = 1 and
angular frequencies measured in units of the atom's lowest transition
frequency omega0.  Lengths are then c/omega0, accelerations omega0*c and
energies hbar*omega0.  Microscopic atomic data (dipole matrix elements,
polarizabilities) follow Gaussian-cgs conventions, so no factors of
4*pi*eps0 appear in the polarizability sums.
"""

HBAR_SI = 1.054_571_817e-34  # J s
C_SI = 299_792_458.0  # m/s
HBAR_CGS = 1.054_571_817e-27  # erg s
CM3_TO_M3 = 1e-6
