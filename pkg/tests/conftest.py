import pytest

from unruhcp import AtomSpec, Transition, two_level


@pytest.fixture(scope="session")
def atom():
    """Two-level reference atom: omega0 = 1, alpha0 = 1 (natural units)."""
    return two_level(1.0, 1.0)


@pytest.fixture(scope="session")
def atom3():
    """Three-transition atom for multi-line checks."""
    return AtomSpec(transitions=(
        Transition(omega=1.0, mu_sq=1.0),
        Transition(omega=2.0, mu_sq=0.5),
        Transition(omega=5.0, mu_sq=2.0),
    ))
