"""Bulk metal parameters, derived transport quantities and film geometry.

Everything is in Gaussian-CGS units: lengths in cm, times in s, angular
frequencies in rad/s, conductivities in 1/s.  This is the unit system in
which the film admittance 2*pi*d*sigma/c is dimensionless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "C_LIGHT",
    "MaterialParams",
    "DerivedBulk",
    "FilmSetup",
    "derive_bulk",
    "sodium_preset",
]

#: speed of light in vacuum, cm/s
C_LIGHT = 2.99792458e10


def _check_positive(name: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0.0):
        raise ValueError(f"{name} must be positive and finite, got {value!r}")


@dataclass(frozen=True)
class MaterialParams:
    """Bulk properties of a free-electron metal.

    Attributes
    ----------
    omega_p : float
        plasma frequency, rad/s
    v_f : float
        Fermi velocity, cm/s
    nu : float
        volume electron collision frequency, 1/s
    """

    omega_p: float
    v_f: float
    nu: float

    def __post_init__(self) -> None:
        _check_positive("omega_p", self.omega_p)
        _check_positive("v_f", self.v_f)
        _check_positive("nu", self.nu)


@dataclass(frozen=True)
class DerivedBulk:
    """Transport quantities derived from :class:`MaterialParams`.

    Attributes
    ----------
    tau : float
        electron relaxation time 1/nu, s
    l : float
        mean free path v_f*tau, cm
    sigma_0 : float
        static conductivity omega_p**2*tau/(4*pi), 1/s
    delta_0 : float
        minimal (infrared-limit) skin depth c/omega_p, cm
    """

    tau: float
    l: float
    sigma_0: float
    delta_0: float


@dataclass(frozen=True)
class FilmSetup:
    """Film geometry and illumination.

    Attributes
    ----------
    d : float
        film thickness, cm; must be > 0 (the size-effect formulas are
        undefined for a zero-thickness film)
    theta : float
        angle of incidence, rad, in [0, pi/2]; pi/2 is the grazing
        boundary handled by the analytic limit downstream
    omega : float
        field angular frequency, rad/s, >= 0 (omega = 0 is the static limit)
    p : float
        surface specularity in [0, 1]; p = 1 means mirror reflection of
        electrons, p = 0 fully diffuse scattering
    """

    d: float
    theta: float
    omega: float
    p: float

    def __post_init__(self) -> None:
        _check_positive("d", self.d)
        if not (math.isfinite(self.theta) and 0.0 <= self.theta <= math.pi / 2):
            raise ValueError(f"theta must lie in [0, pi/2], got {self.theta!r}")
        if not (math.isfinite(self.omega) and self.omega >= 0.0):
            raise ValueError(f"omega must be finite and >= 0, got {self.omega!r}")
        if not (math.isfinite(self.p) and 0.0 <= self.p <= 1.0):
            raise ValueError(f"p must lie in [0, 1], got {self.p!r}")


def derive_bulk(m: MaterialParams) -> DerivedBulk:
    """Compute relaxation time, mean free path, static conductivity and skin depth.

    Pure function of the material parameters; see :class:`DerivedBulk`
    for the definitions and units.
    """
    tau = 1.0 / m.nu
    return DerivedBulk(
        tau=tau,
        l=m.v_f * tau,
        sigma_0=m.omega_p**2 * tau / (4.0 * math.pi),
        delta_0=C_LIGHT / m.omega_p,
    )


def sodium_preset() -> MaterialParams:
    """Sodium: omega_p = 6.5e15 rad/s, v_F = 8.52e7 cm/s, nu = 1e-3*omega_p."""
    return MaterialParams(omega_p=6.5e15, v_f=8.52e7, nu=6.5e12)
