"""Lorentz-oscillator medium: dielectric function and bulk dispersion helpers.

Natural units are used throughout the package: c = hbar = eps0 = 1, and
frequencies are quoted in units of the transverse excitation frequency
(omega_t = 1 by default). Frequency arguments accept scalars or numpy
arrays and the return value matches the input shape.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import StopBandError

__all__ = [
    "MediumParams",
    "epsilon",
    "refractive_index",
    "wavenumber",
    "group_velocity",
    "in_stop_band",
    "bulk_dispersion",
]


@dataclass(frozen=True)
class MediumParams:
    """Parameters of the polariton medium.

    omega_t
        Transverse excitation frequency, > 0. Acts as the natural
        frequency unit (default 1.0).
    beta4pi
        Dimensionless light-matter coupling written as 4*pi*beta, >= 0.
    gamma
        Small numerical damping standing in for the positive
        infinitesimal in the retarded response. Default 1e-9 (in units
        of omega_t = 1), small enough to be invisible at the package
        tolerances while keeping the pole off the real axis. Functions
        that require the strict loss-less limit evaluate at gamma = 0
        internally and say so in their docstrings.
    """

    omega_t: float = 1.0
    beta4pi: float = 0.0
    gamma: float = 1e-9

    def __post_init__(self):
        if not self.omega_t > 0:
            raise ValueError("omega_t must be positive")
        if self.beta4pi < 0:
            raise ValueError("beta4pi must be non-negative")
        if self.gamma < 0:
            raise ValueError("gamma must be non-negative")

    @property
    def omega_longitudinal(self) -> float:
        """Zero of the loss-less dielectric function, omega_t*sqrt(1 + 4*pi*beta)."""
        return self.omega_t * math.sqrt(1.0 + self.beta4pi)

    @property
    def rabi(self) -> float:
        """Vacuum Rabi frequency omega_t*sqrt(4*pi*beta)/2."""
        return 0.5 * self.omega_t * math.sqrt(self.beta4pi)

    def stop_band(self) -> tuple[float, float]:
        """The (omega_t, omega_longitudinal) window with no propagating bulk mode."""
        return (self.omega_t, self.omega_longitudinal)

    def lossless(self) -> "MediumParams":
        """Copy of these parameters with gamma set to exactly zero."""
        if self.gamma == 0.0:
            return self
        return MediumParams(self.omega_t, self.beta4pi, 0.0)


def epsilon(omega, p: MediumParams):
    """Complex dielectric function of the medium.

    eps(omega) = 1 + 4*pi*beta * omega_t**2 / (omega_t**2 - (omega + i*gamma)**2)

    Total in complex arithmetic. Hitting the pole exactly (gamma = 0 and
    omega = omega_t) returns a non-finite value (the inf sentinel);
    callers that can reach the pole must check np.isfinite.
    """
    z = np.asarray(omega, dtype=complex) + 1j * p.gamma
    if p.beta4pi == 0.0:
        # no oscillator: eps is 1 everywhere, including at omega_t where
        # the formula below would evaluate 0 * inf
        eps = np.ones_like(z)
    else:
        wt2 = p.omega_t * p.omega_t
        with np.errstate(divide="ignore", invalid="ignore"):
            eps = 1.0 + p.beta4pi * wt2 / (wt2 - z * z)
    if eps.ndim == 0:
        return complex(eps)
    return eps


def refractive_index(omega, p: MediumParams):
    """Square root of epsilon on the branch with Im n >= 0.

    The branch describes decaying (causal) waves; when Im n = 0 exactly
    the real part is taken >= 0. In the stop band at gamma = 0 the
    result is purely imaginary.
    """
    n = np.sqrt(np.asarray(epsilon(omega, p), dtype=complex))
    n = np.where(n.imag < 0.0, -n, n)
    if n.ndim == 0:
        return complex(n)
    return n


def wavenumber(omega, p: MediumParams):
    """Medium wavenumber k = n(omega) * omega (c = 1)."""
    k = np.asarray(refractive_index(omega, p)) * np.asarray(omega, dtype=complex)
    if k.ndim == 0:
        return complex(k)
    return k


def in_stop_band(omega, p: MediumParams):
    """True where omega lies in the closed stop band [omega_t, omega_longitudinal].

    The band edges themselves are included: the index diverges at
    omega_t and the group velocity vanishes at both edges, so neither
    supports a propagating bulk mode. Always False for beta4pi = 0.
    """
    if p.beta4pi == 0.0:
        return np.zeros(np.shape(omega), dtype=bool) if np.ndim(omega) else False
    w = np.asarray(omega, dtype=float)
    inside = (w >= p.omega_t) & (w <= p.omega_longitudinal)
    if inside.ndim == 0:
        return bool(inside)
    return inside


def group_velocity(omega, p: MediumParams):
    """Group velocity on a propagating branch, evaluated at gamma = 0.

    Closed form (c = 1):

        v_g = n(omega) * (u - 1)**2 / ((u - 1)**2 + 4*pi*beta),   u = (omega/omega_t)**2

    which equals 1/(d(n*omega)/domega) along the dispersion; the test
    suite keeps the finite-difference derivative as an independent
    check. Satisfies 0 < v_g <= 1 and tends to 1/sqrt(1 + 4*pi*beta)
    as omega -> 0 and to 0 at the band edges.

    Raises StopBandError if omega lies in the stop band (band edges
    included), where no propagating mode exists.
    """
    w = np.asarray(omega, dtype=float)
    if np.any(w <= 0.0):
        raise ValueError("group_velocity needs omega > 0")
    if np.any(in_stop_band(w, p)):
        lo, hi = p.stop_band()
        raise StopBandError(
            f"omega inside the stop band [{lo:g}, {hi:g}]: no propagating mode"
        )
    if p.beta4pi == 0.0:
        # vacuum: avoids the 0/0 of the closed form at omega = omega_t
        return np.ones_like(w) if w.ndim else 1.0
    u = (w / p.omega_t) ** 2
    n = np.asarray(refractive_index(w, p.lossless())).real
    vg = n * (u - 1.0) ** 2 / ((u - 1.0) ** 2 + p.beta4pi)
    if vg.ndim == 0:
        return float(vg)
    return vg


def bulk_dispersion(k, p: MediumParams):
    """Both branch frequencies (omega_lower, omega_upper) at wavenumber k.

    Solves omega**2 * eps(omega) = k**2 at gamma = 0, i.e. the quartic

        omega**4 - omega**2 (k**2 + omega_long**2) + k**2 omega_t**2 = 0.

    The lower branch saturates at omega_t from below as k grows; the
    upper branch starts at omega_longitudinal for k = 0. For beta = 0
    this degenerates to min(k, omega_t) and max(k, omega_t). Written in
    product form so small roots keep full relative accuracy.
    """
    kk = np.asarray(k, dtype=float)
    if np.any(kk < 0.0):
        raise ValueError("wavenumber must be non-negative")
    wt2 = p.omega_t * p.omega_t
    s = kk * kk + p.omega_longitudinal ** 2
    big = s + np.sqrt(s * s - 4.0 * kk * kk * wt2)
    upper = np.sqrt(0.5 * big)
    lower = math.sqrt(2.0) * kk * p.omega_t / np.sqrt(big)
    if upper.ndim == 0:
        return float(lower), float(upper)
    return lower, upper
