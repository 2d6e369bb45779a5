"""Input-output layer: Lorentzian response, output field, and the rate comparison.

Two prescriptions for the dissipation rate of a polariton resonance are
computed side by side:

* the boundary-condition rate `cavity.kappa_mbc`, evaluated at the
  resonance frequency found from the full transcendental condition, and
* the photon-weight rescaling kappa_rwa = |w|^2 * kappa0, built from the
  discrete two-mode diagonalization in `hopfield`.

`figure2_sweep` tabulates both routes over a grid of coupling strengths
so their opposite trends in the ultrastrong regime are visible in one
table. All quantities are expressed in units of the excitation
frequency (omega_t = 1, c = 1).
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .cavity import CavityConfig, Resonance, find_resonances, tuned_length
from .dielectric import MediumParams
from .errors import ResonanceScanError
from .hopfield import BogoliubovProblem, HopfieldMode, diagonalize, photon_weight
from .tables import SweepTable

__all__ = [
    "polariton_response",
    "output_amplitude",
    "kappa_rwa",
    "kappa_fit",
    "figure2_sweep",
]


def polariton_response(omega, resonance: Resonance):
    """Intracavity polariton amplitude per unit input, i*sqrt(k)/(w - W + ik/2).

    |response|^2 is a Lorentzian of FWHM kappa and peak 4/kappa; its
    integral over omega is 2*pi. Accepts a scalar or array omega.
    """
    if not resonance.kappa > 0:
        raise ValueError("resonance.kappa must be positive")
    w = np.asarray(omega, dtype=float)
    r = 1j * math.sqrt(resonance.kappa) / (
        w - resonance.omega + 0.5j * resonance.kappa
    )
    if r.ndim == 0:
        return complex(r)
    return r


def output_amplitude(omega, resonances: Sequence[Resonance]):
    """Outgoing field per unit input: sum_j sqrt(k_j) p_j - a_in.

    For a single resonance this is -(w - W - ik/2)/(w - W + ik/2), a pure
    phase: +1 on resonance, -1 far away, winding by 2*pi across the line.
    Unit modulus needs well-separated resonances (the one-pole algebra).
    """
    w = np.asarray(omega, dtype=float)
    out = np.full(w.shape, -1.0 + 0.0j)
    for res in resonances:
        out = out + math.sqrt(res.kappa) * polariton_response(w, res)
    if out.ndim == 0:
        return complex(out)
    return out


def kappa_rwa(mode: HopfieldMode, kappa0: float) -> float:
    """Photon-weight rescaling of the bare rate: |w|^2 * kappa0."""
    if not kappa0 > 0:
        raise ValueError("kappa0 must be positive")
    return photon_weight(mode) * kappa0


def kappa_fit(omega, kappa0: float, omega_t: float = 1.0):
    """Inverse-square frequency fit kappa0 / (1 + (omega/omega_t)^2).

    Good-cavity approximation to the boundary-condition rate along the
    tuned-resonance curve; exact where n(W)*W = omega_t holds.
    """
    w = np.asarray(omega, dtype=float) / omega_t
    out = kappa0 / (1.0 + w * w)
    if out.ndim == 0:
        return float(out)
    return out


def _tuned_mode_windows(est_l: float, est_u: float, med: MediumParams):
    # brackets around the expected m = 1 roots on either side of the
    # stop band, wide enough to tolerate the good-cavity frequency pull
    lower = (0.5 * est_l, 1.0 - 0.25 * (1.0 - est_l))
    top = med.omega_longitudinal
    upper = (top + min(1e-3, 0.5 * (est_u - top)), max(4.0, 1.3 * est_u))
    return lower, upper


def _first_fundamental(cfg: CavityConfig, window, rabi: float) -> Resonance:
    try:
        roots = find_resonances(cfg, window)
    except ResonanceScanError as err:
        raise ResonanceScanError(
            f"resonance scan failed at rabi/omega_t = {rabi:g}: {err}"
        ) from err
    for res in roots:
        if res.mode_index == 1:
            return res
    raise ResonanceScanError(
        f"no fundamental resonance in window ({window[0]:g}, {window[1]:g}) "
        f"at rabi/omega_t = {rabi:g}"
    )


def figure2_sweep(
    rabi_grid: Sequence[float],
    lambda_mirror: float,
    kappa0: float | None = None,
) -> SweepTable:
    """Polariton frequencies and rates from both routes over a coupling sweep.

    For each rabi (in units of omega_t): the medium gets 4*pi*beta =
    4*rabi^2, the cavity length stays tuned so the empty fundamental
    sits at omega_t, and the two m = 1 resonances are located on either
    side of the stop band; their kappa_mbc values fill the *_mbc
    columns. Independently, the two-mode problem with photon_freq =
    omega_t is diagonalized for the *_disc frequencies and the
    |w|^2-rescaled rates. kappa0 defaults to the tuned empty-cavity
    rate 2/(lambda_mirror^2 * L).

    Columns: rabi_over_wt, omega_L_mbc, omega_U_mbc, omega_L_disc,
    omega_U_disc, kappa_L_mbc, kappa_U_mbc, kappa_L_rwa, kappa_U_rwa.
    """
    grid = [float(r) for r in rabi_grid]
    if not grid or grid[0] <= 0.0:
        raise ValueError("rabi_grid must be positive")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("rabi_grid must be strictly increasing")
    if not lambda_mirror >= 5.0:
        raise ValueError("lambda_mirror must be in the good-cavity regime (>= 5)")

    cols = {
        name: []
        for name in (
            "omega_L_mbc", "omega_U_mbc", "omega_L_disc", "omega_U_disc",
            "kappa_L_mbc", "kappa_U_mbc", "kappa_L_rwa", "kappa_U_rwa",
        )
    }
    for rabi in grid:
        b4 = 4.0 * rabi * rabi
        med = MediumParams(omega_t=1.0, beta4pi=b4, gamma=0.0)
        length = tuned_length(lambda_mirror, med)
        cfg = CavityConfig(length=length, lambda_mirror=lambda_mirror, medium=med)
        k0 = kappa0 if kappa0 is not None else 2.0 / (lambda_mirror**2 * length)

        # tuned-root estimates from n(W)*W = 1: x^2 - (l+1)x + 1 = 0, x = W^2
        ell = 1.0 + b4
        x_hi = 0.5 * ((ell + 1.0) + math.sqrt((ell + 1.0) ** 2 - 4.0))
        est_u = math.sqrt(x_hi)
        est_l = 1.0 / est_u
        win_lo, win_up = _tuned_mode_windows(est_l, est_u, med)
        res_l = _first_fundamental(cfg, win_lo, rabi)
        res_u = _first_fundamental(cfg, win_up, rabi)

        mode_l, mode_u = diagonalize(BogoliubovProblem(photon_freq=1.0, rabi=rabi))

        cols["omega_L_mbc"].append(res_l.omega)
        cols["omega_U_mbc"].append(res_u.omega)
        cols["omega_L_disc"].append(mode_l.omega)
        cols["omega_U_disc"].append(mode_u.omega)
        cols["kappa_L_mbc"].append(res_l.kappa)
        cols["kappa_U_mbc"].append(res_u.kappa)
        cols["kappa_L_rwa"].append(kappa_rwa(mode_l, k0))
        cols["kappa_U_rwa"].append(kappa_rwa(mode_u, k0))

    return SweepTable(
        [("rabi_over_wt", grid)] + [(name, cols[name]) for name in cols]
    )
