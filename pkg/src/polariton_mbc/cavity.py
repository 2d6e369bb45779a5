"""Delta-mirror cavity: boundary-condition spectra, resonances, dissipation rate.

The cavity occupies 0 < z < L with a perfect mirror at z = L and a thin
partially transparent mirror at z = 0 characterized by the dimensionless
parameter Lambda (large Lambda = good cavity). Inside is the polariton
medium of `dielectric`; outside is vacuum.

Conventions (c = 1): an incoming unit wave from z < 0 produces the
intracavity standing-wave amplitude `intracavity_transfer` and the
reflected amplitude `reflection`. Resonances solve

    tan(n(W) * W * L) = n(W) / Lambda

and each carries the boundary-condition dissipation rate

    kappa_mbc(W) = 2 * n(W) * v_g(W) / (Lambda**2 * L).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dielectric import MediumParams, group_velocity, refractive_index, in_stop_band
from .errors import PeakExtractionError, ResonanceScanError, StopBandError
from .hopfield import Branch
from .tables import SweepTable

__all__ = [
    "CavityConfig",
    "Resonance",
    "intracavity_transfer",
    "reflection",
    "find_resonances",
    "kappa_mbc",
    "kappa_bare",
    "tuned_length",
    "lorentzian_prefactor",
    "lorentzian_extract",
]


@dataclass(frozen=True)
class CavityConfig:
    """Cavity length, front-mirror transparency parameter, and the enclosed medium."""

    length: float
    lambda_mirror: float
    medium: MediumParams

    def __post_init__(self):
        if not self.length > 0:
            raise ValueError("length must be positive")
        if not self.lambda_mirror > 0:
            raise ValueError("lambda_mirror must be positive")

    def good_cavity_ratio(self, omega: float) -> float:
        """Lambda / |n(omega)|; >> 1 in the good-cavity regime."""
        return self.lambda_mirror / abs(refractive_index(omega, self.medium))


@dataclass(frozen=True)
class Resonance:
    """A cavity resonance: center frequency, dissipation rate, branch, mode index.

    mode_index counts the tan branch, m = floor(n*W*L/pi) at the root.
    The tuned fundamental has m = 1; a sub-fundamental m = 0 root exists
    near W ~ 1/(Lambda*L) and is reported as such when a search window
    includes it.
    """

    omega: float
    kappa: float
    branch: Branch
    mode_index: int


def _index(omega, cfg: CavityConfig):
    return refractive_index(omega, cfg.medium)


def intracavity_transfer(omega, cfg: CavityConfig):
    """Intracavity amplitude per unit incoming amplitude.

    T(w) = 2 / {(1 - i*Lambda) sin(k L) + i n cos(k L)},  k = n w.

    |T| peaks at the resonances. If n is non-finite (gamma = 0 exactly
    at the pole) the non-finite sentinel propagates to the result.
    """
    n = np.asarray(_index(omega, cfg))
    kl = n * np.asarray(omega, dtype=complex) * cfg.length
    den = (1.0 - 1j * cfg.lambda_mirror) * np.sin(kl) + 1j * n * np.cos(kl)
    t = 2.0 / den
    if t.ndim == 0:
        return complex(t)
    return t


def reflection(omega, cfg: CavityConfig):
    """Reflected amplitude r(w) = T(w) sin(k L) - 1.

    For gamma = 0 and omega in a transparency window the numerator of
    the combined expression is the conjugate of its denominator, so
    |r| = 1: the loss-less cavity with a perfect back mirror returns
    all the energy. Absorption (gamma > 0, beta4pi > 0) pulls |r|
    below 1 near the excitation resonance.
    """
    n = np.asarray(_index(omega, cfg))
    kl = n * np.asarray(omega, dtype=complex) * cfg.length
    r = intracavity_transfer(omega, cfg) * np.sin(kl) - 1.0
    if np.ndim(r) == 0:
        return complex(r)
    return r


def tuned_length(lambda_mirror: float, medium: MediumParams) -> float:
    """Shortest length past one half-wave that puts the bare m = 1 mode at omega_t.

    L = (pi + arctan(1/Lambda)) / omega_t; tends to pi/omega_t for an
    ideal mirror.
    """
    if not lambda_mirror > 0:
        raise ValueError("lambda_mirror must be positive")
    return (math.pi + math.atan(1.0 / lambda_mirror)) / medium.omega_t


def kappa_mbc(omega: float, cfg: CavityConfig) -> float:
    """Boundary-condition dissipation rate 2 n v_g / (Lambda**2 L), gamma = 0.

    Raises StopBandError (propagated from group_velocity) inside the
    stop band.
    """
    p = cfg.medium.lossless()
    n = refractive_index(omega, p).real
    vg = group_velocity(omega, p)
    return 2.0 * n * vg / (cfg.lambda_mirror**2 * cfg.length)


def kappa_bare(cfg: CavityConfig) -> float:
    """Empty-cavity rate kappa_0 = 2 / (Lambda**2 L)."""
    return 2.0 / (cfg.lambda_mirror**2 * cfg.length)


def lorentzian_prefactor(omega: float, cfg: CavityConfig) -> float:
    """sqrt(2 v_g / (n L)): mode-normalization prefactor of the near-resonance form.

    Near a good-cavity resonance W the intracavity amplitude is
    T(w) ~ prefactor * i*sqrt(kappa) / (w - W + i*kappa/2); exposed so
    the normalization consistency can be tested against the full
    boundary-condition line shape.
    """
    p = cfg.medium.lossless()
    n = refractive_index(omega, p).real
    vg = group_velocity(omega, p)
    return math.sqrt(2.0 * vg / (n * cfg.length))


def _resonance_function(cfg: CavityConfig):
    """f(W) = tan(n W L) - n/Lambda on the gamma = 0 transparent windows."""
    p = cfg.medium.lossless()
    L, lam = cfg.length, cfg.lambda_mirror

    def f(w):
        n = np.asarray(refractive_index(w, p)).real
        return np.tan(n * np.asarray(w, dtype=float) * L) - n / lam

    return f


def _bisect_root(f, a: float, b: float, tol: float):
    fa, fb = f(a), f(b)
    for _ in range(120):
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:  # interval at floating-point resolution
            break
        fm = f(mid)
        if fa * fm <= 0.0:
            b, fb = mid, fm
        else:
            a, fa = mid, fm
        if b - a < tol and min(abs(fa), abs(fb)) < 1e-9:
            break
    return (a, b) if abs(fa) <= abs(fb) else (b, a)


def _transparent_legs(lo: float, hi: float, p: MediumParams):
    """Clip [lo, hi] to the transparency windows, skipping the stop band."""
    if p.beta4pi == 0.0:
        return [(lo, hi)]
    wt, wl = p.stop_band()
    edge = 1e-9 * p.omega_t
    legs = []
    if lo < wt:
        legs.append((lo, min(hi, wt - edge)))
    if hi > wl:
        legs.append((max(lo, wl + edge), hi))
    return [(a, b) for a, b in legs if b > a]


def find_resonances(
    cfg: CavityConfig,
    omega_range: tuple[float, float],
    max_count: int | None = None,
    subintervals: int = 2000,
) -> list[Resonance]:
    """All resolvable roots of tan(n W L) = n/Lambda in omega_range, ascending.

    Sign-change scan over `subintervals` cells per transparent leg, then
    bisection to |dW| < 1e-12 * omega_t. Cells that bracket a pole of
    tan instead of a root are rejected by the residual magnitude test.
    The stop band is skipped automatically when the range straddles it.

    Scanning stops once `max_count` roots are collected. Within a leg
    the mode indices of consecutive roots must be consecutive integers;
    a gap means two crossings shared one scan cell and raises
    ResonanceScanError (raise `subintervals`, shrink the window, or use
    `max_count` to stop before the unresolvable region).
    """
    lo, hi = omega_range
    if not (lo < hi):
        raise ValueError("empty frequency range")
    if not lo > 0:
        raise ValueError("range must be positive")
    p = cfg.medium.lossless()
    legs = _transparent_legs(lo, hi, p)
    if not legs:
        raise StopBandError(
            f"range [{lo:g}, {hi:g}] lies inside the stop band {p.stop_band()}"
        )

    f = _resonance_function(cfg)
    tol = 1e-12 * p.omega_t
    found: list[Resonance] = []
    for leg_lo, leg_hi in legs:
        grid = np.linspace(leg_lo, leg_hi, subintervals + 1)
        fg = f(grid)
        sign = np.sign(fg)
        # a grid point landing exactly on a root gives sign 0 and would
        # hide the crossing from the product test; claim the cell for it
        hits = sign == 0.0
        crossings = (sign[:-1] * sign[1:] < 0.0) | hits[:-1] | hits[1:]
        last_m = None
        for i in np.nonzero(crossings)[0]:
            if hits[i]:
                root = float(grid[i])
            elif hits[i + 1]:
                if i + 1 < len(grid) - 1:
                    continue  # the next cell claims this exact hit
                root = float(grid[i + 1])
            else:
                root, _ = _bisect_root(f, float(grid[i]), float(grid[i + 1]), tol)
            resid = abs(float(f(root)))
            if resid >= 1e-9:
                continue  # a pole of tan, not a root
            n = refractive_index(root, p).real
            m = int(math.floor(n * root * cfg.length / math.pi))
            if last_m is not None and m != last_m + 1:
                raise ResonanceScanError(
                    f"roots skipped between mode {last_m} and mode {m} near "
                    f"omega = {root:g}: scan resolution insufficient"
                )
            last_m = m
            branch = Branch.BARE
            if p.beta4pi > 0.0:
                branch = Branch.LOWER if root < p.omega_t else Branch.UPPER
            found.append(Resonance(root, kappa_mbc(root, cfg), branch, m))
            if max_count is not None and len(found) >= max_count:
                return found
    return found


def lorentzian_extract(spectrum: SweepTable) -> tuple[float, float]:
    """Peak center and FWHM of a sampled line |T|^2 -> (omega_c, kappa).

    Expects a table whose first column is the frequency axis and whose
    second column is the intensity, covering one isolated peak with
    enough points (>= 50 across >= 6 half-widths) for interpolation.
    The center comes from a parabola through the three samples around
    the maximum; the width from linear interpolation of the half-maximum
    crossings. Raises PeakExtractionError if the peak touches the grid
    boundary or a half-maximum crossing is not bracketed.
    """
    names = spectrum.names
    w = np.asarray(spectrum.column(names[0]))
    y = np.asarray(spectrum.column(names[1]))
    i = int(np.argmax(y))
    if i == 0 or i == len(y) - 1:
        raise PeakExtractionError("peak touches the grid boundary")
    # parabolic refinement of the vertex
    y0, y1, y2 = y[i - 1], y[i], y[i + 1]
    denom = y0 - 2.0 * y1 + y2
    if denom == 0.0:
        raise PeakExtractionError("flat-top peak, cannot interpolate the center")
    shift = 0.5 * (y0 - y2) / denom
    center = w[i] + shift * (w[i + 1] - w[i])
    peak = y1 - 0.25 * (y0 - y2) * shift
    half = 0.5 * peak

    def crossing(direction: int) -> float:
        j = i
        while 0 <= j + direction < len(y):
            j += direction
            if y[j] < half:
                # linear interpolation between j and j-direction
                a, b = j - direction, j
                frac = (y[a] - half) / (y[a] - y[b])
                return float(w[a] + frac * (w[b] - w[a]))
        raise PeakExtractionError("half-maximum crossing not bracketed by the grid")

    left = crossing(-1)
    right = crossing(+1)
    return float(center), right - left
