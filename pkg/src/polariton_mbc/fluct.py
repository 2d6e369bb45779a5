"""Equal-time field commutators inside a loss-less dielectric.

For a mode of vacuum wavenumber q the dispersion is solved
self-consistently, Omega_q = q / n(Omega_q), and the commutator weights
of the vector potential, electric field, magnetic field, and
displacement field pick up powers n^-1, n^-3, n^-1, n^+1 of the index
at Omega_q relative to their vacuum values (natural units: hbar =
eps0 = c = 1 and unit quantization area, so the vacuum weights are
1/(2q) for the potential and q/2 for the three fields).

The position-resolved pieces split by propagation direction: the
forward kernel carries exp(+i Re k (z - z')) and the backward kernel
its conjugate, both damped by exp(-Im k |z - z'|). Forward-plus with
backward-minus operators commute identically for z < z' (nothing has
propagated between them), which is structural and carries no numerics.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .dielectric import MediumParams, refractive_index
from .errors import BranchError

__all__ = [
    "FieldCommutators",
    "solve_omega_q",
    "mode_commutators",
    "forward_commutator_decay",
    "backward_commutator_decay",
]


@dataclass(frozen=True)
class FieldCommutators:
    """Equal-time mode commutator weights at one wavenumber q.

    a_comm: vector potential, vacuum value 1/(2q), scales as n^-1.
    e_comm: electric field, vacuum value q/2, scales as n^-3.
    b_comm: magnetic field, vacuum value q/2, scales as n^-1.
    d_comm: displacement field, vacuum value q/2, scales as n^+1.
    """

    a_comm: float
    e_comm: float
    b_comm: float
    d_comm: float


def _real_index(omega: float, p: MediumParams) -> float:
    return refractive_index(omega, p.lossless()).real


def solve_omega_q(q: float, p: MediumParams, branch: str = "auto") -> float:
    """Self-consistent mode frequency: the root of n(W) * W = q.

    The q <-> W map is monotonic on each propagating branch, so the
    branch picks the solution: "lower" lives below omega_t, "upper"
    above the stop band. "auto" chooses lower for q < omega_t and upper
    otherwise, matching which branch the vacuum line q would hit.
    Bisection at gamma = 0 to 1e-12 relative.
    """
    if not q > 0:
        raise ValueError("q must be positive")
    if branch not in ("lower", "upper", "auto"):
        raise ValueError(f"unknown branch {branch!r}")
    wt = p.omega_t
    if branch == "auto":
        branch = "lower" if q < wt else "upper"
    if p.beta4pi == 0.0:
        if branch == "upper" and q < wt:
            raise BranchError("no upper branch in vacuum (beta = 0) below omega_t")
        return q

    def h(w: float) -> float:
        return _real_index(w, p) * w - q

    if branch == "lower":
        # n*W sweeps (0, inf) as W goes (0, omega_t); walk the top
        # bracket toward omega_t until it overshoots q
        delta = 0.5 * wt
        hi = wt - delta
        while h(hi) < 0.0:
            delta *= 0.5
            if delta < 1e-15 * wt:
                raise BranchError(
                    f"lower-branch solve for q = {q:g} stalled at the band edge"
                )
            hi = wt - delta
        lo = min(1e-12 * wt, 0.5 * hi)
    else:
        # n*W again sweeps (0, inf) as W goes (omega_longitudinal, inf)
        top = p.omega_longitudinal
        delta = 0.5 * top
        lo = top + delta
        while h(lo) > 0.0:
            delta *= 0.5
            if delta < 1e-15 * top:
                raise BranchError(
                    f"upper-branch solve for q = {q:g} stalled at the band edge"
                )
            lo = top + delta
        hi = 2.0 * max(q, lo)
        while h(hi) < 0.0:
            hi *= 2.0

    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if h(mid) < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-12 * hi:
            break
    return 0.5 * (lo + hi)


def mode_commutators(q: float, p: MediumParams, branch: str = "auto") -> FieldCommutators:
    """The four equal-time commutator weights at vacuum wavenumber q.

    Evaluates the index at the self-consistent Omega_q on the chosen
    propagating branch (see solve_omega_q) and applies the printed
    powers: n^-1, n^-3, n^-1, n^+1 on A, E, B, D.
    """
    omega_q = solve_omega_q(q, p, branch)
    n = _real_index(omega_q, p)
    return FieldCommutators(
        a_comm=1.0 / (2.0 * q * n),
        e_comm=0.5 * q / n**3,
        b_comm=0.5 * q / n,
        d_comm=0.5 * q * n,
    )


def forward_commutator_decay(
    z: float, zprime: float, omega: float, p: MediumParams
) -> complex:
    """Position-resolved forward commutator kernel in an absorbing medium.

    (1/(4 pi omega)) * (Re n / |n|^2) * exp(i Re k (z - z') - Im k |z - z'|)
    with k = n(omega) * omega. Coincident points give the real positive
    local weight; the modulus decays exponentially with rate Im k.
    Requires gamma > 0 (the decay length diverges as 1/gamma).
    """
    if not omega > 0:
        raise ValueError("omega must be positive")
    if not p.gamma > 0:
        raise ValueError("forward_commutator_decay needs an absorbing medium")
    n = refractive_index(omega, p)
    k = n * omega
    weight = (n.real / abs(n) ** 2) / (4.0 * math.pi * omega)
    dz = z - zprime
    return weight * cmath.exp(1j * k.real * dz - k.imag * abs(dz))


def backward_commutator_decay(
    z: float, zprime: float, omega: float, p: MediumParams
) -> complex:
    """Backward-propagating counterpart: the conjugate kernel.

    Equals conj(forward_commutator_decay(z, z')); equivalently the
    forward kernel with z and z' exchanged.
    """
    return forward_commutator_decay(z, zprime, omega, p).conjugate()
