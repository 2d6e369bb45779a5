"""Lorentzian response, phase-only output, rate rescalings, coupling sweep."""

import math

import numpy as np
import pytest

from polariton_mbc import (
    BogoliubovProblem,
    Branch,
    CavityConfig,
    MediumParams,
    Resonance,
    diagonalize,
    figure2_sweep,
    kappa_bare,
    kappa_fit,
    kappa_rwa,
    output_amplitude,
    photon_weight,
    polariton_response,
    tuned_length,
)

RES = Resonance(omega=1.0, kappa=1e-2, branch=Branch.BARE, mode_index=1)


def test_response_peak_and_width():
    # |p|^2 is a Lorentzian: peak 4/kappa on resonance, half max at +/- kappa/2
    peak = abs(polariton_response(RES.omega, RES)) ** 2
    assert peak == pytest.approx(4.0 / RES.kappa, rel=1e-12)
    half = abs(polariton_response(RES.omega + 0.5 * RES.kappa, RES)) ** 2
    assert half == pytest.approx(0.5 * peak, rel=1e-12)
    half = abs(polariton_response(RES.omega - 0.5 * RES.kappa, RES)) ** 2
    assert half == pytest.approx(0.5 * peak, rel=1e-12)


def test_response_integral_is_two_pi():
    # the line area is fixed by the decay rate alone
    ws = np.linspace(RES.omega - 400 * RES.kappa, RES.omega + 400 * RES.kappa, 400001)
    y = np.abs(polariton_response(ws, RES)) ** 2
    area = float(np.sum(0.5 * (y[1:] + y[:-1]) * np.diff(ws)))
    # the clipped tails carry about 2 kappa / (400 kappa) of the area
    assert area == pytest.approx(2.0 * math.pi, rel=2e-3)


def test_response_validates_kappa():
    bad = Resonance(omega=1.0, kappa=0.0, branch=Branch.BARE, mode_index=1)
    with pytest.raises(ValueError):
        polariton_response(1.0, bad)


def test_output_is_pure_phase_for_a_single_mode():
    rng = np.random.default_rng(61)
    ws = RES.omega + RES.kappa * rng.uniform(-2000.0, 2000.0, 10000)
    out = output_amplitude(ws, [RES])
    assert np.max(np.abs(np.abs(out) - 1.0)) < 1e-12


def test_output_limits_and_winding():
    # +1 on resonance, -1 far away, and a full 2 pi of phase across the line
    assert output_amplitude(RES.omega, [RES]) == pytest.approx(1.0 + 0j, abs=1e-12)
    assert output_amplitude(RES.omega + 1e6 * RES.kappa, [RES]) == pytest.approx(
        -1.0 + 0j, abs=1e-3
    )
    ws = np.linspace(RES.omega - 500 * RES.kappa, RES.omega + 500 * RES.kappa, 20001)
    phases = np.unwrap(np.angle(output_amplitude(ws, [RES])))
    total = abs(phases[-1] - phases[0])
    assert total == pytest.approx(2.0 * math.pi, abs=0.02)


def test_two_distant_modes_superpose():
    other = Resonance(omega=2.0, kappa=1e-2, branch=Branch.BARE, mode_index=2)
    out = output_amplitude(np.array([1.0, 2.0]), [RES, other])
    # on either resonance the other mode contributes at order kappa/separation
    assert abs(out[0] - 1.0) < 0.05
    assert abs(out[1] - 1.0) < 0.05


def test_kappa_rwa_is_photon_weight_rescaling():
    prob = BogoliubovProblem(photon_freq=1.0, omega_t=1.0, rabi=0.8)
    lo, up = diagonalize(prob)
    k0 = 1e-2
    assert kappa_rwa(lo, k0) == pytest.approx(photon_weight(lo) * k0, rel=1e-15)
    assert kappa_rwa(up, k0) == pytest.approx(photon_weight(up) * k0, rel=1e-15)
    with pytest.raises(ValueError):
        kappa_rwa(lo, 0.0)


def test_kappa_fit_formula():
    assert kappa_fit(1.0, 1e-2) == pytest.approx(5e-3, rel=1e-15)
    assert kappa_fit(0.0, 1e-2) == pytest.approx(1e-2, rel=1e-15)
    ws = np.array([0.5, 1.0, 2.0])
    got = kappa_fit(ws, 2e-2, omega_t=2.0)
    expect = 2e-2 / (1.0 + (ws / 2.0) ** 2)
    assert np.max(np.abs(got - expect)) < 1e-17


def test_sweep_weak_coupling_splits_symmetrically():
    tab = figure2_sweep([0.05], 7.822)
    row = {name: tab.column(name)[0] for name in tab.names}
    assert row["rabi_over_wt"] == 0.05
    # both routes put the lines close to omega_t -/+ rabi
    assert row["omega_L_mbc"] == pytest.approx(0.95, rel=1e-2)
    assert row["omega_U_mbc"] == pytest.approx(1.05, rel=1e-2)
    assert row["omega_L_disc"] == pytest.approx(0.95, rel=2e-3)
    assert row["omega_U_disc"] == pytest.approx(1.05, rel=2e-3)
    # all four rates sit near the even split kappa0/2
    med = MediumParams()
    cav = CavityConfig(length=tuned_length(7.822, med), lambda_mirror=7.822, medium=med)
    k0 = kappa_bare(cav)
    for key in ("kappa_L_mbc", "kappa_U_mbc", "kappa_L_rwa", "kappa_U_rwa"):
        assert row[key] == pytest.approx(0.5 * k0, rel=0.1), key


def test_sweep_column_layout():
    tab = figure2_sweep([0.3, 0.7], 7.822)
    assert tab.names == [
        "rabi_over_wt",
        "omega_L_mbc",
        "omega_U_mbc",
        "omega_L_disc",
        "omega_U_disc",
        "kappa_L_mbc",
        "kappa_U_mbc",
        "kappa_L_rwa",
        "kappa_U_rwa",
    ]
    assert len(tab) == 2


def test_sweep_routes_agree_on_the_upper_line_into_ultrastrong():
    # boundary-condition and single-mode frequencies track each other
    # within a few percent up to rabi ~ omega_t
    tab = figure2_sweep(np.linspace(0.1, 1.0, 10), 7.822)
    mbc = np.array(tab.column("omega_U_mbc"))
    disc = np.array(tab.column("omega_U_disc"))
    assert np.max(np.abs(mbc - disc) / disc) < 0.05
    lower_mbc = np.array(tab.column("omega_L_mbc"))
    lower_disc = np.array(tab.column("omega_L_disc"))
    assert np.max(np.abs(lower_mbc - lower_disc) / lower_disc) < 0.05


def test_sweep_rates_split_between_models_at_strong_coupling():
    # the two dissipation-rate prescriptions diverge from each other as
    # the coupling grows: that disagreement is the point of the table
    tab = figure2_sweep(np.linspace(0.2, 1.5, 8), 7.822)
    up_mbc = np.array(tab.column("kappa_U_mbc"))
    up_rwa = np.array(tab.column("kappa_U_rwa"))
    assert np.all(np.diff(up_mbc) < 0.0)
    assert np.all(np.diff(up_rwa) > 0.0)
    assert up_rwa[-1] > 10.0 * up_mbc[-1]


def test_sweep_explicit_kappa0_scales_rwa_rates():
    base = figure2_sweep([0.5], 7.822)
    doubled = figure2_sweep([0.5], 7.822, kappa0=2.0 * kappa_bare(
        CavityConfig(
            length=tuned_length(7.822, MediumParams()),
            lambda_mirror=7.822,
            medium=MediumParams(),
        )
    ))
    for key in ("kappa_L_rwa", "kappa_U_rwa"):
        assert doubled.column(key)[0] == pytest.approx(2.0 * base.column(key)[0], rel=1e-12)
    # boundary-condition rates do not depend on the bare-rate input
    for key in ("kappa_L_mbc", "kappa_U_mbc"):
        assert doubled.column(key)[0] == pytest.approx(base.column(key)[0], rel=1e-12)


def test_sweep_validation():
    with pytest.raises(ValueError):
        figure2_sweep([], 7.822)
    with pytest.raises(ValueError):
        figure2_sweep([0.5, 0.4], 7.822)
    with pytest.raises(ValueError):
        figure2_sweep([0.0, 0.5], 7.822)
    with pytest.raises(ValueError):
        figure2_sweep([0.5], 3.0)
