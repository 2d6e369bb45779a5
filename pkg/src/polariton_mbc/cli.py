"""Command-line front end: sweeps to CSV files plus optional SVG plots.

Every command reads the layered configuration (defaults, then an
optional --config file, then --set overrides), runs one computation,
and writes CSV files whose comment header carries the fully resolved
configuration. Exit codes: 0 success, 1 configuration error,
2 numerical-tolerance failure, 3 I/O error.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from .cavity import (
    intracavity_transfer,
    find_resonances,
    kappa_bare,
    kappa_mbc,
    reflection,
)
from .config import RunConfig, load_config
from .dielectric import bulk_dispersion, group_velocity, in_stop_band, refractive_index
from .errors import ConfigError, PolaritonError, ToleranceError
from .fluct import mode_commutators, solve_omega_q
from .greens import delta_jump, green_coefficients, green_function, ode_residual
from .hopfield import BogoliubovProblem, diagonalize
from .iomodel import figure2_sweep, kappa_fit
from .svgplot import write_svg
from .tables import SweepTable, write_csv

_GREENS_SEED = 20260817


def _comments(cfg: RunConfig, command: str) -> list[str]:
    return [f"polariton-mbc {command}", *cfg.resolved()]


def _csv_path(cfg: RunConfig, name: str) -> str:
    return os.path.join(cfg.out_dir, name)


def cmd_dispersion(cfg: RunConfig) -> None:
    """Bulk branch frequencies, index, and group velocity over a wavenumber sweep."""
    med = cfg.medium
    ks = np.linspace(cfg.sweep_start, cfg.sweep_stop, cfg.sweep_count)
    wl, wu = bulk_dispersion(ks, med)
    loss0 = med.lossless()
    n_l = np.asarray(refractive_index(wl, loss0)).real
    n_u = np.asarray(refractive_index(wu, loss0)).real
    vg_l = np.asarray(group_velocity(wl, med))
    vg_u = np.asarray(group_velocity(wu, med))
    table = SweepTable(
        [
            ("k", ks),
            ("omega_L", wl),
            ("omega_U", wu),
            ("n_L", n_l),
            ("n_U", n_u),
            ("vg_L", vg_l),
            ("vg_U", vg_u),
        ]
    )
    table.write_csv(_csv_path(cfg, "dispersion.csv"), _comments(cfg, "dispersion"))
    if cfg.svg:
        write_svg(
            _csv_path(cfg, "dispersion.svg"),
            [
                ("lower branch", ks, wl, "solid"),
                ("upper branch", ks, wu, "solid"),
                ("light line", ks, ks, "dotted"),
            ],
            title="bulk polariton dispersion",
            xlabel="wavenumber k (omega_t/c)",
            ylabel="frequency (omega_t)",
        )


def cmd_hopfield(cfg: RunConfig) -> None:
    """Two-mode eigenfrequencies and mode weights over a coupling sweep."""
    wt = cfg.medium.omega_t
    grid = np.linspace(cfg.sweep_start, cfg.sweep_stop, cfg.sweep_count)
    cols: dict[str, list[float]] = {
        name: []
        for name in (
            "omega_L", "omega_U",
            "w2_L", "x2_L", "y2_L", "z2_L",
            "w2_U", "x2_U", "y2_U", "z2_U",
        )
    }
    for r in grid:
        lo, up = diagonalize(BogoliubovProblem(photon_freq=wt, omega_t=wt, rabi=r * wt))
        cols["omega_L"].append(lo.omega / wt)
        cols["omega_U"].append(up.omega / wt)
        for tag, mode in (("L", lo), ("U", up)):
            cols[f"w2_{tag}"].append(abs(mode.w) ** 2)
            cols[f"x2_{tag}"].append(abs(mode.x) ** 2)
            cols[f"y2_{tag}"].append(abs(mode.y) ** 2)
            cols[f"z2_{tag}"].append(abs(mode.z) ** 2)
    table = SweepTable(
        [("rabi_over_wt", list(grid))] + [(k, v) for k, v in cols.items()]
    )
    table.write_csv(_csv_path(cfg, "hopfield.csv"), _comments(cfg, "hopfield"))
    if cfg.svg:
        write_svg(
            _csv_path(cfg, "hopfield.svg"),
            [
                ("omega_L", grid, cols["omega_L"], "solid"),
                ("omega_U", grid, cols["omega_U"], "solid"),
                ("photon weight L", grid, cols["w2_L"], "dashed"),
                ("photon weight U", grid, cols["w2_U"], "dashed"),
            ],
            title="two-mode polariton branches at resonance",
            xlabel="rabi / omega_t",
            ylabel="frequency (omega_t) / weight",
        )


def cmd_resonances(cfg: RunConfig) -> None:
    """Scan a frequency window for cavity resonances; count = scan subintervals."""
    cavity = cfg.cavity()
    found = find_resonances(
        cavity,
        (cfg.sweep_start, cfg.sweep_stop),
        subintervals=max(cfg.sweep_count, 2),
    )
    rows = [(res.omega, res.kappa, str(res.branch), res.mode_index) for res in found]
    write_csv(
        _csv_path(cfg, "resonances.csv"),
        ["omega", "kappa", "branch", "mode_index"],
        rows,
        _comments(cfg, "resonances"),
    )


def cmd_spectrum(cfg: RunConfig) -> None:
    """Intracavity intensity and reflected amplitude over a frequency sweep."""
    cavity = cfg.cavity()
    ws = np.linspace(cfg.sweep_start, cfg.sweep_stop, cfg.sweep_count)
    t = np.asarray(intracavity_transfer(ws, cavity))
    r = np.asarray(reflection(ws, cavity))
    table = SweepTable(
        [
            ("omega", ws),
            ("t2", np.abs(t) ** 2),
            ("re_r", r.real),
            ("im_r", r.imag),
            ("abs_r", np.abs(r)),
        ]
    )
    table.write_csv(_csv_path(cfg, "spectrum.csv"), _comments(cfg, "spectrum"))
    if cfg.svg:
        write_svg(
            _csv_path(cfg, "spectrum.svg"),
            [("intracavity |T|^2", ws, np.abs(t) ** 2, "solid")],
            title="cavity spectrum",
            xlabel="frequency (omega_t)",
            ylabel="|T|^2",
        )


def cmd_kappa_sweep(cfg: RunConfig) -> None:
    """Boundary-condition rate vs frequency against the inverse-square fit."""
    cavity = cfg.cavity()
    med = cfg.medium
    ws = np.linspace(cfg.sweep_start, cfg.sweep_stop, cfg.sweep_count)
    if np.any(in_stop_band(ws, med)):
        raise ConfigError(
            "kappa-sweep window crosses the stop band "
            f"{med.stop_band()}; split the sweep into transparent windows"
        )
    k0 = kappa_bare(cavity)
    kmbc = np.asarray(kappa_mbc(ws, cavity))
    fit = np.asarray(kappa_fit(ws, k0, med.omega_t))
    table = SweepTable(
        [
            ("omega", ws),
            ("kappa_mbc", kmbc),
            ("kappa0", np.full(ws.shape, k0)),
            ("kappa_fit", fit),
        ]
    )
    table.write_csv(_csv_path(cfg, "kappa_sweep.csv"), _comments(cfg, "kappa-sweep"))
    if cfg.svg:
        write_svg(
            _csv_path(cfg, "kappa_sweep.svg"),
            [
                ("kappa_mbc", ws, kmbc, "solid"),
                ("inverse-square fit", ws, fit, "dashed"),
                ("kappa0", ws, np.full(ws.shape, k0), "dotted"),
            ],
            title="dissipation rate vs frequency",
            xlabel="frequency (omega_t)",
            ylabel="kappa (omega_t)",
        )


def cmd_figure2(cfg: RunConfig) -> None:
    """Both dissipation-rate prescriptions over a coupling sweep (two files)."""
    grid = np.linspace(cfg.sweep_start, cfg.sweep_stop, cfg.sweep_count)
    table = figure2_sweep(list(grid), cfg.lambda_mirror, cfg.kappa0_over_wt)
    axis = table.column("rabi_over_wt")
    freq_cols = ["omega_L_mbc", "omega_U_mbc", "omega_L_disc", "omega_U_disc"]
    rate_cols = ["kappa_L_mbc", "kappa_U_mbc", "kappa_L_rwa", "kappa_U_rwa"]
    freqs = SweepTable(
        [("rabi_over_wt", axis)] + [(n, table.column(n)) for n in freq_cols]
    )
    rates = SweepTable(
        [("rabi_over_wt", axis)] + [(n, table.column(n)) for n in rate_cols]
    )
    comments = _comments(cfg, "figure2")
    freqs.write_csv(_csv_path(cfg, "fig2_frequencies.csv"), comments)
    rates.write_csv(_csv_path(cfg, "fig2_rates.csv"), comments)
    if cfg.svg:
        write_svg(
            _csv_path(cfg, "fig2_frequencies.svg"),
            [
                ("omega_L (boundary)", axis, table.column("omega_L_mbc"), "solid"),
                ("omega_U (boundary)", axis, table.column("omega_U_mbc"), "solid"),
                ("omega_L (discrete)", axis, table.column("omega_L_disc"), "dashed"),
                ("omega_U (discrete)", axis, table.column("omega_U_disc"), "dashed"),
            ],
            title="polariton frequencies",
            xlabel="rabi / omega_t",
            ylabel="frequency (omega_t)",
        )
        k0 = cfg.kappa0_over_wt
        if k0 is None:
            lam = cfg.lambda_mirror
            k0 = 2.0 / (lam * lam * (np.pi + np.arctan(1.0 / lam)))
        write_svg(
            _csv_path(cfg, "fig2_rates.svg"),
            [
                ("kappa_L (boundary)", axis, table.column("kappa_L_mbc"), "solid"),
                ("kappa_U (boundary)", axis, table.column("kappa_U_mbc"), "solid"),
                ("kappa_L (photon weight)", axis, table.column("kappa_L_rwa"), "dashed"),
                ("kappa_U (photon weight)", axis, table.column("kappa_U_rwa"), "dashed"),
                ("kappa0", [axis[0], axis[-1]], [k0, k0], "dotted"),
            ],
            title="dissipation rates",
            xlabel="rabi / omega_t",
            ylabel="kappa (omega_t)",
        )


def _random_transparent(rng, cfg: RunConfig, count: int) -> np.ndarray:
    """Random frequencies in the sweep window, outside the stop band."""
    med = cfg.medium
    out: list[float] = []
    while len(out) < count:
        draw = rng.uniform(cfg.sweep_start, cfg.sweep_stop, size=count)
        margin = 1e-6 * med.omega_t
        lo, hi = med.stop_band()
        keep = draw[(draw < lo - margin) | (draw > hi + margin)]
        if med.beta4pi == 0.0:
            keep = draw
        out.extend(float(w) for w in keep)
    return np.asarray(out[:count])


def cmd_greens_check(cfg: RunConfig) -> None:
    """Cross-check the Green's function against the boundary-condition spectra.

    Writes one row per check (value, tolerance, pass/fail) and raises a
    tolerance error if any check fails, which exits with code 2.
    """
    cavity = cfg.cavity()
    rng = np.random.default_rng(_GREENS_SEED)
    ws = _random_transparent(rng, cfg, max(cfg.sweep_count, 2))

    dev_r = 0.0
    dev_t = 0.0
    for w in ws:
        co = green_coefficients(float(w), cavity)
        dev_r = max(dev_r, abs(co.g_r21 - reflection(float(w), cavity)))
        dev_t = max(dev_t, abs(co.g_t21 - intracavity_transfer(float(w), cavity)))

    # piecewise evaluation consistency: G(z, z') = G(z', z) across regions
    dev_s = 0.0
    length = cavity.length
    for w in ws[:32]:
        z_in = float(rng.uniform(0.1, 0.9)) * length
        z_out = -float(rng.uniform(0.1, 1.9)) * length
        a = green_function(z_out, z_in, float(w), cavity)
        b = green_function(z_in, z_out, float(w), cavity)
        dev_s = max(dev_s, abs(a - b))

    h = 1e-5 * length
    w_probe = float(ws[0])
    resid_out = ode_residual(-0.45 * length, w_probe, cavity, h)
    resid_in = ode_residual(0.37 * length, w_probe, cavity, h)
    jump_dev = abs(delta_jump(0.37 * length, w_probe, cavity, h) + 1.0)

    tol_c, tol_r = cfg.tol_coefficient, cfg.tol_residual
    checks = [
        ("reflection_coefficient", dev_r, tol_c),
        ("transfer_coefficient", dev_t, tol_c),
        ("cross_region_symmetry", dev_s, tol_c),
        ("ode_residual_outside_source", resid_out, tol_r),
        ("ode_residual_inside_source", resid_in, tol_r),
        ("source_jump", jump_dev, tol_r),
    ]
    rows = [
        (name, value, tol, "pass" if value < tol else "fail")
        for name, value, tol in checks
    ]
    write_csv(
        _csv_path(cfg, "greens_check.csv"),
        ["check", "value", "tolerance", "status"],
        rows,
        _comments(cfg, "greens-check"),
    )
    failed = [name for name, value, tol in checks if not value < tol]
    if failed:
        raise ToleranceError(
            "greens-check failures: " + ", ".join(failed)
        )


def cmd_fluct(cfg: RunConfig) -> None:
    """Field commutator weights along a vacuum-wavenumber sweep."""
    med = cfg.medium
    qs = np.linspace(cfg.sweep_start, cfg.sweep_stop, cfg.sweep_count)
    cols: dict[str, list[float]] = {
        name: [] for name in ("omega_q", "n", "a_comm", "e_comm", "b_comm", "d_comm")
    }
    loss0 = med.lossless()
    for q in qs:
        omega_q = solve_omega_q(float(q), med)
        fc = mode_commutators(float(q), med)
        cols["omega_q"].append(omega_q)
        cols["n"].append(refractive_index(omega_q, loss0).real)
        cols["a_comm"].append(fc.a_comm)
        cols["e_comm"].append(fc.e_comm)
        cols["b_comm"].append(fc.b_comm)
        cols["d_comm"].append(fc.d_comm)
    table = SweepTable([("q", list(qs))] + [(k, v) for k, v in cols.items()])
    table.write_csv(_csv_path(cfg, "fluct.csv"), _comments(cfg, "fluct"))
    if cfg.svg:
        write_svg(
            _csv_path(cfg, "fluct.svg"),
            [
                ("vector potential", qs, cols["a_comm"], "solid"),
                ("electric field", qs, cols["e_comm"], "solid"),
                ("magnetic field", qs, cols["b_comm"], "solid"),
                ("displacement field", qs, cols["d_comm"], "solid"),
            ],
            title="equal-time commutator weights",
            xlabel="vacuum wavenumber q",
            ylabel="commutator weight",
        )


_COMMANDS = {
    "dispersion": (cmd_dispersion, "bulk dispersion, index, and group velocity"),
    "hopfield": (cmd_hopfield, "two-mode eigenfrequencies and weights vs coupling"),
    "resonances": (cmd_resonances, "cavity resonance frequencies and rates"),
    "spectrum": (cmd_spectrum, "intracavity and reflected spectra"),
    "kappa-sweep": (cmd_kappa_sweep, "dissipation rate vs frequency with fit"),
    "figure2": (cmd_figure2, "rate comparison sweep (two prescriptions)"),
    "greens-check": (cmd_greens_check, "Green's function self-checks"),
    "fluct": (cmd_fluct, "field commutator weights in the medium"),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polariton-mbc",
        description="Open-cavity polariton spectra and dissipation rates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in _COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", metavar="FILE", help="key=value config file")
        p.add_argument(
            "--set",
            metavar="KEY=VALUE",
            action="append",
            default=[],
            dest="overrides",
            help="override one config key (section.key=value), repeatable",
        )
        p.add_argument("--out", metavar="DIR", help="output directory")
        p.add_argument("--svg", action="store_true", default=None,
                       help="also write SVG plots")
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code if exc.code is not None else 0
        return 0 if code == 0 else 1

    try:
        cfg = load_config(
            args.command, args.config, args.overrides, args.out, args.svg
        )
    except ConfigError as err:
        print(f"polariton-mbc: config error: {err}", file=sys.stderr)
        return 1

    try:
        os.makedirs(cfg.out_dir, exist_ok=True)
        if not os.access(cfg.out_dir, os.W_OK):
            raise OSError(f"output directory {cfg.out_dir!r} is not writable")
    except OSError as err:
        print(f"polariton-mbc: i/o error: {err}", file=sys.stderr)
        return 3

    func = _COMMANDS[args.command][0]
    try:
        func(cfg)
    except ConfigError as err:
        print(f"polariton-mbc: config error: {err}", file=sys.stderr)
        return 1
    except ToleranceError as err:
        print(f"polariton-mbc: tolerance failure: {err}", file=sys.stderr)
        return 2
    except PolaritonError as err:
        print(f"polariton-mbc: numerical failure: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"polariton-mbc: config error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"polariton-mbc: i/o error: {err}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
