"""Command-line behavior: outputs, exit codes, config layering, determinism."""

import math
import os
import shutil
import subprocess
import sys
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from polariton_mbc.cli import main


def read_csv(path):
    comments, header, rows = [], None, []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if line.startswith("#"):
                comments.append(line)
            elif header is None:
                header = line.split(",")
            else:
                rows.append(line.split(","))
    return comments, header, rows


def column(header, rows, name, cast=float):
    i = header.index(name)
    return [cast(r[i]) for r in rows]


def test_resonances_default_finds_the_tuned_fundamental(tmp_path):
    assert main(["resonances", "--out", str(tmp_path)]) == 0
    comments, header, rows = read_csv(tmp_path / "resonances.csv")
    assert header == ["omega", "kappa", "branch", "mode_index"]
    assert len(rows) == 1
    omega, kappa, branch, mode = rows[0]
    assert float(omega) == pytest.approx(1.0, abs=1e-9)
    assert float(kappa) == pytest.approx(1e-2, rel=1e-4)
    assert branch == "bare"
    assert mode == "1"
    # the resolved configuration is echoed into the comment header
    joined = "\n".join(comments)
    assert "polariton-mbc resonances" in joined
    for key in ("medium.omega_t", "cavity.lambda_mirror", "sweep.count", "output.dir"):
        assert key in joined, f"missing {key} in comment header"


def test_dispersion_vacuum_columns(tmp_path):
    assert main(["dispersion", "--out", str(tmp_path)]) == 0
    _, header, rows = read_csv(tmp_path / "dispersion.csv")
    assert header == ["k", "omega_L", "omega_U", "n_L", "n_U", "vg_L", "vg_U"]
    ks = column(header, rows, "k")
    lo = column(header, rows, "omega_L")
    hi = column(header, rows, "omega_U")
    for k, wl, wu in zip(ks, lo, hi):
        assert wl == pytest.approx(min(k, 1.0), abs=1e-12)
        assert wu == pytest.approx(max(k, 1.0), abs=1e-12)
    assert all(v == 1.0 for v in column(header, rows, "vg_L"))
    assert all(v == 1.0 for v in column(header, rows, "vg_U"))


def test_dispersion_branches_avoid_the_gap(tmp_path):
    assert main([
        "dispersion", "--out", str(tmp_path), "--set", "medium.beta4pi=4.0",
    ]) == 0
    comments, header, rows = read_csv(tmp_path / "dispersion.csv")
    hi_edge = math.sqrt(5.0)
    for name in ("omega_L", "omega_U"):
        for w in column(header, rows, name):
            inside = 1.0 + 1e-12 < w < hi_edge - 1e-12
            assert not inside, f"{name} = {w} falls in the stop band"
    assert max(column(header, rows, "omega_L")) < 1.0 + 1e-12
    assert min(column(header, rows, "omega_U")) > hi_edge - 1e-12
    assert any("medium.beta4pi" in c and "4.0" in c for c in comments)


def test_spectrum_reflection_is_unimodular(tmp_path):
    assert main(["spectrum", "--out", str(tmp_path)]) == 0
    _, header, rows = read_csv(tmp_path / "spectrum.csv")
    assert len(rows) == 2001
    for v in column(header, rows, "abs_r"):
        assert abs(v - 1.0) < 1e-12


def test_kappa_sweep_vacuum_is_flat(tmp_path):
    assert main(["kappa-sweep", "--out", str(tmp_path)]) == 0
    _, header, rows = read_csv(tmp_path / "kappa_sweep.csv")
    assert len(rows) == 151
    kmbc = column(header, rows, "kappa_mbc")
    k0 = column(header, rows, "kappa0")
    assert all(a == b for a, b in zip(kmbc, k0))
    # the inverse-square fit is not flat, so the columns must differ
    fit = column(header, rows, "kappa_fit")
    assert max(abs(a - b) for a, b in zip(fit, k0)) > 1e-3 * k0[0]


def test_kappa_sweep_refuses_stop_band_window(tmp_path):
    code = main([
        "kappa-sweep", "--out", str(tmp_path),
        "--set", "medium.beta4pi=1.0", "--set", "sweep.stop=1.2",
    ])
    assert code == 1
    assert not (tmp_path / "kappa_sweep.csv").exists()


def test_figure2_trends_and_layout(tmp_path):
    assert main(["figure2", "--out", str(tmp_path)]) == 0
    _, fh, frows = read_csv(tmp_path / "fig2_frequencies.csv")
    _, rh, rrows = read_csv(tmp_path / "fig2_rates.csv")
    assert fh == ["rabi_over_wt", "omega_L_mbc", "omega_U_mbc", "omega_L_disc", "omega_U_disc"]
    assert rh == ["rabi_over_wt", "kappa_L_mbc", "kappa_U_mbc", "kappa_L_rwa", "kappa_U_rwa"]
    assert len(frows) == 30 and len(rrows) == 30
    up_mbc = column(rh, rrows, "kappa_U_mbc")
    up_rwa = column(rh, rrows, "kappa_U_rwa")
    assert all(b < a for a, b in zip(up_mbc, up_mbc[1:]))
    assert all(b > a for a, b in zip(up_rwa, up_rwa[1:]))
    wu = column(fh, frows, "omega_U_mbc")
    wl = column(fh, frows, "omega_L_mbc")
    assert all(b > a for a, b in zip(wu, wu[1:]))
    assert all(b < a for a, b in zip(wl, wl[1:]))


def test_figure2_is_deterministic(tmp_path):
    assert main(["figure2", "--out", str(tmp_path)]) == 0
    first = {
        name: (tmp_path / name).read_bytes()
        for name in ("fig2_frequencies.csv", "fig2_rates.csv")
    }
    assert main(["figure2", "--out", str(tmp_path)]) == 0
    for name, payload in first.items():
        assert (tmp_path / name).read_bytes() == payload, f"{name} changed on rerun"


def test_greens_check_passes(tmp_path):
    assert main(["greens-check", "--out", str(tmp_path)]) == 0
    _, header, rows = read_csv(tmp_path / "greens_check.csv")
    assert header == ["check", "value", "tolerance", "status"]
    names = column(header, rows, "check", cast=str)
    assert names == [
        "reflection_coefficient",
        "transfer_coefficient",
        "cross_region_symmetry",
        "ode_residual_outside_source",
        "ode_residual_inside_source",
        "source_jump",
    ]
    assert all(s == "pass" for s in column(header, rows, "status", cast=str))
    payload = (tmp_path / "greens_check.csv").read_bytes()
    assert main(["greens-check", "--out", str(tmp_path)]) == 0
    assert (tmp_path / "greens_check.csv").read_bytes() == payload


def test_greens_check_reports_tolerance_failures(tmp_path):
    code = main([
        "greens-check", "--out", str(tmp_path),
        "--set", "tolerances.residual=1e-12",
    ])
    assert code == 2
    # the report is still written so the failure can be inspected
    _, header, rows = read_csv(tmp_path / "greens_check.csv")
    statuses = column(header, rows, "status", cast=str)
    assert "fail" in statuses


def test_fluct_vacuum_weights(tmp_path):
    assert main(["fluct", "--out", str(tmp_path)]) == 0
    _, header, rows = read_csv(tmp_path / "fluct.csv")
    assert len(rows) == 60
    qs = column(header, rows, "q")
    assert all(n == 1.0 for n in column(header, rows, "n"))
    for q, a in zip(qs, column(header, rows, "a_comm")):
        assert a == pytest.approx(1.0 / (2.0 * q), rel=1e-12)
    for q, e in zip(qs, column(header, rows, "e_comm")):
        assert e == pytest.approx(0.5 * q, rel=1e-12)


def test_hopfield_weights_are_normalized(tmp_path):
    assert main(["hopfield", "--out", str(tmp_path)]) == 0
    _, header, rows = read_csv(tmp_path / "hopfield.csv")
    assert len(rows) == 30
    for tag in ("L", "U"):
        w2 = column(header, rows, f"w2_{tag}")
        x2 = column(header, rows, f"x2_{tag}")
        y2 = column(header, rows, f"y2_{tag}")
        z2 = column(header, rows, f"z2_{tag}")
        for a, b, c, d in zip(w2, x2, y2, z2):
            assert a + b - c - d == pytest.approx(1.0, abs=1e-10)


def test_config_file_layering_and_set_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(
        "# comment line\n"
        "[sweep]\n"
        "start = 0.8\n"
        "stop = 1.2\n"
        "count = 3\n"
        "; alt comment\n"
        "[output]\n"
        "svg = false\n"
    )
    out = tmp_path / "out"
    code = main([
        "spectrum", "--config", str(cfg), "--out", str(out),
        "--set", "sweep.count=5",
    ])
    assert code == 0
    _, header, rows = read_csv(out / "spectrum.csv")
    assert len(rows) == 5  # --set beats the file
    ws = column(header, rows, "omega")
    assert ws[0] == pytest.approx(0.8) and ws[-1] == pytest.approx(1.2)


def test_config_error_paths(tmp_path):
    out = str(tmp_path)
    assert main(["spectrum", "--out", out, "--set", "nosuch.key=1"]) == 1
    assert main(["spectrum", "--out", out, "--set", "sweep.count=banana"]) == 1
    assert main(["spectrum", "--out", out, "--set", "sweepcount"]) == 1
    assert main(["spectrum", "--out", out, "--config", str(tmp_path / "gone.cfg")]) == 1
    bad = tmp_path / "bad.cfg"
    bad.write_text("count = 3\n")  # key before any [section]
    assert main(["spectrum", "--out", out, "--config", str(bad)]) == 1
    # invalid numeric domain: empty sweep
    assert main(["spectrum", "--out", out, "--set", "sweep.count=1"]) == 1


def test_io_error_exit_code(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert main(["spectrum", "--out", str(blocker)]) == 3


def test_argparse_exit_codes(capsys):
    assert main(["--help"]) == 0
    assert main([]) == 1
    assert main(["no-such-command"]) == 1
    capsys.readouterr()


def test_svg_outputs_are_valid_xml(tmp_path):
    assert main(["spectrum", "--out", str(tmp_path), "--svg"]) == 0
    svg = tmp_path / "spectrum.svg"
    assert svg.exists()
    root = ET.fromstring(svg.read_text())
    assert root.tag.endswith("svg")
    assert main(["figure2", "--out", str(tmp_path), "--svg"]) == 0
    for name in ("fig2_frequencies.svg", "fig2_rates.svg"):
        root = ET.fromstring((tmp_path / name).read_text())
        assert root.tag.endswith("svg")
    # svg can also be switched on from the config layer
    assert main([
        "dispersion", "--out", str(tmp_path), "--set", "output.svg=true",
    ]) == 0
    assert (tmp_path / "dispersion.svg").exists()


def test_module_and_script_entry_points(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "polariton_mbc.cli", "resonances", "--out", str(tmp_path)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert (tmp_path / "resonances.csv").exists()
    script = shutil.which("polariton-mbc")
    assert script, "console script not on PATH"
    proc = subprocess.run([script, "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "dispersion" in proc.stdout


def test_resonance_scan_failure_exits_two(tmp_path):
    # a window pressed against the band edge cannot be resolved
    code = main([
        "resonances", "--out", str(tmp_path),
        "--set", "medium.beta4pi=0.36", "--set", "sweep.stop=0.9999",
    ])
    assert code == 2


def test_greens_check_medium_variants(tmp_path):
    # the checks hold in a polariton medium and with absorption on
    code = main([
        "greens-check", "--out", str(tmp_path),
        "--set", "medium.beta4pi=1.44", "--set", "medium.gamma=1e-4",
    ])
    assert code == 0
    _, header, rows = read_csv(tmp_path / "greens_check.csv")
    assert all(s == "pass" for s in column(header, rows, "status", cast=str))
