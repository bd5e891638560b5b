import json
import math

import numpy as np
import pytest

from diracwig import cli, pipeline
from diracwig.basis import frak_L, lag_L, lag_M
from diracwig.config import ConfigError, DEFAULTS, format_defaults, parse_config_file, resolve
from diracwig.quadrature import (
    NonConvergenceError,
    QuadratureSpec,
    ensure_resolves,
    integrate2d,
    make_grid,
    spec_for_modes,
)
from diracwig.wigner import GaussianWignerCoeffs, gaussian_coeffs


# --- quadrature -------------------------------------------------------------

def test_integrate2d_reference_values():
    spec = spec_for_modes(3)
    eB = 2.0
    val, err = integrate2d(lambda S, K: lag_L(0, S, K, eB), spec, eB=eB)
    assert val == pytest.approx(1.0, abs=1e-8) and err < 1e-8
    val, err = integrate2d(lambda S, K: lag_M(3, S, K, eB), spec, eB=eB)
    assert val == pytest.approx(0.0, abs=1e-8)
    val, err = integrate2d(lambda S, K: frak_L(0, 1, S, K, eB) * frak_L(1, 0, S, K, eB), spec, eB=eB)
    assert val.real == pytest.approx(math.sqrt(eB) / (2.0 * math.pi), abs=1e-8)
    assert abs(val.imag) < 1e-12


def test_integrate2d_nonconvergence():
    # a function the refinement cannot stabilize on this window
    rng = np.random.default_rng(0)
    noisy = lambda S, K: rng.normal(size=np.broadcast(S, K).shape)
    with pytest.raises(NonConvergenceError):
        integrate2d(noisy, QuadratureSpec(ns=64, nk=64), tol=1e-12)


def test_quadrature_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(ns=32)
    with pytest.raises(ValueError):
        QuadratureSpec(rule="simpson")
    with pytest.raises(ValueError):
        QuadratureSpec(s_window=(2.0, -2.0))


def test_gauss_rule_matches_trapezoid():
    spec_t = spec_for_modes(2)
    spec_g = QuadratureSpec(spec_t.s_window, spec_t.k_window, spec_t.ns, spec_t.nk, rule="gauss")
    f = lambda S, K: lag_L(1, S, K, 1.0) * lag_L(1, S, K, 1.0)
    vt, _ = integrate2d(f, spec_t)
    vg, _ = integrate2d(f, spec_g)
    assert vt == pytest.approx(vg, abs=1e-10)


def test_ensure_resolves_widens():
    narrow = QuadratureSpec(s_window=(-3.0, 3.0), k_window=(-3.0, 3.0), ns=64, nk=64)
    widened = ensure_resolves(narrow, max_index=12)
    assert widened.s_window[1] > 3.0
    grid = make_grid(widened)
    assert grid.shape[0] >= 64


# --- config -----------------------------------------------------------------

def test_config_precedence(tmp_path):
    cfg_file = tmp_path / "run.cfg"
    cfg_file.write_text("eB = 3.0\nt_steps = 11  # comment\n# full-line comment\nsymmetry = a\n")
    cfg, explicit = resolve({"eB": "5.5"}, parse_config_file(cfg_file))
    assert cfg["eB"] == 5.5           # CLI wins over file
    assert cfg["t_steps"] == 11       # file wins over default
    assert cfg["symmetry"] == "A"     # case-normalized
    assert cfg["m"] == DEFAULTS["m"]
    assert {"eB", "t_steps", "symmetry"} <= explicit


def test_config_errors(tmp_path):
    with pytest.raises(ConfigError):
        resolve({"no_such_key": 1})
    with pytest.raises(ConfigError):
        resolve({"eB": "minus one"})
    with pytest.raises(ConfigError):
        resolve({"eB": "-2"})
    with pytest.raises(ConfigError):
        resolve({"pol": "7"})
    bad = tmp_path / "bad.cfg"
    bad.write_text("just a line without equals\n")
    with pytest.raises(ConfigError):
        parse_config_file(bad)


def test_defaults_round_trip(tmp_path):
    text = format_defaults()
    path = tmp_path / "defaults.cfg"
    path.write_text(text)
    cfg, _ = resolve(file_values=parse_config_file(path))
    assert cfg == DEFAULTS


# --- figures ----------------------------------------------------------------

def _cfg(**over):
    cfg = dict(DEFAULTS)
    cfg.update(over)
    return cfg


@pytest.mark.parametrize("fig", [1, 2, 4, 6])
def test_raster_figures_shapes(fig):
    cfg = _cfg(figure=fig, t_steps=3, epsilon=1e-6)
    res = pipeline.run_figure(cfg)
    assert res.kind == "rasters"
    assert res.columns == pipeline.RASTER_COLUMNS
    assert len(res.rows) > 0
    assert set(res.rows[0]) == set(pipeline.RASTER_COLUMNS)


@pytest.mark.parametrize("fig", [3, 5, 7, 8])
def test_curve_figures_shapes(fig):
    cfg = _cfg(figure=fig, t_steps=9)
    res = pipeline.run_figure(cfg)
    assert res.kind == "curves"
    assert res.columns == pipeline.CURVE_COLUMNS
    for row in res.rows[:5]:
        assert row["M"] == row["I_SP"] + row["I_xk"] + row["purity"] - 1.0


def test_figure3_curve_hits_unity_and_zero():
    cfg = _cfg(figure=3, t_steps=2001)
    res = pipeline.run_figure(cfg)
    sub = [r for r in res.rows if r["kz2"] == 0.0 and r["eB"] == 10.0]
    ms = [r["M"] for r in sub]
    assert max(ms) == pytest.approx(1.0, abs=1e-5)
    assert ms[0] == pytest.approx(0.0, abs=1e-14)
    assert min(ms) >= -1e-14
    # theta = pi is on the grid and the state is separable again there
    mid = sub[len(sub) // 2]
    assert mid["theta"] == pytest.approx(math.pi, abs=1e-12)
    assert mid["M"] == pytest.approx(0.0, abs=1e-14)


def test_figure_sweep_collapse_on_explicit_key():
    cfg = _cfg(figure=3, eB=2.0, t_steps=5)
    res = pipeline.run_figure(cfg, explicit={"eB"})
    assert {r["eB"] for r in res.rows} == {2.0}


def test_unknown_figure_id():
    with pytest.raises(ConfigError):
        pipeline.run_figure(_cfg(figure=12))


def test_report_and_grid_runners():
    rep = pipeline.run_report(_cfg(t_steps=7), "gaussian")
    assert len(rep.rows) == 7
    grd = pipeline.run_grid(_cfg(), "cat", "density")
    assert grd.rows[0]["quantity"] == "density"
    with pytest.raises(ConfigError):
        pipeline.run_grid(_cfg(), "cat", "entropy")
    with pytest.raises(ConfigError):
        pipeline.spec_from_cfg(_cfg(), "plane-wave")


def test_write_csv_deterministic(tmp_path):
    cfg = _cfg(figure=3, t_steps=17)
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    pipeline.write_result(pipeline.run_figure(cfg), out1)
    pipeline.write_result(pipeline.run_figure(cfg), out2)
    assert out1.read_bytes() == out2.read_bytes()
    assert (tmp_path / "a.csv.meta.json").exists()


def test_write_json(tmp_path):
    cfg = _cfg(figure=5, t_steps=5)
    out = tmp_path / "fig.json"
    pipeline.write_result(pipeline.run_figure(cfg), out)
    payload = json.loads(out.read_text())
    assert payload["columns"] == list(pipeline.CURVE_COLUMNS)
    assert len(payload["rows"]) == 5 * 4


# --- CLI --------------------------------------------------------------------

def test_cli_figure_and_exit_codes(tmp_path):
    out = tmp_path / "fig.csv"
    assert cli.main(["figure", "--id", "3", "--t_steps", "9", "--out", str(out)]) == 0
    assert out.exists()
    assert cli.main(["figure", "--id", "42", "--out", str(out)]) == 1
    assert cli.main(["figure", "--id", "3", "--eB", "-1", "--out", str(out)]) == 1


def test_cli_report_grid_defaults(tmp_path, capsys):
    out = tmp_path / "r.csv"
    assert cli.main(["report", "--state", "gaussian", "--t_steps", "5", "--out", str(out)]) == 0
    assert cli.main(["grid", "--quantity", "purity", "--state", "gaussian", "--out", str(tmp_path / "g.csv")]) == 0
    assert cli.main(["defaults"]) == 0
    text = capsys.readouterr().out
    assert "eB = 1.0" in text


def test_cli_config_file_override(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("t_steps = 5\nfigure = 5\n")
    out = tmp_path / "o.csv"
    # --id wins over the file's figure key
    assert cli.main(["figure", "--id", "3", "--config", str(cfg), "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 1 + 5 * 9


def test_cli_nonconvergence_exit(monkeypatch, tmp_path):
    def boom(cfg, family, quantity):
        raise NonConvergenceError("forced")

    monkeypatch.setattr(pipeline, "run_grid", boom)
    monkeypatch.setattr(cli, "run_grid", boom)
    code = cli.main(["grid", "--quantity", "density", "--state", "cat", "--out", str(tmp_path / "x.csv")])
    assert code == 3


# --- validation -------------------------------------------------------------

def test_validate_quick_passes():
    report = pipeline.run_validate("quick")
    assert report.ok
    names = {c.name for c in report.checks}
    assert "quantum-classical-split" in names
    assert any(c.diagnostic for c in report.checks)
    assert all(" tol=" in line for line in list(report.lines())[:-1])


def test_validate_rejects_unknown_level():
    with pytest.raises(ConfigError):
        pipeline.run_validate("paranoid")


def test_validate_catches_corrupted_coefficient(monkeypatch):
    """Flipping the sign of the (3,4) coefficient must break the
    analytic-vs-oracle probe."""
    true_coeffs = gaussian_coeffs

    def corrupted(n, t, p):
        c = true_coeffs(n, t, p)
        return GaussianWignerCoeffs(
            a11=c.a11, a33=c.a33, a44=c.a44, a13=c.a13, a31=c.a31,
            a14=c.a14, a41=c.a41, a34=-c.a34, a43=-c.a43,
        )

    import diracwig.wigner as wig

    monkeypatch.setattr(wig, "gaussian_coeffs", corrupted)
    report = pipeline.run_validate("quick")
    assert not report.ok
    failed = {c.name for c in report.checks if not c.passed}
    assert "wigner-point-probe" in failed


def test_cli_validate_exit_code(monkeypatch, capsys):
    class FakeReport:
        ok = False
        def lines(self):
            return iter(["[FAIL] CHECK forced: measured=1 tol=0"])

    monkeypatch.setattr(cli, "run_validate", lambda level: FakeReport())
    assert cli.main(["validate", "--level", "quick"]) == 2
