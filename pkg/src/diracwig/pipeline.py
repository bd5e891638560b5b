"""Scenario runner, validation suites, and flat-file serialization.

Each figure id maps to the parameter sweep behind the corresponding plot;
curve figures emit one row of scalar quantifiers per (parameter tuple, t),
heatmap figures emit long-form (s, kx, value) rasters.  Identical
configurations produce bit-identical output files: sweeps run in fixed
order, reductions are fixed-order sums, and floats are serialized with
shortest round-trip repr.
"""

import csv
import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import infoquant
from .basis import hermite_functions, lag_L, lag_M
from .config import ConfigError
from .infoquant import InfoReport, info_report
from .landau import PhysParams, level_data, orthonormality_defect
from .quadrature import make_grid, spec_for_modes
from .states import (
    CatSpec,
    GaussianSpec,
    cat_level_weights,
    cat_norm_constant,
    cat_terms,
    evaluate_terms,
    gaussian_terms,
    truncation_error,
)
from .wigner import (
    G0_SIGN,
    cat_wigner,
    gaussian_wigner,
    max_mode_index,
    quasi_density,
    weyl_oracle,
    wigner_matrix,
)

__all__ = [
    "CURVE_COLUMNS",
    "RASTER_COLUMNS",
    "FigureResult",
    "run_figure",
    "run_report",
    "run_grid",
    "write_result",
    "CheckResult",
    "ValidationReport",
    "run_validate",
]

CURVE_COLUMNS = (
    "figure", "family", "symmetry", "pol", "n", "m", "kz2", "eB", "a", "l", "theta",
) + InfoReport.FIELDS
RASTER_COLUMNS = (
    "figure", "family", "symmetry", "pol", "n", "m", "kz2", "eB", "a", "t",
    "quantity", "s", "kx", "value",
)

RASTER_POINTS = 121
GRID_QUANTITIES = ("density", "purity", "concurrence")


def params_from_cfg(cfg) -> PhysParams:
    return PhysParams(m=cfg["m"], kz=math.sqrt(cfg["kz2"]), eB=cfg["eB"])


def spec_from_cfg(cfg, family) -> GaussianSpec | CatSpec:
    p = params_from_cfg(cfg)
    if family == "gaussian":
        return GaussianSpec(i=cfg["pol"], n=cfg["n"], p=p)
    if family == "cat":
        return CatSpec(symmetry=cfg["symmetry"], a=cfg["a"], p=p, l=cfg["l"], epsilon=cfg["epsilon"])
    raise ConfigError(f"unknown state family {family!r}")


@dataclass
class FigureResult:
    figure: int
    kind: str               # "curves" or "rasters"
    columns: tuple
    rows: list
    meta: dict


def _curve_row(fig, spec, t, theta=None):
    rep = info_report(spec, t)
    row = {k: "" for k in CURVE_COLUMNS}
    row["figure"] = fig
    if isinstance(spec, GaussianSpec):
        row.update(family="gaussian", pol=spec.i, n=spec.n)
    else:
        row.update(family="cat", symmetry=spec.symmetry, a=spec.a, l=spec.l_effective, pol=1)
    row.update(m=spec.p.m, kz2=spec.p.kz**2, eB=spec.p.eB)
    if theta is not None:
        row["theta"] = theta
    for name in InfoReport.FIELDS:
        row[name] = getattr(rep, name)
    return row


def _raster_window(spec, cfg, explicit):
    if isinstance(spec, GaussianSpec):
        mm = spec.n
    else:
        mm = max(spec.levels)
    half = round(math.sqrt(2.0 * mm + 1.0) + 3.0, 1)
    s_lo = cfg["s_min"] if "s_min" in explicit else -half
    s_hi = cfg["s_max"] if "s_max" in explicit else half
    k_lo = cfg["k_min"] if "k_min" in explicit else -half
    k_hi = cfg["k_max"] if "k_max" in explicit else half
    ns = cfg["ns"] if "ns" in explicit else RASTER_POINTS
    nk = cfg["nk"] if "nk" in explicit else RASTER_POINTS
    s = np.linspace(s_lo, s_hi, ns)
    kx = np.linspace(k_lo, k_hi, nk)
    return s, kx


def _raster_values(spec, t, s, kx, quantity):
    W = wigner_matrix(spec, t, s[:, None], kx[None, :])
    eB = spec.p.eB
    if quantity == "density":
        return quasi_density(W) / math.sqrt(eB)
    if quantity == "purity":
        return np.real(np.einsum("ij...,j,ji...,i->...", W, G0_SIGN, W, G0_SIGN)) / eB
    if quantity == "concurrence":
        return infoquant.concurrence_local(W) / eB
    raise ConfigError(f"unknown grid quantity {quantity!r}")


def _raster_rows(fig, spec, t, quantity, s, kx):
    vals = _raster_values(spec, t, s, kx, quantity)
    rows = []
    base = {k: "" for k in RASTER_COLUMNS}
    base["figure"] = fig
    if isinstance(spec, GaussianSpec):
        base.update(family="gaussian", pol=spec.i, n=spec.n)
    else:
        base.update(family="cat", symmetry=spec.symmetry, a=spec.a, pol=1)
    base.update(m=spec.p.m, kz2=spec.p.kz**2, eB=spec.p.eB, t=t, quantity=quantity)
    for i, sv in enumerate(s):
        for j, kv in enumerate(kx):
            row = dict(base)
            row.update(s=float(sv), kx=float(kv), value=float(vals[i, j]))
            rows.append(row)
    return rows


def _sweep(cfg, explicit, key, default_values):
    return (cfg[key],) if key in explicit else tuple(default_values)


def _theta_grid(cfg):
    t_max = cfg["t_max"] if cfg["t_max"] is not None else 2.0 * math.pi
    return np.linspace(cfg["t_min"], t_max, cfg["t_steps"])


def run_figure(cfg, explicit=frozenset()) -> FigureResult:
    """Build the data behind one figure id with the published sweep as
    defaults; explicitly-set keys collapse the corresponding sweep."""
    fig = cfg["figure"]
    meta = {"figure": fig}
    rows = []
    if fig == 1:
        p = params_from_cfg(cfg)
        E = level_data(cfg["n"], p).E
        for i in _sweep(cfg, explicit, "pol", (1, 2)):
            spec = GaussianSpec(i=i, n=cfg["n"], p=p)
            s, kx = _raster_window(spec, cfg, explicit)
            for t in (0.0, math.pi / (2.0 * E)):
                rows += _raster_rows(fig, spec, t, "density", s, kx)
        meta["quantity"] = "density: Tr[W gamma0]/sqrt(eB)"
        return FigureResult(fig, "rasters", RASTER_COLUMNS, rows, meta)
    if fig == 2:
        p = params_from_cfg(cfg)
        E = level_data(cfg["n"], p).E
        spec = GaussianSpec(i=cfg["pol"], n=cfg["n"], p=p)
        s, kx = _raster_window(spec, cfg, explicit)
        for j in (0, 1, 2):
            rows += _raster_rows(fig, spec, j * math.pi / (4.0 * E), "purity", s, kx)
        meta["quantity"] = "local purity: Tr[(W gamma0)^2]/eB"
        return FigureResult(fig, "rasters", RASTER_COLUMNS, rows, meta)
    if fig == 3:
        thetas = _theta_grid(cfg)
        for kz2 in _sweep(cfg, explicit, "kz2", (0.0, 10.0, 100.0)):
            for eB in _sweep(cfg, explicit, "eB", (0.1, 1.0, 10.0)):
                p = PhysParams(m=cfg["m"], kz=math.sqrt(kz2), eB=eB)
                spec = GaussianSpec(i=1, n=cfg["n"], p=p)
                E = spec.level.E
                for th in thetas:
                    rows.append(_curve_row(fig, spec, th / E, theta=float(th)))
        meta["time_axis"] = "uniform in E_n t (column theta); t = theta/E_n"
        return FigureResult(fig, "curves", CURVE_COLUMNS, rows, meta)
    if fig == 4:
        for n in _sweep(cfg, explicit, "n", (1, 5)):
            p = params_from_cfg(cfg)
            spec = GaussianSpec(i=1, n=n, p=p)
            E = spec.level.E
            s, kx = _raster_window(spec, cfg, explicit)
            for j in (8, 4, 2):
                rows += _raster_rows(fig, spec, math.pi / (j * E), "concurrence", s, kx)
        meta["quantity"] = "local squared concurrence / eB"
        return FigureResult(fig, "rasters", RASTER_COLUMNS, rows, meta)
    if fig == 5:
        thetas = _theta_grid(cfg)
        for eB in _sweep(cfg, explicit, "eB", (1.0, 3.0)):
            for kz2 in _sweep(cfg, explicit, "kz2", (0.01, 10.0)):
                p = PhysParams(m=cfg["m"], kz=math.sqrt(kz2), eB=eB)
                spec = GaussianSpec(i=1, n=cfg["n"], p=p)
                E = spec.level.E
                for th in thetas:
                    rows.append(_curve_row(fig, spec, th / E, theta=float(th)))
        meta["time_axis"] = "uniform in E_n t (column theta); EoF and chi columns"
        return FigureResult(fig, "curves", CURVE_COLUMNS, rows, meta)
    if fig == 6:
        p = params_from_cfg(cfg)
        for sym in _sweep(cfg, explicit, "symmetry", ("S", "A")):
            for a in _sweep(cfg, explicit, "a", (1.0, 5.0)):
                spec = CatSpec(symmetry=sym, a=a, p=p, l=cfg["l"], epsilon=cfg["epsilon"])
                s, kx = _raster_window(spec, cfg, explicit)
                rows += _raster_rows(fig, spec, cfg["t_min"], "density", s, kx)
        meta["quantity"] = "density: Tr[W gamma0]/sqrt(eB)"
        return FigureResult(fig, "rasters", RASTER_COLUMNS, rows, meta)
    if fig in (7, 8):
        for sym in _sweep(cfg, explicit, "symmetry", ("S", "A")):
            for a in _sweep(cfg, explicit, "a", (1.0, 5.0)):
                for eB in _sweep(cfg, explicit, "eB", (0.1, 1.0)):
                    p = PhysParams(m=cfg["m"], kz=math.sqrt(cfg["kz2"]), eB=eB)
                    spec = CatSpec(symmetry=sym, a=a, p=p, l=cfg["l"], epsilon=cfg["epsilon"])
                    low = spec.levels[0]
                    t_max = cfg["t_max"] if cfg["t_max"] is not None else 2.0 * math.pi / level_data(low, p).E
                    for t in np.linspace(cfg["t_min"], t_max, cfg["t_steps"]):
                        rows.append(_curve_row(fig, spec, float(t)))
        meta["time_axis"] = (
            "uniform in t over one period of the lowest contributing level "
            "(t_max = 2 pi / E_lowest per tuple unless overridden)"
        )
        meta["emphasis"] = "M" if fig == 7 else "EoF"
        return FigureResult(fig, "curves", CURVE_COLUMNS, rows, meta)
    raise ConfigError(f"unknown figure id {fig}")


def run_report(cfg, family) -> FigureResult:
    """InfoReport time series for a single state."""
    spec = spec_from_cfg(cfg, family)
    if cfg["t_max"] is not None:
        t_max = cfg["t_max"]
    elif isinstance(spec, GaussianSpec):
        t_max = 2.0 * math.pi / spec.level.E
    else:
        t_max = 2.0 * math.pi / level_data(spec.levels[0], spec.p).E
    rows = [_curve_row(0, spec, float(t)) for t in np.linspace(cfg["t_min"], t_max, cfg["t_steps"])]
    meta = {"family": family, "t_max": t_max}
    return FigureResult(0, "curves", CURVE_COLUMNS, rows, meta)


def run_grid(cfg, family, quantity) -> FigureResult:
    """One (s, kx) raster of density, local purity or local concurrence."""
    if quantity not in GRID_QUANTITIES:
        raise ConfigError(f"quantity must be one of {GRID_QUANTITIES}")
    spec = spec_from_cfg(cfg, family)
    s, kx = _raster_window(spec, cfg, frozenset())
    rows = _raster_rows(0, spec, cfg["t_min"], quantity, s, kx)
    meta = {"family": family, "quantity": quantity, "t": cfg["t_min"]}
    return FigureResult(0, "rasters", RASTER_COLUMNS, rows, meta)


def _fmt(value):
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _json_safe(rows):
    # NaN is not valid JSON; absent quantifiers become null
    out = []
    for row in rows:
        out.append({k: (None if isinstance(v, float) and math.isnan(v) else v) for k, v in row.items()})
    return out


def write_result(result: FigureResult, path):
    """Write rows as CSV (default) or JSON records (.json), plus a
    deterministic metadata sidecar."""
    path = str(path)
    if path.endswith(".json"):
        payload = {"meta": result.meta, "columns": list(result.columns), "rows": _json_safe(result.rows)}
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1, sort_keys=True)
            fh.write("\n")
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(result.columns)
            for row in result.rows:
                writer.writerow([_fmt(row[c]) for c in result.columns])
        with open(path + ".meta.json", "w", encoding="utf-8") as fh:
            json.dump(result.meta, fh, indent=1, sort_keys=True)
            fh.write("\n")


# ---------------------------------------------------------------------------
# validation


@dataclass
class CheckResult:
    name: str
    passed: bool
    measured: float
    tol: float
    note: str = ""
    diagnostic: bool = False

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        tag = "DIAG" if self.diagnostic else "CHECK"
        extra = f"  {self.note}" if self.note else ""
        return f"[{status}] {tag} {self.name}: measured={self.measured:.3e} tol={self.tol:.1e}{extra}"


@dataclass
class ValidationReport:
    level: str
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def lines(self):
        yield from (c.line() for c in self.checks)
        yield f"validation {self.level}: {'all checks passed' if self.ok else 'FAILURES PRESENT'}"


def _check(report, name, measured, tol, note="", diagnostic=False):
    report.checks.append(
        CheckResult(name=name, passed=bool(measured <= tol), measured=float(measured),
                    tol=tol, note=note, diagnostic=diagnostic)
    )


_BENCH = PhysParams(m=1.0, kz=1.0, eB=1.0)


def _basis_checks(report):
    nmax = 8
    x = np.linspace(-13.0, 13.0, 833)
    wx = np.full(x.size, x[1] - x[0]); wx[0] *= 0.5; wx[-1] *= 0.5
    psi = hermite_functions(nmax, x)
    gram = np.einsum("ap,p,bp->ab", psi, wx, psi)
    _check(report, "basis-f-orthonormality", np.abs(gram - np.eye(nmax + 1)).max(), 1e-8)

    grid = make_grid(spec_for_modes(nmax), eB=1.0)
    w2 = np.outer(grid.ws, grid.wk).ravel()
    L = np.stack([lag_L(n, grid.S, grid.K).ravel() for n in range(nmax + 1)])
    M = np.stack([lag_M(n, grid.S, grid.K).ravel() for n in range(1, nmax + 1)])
    tgt = np.eye(nmax + 1) / (2.0 * math.pi)
    defect = max(
        np.abs(L @ w2 - 1.0).max(),
        np.abs(M @ w2).max(),
        np.abs((L * w2) @ L.T - tgt).max(),
        np.abs((M * w2) @ M.T - tgt[1:, 1:]).max(),
    )
    _check(report, "basis-LM-orthonormality", defect, 1e-8)

    from .basis import PhaseSpaceCache

    cache = PhaseSpaceCache(grid.S, grid.K, 1.0)
    pairs = [(m, n) for m in range(nmax + 1) for n in range(nmax + 1)]
    F = np.stack([cache.frak(m, n).ravel() for m, n in pairs])
    first = np.abs(F @ w2 - np.array([1.0 if m == n else 0.0 for m, n in pairs])).max()
    gram2 = (F * w2) @ F.T
    tgt2 = np.array([[1.0 if (m == n2 and n == m2) else 0.0 for (m2, n2) in pairs] for (m, n) in pairs])
    second = np.abs(gram2 - tgt2 / (2.0 * math.pi)).max()
    _check(report, "basis-mixed-orthonormality", max(first, second), 1e-8)


def _spinor_check(report):
    x = np.linspace(-12.0, 12.0, 769)
    wx = np.full(x.size, x[1] - x[0]); wx[0] *= 0.5; wx[-1] *= 0.5
    _check(report, "spinor-orthonormality", orthonormality_defect(3, _BENCH, (x, wx)), 1e-8)


def _purity_checks(report):
    g = GaussianSpec(i=1, n=1, p=_BENCH)
    t = math.pi / 4.0
    _check(report, "pure-state-analytic", abs(infoquant.purity(g, t) - 1.0), 1e-14)
    grid = make_grid(spec_for_modes(2), eB=_BENCH.eB)
    _check(report, "pure-state-grid-gaussian", abs(infoquant.purity(g, t, "grid", grid) - 1.0), 1e-5)
    cat = CatSpec("S", 1.0, _BENCH, epsilon=1e-8)
    grid = make_grid(spec_for_modes(max(cat.levels)), eB=_BENCH.eB)
    _check(report, "pure-state-grid-cat", abs(infoquant.purity(cat, 0.3, "grid", grid) - 1.0), 1e-5)


def _split_identity_check(report, samples=100):
    rng = np.random.default_rng(20240615)
    worst = 0.0
    for _ in range(samples):
        p = PhysParams(m=rng.uniform(0.0, 3.0), kz=rng.uniform(0.0, 3.0), eB=rng.uniform(0.05, 10.0))
        spec = GaussianSpec(i=1, n=int(rng.integers(1, 6)), p=p)
        t = rng.uniform(0.0, 10.0)
        gap = (
            infoquant.mutual_information(spec, t)
            - infoquant.classical_mutual_information(spec, t)
            - infoquant.concurrence_avg(spec, t)
        )
        worst = max(worst, abs(gap))
    _check(report, "quantum-classical-split", worst, 1e-12, note=f"{samples} random tuples")


def _truncation_check(report):
    er10 = truncation_error(1.0, 0)
    er58 = truncation_error(5.0, 8)
    _check(report, "truncation-estimator-exact", abs(er10 - (1.0 - 1.0 / math.cosh(0.5))), 1e-12,
           note=f"Er(1,0) = {er10:.4f}")
    _check(report, "truncation-estimator-large-a", abs(er58 - 0.1), 0.02, note=f"Er(5,8) = {er58:.4f}")


def _wigner_probe(report):
    spec = GaussianSpec(i=1, n=1, p=_BENCH)
    t = math.pi / 4.0
    s = np.linspace(-3.0, 3.0, 9)
    kx = np.linspace(-3.0, 3.0, 9)
    Wan = gaussian_wigner(1, t, s[:, None], kx[None, :], _BENCH)
    state = lambda sv, tt: evaluate_terms(gaussian_terms(spec, tt), sv, _BENCH.eB)
    Wor = weyl_oracle(state, t, s, kx, eB=_BENCH.eB, max_mode=1)
    _check(report, "wigner-point-probe", np.abs(Wan - Wor).max(), 1e-8)


def _decoherence_diagnostic(report):
    spec = GaussianSpec(i=1, n=1, p=_BENCH)
    t = math.pi / 4.0
    grid = make_grid(spec_for_modes(2), eB=_BENCH.eB)
    direct = infoquant.decohered_mutual_information(spec, t, grid)
    closed = infoquant.classical_mutual_information(spec, t)
    lv = spec.level
    predicted = 32.0 * lv.B**2 * lv.A**2 * lv.eta**4 * math.sin(lv.E * t) ** 4
    _check(
        report, "D1-decoherence-gap", abs((closed - direct) - predicted), 1e-6,
        note=f"closed form {closed:.6f} vs direct pipeline {direct:.6f}; gap matches the "
             f"32 B^2 A^2 eta^4 sin^4 term {predicted:.6f}",
        diagnostic=True,
    )


def _oracle_equivalence_check(report):
    E1 = level_data(1, _BENCH).E
    times = (0.0, math.pi / (4.0 * E1), math.pi / (2.0 * E1))
    cases = [
        ("gaussian-i1", GaussianSpec(1, 1, _BENCH), 6.0),
        ("gaussian-i2", GaussianSpec(2, 1, _BENCH), 6.0),
        ("cat-S-a1", CatSpec("S", 1.0, _BENCH, epsilon=1e-8), 6.0),
        ("cat-A-a1", CatSpec("A", 1.0, _BENCH, epsilon=1e-8), 6.0),
        ("cat-S-a5", CatSpec("S", 5.0, _BENCH, epsilon=1e-8), 12.0),
        ("cat-A-a5", CatSpec("A", 5.0, _BENCH, epsilon=1e-8), 12.0),
    ]
    worst = 0.0
    for _, spec, half in cases:
        s = np.linspace(-half, half, 128)
        kx = np.linspace(-half, half, 128)
        for t in times:
            if isinstance(spec, GaussianSpec):
                terms = gaussian_terms(spec, t)
                Wan = gaussian_wigner(spec.n, t, s[:, None], kx[None, :], spec.p, i=spec.i)
            else:
                terms = cat_terms(spec, t, warn=False)
                Wan = cat_wigner(spec, t, s[:, None], kx[None, :])
            state = (lambda trm: (lambda sv, tt: evaluate_terms(trm, sv, _BENCH.eB)))(terms)
            Wor = weyl_oracle(state, t, s, kx, eB=_BENCH.eB, max_mode=max_mode_index(terms))
            worst = max(worst, float(np.abs(Wan - Wor).max()))
    _check(report, "oracle-equivalence", worst, 1e-6, note="6 states x 3 times, 128x128")


def _cat_normalization_checks(report):
    worst_const = 0.0
    for sym in ("S", "A"):
        for a in (1.0, 5.0):
            spec = CatSpec(sym, a, _BENCH, epsilon=1e-12)
            _, v2 = cat_level_weights(spec)
            worst_const = max(worst_const, abs(1.0 / v2.sum() - cat_norm_constant(sym, a)))
    _check(report, "cat-normalization-constants", worst_const, 1e-9)

    worst_tr, worst_pur = 0.0, 0.0
    for sym, a in (("S", 1.0), ("A", 1.0), ("S", 5.0)):
        spec = CatSpec(sym, a, _BENCH, epsilon=1e-8)
        mm = max(spec.levels)
        grid = make_grid(spec_for_modes(mm), eB=_BENCH.eB)
        W = cat_wigner(spec, 0.3, grid.S, grid.K)
        worst_tr = max(worst_tr, abs(float(grid.integrate(quasi_density(W))) - 1.0))
        worst_pur = max(worst_pur, abs(infoquant.grid_purity(W, grid) - 1.0))
        if sym == "S" and a == 5.0:
            lhs11 = infoquant.quadratic_average(np.real(W[0, 0]) ** 2, grid)
            rhs11 = float(np.real(grid.integrate(W[0, 0]))) ** 2
            _check(report, "appendix-average-identity-a5", abs(lhs11 - rhs11), 1e-6)
    _check(report, "cat-trace-normalization", worst_tr, 1e-6)
    _check(report, "cat-grid-purity", worst_pur, 1e-5)

    spec = CatSpec("S", 1.0, _BENCH, epsilon=1e-8)
    grid = make_grid(spec_for_modes(max(spec.levels)), eB=_BENCH.eB)
    W = cat_wigner(spec, 0.45, grid.S, grid.K)
    worst_app = 0.0
    for idx in (0, 2, 3):
        lhs = infoquant.quadratic_average(np.real(W[idx, idx]) ** 2, grid)
        rhs = float(np.real(grid.integrate(W[idx, idx]))) ** 2
        worst_app = max(worst_app, abs(lhs - rhs))
    _check(report, "appendix-average-identity-a1", worst_app, 1e-6)


def _limit_checks(report):
    g = GaussianSpec(1, 1, _BENCH)
    cat = CatSpec("S", 1e-3, _BENCH)
    t = 0.7
    rg, rc = info_report(g, t), info_report(cat, t)
    dev = max(abs(getattr(rg, f) - getattr(rc, f)) for f in ("purity", "I_SP", "I_xk", "M", "C2", "EoF", "chi"))
    _check(report, "cat-small-separation-limit", dev, 1e-4, note="a = 1e-3 vs single level n = 1")

    p0 = PhysParams(m=0.0, kz=1.3, eB=2.0)
    E = level_data(1, p0).E
    c2 = infoquant.concurrence_avg(GaussianSpec(1, 1, p0), math.pi / (2.0 * E))
    _check(report, "massless-concurrence-zero", abs(c2), 1e-12)

    spec = CatSpec("S", 5.0, _BENCH, epsilon=1e-8)
    E1 = level_data(1, _BENCH).E
    m_max = max(infoquant.mutual_information(spec, t) for t in np.linspace(0.0, 2.0 * math.pi / E1, 400))
    _check(report, "cat-super-unity-correlations", 1.0 - m_max, 0.0,
           note=f"max M = {m_max:.4f} for S, a=5, eB=1")


def run_validate(level="quick") -> ValidationReport:
    """Execute the invariant suites; ``full`` adds the oracle sweeps and the
    large-separation cat checks."""
    if level not in ("quick", "full"):
        raise ConfigError("validation level must be 'quick' or 'full'")
    report = ValidationReport(level=level)
    _basis_checks(report)
    _spinor_check(report)
    _purity_checks(report)
    _split_identity_check(report)
    _truncation_check(report)
    _wigner_probe(report)
    _decoherence_diagnostic(report)
    if level == "full":
        _oracle_equivalence_check(report)
        _cat_normalization_checks(report)
        _limit_checks(report)
    return report
