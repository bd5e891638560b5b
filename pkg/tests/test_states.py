import math

import numpy as np
import pytest

from diracwig.basis import f_basis
from diracwig.landau import PhysParams, level_data
from diracwig.states import (
    CatSpec,
    GaussianSpec,
    TruncationWarning,
    auto_truncation,
    cat_coefficients,
    cat_eval,
    cat_level_weights,
    cat_norm_constant,
    cat_terms,
    gaussian_eval,
    gaussian_terms,
    truncation_error,
)
from tests.conftest import trap_rule


def test_gaussian_initial_profile(bench):
    s = np.linspace(-4, 4, 33)
    for n in (1, 2, 4):
        val = gaussian_eval(GaussianSpec(i=1, n=n, p=bench), s, 0.0)
        np.testing.assert_allclose(val[0], f_basis(n - 1, s), rtol=0, atol=1e-14)
        np.testing.assert_allclose(val[1:], 0.0, atol=1e-14)


def test_gaussian_benchmark_components(bench):
    # E t = pi/2 with eta = 3/4, A = 1/3, B = sqrt(2)/3
    s = np.linspace(-3, 3, 11)
    t = math.pi / 4.0
    val = gaussian_eval(GaussianSpec(i=1, n=1, p=bench), s, t)
    F0, F1 = f_basis(0, s), f_basis(1, s)
    np.testing.assert_allclose(val[0], -0.5j * F0, atol=1e-14)
    np.testing.assert_allclose(val[1], 0.0, atol=1e-15)
    np.testing.assert_allclose(val[2], -0.5j * F0, atol=1e-14)
    np.testing.assert_allclose(val[3], 0.5j * math.sqrt(2.0) * F1, atol=1e-14)


def test_gaussian_norm_identity_random_points():
    """eta^2 [ |c|^2 + 4 sin^2 (A^2+B^2) ] = 1, so the norm is exactly 1."""
    rng = np.random.default_rng(21)
    for _ in range(100):
        p = PhysParams(m=rng.uniform(0, 4), kz=rng.uniform(0, 4), eB=rng.uniform(0.05, 8))
        lv = level_data(int(rng.integers(1, 7)), p)
        t = rng.uniform(0, 12)
        K = lv.A**2 + lv.B**2
        c = abs(np.exp(-1j * lv.E * t) + K * np.exp(1j * lv.E * t)) ** 2
        norm = lv.eta**2 * (c + 4.0 * math.sin(lv.E * t) ** 2 * K)
        assert norm == pytest.approx(1.0, abs=5e-15)


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_gaussian_norm_by_quadrature(bench, i):
    x, w = trap_rule(-11, 11, 901)
    for t in (0.0, 0.37, 2.0):
        val = gaussian_eval(GaussianSpec(i=i, n=2, p=bench), x, t)
        norm = np.einsum("ip,p,ip->", np.conj(val), w, val).real / math.sqrt(bench.eB)
        assert norm == pytest.approx(1.0, abs=1e-10)


def test_gaussian_static_polarizations(bench):
    """i = 2 (and 4) at n = 0 keep a Gaussian spatial density for all t."""
    s = np.linspace(-3, 3, 41)
    base = f_basis(0, s) ** 2
    for i in (2, 4):
        for t in (0.0, 0.9, 2.7):
            val = gaussian_eval(GaussianSpec(i=i, n=0, p=bench), s, t)
            dens = np.sum(np.abs(val) ** 2, axis=0)
            np.testing.assert_allclose(dens, base, rtol=0, atol=1e-13)


def test_gaussian_term_periodicity(bench):
    spec = GaussianSpec(i=1, n=1, p=bench)
    E = spec.level.E
    t0 = 0.513
    a = gaussian_terms(spec, t0)
    b = gaussian_terms(spec, t0 + 2.0 * math.pi / E)
    for comp_a, comp_b in zip(a, b):
        for (ia, ca), (ib, cb) in zip(comp_a, comp_b):
            assert ia == ib
            assert ca == pytest.approx(cb, abs=1e-12)


def test_cat_coefficient_structure():
    coeffs = dict(cat_coefficients("S", 1.0, jmax=7))
    assert coeffs[0] == pytest.approx(math.exp(-0.25), rel=1e-14)
    assert coeffs[1] == coeffs[3] == coeffs[5] == 0.0
    assert coeffs[2] == pytest.approx(math.exp(-0.25) * 0.5 / math.sqrt(2.0), rel=1e-14)
    anti = dict(cat_coefficients("A", 1.0, jmax=7))
    assert anti[0] == anti[2] == 0.0
    assert anti[1] == pytest.approx(math.exp(-0.25) / math.sqrt(2.0), rel=1e-14)


def test_truncation_error_reference_values():
    assert truncation_error(1.0, 0) == pytest.approx(1.0 - 1.0 / math.cosh(0.5), abs=1e-15)
    assert truncation_error(1.0, 0) == pytest.approx(0.1132, abs=5e-5)
    assert truncation_error(5.0, 8) == pytest.approx(0.1, abs=0.02)
    assert truncation_error(3.0, 60) == pytest.approx(0.0, abs=1e-15)
    # sinh variant for anti-symmetric states
    half = 0.5
    assert truncation_error(1.0, 0, "A") == pytest.approx(1.0 - half / math.sinh(half), rel=1e-12)


def test_auto_truncation_is_minimal():
    for a, sym in ((1.0, "S"), (5.0, "S"), (2.5, "A")):
        l = auto_truncation(a, 1e-6, sym)
        assert truncation_error(a, l, sym) < 1e-6
        if l > 0:
            assert truncation_error(a, l - 1, sym) >= 1e-6


def test_cat_norm_constant_values():
    assert cat_norm_constant("S", 1.0) == pytest.approx(1.0 / math.cosh(0.5), rel=1e-12)
    assert cat_norm_constant("S", 1.0) == pytest.approx(0.886819, abs=1e-6)
    assert cat_norm_constant("S", 1e-8) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        cat_norm_constant("A", 0.0)


def test_cat_level_weights_sum_to_hyperbolic(bench):
    for sym, fn in (("S", math.cosh), ("A", math.sinh)):
        spec = CatSpec(sym, 2.0, bench, epsilon=1e-13)
        _, v2 = cat_level_weights(spec)
        assert v2.sum() == pytest.approx(fn(2.0**2 / 2.0), rel=1e-12)


@pytest.mark.parametrize("sym,sign", [("S", 1.0), ("A", -1.0)])
def test_cat_initial_two_packet_profile(bench, sym, sign):
    a = 1.4
    spec = CatSpec(sym, a, bench, epsilon=1e-12)
    s = np.linspace(-7, 7, 201)
    val = cat_eval(spec, s, 0.0)
    packets = 0.5 * (bench.eB / math.pi) ** 0.25 * (
        np.exp(-0.5 * (s - a) ** 2) + sign * np.exp(-0.5 * (s + a) ** 2)
    )
    hyper = math.cosh(a**2 / 2.0) if sym == "S" else math.sinh(a**2 / 2.0)
    scale = math.exp(a**2 / 4.0) / math.sqrt(hyper)
    np.testing.assert_allclose(val[0], scale * packets, atol=5e-6)
    np.testing.assert_allclose(val[1:], 0.0, atol=1e-15)


def test_cat_antisymmetric_zero_at_origin(bench):
    for a in (0.5, 1.0, 3.0):
        spec = CatSpec("A", a, bench)
        assert np.abs(cat_eval(spec, np.array([0.0]), 0.0)).max() == 0.0


def test_cat_small_separation_matches_single_level(bench):
    spec = CatSpec("S", 1e-3, bench)
    g = GaussianSpec(i=1, n=1, p=bench)
    s = np.linspace(-4, 4, 41)
    for t in (0.0, 0.6, 1.9):
        np.testing.assert_allclose(cat_eval(spec, s, t), gaussian_eval(g, s, t), atol=1e-5)


def test_cat_norm_tracks_truncation(bench):
    x, w = trap_rule(-13, 13, 1301)
    for sym, a in (("S", 1.0), ("A", 1.0), ("S", 3.0)):
        spec = CatSpec(sym, a, bench, epsilon=1e-8)
        for t in (0.0, 0.8):
            val = cat_eval(spec, x, t)
            norm = np.einsum("ip,p,ip->", np.conj(val), w, val).real / math.sqrt(bench.eB)
            assert norm == pytest.approx(1.0 - spec.truncation, abs=1e-9)


def test_cat_upper_components_only_at_t0(bench):
    spec = CatSpec("S", 2.0, bench)
    terms = cat_terms(spec, 0.0, warn=False)
    assert terms[1] == [] and terms[2] == [] and terms[3] == []


def test_truncation_warning_channel(bench):
    spec = CatSpec("S", 5.0, bench, l=0)
    with pytest.warns(TruncationWarning):
        cat_terms(spec, 0.1)


def test_spec_validation(bench):
    with pytest.raises(ValueError):
        GaussianSpec(i=5, n=1, p=bench)
    with pytest.raises(ValueError):
        GaussianSpec(i=1, n=0, p=bench)  # null state
    GaussianSpec(i=2, n=0, p=bench)      # static, but well-defined
    with pytest.raises(ValueError):
        CatSpec("X", 1.0, bench)
    with pytest.raises(ValueError):
        CatSpec("S", -1.0, bench)
