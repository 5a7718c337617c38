import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from rawbridge.colorimetry import spectrum_to_xyz, xyz_to_xy
from rawbridge.spectral import (
    DEFAULT_GRID,
    SpectralGrid,
    Spectrum,
    daylight_spd,
    gaussian_bump,
    planckian_spd,
    read_spectrum_csv,
    resample_spectrum,
    spectrum_to_csv,
    write_spectrum_csv,
)


def test_default_grid_is_380_to_730_at_10nm():
    assert DEFAULT_GRID.n_bins == 36
    assert DEFAULT_GRID.wavelengths[0] == 380.0
    assert DEFAULT_GRID.end_nm == 730.0


@pytest.mark.parametrize("kwargs", [{"step_nm": 0}, {"step_nm": -5}, {"n_bins": 1}, {"n_bins": 2.5}])
def test_grid_rejects_bad_parameters(kwargs):
    with pytest.raises(ValueError):
        SpectralGrid(**kwargs)


def test_grid_round_trips_through_dict_and_wavelengths():
    g = SpectralGrid(400.0, 5.0, 61)
    assert SpectralGrid.from_dict(g.to_dict()) == g
    assert SpectralGrid.from_wavelengths(g.wavelengths) == g
    with pytest.raises(ValueError):
        SpectralGrid.from_wavelengths([400, 410, 430])


def test_spectrum_validates_values():
    with pytest.raises(ValueError):
        Spectrum(DEFAULT_GRID, np.ones(35))
    with pytest.raises(ValueError):
        Spectrum(DEFAULT_GRID, -np.ones(36))
    with pytest.raises(ValueError):
        Spectrum(DEFAULT_GRID, np.full(36, np.nan))
    s = Spectrum(DEFAULT_GRID, np.ones(36))
    with pytest.raises(ValueError):
        s.values[0] = 2.0


@pytest.mark.parametrize("target", [DEFAULT_GRID, SpectralGrid(400, 3.3, 80), SpectralGrid(300, 50, 12)])
def test_resample_constant_stays_constant(target):
    s = Spectrum(SpectralGrid(390, 7, 40), np.ones(40))
    assert np.all(resample_spectrum(s, target).values == 1.0)


def test_resample_linear_ramp_midpoint():
    src = SpectralGrid(400, 10, 31)
    ramp = Spectrum(src, (src.wavelengths - 400.0) / 300.0)
    out = resample_spectrum(ramp, SpectralGrid(545, 5, 3))
    assert out.value_at(550.0) == pytest.approx(0.5, abs=1e-12)
    assert out.values[1] == pytest.approx(0.5, abs=1e-12)


def test_resample_to_own_grid_is_identity():
    vals = np.random.default_rng(0).random(36)
    s = Spectrum(DEFAULT_GRID, vals)
    assert np.array_equal(resample_spectrum(s, DEFAULT_GRID).values, vals)


def test_resample_holds_edges_and_rejects_disjoint_ranges():
    s = Spectrum(SpectralGrid(450, 10, 11), np.linspace(1.0, 2.0, 11))
    out = resample_spectrum(s, DEFAULT_GRID)
    assert np.all(out.values[DEFAULT_GRID.wavelengths <= 450] == 1.0)
    assert np.all(out.values[DEFAULT_GRID.wavelengths >= 550] == 2.0)
    with pytest.raises(ValueError, match="overlap"):
        resample_spectrum(s, SpectralGrid(800, 10, 5))


@given(st.lists(st.floats(0, 10, allow_nan=False), min_size=36, max_size=36))
def test_resample_via_finer_grid_round_trips(values):
    s = Spectrum(DEFAULT_GRID, values)
    fine = resample_spectrum(s, SpectralGrid(380, 2.5, 141))
    back = resample_spectrum(fine, DEFAULT_GRID)
    assert np.allclose(back.values, s.values, atol=1e-6)


def test_planckian_anchor_and_shape():
    assert planckian_spd(6500).value_at(560.0) == pytest.approx(1.0, abs=1e-12)
    warm = planckian_spd(2856).values
    assert np.all(np.diff(warm) > 0)
    hot = planckian_spd(20000)
    assert hot.values[0] > hot.values[-1]


@pytest.mark.parametrize("cct", [1000.0, 2856.0, 6500.0, 20000.0])
def test_planckian_matches_direct_planck_law(cct):
    expected = [oracles.planck(wl, cct) / oracles.planck(560.0, cct) for wl in DEFAULT_GRID.wavelengths]
    assert np.allclose(planckian_spd(cct).values, expected, rtol=1e-9)


@pytest.mark.parametrize("cct", [999.0, 20001.0])
def test_planckian_range(cct):
    with pytest.raises(ValueError):
        planckian_spd(cct)


@given(st.floats(3250, 10000))
def test_planckian_changes_less_than_1e3_per_kelvin(t):
    assert np.max(np.abs(planckian_spd(t).values - planckian_spd(t + 1).values)) < 1e-3


@given(st.floats(2000, 10000))
def test_planckian_step_per_kelvin_follows_planck_law(t):
    # below ~3250 K the 560 nm normalised red end legitimately moves faster
    # than 1e-3 per kelvin; the change must still be exactly the physical one
    def direct(temp):
        return np.array([oracles.planck(wl, temp) / oracles.planck(560.0, temp) for wl in DEFAULT_GRID.wavelengths])

    step = planckian_spd(t + 1).values - planckian_spd(t).values
    assert np.allclose(step, direct(t + 1) - direct(t), rtol=1e-6, atol=1e-12)


def test_d65_chromaticity():
    xy = xyz_to_xy(spectrum_to_xyz(daylight_spd(6504)))
    assert np.allclose(xy, (0.3127, 0.3290), atol=0.003)


def test_daylight_anchor_distinctness_and_range():
    assert daylight_spd(5000).value_at(560.0) == pytest.approx(1.0, abs=1e-12)
    assert np.max(np.abs(daylight_spd(5000).values - daylight_spd(7500).values)) > 0.01
    with pytest.raises(ValueError):
        daylight_spd(3999)
    with pytest.raises(ValueError):
        daylight_spd(25001)


@given(st.floats(4000, 25000), st.floats(1000, 20000))
def test_generated_spectra_are_nonnegative(t_day, t_bb):
    assert np.all(daylight_spd(t_day).values >= 0)
    assert np.all(planckian_spd(t_bb).values >= 0)


def test_gaussian_bump_peak():
    b = gaussian_bump(DEFAULT_GRID, 550.0, 20.0, 0.7)
    assert b.max() == pytest.approx(0.7)
    assert DEFAULT_GRID.wavelengths[np.argmax(b)] == 550.0


def test_csv_round_trip(tmp_path):
    s = planckian_spd(4200)
    assert spectrum_to_csv(s).splitlines()[0] == "wavelength_nm,value"
    path = tmp_path / "s.csv"
    write_spectrum_csv(s, path)
    assert read_spectrum_csv(path) == s


def test_csv_rejects_wrong_header(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("nm,v\n380,1\n390,1\n")
    with pytest.raises(ValueError, match="header"):
        read_spectrum_csv(path)
