import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from rawbridge.colorimetry import (
    CameraProfile,
    angular_error,
    as_ccm,
    ccm_blend_weight,
    ciede2000,
    cmf_on_grid,
    estimate_cct,
    interpolate_ccm,
    lab_to_xyz,
    raw_to_xyz,
    spectrum_to_xyz,
    xyz_to_lab,
    xyz_to_xy,
)
from rawbridge.spectral import DEFAULT_GRID, Spectrum, planckian_spd

vec3 = st.lists(st.floats(-10, 10, allow_nan=False), min_size=3, max_size=3).filter(
    lambda v: np.linalg.norm(v) > 1e-3
)
lab_color = st.tuples(st.floats(0, 100), st.floats(-128, 128), st.floats(-128, 128))

CCM_A = np.array([[0.9, 0.2, 0.1], [0.3, 1.1, -0.1], [0.0, 0.1, 0.6]])


def profile(ccm_d65=np.eye(3), ccm_a=CCM_A):
    return CameraProfile("cam", ccm_d65, ccm_a)


@pytest.mark.parametrize(
    "u, v, expected",
    [((1, 2, 3), (2, 4, 6), 0.0), ((1, 0, 0), (0, 1, 0), 90.0), ((1, 1, 0), (1, 0, 0), 45.0)],
)
def test_angular_error_examples(u, v, expected):
    assert angular_error(u, v) == pytest.approx(expected, abs=1e-6)


@given(vec3, vec3, st.floats(0.01, 100), st.floats(0.01, 100))
def test_angular_error_is_scale_invariant(u, v, a, b):
    base = angular_error(u, v)
    assert 0.0 <= base <= 180.0
    assert angular_error(np.multiply(a, u), np.multiply(b, v)) == pytest.approx(base, abs=1e-6)


def test_angular_error_rejects_zero_vector():
    with pytest.raises(ValueError):
        angular_error((0, 0, 0), (1, 0, 0))


def test_as_ccm_validation():
    assert as_ccm(CCM_A.reshape(-1)).shape == (3, 3)
    with pytest.raises(ValueError, match="singular"):
        as_ccm(np.ones((3, 3)))
    with pytest.raises(ValueError):
        as_ccm(np.eye(2))
    with pytest.raises(ValueError):
        as_ccm([[np.inf, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_estimate_cct_examples():
    assert estimate_cct((0.3127, 0.3290)) == pytest.approx(6508, abs=20)
    assert estimate_cct((0.4476, 0.4074)) == pytest.approx(2856, abs=150)
    assert estimate_cct((0.3127, 0.3290)) == pytest.approx(oracles.mccamy(0.3127, 0.3290), rel=1e-12)
    assert estimate_cct((0.41, 0.39)) == estimate_cct((0.41, 0.39))
    with pytest.raises(ValueError):
        estimate_cct((0.3, 0.1858))


def test_blend_weight_matches_inverse_cct_rule():
    assert ccm_blend_weight(4000.0) == pytest.approx(0.50991, abs=1e-5)
    for t in (2000.0, 2856.0, 3500.0, 5000.0, 6504.0, 9000.0):
        assert ccm_blend_weight(t) == pytest.approx(oracles.mired_weight(t), abs=1e-12)


def test_interpolate_ccm_clamps_exactly():
    p = profile()
    bluish = np.array([0.28, 0.29, 0.43])  # CCT well above 6504 K
    reddish = np.array([0.52, 0.41, 0.07])  # CCT well below 2856 K
    assert np.array_equal(interpolate_ccm(p, bluish), p.ccm_d65)
    assert np.array_equal(interpolate_ccm(p, reddish), p.ccm_a)


def test_interpolate_ccm_between_references():
    p = profile()
    wp = spectrum_to_xyz(planckian_spd(4000))
    x, y = wp[:2] / wp.sum()
    g = oracles.mired_weight(oracles.mccamy(x, y))
    assert 0.45 < g < 0.55
    assert np.allclose(interpolate_ccm(p, wp), g * np.eye(3) + (1 - g) * CCM_A, atol=1e-12)


@given(st.floats(0.05, 1), st.floats(0.05, 1), st.floats(0.05, 1))
def test_interpolated_ccm_is_convex_combination(r, g, b):
    m = interpolate_ccm(profile(), (r, g, b))
    lo = np.minimum(np.eye(3), CCM_A) - 1e-12
    hi = np.maximum(np.eye(3), CCM_A) + 1e-12
    assert np.all((m >= lo) & (m <= hi))


def test_interpolate_ccm_rejects_degenerate_white_point():
    with pytest.raises(ValueError):
        interpolate_ccm(profile(), (1.0, 0.0, 1.0))


def test_lab_examples():
    white = np.array([0.95047, 1.0, 1.08883])
    assert np.allclose(xyz_to_lab(white, white), (100, 0, 0), atol=1e-12)
    assert np.allclose(xyz_to_lab(np.zeros(3), white), (0, 0, 0), atol=1e-12)
    eighth = xyz_to_lab(white / 8, white)
    assert np.allclose(eighth, (42.0, 0, 0), atol=1e-9)
    assert np.allclose(eighth, oracles.lab(white / 8, white), atol=1e-9)
    with pytest.raises(ValueError):
        xyz_to_lab(white, (1.0, 0.0, 1.0))


@given(st.tuples(st.floats(0, 2), st.floats(0, 2), st.floats(0, 2)))
def test_lab_matches_oracle_and_inverts(xyz):
    white = np.array([0.9642, 1.0, 0.8251])
    lab = xyz_to_lab(xyz, white)
    assert np.allclose(lab, oracles.lab(xyz, white), atol=1e-9)
    assert np.allclose(lab_to_xyz(lab, white), xyz, rtol=1e-9, atol=1e-12)


def test_ciede2000_published_pairs():
    lab1, lab2, published, reference = oracles.ciede2000_pairs()
    assert len(published) == 34
    de = ciede2000(lab1, lab2)
    assert np.max(np.abs(de - published)) < 1e-4
    assert np.max(np.abs(de - reference)) < 1e-4


def test_ciede2000_single_pair_and_identity():
    assert ciede2000((50, 2.6772, -79.7751), (50, 0, -82.7485)) == pytest.approx(2.0425, abs=1e-4)
    assert ciede2000((50, 10, 10), (50, 10, 10)) == 0.0
    with pytest.raises(ValueError):
        ciede2000((np.nan, 0, 0), (50, 0, 0))


def test_ciede2000_symmetric_on_1000_random_pairs():
    rng = np.random.default_rng(7)
    p = np.column_stack([rng.uniform(0, 100, 1000), rng.uniform(-128, 128, (1000, 2))])
    q = np.column_stack([rng.uniform(0, 100, 1000), rng.uniform(-128, 128, (1000, 2))])
    assert np.allclose(ciede2000(p, q), ciede2000(q, p), atol=1e-10)


@given(lab_color, lab_color)
def test_ciede2000_nonnegative_and_zero_only_for_identical(p, q):
    d = ciede2000(p, q)
    assert d >= 0
    if not np.allclose(p, q, atol=1e-6):
        assert d > 0


@pytest.mark.parametrize("c, expected", [((1, 1, 1), (1 / 3, 1 / 3)), ((2, 2, 2), (1 / 3, 1 / 3)), ((1, 0, 0), (1, 0))])
def test_xyz_to_xy_examples(c, expected):
    assert np.allclose(xyz_to_xy(c), expected, atol=1e-15)


def test_xyz_to_xy_rejects_zero_sum():
    with pytest.raises(ValueError):
        xyz_to_xy((0, 0, 0))


def test_raw_to_xyz_examples():
    assert np.array_equal(raw_to_xyz((0.2, 0.3, 0.4), np.eye(3)), [0.2, 0.3, 0.4])
    assert np.array_equal(raw_to_xyz(np.zeros(3), CCM_A), np.zeros(3))
    rng = np.random.default_rng(1)
    u, v = rng.random(3), rng.random(3)
    assert np.allclose(raw_to_xyz(u + v, CCM_A), raw_to_xyz(u, CCM_A) + raw_to_xyz(v, CCM_A), atol=1e-15)
    assert np.allclose(raw_to_xyz(u, CCM_A), CCM_A @ u)


def test_profile_json_round_trip(tmp_path):
    sens = np.random.default_rng(2).random((3, 36))
    p = CameraProfile("nikon", np.eye(3) * 2, CCM_A, sens, DEFAULT_GRID)
    d = p.to_dict()
    assert set(d) == {"camera_id", "ccm_d65", "ccm_a", "sensitivity", "grid"}
    assert len(d["ccm_d65"]) == 9
    p.save(tmp_path / "p.json")
    assert CameraProfile.load(tmp_path / "p.json") == p
    assert CameraProfile.from_dict(profile().to_dict()) == profile()


def test_profile_rejects_bad_fields():
    with pytest.raises(ValueError):
        CameraProfile("c", np.zeros((3, 3)), CCM_A)
    with pytest.raises(ValueError):
        CameraProfile("c", np.eye(3), CCM_A, -np.ones((3, 36)))
    with pytest.raises(ValueError, match="missing"):
        CameraProfile.from_dict({"camera_id": "c", "ccm_a": list(range(9))})


def test_equal_energy_spectrum_is_near_white():
    xy = xyz_to_xy(spectrum_to_xyz(Spectrum(DEFAULT_GRID, np.ones(36))))
    assert np.allclose(xy, (1 / 3, 1 / 3), atol=2e-3)
    assert cmf_on_grid().shape == (3, 36)
    assert spectrum_to_xyz(planckian_spd(5000))[1] == pytest.approx(1.0)
