import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from rawbridge.npm import (
    NEUTRAL8,
    NpmParameters,
    RankDeficientError,
    RawToRawTransform,
    apply_transform,
    as_checker,
    compute_transform_for_illumination,
    estimate_transform,
    macbeth_reflectances,
    normalize_by_neutral8,
    parameter_count,
    params_equal,
    simulate_checker,
)
from rawbridge.pipeline import init_from_calibration
from rawbridge.spectral import DEFAULT_GRID, SpectralGrid, Spectrum, planckian_spd


def random_params(seed=0, n_rec=3) -> NpmParameters:
    return init_from_calibration(DEFAULT_GRID, macbeth_reflectances(), seed=seed, n_recovery_channels=n_rec)


def well_conditioned(rng) -> np.ndarray:
    """Random nonnegative 3x3 (so mapped checkers stay valid) with condition number < 50."""
    while True:
        a = rng.uniform(0.0, 1.0, (3, 3)) + np.eye(3)
        if np.linalg.cond(a) < 50:
            return a


def test_simulate_dark_delta_and_linearity():
    p = random_params()
    zero = Spectrum(DEFAULT_GRID, np.zeros(36))
    assert np.all(simulate_checker(p, "source", zero) == 0)
    j = 17
    delta = Spectrum(DEFAULT_GRID, np.eye(36)[j])
    out = simulate_checker(p, "target", delta)
    assert np.allclose(out, p.reflectances[:, j:j + 1] * p.s_target[:, j], rtol=1e-15)
    spd = planckian_spd(4000)
    assert np.allclose(simulate_checker(p, "source", spd.scaled(2.0)), 2 * simulate_checker(p, "source", spd))


def test_simulate_is_linear_in_each_reflectance_row():
    p = random_params(1)
    spd = planckian_spd(5200)
    rng = np.random.default_rng(0)
    r1, r2 = rng.uniform(0, 0.5, 36), rng.uniform(0, 0.5, 36)

    def patch0(row):
        refl = p.reflectances.copy()
        refl[0] = row
        return simulate_checker(p.with_tensors(reflectances=refl), "source", spd)[0]

    assert np.allclose(patch0(r1 + r2), patch0(r1) + patch0(r2), rtol=1e-12)


def test_simulate_rejects_grid_mismatch():
    with pytest.raises(ValueError, match="grid"):
        simulate_checker(random_params(), "source", planckian_spd(4000, SpectralGrid(400, 10, 36)))
    with pytest.raises(ValueError):
        simulate_checker(random_params(), "other", planckian_spd(4000))


def test_normalize_examples():
    c = np.random.default_rng(0).uniform(0.1, 2.0, (24, 3))
    n = normalize_by_neutral8(c)
    assert n[NEUTRAL8, 1] == 1.0
    assert np.array_equal(normalize_by_neutral8(np.full((24, 3), 0.37)), np.ones((24, 3)))
    c[NEUTRAL8, 1] = 1e-10
    with pytest.raises(ValueError):
        normalize_by_neutral8(c)


@given(st.floats(1e-3, 1e3))
def test_normalize_scale_invariant(alpha):
    c = np.random.default_rng(1).uniform(0.1, 2.0, (24, 3))
    assert np.allclose(normalize_by_neutral8(alpha * c), normalize_by_neutral8(c), rtol=1e-12)


def test_estimate_transform_identity_and_recovery():
    rng = np.random.default_rng(2)
    src = rng.uniform(0.05, 1.0, (24, 3))
    assert np.allclose(estimate_transform(src, src).matrix, np.eye(3), atol=1e-9)
    a = well_conditioned(rng)
    # Neutral 8 normalisation rescales the target by the ratio of green references
    scale = src[NEUTRAL8, 1] / (src @ a.T)[NEUTRAL8, 1]
    assert np.allclose(estimate_transform(src, src @ a.T).matrix, scale * a, atol=1e-9)


def test_estimate_transform_rejects_collinear_patches():
    direction = np.array([0.2, 0.5, 0.3])
    src = np.outer(np.linspace(0.1, 1.0, 24), direction)
    with pytest.raises(RankDeficientError):
        estimate_transform(src, src)


def test_estimate_transform_matches_generic_least_squares_and_beats_candidates():
    rng = np.random.default_rng(3)
    src = rng.uniform(0.05, 1.0, (24, 3))
    tgt = rng.uniform(0.05, 1.0, (24, 3))
    f = estimate_transform(src, tgt).matrix
    s_n, t_n = normalize_by_neutral8(src), normalize_by_neutral8(tgt)
    assert np.allclose(f, oracles.lstsq_transform(s_n, t_n), atol=1e-12)
    best = np.sum((s_n @ f.T - t_n) ** 2)
    for _ in range(100):
        cand = f + rng.normal(scale=0.1, size=(3, 3))
        assert best <= np.sum((s_n @ cand.T - t_n) ** 2)


def test_checker_validation():
    with pytest.raises(ValueError):
        as_checker(np.ones((23, 3)))
    with pytest.raises(ValueError):
        as_checker(-np.ones((24, 3)))


def test_transform_for_identical_cameras_is_identity():
    p = random_params(4)
    p = p.with_tensors(s_target=p.s_source.copy())
    assert np.allclose(compute_transform_for_illumination(p, planckian_spd(3300)).matrix, np.eye(3), atol=1e-9)


@pytest.mark.parametrize("gains", [(0.7, 1.0, 1.6), (0.5, 2.0, 1.3)])
def test_transform_for_channel_gains_is_their_inverse(gains):
    # s_source = D s_target; Neutral 8 normalisation divides by the green gain,
    # so F = d_green * D^-1 (exactly D^-1 when the green gain is 1)
    p = random_params(5)
    d = np.diag(gains)
    p = p.with_tensors(s_source=d @ p.s_target)
    f = compute_transform_for_illumination(p, planckian_spd(6100)).matrix
    assert np.allclose(f, gains[1] * np.linalg.inv(d), atol=1e-9)


@given(st.floats(1e-3, 1e3), st.floats(2000, 12000))
def test_transform_invariant_to_spd_scale(alpha, cct):
    p = random_params(6)
    spd = planckian_spd(cct)
    a = compute_transform_for_illumination(p, spd).matrix
    b = compute_transform_for_illumination(p, spd.scaled(alpha)).matrix
    assert np.allclose(a, b, rtol=1e-9, atol=1e-12)


def test_transform_reproduces_exactly_linear_target():
    p = random_params(7)
    a = well_conditioned(np.random.default_rng(7))
    p = p.with_tensors(s_target=a @ p.s_source)
    spd = planckian_spd(4800)
    f = compute_transform_for_illumination(p, spd)
    s_n = normalize_by_neutral8(simulate_checker(p, "source", spd))
    t_n = normalize_by_neutral8(simulate_checker(p, "target", spd))
    assert np.allclose(f(s_n), t_n, atol=1e-9)


def test_apply_transform_examples():
    rng = np.random.default_rng(8)
    img = rng.random((5, 7, 3)).astype(np.float32)
    out = apply_transform(img, RawToRawTransform.identity())
    assert out.dtype == np.float32 and np.array_equal(out, img)
    assert np.array_equal(apply_transform(np.zeros((4, 4, 3)), RawToRawTransform(rng.random((3, 3)))), np.zeros((4, 4, 3)))
    f = RawToRawTransform(rng.normal(size=(3, 3)))
    img64 = rng.random((3, 4, 3))
    out = apply_transform(img64, f)
    for i, j in np.ndindex(3, 4):
        assert np.allclose(out[i, j], np.maximum(f.matrix @ img64[i, j], 0.0), atol=1e-15)
    assert out.min() >= 0.0
    with pytest.raises(ValueError):
        apply_transform(np.ones((4, 4)), f)


def test_parameter_counts_for_default_configurations():
    assert parameter_count(random_params(n_rec=3)) == 1188
    assert parameter_count(random_params(n_rec=16)) == 1656
    assert parameter_count(random_params(n_rec=None)) == 1080


def test_params_json_round_trip(tmp_path):
    p = random_params(9)
    p.save(tmp_path / "p.json")
    q = NpmParameters.load(tmp_path / "p.json")
    assert params_equal(p, q)
    assert p.to_dict()["format_version"] == 1
    r = random_params(9, n_rec=None)
    assert params_equal(NpmParameters.from_dict(r.to_dict()), r)


def test_params_validation():
    p = random_params()
    with pytest.raises(ValueError, match="nonnegative"):
        p.with_tensors(s_source=-p.s_source)
    with pytest.raises(ValueError, match=r"\[0, 1\]"):
        p.with_tensors(reflectances=p.reflectances + 1.0)
    with pytest.raises(ValueError):
        p.with_tensors(recovery=np.ones((30, 3)))
    with pytest.raises(ValueError):
        NpmParameters.from_dict({**p.to_dict(), "format_version": 99})
