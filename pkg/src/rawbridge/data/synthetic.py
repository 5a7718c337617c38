"""Synthetic two-camera checker datasets rendered with the physical forward model."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..colorimetry import CameraProfile, cmf_on_grid
from ..illumination import (
    MULTISPECTRAL,
    RGB_IMAGE_STATS,
    SPECTROMETER,
    WHITE_POINT,
    IlluminationMeasurement,
    choose_reference_channel,
    gray_world,
)
from ..npm import NEUTRAL8, NpmParameters, macbeth_reflectances, normalize_by_neutral8, render_checker, solve_transform
from ..spectral import (
    ANCHOR_NM,
    DEFAULT_GRID,
    SpectralGrid,
    Spectrum,
    daylight_spd,
    gaussian_bump,
    planckian_spd,
)
from .records import Dataset, SceneRecord

# (centre nm, width nm, gain) of the target camera's channels
_BASE_CHANNELS = ((455.0, 26.0, 0.85), (535.0, 34.0, 1.0), (600.0, 28.0, 0.75))
# red channels typically leak a little in the blue
_RED_BLUE_LOBE = (445.0, 22.0, 0.06)


@dataclass(frozen=True)
class SyntheticConfig:
    """Knobs for :func:`generate_synthetic`.

    ``mix`` gives the fractions of Planckian, daylight and random-smooth
    illuminants. ``sensitivity_divergence`` scales how far the source camera's
    channel centres, widths and gains are perturbed from the target's.
    """

    n_train: int = 120
    n_val: int = 20
    n_test: int = 30
    mix: tuple = (0.4, 0.3, 0.3)
    cct_range: tuple = (2500.0, 10000.0)
    noise_sigma: float = 0.005
    sensitivity_divergence: float = 1.0
    seed: int = 0
    grid: SpectralGrid = DEFAULT_GRID
    n_multispectral: int = 16
    source_camera: str = "source"
    target_camera: str = "target"

    def __post_init__(self):
        if min(self.n_train, self.n_val, self.n_test) < 1:
            raise ValueError("illuminant counts must be >= 1")
        if self.noise_sigma < 0:
            raise ValueError("noise_sigma must be >= 0")
        mix = np.asarray(self.mix, dtype=float)
        if mix.shape != (3,) or np.any(mix < 0) or abs(mix.sum() - 1.0) > 1e-9:
            raise ValueError(f"mix must be three nonnegative fractions summing to 1, got {self.mix}")
        lo, hi = self.cct_range
        if not 1000.0 <= lo <= hi <= 20000.0:
            raise ValueError(f"cct_range {self.cct_range} must lie within [1000, 20000] K")
        if self.source_camera == self.target_camera:
            raise ValueError("source and target cameras need distinct ids")


def _sensitivity(grid: SpectralGrid, channels, lobe) -> np.ndarray:
    s = np.stack([gaussian_bump(grid, c, w, g) for c, w, g in channels])
    s[0] += gaussian_bump(grid, *lobe)
    return s


def camera_pair(grid: SpectralGrid, divergence: float, rng: np.random.Generator):
    """Target and source sensitivities (3 x n_bins each)."""
    shifts = rng.normal(0.0, 12.0, 3)
    width_scale = rng.normal(0.0, 0.15, 3)
    gain_scale = rng.normal(0.0, 0.15, 3)
    target = _sensitivity(grid, _BASE_CHANNELS, _RED_BLUE_LOBE)
    source_channels = [
        (c + divergence * shifts[i], w * (1.0 + divergence * width_scale[i]), g * (1.0 + divergence * gain_scale[i]))
        for i, (c, w, g) in enumerate(_BASE_CHANNELS)
    ]
    lobe = (_RED_BLUE_LOBE[0], _RED_BLUE_LOBE[1], _RED_BLUE_LOBE[2] * (1.0 + divergence * gain_scale[0]))
    source = _sensitivity(grid, source_channels, lobe)
    return np.maximum(source, 0.0), target


def _sample_cct(rng, lo, hi) -> float:
    # uniform in mired, which is closer to perceptually uniform along the locus
    return 1e6 / rng.uniform(1e6 / hi, 1e6 / lo)


def sample_illuminant(rng: np.random.Generator, kind: str, cct_range, grid: SpectralGrid) -> Spectrum:
    lo, hi = cct_range
    if kind == "planckian":
        return planckian_spd(_sample_cct(rng, lo, hi), grid)
    if kind == "daylight":
        return daylight_spd(_sample_cct(rng, max(lo, 4000.0), max(hi, 4000.0)), grid)
    base = planckian_spd(_sample_cct(rng, lo, hi), grid)
    t = (grid.wavelengths - grid.start_nm) / (grid.end_nm - grid.start_nm)
    k = np.arange(1, 4)[:, None]
    amp = rng.normal(0.0, 0.25, (3, 1))
    phase = rng.uniform(0.0, 2.0 * np.pi, (3, 1))
    vals = base.values * np.exp(np.sum(amp * np.cos(np.pi * k * t + phase), axis=0))
    return Spectrum(grid, vals / np.interp(ANCHOR_NM, grid.wavelengths, vals))


def fit_ccm(sensitivity: np.ndarray, reflectances: np.ndarray, spd: Spectrum) -> np.ndarray:
    """Least-squares raw -> XYZ matrix for a camera from checker renderings under ``spd``."""
    raw = normalize_by_neutral8(render_checker(sensitivity, reflectances, spd.values))
    xyz = render_checker(cmf_on_grid(spd.grid), reflectances, spd.values)
    xyz = xyz / xyz[NEUTRAL8, 1]
    return solve_transform(raw, xyz)


def _multispectral_sensor(grid: SpectralGrid, n: int) -> np.ndarray:
    centres = np.linspace(grid.start_nm + 10.0, grid.end_nm - 10.0, n)
    return np.stack([gaussian_bump(grid, c, 15.0) for c in centres])


def generate_synthetic(config: SyntheticConfig = SyntheticConfig()):
    """Render a paired two-camera dataset and return it with its generating parameters.

    Each scene carries a spectrometer reading of its illuminant (shared by both
    cameras), per-camera gray-world channel means of the checker and the true
    per-camera white point, and a multispectral gray-world reading.
    """
    grid = config.grid
    rng = np.random.default_rng(config.seed)
    s_source, s_target = camera_pair(grid, config.sensitivity_divergence, rng)
    refl = macbeth_reflectances(grid)
    ms_sensor = _multispectral_sensor(grid, config.n_multispectral)
    kinds = ("planckian", "daylight", "random_smooth")

    splits = [("train", config.n_train), ("val", config.n_val), ("test", config.n_test)]
    illuminants = []
    for split, n in splits:
        for i in range(n):
            kind = kinds[rng.choice(3, p=np.asarray(config.mix, dtype=float))]
            illuminants.append((f"{split}-{i:04d}", split, sample_illuminant(rng, kind, config.cct_range, grid)))

    cams = ((config.source_camera, s_source), (config.target_camera, s_target))
    scenes = []
    ms_readings = []
    for scene_id, split, spd in illuminants:
        spectro = IlluminationMeasurement.from_spectrum(spd)
        ms_clean = ms_sensor @ (refl.mean(axis=0) * spd.values)
        ms = np.maximum(ms_clean * (1.0 + config.noise_sigma * rng.standard_normal(ms_clean.shape)), 1e-12)
        ms_readings.append((split, ms))
        for cam_id, sens in cams:
            clean = render_checker(sens, refl, spd.values)
            noise = rng.standard_normal(clean.shape)
            checker = np.maximum(clean * (1.0 + config.noise_sigma * noise), 0.0)
            white = sens @ spd.values
            meas = {
                SPECTROMETER: spectro,
                RGB_IMAGE_STATS: IlluminationMeasurement(RGB_IMAGE_STATS, checker.mean(axis=0)),
                WHITE_POINT: IlluminationMeasurement(WHITE_POINT, white / white[1]),
            }
            scenes.append(SceneRecord(scene_id, cam_id, checker, meas, split=split))

    ref = choose_reference_channel([ms for split, ms in ms_readings if split == "train"])
    for i, rec in enumerate(scenes):
        ms = ms_readings[i // 2][1]
        rec.illumination[MULTISPECTRAL] = IlluminationMeasurement(MULTISPECTRAL, ms, reference_channel=ref)

    d65 = daylight_spd(6504.0, grid)
    ill_a = planckian_spd(2856.0, grid)
    profiles = {
        cam_id: CameraProfile(cam_id, fit_ccm(sens, refl, d65), fit_ccm(sens, refl, ill_a), sens, grid)
        for cam_id, sens in cams
    }
    dataset = Dataset(scenes, profiles, config.source_camera, config.target_camera)

    train_src = [r for r in dataset.records(config.source_camera) if r.split == "train"]
    wps = np.array([gray_world(r.measurement(RGB_IMAGE_STATS).values) for r in train_src])
    spds = np.array([r.measurement(SPECTROMETER).values for r in train_src])
    recovery = fit_recovery(wps, spds)
    truth = NpmParameters(grid, s_source, s_target, refl, recovery)
    return dataset, truth


def fit_recovery(white_points: np.ndarray, spds: np.ndarray, ridge: float = 1e-6) -> np.ndarray:
    """Ridge-regularised least-squares recovery matrix mapping white points to SPDs."""
    wp = np.asarray(white_points, dtype=float)
    gram = wp.T @ wp + ridge * np.eye(wp.shape[1])
    return np.linalg.solve(gram, wp.T @ np.asarray(spds, dtype=float)).T
