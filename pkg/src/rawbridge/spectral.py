"""Wavelength grids, spectra, resampling and analytic illuminants."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _tables

# Planck radiation constants (CODATA 2018)
_H = 6.62607015e-34
_C = 299792458.0
_KB = 1.380649e-23

ANCHOR_NM = 560.0


@dataclass(frozen=True)
class SpectralGrid:
    """Uniform wavelength sampling; bin ``i`` is centred at ``start_nm + i * step_nm``."""

    start_nm: float = 380.0
    step_nm: float = 10.0
    n_bins: int = 36

    def __post_init__(self):
        if not self.step_nm > 0:
            raise ValueError(f"step_nm must be positive, got {self.step_nm}")
        if int(self.n_bins) != self.n_bins or self.n_bins < 2:
            raise ValueError(f"n_bins must be an integer >= 2, got {self.n_bins}")
        object.__setattr__(self, "start_nm", float(self.start_nm))
        object.__setattr__(self, "step_nm", float(self.step_nm))
        object.__setattr__(self, "n_bins", int(self.n_bins))

    @property
    def wavelengths(self) -> np.ndarray:
        return self.start_nm + self.step_nm * np.arange(self.n_bins)

    @property
    def end_nm(self) -> float:
        return self.start_nm + self.step_nm * (self.n_bins - 1)

    def to_dict(self) -> dict:
        return {"start_nm": self.start_nm, "step_nm": self.step_nm, "n_bins": self.n_bins}

    @classmethod
    def from_dict(cls, d: dict) -> "SpectralGrid":
        return cls(float(d["start_nm"]), float(d["step_nm"]), int(d["n_bins"]))

    @classmethod
    def from_wavelengths(cls, wavelengths, rtol: float = 1e-6) -> "SpectralGrid":
        wl = np.asarray(wavelengths, dtype=float)
        if wl.ndim != 1 or wl.size < 2:
            raise ValueError("need at least two wavelengths")
        steps = np.diff(wl)
        if not np.allclose(steps, steps[0], rtol=rtol, atol=1e-9) or steps[0] <= 0:
            raise ValueError("wavelengths must be strictly increasing and uniformly spaced")
        return cls(float(wl[0]), float(steps[0]), int(wl.size))


DEFAULT_GRID = SpectralGrid()


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Nonnegative per-bin values on a :class:`SpectralGrid`.

    The values array is copied and made read-only on construction.
    """

    grid: SpectralGrid
    values: np.ndarray

    def __post_init__(self):
        vals = np.array(self.values, dtype=float).reshape(-1)
        if vals.size == 0:
            raise ValueError("empty spectrum")
        if vals.size != self.grid.n_bins:
            raise ValueError(f"spectrum has {vals.size} values but grid has {self.grid.n_bins} bins")
        if not np.all(np.isfinite(vals)):
            raise ValueError("spectrum values must be finite")
        if np.any(vals < 0):
            raise ValueError("spectrum values must be nonnegative")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    @property
    def wavelengths(self) -> np.ndarray:
        return self.grid.wavelengths

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.grid == other.grid and np.array_equal(self.values, other.values)

    def value_at(self, wavelength_nm: float) -> float:
        return float(np.interp(wavelength_nm, self.wavelengths, self.values))

    def scaled(self, factor: float) -> "Spectrum":
        return Spectrum(self.grid, self.values * factor)


def resample_spectrum(s: Spectrum, target: SpectralGrid) -> Spectrum:
    """Piecewise-linear resampling onto ``target`` with edge-hold extrapolation."""
    if s.grid == target:
        return Spectrum(target, s.values)
    src = s.wavelengths
    dst = target.wavelengths
    if dst[-1] < src[0] or dst[0] > src[-1]:
        raise ValueError(
            f"target grid {dst[0]:g}-{dst[-1]:g} nm does not overlap source {src[0]:g}-{src[-1]:g} nm"
        )
    vals = np.interp(dst, src, s.values)
    return Spectrum(target, np.maximum(vals, 0.0))


def _check_range(name: str, value: float, lo: float, hi: float):
    if not lo <= value <= hi:
        raise ValueError(f"{name}={value} outside [{lo}, {hi}]")


def planck_radiance(wavelengths_nm, cct: float) -> np.ndarray:
    """Blackbody spectral radiance (W sr^-1 m^-3) at the given wavelengths."""
    wl = np.asarray(wavelengths_nm, dtype=float) * 1e-9
    return 2.0 * _H * _C**2 / wl**5 / np.expm1(_H * _C / (wl * _KB * cct))


def planckian_spd(cct: float, grid: SpectralGrid = DEFAULT_GRID) -> Spectrum:
    """Blackbody SPD sampled at bin centres, scaled to 1 at 560 nm."""
    _check_range("cct", cct, 1000.0, 20000.0)
    vals = planck_radiance(grid.wavelengths, cct) / planck_radiance(ANCHOR_NM, cct)
    return Spectrum(grid, vals)


def daylight_chromaticity(cct: float) -> tuple[float, float]:
    """CIE daylight locus xy for a correlated colour temperature."""
    t = float(cct)
    if t <= 7000.0:
        x = -4.6070e9 / t**3 + 2.9678e6 / t**2 + 0.09911e3 / t + 0.244063
    else:
        x = -2.0064e9 / t**3 + 1.9018e6 / t**2 + 0.24748e3 / t + 0.237040
    y = -3.000 * x**2 + 2.870 * x - 0.275
    return x, y


def daylight_spd(cct: float, grid: SpectralGrid = DEFAULT_GRID) -> Spectrum:
    """CIE D-series illuminant built from the S0/S1/S2 basis, scaled to 1 at 560 nm."""
    _check_range("cct", cct, 4000.0, 25000.0)
    x, y = daylight_chromaticity(cct)
    m = 0.0241 + 0.2562 * x - 0.7341 * y
    m1 = (-1.3515 - 1.7703 * x + 5.9114 * y) / m
    m2 = (0.0300 - 31.4424 * x + 30.0717 * y) / m
    s0, s1, s2 = _tables.DAYLIGHT_S012
    basis_grid = SpectralGrid(_tables.DAYLIGHT_START_NM, _tables.DAYLIGHT_STEP_NM, s0.size)
    full = Spectrum(basis_grid, np.maximum(s0 + m1 * s1 + m2 * s2, 0.0))
    out = resample_spectrum(full, grid)
    anchor = full.value_at(ANCHOR_NM)
    return Spectrum(grid, out.values / anchor)


def gaussian_bump(grid: SpectralGrid, center_nm: float, sigma_nm: float, peak: float = 1.0) -> np.ndarray:
    wl = grid.wavelengths
    return peak * np.exp(-0.5 * ((wl - center_nm) / sigma_nm) ** 2)


def write_spectrum_csv(s: Spectrum, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as f:
        f.write(spectrum_to_csv(s))


def spectrum_to_csv(s: Spectrum) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["wavelength_nm", "value"])
    for wl, v in zip(s.wavelengths, s.values):
        w.writerow([repr(float(wl)), repr(float(v))])
    return buf.getvalue()


def read_spectrum_csv(path) -> Spectrum:
    text = Path(path).read_text(encoding="utf-8")
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or [c.strip() for c in rows[0]] != ["wavelength_nm", "value"]:
        raise ValueError(f"{path}: expected header 'wavelength_nm,value'")
    body = [r for r in rows[1:] if r]
    if not body:
        raise ValueError(f"{path}: empty spectrum")
    wl = [float(r[0]) for r in body]
    vals = [float(r[1]) for r in body]
    return Spectrum(SpectralGrid.from_wavelengths(wl), vals)
