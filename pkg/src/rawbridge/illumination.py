"""Illumination estimation: turn a camera statistic, multispectral reading or
spectrometer measurement into an SPD on the model grid."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .spectral import ANCHOR_NM, SpectralGrid, Spectrum, resample_spectrum

SPD_FLOOR = 1e-6

RGB_IMAGE_STATS = "rgb_image_stats"
WHITE_POINT = "white_point"
MULTISPECTRAL = "multispectral_vector"
SPECTROMETER = "spectrometer_spd"
KINDS = (RGB_IMAGE_STATS, WHITE_POINT, MULTISPECTRAL, SPECTROMETER)


@dataclass(eq=False)
class IlluminationMeasurement:
    """One illumination reading.

    ``values`` holds RGB channel means, a white point, raw multispectral channel
    responses or spectrometer samples depending on ``kind``. Spectrometer
    readings also carry ``wavelengths_nm``; multispectral readings may name the
    ``reference_channel`` used for normalisation.
    """

    kind: str
    values: np.ndarray
    wavelengths_nm: Optional[np.ndarray] = None
    reference_channel: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown illumination kind '{self.kind}', expected one of {KINDS}")
        self.values = np.asarray(self.values, dtype=float).reshape(-1)
        if not np.all(np.isfinite(self.values)):
            raise ValueError(f"{self.kind}: values must be finite")
        if self.kind in (RGB_IMAGE_STATS, WHITE_POINT) and self.values.size != 3:
            raise ValueError(f"{self.kind}: expected 3 values, got {self.values.size}")
        if self.kind == SPECTROMETER:
            if self.wavelengths_nm is None:
                raise ValueError("spectrometer_spd requires wavelengths_nm")
            self.wavelengths_nm = np.asarray(self.wavelengths_nm, dtype=float).reshape(-1)
            if self.wavelengths_nm.size != self.values.size:
                raise ValueError("spectrometer_spd: wavelengths_nm and values differ in length")
        if self.reference_channel is not None and not 0 <= self.reference_channel < self.values.size:
            raise ValueError(f"reference_channel {self.reference_channel} out of range")

    @property
    def n_channels(self) -> int:
        return self.values.size

    def __eq__(self, other):
        if not isinstance(other, IlluminationMeasurement):
            return NotImplemented
        wl_eq = (self.wavelengths_nm is None and other.wavelengths_nm is None) or (
            self.wavelengths_nm is not None
            and other.wavelengths_nm is not None
            and np.array_equal(self.wavelengths_nm, other.wavelengths_nm)
        )
        return (
            self.kind == other.kind
            and np.array_equal(self.values, other.values)
            and wl_eq
            and self.reference_channel == other.reference_channel
        )

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "values": self.values.tolist()}
        if self.wavelengths_nm is not None:
            d["wavelengths_nm"] = self.wavelengths_nm.tolist()
        if self.reference_channel is not None:
            d["reference_channel"] = self.reference_channel
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "IlluminationMeasurement":
        if "kind" not in d or "values" not in d:
            raise ValueError("illumination measurement needs 'kind' and 'values'")
        return cls(
            d["kind"],
            d["values"],
            d.get("wavelengths_nm"),
            None if d.get("reference_channel") is None else int(d["reference_channel"]),
        )

    @classmethod
    def from_spectrum(cls, s: Spectrum) -> "IlluminationMeasurement":
        return cls(SPECTROMETER, s.values, s.wavelengths)

    def to_spectrum(self) -> Spectrum:
        if self.kind != SPECTROMETER:
            raise ValueError(f"{self.kind} measurement is not a spectrum")
        return Spectrum(SpectralGrid.from_wavelengths(self.wavelengths_nm), self.values)


def gray_world(channel_means, reference: int = 1) -> np.ndarray:
    """White point from channel means, divided by the reference (green) channel."""
    means = np.asarray(channel_means, dtype=float).reshape(-1)
    if means[reference] <= 0:
        raise ValueError(f"reference channel mean must be positive, got {means[reference]}")
    if np.any(means <= 0):
        raise ValueError("gray world needs positive channel means")
    return means / means[reference]


def choose_reference_channel(vectors: Sequence) -> int:
    """Channel with the largest mean response over a set of multispectral readings."""
    arr = np.asarray([np.asarray(v, dtype=float).reshape(-1) for v in vectors])
    if arr.size == 0:
        raise ValueError("no readings to choose a reference channel from")
    return int(np.argmax(arr.mean(axis=0)))


def recovery_pre_clamp(wp, m) -> np.ndarray:
    wp = np.asarray(wp, dtype=float).reshape(-1)
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[1] != wp.size:
        raise ValueError(f"recovery matrix shape {m.shape} does not accept a {wp.size}-channel white point")
    return m @ wp


def recover_spd(wp, m, grid: SpectralGrid) -> Spectrum:
    """SPD = M . wp, floored at ``SPD_FLOOR`` so it stays a valid spectrum."""
    m = np.asarray(m, dtype=float)
    if m.shape[0] != grid.n_bins:
        raise ValueError(f"recovery matrix has {m.shape[0]} rows, grid has {grid.n_bins} bins")
    return Spectrum(grid, np.maximum(recovery_pre_clamp(wp, m), SPD_FLOOR))


def spd_from_spectrometer(measurement: Spectrum, grid: SpectralGrid) -> Spectrum:
    """Bin a measured SPD onto the model grid and scale it to 1 at 560 nm."""
    if measurement.grid.n_bins < 2:
        raise ValueError("spectrometer measurement needs at least two bins")
    if not np.any(measurement.values > 0):
        raise ValueError("spectrometer measurement is all zero")
    binned = resample_spectrum(measurement, grid)
    anchor = binned.value_at(ANCHOR_NM)
    if anchor <= 0:
        raise ValueError("spectrometer measurement is zero at 560 nm")
    return Spectrum(grid, binned.values / anchor)


def measurement_white_point(meas: IlluminationMeasurement) -> np.ndarray:
    """Reference-normalised white point fed to the recovery matrix."""
    if meas.kind == RGB_IMAGE_STATS:
        return gray_world(meas.values)
    if meas.kind == WHITE_POINT:
        return meas.values.copy()
    if meas.kind == MULTISPECTRAL:
        ref = meas.reference_channel
        if ref is None:
            ref = int(np.argmax(meas.values))
        return gray_world(meas.values, reference=ref)
    raise ValueError(f"{meas.kind} measurement has no white point")


def estimate_illumination(meas: IlluminationMeasurement, m, grid: SpectralGrid) -> Spectrum:
    if meas.kind == SPECTROMETER:
        return spd_from_spectrometer(meas.to_spectrum(), grid)
    if m is None:
        raise ValueError(f"{meas.kind} illumination needs a spectral recovery matrix")
    return recover_spd(measurement_white_point(meas), m, grid)
