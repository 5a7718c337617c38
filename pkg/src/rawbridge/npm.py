"""Neural physical model: checker simulation and raw-to-raw transform estimation."""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

import numpy as np

from . import _tables
from .illumination import SPD_FLOOR
from .spectral import DEFAULT_GRID, SpectralGrid, Spectrum, resample_spectrum

N_PATCHES = 24
NEUTRAL8 = 19
GREEN = 1
FORMAT_VERSION = 1
MAX_CONDITION = 1e12

SOURCE = "source"
TARGET = "target"


def as_checker(patches, name: str = "checker") -> np.ndarray:
    """Validate a 24x3 array of nonnegative raw patch values."""
    arr = np.asarray(patches, dtype=float)
    if arr.shape != (N_PATCHES, 3):
        raise ValueError(f"{name}: expected {N_PATCHES}x3 patch values, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name}: patch values must be finite")
    if np.any(arr < 0):
        raise ValueError(f"{name}: patch values must be nonnegative")
    return arr


def macbeth_reflectances(grid: SpectralGrid = DEFAULT_GRID) -> np.ndarray:
    """Embedded ColorChecker reflectances (24 x n_bins) on ``grid``."""
    src = SpectralGrid(_tables.MACBETH_START_NM, _tables.MACBETH_STEP_NM, _tables.MACBETH_REFLECTANCE.shape[1])
    if src == grid:
        return _tables.MACBETH_REFLECTANCE.copy()
    rows = [resample_spectrum(Spectrum(src, r), grid).values for r in _tables.MACBETH_REFLECTANCE]
    return np.clip(np.array(rows), 0.0, 1.0)


@dataclass(eq=False)
class NpmParameters:
    grid: SpectralGrid
    s_source: np.ndarray
    s_target: np.ndarray
    reflectances: np.ndarray
    recovery: Optional[np.ndarray] = None

    def __post_init__(self):
        n = self.grid.n_bins
        self.s_source = _matrix(self.s_source, (3, n), "s_source")
        self.s_target = _matrix(self.s_target, (3, n), "s_target")
        self.reflectances = _matrix(self.reflectances, (N_PATCHES, n), "reflectances")
        if self.recovery is not None:
            rec = np.asarray(self.recovery, dtype=float)
            if rec.ndim != 2 or rec.shape[0] != n:
                raise ValueError(f"recovery must be {n}xM, got shape {rec.shape}")
            self.recovery = _matrix(rec, rec.shape, "recovery")
        for name in ("s_source", "s_target"):
            if np.any(getattr(self, name) < 0):
                raise ValueError(f"{name} must be nonnegative")
        if np.any(self.reflectances < 0) or np.any(self.reflectances > 1):
            raise ValueError("reflectances must lie in [0, 1]")

    def sensitivity(self, camera: str) -> np.ndarray:
        if camera == SOURCE:
            return self.s_source
        if camera == TARGET:
            return self.s_target
        raise ValueError(f"camera must be '{SOURCE}' or '{TARGET}', got {camera!r}")

    def tensors(self) -> dict[str, np.ndarray]:
        out = {"s_source": self.s_source, "s_target": self.s_target, "reflectances": self.reflectances}
        if self.recovery is not None:
            out["recovery"] = self.recovery
        return out

    def with_tensors(self, **tensors) -> "NpmParameters":
        return replace(self, **tensors)

    def copy(self) -> "NpmParameters":
        return self.with_tensors(**{k: v.copy() for k, v in self.tensors().items()})

    def to_dict(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "grid": self.grid.to_dict(),
            "s_source": self.s_source.tolist(),
            "s_target": self.s_target.tolist(),
            "reflectances": self.reflectances.tolist(),
            "recovery": None if self.recovery is None else self.recovery.tolist(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "NpmParameters":
        for key in ("grid", "s_source", "s_target", "reflectances"):
            if key not in d:
                raise ValueError(f"parameter file missing field '{key}'")
        version = d.get("format_version", FORMAT_VERSION)
        if version > FORMAT_VERSION:
            raise ValueError(f"unsupported format_version {version}")
        return cls(
            SpectralGrid.from_dict(d["grid"]),
            d["s_source"],
            d["s_target"],
            d["reflectances"],
            d.get("recovery"),
        )

    def save(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_dict()), encoding="utf-8")

    @classmethod
    def load(cls, path) -> "NpmParameters":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def _matrix(a, shape, name) -> np.ndarray:
    arr = np.array(a, dtype=float)
    if arr.shape != tuple(shape):
        raise ValueError(f"{name}: expected shape {tuple(shape)}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name}: entries must be finite")
    return arr


def params_equal(a: NpmParameters, b: NpmParameters) -> bool:
    ta, tb = a.tensors(), b.tensors()
    return a.grid == b.grid and ta.keys() == tb.keys() and all(np.array_equal(ta[k], tb[k]) for k in ta)


def render_checker(sensitivity: np.ndarray, reflectances: np.ndarray, spd_values: np.ndarray) -> np.ndarray:
    """Patch responses ``S . diag(r_x) . L`` for every patch (24 x 3).

    Training and synthetic data generation both go through this function so
    a dataset rendered from some parameters is reproduced bit for bit.
    """
    return (reflectances * spd_values) @ sensitivity.T


def simulate_checker(params: NpmParameters, camera: str, spd: Spectrum) -> np.ndarray:
    if spd.grid != params.grid:
        raise ValueError(f"SPD grid {spd.grid} does not match model grid {params.grid}")
    return render_checker(params.sensitivity(camera), params.reflectances, spd.values)


def normalize_by_neutral8(c) -> np.ndarray:
    """Divide every value by the green channel of the Neutral 8 patch."""
    c = np.asarray(c, dtype=float)
    ref = c[NEUTRAL8, GREEN]
    if not ref > 1e-9:
        raise ValueError(f"Neutral 8 green value {ref:g} too small to normalise by")
    return c / ref


class RankDeficientError(ValueError):
    """Source patches do not span three dimensions."""


@dataclass(frozen=True, eq=False)
class RawToRawTransform:
    """Linear 3x3 raw-to-raw map."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.shape != (3, 3) or not np.all(np.isfinite(m)):
            raise ValueError("transform must be a finite 3x3 matrix")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    def __call__(self, rgb) -> np.ndarray:
        return np.asarray(rgb, dtype=float) @ self.matrix.T

    @classmethod
    def identity(cls) -> "RawToRawTransform":
        return cls(np.eye(3))


def solve_transform(src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    """Least-squares F with ``F @ src_x ~ dst_x`` for patch rows ``src``/``dst`` (K x 3)."""
    gram = src.T @ src
    cross = dst.T @ src
    if np.linalg.cond(gram) > MAX_CONDITION:
        raise RankDeficientError("source patches are rank deficient; cannot fit a 3x3 transform")
    # gram is symmetric, so solving gram @ F.T = cross.T gives F = cross @ inv(gram)
    return np.linalg.solve(gram, cross.T).T


def estimate_transform(source, target) -> RawToRawTransform:
    src = normalize_by_neutral8(as_checker(source, "source"))
    dst = normalize_by_neutral8(as_checker(target, "target"))
    return RawToRawTransform(solve_transform(src, dst))


def compute_transform_for_illumination(params: NpmParameters, spd: Spectrum) -> RawToRawTransform:
    return estimate_transform(simulate_checker(params, SOURCE, spd), simulate_checker(params, TARGET, spd))


def apply_transform(image, f: RawToRawTransform) -> np.ndarray:
    """Per-pixel transform of an (..., 3) image, clamped at zero."""
    img = np.asarray(image)
    if img.shape[-1] != 3:
        raise ValueError(f"expected a 3-channel image, got shape {img.shape}")
    out = f(img)
    np.maximum(out, 0.0, out=out)
    if np.issubdtype(img.dtype, np.floating):
        return out.astype(img.dtype, copy=False)
    return out


def parameter_count(params: NpmParameters) -> int:
    return int(sum(t.size for t in params.tensors().values()))


__all__ = [
    "N_PATCHES",
    "NEUTRAL8",
    "SPD_FLOOR",
    "NpmParameters",
    "RawToRawTransform",
    "RankDeficientError",
    "apply_transform",
    "as_checker",
    "compute_transform_for_illumination",
    "estimate_transform",
    "macbeth_reflectances",
    "normalize_by_neutral8",
    "parameter_count",
    "render_checker",
    "simulate_checker",
    "solve_transform",
]
