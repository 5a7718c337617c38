"""Colour-space conversions, colour differences and CCM interpolation.

Colours are plain numpy arrays whose last axis has length 3 (XYZ, Lab or raw
RGB); most functions broadcast over leading axes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from . import _tables
from .spectral import DEFAULT_GRID, SpectralGrid, Spectrum

CCT_A = 2856.0
CCT_D65 = 6504.0

_LAB_EPS = (6.0 / 29.0) ** 3
_LAB_KAPPA = (29.0 / 6.0) ** 2 / 3.0


def angular_error(u, v) -> np.ndarray:
    """Angle between vectors in degrees."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    nu = np.linalg.norm(u, axis=-1)
    nv = np.linalg.norm(v, axis=-1)
    if np.any(nu == 0) or np.any(nv == 0):
        raise ValueError("angular error undefined for zero-norm vectors")
    # atan2 form of arccos(u.v / |u||v|): same angle, no precision loss near 0 or 180
    cross = np.linalg.norm(np.cross(u, v), axis=-1)
    out = np.degrees(np.arctan2(cross, np.sum(u * v, axis=-1)))
    return out if out.ndim else float(out)


def as_ccm(m) -> np.ndarray:
    """Validate and return a 3x3 colour correction matrix."""
    m = np.array(m, dtype=float)
    if m.size == 9:
        m = m.reshape(3, 3)
    if m.shape != (3, 3):
        raise ValueError(f"CCM must be 3x3, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("CCM entries must be finite")
    if abs(np.linalg.det(m)) <= 1e-12:
        raise ValueError("CCM is singular")
    return m


@dataclass(eq=False)
class CameraProfile:
    camera_id: str
    ccm_d65: np.ndarray
    ccm_a: np.ndarray
    measured_sensitivity: Optional[np.ndarray] = None
    grid: Optional[SpectralGrid] = None

    def __post_init__(self):
        self.ccm_d65 = as_ccm(self.ccm_d65)
        self.ccm_a = as_ccm(self.ccm_a)
        if self.measured_sensitivity is not None:
            sens = np.asarray(self.measured_sensitivity, dtype=float)
            grid = self.grid or DEFAULT_GRID
            if sens.size != 3 * grid.n_bins:
                raise ValueError(
                    f"profile {self.camera_id}: sensitivity has {sens.size} values, expected 3x{grid.n_bins}"
                )
            sens = sens.reshape(3, grid.n_bins)
            if np.any(sens < 0) or not np.all(np.isfinite(sens)):
                raise ValueError(f"profile {self.camera_id}: sensitivity must be finite and nonnegative")
            self.measured_sensitivity = sens

    def __eq__(self, other):
        if not isinstance(other, CameraProfile):
            return NotImplemented
        same_sens = (self.measured_sensitivity is None and other.measured_sensitivity is None) or (
            self.measured_sensitivity is not None
            and other.measured_sensitivity is not None
            and np.array_equal(self.measured_sensitivity, other.measured_sensitivity)
        )
        return (
            self.camera_id == other.camera_id
            and np.array_equal(self.ccm_d65, other.ccm_d65)
            and np.array_equal(self.ccm_a, other.ccm_a)
            and same_sens
            and self.grid == other.grid
        )

    def to_dict(self) -> dict:
        d = {
            "camera_id": self.camera_id,
            "ccm_d65": self.ccm_d65.reshape(-1).tolist(),
            "ccm_a": self.ccm_a.reshape(-1).tolist(),
        }
        if self.measured_sensitivity is not None:
            d["sensitivity"] = self.measured_sensitivity.tolist()
            d["grid"] = (self.grid or DEFAULT_GRID).to_dict()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CameraProfile":
        for key in ("camera_id", "ccm_d65", "ccm_a"):
            if key not in d:
                raise ValueError(f"camera profile missing field '{key}'")
        grid = SpectralGrid.from_dict(d["grid"]) if "grid" in d else None
        sens = np.asarray(d["sensitivity"], dtype=float) if "sensitivity" in d else None
        return cls(str(d["camera_id"]), d["ccm_d65"], d["ccm_a"], sens, grid)

    def save(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2), encoding="utf-8")

    @classmethod
    def load(cls, path) -> "CameraProfile":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def xyz_to_xy(c) -> np.ndarray:
    c = np.asarray(c, dtype=float)
    total = np.sum(c, axis=-1, keepdims=True)
    if np.any(total == 0):
        raise ValueError("chromaticity undefined for X+Y+Z == 0")
    return c[..., :2] / total


def raw_to_xyz(rgb, ccm) -> np.ndarray:
    """Apply a CCM to raw RGB vector(s)."""
    return np.asarray(rgb, dtype=float) @ np.asarray(ccm, dtype=float).T


def estimate_cct(xy) -> float:
    """McCamy's cubic approximation of correlated colour temperature."""
    x, y = float(xy[0]), float(xy[1])
    denom = 0.1858 - y
    if abs(denom) < 1e-9:
        raise ValueError(f"McCamy approximation singular at y={y}")
    n = (x - 0.3320) / denom
    return 449.0 * n**3 + 3525.0 * n**2 + 6823.3 * n + 5520.33


def ccm_blend_weight(cct: float) -> float:
    """Weight of the D65 matrix, linear in inverse CCT and clamped to [0, 1]."""
    if cct <= 0:
        # McCamy goes negative far beyond the blue end of the locus
        return 1.0
    g = (1.0 / cct - 1.0 / CCT_A) / (1.0 / CCT_D65 - 1.0 / CCT_A)
    return float(np.clip(g, 0.0, 1.0))


def interpolate_ccm(profile: CameraProfile, white_point) -> np.ndarray:
    wp = np.asarray(white_point, dtype=float)
    if wp.shape != (3,) or not np.all(np.isfinite(wp)) or wp[1] <= 0:
        raise ValueError(f"degenerate white point {wp}")
    xyz = profile.ccm_d65 @ wp
    if np.sum(xyz) <= 0:
        raise ValueError(f"white point {wp} maps to non-positive XYZ")
    g = ccm_blend_weight(estimate_cct(xyz_to_xy(xyz)))
    if g == 1.0:
        return profile.ccm_d65.copy()
    if g == 0.0:
        return profile.ccm_a.copy()
    return g * profile.ccm_d65 + (1.0 - g) * profile.ccm_a


def _lab_f(t):
    return np.where(t > _LAB_EPS, np.cbrt(t), t / (3.0 * (6.0 / 29.0) ** 2) + 4.0 / 29.0)


def _lab_f_inv(f):
    return np.where(f > 6.0 / 29.0, f**3, 3.0 * (6.0 / 29.0) ** 2 * (f - 4.0 / 29.0))


def xyz_to_lab(c, white) -> np.ndarray:
    """CIE 1976 L*a*b* relative to ``white``."""
    white = np.asarray(white, dtype=float)
    if np.any(white <= 0):
        raise ValueError("reference white must be strictly positive")
    f = _lab_f(np.asarray(c, dtype=float) / white)
    fx, fy, fz = f[..., 0], f[..., 1], f[..., 2]
    return np.stack([116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)], axis=-1)


def lab_to_xyz(lab, white) -> np.ndarray:
    white = np.asarray(white, dtype=float)
    lab = np.asarray(lab, dtype=float)
    fy = (lab[..., 0] + 16.0) / 116.0
    fx = fy + lab[..., 1] / 500.0
    fz = fy - lab[..., 2] / 200.0
    return _lab_f_inv(np.stack([fx, fy, fz], axis=-1)) * white


def ciede2000(p, q) -> np.ndarray:
    """CIEDE2000 colour difference with kL = kC = kH = 1."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if not (np.all(np.isfinite(p)) and np.all(np.isfinite(q))):
        raise ValueError("Lab inputs must be finite")
    L1, a1, b1 = p[..., 0], p[..., 1], p[..., 2]
    L2, a2, b2 = q[..., 0], q[..., 1], q[..., 2]

    c_bar = 0.5 * (np.hypot(a1, b1) + np.hypot(a2, b2))
    c7 = c_bar**7
    g = 0.5 * (1.0 - np.sqrt(c7 / (c7 + 25.0**7)))
    a1p = (1.0 + g) * a1
    a2p = (1.0 + g) * a2
    c1p = np.hypot(a1p, b1)
    c2p = np.hypot(a2p, b2)
    h1p = np.degrees(np.arctan2(b1, a1p)) % 360.0
    h2p = np.degrees(np.arctan2(b2, a2p)) % 360.0
    h1p = np.where((a1p == 0) & (b1 == 0), 0.0, h1p)
    h2p = np.where((a2p == 0) & (b2 == 0), 0.0, h2p)

    dLp = L2 - L1
    dCp = c2p - c1p
    chroma_prod = c1p * c2p
    dh = h2p - h1p
    dh = np.where(dh > 180.0, dh - 360.0, dh)
    dh = np.where(dh < -180.0, dh + 360.0, dh)
    dh = np.where(chroma_prod == 0, 0.0, dh)
    dHp = 2.0 * np.sqrt(chroma_prod) * np.sin(np.radians(dh) / 2.0)

    Lbp = 0.5 * (L1 + L2)
    Cbp = 0.5 * (c1p + c2p)
    hsum = h1p + h2p
    hbar = np.where(
        np.abs(h1p - h2p) <= 180.0,
        0.5 * hsum,
        np.where(hsum < 360.0, 0.5 * (hsum + 360.0), 0.5 * (hsum - 360.0)),
    )
    hbar = np.where(chroma_prod == 0, hsum, hbar)

    t = (
        1.0
        - 0.17 * np.cos(np.radians(hbar - 30.0))
        + 0.24 * np.cos(np.radians(2.0 * hbar))
        + 0.32 * np.cos(np.radians(3.0 * hbar + 6.0))
        - 0.20 * np.cos(np.radians(4.0 * hbar - 63.0))
    )
    d_theta = 30.0 * np.exp(-(((hbar - 275.0) / 25.0) ** 2))
    cbp7 = Cbp**7
    rc = 2.0 * np.sqrt(cbp7 / (cbp7 + 25.0**7))
    lm = (Lbp - 50.0) ** 2
    sl = 1.0 + 0.015 * lm / np.sqrt(20.0 + lm)
    sc = 1.0 + 0.045 * Cbp
    sh = 1.0 + 0.015 * Cbp * t
    rt = -np.sin(np.radians(2.0 * d_theta)) * rc

    tl = dLp / sl
    tc = dCp / sc
    th = dHp / sh
    out = np.sqrt(tl**2 + tc**2 + th**2 + rt * tc * th)
    return out if out.ndim else float(out)


def cmf_on_grid(grid: SpectralGrid = DEFAULT_GRID) -> np.ndarray:
    """CIE 1931 2-degree colour matching functions (3 x n_bins) on ``grid``; zero outside the table."""
    wl = _tables.CMF_START_NM + _tables.CMF_STEP_NM * np.arange(_tables.CMF_XYZ.shape[1])
    return np.stack([np.interp(grid.wavelengths, wl, row, left=0.0, right=0.0) for row in _tables.CMF_XYZ])


def spectrum_to_xyz(s: Spectrum, reflectance=None) -> np.ndarray:
    """Tristimulus values of a spectrum (optionally reflected off ``reflectance``), Y of the
    illuminant scaled to 1."""
    cmf = cmf_on_grid(s.grid)
    light = s.values
    y_white = cmf[1] @ light
    if y_white <= 0:
        raise ValueError("spectrum has zero luminance")
    stim = light if reflectance is None else np.asarray(reflectance, dtype=float) * light
    return stim @ cmf.T / y_white
