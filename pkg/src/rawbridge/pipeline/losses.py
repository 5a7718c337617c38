"""Simulation and matching losses (angular + weighted L1) with their gradients."""

from __future__ import annotations

import logging

import numpy as np

log = logging.getLogger(__name__)

# Below this size a residual or angle is treated as sitting exactly on the kink
# of |.| / angle(.), so the subgradient 0 is used instead of a unit vector.
KINK_TOL = 1e-12


def _cross_norm(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    cx = a[:, 1] * b[:, 2] - a[:, 2] * b[:, 1]
    cy = a[:, 2] * b[:, 0] - a[:, 0] * b[:, 2]
    cz = a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]
    return np.sqrt(cx * cx + cy * cy + cz * cz)


def patch_loss(pred: np.ndarray, meas: np.ndarray, w: float, need_grad: bool = False):
    """Mean angle (radians) between patch vectors plus ``w`` times mean per-patch L1.

    Returns the loss, and with ``need_grad`` also d(loss)/d(pred). Patches where
    either vector is zero are left out of the angular mean.
    """
    pred = np.asarray(pred, dtype=float)
    meas = np.asarray(meas, dtype=float)
    k = pred.shape[0]
    n_pred = np.sqrt((pred * pred).sum(axis=1))
    n_meas = np.sqrt((meas * meas).sum(axis=1))
    ok = (n_pred > 0) & (n_meas > 0)
    n_ok = int(ok.sum())
    if n_ok < k:
        log.warning("skipping %d zero-vector patch(es) in angular loss", k - n_ok)
        p_ok, m_ok, np_ok, nm_ok = pred[ok], meas[ok], n_pred[ok], n_meas[ok]
    else:
        p_ok, m_ok, np_ok, nm_ok = pred, meas, n_pred, n_meas

    dot = (p_ok * m_ok).sum(axis=1)
    angles = np.arctan2(_cross_norm(p_ok, m_ok), dot)
    ang_term = angles.sum() / n_ok if n_ok else 0.0

    diff = pred - meas
    l1_term = np.abs(diff).sum() / k
    loss = float(ang_term + w * l1_term)
    if not need_grad:
        return loss

    grad = np.zeros_like(pred)
    if n_ok:
        p_hat = p_ok / np_ok[:, None]
        m_hat = m_ok / nm_ok[:, None]
        perp = m_hat - (p_hat * m_hat).sum(axis=1)[:, None] * p_hat
        perp_norm = np.sqrt((perp * perp).sum(axis=1))
        on_kink = perp_norm < KINK_TOL
        scale = np.where(on_kink, 0.0, 1.0 / np.where(on_kink, 1.0, perp_norm * np_ok))
        g_ang = -perp * (scale / n_ok)[:, None]
        if n_ok < k:
            grad[ok] = g_ang
        else:
            grad = g_ang
    sign = np.sign(diff)
    sign[np.abs(diff) <= KINK_TOL] = 0.0
    grad += (w / k) * sign
    return loss, grad


def simulation_loss(simulated, measured, w: float = 1.0) -> float:
    """Angular plus weighted L1 discrepancy between simulated and measured patches."""
    return patch_loss(simulated, measured, w)


def matching_loss(source_meas, target_meas, f, ccm, w: float = 1.0) -> float:
    """Discrepancy in XYZ between transformed source patches and target patches."""
    f = getattr(f, "matrix", f)
    ccm = np.asarray(ccm, dtype=float)
    pred = np.asarray(source_meas, dtype=float) @ (ccm @ f).T
    ref = np.asarray(target_meas, dtype=float) @ ccm.T
    return patch_loss(pred, ref, w)
