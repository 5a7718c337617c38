"""Finite-difference check of the analytic training gradients."""

import numpy as np

import oracles
from rawbridge.data import SyntheticConfig, generate_synthetic
from rawbridge.illumination import RGB_IMAGE_STATS, SPECTROMETER
from rawbridge.pipeline import MODES, TrainConfig, build_examples, init_from_calibration, loss_gradients
from rawbridge.pipeline.training import dataset_loss

H = 1e-5


def component_errors(analytic: np.ndarray, numeric: np.ndarray) -> np.ndarray:
    """Relative error per entry; entries far below the tensor's scale are judged against that scale."""
    scale = max(np.max(np.abs(numeric)), 1e-12)
    return np.abs(analytic - numeric) / np.maximum(np.abs(numeric), 1e-3 * scale)


def worst_relative_error(seed: int, mode: str, kind: str, n_scenes: int = 2) -> dict:
    """Max relative error per tensor for a random parameter draw and a small random batch."""
    data, _ = generate_synthetic(SyntheticConfig(n_train=n_scenes, n_val=1, n_test=1, seed=100 + seed))
    config = TrainConfig(mode=mode, illumination_kind=kind, l1_weight=0.5 + seed / 10)
    n_rec = 3 if kind == RGB_IMAGE_STATS else None
    params = init_from_calibration(seed=seed, n_recovery_channels=n_rec)
    batch = build_examples(data.split_by_tag()["train"], config, params.grid)
    _, grads = loss_gradients(params, batch, config)
    out = {}
    for name, value in params.tensors().items():
        def loss_of(x, name=name):
            return dataset_loss(params.with_tensors(**{name: x}), batch, config)

        numeric = oracles.central_difference(loss_of, value.copy(), H)
        if not np.any(numeric) and not np.any(grads[name]):
            out[name] = 0.0
        else:
            out[name] = float(np.max(component_errors(grads[name], numeric)))
    return out


CASES = [(mode, kind) for mode in MODES for kind in (SPECTROMETER, RGB_IMAGE_STATS)]
