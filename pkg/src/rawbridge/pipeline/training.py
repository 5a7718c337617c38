"""Losses over training scenes, their exact gradients, and the training loop."""

from __future__ import annotations

import csv
import json
import logging
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from ..colorimetry import interpolate_ccm
from ..illumination import (
    SPD_FLOOR,
    SPECTROMETER,
    IlluminationMeasurement,
    measurement_white_point,
    spd_from_spectrometer,
)
from ..npm import (
    GREEN,
    NEUTRAL8,
    SOURCE,
    TARGET,
    NpmParameters,
    RankDeficientError,
    normalize_by_neutral8,
    render_checker,
    solve_transform,
)
from ..spectral import DEFAULT_GRID, SpectralGrid, gaussian_bump
from .losses import patch_loss
from .optim import OptimizerState, adam_step, plateau_scheduler_step

log = logging.getLogger(__name__)

PAIRED = "paired"
UNPAIRED_SOURCE = "unpaired_source"
UNPAIRED_TARGET = "unpaired_target"
MODES = (PAIRED, UNPAIRED_SOURCE, UNPAIRED_TARGET)
TENSORS = ("s_source", "s_target", "reflectances", "recovery")


@dataclass
class TrainConfig:
    mode: str = PAIRED
    learning_rate: float = 0.01
    batch_size: int = 4
    max_epochs: int = 100
    l1_weight: float = 1.0
    plateau_factor: float = 0.5
    plateau_patience: int = 10
    min_lr: float = 1e-4
    seed: int = 0
    illumination_kind: str = SPECTROMETER
    sim_weight: float = 1.0
    match_weight: float = 1.0
    trainable: tuple = TENSORS

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not self.learning_rate > 0:
            raise ValueError("learning_rate must be positive")
        if self.batch_size < 1:
            raise ValueError("batch_size must be >= 1")
        if self.l1_weight < 0:
            raise ValueError("l1_weight must be >= 0")
        if self.max_epochs < 0:
            raise ValueError("max_epochs must be >= 0")
        self.trainable = tuple(self.trainable)
        unknown = set(self.trainable) - set(TENSORS)
        if unknown:
            raise ValueError(f"unknown trainable tensors {sorted(unknown)}")

    @classmethod
    def from_dict(cls, d: dict) -> "TrainConfig":
        known = {f.name for f in fields(cls)}
        extra = set(d) - known
        if extra:
            raise ValueError(f"unknown config fields {sorted(extra)}")
        return cls(**d)

    @classmethod
    def from_file(cls, path, **overrides) -> "TrainConfig":
        """Load a JSON or TOML config; non-None ``overrides`` win over file values."""
        path = Path(path)
        text = path.read_text(encoding="utf-8")
        if path.suffix.lower() == ".toml":
            try:
                import tomllib
            except ImportError:  # Python < 3.11
                import tomli as tomllib

            d = tomllib.loads(text)
        else:
            d = json.loads(text)
        d.update({k: v for k, v in overrides.items() if v is not None})
        return cls.from_dict(d)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["trainable"] = list(self.trainable)
        return d


def init_from_calibration(
    grid: SpectralGrid = DEFAULT_GRID,
    reflectances=None,
    sensitivities=None,
    recovery=None,
    seed: int = 0,
    n_recovery_channels: Optional[int] = 3,
) -> NpmParameters:
    """Build starting parameters, copying whatever calibration data is given.

    Missing sensitivities become three Gaussian bumps (460/540/610 nm, sigma 35 nm)
    plus U(0, 0.05) noise; missing reflectances are U(0.05, 0.95); a missing
    recovery matrix is U(0, 1/N) with ``n_recovery_channels`` columns, or
    omitted when that is None (spectrometer-only models).
    """
    rng = np.random.default_rng(seed)
    n = grid.n_bins

    def bumps():
        base = np.stack([gaussian_bump(grid, c, 35.0) for c in (460.0, 540.0, 610.0)])
        return base + rng.uniform(0.0, 0.05, base.shape)

    if sensitivities is None:
        s_source, s_target = bumps(), bumps()
    else:
        s_source, s_target = (np.array(s, dtype=float) for s in sensitivities)
    if reflectances is None:
        reflectances = rng.uniform(0.05, 0.95, (24, n))
    if recovery is None and n_recovery_channels:
        recovery = rng.uniform(0.0, 1.0 / n, (n, n_recovery_channels))
    return NpmParameters(grid, s_source, s_target, np.array(reflectances, dtype=float),
                         None if recovery is None else np.array(recovery, dtype=float))


@dataclass
class TrainExample:
    """One training scene, pre-processed: measured checkers are Neutral-8 normalised."""

    scene_id: str
    illumination: IlluminationMeasurement
    source: Optional[np.ndarray] = None
    target: Optional[np.ndarray] = None
    ccm: Optional[np.ndarray] = None
    spd: Optional[np.ndarray] = None  # fixed SPD for spectrometer readings
    white_point: Optional[np.ndarray] = None


def _prepare(scene_id, meas, grid, **kw) -> TrainExample:
    ex = TrainExample(scene_id, meas, **kw)
    if meas.kind == SPECTROMETER:
        ex.spd = spd_from_spectrometer(meas.to_spectrum(), grid).values
    else:
        ex.white_point = measurement_white_point(meas)
    return ex


def build_examples(dataset, config: TrainConfig, grid: SpectralGrid = DEFAULT_GRID) -> list:
    """Turn dataset records into training examples for ``config.mode``.

    Paired examples take the illumination from the source record and the
    matching-loss CCM from the target profile, interpolated at the measured
    target Neutral 8 patch.
    """
    kind = config.illumination_kind
    out = []
    if config.mode == PAIRED:
        target_profile = dataset.profiles[dataset.target_camera]
        for sid, (src, tgt) in dataset.pairing.items():
            t_norm = normalize_by_neutral8(tgt.checker)
            out.append(_prepare(
                sid, src.measurement(kind), grid,
                source=normalize_by_neutral8(src.checker),
                target=t_norm,
                ccm=interpolate_ccm(target_profile, t_norm[NEUTRAL8]),
            ))
    else:
        cam = dataset.source_camera if config.mode == UNPAIRED_SOURCE else dataset.target_camera
        if cam is None:
            raise ValueError("dataset has no source/target camera designation")
        for rec in dataset.records(cam):
            norm = normalize_by_neutral8(rec.checker)
            slot = "source" if config.mode == UNPAIRED_SOURCE else "target"
            out.append(_prepare(rec.scene_id, rec.measurement(kind), grid, **{slot: norm}))
    return out


def _normalize_backward(p, g_n):
    ref = p[NEUTRAL8, GREEN]
    g_p = g_n / ref
    g_p[NEUTRAL8, GREEN] -= np.sum(g_n * p) / ref**2
    return g_p


def example_loss(params: NpmParameters, ex: TrainExample, config: TrainConfig, need_grad: bool = True):
    """Total loss of one example and (optionally) its gradient w.r.t. every tensor."""
    w = config.l1_weight
    refl = params.reflectances
    if ex.spd is not None:
        spd, spd_mask = ex.spd, None
    else:
        if params.recovery is None:
            raise ValueError(f"{ex.illumination.kind} illumination needs a recovery matrix")
        if params.recovery.shape[1] != ex.white_point.size:
            raise ValueError(
                f"recovery matrix has {params.recovery.shape[1]} columns, "
                f"white point has {ex.white_point.size} channels"
            )
        pre = params.recovery @ ex.white_point
        spd = np.maximum(pre, SPD_FLOOR)
        spd_mask = pre > SPD_FLOOR

    sims = {}
    norms = {}
    for cam, meas in ((SOURCE, ex.source), (TARGET, ex.target)):
        if meas is not None:
            p = render_checker(params.sensitivity(cam), refl, spd)
            ref = p[NEUTRAL8, GREEN]
            if not ref > 0:
                raise RankDeficientError(f"scene {ex.scene_id}: simulated Neutral 8 is black")
            sims[cam] = p
            norms[cam] = p / ref

    loss = 0.0
    g_norm = {}
    for cam, meas in ((SOURCE, ex.source), (TARGET, ex.target)):
        if meas is None:
            continue
        res = patch_loss(norms[cam], meas, w, need_grad)
        if need_grad:
            val, g = res
            g_norm[cam] = config.sim_weight * g
        else:
            val = res
        loss += config.sim_weight * val

    paired = ex.source is not None and ex.target is not None and ex.ccm is not None
    if paired:
        n_s, n_t = norms[SOURCE], norms[TARGET]
        f = solve_transform(n_s, n_t)
        c = ex.ccm
        pred = ex.source @ (c @ f).T
        ref_xyz = ex.target @ c.T
        res = patch_loss(pred, ref_xyz, w, need_grad)
        if need_grad:
            val, g_pred = res
            g_pred = config.match_weight * g_pred
            g_f = c.T @ g_pred.T @ ex.source
            gram_inv = np.linalg.inv(n_s.T @ n_s)
            g_cross = g_f @ gram_inv
            g_gram = -f.T @ g_f @ gram_inv
            g_norm[SOURCE] = g_norm[SOURCE] + n_s @ (g_gram + g_gram.T) + n_t @ g_cross
            g_norm[TARGET] = g_norm[TARGET] + n_s @ g_cross.T
        else:
            val = res
        loss += config.match_weight * val

    if not need_grad:
        return loss

    grads = {k: np.zeros_like(v) for k, v in params.tensors().items()}
    g_spd = np.zeros_like(spd)
    for cam, g_n in g_norm.items():
        g_p = _normalize_backward(sims[cam], g_n)
        sens = params.sensitivity(cam)
        grads["s_source" if cam == SOURCE else "s_target"] += g_p.T @ (refl * spd)
        g_ps = g_p @ sens
        grads["reflectances"] += g_ps * spd
        g_spd += np.sum(g_ps * refl, axis=0)
    if spd_mask is not None:
        grads["recovery"] += np.outer(g_spd * spd_mask, ex.white_point)
    return loss, grads


def loss_gradients(params: NpmParameters, batch: Sequence[TrainExample], config: TrainConfig):
    """Batch-mean loss and its gradient for every parameter tensor."""
    if not batch:
        raise ValueError("empty batch")
    total = 0.0
    grads = {k: np.zeros_like(v) for k, v in params.tensors().items()}
    for ex in batch:
        loss, g = example_loss(params, ex, config)
        total += loss
        for k in grads:
            grads[k] += g[k]
    n = len(batch)
    return total / n, {k: v / n for k, v in grads.items()}


def dataset_loss(params: NpmParameters, examples: Sequence[TrainExample], config: TrainConfig) -> float:
    if not examples:
        return float("nan")
    return float(np.mean([example_loss(params, ex, config, need_grad=False) for ex in examples]))


@dataclass
class TrainResult:
    params: NpmParameters
    final_params: NpmParameters
    history: list = field(default_factory=list)  # (epoch, train_loss, val_loss, lr)
    initial_train_loss: float = float("nan")
    initial_val_loss: float = float("nan")
    best_epoch: int = 0

    def write_history_csv(self, path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as f:
            w = csv.writer(f)
            w.writerow(["epoch", "train_loss", "val_loss", "lr"])
            for row in self.history:
                w.writerow([row[0]] + [repr(float(v)) for v in row[1:]])


def train(
    train_data,
    config: TrainConfig,
    init: NpmParameters,
    val_data=None,
) -> TrainResult:
    """Adam + projection + reduce-on-plateau over shuffled mini-batches.

    ``train_data``/``val_data`` are :class:`~rawbridge.data.Dataset` objects
    (camera profiles travel with them). The returned ``params`` are those with
    the lowest validation loss (training loss when no validation data is given).
    """
    grid = init.grid
    examples = build_examples(train_data, config, grid)
    if not examples:
        if config.mode == PAIRED:
            raise ValueError("no paired scenes in training data")
        raise ValueError("no training scenes for the selected camera")
    val_examples = build_examples(val_data, config, grid) if val_data is not None else []
    trainable = [t for t in config.trainable if t in init.tensors()]
    if config.mode == UNPAIRED_SOURCE:
        trainable = [t for t in trainable if t != "s_target"]
    elif config.mode == UNPAIRED_TARGET:
        trainable = [t for t in trainable if t != "s_source"]

    rng = np.random.default_rng(config.seed)
    params = init.copy()
    state = OptimizerState.for_params(params, config.learning_rate)

    def select_loss(p, train_loss=None):
        if val_examples:
            return dataset_loss(p, val_examples, config)
        return dataset_loss(p, examples, config) if train_loss is None else train_loss

    result = TrainResult(params=params.copy(), final_params=params)
    result.initial_train_loss = dataset_loss(params, examples, config)
    result.initial_val_loss = select_loss(params, result.initial_train_loss)
    best = result.initial_val_loss
    state.best_loss = best

    for epoch in range(1, config.max_epochs + 1):
        lr = state.lr
        order = rng.permutation(len(examples))
        losses = []
        for start in range(0, len(order), config.batch_size):
            batch = [examples[i] for i in order[start:start + config.batch_size]]
            try:
                loss, grads = loss_gradients(params, batch, config)
            except (RankDeficientError, np.linalg.LinAlgError) as exc:
                log.warning("epoch %d: skipping batch (%s)", epoch, exc)
                continue
            losses.append(loss)
            params, state = adam_step(state, params, grads, trainable)
        train_loss = float(np.mean(losses)) if losses else float("nan")
        val_loss = select_loss(params)
        result.history.append((epoch, train_loss, val_loss, lr))
        if np.isfinite(val_loss):
            plateau_scheduler_step(state, val_loss, config.plateau_factor, config.plateau_patience, config.min_lr)
            if val_loss < best:
                best = val_loss
                result.params = params.copy()
                result.best_epoch = epoch
        log.info("epoch %d train %.6f val %.6f lr %.5f", epoch, train_loss, val_loss, lr)
    result.final_params = params
    return result


def train_unpaired(train_data, config: TrainConfig, init: NpmParameters, val_data=None):
    """Fit each camera from its own captures: source first, then target.

    Reflectances are shared between the cameras, so the second stage keeps
    them fixed at the values fitted for the source camera; otherwise the
    target fit would silently detune the source simulation.
    Returns the (source stage, target stage) results.
    """
    first = train(train_data, replace(config, mode=UNPAIRED_SOURCE), init, val_data)
    second_trainable = tuple(t for t in config.trainable if t != "reflectances")
    second = train(
        train_data,
        replace(config, mode=UNPAIRED_TARGET, trainable=second_trainable),
        first.params,
        val_data,
    )
    return first, second
