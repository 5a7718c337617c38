"""Synthetic benchmark: NPM variants against the single global 3x3 baseline.

Every variant trains on the same generated dataset so their test dE can be
compared directly. The NPM starts from the embedded Macbeth reflectances
(the usual calibration data) and random sensitivities unless told otherwise.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from typing import Optional

from .data import SyntheticConfig, generate_synthetic
from .illumination import MULTISPECTRAL, SPECTROMETER
from .npm import NpmParameters, macbeth_reflectances
from .pipeline import (
    PAIRED,
    EvaluationReport,
    TrainConfig,
    evaluate,
    evaluate_baseline,
    init_from_calibration,
    train,
    train_unpaired,
)
from .spectral import DEFAULT_GRID, SpectralGrid

UNPAIRED = "unpaired"


@dataclass
class BenchmarkRun:
    label: str
    report: EvaluationReport
    runtime_s: float
    results: tuple = ()  # TrainResult per training stage

    @property
    def delta_e(self) -> float:
        return self.report.mean


def synthetic_splits(seed: int, **overrides):
    """Generate the benchmark dataset; returns ({train, val, test}, ground truth)."""
    dataset, truth = generate_synthetic(replace(SyntheticConfig(seed=seed), **overrides))
    return dataset.split_by_tag(), truth


def calibration_init(grid: SpectralGrid, kind: str, seed: int, truth: Optional[NpmParameters] = None) -> NpmParameters:
    """Macbeth reflectances plus random sensitivities, or the ground truth when given.

    A recovery matrix is only created for the white-point style inputs.
    """
    n_rec = {SPECTROMETER: None, MULTISPECTRAL: 16}.get(kind, 3)
    if truth is not None:
        return init_from_calibration(
            grid, truth.reflectances, (truth.s_source, truth.s_target), seed=seed, n_recovery_channels=n_rec
        )
    return init_from_calibration(grid, macbeth_reflectances(grid), seed=seed, n_recovery_channels=n_rec)


def run_npm(splits, kind: str = SPECTROMETER, mode: str = PAIRED, seed: int = 0,
            init: Optional[NpmParameters] = None, **config) -> BenchmarkRun:
    """Train one NPM variant and evaluate it on the test pairs.

    ``mode`` is ``paired`` or ``unpaired`` (source stage then target stage).
    Extra keyword arguments go to :class:`TrainConfig`.
    """
    train_data, val_data, test_data = splits["train"], splits["val"], splits["test"]
    if init is None:
        init = calibration_init(DEFAULT_GRID, kind, seed)
    cfg = TrainConfig(illumination_kind=kind, seed=seed, **config)
    start = time.perf_counter()
    if mode == PAIRED:
        results: tuple = (train(train_data, cfg, init, val_data),)
    elif mode == UNPAIRED:
        results = train_unpaired(train_data, cfg, init, val_data)
    else:
        raise ValueError(f"benchmark mode must be {PAIRED!r} or {UNPAIRED!r}, got {mode!r}")
    params = results[-1].params
    report = evaluate(params, test_data.pairs(), test_data.profiles[test_data.target_camera], kind)
    return BenchmarkRun(f"NPM {kind} {mode}", report, time.perf_counter() - start, results)


def run_baseline(splits) -> BenchmarkRun:
    start = time.perf_counter()
    test = splits["test"]
    report = evaluate_baseline(splits["train"].pairs(), test.pairs(), test.profiles[test.target_camera])
    return BenchmarkRun("global 3x3", report, time.perf_counter() - start)
