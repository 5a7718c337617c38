"""Adam with a projection step, and a reduce-on-plateau learning-rate rule."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from ..npm import NpmParameters

BETA1 = 0.9
BETA2 = 0.999
EPS = 1e-8
PLATEAU_THRESHOLD = 1e-6


@dataclass
class OptimizerState:
    lr: float
    step: int = 0
    m: dict = field(default_factory=dict)
    v: dict = field(default_factory=dict)
    best_loss: float = float("inf")
    bad_epochs: int = 0

    @classmethod
    def for_params(cls, params: NpmParameters, lr: float) -> "OptimizerState":
        tensors = params.tensors()
        return cls(
            lr=lr,
            m={k: np.zeros_like(t) for k, t in tensors.items()},
            v={k: np.zeros_like(t) for k, t in tensors.items()},
        )


def _project_tensor(name: str, value: np.ndarray) -> np.ndarray:
    if name in ("s_source", "s_target"):
        return np.maximum(value, 0.0)
    if name == "reflectances":
        return np.clip(value, 0.0, 1.0)
    return value


def project(params: NpmParameters) -> NpmParameters:
    """Clamp sensitivities to >= 0 and reflectances to [0, 1]."""
    return params.with_tensors(**{k: _project_tensor(k, v) for k, v in params.tensors().items()})


def adam_step(
    state: OptimizerState,
    params: NpmParameters,
    grads: dict,
    trainable: Optional[Iterable[str]] = None,
) -> tuple[NpmParameters, OptimizerState]:
    """One bias-corrected Adam update followed by projection.

    Tensors not listed in ``trainable`` (default: all) are left untouched.
    """
    names = set(params.tensors()) if trainable is None else set(trainable) & set(params.tensors())
    for name in names:
        g = grads.get(name)
        if g is not None and not np.all(np.isfinite(g)):
            raise FloatingPointError(f"non-finite gradient for {name}")
    state.step += 1
    t = state.step
    updated = {}
    for name in sorted(names):
        g = grads.get(name)
        if g is None:
            continue
        value = getattr(params, name)
        if g.shape != value.shape:
            raise ValueError(f"gradient for {name} has shape {g.shape}, expected {value.shape}")
        m = BETA1 * state.m[name] + (1.0 - BETA1) * g
        v = BETA2 * state.v[name] + (1.0 - BETA2) * g * g
        state.m[name], state.v[name] = m, v
        m_hat = m / (1.0 - BETA1**t)
        v_hat = v / (1.0 - BETA2**t)
        updated[name] = _project_tensor(name, value - state.lr * m_hat / (np.sqrt(v_hat) + EPS))
    return params.with_tensors(**updated), state


def plateau_scheduler_step(
    state: OptimizerState,
    validation_loss: float,
    factor: float = 0.5,
    patience: int = 10,
    min_lr: float = 1e-4,
) -> OptimizerState:
    if not np.isfinite(validation_loss):
        raise ValueError(f"validation loss is not finite: {validation_loss}")
    if validation_loss < state.best_loss - PLATEAU_THRESHOLD:
        state.best_loss = validation_loss
        state.bad_epochs = 0
        return state
    state.bad_epochs += 1
    if state.bad_epochs >= patience:
        state.lr = max(state.lr * factor, min_lr)
        state.bad_epochs = 0
    return state
