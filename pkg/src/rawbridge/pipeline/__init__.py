from .evaluation import (
    EvaluationReport,
    SceneEvaluation,
    baseline_global_transform,
    checker_delta_e,
    evaluate,
    evaluate_baseline,
    evaluate_transforms,
    npm_transform,
)
from .losses import matching_loss, patch_loss, simulation_loss
from .optim import OptimizerState, adam_step, plateau_scheduler_step, project
from .training import (
    MODES,
    PAIRED,
    UNPAIRED_SOURCE,
    UNPAIRED_TARGET,
    TrainConfig,
    TrainExample,
    TrainResult,
    build_examples,
    dataset_loss,
    example_loss,
    init_from_calibration,
    loss_gradients,
    train,
    train_unpaired,
)

__all__ = [
    "EvaluationReport",
    "MODES",
    "OptimizerState",
    "PAIRED",
    "SceneEvaluation",
    "TrainConfig",
    "TrainExample",
    "TrainResult",
    "UNPAIRED_SOURCE",
    "UNPAIRED_TARGET",
    "adam_step",
    "baseline_global_transform",
    "build_examples",
    "checker_delta_e",
    "dataset_loss",
    "evaluate",
    "evaluate_baseline",
    "evaluate_transforms",
    "example_loss",
    "init_from_calibration",
    "loss_gradients",
    "matching_loss",
    "npm_transform",
    "patch_loss",
    "plateau_scheduler_step",
    "project",
    "simulation_loss",
    "train",
    "train_unpaired",
]
