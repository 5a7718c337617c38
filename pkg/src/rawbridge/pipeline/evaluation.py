"""CIEDE2000 evaluation of raw-to-raw transforms on paired checker captures."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from ..colorimetry import CameraProfile, ciede2000, interpolate_ccm, xyz_to_lab
from ..illumination import SPECTROMETER, estimate_illumination
from ..npm import (
    FORMAT_VERSION,
    NEUTRAL8,
    NpmParameters,
    RawToRawTransform,
    apply_transform,
    compute_transform_for_illumination,
    normalize_by_neutral8,
    solve_transform,
)


@dataclass
class SceneEvaluation:
    scene_id: str
    delta_e: np.ndarray  # per patch

    @property
    def mean(self) -> float:
        return float(np.mean(self.delta_e))


@dataclass
class EvaluationReport:
    scenes: list = field(default_factory=list)

    @property
    def per_scene(self) -> np.ndarray:
        return np.array([s.mean for s in self.scenes])

    @property
    def mean(self) -> float:
        return float(np.mean(self.per_scene))

    @property
    def median(self) -> float:
        return float(np.median(self.per_scene))

    @property
    def max(self) -> float:
        return float(np.max(self.per_scene))

    @property
    def per_patch(self) -> np.ndarray:
        return np.mean([s.delta_e for s in self.scenes], axis=0)

    def to_dict(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "mean": self.mean,
            "median": self.median,
            "max": self.max,
            "per_patch": self.per_patch.tolist(),
            "scenes": [
                {"scene_id": s.scene_id, "mean_delta_e": s.mean, "per_patch": s.delta_e.tolist()}
                for s in self.scenes
            ],
        }

    def summary(self, label: str = "NPM") -> str:
        rows = [("Method", "dE mean", "median", "max"), (label, f"{self.mean:.2f}", f"{self.median:.2f}", f"{self.max:.2f}")]
        widths = [max(len(r[i]) for r in rows) for i in range(4)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
        lines.insert(1, "-" * len(lines[0]))
        return "\n".join(lines) + f"\n({len(self.scenes)} scenes)"


def checker_delta_e(source, target, transform: RawToRawTransform, target_profile: CameraProfile) -> np.ndarray:
    """Per-patch dE00 between the transformed source checker and the target checker.

    Both checkers are Neutral-8 normalised and mapped to XYZ with the target
    camera's CCM interpolated at the measured target Neutral 8 patch; Lab uses
    that patch's XYZ as reference white.
    """
    s = normalize_by_neutral8(source)
    t = normalize_by_neutral8(target)
    ccm = interpolate_ccm(target_profile, t[NEUTRAL8])
    pred_xyz = apply_transform(s, transform) @ ccm.T
    tgt_xyz = t @ ccm.T
    white = tgt_xyz[NEUTRAL8]
    return ciede2000(xyz_to_lab(pred_xyz, white), xyz_to_lab(tgt_xyz, white))


def evaluate_transforms(
    pairs: Sequence,
    transform_for: Callable,
    target_profile: CameraProfile,
) -> EvaluationReport:
    """``transform_for(source_record)`` supplies the transform for each pair."""
    if not pairs:
        raise ValueError("no paired scenes to evaluate")
    report = EvaluationReport()
    for src, tgt in pairs:
        de = checker_delta_e(src.checker, tgt.checker, transform_for(src), target_profile)
        report.scenes.append(SceneEvaluation(src.scene_id, de))
    return report


def npm_transform(params: NpmParameters, record, illumination_kind: str = SPECTROMETER) -> RawToRawTransform:
    spd = estimate_illumination(record.measurement(illumination_kind), params.recovery, params.grid)
    return compute_transform_for_illumination(params, spd)


def evaluate(
    params: NpmParameters,
    pairs: Sequence,
    target_profile: CameraProfile,
    illumination_kind: str = SPECTROMETER,
) -> EvaluationReport:
    """Mean dE00 of the NPM's per-illumination transform on each test pair."""
    return evaluate_transforms(pairs, lambda rec: npm_transform(params, rec, illumination_kind), target_profile)


def baseline_global_transform(pairs: Sequence) -> RawToRawTransform:
    """Single 3x3 fitted by least squares to all normalised patches of all pairs."""
    if not pairs:
        raise ValueError("baseline needs at least one paired scene")
    src = np.concatenate([normalize_by_neutral8(s.checker) for s, _ in pairs])
    dst = np.concatenate([normalize_by_neutral8(t.checker) for _, t in pairs])
    return RawToRawTransform(solve_transform(src, dst))


def evaluate_baseline(train_pairs: Sequence, test_pairs: Sequence, target_profile: CameraProfile) -> EvaluationReport:
    f = baseline_global_transform(train_pairs)
    return evaluate_transforms(test_pairs, lambda rec: f, target_profile)
