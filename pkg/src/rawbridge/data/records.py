"""Scene records, datasets, on-disk layout and deterministic splitting."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from ..colorimetry import CameraProfile
from ..illumination import IlluminationMeasurement
from ..npm import FORMAT_VERSION, N_PATCHES, as_checker


class SchemaError(ValueError):
    """A dataset file does not follow the expected schema."""


@dataclass(eq=False)
class SceneRecord:
    """One checker capture by one camera.

    ``illumination`` maps measurement kind to measurement; a scene may carry
    several (e.g. a spectrometer reading and gray-world channel means).
    """

    scene_id: str
    camera_id: str
    checker: np.ndarray
    illumination: dict = field(default_factory=dict)
    exposure_tag: Optional[str] = None
    split: Optional[str] = None

    def __post_init__(self):
        self.checker = as_checker(self.checker, f"scene {self.scene_id}/{self.camera_id}")
        if isinstance(self.illumination, IlluminationMeasurement):
            self.illumination = {self.illumination.kind: self.illumination}

    def measurement(self, kind: str) -> IlluminationMeasurement:
        try:
            return self.illumination[kind]
        except KeyError:
            raise KeyError(
                f"scene {self.scene_id}/{self.camera_id} has no '{kind}' illumination "
                f"(available: {sorted(self.illumination)})"
            ) from None

    def __eq__(self, other):
        if not isinstance(other, SceneRecord):
            return NotImplemented
        return (
            self.scene_id == other.scene_id
            and self.camera_id == other.camera_id
            and np.array_equal(self.checker, other.checker)
            and self.illumination == other.illumination
            and self.exposure_tag == other.exposure_tag
            and self.split == other.split
        )

    def to_dict(self) -> dict:
        meas = [m.to_dict() for m in self.illumination.values()]
        d = {
            "scene_id": self.scene_id,
            "camera_id": self.camera_id,
            "checker": self.checker.tolist(),
            "illumination": meas[0] if len(meas) == 1 else meas,
        }
        if self.exposure_tag is not None:
            d["exposure_tag"] = self.exposure_tag
        if self.split is not None:
            d["split"] = self.split
        return d

    @classmethod
    def from_dict(cls, d: dict, where: str = "scene") -> "SceneRecord":
        if not isinstance(d, dict):
            raise SchemaError(f"{where}: expected a JSON object")
        for key in ("scene_id", "camera_id", "checker", "illumination"):
            if key not in d:
                raise SchemaError(f"{where}: missing field '{key}'")
        checker = d["checker"]
        if not isinstance(checker, list) or len(checker) != N_PATCHES or any(
            not isinstance(p, list) or len(p) != 3 for p in checker
        ):
            n = len(checker) if isinstance(checker, list) else "?"
            raise SchemaError(f"{where}: field 'checker' must hold {N_PATCHES} [r, g, b] patches, got {n}")
        raw_meas = d["illumination"]
        raw_meas = raw_meas if isinstance(raw_meas, list) else [raw_meas]
        try:
            meas = [IlluminationMeasurement.from_dict(m) for m in raw_meas]
            return cls(
                str(d["scene_id"]),
                str(d["camera_id"]),
                checker,
                {m.kind: m for m in meas},
                d.get("exposure_tag"),
                d.get("split"),
            )
        except (ValueError, TypeError) as exc:
            raise SchemaError(f"{where}: {exc}") from exc


@dataclass(eq=False)
class Dataset:
    scenes: list
    profiles: dict
    source_camera: Optional[str] = None
    target_camera: Optional[str] = None

    def __post_init__(self):
        seen = set()
        for rec in self.scenes:
            key = (rec.scene_id, rec.camera_id)
            if key in seen:
                raise SchemaError(f"duplicate record for scene '{rec.scene_id}', camera '{rec.camera_id}'")
            seen.add(key)
            if rec.camera_id not in self.profiles:
                raise SchemaError(f"scene '{rec.scene_id}' references unknown camera '{rec.camera_id}'")
        for cam in (self.source_camera, self.target_camera):
            if cam is not None and cam not in self.profiles:
                raise SchemaError(f"unknown camera '{cam}'")

    def __eq__(self, other):
        if not isinstance(other, Dataset):
            return NotImplemented
        key = lambda r: (r.scene_id, r.camera_id)  # noqa: E731
        return (
            sorted(self.scenes, key=key) == sorted(other.scenes, key=key)
            and self.profiles == other.profiles
            and self.source_camera == other.source_camera
            and self.target_camera == other.target_camera
        )

    def __len__(self):
        return len(self.scenes)

    @property
    def scene_ids(self) -> list:
        return sorted({r.scene_id for r in self.scenes})

    def records(self, camera_id: str) -> list:
        return sorted((r for r in self.scenes if r.camera_id == camera_id), key=lambda r: r.scene_id)

    def with_cameras(self, source: str, target: str) -> "Dataset":
        return Dataset(self.scenes, self.profiles, source, target)

    def _require_cameras(self):
        if self.source_camera is None or self.target_camera is None:
            raise ValueError("dataset has no source/target camera designation")

    @property
    def pairing(self) -> dict:
        """scene_id -> (source record, target record) for scenes seen by both cameras."""
        self._require_cameras()
        by_key = {(r.scene_id, r.camera_id): r for r in self.scenes}
        out = {}
        for sid in self.scene_ids:
            src = by_key.get((sid, self.source_camera))
            tgt = by_key.get((sid, self.target_camera))
            if src is not None and tgt is not None:
                out[sid] = (src, tgt)
        return out

    def pairs(self) -> list:
        return list(self.pairing.values())

    def subset(self, scene_ids) -> "Dataset":
        keep = set(scene_ids)
        return Dataset([r for r in self.scenes if r.scene_id in keep], self.profiles,
                       self.source_camera, self.target_camera)

    def split_by_tag(self) -> dict:
        """Group scenes by their ``split`` tag (records without one are skipped)."""
        tags = sorted({r.split for r in self.scenes if r.split is not None})
        return {t: self.subset({r.scene_id for r in self.scenes if r.split == t}) for t in tags}


def _scene_filename(rec: SceneRecord) -> str:
    safe = lambda s: re.sub(r"[^A-Za-z0-9._-]", "_", s)  # noqa: E731
    return f"{safe(rec.scene_id)}__{safe(rec.camera_id)}.json"


def write_dataset(dataset: Dataset, path) -> None:
    root = Path(path)
    (root / "profiles").mkdir(parents=True, exist_ok=True)
    (root / "scenes").mkdir(parents=True, exist_ok=True)
    for cam, prof in dataset.profiles.items():
        prof.save(root / "profiles" / f"{cam}.json")
    for rec in dataset.scenes:
        (root / "scenes" / _scene_filename(rec)).write_text(json.dumps(rec.to_dict()), encoding="utf-8")
    manifest = {"format_version": FORMAT_VERSION}
    if dataset.source_camera is not None:
        manifest["source_camera"] = dataset.source_camera
    if dataset.target_camera is not None:
        manifest["target_camera"] = dataset.target_camera
    (root / "dataset.json").write_text(json.dumps(manifest, indent=2), encoding="utf-8")


def load_dataset(path, source_camera: Optional[str] = None, target_camera: Optional[str] = None) -> Dataset:
    """Read ``profiles/*.json`` and ``scenes/*.json`` under ``path``.

    Source/target cameras come from the arguments, else from an optional
    ``dataset.json`` manifest.
    """
    root = Path(path)
    if not root.is_dir():
        raise FileNotFoundError(f"dataset directory not found: {root}")
    profiles = {}
    for f in sorted((root / "profiles").glob("*.json")):
        try:
            prof = CameraProfile.from_dict(json.loads(f.read_text(encoding="utf-8")))
        except (ValueError, TypeError, KeyError) as exc:
            raise SchemaError(f"{f}: {exc}") from exc
        if prof.camera_id in profiles:
            raise SchemaError(f"{f}: duplicate profile for camera '{prof.camera_id}'")
        profiles[prof.camera_id] = prof
    scenes = []
    for f in sorted((root / "scenes").glob("*.json")):
        try:
            raw = json.loads(f.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{f}: invalid JSON ({exc})") from exc
        scenes.append(SceneRecord.from_dict(raw, where=str(f)))
    manifest_path = root / "dataset.json"
    if manifest_path.exists():
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
        source_camera = source_camera or manifest.get("source_camera")
        target_camera = target_camera or manifest.get("target_camera")
    return Dataset(scenes, profiles, source_camera, target_camera)


def deterministic_split(dataset: Dataset, fractions=(0.7, 0.15, 0.15), seed: int = 0) -> dict:
    """Seeded split by scene_id into train/val/test; both records of a pair stay together."""
    fractions = tuple(float(f) for f in fractions)
    if len(fractions) != 3 or any(f < 0 for f in fractions) or abs(sum(fractions) - 1.0) > 1e-9:
        raise ValueError(f"fractions must be three nonnegative numbers summing to 1, got {fractions}")
    ids = dataset.scene_ids
    if not ids:
        raise ValueError("cannot split an empty dataset")
    order = np.random.default_rng(seed).permutation(len(ids))
    n_train = int(round(fractions[0] * len(ids)))
    n_val = min(int(round(fractions[1] * len(ids))), len(ids) - n_train)
    shuffled = [ids[i] for i in order]
    parts = {
        "train": shuffled[:n_train],
        "val": shuffled[n_train:n_train + n_val],
        "test": shuffled[n_train + n_val:],
    }
    return {name: dataset.subset(part) for name, part in parts.items()}


def select_split(dataset: Dataset, split: str, fractions=(0.7, 0.15, 0.15), seed: int = 0) -> Dataset:
    """Records tagged with ``split``; untagged datasets fall back to :func:`deterministic_split`.

    ``all`` returns the whole dataset.
    """
    if split == "all":
        return dataset
    if any(r.split is not None for r in dataset.scenes):
        return dataset.split_by_tag().get(split, dataset.subset([]))
    return deterministic_split(dataset, fractions, seed)[split]


__all__ = [
    "Dataset",
    "SceneRecord",
    "SchemaError",
    "deterministic_split",
    "load_dataset",
    "select_split",
    "write_dataset",
]
