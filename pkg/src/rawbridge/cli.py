"""Command-line interface: ``rawbridge <command> ...``.

Each command only wires files to library calls. Exit codes: 0 on success,
1 for bad input or data, 2 for unexpected internal errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .colorimetry import CameraProfile, interpolate_ccm, raw_to_xyz, xyz_to_xy
from .data import (
    SyntheticConfig,
    generate_synthetic,
    load_dataset,
    read_pfm,
    select_split,
    write_dataset,
    write_pfm,
)
from .illumination import KINDS, SPECTROMETER, IlluminationMeasurement, estimate_illumination
from .npm import (
    FORMAT_VERSION,
    NEUTRAL8,
    SOURCE,
    TARGET,
    NpmParameters,
    apply_transform,
    compute_transform_for_illumination,
    macbeth_reflectances,
    normalize_by_neutral8,
    simulate_checker,
)
from .pipeline import (
    MODES,
    PAIRED,
    TrainConfig,
    evaluate,
    evaluate_baseline,
    init_from_calibration,
    train,
    train_unpaired,
)
from .spectral import DEFAULT_GRID, SpectralGrid

log = logging.getLogger("rawbridge")

UNPAIRED_TWO_STAGE = "unpaired"


class UserError(Exception):
    """Bad arguments or input files; reported without a traceback, exit 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _pairs(dataset) -> list:
    if dataset.source_camera is None or dataset.target_camera is None:
        return []
    return dataset.pairs()


def parse_grid(text: str) -> SpectralGrid:
    try:
        start, step, n = text.split(",")
        return SpectralGrid(float(start), float(step), int(n))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"--grid expects start,step,n (e.g. 380,10,36): {exc}") from None


def _read_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise UserError(f"file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise UserError(f"{path}: invalid JSON ({exc})") from None


def _write_json(path, obj) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text(json.dumps(obj, indent=2), encoding="utf-8")


def _load_params(path) -> NpmParameters:
    return NpmParameters.from_dict(_read_json(path))


def _load_measurement(path) -> IlluminationMeasurement:
    return IlluminationMeasurement.from_dict(_read_json(path))


def _check_grid(args, grid: SpectralGrid) -> None:
    if args.grid is not None and args.grid != grid:
        raise UserError(f"parameters use grid {grid.to_dict()}, --grid asked for {args.grid.to_dict()}")


def cmd_gen_synthetic(args) -> None:
    config = SyntheticConfig(
        n_train=args.n_train,
        n_val=args.n_val,
        n_test=args.n_test,
        noise_sigma=args.noise_sigma,
        sensitivity_divergence=args.divergence,
        seed=args.seed,
        grid=args.grid or DEFAULT_GRID,
    )
    dataset, truth = generate_synthetic(config)
    out = Path(args.out)
    write_dataset(dataset, out)
    truth.save(out / "ground_truth.json")
    print(f"wrote {len(dataset.scene_ids)} scenes ({len(dataset)} records) to {out}")


def _initial_params(args, dataset, config: TrainConfig) -> NpmParameters:
    """Macbeth reflectances plus random sensitivities, overridden by ``--init`` files.

    An ``--init`` file is either a full parameter file, or a camera profile whose
    measured sensitivity replaces the matching camera's initial guess.
    """
    grid = args.grid or DEFAULT_GRID
    base = None
    sens = {}
    for path in args.init or ():
        d = _read_json(path)
        if "s_source" in d:
            base = NpmParameters.from_dict(d)
            continue
        prof = CameraProfile.from_dict(d)
        if prof.measured_sensitivity is None:
            raise UserError(f"{path}: profile has no sensitivity to initialise from")
        if prof.camera_id == dataset.source_camera:
            sens[SOURCE] = prof.measured_sensitivity
        elif prof.camera_id == dataset.target_camera:
            sens[TARGET] = prof.measured_sensitivity
        else:
            raise UserError(f"{path}: camera '{prof.camera_id}' is neither source nor target")
    if base is not None:
        _check_grid(args, base.grid)
        grid = base.grid

    n_rec = None
    if config.illumination_kind != SPECTROMETER:
        first = dataset.scenes[0] if dataset.scenes else None
        n_rec = first.measurement(config.illumination_kind).n_channels if first else 3
    params = init_from_calibration(grid, macbeth_reflectances(grid), seed=args.seed, n_recovery_channels=n_rec)
    if base is not None:
        params = base if base.recovery is not None or n_rec is None else base.with_tensors(recovery=params.recovery)
    if sens:
        params = params.with_tensors(**{f"s_{cam}": s for cam, s in sens.items()})
    return params


def cmd_train(args) -> None:
    mode = args.mode
    overrides = {
        "mode": None if mode == UNPAIRED_TWO_STAGE else mode,
        "seed": args.seed,
        "max_epochs": args.epochs,
        "learning_rate": args.learning_rate,
        "illumination_kind": args.illumination_kind,
    }
    if args.config:
        if not Path(args.config).exists():
            raise UserError(f"config not found: {args.config}")
        config = TrainConfig.from_file(args.config, **overrides)
    else:
        config = TrainConfig.from_dict({k: v for k, v in overrides.items() if v is not None})
    if mode is None:
        mode = config.mode

    dataset = load_dataset(args.data)
    train_data = select_split(dataset, args.train_split, seed=args.seed)
    val_data = select_split(dataset, args.val_split, seed=args.seed) if args.val_split else None
    if val_data is not None and not val_data.scenes:
        val_data = None
    if mode == PAIRED and not _pairs(train_data):
        raise UserError("no paired scenes in the training split")
    init = _initial_params(args, dataset, config)

    if mode == UNPAIRED_TWO_STAGE:
        stages = train_unpaired(train_data, config, init, val_data)
    else:
        stages = (train(train_data, config, init, val_data),)

    out = Path(args.out)
    stages[-1].params.save(out)
    history = Path(args.history) if args.history else out.with_name(out.stem + "_history.csv")
    with open(history, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f)
        w.writerow(["epoch", "train_loss", "val_loss", "lr"])
        offset = 0
        for stage in stages:
            for epoch, tr, va, lr in stage.history:
                w.writerow([epoch + offset, repr(float(tr)), repr(float(va)), repr(float(lr))])
            offset += len(stage.history)
    print(f"wrote {out} and {history}")


def cmd_evaluate(args) -> None:
    dataset = load_dataset(args.data)
    params = _load_params(args.params)
    test = select_split(dataset, args.split, seed=args.seed)
    if not test.scenes:
        raise UserError(f"split '{args.split}' has no scenes")
    if not _pairs(test):
        raise UserError(f"split '{args.split}' has no paired scenes")
    if args.target_profile:
        profile = CameraProfile.from_dict(_read_json(args.target_profile))
    else:
        profile = dataset.profiles[dataset.target_camera]
    report = evaluate(params, test.pairs(), profile, args.illumination_kind)
    print(report.summary("NPM"))
    out = report.to_dict()
    if args.baseline:
        train_data = select_split(dataset, "train", seed=args.seed)
        base = evaluate_baseline(train_data.pairs(), test.pairs(), profile)
        print(base.summary("Global 3x3"))
        out["baseline"] = base.to_dict()
    if args.report:
        _write_json(args.report, out)


def cmd_transform(args) -> None:
    params = _load_params(args.params)
    _check_grid(args, params.grid)
    image = read_pfm(args.image)
    spd = estimate_illumination(_load_measurement(args.illumination), params.recovery, params.grid)
    f = compute_transform_for_illumination(params, spd)
    write_pfm(apply_transform(image, f).astype(np.float32), args.out)


def cmd_simulate(args) -> None:
    params = _load_params(args.params)
    _check_grid(args, params.grid)
    spd = estimate_illumination(_load_measurement(args.illumination), params.recovery, params.grid)
    checker = simulate_checker(params, args.camera, spd)
    _write_json(args.out, {"format_version": FORMAT_VERSION, "camera": args.camera, "checker": checker.tolist()})


def scene_chromaticities(dataset) -> list:
    """(scene_id, x, y) of each scene's illuminant, sorted by scene_id.

    The white point is the measured Neutral 8 patch of the target camera's
    capture (or the only capture when the target did not see the scene), mapped
    to XYZ with that camera's interpolated CCM.
    """
    rows = []
    for sid in dataset.scene_ids:
        recs = {r.camera_id: r for r in dataset.scenes if r.scene_id == sid}
        rec = recs.get(dataset.target_camera) or recs[sorted(recs)[0]]
        white = normalize_by_neutral8(rec.checker)[NEUTRAL8]
        ccm = interpolate_ccm(dataset.profiles[rec.camera_id], white)
        x, y = xyz_to_xy(raw_to_xyz(white, ccm))
        rows.append((sid, float(x), float(y)))
    return rows


def cmd_plot_chromaticity(args) -> None:
    dataset = select_split(load_dataset(args.data), args.split, seed=args.seed)
    rows = scene_chromaticities(dataset)
    with open(args.out, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f)
        w.writerow(["scene_id", "x", "y"])
        for sid, x, y in rows:
            w.writerow([sid, repr(x), repr(y)])
    print(f"wrote {len(rows)} points to {args.out}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rawbridge", description="Illumination-adaptive raw-to-raw color mapping.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    p.add_argument("--grid", type=parse_grid, default=None, help="spectral grid start,step,n (default 380,10,36)")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    g = sub.add_parser("gen-synthetic", help="render a synthetic two-camera dataset")
    g.add_argument("--out", required=True, help="output dataset directory")
    g.add_argument("--n-train", type=int, default=120)
    g.add_argument("--n-val", type=int, default=20)
    g.add_argument("--n-test", type=int, default=30)
    g.add_argument("--noise-sigma", type=float, default=0.005)
    g.add_argument("--divergence", type=float, default=1.0, help="source/target sensitivity divergence")
    g.set_defaults(func=cmd_gen_synthetic)

    t = sub.add_parser("train", help="fit NPM parameters")
    t.add_argument("--data", required=True)
    t.add_argument("--config", help="TOML or JSON TrainConfig; flags override it")
    t.add_argument("--mode", choices=MODES + (UNPAIRED_TWO_STAGE,),
                   help="'unpaired' fits the source camera, then the target with reflectances fixed")
    t.add_argument("--init", nargs="*", help="calibration files: parameter JSON and/or camera profiles")
    t.add_argument("--out", required=True, help="output parameter JSON")
    t.add_argument("--history", help="loss history CSV (default <out>_history.csv)")
    t.add_argument("--epochs", type=int, default=None)
    t.add_argument("--learning-rate", type=float, default=None)
    t.add_argument("--illumination-kind", choices=KINDS, default=None)
    t.add_argument("--train-split", default="train")
    t.add_argument("--val-split", default="val", help="empty string disables validation")
    t.set_defaults(func=cmd_train)

    e = sub.add_parser("evaluate", help="dE00 of trained parameters on paired scenes")
    e.add_argument("--data", required=True)
    e.add_argument("--params", required=True)
    e.add_argument("--target-profile", help="target camera profile JSON (default: from dataset)")
    e.add_argument("--split", default="test")
    e.add_argument("--report", help="write the report JSON here")
    e.add_argument("--illumination-kind", choices=KINDS, default=SPECTROMETER)
    e.add_argument("--baseline", action="store_true", help="also report the global 3x3 baseline")
    e.set_defaults(func=cmd_evaluate)

    x = sub.add_parser("transform", help="map a source-camera PFM image to the target camera")
    x.add_argument("--image", required=True)
    x.add_argument("--params", required=True)
    x.add_argument("--illumination", required=True, help="illumination measurement JSON")
    x.add_argument("--out", required=True)
    x.set_defaults(func=cmd_transform)

    s = sub.add_parser("simulate", help="simulate a checker capture under an illumination")
    s.add_argument("--params", required=True)
    s.add_argument("--camera", choices=(SOURCE, TARGET), required=True)
    s.add_argument("--illumination", required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_simulate)

    c = sub.add_parser("plot-chromaticity", help="CSV of scene illuminant xy chromaticities")
    c.add_argument("--data", required=True)
    c.add_argument("--split", default="all")
    c.add_argument("--out", required=True)
    c.set_defaults(func=cmd_plot_chromaticity)
    return p


def main(argv=None) -> int:
    level = os.environ.get("RAWBRIDGE_LOG", "WARNING").upper()
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("rawbridge").setLevel(getattr(logging, level, logging.WARNING))
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (UserError, ValueError, OSError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001
        log.debug("internal error", exc_info=True)
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
