"""Benchmark NPM variants and the global 3x3 baseline on an exported dataset.

The dataset directory uses the rawbridge layout (``scenes/*.json`` plus
``profiles/*.json``), with source and target cameras named in ``dataset.json``
or on the command line. Patch extraction from the original raw images is left
to the exporter. Not part of the test suite.

    python3 scripts/benchmark_dataset.py DATA_DIR [--kinds spectrometer_spd rgb_image_stats]
"""

import argparse
import json
import sys

from rawbridge.benchmark import UNPAIRED, calibration_init, run_baseline, run_npm
from rawbridge.data import load_dataset, select_split
from rawbridge.illumination import KINDS, RGB_IMAGE_STATS, SPECTROMETER
from rawbridge.pipeline import PAIRED
from rawbridge.spectral import DEFAULT_GRID


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("data")
    p.add_argument("--source-camera")
    p.add_argument("--target-camera")
    p.add_argument("--kinds", nargs="+", default=[RGB_IMAGE_STATS, SPECTROMETER], choices=KINDS)
    p.add_argument("--unpaired", action="store_true", help="also train the two-stage unpaired variant")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epochs", type=int, default=100)
    p.add_argument("--json", help="write the results table here")
    args = p.parse_args(argv)

    dataset = load_dataset(args.data)
    if args.source_camera or args.target_camera:
        dataset = dataset.with_cameras(args.source_camera or dataset.source_camera,
                                       args.target_camera or dataset.target_camera)
    splits = {name: select_split(dataset, name, seed=args.seed) for name in ("train", "val", "test")}

    runs = [run_baseline(splits)]
    for kind in args.kinds:
        init = calibration_init(DEFAULT_GRID, kind, args.seed)
        runs.append(run_npm(splits, kind, PAIRED, args.seed, init, max_epochs=args.epochs))
        if args.unpaired:
            runs.append(run_npm(splits, kind, UNPAIRED, args.seed, init, max_epochs=args.epochs))

    rows = [{"variant": r.label, "mean_delta_e": r.delta_e, "runtime_s": r.runtime_s} for r in runs]
    for row in rows:
        print(f"{row['variant']:<40} {row['mean_delta_e']:7.3f}  ({row['runtime_s']:.0f} s)")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as f:
            json.dump({"format_version": 1, "results": rows}, f, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
