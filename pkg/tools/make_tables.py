"""Regenerate ``src/rawbridge/_tables.py`` from colour-science datasets.

Only needed when refreshing the embedded constants; the package itself never
imports colour-science.

    pip install colour-science
    python tools/make_tables.py > src/rawbridge/_tables.py
"""

import colour
import numpy as np
from colour.colorimetry.datasets.illuminants import (
    SDS_BASIS_FUNCTIONS_CIE_ILLUMINANT_D_SERIES,
)


def fmt_rows(arr, per_line=6):
    out = []
    for row in np.atleast_2d(arr):
        vals = [f"{v:.6g}" for v in row]
        lines = [", ".join(vals[i:i + per_line]) for i in range(0, len(vals), per_line)]
        out.append("    [\n        " + ",\n        ".join(lines) + ",\n    ],")
    return "\n".join(out)


def main():
    cmfs = colour.MSDS_CMFS["CIE 1931 2 Degree Standard Observer"]
    cmf_wl = np.arange(360, 831, 5)
    cmf = np.array([cmfs[w] for w in cmf_wl]).T

    d_wl = np.arange(300, 831, 10)
    basis = np.array([
        [SDS_BASIS_FUNCTIONS_CIE_ILLUMINANT_D_SERIES[k][w] for w in d_wl]
        for k in ("S0", "S1", "S2")
    ])

    checker = colour.SDS_COLOURCHECKERS["BabelColor Average"]
    names = list(checker)
    cc_wl = np.arange(380, 731, 10)
    refl = np.array([[checker[n][w] for w in cc_wl] for n in names])

    print('"""Embedded colorimetric constants. Generated by tools/make_tables.py; do not edit.')
    print()
    print("Sources:")
    print("  CMF_*        CIE 1931 2-degree standard observer (CIE 15), sampled every 5 nm.")
    print("  DAYLIGHT_*   CIE daylight basis functions S0, S1, S2 (CIE 15), every 10 nm.")
    print("  MACBETH_*    BabelColor average ColorChecker reflectances, 380-730 nm every 10 nm.")
    print('"""')
    print()
    print("import numpy as np")
    print()
    print(f"CMF_START_NM = {cmf_wl[0]}.0")
    print("CMF_STEP_NM = 5.0")
    print("CMF_XYZ = np.array([")
    print(fmt_rows(cmf, 8))
    print("])")
    print()
    print(f"DAYLIGHT_START_NM = {d_wl[0]}.0")
    print("DAYLIGHT_STEP_NM = 10.0")
    print("DAYLIGHT_S012 = np.array([")
    print(fmt_rows(basis, 8))
    print("])")
    print()
    print("MACBETH_START_NM = 380.0")
    print("MACBETH_STEP_NM = 10.0")
    print("MACBETH_NAMES = (")
    for n in names:
        print(f"    {n!r},")
    print(")")
    print("MACBETH_REFLECTANCE = np.array([")
    print(fmt_rows(refl, 9))
    print("])")


if __name__ == "__main__":
    main()
