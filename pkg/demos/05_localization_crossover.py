"""From Bloch oscillations to dynamical localization.

At light mass the dispersion is nearly linear in p and <p^2>(t) oscillates
with the Bloch period for the spinful and spinless relativistic models, while
the quadratic-dispersion rotor localizes immediately. At heavy mass the p^2
term dominates, all three models localize, and the oscillation is gone.
"""

import numpy as np
from scipy.signal import find_peaks

import kicked_dirac as kd

for M, label in ((0.01, "light mass"), (10.0, "heavy mass")):
    out = "demos/out/spread_M%s" % str(M).replace(".", "p")
    config = kd.resolve_config({
        "scenario": "spread_comparison",
        "params": {"M": M},
        "n_kicks": 2000 if M > 1 else 300,
        "output_dir": out,
    })
    print("%s (M = %g): evolving three models ..." % (label, M))
    result = kd.run_scenario(config)
    for name in ("moments_dirac_spinor.csv", "moments_spinless_relativistic.csv", "moments_qkr.csv"):
        data = np.loadtxt(result.output_dir / name, delimiter=",", skiprows=1)
        p2 = data[:, 2]
        rng = p2.max() - p2.min()
        peaks, _ = find_peaks(p2, prominence=0.25 * rng)
        spacing = np.diff(peaks)
        model = name[len("moments_"):-len(".csv")]
        print("  %-22s  <p^2> final %9.1f, max %9.1f, prominent peaks %s"
              % (model, p2[-1], p2.max(),
                 peaks.tolist() if len(peaks) <= 6 else "%d peaks, spacings ~%d" % (len(peaks), int(np.median(spacing)))))
    print("  run directory:", result.output_dir)
    print()

print("render with: kicked-dirac-plots render --figure fig6 "
      "--in demos/out --out demos/out/fig6.png")
print("(fig6 scans demos/out for spread_comparison run directories)")
