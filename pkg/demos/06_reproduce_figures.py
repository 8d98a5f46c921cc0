"""Produce the full set of reference-figure inputs at paper scale, then render.

Runs every scenario with its reference parameters into demos/out/figures/,
and, when the kicked-dirac-plots package is installed, renders all six
figures. Takes a couple of minutes; density recording dominates the output
size.
"""

import shutil
import subprocess
import sys
from pathlib import Path

import kicked_dirac as kd

BASE = Path("demos/out/figures")


def run(tag, overrides):
    out = BASE / tag
    config = kd.resolve_config({**overrides, "output_dir": str(out)})
    print("running %-24s -> %s" % (config.scenario.value, out))
    kd.run_scenario(config)
    return out


# fig1: three density runs at increasing mass
for M in (0.0, 0.05, 0.1):
    run("fig1/M%s" % str(M).replace(".", "p"),
        {"scenario": "density_evolution", "params": {"M": M}, "n_kicks": 250})

# fig2: packet-center trajectories with the analytic overlay
run("fig2", {"scenario": "packet_center", "n_kicks": 250})

# fig3: band occupations over one Bloch period
run("fig3", {"scenario": "band_occupation"})

# fig4: splitting with predicted branch trajectories
run("fig4", {"scenario": "split_overlay"})

# fig5: tunneling sweep
run("fig5", {"scenario": "lz_sweep", "sweep": {"K_values": [1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0],
                                               "M_values": [0.05, 0.1, 0.2],
                                               "max_workers": 4}})

# fig6: spread comparison at light and heavy mass
for M, kicks in ((0.01, 300), (10.0, 2000)):
    run("fig6/M%s" % str(M).replace(".", "p"),
        {"scenario": "spread_comparison", "params": {"M": M}, "n_kicks": kicks})

renderer = shutil.which("kicked-dirac-plots")
if renderer is None:
    print()
    print("kicked-dirac-plots not installed; install it from frontend/ and run e.g.")
    print("  kicked-dirac-plots render --figure fig1 --in %s/fig1 --out %s/fig1.png" % (BASE, BASE))
    sys.exit(0)

inputs = {"fig1": BASE / "fig1", "fig2": BASE / "fig2", "fig3": BASE / "fig3",
          "fig4": BASE / "fig4", "fig5": BASE / "fig5", "fig6": BASE / "fig6"}
for tag, indir in inputs.items():
    outfile = BASE / ("%s.png" % tag)
    print("rendering", outfile)
    subprocess.run([renderer, "render", "--figure", tag, "--in", str(indir),
                    "--out", str(outfile)], check=True)
print("done:", ", ".join("%s.png" % t for t in inputs))
