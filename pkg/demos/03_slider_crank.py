"""Inverted slider-crank: sweep one revolution and plot the rates.

The crank pin rides a circle about the origin while the rod slides
through a pivot at ``PIVOT``. All rates come from closed-form formulas,
so the loop-closure residuals printed at the end are pure roundoff.
"""

import math
from pathlib import Path

from sympgeo import CrankConfig, Vec2, crank_sweep, crank_state, loop_residuals
from sympgeo.svgplot import SvgPlot

LENGTH = 1.0
PIVOT = Vec2(3.0, 0.0)
PHI_DOT = 1.0
STEPS = 361

cfg = CrankConfig(LENGTH, PIVOT, PHI_DOT)
entries = crank_sweep(cfg, 0.0, 2.0 * math.pi, STEPS)

print(f"{'phi':>8s} {'s':>10s} {'psi':>10s} {'s_dot':>10s} {'psi_dot':>10s}")
for e in entries[:: STEPS // 8]:
    st = e.state
    print(f"{e.phi:8.4f} {st.s:10.6f} {st.psi:10.6f} "
          f"{st.s_dot:10.6f} {st.psi_dot:10.6f}")

s_values = [e.state.s for e in entries]
print(f"\nslider length ranges over [{min(s_values):.6f}, {max(s_values):.6f}]")
print("(centers 3 apart, crank 1 long: expect [2, 4])")

worst = max(max(loop_residuals(cfg, e.state)) for e in entries)
print(f"worst closure residual across the sweep: {worst:.3e}")

# curves over one revolution
curves = SvgPlot("inverted slider-crank, one revolution")
phis = [e.phi for e in entries]
curves.polyline(list(zip(phis, s_values)), label="s")
curves.polyline([(e.phi, e.state.s_dot) for e in entries], label="s_dot")
curves.polyline([(e.phi, e.state.psi_dot) for e in entries], label="psi_dot")
curves.polyline([(e.phi, e.psi_unwrapped) for e in entries],
                label="psi (unwrapped)")
out = Path(__file__).with_name("crank_curves.svg")
curves.write(str(out))
print("wrote", out)

# a few mechanism snapshots: crank circle, pivot, rod segments
figure = SvgPlot("mechanism snapshots")
ring = [(LENGTH * math.cos(t), LENGTH * math.sin(t))
        for t in [2.0 * math.pi * k / 120 for k in range(121)]]
figure.polyline(ring, color="#555555", label="crank circle")
figure.marker(PIVOT.x, PIVOT.y, label="pivot")
for k in range(8):
    st = crank_state(cfg, 2.0 * math.pi * k / 8)
    pin = cfg.crank_vector(st.phi)
    figure.segment(pin.x, pin.y, PIVOT.x, PIVOT.y, color="#1f77b4")
    figure.marker(pin.x, pin.y, color="#1f77b4")
out2 = Path(__file__).with_name("crank_mechanism.svg")
figure.write(str(out2))
print("wrote", out2)
