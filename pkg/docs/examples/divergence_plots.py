"""
Two rays along the same multicurve with non-proportional weights diverge.
Shifting one of them by the witness offset shows the lower bound on the
Thurston distance growing in both directions.
"""
import matplotlib.pyplot as plt
import numpy as np

from stretch_lab.cylinder import CylinderSpec
from stretch_lab.stretch import RaySpec, asymmetry_bound, classify, ratio_bound


def ray(widths, ray_id):
    cylinders = [
        CylinderSpec(w, [[1.0], [1.0]], core_id="c%i" % ii)
        for ii, w in enumerate(widths)
    ]
    return RaySpec(cylinders, ray_id=ray_id)


g = ray([1.0, 1.0], "g")
h = ray([1.0, 2.0], "h")
report = classify(g, h)
print(report)
h_u = h.shifted(report.witness_u)

ts = np.linspace(0, 5, 51)
plt.subplot(2, 1, 1)
plt.plot(ts, [ratio_bound(g, h, t) for t in ts], label="d(g, h)")
plt.plot(ts, [ratio_bound(h, g, t) for t in ts], label="d(h, g)")
plt.plot(ts, [ratio_bound(g, h_u, t) for t in ts], "--", label="d(g, h_u)")
plt.plot(ts, [ratio_bound(h_u, g, t) for t in ts], "--", label="d(h_u, g)")
plt.ylabel("distance lower bound")
plt.title(
    "Divergence of %s, witness u = %.4f"
    % (report.classification.value, report.witness_u)
)
plt.legend(loc=2)

plt.subplot(2, 1, 2)
for c in (0.25, 0.5, 1.0):
    backward = [asymmetry_bound(g, t, c)[1] for t in ts]
    plt.plot(ts, backward, label="c = %g" % c)
plt.xlabel("t")
plt.ylabel("backward distance")
plt.legend(loc=2)

plt.tight_layout()
plt.show()
