"""
Plots the log of the core length bracket of a few cylinders against the
decay law 2 sqrt(K) exp(-e^t w / 2), and the ratio of the two.
"""
import matplotlib.pyplot as plt
import numpy as np

from stretch_lab.cylinder import CylinderSpec, asymptote, asymptotic_length, bracket

cylinders = (
    ("unit", CylinderSpec(2.0, [[1.0], [1.0]])),
    ("mixed", CylinderSpec(2.0, [[0.5, 1.0], [1.0], [0.3], [0.6, 1.0]])),
    ("thin", CylinderSpec(0.75, [[1.0, 0.8], [0.4, 1.0, 0.2]])),
)
ts = np.linspace(-1, 4, 101)

plt.subplot(2, 1, 1)
for label, cyl in cylinders:
    brackets = [bracket(cyl, t) for t in ts]
    lower = np.array([b.log_lower for b in brackets])
    upper = np.array([b.log_upper for b in brackets])
    plt.fill_between(ts, lower, upper, alpha=0.3)
    plt.plot(ts, lower, label=label)
plt.ylabel("log length")
plt.title("Core length bracket along a stretch ray")
plt.legend(loc=3)

plt.subplot(2, 1, 2)
for label, cyl in cylinders:
    a = asymptote(cyl)
    ratio = [
        np.exp(bracket(cyl, t).log_lower - asymptotic_length(a, t).logmag) for t in ts
    ]
    plt.plot(ts, ratio, label="%s, K=%i" % (label, a.K))
plt.axhline(1.0, color="k", linestyle="--")
plt.xlabel("t")
plt.ylabel("h(t) / asymptote")
plt.legend(loc=4)

plt.tight_layout()
plt.show()
