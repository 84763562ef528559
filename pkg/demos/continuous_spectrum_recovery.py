"""Recover continuous-time eigenvalues from sampled outputs.

Sampling a continuous flow at step h turns it into a discrete system with
matrix exp(h*A). Identifying the discrete recurrence and taking principal
logarithms of its companion roots recovers the spectrum of A, as long as
no imaginary part reaches pi/h (aliasing).
"""

import numpy as np

from linident import (
    SystemSpec, identify, recover_continuous_spectrum, sample_continuous,
)

# a rotation: xdot = [[0,1],[-1,0]] x has eigenvalues +-i
rot = SystemSpec("continuous", [[0, 1], [-1, 0]], [1, 0], step=0.3)
series = sample_continuous(rot, x0=[1, 0], length=4)
print("sampled cosine:", series.values)

model = identify(series, n=2)
spectrum = recover_continuous_spectrum(model.model)
print("recovered eigenvalues:", spectrum.values)
print("aliasing risk:", spectrum.aliasing_risk)

# a random stable-ish 3x3 system, sampled fast
rng = np.random.default_rng(0)
a = rng.uniform(-3, 3, (3, 3))
sys = SystemSpec("continuous", a, rng.uniform(-1, 1, 3), step=0.05)
series = sample_continuous(sys, rng.uniform(-1, 1, 3), 6)
model = identify(series, n=3)
spectrum = recover_continuous_spectrum(model.model)
print("\nhidden eigenvalues:   ", np.sort_complex(np.linalg.eigvals(a)))
print("recovered eigenvalues:", spectrum.values)
