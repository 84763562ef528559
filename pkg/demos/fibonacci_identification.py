"""Recover the Fibonacci recurrence from five samples and predict onward.

A scalar output of a hidden 2-dimensional linear system obeys a 2-term
recurrence whose coefficients are the negated characteristic coefficients
of the hidden matrix. Five samples (one more than the 2n = 4 budget, for
show) pin them down exactly.
"""

import numpy as np

from linident import (
    SystemSpec, TimeSeries, assess_stability, char_poly, identify, predict,
    verify_conjugacy,
)

series = TimeSeries([1, 1, 2, 3, 5])
print("observed series:", series.values)

report = identify(series, n=2)
model = report.model
print("recurrence coefficients (a0, a1):", model.coeffs)
print("equation residual:", report.residual)
print("companion matrix:\n", model.companion)

future = predict(model, seed=[5, 8], steps=5)
print("predicted continuation:", future.values)

# the hidden system that actually generated the data
hidden = SystemSpec("discrete", [[0, 1], [1, 1]], [1, 0])
print("hidden char poly coeffs:", char_poly(hidden.a).coeffs)
conj = verify_conjugacy(model, hidden)
print(f"conjugate with hidden system: {conj.conjugate} "
      f"(coeff error {conj.coeff_error:.1e})")
print("stability verdict:", assess_stability(model),
      "(golden ratio root > 1)")
