"""Affine drives and unknown model order.

A constant forcing term b shifts the output recurrence by a constant
offset, identified here alongside the coefficients. When the hidden
dimension is unknown, nested Hankel ranks expose the smallest order that
explains the data.
"""

import numpy as np

from linident import (
    SystemSpec, TimeSeries, affine_offset, estimate_order, identify_affine,
    predict, simulate_discrete,
)

# x <- 2x + 1 observed directly: y = 0, 1, 3, 7, 15, ...
sys = SystemSpec("discrete", [[2.0]], [1.0], b=[1.0])
series = simulate_discrete(sys, [0.0], 6)
print("series:", series.values)

report = identify_affine(series, n=1)
print("coefficient:", report.model.coeffs, "offset:", report.model.offset)
print("closed-form offset:", affine_offset(sys.a, sys.b, sys.c))
print("continuation:", predict(report.model, [31.0], 3).values)

# order estimation from Hankel ranks
fib = TimeSeries([1, 1, 2, 3, 5, 8, 13, 21, 34])
print("\nestimated order of the Fibonacci series:", estimate_order(fib, 4))
geo = TimeSeries(0.5 ** np.arange(9))
print("estimated order of a geometric series:", estimate_order(geo, 4))
