"""What pursuit does to pure noise, and why a mean shift fixes it.

On a zero-mean standard normal sample the full-support window scores
|mean| * sqrt(T), which is almost always beaten by the single largest
spike, so the greedy expansion picks off spikes one by one. Shift the same
sample so its values share a sign and the first atom becomes the full
support, recovering the mean in one term.
"""

import math

import numpy as np

from steppursuit import PursuitConfig, run_preset, run_pursuit

T = 500
out = run_preset("normal-std", T=T, seed=8)
a = out.values

singleton = float(np.max(np.abs(a)))
full = abs(float(np.sum(a))) / math.sqrt(T)
print(f"best singleton score:    {singleton:.4f}")
print(f"full-support score:      {full:.4f}")

expansion = run_pursuit(a, PursuitConfig(max_iterations=5))
print("\nfirst atoms on the raw noise:")
for term in expansion.terms:
    print(f"  start={term.atom.start:3d} length={term.atom.length:3d} coef={term.coefficient:+.3f}")

shifted = run_pursuit(a, PursuitConfig(max_iterations=5, pre_shift=10.0))
first = shifted.terms[0]
print("\nfirst atom after shifting by +10:")
print(f"  start={first.atom.start} length={first.atom.length}")
print(f"  implied level (shift removed): {first.coefficient / math.sqrt(first.atom.length) - 10.0:+.4f}")
print(f"  sample mean:                   {float(np.mean(a)):+.4f}")
